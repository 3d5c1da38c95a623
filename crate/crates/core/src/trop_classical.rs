//! Classical tropical geometry over the Puiseux field.
//!
//! A point of the torus over the Puiseux field tropicalizes to its
//! coordinatewise order of vanishing. The tropical hypersurface of a
//! polynomial with valued coefficients is the locus where the minimum of
//! `ord(c_a) + w . a` is attained at least twice, emitted as a finite union
//! of exact rational polyhedra. Membership of a weight in the tropical
//! variety of an ideal is decided through initial ideals: `w` belongs to the
//! tropical variety exactly when `in_w(I)` contains no monomial, which is
//! tested by saturating with respect to the product of the variables via an
//! auxiliary variable.

use alloc::vec;
use alloc::vec::Vec;

use num_traits::{One, Zero};

use crate::exact_arith::{ArithError, PuiseuxSeries, Rational, SeriesOrd};
use crate::geometry::{Halfspace, Polyhedron};
use crate::grobner_fan::initial_ideal_weight;
use crate::poly_engine::{
    ideal_contains_one, PolyError, Polynomial, RingMode, TermOrder, WeightVector,
};

/// Errors of the tropical layer.
#[derive(Debug, Clone, PartialEq)]
pub enum TropError {
    Arith(ArithError),
    Poly(PolyError),
    /// A torus point coordinate is the exact zero series.
    NotInvertible {
        coordinate: usize,
    },
    /// A curve handed to the fundamental-theorem harness does not lie on
    /// the variety (exact substitution left a nonzero term).
    CurveNotOnVariety {
        curve: usize,
        generator: usize,
    },
    /// Arity mismatch between points, weights and polynomials.
    ArityMismatch,
}

impl From<ArithError> for TropError {
    fn from(e: ArithError) -> Self {
        TropError::Arith(e)
    }
}

impl From<PolyError> for TropError {
    fn from(e: PolyError) -> Self {
        TropError::Poly(e)
    }
}

impl core::fmt::Display for TropError {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        match self {
            TropError::Arith(e) => write!(f, "{e}"),
            TropError::Poly(e) => write!(f, "{e}"),
            TropError::NotInvertible { coordinate } => {
                write!(f, "torus point coordinate {coordinate} is zero")
            }
            TropError::CurveNotOnVariety { curve, generator } => write!(
                f,
                "curve {curve} does not satisfy generator {generator} (nonzero after substitution)"
            ),
            TropError::ArityMismatch => write!(f, "arity mismatch"),
        }
    }
}

impl core::error::Error for TropError {}

/// A point of the torus over the Puiseux field: every coordinate has finite
/// order of vanishing.
pub type TorusPoint = Vec<PuiseuxSeries>;

/// A finite union of rational polyhedra in weight space, with exact
/// membership.
#[derive(Debug, Clone, PartialEq)]
pub struct TropicalSet {
    nvars: usize,
    pieces: Vec<Polyhedron>,
}

impl TropicalSet {
    pub fn empty(nvars: usize) -> Self {
        TropicalSet {
            nvars,
            pieces: Vec::new(),
        }
    }

    pub fn from_pieces(nvars: usize, pieces: Vec<Polyhedron>) -> Self {
        // canonicalize and deduplicate
        let mut canon: Vec<Polyhedron> = Vec::new();
        for p in pieces {
            let c = p.canonical();
            if !canon.contains(&c) {
                canon.push(c);
            }
        }
        TropicalSet {
            nvars,
            pieces: canon,
        }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn pieces(&self) -> &[Polyhedron] {
        &self.pieces
    }

    pub fn is_empty_set(&self) -> bool {
        self.pieces.iter().all(|p| p.is_empty())
    }

    pub fn contains(&self, w: &[Rational]) -> bool {
        self.pieces.iter().any(|p| p.contains(w))
    }

    /// Union (concatenation of pieces, deduplicated).
    pub fn union(&self, other: &TropicalSet) -> TropicalSet {
        let mut pieces = self.pieces.clone();
        pieces.extend(other.pieces.iter().cloned());
        TropicalSet::from_pieces(self.nvars, pieces)
    }
}

/// Coordinatewise order of vanishing of a torus point.
pub fn trop_point(point: &TorusPoint) -> Result<Vec<Rational>, TropError> {
    let mut out = Vec::with_capacity(point.len());
    for (i, c) in point.iter().enumerate() {
        match c.ord()? {
            SeriesOrd::Finite(q) => out.push(q),
            SeriesOrd::Infinite => return Err(TropError::NotInvertible { coordinate: i }),
        }
    }
    Ok(out)
}

/// The tropical hypersurface of `f`: all weights where the minimum of
/// `ord(c_a) + w . a` over the support is attained at least twice, as a
/// finite union of polyhedra (one candidate piece per support pair).
pub fn trop_hypersurface(f: &Polynomial<PuiseuxSeries>) -> Result<TropicalSet, TropError> {
    if f.is_zero() {
        return Err(TropError::Poly(PolyError::ZeroPolynomial));
    }
    let n = f.nvars();
    let support: Vec<(Vec<i64>, Rational)> = {
        let mut s = Vec::new();
        for (e, c) in f.terms() {
            let ord = c.finite_ord()?;
            s.push((e.clone(), ord));
        }
        s
    };
    if support.len() < 2 {
        return Ok(TropicalSet::empty(n));
    }
    let mut pieces = Vec::new();
    for i in 0..support.len() {
        for j in (i + 1)..support.len() {
            let (ea, oa) = &support[i];
            let (eb, ob) = &support[j];
            // equality: (ea - eb) . w + (oa - ob) = 0
            let mut hs = vec![Halfspace::eq(
                ea.iter()
                    .zip(eb)
                    .map(|(&x, &y)| Rational::from_integer((x - y).into()))
                    .collect(),
                oa - ob,
            )];
            // all other support values at least the shared minimum
            for (k, (ec, oc)) in support.iter().enumerate() {
                if k == i || k == j {
                    continue;
                }
                hs.push(Halfspace::ge(
                    ec.iter()
                        .zip(ea)
                        .map(|(&x, &y)| Rational::from_integer((x - y).into()))
                        .collect(),
                    oc - oa,
                ));
            }
            let piece = Polyhedron::new(n, hs);
            if !piece.is_empty() {
                pieces.push(piece);
            }
        }
    }
    Ok(TropicalSet::from_pieces(n, pieces))
}

/// Initial form of a polynomial with Puiseux coefficients: the residue
/// polynomial over the rationals supported on the argmin of
/// `ord(c_a) + w . a`, with residues `t^(-ord) c_a` evaluated at `t = 0`
/// (the leading coefficient).
pub fn initial_form_valued(
    f: &Polynomial<PuiseuxSeries>,
    w: &WeightVector,
) -> Result<Polynomial<Rational>, TropError> {
    if f.is_zero() {
        return Err(TropError::Poly(PolyError::ZeroPolynomial));
    }
    if w.len() != f.nvars() {
        return Err(TropError::ArityMismatch);
    }
    let mut vals: Vec<(Vec<i64>, Rational, Rational)> = Vec::new(); // (exp, value, residue)
    for (e, c) in f.terms() {
        let ord = c.finite_ord()?;
        let (_, lead) = c.leading().expect("finite ord implies a term");
        let mut value = ord.clone();
        for (wi, &ei) in w.iter().zip(e) {
            if ei != 0 {
                value += wi * Rational::from_integer(ei.into());
            }
        }
        vals.push((e.clone(), value, lead.clone()));
    }
    let m = vals
        .iter()
        .map(|(_, v, _)| v.clone())
        .min()
        .expect("nonzero polynomial");
    Ok(Polynomial::from_terms(
        f.nvars(),
        f.mode(),
        vals.into_iter()
            .filter(|(_, v, _)| *v == m)
            .map(|(e, _, r)| (e, r)),
    ))
}

/// Lifts a constant-coefficient polynomial to Puiseux coefficients.
pub fn lift_constants(f: &Polynomial<Rational>) -> Polynomial<PuiseuxSeries> {
    f.map_coeffs(|c| PuiseuxSeries::constant(c.clone()))
}

/// Generators of `in_w(I)` for a constant-coefficient Laurent ideal, as an
/// ideal of the polynomial ring (Laurent saturation is the caller's
/// concern). The ideal is homogenized first so that arbitrary weights are
/// sound; the homogenizing variable carries weight zero and is then set to
/// one.
fn initial_ideal_affine(
    gens: &[Polynomial<Rational>],
    w: &WeightVector,
) -> Result<Vec<Polynomial<Rational>>, TropError> {
    let nonzero: Vec<Polynomial<Rational>> = gens
        .iter()
        .filter(|g| !g.is_zero())
        .map(|g| g.clear_denominators())
        .collect();
    if nonzero.is_empty() {
        return Err(TropError::Poly(PolyError::ZeroPolynomial));
    }
    let n = nonzero[0].nvars();
    if w.len() != n {
        return Err(TropError::ArityMismatch);
    }
    // Degree-graded basis, then homogenize each element.
    let graded = TermOrder::top_degree(n);
    let gb = crate::poly_engine::buchberger_reduced(&nonzero, &graded)?;
    let homogenized: Vec<Polynomial<Rational>> = gb.iter().map(|g| g.homogenize()).collect();
    let mut w_ext = w.clone();
    w_ext.push(Rational::zero());
    let tiebreak = TermOrder::grevlex(n + 1);
    let initial_h = initial_ideal_weight(&homogenized, &w_ext, &tiebreak)?;
    Ok(initial_h.iter().map(|g| g.dehomogenize()).collect())
}

/// True when `in_w(I)` contains no monomial, for a constant-coefficient
/// Laurent ideal: the initial ideal is saturated with respect to the
/// product of variables through the auxiliary generator `u x_1 ... x_n - 1`
/// and tested against the unit ideal.
pub fn trop_membership(gens: &[Polynomial<Rational>], w: &WeightVector) -> Result<bool, TropError> {
    let initial = initial_ideal_affine(gens, w)?;
    let n = w.len();
    // J = in_w(I) + <u * x1...xn - 1> in n+1 variables
    let mut sat_gens: Vec<Polynomial<Rational>> =
        initial.iter().map(|g| g.extend_vars(1)).collect();
    let mut prod_exp = vec![1i64; n];
    prod_exp.push(1);
    let aux = Polynomial::from_terms(
        n + 1,
        RingMode::Poly,
        [
            (prod_exp, Rational::one()),
            (vec![0; n + 1], -Rational::one()),
        ],
    );
    sat_gens.push(aux);
    Ok(!ideal_contains_one(&sat_gens)?)
}

/// Evaluates a (Laurent) polynomial with rational coefficients at a Puiseux
/// point. Negative powers invert the coordinate modulo `t^precision`.
pub fn eval_poly_at_point(
    f: &Polynomial<Rational>,
    point: &TorusPoint,
    precision: &Rational,
) -> Result<PuiseuxSeries, TropError> {
    if f.nvars() != point.len() {
        return Err(TropError::ArityMismatch);
    }
    // Precompute inverses where needed.
    let mut inverses: Vec<Option<PuiseuxSeries>> = vec![None; point.len()];
    for e in f.support() {
        for (i, &x) in e.iter().enumerate() {
            if x < 0 && inverses[i].is_none() {
                inverses[i] = Some(point[i].inverse(precision)?);
            }
        }
    }
    let mut acc = PuiseuxSeries::zero();
    for (e, c) in f.terms() {
        let mut term = PuiseuxSeries::constant(c.clone());
        for (i, &x) in e.iter().enumerate() {
            if x > 0 {
                term = &term * &point[i].pow(x as u32);
            } else if x < 0 {
                let inv = inverses[i].as_ref().expect("inverse precomputed");
                term = &term * &inv.pow((-x) as u32);
            }
        }
        acc = &acc + &term;
    }
    Ok(acc)
}

/// Outcome of the fundamental-theorem cross-check for one curve.
#[derive(Debug, Clone, PartialEq)]
pub struct CurveCheck {
    pub trop: Vec<Rational>,
    pub membership: bool,
}

/// Outcome for one grid point.
#[derive(Debug, Clone, PartialEq)]
pub struct GridCheck {
    pub weight: Vec<Rational>,
    pub membership: bool,
    pub on_all_hypersurfaces: bool,
}

/// Report of [`fundamental_check`]: the harness passes when every curve
/// tropicalization is a member and every membership-positive grid point
/// lies on the tropical hypersurface of every generator.
#[derive(Debug, Clone, PartialEq)]
pub struct FundamentalReport {
    pub curves: Vec<CurveCheck>,
    pub grid: Vec<GridCheck>,
    pub pass: bool,
}

/// Cross-checks the two constructions of the tropical variety on a
/// constant-coefficient ideal: curve tropicalizations must pass the
/// initial-ideal membership test, and membership-positive grid points must
/// lie on every generator's tropical hypersurface.
///
/// Every curve is first verified to lie on the variety by exact
/// substitution (up to its truncation); a leftover term fails with
/// [`TropError::CurveNotOnVariety`].
pub fn fundamental_check(
    gens: &[Polynomial<Rational>],
    curves: &[TorusPoint],
    grid: &[WeightVector],
    precision: &Rational,
) -> Result<FundamentalReport, TropError> {
    let hypersurfaces: Vec<TropicalSet> = gens
        .iter()
        .filter(|g| !g.is_zero())
        .map(|g| trop_hypersurface(&lift_constants(g)))
        .collect::<Result<_, _>>()?;

    let mut curve_results = Vec::with_capacity(curves.len());
    for (ci, curve) in curves.iter().enumerate() {
        for (gi, g) in gens.iter().enumerate() {
            let value = eval_poly_at_point(g, curve, precision)?;
            if !value.has_no_terms() {
                return Err(TropError::CurveNotOnVariety {
                    curve: ci,
                    generator: gi,
                });
            }
        }
        let tw = trop_point(curve)?;
        let membership = trop_membership(gens, &tw)?;
        curve_results.push(CurveCheck {
            trop: tw,
            membership,
        });
    }

    let mut grid_results = Vec::with_capacity(grid.len());
    for w in grid {
        let membership = trop_membership(gens, w)?;
        let on_all = hypersurfaces.iter().all(|h| h.contains(w));
        grid_results.push(GridCheck {
            weight: w.clone(),
            membership,
            on_all_hypersurfaces: on_all,
        });
    }

    let pass = curve_results.iter().all(|c| c.membership)
        && grid_results
            .iter()
            .all(|g| !g.membership || g.on_all_hypersurfaces);
    Ok(FundamentalReport {
        curves: curve_results,
        grid: grid_results,
        pass,
    })
}
