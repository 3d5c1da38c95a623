//! Spherical tropical sets on the worked homogeneous-space models.
//!
//! On the punctured plane the valuation cone is a line: a rational `v > 0`
//! grades by lowest total degree, `v < 0` by highest, and membership of `v`
//! in the tropical set of a chart asks whether the corresponding extreme
//! homogeneous component is a unit of that chart's coordinate ring (a
//! scalar times a power of the inverted variable). On `GL(2)` the two
//! hypersurfaces of the open Borel chart have known tropical sets: a ray
//! for `c - 1` and the angle between two rays for `d - 1`. Arbitrary
//! subvarieties are probed from below by tropicalizing parametrized Puiseux
//! curves.

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use num_traits::{One, Signed, Zero};

use crate::exact_arith::{PuiseuxSeries, Rational, Truncation};
use crate::geometry::{Halfspace, Polyhedron};
use crate::grobner_fan::initial_ideal_weight;
use crate::poly_engine::{buchberger_reduced, PolyError, Polynomial, TermOrder};
use crate::snf_series::SeriesMatrix;
use crate::spherical_core::{model_tropicalize, ModelPoint, SphError, SphericalModel};

/// Errors of the spherical tropical layer.
#[derive(Debug, Clone, PartialEq)]
pub enum SphTropError {
    Poly(PolyError),
    Sph(SphError),
    /// The punctured-plane hypersurface requires a nonconstant polynomial.
    ConstantPolynomial,
    /// Only the two worked Borel-chart hypersurfaces are supported on GL(2).
    UnsupportedHypersurface,
    /// A substitution left the model (for instance a singular matrix).
    InvalidPoint(String),
}

impl From<PolyError> for SphTropError {
    fn from(e: PolyError) -> Self {
        SphTropError::Poly(e)
    }
}

impl From<SphError> for SphTropError {
    fn from(e: SphError) -> Self {
        SphTropError::Sph(e)
    }
}

impl core::fmt::Display for SphTropError {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        match self {
            SphTropError::Poly(e) => write!(f, "{e}"),
            SphTropError::Sph(e) => write!(f, "{e}"),
            SphTropError::ConstantPolynomial => {
                write!(f, "hypersurface requires a nonconstant polynomial")
            }
            SphTropError::UnsupportedHypersurface => write!(
                f,
                "only the hypersurfaces c - 1 and d - 1 are computed exactly on GL(2)"
            ),
            SphTropError::InvalidPoint(msg) => write!(f, "substitution left the model: {msg}"),
        }
    }
}

impl core::error::Error for SphTropError {}

/// The two Borel charts of the punctured plane: `B` inverts `y`, the
/// opposite chart inverts `x`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Sl2Chart {
    B,
    BMinus,
}

impl Sl2Chart {
    /// Index of the inverted variable in `k[x, y]` (x is 0, y is 1).
    fn inverted_var(self) -> usize {
        match self {
            Sl2Chart::B => 1,
            Sl2Chart::BMinus => 0,
        }
    }
}

/// A canonical subset of the rational line arising as the support of a fan:
/// empty, the origin, a closed ray, or everything.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RaySet1D {
    neg: bool,
    zero: bool,
    pos: bool,
}

impl RaySet1D {
    pub const EMPTY: RaySet1D = RaySet1D {
        neg: false,
        zero: false,
        pos: false,
    };
    pub const ORIGIN: RaySet1D = RaySet1D {
        neg: false,
        zero: true,
        pos: false,
    };
    pub const NONPOS: RaySet1D = RaySet1D {
        neg: true,
        zero: true,
        pos: false,
    };
    pub const NONNEG: RaySet1D = RaySet1D {
        neg: false,
        zero: true,
        pos: true,
    };
    pub const ALL: RaySet1D = RaySet1D {
        neg: true,
        zero: true,
        pos: true,
    };

    /// Builds the closed fan support containing the selected open cells.
    pub fn from_cells(neg: bool, zero: bool, pos: bool) -> RaySet1D {
        RaySet1D {
            neg,
            zero: zero || neg || pos,
            pos,
        }
    }

    pub fn union(self, other: RaySet1D) -> RaySet1D {
        RaySet1D::from_cells(
            self.neg || other.neg,
            self.zero || other.zero,
            self.pos || other.pos,
        )
    }

    pub fn contains(&self, v: &Rational) -> bool {
        if v.is_zero() {
            self.zero
        } else if v.is_positive() {
            self.pos
        } else {
            self.neg
        }
    }
}

impl core::fmt::Display for RaySet1D {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        let name = match (self.neg, self.zero, self.pos) {
            (false, false, false) => "empty",
            (false, true, false) => "{0}",
            (true, true, false) => "Q<=0",
            (false, true, true) => "Q>=0",
            (true, true, true) => "Q",
            _ => unreachable!("non-canonical ray set"),
        };
        write!(f, "{name}")
    }
}

/// A finite union of rational cones inside the `GL(2)` valuation cone
/// `{(x, y) : x >= y}`.
#[derive(Debug, Clone, PartialEq)]
pub struct Cone2Set {
    pieces: Vec<Polyhedron>,
}

impl Cone2Set {
    pub fn from_pieces(pieces: Vec<Polyhedron>) -> Cone2Set {
        let cone = gl2_valuation_polyhedron();
        for p in &pieces {
            assert!(
                cone.contains_set(p),
                "piece leaves the GL(2) valuation cone"
            );
        }
        Cone2Set { pieces }
    }

    pub fn pieces(&self) -> &[Polyhedron] {
        &self.pieces
    }

    pub fn contains(&self, v: &[Rational]) -> bool {
        self.pieces.iter().any(|p| p.contains(v))
    }

    pub fn set_eq(&self, other: &Cone2Set) -> bool {
        // unions here are tiny; compare piecewise in both directions
        self.pieces.iter().all(|p| {
            other.pieces.iter().any(|q| q.set_eq(p))
                || other.pieces.iter().any(|q| q.contains_set(p))
        }) && other.pieces.iter().all(|p| {
            self.pieces.iter().any(|q| q.set_eq(p)) || self.pieces.iter().any(|q| q.contains_set(p))
        })
    }
}

fn gl2_valuation_polyhedron() -> Polyhedron {
    Polyhedron::new(
        2,
        vec![Halfspace::ge(
            vec![Rational::one(), -Rational::one()],
            Rational::zero(),
        )],
    )
}

/// The ray `R1 = {(x, 0) : x >= 0}`.
pub fn gl2_ray_r1() -> Polyhedron {
    Polyhedron::new(
        2,
        vec![
            Halfspace::eq(vec![Rational::zero(), Rational::one()], Rational::zero()),
            Halfspace::ge(vec![Rational::one(), Rational::zero()], Rational::zero()),
        ],
    )
}

/// The ray `R2 = {(x, x) : x <= 0}`.
pub fn gl2_ray_r2() -> Polyhedron {
    Polyhedron::new(
        2,
        vec![
            Halfspace::eq(vec![Rational::one(), -Rational::one()], Rational::zero()),
            Halfspace::ge(vec![-Rational::one(), Rational::zero()], Rational::zero()),
        ],
    )
}

/// The closed angle between `R1` and `R2`: `{(x, y) : y <= 0, x >= y}`.
pub fn gl2_angle_r1_r2() -> Polyhedron {
    Polyhedron::new(
        2,
        vec![
            Halfspace::ge(vec![Rational::zero(), -Rational::one()], Rational::zero()),
            Halfspace::ge(vec![Rational::one(), -Rational::one()], Rational::zero()),
        ],
    )
}

fn is_power_of_var(h: &Polynomial<Rational>, var: usize) -> bool {
    h.num_terms() == 1
        && h.support()
            .next()
            .map(|e| e.iter().enumerate().all(|(i, &x)| i == var || x == 0))
            .unwrap_or(false)
}

/// Initial of `h` at a rational valuation `v` on the punctured plane, and
/// whether that initial is a unit of the chart ring.
///
/// For `v > 0` the initial is the lowest total-degree component, for
/// `v < 0` the highest, and at `v = 0` it is `h` itself. A unit is a scalar
/// multiple of a power of the chart's inverted variable.
pub fn sl2_initial_and_unit(
    h: &Polynomial<Rational>,
    chart: Sl2Chart,
    v: &Rational,
) -> Result<(Polynomial<Rational>, bool), SphTropError> {
    if h.is_zero() {
        return Err(SphTropError::Poly(PolyError::ZeroPolynomial));
    }
    let initial = if v.is_positive() {
        h.homogeneous_component(h.min_degree().expect("nonzero"))
    } else if v.is_negative() {
        h.homogeneous_component(h.max_degree().expect("nonzero"))
    } else {
        h.clone()
    };
    let unit = is_power_of_var(&initial, chart.inverted_var());
    Ok((initial, unit))
}

/// Tropical set of the plane curve `f = 0` on the punctured plane, per
/// chart and combined.
#[derive(Debug, Clone, PartialEq)]
pub struct Sl2TropResult {
    pub chart_b: RaySet1D,
    pub chart_b_minus: RaySet1D,
    pub combined: RaySet1D,
    /// Degree interval `[m, d]` of the extreme homogeneous components.
    pub degree_span: (i64, i64),
}

/// Evaluates the chart conditions on the extreme homogeneous components
/// `f_m` and `f_d`: a ray belongs to a chart's tropical set exactly when
/// the corresponding component is not a unit there, and the origin belongs
/// unless `f` itself is a unit of the chart ring.
pub fn sl2_trop_hypersurface(f: &Polynomial<Rational>) -> Result<Sl2TropResult, SphTropError> {
    if f.is_zero() || f.max_degree() == Some(0) {
        return Err(SphTropError::ConstantPolynomial);
    }
    let m = f.min_degree().expect("nonzero");
    let d = f.max_degree().expect("nonzero");
    let f_m = f.homogeneous_component(m);
    let f_d = f.homogeneous_component(d);
    let chart_set = |chart: Sl2Chart| {
        let var = chart.inverted_var();
        let pos = !is_power_of_var(&f_m, var);
        let neg = !is_power_of_var(&f_d, var);
        let zero = !is_power_of_var(f, var);
        RaySet1D::from_cells(neg, zero, pos)
    };
    let chart_b = chart_set(Sl2Chart::B);
    let chart_b_minus = chart_set(Sl2Chart::BMinus);
    Ok(Sl2TropResult {
        chart_b,
        chart_b_minus,
        combined: chart_b.union(chart_b_minus),
        degree_span: (m, d),
    })
}

/// A spherical Groebner basis on the punctured plane together with the
/// spherical initial ideal.
#[derive(Debug, Clone, PartialEq)]
pub struct Sl2SphericalGb {
    /// Classical reduced basis under a degree order exposing top forms.
    pub basis: Vec<Polynomial<Rational>>,
    /// Generators of the spherical initial ideal: the top total-degree
    /// components of the basis elements.
    pub initial_ideal: Vec<Polynomial<Rational>>,
}

/// Computes a spherical Groebner basis for an ideal of `k[x, y]`: a
/// classical reduced basis under the top-degree order, whose top
/// total-degree forms generate the spherical initial ideal.
pub fn sl2_spherical_gb(gens: &[Polynomial<Rational>]) -> Result<Sl2SphericalGb, SphTropError> {
    let ord = TermOrder::top_degree(2);
    let basis = buchberger_reduced(gens, &ord)?;
    let initial_ideal = basis
        .iter()
        .map(|g| g.homogeneous_component(g.max_degree().expect("nonzero basis element")))
        .collect();
    Ok(Sl2SphericalGb {
        basis,
        initial_ideal,
    })
}

/// The three cells of the rank-one fan with a reduced generating set of the
/// initial ideal on each: lowest forms for `v > 0`, the ideal itself at the
/// origin, top forms for `v < 0`.
#[derive(Debug, Clone, PartialEq)]
pub struct Sl2Fan {
    pub positive: Vec<Polynomial<Rational>>,
    pub zero: Vec<Polynomial<Rational>>,
    pub negative: Vec<Polynomial<Rational>>,
}

/// Ideal generated by the extreme degree forms of every element: computed by
/// homogenizing a degree-graded basis, taking the weight initial ideal
/// (weight `+-1` on the plane variables, `0` on the homogenizer) and
/// dehomogenizing.
fn degree_forms_ideal(
    gens: &[Polynomial<Rational>],
    bottom: bool,
) -> Result<Vec<Polynomial<Rational>>, SphTropError> {
    let nonzero: Vec<Polynomial<Rational>> =
        gens.iter().filter(|g| !g.is_zero()).cloned().collect();
    if nonzero.is_empty() {
        return Err(SphTropError::Poly(PolyError::ZeroPolynomial));
    }
    let n = nonzero[0].nvars();
    let graded = TermOrder::top_degree(n);
    let gb = buchberger_reduced(&nonzero, &graded)?;
    let homogenized: Vec<Polynomial<Rational>> = gb.iter().map(|g| g.homogenize()).collect();
    let sign = if bottom {
        Rational::one()
    } else {
        -Rational::one()
    };
    let mut w = vec![sign; n];
    w.push(Rational::zero());
    let initial_h = initial_ideal_weight(&homogenized, &w, &TermOrder::grevlex(n + 1))?;
    let dehom: Vec<Polynomial<Rational>> = initial_h.iter().map(|g| g.dehomogenize()).collect();
    // the dehomogenized generators are degree forms, hence homogeneous;
    // reduce once more for a canonical presentation
    Ok(buchberger_reduced(&dehom, &TermOrder::grevlex(n))?)
}

/// Partitions the rank-one valuation line into its three cells and reports
/// a reduced basis of the initial ideal on each.
pub fn sl2_spherical_fan(gens: &[Polynomial<Rational>]) -> Result<Sl2Fan, SphTropError> {
    let positive = degree_forms_ideal(gens, true)?;
    let negative = degree_forms_ideal(gens, false)?;
    let zero = buchberger_reduced(gens, &TermOrder::top_degree(2))?;
    Ok(Sl2Fan {
        positive,
        zero,
        negative,
    })
}

/// Degree interval `[m, d]` of a polynomial graded by total degree; the two
/// endpoints are the values of the distinguished valuations (`v1(f) = m`
/// and `v2(f) = -d`).
pub fn delta_polytope(f: &Polynomial<Rational>) -> Result<(i64, i64), SphTropError> {
    if f.is_zero() {
        return Err(SphTropError::Poly(PolyError::ZeroPolynomial));
    }
    Ok((
        f.min_degree().expect("nonzero"),
        f.max_degree().expect("nonzero"),
    ))
}

/// The two worked hypersurfaces of the open Borel chart of `GL(2)`, in the
/// coordinates `(a, b, c, d)` of a matrix.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Gl2Hypersurface {
    /// `c - 1 = 0`
    CMinusOne,
    /// `d - 1 = 0`
    DMinusOne,
}

/// Recognizes `c - 1` or `d - 1` (up to a nonzero scalar) in the four
/// matrix-entry variables; anything else is unsupported.
pub fn gl2_recognize_hypersurface(
    h: &Polynomial<Rational>,
) -> Result<Gl2Hypersurface, SphTropError> {
    if h.nvars() != 4 || h.num_terms() != 2 {
        return Err(SphTropError::UnsupportedHypersurface);
    }
    let constant = h.coeff(&vec![0, 0, 0, 0]).cloned();
    let Some(k) = constant else {
        return Err(SphTropError::UnsupportedHypersurface);
    };
    for (var, which) in [
        (2usize, Gl2Hypersurface::CMinusOne),
        (3, Gl2Hypersurface::DMinusOne),
    ] {
        let mut e = vec![0i64; 4];
        e[var] = 1;
        if let Some(c) = h.coeff(&e) {
            if *c == -k.clone() {
                return Ok(which);
            }
        }
    }
    Err(SphTropError::UnsupportedHypersurface)
}

/// Exact spherical tropical set of a worked Borel-chart hypersurface: the
/// ray `R1` for `c - 1`, the closed angle between `R1` and `R2` for
/// `d - 1`.
pub fn gl2_borel_trop(h: &Polynomial<Rational>) -> Result<Cone2Set, SphTropError> {
    match gl2_recognize_hypersurface(h)? {
        Gl2Hypersurface::CMinusOne => Ok(Cone2Set::from_pieces(vec![gl2_ray_r1()])),
        Gl2Hypersurface::DMinusOne => Ok(Cone2Set::from_pieces(vec![gl2_angle_r1_r2()])),
    }
}

/// A parametrized family on a model: entries are exact Laurent series in
/// one parameter `u`.
#[derive(Debug, Clone, PartialEq)]
pub enum ModelFamily {
    Torus(Vec<PuiseuxSeries>),
    Sl2(PuiseuxSeries, PuiseuxSeries),
    Gln(Vec<Vec<PuiseuxSeries>>),
}

/// A monomial substitution `u = coeff * t^exponent`.
#[derive(Debug, Clone, PartialEq)]
pub struct ParamSub {
    pub coeff: Rational,
    pub exponent: Rational,
}

impl ParamSub {
    pub fn new(coeff: Rational, exponent: Rational) -> Self {
        ParamSub { coeff, exponent }
    }
}

/// The default substitution battery: `u = c t^a` for `a` in `-3..=3` and
/// `c` in `{1, 2}`; monomial curves at desk scale hit every ray of a
/// fan-shaped image.
pub fn default_substitutions() -> Vec<ParamSub> {
    let mut subs = Vec::new();
    for a in -3..=3i64 {
        for c in [1i64, 2] {
            subs.push(ParamSub::new(
                crate::exact_arith::rat_int(c),
                crate::exact_arith::rat_int(a),
            ));
        }
    }
    subs
}

/// Substitutes `u = c t^a` into an exact integer-exponent series in `u`.
fn substitute_parameter(s: &PuiseuxSeries, sub: &ParamSub) -> Result<PuiseuxSeries, SphTropError> {
    if !matches!(s.truncation(), Truncation::Exact) {
        return Err(SphTropError::InvalidPoint(
            "family entries must be exact series in the parameter".into(),
        ));
    }
    let mut acc = PuiseuxSeries::zero();
    for (e, coeff) in s.terms() {
        if !e.denom().is_one() {
            return Err(SphTropError::InvalidPoint(
                "family entries must have integer parameter exponents".into(),
            ));
        }
        let k: i64 = num_traits::ToPrimitive::to_i64(e.numer())
            .ok_or_else(|| SphTropError::InvalidPoint("parameter exponent out of range".into()))?;
        let c_pow = rational_int_pow(&sub.coeff, k);
        let term = PuiseuxSeries::monomial(coeff * &c_pow, &sub.exponent * &e);
        acc = &acc + &term;
    }
    Ok(acc)
}

fn rational_int_pow(c: &Rational, k: i64) -> Rational {
    let mut acc = Rational::one();
    let base = if k >= 0 { c.clone() } else { c.clone().recip() };
    for _ in 0..k.unsigned_abs() {
        acc *= &base;
    }
    acc
}

/// Builds the model point of a family at one substitution.
pub fn family_at(family: &ModelFamily, sub: &ParamSub) -> Result<ModelPoint, SphTropError> {
    Ok(match family {
        ModelFamily::Torus(coords) => ModelPoint::Torus(
            coords
                .iter()
                .map(|s| substitute_parameter(s, sub))
                .collect::<Result<_, _>>()?,
        ),
        ModelFamily::Sl2(c1, c2) => ModelPoint::Sl2(
            substitute_parameter(c1, sub)?,
            substitute_parameter(c2, sub)?,
        ),
        ModelFamily::Gln(rows) => {
            let entries: Vec<Vec<PuiseuxSeries>> = rows
                .iter()
                .map(|row| {
                    row.iter()
                        .map(|s| substitute_parameter(s, sub))
                        .collect::<Result<_, _>>()
                })
                .collect::<Result<_, _>>()?;
            ModelPoint::Gln(
                SeriesMatrix::new(entries)
                    .map_err(|_| SphTropError::InvalidPoint("ragged matrix".into()))?,
            )
        }
    })
}

/// Tropicalizes a parametrized family at every substitution, returning the
/// de-duplicated cone points: an inner approximation of the tropical set of
/// the parametrized subvariety.
pub fn curve_sampling_trop(
    model: &SphericalModel,
    family: &ModelFamily,
    substitutions: &[ParamSub],
) -> Result<Vec<Vec<Rational>>, SphTropError> {
    let mut points: Vec<Vec<Rational>> = Vec::new();
    for sub in substitutions {
        let point = family_at(family, sub)?;
        let v = match model_tropicalize(model, &point) {
            Ok(v) => v,
            Err(SphError::Snf(crate::snf_series::SnfError::SingularMatrix)) => {
                return Err(SphTropError::InvalidPoint(
                    "substitution gives a singular matrix (infinite determinant order)".into(),
                ))
            }
            Err(e) => return Err(e.into()),
        };
        if !points.contains(&v) {
            points.push(v);
        }
    }
    points.sort();
    Ok(points)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact_arith::rat_int;
    use crate::poly_engine::RingMode;

    fn p(terms: &[(&[i64], i64)]) -> Polynomial<Rational> {
        Polynomial::from_terms(
            2,
            RingMode::Poly,
            terms.iter().map(|(e, c)| (e.to_vec(), rat_int(*c))),
        )
    }

    fn u_pow(k: i64) -> PuiseuxSeries {
        PuiseuxSeries::monomial(Rational::one(), rat_int(k))
    }

    #[test]
    fn initial_and_unit_detection() {
        // h = y: a unit in chart B at any v
        let y = p(&[(&[0, 1], 1)]);
        let (init, unit) = sl2_initial_and_unit(&y, Sl2Chart::B, &rat_int(3)).unwrap();
        assert_eq!(init, y);
        assert!(unit);
        // h = 1 + x at v = 1: lowest component is the constant, a unit
        let h = p(&[(&[0, 0], 1), (&[1, 0], 1)]);
        let (init, unit) = sl2_initial_and_unit(&h, Sl2Chart::B, &rat_int(1)).unwrap();
        assert_eq!(init, p(&[(&[0, 0], 1)]));
        assert!(unit);
        // h = x + y at v = 1: a two-term form, not a unit
        let h = p(&[(&[1, 0], 1), (&[0, 1], 1)]);
        let (init, unit) = sl2_initial_and_unit(&h, Sl2Chart::B, &rat_int(1)).unwrap();
        assert_eq!(init, h);
        assert!(!unit);
        // y is not a unit in the opposite chart
        let (_, unit) = sl2_initial_and_unit(&y, Sl2Chart::BMinus, &rat_int(1)).unwrap();
        assert!(!unit);
    }

    #[test]
    fn hypersurface_golden_cases() {
        // f = x + y - 1: m = 0, tropical set is the nonpositive ray
        let f = p(&[(&[1, 0], 1), (&[0, 1], 1), (&[0, 0], -1)]);
        let r = sl2_trop_hypersurface(&f).unwrap();
        assert_eq!(r.combined, RaySet1D::NONPOS);
        assert_eq!(r.degree_span, (0, 1));
        // f = x - y: m = 1 > 0, the whole line
        let f = p(&[(&[1, 0], 1), (&[0, 1], -1)]);
        let r = sl2_trop_hypersurface(&f).unwrap();
        assert_eq!(r.combined, RaySet1D::ALL);
        // f = y: chart B empty, opposite chart everything
        let f = p(&[(&[0, 1], 1)]);
        let r = sl2_trop_hypersurface(&f).unwrap();
        assert_eq!(r.chart_b, RaySet1D::EMPTY);
        assert_eq!(r.chart_b_minus, RaySet1D::ALL);
        assert_eq!(r.combined, RaySet1D::ALL);
        // constants are rejected
        assert_eq!(
            sl2_trop_hypersurface(&p(&[(&[0, 0], 5)])).unwrap_err(),
            SphTropError::ConstantPolynomial
        );
    }

    #[test]
    fn hypersurface_origin_dichotomy() {
        // the combined set is Q when the curve passes through the origin
        // (m > 0) and the nonpositive ray otherwise
        let cases = [
            (p(&[(&[1, 0], 1), (&[0, 1], 1), (&[0, 0], -1)]), false),
            (p(&[(&[1, 0], 1), (&[0, 1], -1)]), true),
            (p(&[(&[2, 0], 1), (&[0, 1], 3)]), true),
            (p(&[(&[1, 1], 1), (&[0, 0], -2)]), false),
            (p(&[(&[0, 2], 1), (&[1, 0], 1), (&[0, 0], 7)]), false),
        ];
        for (f, through_origin) in cases {
            let r = sl2_trop_hypersurface(&f).unwrap();
            let expect = if through_origin {
                RaySet1D::ALL
            } else {
                RaySet1D::NONPOS
            };
            assert_eq!(r.combined, expect, "f = {f}");
            assert_eq!(through_origin, f.min_degree().unwrap() > 0);
        }
    }

    #[test]
    fn chart_union_is_combined() {
        let samples = [
            p(&[(&[1, 0], 1), (&[0, 1], 1), (&[0, 0], -1)]),
            p(&[(&[0, 1], 1)]),
            p(&[(&[1, 0], 1)]),
            p(&[(&[2, 1], 1), (&[0, 2], -1), (&[0, 0], 3)]),
        ];
        for f in samples {
            let r = sl2_trop_hypersurface(&f).unwrap();
            assert_eq!(r.combined, r.chart_b.union(r.chart_b_minus));
        }
    }

    #[test]
    fn unit_detection_drives_membership() {
        // for a principal ideal, v is in the chart set iff the initial of
        // the generator is not a unit of the chart
        let samples = [
            p(&[(&[1, 0], 1), (&[0, 1], 1), (&[0, 0], -1)]),
            p(&[(&[0, 1], 1)]),
            p(&[(&[1, 1], 1), (&[0, 0], -2)]),
            p(&[(&[2, 0], 1), (&[0, 1], 3)]),
        ];
        let vs = [rat_int(1), rat_int(0), rat_int(-1)];
        for f in samples {
            let r = sl2_trop_hypersurface(&f).unwrap();
            for chart in [Sl2Chart::B, Sl2Chart::BMinus] {
                let set = match chart {
                    Sl2Chart::B => r.chart_b,
                    Sl2Chart::BMinus => r.chart_b_minus,
                };
                for v in &vs {
                    let (_, unit) = sl2_initial_and_unit(&f, chart, v).unwrap();
                    assert_eq!(set.contains(v), !unit, "f = {f}, v = {v}");
                }
            }
        }
    }

    #[test]
    fn spherical_gb_examples() {
        // {x} stays {x}
        let g = sl2_spherical_gb(&[p(&[(&[1, 0], 1)])]).unwrap();
        assert_eq!(g.basis, vec![p(&[(&[1, 0], 1)])]);
        assert_eq!(g.initial_ideal, vec![p(&[(&[1, 0], 1)])]);
        // {x + y^2}: the spherical initial ideal is generated by y^2
        let g = sl2_spherical_gb(&[p(&[(&[1, 0], 1), (&[0, 2], 1)])]).unwrap();
        assert_eq!(g.initial_ideal, vec![p(&[(&[0, 2], 1)])]);
        // {x + y, x - y} -> {x, y} with initial ideal <x, y>
        let g = sl2_spherical_gb(&[
            p(&[(&[1, 0], 1), (&[0, 1], 1)]),
            p(&[(&[1, 0], 1), (&[0, 1], -1)]),
        ])
        .unwrap();
        assert_eq!(g.basis.len(), 2);
        assert!(g.initial_ideal.contains(&p(&[(&[1, 0], 1)])));
        assert!(g.initial_ideal.contains(&p(&[(&[0, 1], 1)])));
    }

    #[test]
    fn spherical_fan_cells() {
        // I = <x + y^2>: lowest forms <x>, top forms <y^2>
        let fan = sl2_spherical_fan(&[p(&[(&[1, 0], 1), (&[0, 2], 1)])]).unwrap();
        assert_eq!(fan.positive, vec![p(&[(&[1, 0], 1)])]);
        assert_eq!(fan.negative, vec![p(&[(&[0, 2], 1)])]);
        assert_eq!(fan.zero, vec![p(&[(&[1, 0], 1), (&[0, 2], 1)])]);
        // homogeneous ideal: all three cells share the initial ideal
        let fan = sl2_spherical_fan(&[p(&[(&[2, 0], 1), (&[0, 2], 1)])]).unwrap();
        assert_eq!(fan.positive, fan.negative);
        assert_eq!(fan.positive, fan.zero);
        // unit ideal: unit in every cell
        let fan = sl2_spherical_fan(&[p(&[(&[0, 0], 1)])]).unwrap();
        assert_eq!(fan.positive, vec![Polynomial::one(2, RingMode::Poly)]);
        assert_eq!(fan.zero, vec![Polynomial::one(2, RingMode::Poly)]);
        assert_eq!(fan.negative, vec![Polynomial::one(2, RingMode::Poly)]);
    }

    #[test]
    fn delta_polytope_examples() {
        let f = p(&[(&[1, 0], 1), (&[0, 1], 1), (&[0, 0], -1)]);
        assert_eq!(delta_polytope(&f).unwrap(), (0, 1));
        let m = p(&[(&[2, 1], 4)]);
        assert_eq!(delta_polytope(&m).unwrap(), (3, 3));
        let g = p(&[(&[2, 0], 1), (&[0, 5], 1)]);
        assert_eq!(delta_polytope(&g).unwrap(), (2, 5));
    }

    fn p4(terms: &[(&[i64], i64)]) -> Polynomial<Rational> {
        Polynomial::from_terms(
            4,
            RingMode::Poly,
            terms.iter().map(|(e, c)| (e.to_vec(), rat_int(*c))),
        )
    }

    #[test]
    fn gl2_borel_golden_cases() {
        // c - 1 -> the ray R1
        let c_minus_1 = p4(&[(&[0, 0, 1, 0], 1), (&[0, 0, 0, 0], -1)]);
        let set = gl2_borel_trop(&c_minus_1).unwrap();
        assert!(set.set_eq(&Cone2Set::from_pieces(vec![gl2_ray_r1()])));
        // d - 1 -> the angle between R1 and R2
        let d_minus_1 = p4(&[(&[0, 0, 0, 1], 1), (&[0, 0, 0, 0], -1)]);
        let set = gl2_borel_trop(&d_minus_1).unwrap();
        assert!(set.set_eq(&Cone2Set::from_pieces(vec![gl2_angle_r1_r2()])));
        assert!(set.contains(&[rat_int(3), rat_int(0)]));
        assert!(set.contains(&[rat_int(-1), rat_int(-1)]));
        assert!(set.contains(&[rat_int(2), rat_int(-1)]));
        assert!(!set.contains(&[rat_int(2), rat_int(1)]));
        // a - 1 is outside the worked set
        let a_minus_1 = p4(&[(&[1, 0, 0, 0], 1), (&[0, 0, 0, 0], -1)]);
        assert_eq!(
            gl2_borel_trop(&a_minus_1).unwrap_err(),
            SphTropError::UnsupportedHypersurface
        );
    }

    #[test]
    fn curve_sampling_on_figure_family() {
        // GL(2) family [[u + 1, u], [u, 0]]
        let family = ModelFamily::Gln(vec![
            vec![&u_pow(1) + &PuiseuxSeries::one(), u_pow(1)],
            vec![u_pow(1), PuiseuxSeries::zero()],
        ]);
        let model = SphericalModel::Gln(2);
        // u = t -> (2, 0)
        let pts =
            curve_sampling_trop(&model, &family, &[ParamSub::new(rat_int(1), rat_int(1))]).unwrap();
        assert_eq!(pts, vec![vec![rat_int(2), rat_int(0)]]);
        // u = t^-1 -> (-1, -1)
        let pts = curve_sampling_trop(&model, &family, &[ParamSub::new(rat_int(1), rat_int(-1))])
            .unwrap();
        assert_eq!(pts, vec![vec![rat_int(-1), rat_int(-1)]]);
        // the default battery lands inside the union of the two worked
        // Borel sets
        let pts = curve_sampling_trop(&model, &family, &default_substitutions()).unwrap();
        let r1 = Cone2Set::from_pieces(vec![gl2_ray_r1()]);
        let angle = Cone2Set::from_pieces(vec![gl2_angle_r1_r2()]);
        for v in &pts {
            assert!(
                r1.contains(v) || angle.contains(v),
                "sample {v:?} escaped the worked sets"
            );
        }
    }

    #[test]
    fn curve_sampling_on_sl2_family() {
        // family (u, u^2), u = t^3 -> min(3, 6) = 3
        let family = ModelFamily::Sl2(u_pow(1), u_pow(2));
        let model = SphericalModel::Sl2PuncturedPlane;
        let pts =
            curve_sampling_trop(&model, &family, &[ParamSub::new(rat_int(1), rat_int(3))]).unwrap();
        assert_eq!(pts, vec![vec![rat_int(3)]]);
        // all default substitutions stay inside the exact hypersurface set
        // of f = x^2 - y (the curve is y = x^2, which passes through the
        // origin of the plane? no: (0,0) is excluded; x^2 - y has m = 1)
        let f = p(&[(&[2, 0], 1), (&[0, 1], -1)]);
        let exact = sl2_trop_hypersurface(&f).unwrap().combined;
        let pts = curve_sampling_trop(&model, &family, &default_substitutions()).unwrap();
        for v in &pts {
            assert!(exact.contains(&v[0]));
        }
    }

    #[test]
    fn curve_sampling_z1_family_stays_on_r1() {
        // [[u, 0], [1, 1]] lies on c = 1; nonnegative exponents keep the
        // curve limits inside this chart's divisor
        let family = ModelFamily::Gln(vec![
            vec![u_pow(1), PuiseuxSeries::zero()],
            vec![PuiseuxSeries::one(), PuiseuxSeries::one()],
        ]);
        let model = SphericalModel::Gln(2);
        let subs: Vec<ParamSub> = (0..=3)
            .map(|a| ParamSub::new(rat_int(1), rat_int(a)))
            .collect();
        let pts = curve_sampling_trop(&model, &family, &subs).unwrap();
        let r1 = Cone2Set::from_pieces(vec![gl2_ray_r1()]);
        for v in &pts {
            assert!(r1.contains(v), "point {v:?} not on R1");
        }
        assert!(pts.contains(&vec![rat_int(3), rat_int(0)]));
    }

    #[test]
    fn curve_sampling_z2_family_stays_in_angle() {
        // [[u, 0], [u, 1]] lies on d = 1 with c = u nonzero
        let family = ModelFamily::Gln(vec![
            vec![u_pow(1), PuiseuxSeries::zero()],
            vec![u_pow(1), PuiseuxSeries::one()],
        ]);
        let model = SphericalModel::Gln(2);
        let pts = curve_sampling_trop(&model, &family, &default_substitutions()).unwrap();
        let angle = Cone2Set::from_pieces(vec![gl2_angle_r1_r2()]);
        for v in &pts {
            assert!(angle.contains(v), "point {v:?} left the angle");
        }
        // both the R1 direction and the interior show up
        assert!(pts.contains(&vec![rat_int(2), rat_int(0)]));
        assert!(pts.contains(&vec![rat_int(0), rat_int(-2)]));
    }

    #[test]
    fn singular_substitution_is_rejected() {
        let family = ModelFamily::Gln(vec![vec![u_pow(1), u_pow(1)], vec![u_pow(1), u_pow(1)]]);
        let err = curve_sampling_trop(
            &SphericalModel::Gln(2),
            &family,
            &[ParamSub::new(rat_int(1), rat_int(1))],
        )
        .unwrap_err();
        assert!(matches!(err, SphTropError::InvalidPoint(_)));
    }

    #[test]
    fn truncated_family_entries_are_rejected() {
        let trunc = PuiseuxSeries::one().truncate_to(&rat_int(5));
        let family = ModelFamily::Sl2(trunc, u_pow(1));
        let err = curve_sampling_trop(
            &SphericalModel::Sl2PuncturedPlane,
            &family,
            &[ParamSub::new(rat_int(1), rat_int(1))],
        )
        .unwrap_err();
        assert!(matches!(err, SphTropError::InvalidPoint(_)));
    }

    #[test]
    fn delta_endpoints_equal_valuation_values() {
        // v1(f) = m and v2(f) = -d on a family of samples
        let samples = [
            p(&[(&[1, 0], 1), (&[0, 1], 1), (&[0, 0], -1)]),
            p(&[(&[2, 1], 1), (&[0, 5], 2)]),
            p(&[(&[0, 0], 3), (&[3, 3], 1)]),
        ];
        for f in samples {
            let (m, d) = delta_polytope(&f).unwrap();
            assert_eq!(m, f.min_degree().unwrap());
            assert_eq!(-d, -f.max_degree().unwrap());
        }
    }
}
