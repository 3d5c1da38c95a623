//! Weight-vector initial forms and ideals, Groebner cones, fan enumeration
//! and Newton polytopes.
//!
//! Initial data follows the minimum convention: the initial form of `f`
//! with respect to a weight `w` collects the terms minimizing `w . alpha`.
//! The Groebner cone of `w` is the closure of the set of weights sharing
//! the initial ideal; for a homogeneous ideal those closures tile the space
//! and the complete fan is enumerated by crossing facets from a generic
//! starting weight.

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use num_traits::{One, Signed, Zero};

use crate::exact_arith::Rational;
use crate::geometry::{lp_feasible_point, Halfspace, Polyhedron, Rel};
use crate::poly_engine::{
    buchberger_reduced, Exponent, PolyError, Polynomial, TermOrder, WeightVector,
};

/// Errors of the fan layer.
#[derive(Debug, Clone, PartialEq)]
pub enum FanError {
    Poly(PolyError),
    /// Fan enumeration and exact hulls are desk-scale: at most 4 variables.
    DimensionTooLarge,
    /// Fan enumeration requires a homogeneous ideal.
    NotHomogeneous,
    /// Internal facet-crossing failure (should not happen on valid input).
    Internal(String),
}

impl From<PolyError> for FanError {
    fn from(e: PolyError) -> Self {
        FanError::Poly(e)
    }
}

impl core::fmt::Display for FanError {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        match self {
            FanError::Poly(e) => write!(f, "{e}"),
            FanError::DimensionTooLarge => write!(f, "too many variables (desk scale is n <= 4)"),
            FanError::NotHomogeneous => write!(f, "fan enumeration requires a homogeneous ideal"),
            FanError::Internal(msg) => write!(f, "internal fan error: {msg}"),
        }
    }
}

impl core::error::Error for FanError {}

/// A rational polyhedral cone in H-representation with its dimension
/// computed at construction.
#[derive(Debug, Clone, PartialEq)]
pub struct Cone {
    poly: Polyhedron,
    dim: i64,
}

impl Cone {
    /// Builds a cone from homogeneous constraints.
    pub fn from_halfspaces(nvars: usize, halfspaces: Vec<Halfspace>) -> Cone {
        let poly = Polyhedron::new(nvars, halfspaces).irredundant();
        assert!(poly.is_cone(), "cone constraints must have zero offset");
        let dim = poly.dim();
        Cone { poly, dim }
    }

    pub fn everything(nvars: usize) -> Cone {
        Cone {
            poly: Polyhedron::everything(nvars),
            dim: nvars as i64,
        }
    }

    pub fn nvars(&self) -> usize {
        self.poly.nvars()
    }

    pub fn dim(&self) -> i64 {
        self.dim
    }

    pub fn halfspaces(&self) -> &[Halfspace] {
        self.poly.halfspaces()
    }

    pub fn as_polyhedron(&self) -> &Polyhedron {
        &self.poly
    }

    pub fn contains(&self, v: &[Rational]) -> bool {
        self.poly.contains(v)
    }

    pub fn set_eq(&self, other: &Cone) -> bool {
        self.poly.set_eq(&other.poly)
    }

    /// Membership with the face classification: `Interior` means every
    /// inequality is strict, `Face` lists the indices of tight constraints.
    pub fn classify(&self, v: &[Rational]) -> ConeLocation {
        let mut tight = Vec::new();
        for (i, h) in self.poly.halfspaces().iter().enumerate() {
            let val = h.eval(v);
            match h.rel {
                Rel::Eq => {
                    if !val.is_zero() {
                        return ConeLocation::Outside;
                    }
                    tight.push(i);
                }
                Rel::Ge => {
                    if val.is_negative() {
                        return ConeLocation::Outside;
                    }
                    if val.is_zero() {
                        tight.push(i);
                    }
                }
            }
        }
        if tight.is_empty() {
            ConeLocation::Interior
        } else {
            ConeLocation::Face(tight)
        }
    }
}

/// Result of a cone membership query.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ConeLocation {
    Interior,
    Face(Vec<usize>),
    Outside,
}

/// A maximal cone of a Groebner fan together with its reduced basis and the
/// generators of the initial ideal.
#[derive(Debug, Clone)]
pub struct FanCone {
    pub cone: Cone,
    pub reduced_basis: Vec<Polynomial<Rational>>,
    pub initial_ideal: Vec<Polynomial<Rational>>,
}

/// A fan given by its maximal cones and the adjacency (shared facet) pairs.
#[derive(Debug, Clone)]
pub struct Fan {
    pub cones: Vec<FanCone>,
    pub adjacency: Vec<(usize, usize)>,
}

impl Fan {
    /// Desk-scale fan check: maximal cones pairwise intersect in a common
    /// face of each.
    pub fn is_valid(&self) -> bool {
        for i in 0..self.cones.len() {
            for j in (i + 1)..self.cones.len() {
                let a = self.cones[i].cone.as_polyhedron();
                let b = self.cones[j].cone.as_polyhedron();
                let inter = a.intersect(b);
                if !is_face_of(a, &inter) || !is_face_of(b, &inter) {
                    return false;
                }
            }
        }
        true
    }
}

/// Is `f` (given as an intersection containing it) a face of `c`? The face
/// candidate is `c` with all constraints identically tight on `f` turned
/// into equalities.
fn is_face_of(c: &Polyhedron, f: &Polyhedron) -> bool {
    if f.is_empty() {
        return true;
    }
    let mut hs: Vec<Halfspace> = Vec::new();
    for h in c.halfspaces() {
        let tight_on_f = match crate::geometry::lp_maximize(&h.normal, f.halfspaces(), c.nvars()) {
            crate::geometry::LpOutcome::Unbounded => false,
            crate::geometry::LpOutcome::Infeasible => true,
            crate::geometry::LpOutcome::Optimal { value, .. } => value == -h.offset.clone(),
        };
        if h.rel == Rel::Eq || tight_on_f {
            hs.push(Halfspace::eq(h.normal.clone(), h.offset.clone()));
        } else {
            hs.push(h.clone());
        }
    }
    Polyhedron::new(c.nvars(), hs).set_eq(f)
}

fn weight_value(w: &[Rational], e: &Exponent) -> Rational {
    let mut acc = Rational::zero();
    for (wi, &ei) in w.iter().zip(e) {
        if ei != 0 {
            acc += wi * Rational::from_integer(ei.into());
        }
    }
    acc
}

/// Initial form of `f` with respect to `w`: the terms attaining
/// `min { w . alpha }` over the support.
pub fn initial_form_weight(
    f: &Polynomial<Rational>,
    w: &WeightVector,
) -> Result<Polynomial<Rational>, PolyError> {
    if f.is_zero() {
        return Err(PolyError::ZeroPolynomial);
    }
    if w.len() != f.nvars() {
        return Err(PolyError::ArityMismatch);
    }
    let mut min: Option<Rational> = None;
    for e in f.support() {
        let v = weight_value(w, e);
        min = Some(match min {
            None => v,
            Some(m) => m.min(v),
        });
    }
    let m = min.expect("nonzero polynomial");
    Ok(Polynomial::from_terms(
        f.nvars(),
        f.mode(),
        f.terms()
            .filter(|(e, _)| weight_value(w, e) == m)
            .map(|(e, c)| (e.clone(), c.clone())),
    ))
}

/// Generators of the initial ideal `in_w(I)`: the `w`-initial forms of the
/// reduced Groebner basis under the `w`-refined order.
///
/// Requires a homogeneous ideal or a componentwise nonpositive `w`.
pub fn initial_ideal_weight(
    gens: &[Polynomial<Rational>],
    w: &WeightVector,
    tiebreak: &TermOrder,
) -> Result<Vec<Polynomial<Rational>>, PolyError> {
    let ord = TermOrder::weight_refined(w.clone(), tiebreak.clone());
    let gb = buchberger_reduced(gens, &ord)?;
    gb.iter().map(|g| initial_form_weight(g, w)).collect()
}

/// The reduced basis used by [`groebner_cone`] and the fan enumeration.
pub fn reduced_basis_for_weight(
    gens: &[Polynomial<Rational>],
    w: &WeightVector,
    tiebreak: &TermOrder,
) -> Result<Vec<Polynomial<Rational>>, PolyError> {
    let ord = TermOrder::weight_refined(w.clone(), tiebreak.clone());
    buchberger_reduced(gens, &ord)
}

fn cone_from_basis(
    basis: &[Polynomial<Rational>],
    w: &WeightVector,
    nvars: usize,
) -> Result<Cone, PolyError> {
    let mut halfspaces: Vec<Halfspace> = Vec::new();
    for g in basis {
        let inw = initial_form_weight(g, w)?;
        let base = inw.support().next().expect("initial form nonzero").clone();
        let base_vec: Vec<Rational> = base
            .iter()
            .map(|&x| Rational::from_integer(x.into()))
            .collect();
        for e in g.support() {
            if *e == base {
                continue;
            }
            let diff: Vec<Rational> = e
                .iter()
                .zip(&base_vec)
                .map(|(&x, b)| Rational::from_integer(x.into()) - b)
                .collect();
            if inw.coeff(e).is_some() {
                halfspaces.push(Halfspace::eq(diff, Rational::zero()));
            } else {
                halfspaces.push(Halfspace::ge(diff, Rational::zero()));
            }
        }
    }
    Ok(Cone::from_halfspaces(nvars, halfspaces))
}

/// Closure of the equivalence class of `w`: all weights giving the same
/// initial forms on the reduced basis.
pub fn groebner_cone(
    gens: &[Polynomial<Rational>],
    w: &WeightVector,
    tiebreak: &TermOrder,
) -> Result<Cone, PolyError> {
    let basis = reduced_basis_for_weight(gens, w, tiebreak)?;
    let nvars = gens
        .iter()
        .find(|g| !g.is_zero())
        .map(|g| g.nvars())
        .unwrap_or(w.len());
    cone_from_basis(&basis, w, nvars)
}

fn all_initials_monomial(
    basis: &[Polynomial<Rational>],
    w: &WeightVector,
) -> Result<bool, PolyError> {
    for g in basis {
        if initial_form_weight(g, w)?.num_terms() != 1 {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Enumerates the complete Groebner fan of a homogeneous ideal in at most
/// four variables by breadth-first facet crossing from a generic weight.
pub fn groebner_fan_enumerate(gens: &[Polynomial<Rational>]) -> Result<Fan, FanError> {
    let nonzero: Vec<Polynomial<Rational>> =
        gens.iter().filter(|g| !g.is_zero()).cloned().collect();
    if nonzero.is_empty() {
        return Err(FanError::Poly(PolyError::ZeroPolynomial));
    }
    let nvars = nonzero[0].nvars();
    if nvars > 4 {
        return Err(FanError::DimensionTooLarge);
    }
    if !nonzero.iter().all(|g| g.is_homogeneous()) {
        return Err(FanError::NotHomogeneous);
    }
    let tiebreak = TermOrder::grevlex(nvars);

    // Generic start: geometric weights (1, K, K^2, ...) with K grown until
    // every initial form of the resulting reduced basis is a monomial.
    let maxdeg = nonzero
        .iter()
        .filter_map(|g| g.max_degree())
        .max()
        .unwrap_or(1);
    let mut k = 2 * maxdeg + 3;
    let (start_w, start_basis) = loop {
        let mut w: WeightVector = Vec::with_capacity(nvars);
        let mut p = Rational::one();
        let kq = Rational::from_integer(k.into());
        for _ in 0..nvars {
            w.push(p.clone());
            p *= &kq;
        }
        let basis = reduced_basis_for_weight(&nonzero, &w, &tiebreak)?;
        if all_initials_monomial(&basis, &w)? {
            break (w, basis);
        }
        k += 1;
        if k > 10_000 {
            return Err(FanError::Internal(
                "no generic starting weight found".into(),
            ));
        }
    };

    let mut cones: Vec<FanCone> = Vec::new();
    let mut adjacency: Vec<(usize, usize)> = Vec::new();
    let mut queue: Vec<usize> = Vec::new();

    let push_cone = |cones: &mut Vec<FanCone>,
                     queue: &mut Vec<usize>,
                     basis: Vec<Polynomial<Rational>>,
                     w: &WeightVector|
     -> Result<usize, FanError> {
        let initial_ideal: Vec<Polynomial<Rational>> = basis
            .iter()
            .map(|g| initial_form_weight(g, w))
            .collect::<Result<_, _>>()?;
        // Equivalence classes are keyed by the initial ideal; the reduced
        // basis alone does not separate cones.
        if let Some(idx) = cones.iter().position(|c| c.initial_ideal == initial_ideal) {
            return Ok(idx);
        }
        let cone = cone_from_basis(&basis, w, nvars)?;
        cones.push(FanCone {
            cone,
            reduced_basis: basis,
            initial_ideal,
        });
        queue.push(cones.len() - 1);
        Ok(cones.len() - 1)
    };

    push_cone(&mut cones, &mut queue, start_basis, &start_w)?;

    while let Some(idx) = queue.pop() {
        let facets: Vec<Halfspace> = cones[idx]
            .cone
            .halfspaces()
            .iter()
            .filter(|h| h.rel == Rel::Ge)
            .cloned()
            .collect();
        for facet in facets {
            // Relative interior point of the facet: facet tight, all other
            // inequalities with unit slack (cones are scale-invariant).
            let mut sys: Vec<Halfspace> =
                vec![Halfspace::eq(facet.normal.clone(), Rational::zero())];
            for h in cones[idx].cone.halfspaces() {
                if h == &facet {
                    continue;
                }
                match h.rel {
                    Rel::Eq => sys.push(h.clone()),
                    Rel::Ge => sys.push(Halfspace::ge(h.normal.clone(), -Rational::one())),
                }
            }
            let Some(q) = lp_feasible_point(&sys, nvars) else {
                // facet is lower-dimensional here (can happen with the
                // shared lineality space); skip
                continue;
            };
            // Cross: w_new = q - eps * facet_normal, eps halved until the
            // neighbor is a maximal cone whose closure contains q.
            let norm_sq: Rational = facet
                .normal
                .iter()
                .map(|x| x * x)
                .fold(Rational::zero(), |a, b| a + b);
            if norm_sq.is_zero() {
                continue;
            }
            // Initial eps: half the minimal positive slack over the other
            // constraints along the crossing direction.
            let mut eps = Rational::one();
            for h in cones[idx].cone.halfspaces() {
                if h == &facet || h.rel == Rel::Eq {
                    continue;
                }
                let along: Rational = h
                    .normal
                    .iter()
                    .zip(&facet.normal)
                    .map(|(a, b)| a * b)
                    .fold(Rational::zero(), |a, b| a + b);
                if along.is_positive() {
                    let slack = h.eval(&q);
                    let bound = slack / along;
                    if bound < eps {
                        eps = bound;
                    }
                }
            }
            eps /= Rational::from_integer(2.into());
            let mut tries = 0;
            let neighbor = loop {
                if tries > 64 {
                    return Err(FanError::Internal(
                        "facet crossing failed to converge".into(),
                    ));
                }
                tries += 1;
                let w_new: WeightVector = q
                    .iter()
                    .zip(&facet.normal)
                    .map(|(qi, ni)| qi - &(ni * &eps))
                    .collect();
                let basis = reduced_basis_for_weight(&nonzero, &w_new, &tiebreak)?;
                if !all_initials_monomial(&basis, &w_new)? {
                    eps /= Rational::from_integer(2.into());
                    continue;
                }
                let prospective = cone_from_basis(&basis, &w_new, nvars)?;
                if !prospective.contains(&q) {
                    // overshot into a non-adjacent cone
                    eps /= Rational::from_integer(2.into());
                    continue;
                }
                break push_cone(&mut cones, &mut queue, basis, &w_new)?;
            };
            if neighbor != idx {
                let pair = (idx.min(neighbor), idx.max(neighbor));
                if !adjacency.contains(&pair) {
                    adjacency.push(pair);
                }
            }
        }
    }

    Ok(Fan { cones, adjacency })
}

/// Vertices of the Newton polytope `conv(supp f)`, by exact convex-position
/// tests (desk scale: at most 4 variables).
pub fn newton_polytope(f: &Polynomial<Rational>) -> Result<Vec<Exponent>, FanError> {
    if f.is_zero() {
        return Err(FanError::Poly(PolyError::ZeroPolynomial));
    }
    if f.nvars() > 4 {
        return Err(FanError::DimensionTooLarge);
    }
    let support: Vec<Exponent> = f.support().cloned().collect();
    let n = f.nvars();
    let mut vertices = Vec::new();
    for (i, p) in support.iter().enumerate() {
        // p is a vertex iff it is not a convex combination of the others:
        // variables lambda_j >= 0, sum lambda = 1, sum lambda q_j = p.
        let others: Vec<&Exponent> = support
            .iter()
            .enumerate()
            .filter(|(j, _)| *j != i)
            .map(|(_, q)| q)
            .collect();
        if others.is_empty() {
            vertices.push(p.clone());
            continue;
        }
        let m = others.len();
        let mut cs: Vec<Halfspace> = Vec::new();
        for j in 0..m {
            let mut normal = vec![Rational::zero(); m];
            normal[j] = Rational::one();
            cs.push(Halfspace::ge(normal, Rational::zero()));
        }
        let ones = vec![Rational::one(); m];
        cs.push(Halfspace::eq(ones, -Rational::one()));
        for coord in 0..n {
            let normal: Vec<Rational> = others
                .iter()
                .map(|q| Rational::from_integer(q[coord].into()))
                .collect();
            cs.push(Halfspace::eq(
                normal,
                -Rational::from_integer(p[coord].into()),
            ));
        }
        if lp_feasible_point(&cs, m).is_none() {
            vertices.push(p.clone());
        }
    }
    vertices.sort();
    Ok(vertices)
}

/// Normal fan of the Newton polytope in the minimum convention: the cone of
/// a vertex `v` collects the weights minimized at `v`.
pub fn normal_fan_of_polytope(
    support: &[Exponent],
    vertices: &[Exponent],
    nvars: usize,
) -> Vec<Cone> {
    vertices
        .iter()
        .map(|v| {
            let halfspaces: Vec<Halfspace> = support
                .iter()
                .filter(|u| *u != v)
                .map(|u| {
                    let normal: Vec<Rational> = u
                        .iter()
                        .zip(v)
                        .map(|(&a, &b)| Rational::from_integer((a - b).into()))
                        .collect();
                    Halfspace::ge(normal, Rational::zero())
                })
                .collect();
            Cone::from_halfspaces(nvars, halfspaces)
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact_arith::{rat_int, Rational};
    use crate::poly_engine::RingMode;

    fn p(nvars: usize, terms: &[(&[i64], i64)]) -> Polynomial<Rational> {
        Polynomial::from_terms(
            nvars,
            RingMode::Poly,
            terms.iter().map(|(e, c)| (e.to_vec(), rat_int(*c))),
        )
    }

    fn w(items: &[i64]) -> WeightVector {
        items.iter().map(|&x| rat_int(x)).collect()
    }

    #[test]
    fn initial_form_examples() {
        // f = x^2 + xy + y^3, w = (1,1) -> x^2 + xy
        let f = p(2, &[(&[2, 0], 1), (&[1, 1], 1), (&[0, 3], 1)]);
        let inw = initial_form_weight(&f, &w(&[1, 1])).unwrap();
        assert_eq!(inw, p(2, &[(&[2, 0], 1), (&[1, 1], 1)]));
        // w = 0 -> f itself
        assert_eq!(initial_form_weight(&f, &w(&[0, 0])).unwrap(), f);
        // f = x + y + 1, w = (1,-1) -> y
        let g = p(2, &[(&[1, 0], 1), (&[0, 1], 1), (&[0, 0], 1)]);
        assert_eq!(
            initial_form_weight(&g, &w(&[1, -1])).unwrap(),
            p(2, &[(&[0, 1], 1)])
        );
    }

    #[test]
    fn initial_ideal_examples() {
        let tb = TermOrder::grevlex(2);
        // I = <x + y> homogeneous
        let i1 = vec![p(2, &[(&[1, 0], 1), (&[0, 1], 1)])];
        // w = (1,2): min convention picks weight-1 term x
        let gens = initial_ideal_weight(&i1, &w(&[1, 2]), &tb).unwrap();
        assert_eq!(gens, vec![p(2, &[(&[1, 0], 1)])]);
        // w = (1,1): tie keeps both terms
        let gens = initial_ideal_weight(&i1, &w(&[1, 1]), &tb).unwrap();
        assert_eq!(gens, vec![p(2, &[(&[1, 0], 1), (&[0, 1], 1)])]);
        // monomial ideal: unchanged for any w
        let m = vec![p(2, &[(&[2, 1], 1)])];
        let gens = initial_ideal_weight(&m, &w(&[-3, 5]), &tb).unwrap();
        assert_eq!(gens, vec![p(2, &[(&[2, 1], 1)])]);
    }

    #[test]
    fn groebner_cone_examples() {
        let tb = TermOrder::grevlex(2);
        let i1 = vec![p(2, &[(&[1, 0], 1), (&[0, 1], 1)])];
        // w = (1,2): cone is {w1 <= w2}
        let c = groebner_cone(&i1, &w(&[1, 2]), &tb).unwrap();
        let expect = Cone::from_halfspaces(
            2,
            vec![Halfspace::ge(
                vec![-rat_int(1), rat_int(1)],
                Rational::from_integer(0.into()),
            )],
        );
        assert!(c.set_eq(&expect));
        assert!(c.contains(&w(&[0, 5])));
        assert!(!c.contains(&w(&[5, 0])));
        // w = (1,1): the tie wall
        let c = groebner_cone(&i1, &w(&[1, 1]), &tb).unwrap();
        assert_eq!(c.dim(), 1);
        assert!(c.contains(&w(&[2, 2])));
        assert!(!c.contains(&w(&[2, 1])));
        // monomial ideal: everything
        let m = vec![p(2, &[(&[2, 1], 1)])];
        let c = groebner_cone(&m, &w(&[1, 7]), &tb).unwrap();
        assert_eq!(c.dim(), 2);
        assert!(c.halfspaces().is_empty());
    }

    #[test]
    fn cone_classification() {
        let c = Cone::from_halfspaces(
            2,
            vec![Halfspace::ge(vec![rat_int(1), rat_int(-1)], rat_int(0))],
        );
        assert_eq!(c.classify(&w(&[1, 0])), ConeLocation::Interior);
        assert_eq!(c.classify(&w(&[1, 1])), ConeLocation::Face(vec![0]));
        assert_eq!(c.classify(&w(&[0, 1])), ConeLocation::Outside);
    }

    #[test]
    fn fan_of_principal_monomial_ideal() {
        let fan = groebner_fan_enumerate(&[p(2, &[(&[2, 1], 3)])]).unwrap();
        assert_eq!(fan.cones.len(), 1);
        assert_eq!(fan.cones[0].cone.dim(), 2);
        assert!(fan.is_valid());
    }

    #[test]
    fn fan_of_binomial_line() {
        // I = <x + y>: two half-planes meeting along the diagonal
        let fan = groebner_fan_enumerate(&[p(2, &[(&[1, 0], 1), (&[0, 1], 1)])]).unwrap();
        assert_eq!(fan.cones.len(), 2);
        assert_eq!(fan.adjacency.len(), 1);
        assert!(fan.is_valid());
        // initial ideals are <x> and <y>
        let initials: Vec<_> = fan.cones.iter().map(|c| c.initial_ideal.clone()).collect();
        assert!(initials.contains(&vec![p(2, &[(&[1, 0], 1)])]));
        assert!(initials.contains(&vec![p(2, &[(&[0, 1], 1)])]));
    }

    #[test]
    fn fan_matches_normal_fan_of_newton_polytope() {
        // f = x^3 + x y^2 + y^3 homogeneous
        let f = p(2, &[(&[3, 0], 1), (&[1, 2], 1), (&[0, 3], 1)]);
        let fan = groebner_fan_enumerate(core::slice::from_ref(&f)).unwrap();
        let verts = newton_polytope(&f).unwrap();
        let support: Vec<Exponent> = f.support().cloned().collect();
        let normal = normal_fan_of_polytope(&support, &verts, 2);
        // every fan cone matches exactly one normal-fan cone
        assert_eq!(fan.cones.len(), normal.len());
        for fc in &fan.cones {
            assert!(
                normal.iter().any(|nc| nc.set_eq(&fc.cone)),
                "missing normal-fan match"
            );
        }
        assert!(fan.is_valid());
    }

    #[test]
    fn newton_polytope_examples() {
        // f = x + y + 1: three vertices
        let f = p(2, &[(&[1, 0], 1), (&[0, 1], 1), (&[0, 0], 1)]);
        let v = newton_polytope(&f).unwrap();
        assert_eq!(v, vec![vec![0, 0], vec![0, 1], vec![1, 0]]);
        // monomial: single vertex
        let m = p(2, &[(&[2, 1], 5)]);
        assert_eq!(newton_polytope(&m).unwrap(), vec![vec![2, 1]]);
        // x^2 + xy + y^2: the middle point is not a vertex
        let g = p(2, &[(&[2, 0], 1), (&[1, 1], 1), (&[0, 2], 1)]);
        assert_eq!(newton_polytope(&g).unwrap(), vec![vec![0, 2], vec![2, 0]]);
    }

    #[test]
    fn sampled_points_land_in_one_maximal_cone_interior() {
        // fan of a homogeneous quadric: every generic sample sits in the
        // interior of exactly one maximal cone
        let f = p(2, &[(&[2, 0], 1), (&[1, 1], 3), (&[0, 2], 1)]);
        let fan = groebner_fan_enumerate(core::slice::from_ref(&f)).unwrap();
        let samples = [
            w(&[1, 5]),
            w(&[5, 1]),
            w(&[-2, 3]),
            w(&[3, -2]),
            w(&[-7, -1]),
            w(&[2, 9]),
        ];
        for s in samples {
            let interiors = fan
                .cones
                .iter()
                .filter(|c| c.cone.classify(&s) == ConeLocation::Interior)
                .count();
            let inside = fan.cones.iter().filter(|c| c.cone.contains(&s)).count();
            assert!(inside >= 1, "sample {s:?} not covered");
            assert!(
                interiors <= 1,
                "sample {s:?} in {interiors} maximal-cone interiors"
            );
        }
        // wall points lie on the boundary of the adjacent cones
        assert!(fan.is_valid());
    }

    #[test]
    fn dimension_guard() {
        let f = Polynomial::<Rational>::from_terms(
            5,
            RingMode::Poly,
            [
                (vec![1, 0, 0, 0, 0], rat_int(1)),
                (vec![0, 1, 0, 0, 0], rat_int(1)),
            ],
        );
        assert_eq!(
            groebner_fan_enumerate(core::slice::from_ref(&f)).unwrap_err(),
            FanError::DimensionTooLarge
        );
        assert_eq!(
            newton_polytope(&f).unwrap_err(),
            FanError::DimensionTooLarge
        );
        // non-homogeneous input is rejected by enumeration
        let g = p(2, &[(&[1, 0], 1), (&[0, 0], 1)]);
        assert_eq!(
            groebner_fan_enumerate(core::slice::from_ref(&g)).unwrap_err(),
            FanError::NotHomogeneous
        );
    }

    #[test]
    fn initial_ideal_locally_constant_on_cone_interior() {
        let tb = TermOrder::grevlex(2);
        let gens = vec![p(2, &[(&[2, 0], 1), (&[1, 1], 2), (&[0, 2], 1)])];
        let w0 = w(&[1, 3]);
        let cone = groebner_cone(&gens, &w0, &tb).unwrap();
        let i0 = initial_ideal_weight(&gens, &w0, &tb).unwrap();
        // sample rational points of the cone: interior points share the
        // initial ideal; on boundary points the initial forms degenerate
        // further, and taking the w0-initial of the boundary initial forms
        // recovers the interior data
        let samples = [w(&[1, 2]), w(&[0, 1]), w(&[2, 7]), w(&[1, 1]), w(&[3, 3])];
        for s in samples {
            if !cone.contains(&s) {
                continue;
            }
            let is = initial_ideal_weight(&gens, &s, &tb).unwrap();
            match cone.classify(&s) {
                ConeLocation::Interior => assert_eq!(is, i0),
                _ => {
                    let redegenerated: Vec<_> = is
                        .iter()
                        .map(|g| initial_form_weight(g, &w0).unwrap())
                        .collect();
                    assert_eq!(redegenerated, i0, "boundary degeneration at {s:?}");
                }
            }
        }
    }
}
