//! Homogeneous-space models: valuation cones cut out by spherical roots,
//! tropicalization of Puiseux points on each model, and the generic
//! translate estimator for invariant valuations.
//!
//! Three concrete models are provided. The torus tropicalizes a point
//! coordinatewise. On the punctured plane with its rank-one lattice the
//! invariant valuation attached to a curve takes the value
//! `min(ord(c1), ord(c2))` on the weight generator. On `GL(n)` with the
//! two-sided action the tropicalization is the tuple of invariant factors
//! of the matrix over the series ring, sorted decreasingly into the
//! anti-dominant valuation cone.

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use num_traits::{One, Signed, Zero};
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::exact_arith::{ArithError, PuiseuxSeries, Rational, SeriesOrd};
use crate::geometry::{Halfspace, Polyhedron};
use crate::poly_engine::Polynomial;
use crate::snf_series::{invariant_factors_minors, SeriesMatrix, SnfError};
use crate::trop_classical::{eval_poly_at_point, trop_point, TropError};

/// Errors of the spherical model layer.
#[derive(Debug, Clone, PartialEq)]
pub enum SphError {
    Arith(ArithError),
    Snf(SnfError),
    Trop(TropError),
    /// Vector length does not match the lattice rank.
    RankMismatch,
    /// The point is not on the model (zero pair, singular matrix, wrong
    /// shape).
    InvalidPoint(String),
    /// Fewer than two samples requested from the estimator.
    TooFewSamples,
}

impl From<ArithError> for SphError {
    fn from(e: ArithError) -> Self {
        SphError::Arith(e)
    }
}

impl From<SnfError> for SphError {
    fn from(e: SnfError) -> Self {
        SphError::Snf(e)
    }
}

impl From<TropError> for SphError {
    fn from(e: TropError) -> Self {
        SphError::Trop(e)
    }
}

impl core::fmt::Display for SphError {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        match self {
            SphError::Arith(e) => write!(f, "{e}"),
            SphError::Snf(e) => write!(f, "{e}"),
            SphError::Trop(e) => write!(f, "{e}"),
            SphError::RankMismatch => write!(f, "vector length does not match lattice rank"),
            SphError::InvalidPoint(msg) => write!(f, "invalid model point: {msg}"),
            SphError::TooFewSamples => write!(f, "estimator needs at least two samples"),
        }
    }
}

impl core::error::Error for SphError {}

/// The cone of invariant valuations, cut out by `<v, beta_i> <= 0` over the
/// spherical roots. Roots must be linearly independent (the cone is
/// simplicial).
#[derive(Debug, Clone, PartialEq)]
pub struct ValuationCone {
    rank: usize,
    roots: Vec<Vec<Rational>>,
    cone: Polyhedron,
}

impl ValuationCone {
    pub fn new(rank: usize, roots: Vec<Vec<Rational>>) -> Self {
        assert!(roots.iter().all(|r| r.len() == rank));
        assert_eq!(
            crate::geometry::rank(&roots),
            roots.len(),
            "spherical roots must be linearly independent (simplicial cone)"
        );
        let halfspaces = roots
            .iter()
            .map(|beta| Halfspace::ge(beta.iter().map(|q| -q.clone()).collect(), Rational::zero()))
            .collect();
        let cone = Polyhedron::new(rank, halfspaces);
        ValuationCone { rank, roots, cone }
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn roots(&self) -> &[Vec<Rational>] {
        &self.roots
    }

    pub fn as_polyhedron(&self) -> &Polyhedron {
        &self.cone
    }

    pub fn contains(&self, v: &[Rational]) -> bool {
        v.len() == self.rank && self.cone.contains(v)
    }
}

/// Location of a vector relative to a valuation cone; a face is identified
/// by the set of spherical roots pairing to zero.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ConeMembership {
    Interior,
    Face { tight_roots: Vec<usize> },
    Outside,
}

/// Classifies `v` against the valuation cone.
pub fn cone_membership(cone: &ValuationCone, v: &[Rational]) -> Result<ConeMembership, SphError> {
    if v.len() != cone.rank {
        return Err(SphError::RankMismatch);
    }
    let mut tight = Vec::new();
    for (i, beta) in cone.roots.iter().enumerate() {
        let mut pairing = Rational::zero();
        for (b, x) in beta.iter().zip(v) {
            pairing += b * x;
        }
        if pairing.is_positive() {
            return Ok(ConeMembership::Outside);
        }
        if pairing.is_zero() {
            tight.push(i);
        }
    }
    if tight.is_empty() {
        Ok(ConeMembership::Interior)
    } else {
        Ok(ConeMembership::Face { tight_roots: tight })
    }
}

/// Descriptor of a homogeneous-space model.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SphericalModel {
    /// The torus `(k*)^n`: lattice rank `n`, no spherical roots.
    Torus(usize),
    /// The punctured affine plane under `SL(2)`: rank one, horospherical.
    Sl2PuncturedPlane,
    /// `GL(n)` under the two-sided action: anti-dominant tuples.
    Gln(usize),
}

impl SphericalModel {
    pub fn lattice_rank(&self) -> usize {
        match self {
            SphericalModel::Torus(n) => *n,
            SphericalModel::Sl2PuncturedPlane => 1,
            SphericalModel::Gln(n) => *n,
        }
    }

    pub fn valuation_cone(&self) -> ValuationCone {
        match self {
            SphericalModel::Torus(n) => ValuationCone::new(*n, Vec::new()),
            SphericalModel::Sl2PuncturedPlane => ValuationCone::new(1, Vec::new()),
            SphericalModel::Gln(n) => {
                // roots e_(i+1) - e_i: the cone of decreasing tuples
                let mut roots = Vec::new();
                for i in 0..n.saturating_sub(1) {
                    let mut beta = vec![Rational::zero(); *n];
                    beta[i] = -Rational::one();
                    beta[i + 1] = Rational::one();
                    roots.push(beta);
                }
                ValuationCone::new(*n, roots)
            }
        }
    }
}

/// A Puiseux point on a model.
#[derive(Debug, Clone, PartialEq)]
pub enum ModelPoint {
    Torus(Vec<PuiseuxSeries>),
    Sl2(PuiseuxSeries, PuiseuxSeries),
    Gln(SeriesMatrix),
}

/// Minimum of two orders with honest handling of unknowns: an unknown order
/// (zero up to truncation) only matters when its bound does not exceed the
/// finite candidate.
fn min_ord_pair(a: &PuiseuxSeries, b: &PuiseuxSeries) -> Result<SeriesOrd, SphError> {
    let oa = a.ord();
    let ob = b.ord();
    match (oa, ob) {
        (Ok(x), Ok(y)) => Ok(match crate::exact_arith::cmp_ord(&x, &y) {
            core::cmp::Ordering::Greater => y,
            _ => x,
        }),
        (Ok(SeriesOrd::Finite(x)), Err(ArithError::PrecisionLoss { bound }))
        | (Err(ArithError::PrecisionLoss { bound }), Ok(SeriesOrd::Finite(x))) => {
            if x < bound {
                Ok(SeriesOrd::Finite(x))
            } else {
                Err(SphError::Arith(ArithError::PrecisionLoss { bound }))
            }
        }
        (Err(e), _) | (_, Err(e)) => Err(SphError::Arith(e)),
    }
}

/// Tropicalizes a model point into (the closure of) the valuation cone.
pub fn model_tropicalize(
    model: &SphericalModel,
    point: &ModelPoint,
) -> Result<Vec<Rational>, SphError> {
    match (model, point) {
        (SphericalModel::Torus(n), ModelPoint::Torus(coords)) => {
            if coords.len() != *n {
                return Err(SphError::RankMismatch);
            }
            Ok(trop_point(coords)?)
        }
        (SphericalModel::Sl2PuncturedPlane, ModelPoint::Sl2(c1, c2)) => {
            if c1.is_zero() && c2.is_zero() {
                return Err(SphError::InvalidPoint("both coordinates are zero".into()));
            }
            match min_ord_pair(c1, c2)? {
                SeriesOrd::Finite(q) => Ok(vec![q]),
                SeriesOrd::Infinite => {
                    Err(SphError::InvalidPoint("both coordinates are zero".into()))
                }
            }
        }
        (SphericalModel::Gln(n), ModelPoint::Gln(matrix)) => {
            if matrix.n() != *n {
                return Err(SphError::RankMismatch);
            }
            Ok(invariant_factors_minors(matrix)?)
        }
        _ => Err(SphError::InvalidPoint("point does not match model".into())),
    }
}

/// Estimate of an invariant valuation by sampling generic group translates.
#[derive(Debug, Clone, PartialEq)]
pub struct SumihiroEstimate {
    /// Minimum of `ord f(g . point)` over the sampled translates.
    pub value: Rational,
    /// Number of samples drawn since the running minimum last improved.
    pub certificate: usize,
    /// Set when the certificate covers less than half the samples; the
    /// estimate is reported anyway.
    pub non_generic_warning: bool,
}

const SAMPLE_BOUND: i64 = 10;

fn random_invertible_2x2(rng: &mut ChaCha8Rng) -> [[i64; 2]; 2] {
    loop {
        let g = [
            [
                rng.gen_range(-SAMPLE_BOUND..=SAMPLE_BOUND),
                rng.gen_range(-SAMPLE_BOUND..=SAMPLE_BOUND),
            ],
            [
                rng.gen_range(-SAMPLE_BOUND..=SAMPLE_BOUND),
                rng.gen_range(-SAMPLE_BOUND..=SAMPLE_BOUND),
            ],
        ];
        if g[0][0] * g[1][1] - g[0][1] * g[1][0] != 0 {
            return g;
        }
    }
}

fn random_invertible(rng: &mut ChaCha8Rng, n: usize) -> Vec<Vec<i64>> {
    loop {
        let g: Vec<Vec<i64>> = (0..n)
            .map(|_| {
                (0..n)
                    .map(|_| rng.gen_range(-SAMPLE_BOUND..=SAMPLE_BOUND))
                    .collect()
            })
            .collect();
        if int_det(&g) != 0 {
            return g;
        }
    }
}

fn int_det(m: &[Vec<i64>]) -> i64 {
    let n = m.len();
    if n == 1 {
        return m[0][0];
    }
    let mut acc = 0i64;
    for j in 0..n {
        let minor: Vec<Vec<i64>> = m[1..]
            .iter()
            .map(|row| {
                row.iter()
                    .enumerate()
                    .filter(|(k, _)| *k != j)
                    .map(|(_, &e)| e)
                    .collect()
            })
            .collect();
        let term = m[0][j] * int_det(&minor);
        acc += if j % 2 == 0 { term } else { -term };
    }
    acc
}

fn const_mat(g: &[Vec<i64>]) -> SeriesMatrix {
    SeriesMatrix::new(
        g.iter()
            .map(|row| {
                row.iter()
                    .map(|&x| PuiseuxSeries::constant(crate::exact_arith::rat_int(x)))
                    .collect()
            })
            .collect(),
    )
    .expect("square")
}

/// Estimates the invariant valuation `min { ord f(g . point) : g generic }`
/// by drawing seeded pseudo-random integer group elements.
///
/// The translate coordinates are substituted into `f` (two variables for the
/// punctured plane, `n` for the torus, `n^2` row-major entries for `GL(n)`).
/// The certificate counts the samples drawn since the running minimum last
/// improved (how long the estimate has been stable); a certificate covering
/// less than half the samples raises the non-generic warning without
/// failing the estimate. Translates on which the function vanishes exactly
/// are recorded as non-generic draws and skipped.
pub fn sumihiro_estimate(
    model: &SphericalModel,
    point: &ModelPoint,
    f: &Polynomial<Rational>,
    samples: usize,
    seed: u64,
    precision: &Rational,
) -> Result<SumihiroEstimate, SphError> {
    if samples < 2 {
        return Err(SphError::TooFewSamples);
    }
    if f.is_zero() {
        return Err(SphError::InvalidPoint("zero function".into()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut values: Vec<Option<Rational>> = Vec::with_capacity(samples);
    for _ in 0..samples {
        let translated: Vec<PuiseuxSeries> = match (model, point) {
            (SphericalModel::Torus(n), ModelPoint::Torus(coords)) => {
                if coords.len() != *n || f.nvars() != *n {
                    return Err(SphError::RankMismatch);
                }
                // torus translation scales each coordinate by a unit
                coords
                    .iter()
                    .map(|c| {
                        let mut lambda = 0;
                        while lambda == 0 {
                            lambda = rng.gen_range(-SAMPLE_BOUND..=SAMPLE_BOUND);
                        }
                        c.scale(&crate::exact_arith::rat_int(lambda))
                    })
                    .collect()
            }
            (SphericalModel::Sl2PuncturedPlane, ModelPoint::Sl2(c1, c2)) => {
                if f.nvars() != 2 {
                    return Err(SphError::RankMismatch);
                }
                let g = random_invertible_2x2(&mut rng);
                let lin = |a: i64, b: i64| {
                    let ca = c1.scale(&crate::exact_arith::rat_int(a));
                    let cb = c2.scale(&crate::exact_arith::rat_int(b));
                    &ca + &cb
                };
                vec![lin(g[0][0], g[0][1]), lin(g[1][0], g[1][1])]
            }
            (SphericalModel::Gln(n), ModelPoint::Gln(matrix)) => {
                if matrix.n() != *n || f.nvars() != n * n {
                    return Err(SphError::RankMismatch);
                }
                let g1 = const_mat(&random_invertible(&mut rng, *n));
                let g2 = const_mat(&random_invertible(&mut rng, *n));
                let moved = g1.mul(matrix).mul(&g2);
                let mut flat = Vec::with_capacity(n * n);
                for i in 0..*n {
                    for j in 0..*n {
                        flat.push(moved.entry(i, j).clone());
                    }
                }
                flat
            }
            _ => return Err(SphError::InvalidPoint("point does not match model".into())),
        };
        let value = eval_poly_at_point(f, &translated, precision)?;
        match value.ord() {
            Ok(SeriesOrd::Finite(q)) => values.push(Some(q)),
            // the function vanished on this translate: a non-generic draw
            // that can never attain the minimum, recorded but skipped
            Ok(SeriesOrd::Infinite) => values.push(None),
            Err(e) => return Err(SphError::Arith(e)),
        }
    }
    let mut min: Option<Rational> = None;
    let mut last_improvement = 0usize;
    for (i, v) in values.iter().enumerate() {
        let Some(v) = v else { continue };
        let improves = match &min {
            None => true,
            Some(m) => v < m,
        };
        if improves {
            min = Some(v.clone());
            last_improvement = i;
        }
    }
    let Some(min) = min else {
        return Err(SphError::InvalidPoint(
            "function vanished on every sampled translate".into(),
        ));
    };
    let certificate = samples - last_improvement;
    let non_generic_warning = certificate * 2 < samples;
    Ok(SumihiroEstimate {
        value: min,
        certificate,
        non_generic_warning,
    })
}
