//! Double-precision spherical amoebas: small-matrix singular values by
//! one-sided Jacobi, logarithm maps per model, amoeba point clouds, and the
//! convergence harness matching invariant factors against singular values.
//!
//! The base `t` of every logarithm lies in `(0, 1)`, so `log_t` reverses
//! order: the increasing singular values pair off against the decreasing
//! invariant factors, and as `t` shrinks the log-singular-values of an
//! algebraic family converge to the exact invariant factors.

use alloc::vec::Vec;

use num_complex::Complex64;

use crate::exact_arith::Rational;
use crate::snf_series::{invariant_factors_minors, SeriesMatrix, SnfError};
use crate::spherical_core::SphericalModel;
use crate::spherical_trop::ModelFamily;

// `f64::sqrt`/`ln` are std inherent methods; route through `num_traits::Float`
// so the crate stays no_std (libm provides the implementations).
#[inline]
fn sqrt(x: f64) -> f64 {
    num_traits::Float::sqrt(x)
}

#[inline]
fn ln(x: f64) -> f64 {
    num_traits::Float::ln(x)
}

/// Errors of the numeric layer.
#[derive(Debug, Clone, PartialEq)]
pub enum AmoebaError {
    /// Jacobi sweeps did not reach the off-diagonal threshold.
    NoConvergence {
        residual: f64,
    },
    /// A point outside the model's numeric domain (zero coordinate, zero
    /// vector, numerically singular matrix).
    DegeneratePoint,
    /// Matrices are capped at 8 x 8.
    TooLarge,
    Snf(SnfError),
    /// Family/model mismatch.
    ModelMismatch,
}

impl From<SnfError> for AmoebaError {
    fn from(e: SnfError) -> Self {
        AmoebaError::Snf(e)
    }
}

impl core::fmt::Display for AmoebaError {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        match self {
            AmoebaError::NoConvergence { residual } => {
                write!(f, "Jacobi SVD did not converge (residual {residual:e})")
            }
            AmoebaError::DegeneratePoint => write!(f, "degenerate numeric point"),
            AmoebaError::TooLarge => write!(f, "matrix dimension exceeds 8"),
            AmoebaError::Snf(e) => write!(f, "{e}"),
            AmoebaError::ModelMismatch => write!(f, "family does not match model"),
        }
    }
}

impl core::error::Error for AmoebaError {}

/// A square complex matrix, at most 8 x 8.
#[derive(Debug, Clone, PartialEq)]
pub struct ComplexMatrix {
    n: usize,
    entries: Vec<Vec<Complex64>>,
}

impl ComplexMatrix {
    pub fn new(entries: Vec<Vec<Complex64>>) -> Result<Self, AmoebaError> {
        let n = entries.len();
        if n > 8 {
            return Err(AmoebaError::TooLarge);
        }
        if entries.iter().any(|r| r.len() != n) {
            return Err(AmoebaError::ModelMismatch);
        }
        Ok(ComplexMatrix { n, entries })
    }

    pub fn from_real(entries: &[Vec<f64>]) -> Result<Self, AmoebaError> {
        Self::new(
            entries
                .iter()
                .map(|r| r.iter().map(|&x| Complex64::new(x, 0.0)).collect())
                .collect(),
        )
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn entry(&self, i: usize, j: usize) -> Complex64 {
        self.entries[i][j]
    }

    pub fn mul(&self, other: &ComplexMatrix) -> ComplexMatrix {
        let n = self.n;
        let entries = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| {
                        (0..n)
                            .map(|k| self.entries[i][k] * other.entries[k][j])
                            .sum()
                    })
                    .collect()
            })
            .collect();
        ComplexMatrix { n, entries }
    }

    pub fn det(&self) -> Complex64 {
        fn det_rec(m: &[Vec<Complex64>]) -> Complex64 {
            let n = m.len();
            if n == 1 {
                return m[0][0];
            }
            let mut acc = Complex64::new(0.0, 0.0);
            for j in 0..n {
                let minor: Vec<Vec<Complex64>> = m[1..]
                    .iter()
                    .map(|row| {
                        row.iter()
                            .enumerate()
                            .filter(|(k, _)| *k != j)
                            .map(|(_, &e)| e)
                            .collect()
                    })
                    .collect();
                let term = m[0][j] * det_rec(&minor);
                acc += if j % 2 == 0 { term } else { -term };
            }
            acc
        }
        if self.n == 0 {
            return Complex64::new(1.0, 0.0);
        }
        det_rec(&self.entries)
    }

    pub fn frobenius_norm(&self) -> f64 {
        sqrt(
            self.entries
                .iter()
                .flat_map(|r| r.iter())
                .map(|z| z.norm_sqr())
                .sum::<f64>(),
        )
    }
}

const JACOBI_TOL: f64 = 1e-12;
const JACOBI_SWEEPS: usize = 60;

/// Singular values by one-sided Jacobi rotations on columns, sorted
/// increasingly. Convergence: every off-diagonal column inner product is
/// below `1e-12` relative to the column norms, within 60 sweeps.
#[allow(clippy::needless_range_loop)]
pub fn svd_values(a: &ComplexMatrix) -> Result<Vec<f64>, AmoebaError> {
    if a.n > 8 {
        return Err(AmoebaError::TooLarge);
    }
    let n = a.n;
    if n == 0 {
        return Ok(Vec::new());
    }
    // Work on columns: cols[j][i] = A[i][j].
    let mut cols: Vec<Vec<Complex64>> = (0..n)
        .map(|j| (0..n).map(|i| a.entries[i][j]).collect())
        .collect();
    let mut worst = 0.0_f64;
    for _sweep in 0..JACOBI_SWEEPS {
        worst = 0.0;
        for p in 0..n {
            for q in (p + 1)..n {
                let mut app = 0.0;
                let mut aqq = 0.0;
                let mut apq = Complex64::new(0.0, 0.0);
                for i in 0..n {
                    app += cols[p][i].norm_sqr();
                    aqq += cols[q][i].norm_sqr();
                    apq += cols[p][i].conj() * cols[q][i];
                }
                let scale = sqrt(app * aqq);
                if scale == 0.0 {
                    continue;
                }
                let rel = apq.norm() / scale;
                if rel > worst {
                    worst = rel;
                }
                if rel <= JACOBI_TOL {
                    continue;
                }
                // Phase-align column q so the inner product becomes real,
                // then apply a real Jacobi rotation.
                let phase = apq / apq.norm();
                let g = apq.norm();
                let tau = (aqq - app) / (2.0 * g);
                let tan = if tau >= 0.0 {
                    1.0 / (tau + sqrt(1.0 + tau * tau))
                } else {
                    -1.0 / (-tau + sqrt(1.0 + tau * tau))
                };
                let cos = 1.0 / sqrt(1.0 + tan * tan);
                let sin = tan * cos;
                for i in 0..n {
                    let cp = cols[p][i];
                    let cq = cols[q][i] * phase.conj();
                    cols[p][i] = cp * cos - cq * sin;
                    cols[q][i] = (cp * sin + cq * cos) * phase;
                }
            }
        }
        if worst <= JACOBI_TOL {
            let mut values: Vec<f64> = cols
                .iter()
                .map(|col| sqrt(col.iter().map(|z| z.norm_sqr()).sum::<f64>()))
                .collect();
            values.sort_by(|x, y| x.partial_cmp(y).expect("finite"));
            return Ok(values);
        }
    }
    Err(AmoebaError::NoConvergence { residual: worst })
}

/// A numeric point on a model.
#[derive(Debug, Clone, PartialEq)]
pub enum NumericPoint {
    Torus(Vec<Complex64>),
    Sl2(Complex64, Complex64),
    Gln(ComplexMatrix),
}

/// The spherical logarithm map at base `t` in `(0, 1)`.
///
/// Torus points map coordinatewise through `log_t |z_i|`; a punctured-plane
/// point maps to `log_t` of its Euclidean length; a `GL(n)` point maps to
/// the `log_t` of its singular values, which lands decreasingly in the
/// valuation cone.
pub fn spherical_log(
    model: &SphericalModel,
    point: &NumericPoint,
    t: f64,
) -> Result<Vec<f64>, AmoebaError> {
    assert!(t > 0.0 && t < 1.0, "base t must lie in (0, 1)");
    let ln_t = ln(t);
    match (model, point) {
        (SphericalModel::Torus(n), NumericPoint::Torus(zs)) => {
            if zs.len() != *n {
                return Err(AmoebaError::ModelMismatch);
            }
            zs.iter()
                .map(|z| {
                    let r = z.norm();
                    if r == 0.0 || !r.is_finite() {
                        Err(AmoebaError::DegeneratePoint)
                    } else {
                        Ok(ln(r) / ln_t)
                    }
                })
                .collect()
        }
        (SphericalModel::Sl2PuncturedPlane, NumericPoint::Sl2(x, y)) => {
            let r = sqrt(x.norm_sqr() + y.norm_sqr());
            if r == 0.0 || !r.is_finite() {
                return Err(AmoebaError::DegeneratePoint);
            }
            Ok(alloc::vec![ln(r) / ln_t])
        }
        (SphericalModel::Gln(n), NumericPoint::Gln(a)) => {
            if a.n() != *n {
                return Err(AmoebaError::ModelMismatch);
            }
            let values = svd_values(a)?;
            if values.iter().any(|&d| d <= 0.0 || !d.is_finite()) {
                return Err(AmoebaError::DegeneratePoint);
            }
            // increasing singular values become decreasing logs for t < 1
            Ok(values.iter().map(|d| ln(*d) / ln_t).collect())
        }
        _ => Err(AmoebaError::ModelMismatch),
    }
}

/// A sampled amoeba: valuation-cone coordinates tagged with the parameter
/// values that produced them.
#[derive(Debug, Clone)]
pub struct AmoebaCloud {
    pub base_t: f64,
    pub points: Vec<(Complex64, Vec<f64>)>,
    pub skipped: usize,
}

/// Evaluates a parametrized family at a numeric parameter value.
pub fn family_eval_numeric(
    model: &SphericalModel,
    family: &ModelFamily,
    s: Complex64,
) -> Result<NumericPoint, AmoebaError> {
    match (model, family) {
        (SphericalModel::Torus(n), ModelFamily::Torus(coords)) => {
            if coords.len() != *n {
                return Err(AmoebaError::ModelMismatch);
            }
            Ok(NumericPoint::Torus(
                coords.iter().map(|c| c.eval_complex(s)).collect(),
            ))
        }
        (SphericalModel::Sl2PuncturedPlane, ModelFamily::Sl2(c1, c2)) => {
            Ok(NumericPoint::Sl2(c1.eval_complex(s), c2.eval_complex(s)))
        }
        (SphericalModel::Gln(n), ModelFamily::Gln(rows)) => {
            if rows.len() != *n || rows.iter().any(|r| r.len() != *n) {
                return Err(AmoebaError::ModelMismatch);
            }
            let entries: Vec<Vec<Complex64>> = rows
                .iter()
                .map(|row| row.iter().map(|e| e.eval_complex(s)).collect())
                .collect();
            Ok(NumericPoint::Gln(ComplexMatrix::new(entries)?))
        }
        _ => Err(AmoebaError::ModelMismatch),
    }
}

/// Samples the spherical amoeba of a parametrized family over a grid of
/// complex parameter values; degenerate samples are skipped and counted.
pub fn amoeba_sample(
    model: &SphericalModel,
    family: &ModelFamily,
    t: f64,
    grid: &[Complex64],
) -> Result<AmoebaCloud, AmoebaError> {
    assert!(t > 0.0 && t < 1.0, "base t must lie in (0, 1)");
    let mut points = Vec::with_capacity(grid.len());
    let mut skipped = 0;
    for &s in grid {
        let point = family_eval_numeric(model, family, s)?;
        match spherical_log(model, &point, t) {
            Ok(coords) => points.push((s, coords)),
            Err(AmoebaError::DegeneratePoint) => skipped += 1,
            Err(e) => return Err(e),
        }
    }
    Ok(AmoebaCloud {
        base_t: t,
        points,
        skipped,
    })
}

/// One row of the limit table: the log singular values at a base `t` and
/// the worst deviation from the invariant factors.
#[derive(Debug, Clone)]
pub struct LimitRow {
    pub t: f64,
    pub log_singular_values: Vec<f64>,
    pub deviation: f64,
}

/// Report of [`snf_svd_limit_check`].
#[derive(Debug, Clone)]
pub struct LimitReport {
    /// Exact invariant factors, decreasing.
    pub factors: Vec<Rational>,
    pub rows: Vec<LimitRow>,
    /// Deviations never increase along the given (decreasing) `t` schedule.
    pub monotone: bool,
    pub final_deviation: f64,
}

/// Compares exact invariant factors against numeric log singular values
/// over a decreasing schedule of bases: the increasing singular values pair
/// with the decreasing factors, the worst absolute difference is recorded
/// per `t`, and the report notes whether the deviations are nonincreasing.
pub fn snf_svd_limit_check(a: &SeriesMatrix, t_values: &[f64]) -> Result<LimitReport, AmoebaError> {
    let factors = invariant_factors_minors(a)?;
    let expected: Vec<f64> = factors
        .iter()
        .map(|q| num_traits::ToPrimitive::to_f64(q).expect("factor fits in f64"))
        .collect();
    let mut rows = Vec::with_capacity(t_values.len());
    for &t in t_values {
        assert!(t > 0.0 && t < 1.0, "base t must lie in (0, 1)");
        let numeric = ComplexMatrix::from_real(&a.eval_f64(t))?;
        let values = svd_values(&numeric)?;
        if values.iter().any(|&d| d <= 0.0 || !d.is_finite()) {
            return Err(AmoebaError::DegeneratePoint);
        }
        let ln_t = ln(t);
        let logs: Vec<f64> = values.iter().map(|d| ln(*d) / ln_t).collect();
        let deviation = logs
            .iter()
            .zip(&expected)
            .map(|(l, v)| (l - v).abs())
            .fold(0.0_f64, f64::max);
        rows.push(LimitRow {
            t,
            log_singular_values: logs,
            deviation,
        });
    }
    let monotone = rows
        .windows(2)
        .all(|w| w[1].deviation <= w[0].deviation + 1e-12);
    let final_deviation = rows.last().map(|r| r.deviation).unwrap_or(0.0);
    Ok(LimitReport {
        factors,
        rows,
        monotone,
        final_deviation,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact_arith::{rat_int, PuiseuxSeries};
    use alloc::vec;
    use num_traits::One;
    use rand::Rng;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn cm(rows: &[&[f64]]) -> ComplexMatrix {
        ComplexMatrix::from_real(&rows.iter().map(|r| r.to_vec()).collect::<Vec<_>>()).unwrap()
    }

    fn random_matrix(rng: &mut ChaCha8Rng, n: usize) -> ComplexMatrix {
        ComplexMatrix::new(
            (0..n)
                .map(|_| {
                    (0..n)
                        .map(|_| Complex64::new(rng.gen_range(-2.0..2.0), rng.gen_range(-2.0..2.0)))
                        .collect()
                })
                .collect(),
        )
        .unwrap()
    }

    /// Random unitary via Gram-Schmidt on a random complex matrix.
    #[allow(clippy::needless_range_loop)]
    fn random_unitary(rng: &mut ChaCha8Rng, n: usize) -> ComplexMatrix {
        loop {
            let a = random_matrix(rng, n);
            let mut cols: Vec<Vec<Complex64>> = (0..n)
                .map(|j| (0..n).map(|i| a.entry(i, j)).collect())
                .collect();
            let mut ok = true;
            for j in 0..n {
                for k in 0..j {
                    let proj: Complex64 = (0..n).map(|i| cols[k][i].conj() * cols[j][i]).sum();
                    for i in 0..n {
                        let sub = proj * cols[k][i];
                        cols[j][i] -= sub;
                    }
                }
                let norm = cols[j].iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
                if norm < 1e-6 {
                    ok = false;
                    break;
                }
                for i in 0..n {
                    cols[j][i] /= norm;
                }
            }
            if ok {
                let entries = (0..n)
                    .map(|i| (0..n).map(|j| cols[j][i]).collect())
                    .collect();
                return ComplexMatrix::new(entries).unwrap();
            }
        }
    }

    #[test]
    fn svd_diagonal_and_permuted() {
        let d = svd_values(&cm(&[&[3.0, 0.0], &[0.0, 1.0]])).unwrap();
        assert!((d[0] - 1.0).abs() < 1e-12 && (d[1] - 3.0).abs() < 1e-12);
        let d = svd_values(&cm(&[&[0.0, 2.0], &[1.0, 0.0]])).unwrap();
        assert!((d[0] - 1.0).abs() < 1e-12 && (d[1] - 2.0).abs() < 1e-12);
    }

    #[test]
    fn svd_product_matches_determinant() {
        let mut rng = ChaCha8Rng::seed_from_u64(8);
        for _ in 0..40 {
            let n = rng.gen_range(2..5usize);
            let a = random_matrix(&mut rng, n);
            let d = svd_values(&a).unwrap();
            let prod: f64 = d.iter().product();
            let det = a.det().norm();
            assert!(
                (prod - det).abs() <= 1e-9 * det.max(1.0),
                "product {prod} vs |det| {det}"
            );
            // Frobenius norm law
            let fro2: f64 = d.iter().map(|x| x * x).sum();
            let direct = a.frobenius_norm().powi(2);
            assert!((fro2 - direct).abs() <= 1e-9 * direct.max(1.0));
        }
    }

    #[test]
    fn svd_invariant_under_unitaries() {
        let mut rng = ChaCha8Rng::seed_from_u64(21);
        for _ in 0..10 {
            let n = rng.gen_range(2..4usize);
            let a = random_matrix(&mut rng, n);
            let u = random_unitary(&mut rng, n);
            let v = random_unitary(&mut rng, n);
            let d1 = svd_values(&a).unwrap();
            let d2 = svd_values(&u.mul(&a).mul(&v)).unwrap();
            for (x, y) in d1.iter().zip(&d2) {
                assert!((x - y).abs() <= 1e-8 * x.max(1.0));
            }
        }
    }

    #[test]
    fn spherical_log_examples() {
        // torus: exact monomial points give exact exponents at any base
        let m = SphericalModel::Torus(2);
        for t in [0.5, 0.1, 0.01] {
            let p = NumericPoint::Torus(vec![
                Complex64::new(t * t, 0.0),
                Complex64::new(1.0 / t, 0.0),
            ]);
            let l = spherical_log(&m, &p, t).unwrap();
            assert!((l[0] - 2.0).abs() < 1e-10);
            assert!((l[1] + 1.0).abs() < 1e-10);
        }
        // punctured plane: log_t of the length
        let m = SphericalModel::Sl2PuncturedPlane;
        let p = NumericPoint::Sl2(Complex64::new(3.0, 0.0), Complex64::new(4.0, 0.0));
        let l = spherical_log(&m, &p, 0.1).unwrap();
        assert!((l[0] - 5.0_f64.ln() / 0.1_f64.ln()).abs() < 1e-12);
        assert!((l[0] + 0.698_970_004_336_018_8).abs() < 1e-9);
        // GL(2): diagonal t-powers give the exponents exactly
        let m = SphericalModel::Gln(2);
        let t = 0.1;
        let p = NumericPoint::Gln(cm(&[&[t * t * t, 0.0], &[0.0, t]]));
        let l = spherical_log(&m, &p, t).unwrap();
        assert!((l[0] - 3.0).abs() < 1e-10);
        assert!((l[1] - 1.0).abs() < 1e-10);
        // GL(n) logs are invariant under unitary motion
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        let u = random_unitary(&mut rng, 2);
        let v = random_unitary(&mut rng, 2);
        let moved = NumericPoint::Gln(u.mul(&cm(&[&[t * t * t, 0.0], &[0.0, t]])).mul(&v));
        let l2 = spherical_log(&m, &moved, t).unwrap();
        assert!((l[0] - l2[0]).abs() < 1e-8 && (l[1] - l2[1]).abs() < 1e-8);
    }

    #[test]
    fn degenerate_points_are_rejected() {
        let m = SphericalModel::Torus(1);
        let p = NumericPoint::Torus(vec![Complex64::new(0.0, 0.0)]);
        assert_eq!(
            spherical_log(&m, &p, 0.1).unwrap_err(),
            AmoebaError::DegeneratePoint
        );
        let m = SphericalModel::Sl2PuncturedPlane;
        let p = NumericPoint::Sl2(Complex64::new(0.0, 0.0), Complex64::new(0.0, 0.0));
        assert_eq!(
            spherical_log(&m, &p, 0.1).unwrap_err(),
            AmoebaError::DegeneratePoint
        );
    }

    fn u_pow(k: i64) -> PuiseuxSeries {
        PuiseuxSeries::monomial(Rational::one(), rat_int(k))
    }

    fn figure_series_matrix() -> SeriesMatrix {
        SeriesMatrix::new(vec![
            vec![&u_pow(1) + &PuiseuxSeries::one(), u_pow(1)],
            vec![u_pow(1), PuiseuxSeries::zero()],
        ])
        .unwrap()
    }

    #[test]
    fn limit_check_on_figure_matrix() {
        let a = figure_series_matrix();
        let report = snf_svd_limit_check(&a, &[1e-1, 1e-2, 1e-3, 1e-4]).unwrap();
        assert_eq!(report.factors, vec![rat_int(2), rat_int(0)]);
        assert!(report.monotone, "deviations increased: {:?}", report.rows);
        assert!(
            report.final_deviation <= 0.05,
            "final deviation {}",
            report.final_deviation
        );
    }

    #[test]
    fn limit_check_exact_on_monomial_diagonals() {
        let a = SeriesMatrix::diag_monomials(&[rat_int(3), rat_int(1)]);
        let report = snf_svd_limit_check(&a, &[1e-1, 1e-2]).unwrap();
        for row in &report.rows {
            assert!(row.deviation < 1e-9, "deviation {}", row.deviation);
        }
        let id = SeriesMatrix::identity(2);
        let report = snf_svd_limit_check(&id, &[1e-1, 1e-3]).unwrap();
        assert_eq!(report.factors, vec![rat_int(0), rat_int(0)]);
        assert!(report.final_deviation < 1e-12);
    }

    #[test]
    fn amoeba_cloud_of_figure_family() {
        // [[s+1, s], [s, 0]] sampled along the real ray s = t approaches
        // the exact tropical point (2, 0)
        let family = ModelFamily::Gln(vec![
            vec![&u_pow(1) + &PuiseuxSeries::one(), u_pow(1)],
            vec![u_pow(1), PuiseuxSeries::zero()],
        ]);
        let model = SphericalModel::Gln(2);
        let t = 0.01;
        let grid = vec![Complex64::new(t, 0.0)];
        let cloud = amoeba_sample(&model, &family, t, &grid).unwrap();
        assert_eq!(cloud.points.len(), 1);
        let coords = &cloud.points[0].1;
        assert!((coords[0] - 2.0).abs() < 0.05, "got {coords:?}");
        assert!(coords[1].abs() < 0.05, "got {coords:?}");
        // degenerate sample (s = 0 gives a singular matrix) is skipped
        let grid = vec![Complex64::new(0.0, 0.0), Complex64::new(t, 0.0)];
        let cloud = amoeba_sample(&model, &family, t, &grid).unwrap();
        assert_eq!(cloud.skipped, 1);
        assert_eq!(cloud.points.len(), 1);
        // empty grid: empty cloud
        let cloud = amoeba_sample(&model, &family, t, &[]).unwrap();
        assert!(cloud.points.is_empty());
    }

    #[test]
    fn amoeba_of_torus_line_has_three_tentacles() {
        // z1 = s, z2 = -1 - s on the line 1 + z1 + z2 = 0
        let family = ModelFamily::Torus(vec![
            u_pow(1),
            &PuiseuxSeries::constant(rat_int(-1)) - &u_pow(1),
        ]);
        let model = SphericalModel::Torus(2);
        let t = 0.01;
        // s small: tentacle along (a, 0), a -> +inf
        let cloud = amoeba_sample(&model, &family, t, &[Complex64::new(t * t, 0.0)]).unwrap();
        let c = &cloud.points[0].1;
        assert!(c[0] > 1.5 && c[1].abs() < 0.1, "{c:?}");
        // s near -1: tentacle along (0, a)
        let cloud =
            amoeba_sample(&model, &family, t, &[Complex64::new(-1.0 + t * t, 0.0)]).unwrap();
        let c = &cloud.points[0].1;
        assert!(c[1] > 1.5 && c[0].abs() < 0.1, "{c:?}");
        // s large: tentacle along the diagonal (a, a), a -> -inf
        let cloud =
            amoeba_sample(&model, &family, t, &[Complex64::new(1.0 / (t * t), 0.0)]).unwrap();
        let c = &cloud.points[0].1;
        assert!(c[0] < -1.5 && (c[0] - c[1]).abs() < 0.1, "{c:?}");
    }
}
