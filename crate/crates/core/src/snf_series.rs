//! Smith normal form over truncated Puiseux/Laurent series: invariant
//! factors of a square matrix by two independent algorithms.
//!
//! The minors route is the definition-level oracle: the k-th determinantal
//! divisor is the minimal order of vanishing over all k-by-k minors, and the
//! invariant factors are the consecutive differences. The elimination route
//! pivots on a minimal-order entry and clears its row and column with
//! multipliers from the valuation ring, producing the transforming matrices
//! for an `A = A1 tau A2` verification. The two must always agree.
//!
//! Precision is honest: whenever a decision would rest on the order of a
//! series that is zero up to its truncation, the computation fails with a
//! `PrecisionLoss` carrying the truncation bound instead of guessing.

use alloc::vec::Vec;

use num_traits::{One, Zero};

use crate::exact_arith::{ArithError, PuiseuxSeries, Rational, SeriesOrd};

/// Errors of the Smith-normal-form layer.
#[derive(Debug, Clone, PartialEq)]
pub enum SnfError {
    /// An order decision hit a series that vanishes up to its truncation.
    PrecisionLoss { bound: Rational },
    /// The matrix is singular (the determinant has infinite order).
    SingularMatrix,
    /// Ragged rows or a non-square matrix.
    ShapeMismatch,
}

impl From<ArithError> for SnfError {
    fn from(e: ArithError) -> Self {
        match e {
            ArithError::PrecisionLoss { bound } => SnfError::PrecisionLoss { bound },
            ArithError::DivisionByZero => SnfError::SingularMatrix,
        }
    }
}

impl core::fmt::Display for SnfError {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        match self {
            SnfError::PrecisionLoss { bound } => {
                write!(f, "precision loss at truncation bound t^({bound})")
            }
            SnfError::SingularMatrix => write!(f, "matrix is singular over the series field"),
            SnfError::ShapeMismatch => write!(f, "matrix must be square"),
        }
    }
}

impl core::error::Error for SnfError {}

/// A square matrix over truncated Puiseux series.
#[derive(Debug, Clone, PartialEq)]
pub struct SeriesMatrix {
    n: usize,
    entries: Vec<Vec<PuiseuxSeries>>,
}

impl SeriesMatrix {
    pub fn new(entries: Vec<Vec<PuiseuxSeries>>) -> Result<Self, SnfError> {
        let n = entries.len();
        if entries.iter().any(|row| row.len() != n) {
            return Err(SnfError::ShapeMismatch);
        }
        Ok(SeriesMatrix { n, entries })
    }

    pub fn identity(n: usize) -> Self {
        let entries = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| {
                        if i == j {
                            PuiseuxSeries::one()
                        } else {
                            PuiseuxSeries::zero()
                        }
                    })
                    .collect()
            })
            .collect();
        SeriesMatrix { n, entries }
    }

    /// Diagonal matrix of exact monomials `t^(q_i)`.
    pub fn diag_monomials(exponents: &[Rational]) -> Self {
        let n = exponents.len();
        let entries = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| {
                        if i == j {
                            PuiseuxSeries::monomial(Rational::one(), exponents[i].clone())
                        } else {
                            PuiseuxSeries::zero()
                        }
                    })
                    .collect()
            })
            .collect();
        SeriesMatrix { n, entries }
    }

    /// Identity with one extra off-diagonal entry at `(i, j)`.
    pub fn elementary(n: usize, i: usize, j: usize, e: PuiseuxSeries) -> Self {
        assert!(i != j && i < n && j < n);
        let mut m = Self::identity(n);
        m.entries[i][j] = e;
        m
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn entry(&self, i: usize, j: usize) -> &PuiseuxSeries {
        &self.entries[i][j]
    }

    pub fn rows(&self) -> &[Vec<PuiseuxSeries>] {
        &self.entries
    }

    pub fn mul(&self, other: &SeriesMatrix) -> SeriesMatrix {
        assert_eq!(self.n, other.n);
        let n = self.n;
        let entries = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| {
                        let mut acc = PuiseuxSeries::zero();
                        for k in 0..n {
                            acc = &acc + &(&self.entries[i][k] * &other.entries[k][j]);
                        }
                        acc
                    })
                    .collect()
            })
            .collect();
        SeriesMatrix { n, entries }
    }

    /// Exact determinant by cofactor expansion (desk scale).
    pub fn det(&self) -> PuiseuxSeries {
        det_of(&self.entries)
    }

    /// Evaluates all entries at a real parameter value.
    pub fn eval_f64(&self, t: f64) -> Vec<Vec<f64>> {
        self.entries
            .iter()
            .map(|row| row.iter().map(|e| e.eval_f64(t)).collect())
            .collect()
    }
}

fn det_of(m: &[Vec<PuiseuxSeries>]) -> PuiseuxSeries {
    let n = m.len();
    if n == 0 {
        return PuiseuxSeries::one();
    }
    if n == 1 {
        return m[0][0].clone();
    }
    let mut acc = PuiseuxSeries::zero();
    for (j, top) in m[0].iter().enumerate() {
        if top.is_zero() {
            continue;
        }
        let minor: Vec<Vec<PuiseuxSeries>> = m[1..]
            .iter()
            .map(|row| {
                row.iter()
                    .enumerate()
                    .filter(|(k, _)| *k != j)
                    .map(|(_, e)| e.clone())
                    .collect()
            })
            .collect();
        let cof = top * &det_of(&minor);
        acc = if j % 2 == 0 { &acc + &cof } else { &acc - &cof };
    }
    acc
}

/// Minimal order over a collection of series, with honest precision: a
/// series that vanishes only up to its truncation poisons the minimum
/// whenever its bound does not exceed the best finite candidate.
fn min_ord_of(series: impl Iterator<Item = PuiseuxSeries>) -> Result<Option<Rational>, SnfError> {
    let mut best: Option<Rational> = None;
    let mut unknown_bound: Option<Rational> = None;
    for s in series {
        match s.ord() {
            Ok(SeriesOrd::Finite(q)) => {
                best = Some(match best {
                    None => q,
                    Some(b) => b.min(q),
                });
            }
            Ok(SeriesOrd::Infinite) => {}
            Err(ArithError::PrecisionLoss { bound }) => {
                unknown_bound = Some(match unknown_bound {
                    None => bound,
                    Some(u) => u.min(bound),
                });
            }
            Err(ArithError::DivisionByZero) => unreachable!(),
        }
    }
    match (best, unknown_bound) {
        (Some(b), Some(u)) => {
            if u <= b {
                Err(SnfError::PrecisionLoss { bound: u })
            } else {
                Ok(Some(b))
            }
        }
        (Some(b), None) => Ok(Some(b)),
        (None, Some(u)) => Err(SnfError::PrecisionLoss { bound: u }),
        (None, None) => Ok(None),
    }
}

fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut idx: Vec<usize> = (0..k).collect();
    if k == 0 || k > n {
        return out;
    }
    loop {
        out.push(idx.clone());
        // advance
        let mut i = k;
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            if idx[i] != i + n - k {
                break;
            }
            if i == 0 {
                return out;
            }
        }
        idx[i] += 1;
        for j in (i + 1)..k {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

/// Invariant factors by determinantal divisors: `d_k` is the minimal order
/// over all k-by-k minors and the factors are `d_k - d_(k-1)`, returned
/// sorted decreasingly.
pub fn invariant_factors_minors(a: &SeriesMatrix) -> Result<Vec<Rational>, SnfError> {
    let n = a.n();
    if n == 0 {
        return Ok(Vec::new());
    }
    let mut d_prev = Rational::zero();
    let mut factors: Vec<Rational> = Vec::with_capacity(n);
    for k in 1..=n {
        let rows = combinations(n, k);
        let cols = combinations(n, k);
        let minors = rows.iter().flat_map(|ri| {
            cols.iter().map(move |ci| {
                let sub: Vec<Vec<PuiseuxSeries>> = ri
                    .iter()
                    .map(|&i| ci.iter().map(|&j| a.entry(i, j).clone()).collect())
                    .collect();
                det_of(&sub)
            })
        });
        let d_k = match min_ord_of(minors)? {
            Some(d) => d,
            None => return Err(SnfError::SingularMatrix),
        };
        factors.push(&d_k - &d_prev);
        d_prev = d_k;
    }
    factors.sort();
    factors.reverse();
    Ok(factors)
}

/// Result of the elimination route: invariant factors (decreasing), the
/// diagonal exponent matrix `tau`, and the transforming matrices with
/// `A = left * tau * right`, both unimodular over the valuation ring.
#[derive(Debug, Clone)]
pub struct SnfDecomposition {
    pub factors: Vec<Rational>,
    pub tau: SeriesMatrix,
    pub left: SeriesMatrix,
    pub right: SeriesMatrix,
}

impl SnfDecomposition {
    /// Residual `A - left * tau * right`: every entry must vanish up to its
    /// truncation.
    pub fn verify(&self, a: &SeriesMatrix) -> bool {
        let recomposed = self.left.mul(&self.tau).mul(&self.right);
        for i in 0..a.n() {
            for j in 0..a.n() {
                let diff = a.entry(i, j) - recomposed.entry(i, j);
                if !diff.has_no_terms() {
                    return false;
                }
            }
        }
        true
    }
}

/// Invariant factors by Gaussian-style elimination over the valuation ring:
/// pivot on a minimal-order entry (ties: smallest row, then column), clear
/// its row and column with unit multipliers, recurse on the complement.
///
/// `working_precision` bounds the truncation used for pivot inverses; exact
/// inputs yield results valid modulo `t^working_precision`, and insufficient
/// depth surfaces as `PrecisionLoss` rather than a wrong answer.
#[allow(clippy::needless_range_loop)]
pub fn invariant_factors_elimination(
    a: &SeriesMatrix,
    working_precision: &Rational,
) -> Result<SnfDecomposition, SnfError> {
    let n = a.n();
    let mut m = a.entries.clone();
    let mut left = SeriesMatrix::identity(n);
    let mut right = SeriesMatrix::identity(n);

    for r in 0..n {
        // Pivot search over the trailing submatrix.
        let mut best: Option<(Rational, usize, usize)> = None;
        let mut unknown_bound: Option<Rational> = None;
        for (i, row) in m.iter().enumerate().skip(r) {
            for (j, e) in row.iter().enumerate().skip(r) {
                match e.ord() {
                    Ok(SeriesOrd::Finite(q)) => {
                        let better = match &best {
                            None => true,
                            Some((bq, _, _)) => q < *bq,
                        };
                        if better {
                            best = Some((q, i, j));
                        }
                    }
                    Ok(SeriesOrd::Infinite) => {}
                    Err(ArithError::PrecisionLoss { bound }) => {
                        unknown_bound = Some(match unknown_bound.take() {
                            None => bound,
                            Some(u) => u.min(bound),
                        });
                    }
                    Err(ArithError::DivisionByZero) => unreachable!(),
                }
            }
        }
        let (_, pi, pj) = match (best, unknown_bound) {
            (Some((q, i, j)), Some(u)) => {
                if u <= q {
                    return Err(SnfError::PrecisionLoss { bound: u });
                }
                (q, i, j)
            }
            (Some(b), None) => b,
            (None, Some(u)) => return Err(SnfError::PrecisionLoss { bound: u }),
            (None, None) => return Err(SnfError::SingularMatrix),
        };

        // Bring the pivot to (r, r); swaps are unimodular.
        if pi != r {
            m.swap(pi, r);
            // A = left * M * right stays valid with left := left * swap
            for rr in 0..n {
                left.entries[rr].swap(pi, r);
            }
        }
        if pj != r {
            for row in m.iter_mut() {
                row.swap(pj, r);
            }
            right.entries.swap(pj, r);
        }

        let pivot = m[r][r].clone();
        // Invert to the requested depth, or to whatever depth a truncated
        // pivot can still support.
        let target = match (pivot.truncation(), pivot.ord()) {
            (crate::exact_arith::Truncation::To(t), Ok(SeriesOrd::Finite(q))) => {
                let supported = t - &q - &q;
                supported.min(working_precision.clone())
            }
            _ => working_precision.clone(),
        };
        let pivot_inv = pivot.inverse(&target)?;

        // Clear the column below/above and the row to the right; entries
        // with no stored terms are already zero to their truncation depth.
        for i in 0..n {
            if i == r || m[i][r].has_no_terms() {
                continue;
            }
            let factor = &m[i][r] * &pivot_inv; // order >= 0: stays in O
            for j in r..n {
                let sub = &factor * &m[r][j];
                m[i][j] = &m[i][j] - &sub;
            }
            // left := left * E^(-1), E^(-1) adds factor*row_r back
            for rr in 0..n {
                let add = &left.entries[rr][i] * &factor;
                left.entries[rr][r] = &left.entries[rr][r] + &add;
            }
        }
        for j in 0..n {
            if j == r || m[r][j].has_no_terms() {
                continue;
            }
            let factor = &m[r][j] * &pivot_inv;
            for i in r..n {
                let sub = &m[i][r] * &factor;
                m[i][j] = &m[i][j] - &sub;
            }
            for cc in 0..n {
                let add = &factor * &right.entries[j][cc];
                right.entries[r][cc] = &right.entries[r][cc] + &add;
            }
        }
    }

    // Diagonal orders and unit parts.
    let mut exps: Vec<Rational> = Vec::with_capacity(n);
    let mut units: Vec<PuiseuxSeries> = Vec::with_capacity(n);
    for (r, row) in m.iter().enumerate() {
        let d = &row[r];
        let q = match d.ord() {
            Ok(SeriesOrd::Finite(q)) => q,
            Ok(SeriesOrd::Infinite) => return Err(SnfError::SingularMatrix),
            Err(ArithError::PrecisionLoss { bound }) => {
                return Err(SnfError::PrecisionLoss { bound })
            }
            Err(ArithError::DivisionByZero) => unreachable!(),
        };
        units.push(d.shift(&-q.clone()));
        exps.push(q);
    }
    // Fold the units into the left factor: left := left * diag(units).
    for row in left.entries.iter_mut() {
        for (c, u) in units.iter().enumerate() {
            row[c] = &row[c] * u;
        }
    }
    // Reorder the diagonal decreasingly with a (unimodular) permutation
    // conjugation so tau matches the reported factors.
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| exps[j].cmp(&exps[i]));
    let factors: Vec<Rational> = order.iter().map(|&i| exps[i].clone()).collect();
    let mut left_p = SeriesMatrix::identity(n);
    let mut right_p = SeriesMatrix::identity(n);
    for (new_pos, &old_pos) in order.iter().enumerate() {
        for rr in 0..n {
            left_p.entries[rr][new_pos] = left.entries[rr][old_pos].clone();
        }
        for cc in 0..n {
            right_p.entries[new_pos][cc] = right.entries[old_pos][cc].clone();
        }
    }
    let tau = SeriesMatrix::diag_monomials(&factors);
    Ok(SnfDecomposition {
        factors,
        tau,
        left: left_p,
        right: right_p,
    })
}

/// True when the matrix has entries of nonnegative order and determinant of
/// order zero (a unit of the matrix ring over the valuation ring).
pub fn is_unimodular_over_o(m: &SeriesMatrix) -> Result<bool, SnfError> {
    for row in m.rows() {
        for e in row {
            match e.ord() {
                Ok(SeriesOrd::Finite(q)) => {
                    if q < Rational::zero() {
                        return Ok(false);
                    }
                }
                Ok(SeriesOrd::Infinite) => {}
                Err(ArithError::PrecisionLoss { .. }) => {}
                Err(ArithError::DivisionByZero) => unreachable!(),
            }
        }
    }
    match m.det().ord() {
        Ok(SeriesOrd::Finite(q)) => Ok(q.is_zero()),
        Ok(SeriesOrd::Infinite) => Ok(false),
        Err(ArithError::PrecisionLoss { bound }) => Err(SnfError::PrecisionLoss { bound }),
        Err(ArithError::DivisionByZero) => unreachable!(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact_arith::{rat_int, Truncation};
    use alloc::vec;

    fn t_pow(q: i64) -> PuiseuxSeries {
        PuiseuxSeries::monomial(Rational::one(), rat_int(q))
    }

    fn z() -> PuiseuxSeries {
        PuiseuxSeries::zero()
    }

    fn figure_matrix() -> SeriesMatrix {
        // [[t+1, t], [t, 0]]
        SeriesMatrix::new(vec![
            vec![&t_pow(1) + &PuiseuxSeries::one(), t_pow(1)],
            vec![t_pow(1), z()],
        ])
        .unwrap()
    }

    #[test]
    fn minors_on_identity() {
        let id = SeriesMatrix::identity(3);
        assert_eq!(
            invariant_factors_minors(&id).unwrap(),
            vec![rat_int(0), rat_int(0), rat_int(0)]
        );
    }

    #[test]
    fn minors_on_antidiagonal() {
        // [[0, t], [t^2, 0]]: d1 = 1, d2 = ord(-t^3) = 3 -> factors (2, 1)
        let a = SeriesMatrix::new(vec![vec![z(), t_pow(1)], vec![t_pow(2), z()]]).unwrap();
        assert_eq!(
            invariant_factors_minors(&a).unwrap(),
            vec![rat_int(2), rat_int(1)]
        );
    }

    #[test]
    fn minors_on_figure_matrix() {
        // d1 = 0, d2 = ord(-t^2) = 2 -> factors (2, 0)
        assert_eq!(
            invariant_factors_minors(&figure_matrix()).unwrap(),
            vec![rat_int(2), rat_int(0)]
        );
    }

    #[test]
    fn elimination_on_diagonal() {
        let a = SeriesMatrix::diag_monomials(&[rat_int(3), rat_int(1)]);
        let snf = invariant_factors_elimination(&a, &rat_int(20)).unwrap();
        assert_eq!(snf.factors, vec![rat_int(3), rat_int(1)]);
        assert!(snf.verify(&a));
    }

    #[test]
    fn elimination_on_figure_matrix() {
        let a = figure_matrix();
        let snf = invariant_factors_elimination(&a, &rat_int(20)).unwrap();
        assert_eq!(snf.factors, vec![rat_int(2), rat_int(0)]);
        assert!(snf.verify(&a));
        assert!(is_unimodular_over_o(&snf.left).unwrap());
        assert!(is_unimodular_over_o(&snf.right).unwrap());
    }

    #[test]
    fn elimination_rejects_zero_matrix() {
        let a = SeriesMatrix::new(vec![vec![z(), z()], vec![z(), z()]]).unwrap();
        assert_eq!(
            invariant_factors_elimination(&a, &rat_int(20)).unwrap_err(),
            SnfError::SingularMatrix
        );
        assert_eq!(
            invariant_factors_minors(&a).unwrap_err(),
            SnfError::SingularMatrix
        );
    }

    #[test]
    fn precision_loss_is_reported() {
        // An entry that is zero only up to truncation t^2 while the best
        // pivot candidate has order 3: the unknown could win, so refuse.
        let murky = PuiseuxSeries::zero().truncate_to(&rat_int(2));
        let a = SeriesMatrix::new(vec![vec![t_pow(3), z()], vec![z(), murky]]).unwrap();
        match invariant_factors_minors(&a) {
            Err(SnfError::PrecisionLoss { bound }) => assert_eq!(bound, rat_int(2)),
            other => panic!("expected precision loss, got {other:?}"),
        }
    }

    #[test]
    fn sum_law_and_agreement_on_random_matrices() {
        use rand::Rng;
        use rand::SeedableRng;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(2024);
        let mut done = 0;
        while done < 60 {
            let n = rng.gen_range(2..5usize);
            let entries: Vec<Vec<PuiseuxSeries>> = (0..n)
                .map(|_| {
                    (0..n)
                        .map(|_| {
                            if rng.gen_range(0..4) == 0 {
                                z()
                            } else {
                                let nterms = rng.gen_range(1..3usize);
                                PuiseuxSeries::from_terms(
                                    1,
                                    (0..nterms).map(|_| {
                                        (rng.gen_range(-3..4i64), rat_int(rng.gen_range(1..4i64)))
                                    }),
                                    Truncation::Exact,
                                )
                            }
                        })
                        .collect()
                })
                .collect();
            let a = SeriesMatrix::new(entries).unwrap();
            let det_ord = match a.det().ord() {
                Ok(SeriesOrd::Finite(q)) => q,
                _ => continue, // singular draw
            };
            let minors = invariant_factors_minors(&a).unwrap();
            let elim = invariant_factors_elimination(&a, &rat_int(40)).unwrap();
            assert_eq!(minors, elim.factors, "algorithms disagree");
            let total: Rational = minors.iter().fold(Rational::zero(), |s, q| s + q);
            assert_eq!(total, det_ord, "sum law violated");
            assert!(elim.verify(&a));
            done += 1;
        }
    }

    #[test]
    fn invariance_under_unimodular_multiplication() {
        use rand::Rng;
        use rand::SeedableRng;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(77);
        let a = figure_matrix();
        let base = invariant_factors_minors(&a).unwrap();
        for _ in 0..10 {
            // unit upper/lower triangular with entries in O
            let mk_unit = |rng: &mut rand_chacha::ChaCha8Rng, upper: bool| {
                let mut m = SeriesMatrix::identity(2);
                let e = PuiseuxSeries::from_terms(
                    1,
                    [(rng.gen_range(0..3i64), rat_int(rng.gen_range(-2..3i64)))],
                    Truncation::Exact,
                );
                if upper {
                    m.entries[0][1] = e;
                } else {
                    m.entries[1][0] = e;
                }
                m
            };
            let g1 = mk_unit(&mut rng, true).mul(&mk_unit(&mut rng, false));
            let g2 = mk_unit(&mut rng, false).mul(&mk_unit(&mut rng, true));
            assert!(is_unimodular_over_o(&g1).unwrap());
            let b = g1.mul(&a).mul(&g2);
            assert_eq!(invariant_factors_minors(&b).unwrap(), base);
        }
    }

    #[test]
    fn factors_from_minors_are_nondecreasing_before_sort() {
        // the raw consecutive differences d_k - d_(k-1) are nondecreasing,
        // so the sorted-decreasing output is just their reversal
        let a = SeriesMatrix::new(vec![
            vec![t_pow(-1), PuiseuxSeries::one()],
            vec![z(), t_pow(2)],
        ])
        .unwrap();
        // d1 = -1, d2 = ord(t^-1 * t^2) = 1 -> raw (-1, 2), sorted (2, -1)
        assert_eq!(
            invariant_factors_minors(&a).unwrap(),
            vec![rat_int(2), rat_int(-1)]
        );
    }
}
