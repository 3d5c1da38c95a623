//! Exact rational polyhedral geometry: linear algebra, a small two-phase
//! simplex solver, and H-representation cones/polyhedra.
//!
//! Everything here is exact; no floating point. The simplex solver uses
//! Bland's rule, so it terminates on every input, and it is the single
//! decision procedure behind emptiness, redundancy, relative-interior
//! points, set containment and face tests.

use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::exact_arith::Rational;

// ---------------------------------------------------------------------------
// Linear algebra over the rationals
// ---------------------------------------------------------------------------

/// Rank of a matrix given as a list of rows.
#[allow(clippy::needless_range_loop)]
pub fn rank(rows: &[Vec<Rational>]) -> usize {
    if rows.is_empty() {
        return 0;
    }
    let ncols = rows[0].len();
    let mut m: Vec<Vec<Rational>> = rows.to_vec();
    let mut r = 0;
    for col in 0..ncols {
        if r == m.len() {
            break;
        }
        let pivot = (r..m.len()).find(|&i| !m[i][col].is_zero());
        let Some(p) = pivot else { continue };
        m.swap(r, p);
        let inv = m[r][col].clone().recip();
        for x in m[r].iter_mut() {
            *x *= &inv;
        }
        for i in 0..m.len() {
            if i != r && !m[i][col].is_zero() {
                let f = m[i][col].clone();
                for c in 0..ncols {
                    let sub = &m[r][c] * &f;
                    m[i][c] -= sub;
                }
            }
        }
        r += 1;
    }
    r
}

// ---------------------------------------------------------------------------
// Simplex
// ---------------------------------------------------------------------------

/// Constraint relation in an H-representation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Rel {
    /// `normal . x + offset >= 0`
    Ge,
    /// `normal . x + offset = 0`
    Eq,
}

/// A single affine constraint `normal . x + offset REL 0`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Halfspace {
    pub normal: Vec<Rational>,
    pub offset: Rational,
    pub rel: Rel,
}

impl Halfspace {
    pub fn ge(normal: Vec<Rational>, offset: Rational) -> Self {
        Halfspace {
            normal,
            offset,
            rel: Rel::Ge,
        }
    }

    pub fn eq(normal: Vec<Rational>, offset: Rational) -> Self {
        Halfspace {
            normal,
            offset,
            rel: Rel::Eq,
        }
    }

    pub fn eval(&self, x: &[Rational]) -> Rational {
        let mut acc = self.offset.clone();
        for (a, v) in self.normal.iter().zip(x) {
            acc += a * v;
        }
        acc
    }

    pub fn satisfied_by(&self, x: &[Rational]) -> bool {
        let v = self.eval(x);
        match self.rel {
            Rel::Ge => !v.is_negative(),
            Rel::Eq => v.is_zero(),
        }
    }

    /// Scales the constraint to a primitive integer vector; equalities get a
    /// sign-canonical orientation.
    pub fn canonical(&self) -> Halfspace {
        let mut denom_lcm = BigInt::one();
        for q in self.normal.iter().chain(core::iter::once(&self.offset)) {
            denom_lcm = denom_lcm.lcm(q.denom());
        }
        let scale = Rational::from_integer(denom_lcm);
        let mut ints: Vec<BigInt> = self
            .normal
            .iter()
            .map(|q| (q * &scale).to_integer())
            .collect();
        let mut off = (&self.offset * &scale).to_integer();
        let mut g = off.abs();
        for v in &ints {
            g = g.gcd(&v.abs());
        }
        if !g.is_zero() && !g.is_one() {
            for v in ints.iter_mut() {
                *v /= &g;
            }
            off /= &g;
        }
        if self.rel == Rel::Eq {
            let first = ints
                .iter()
                .chain(core::iter::once(&off))
                .find(|v| !v.is_zero());
            if let Some(f) = first {
                if f.is_negative() {
                    for v in ints.iter_mut() {
                        *v = -v.clone();
                    }
                    off = -off;
                }
            }
        }
        Halfspace {
            normal: ints.into_iter().map(Rational::from_integer).collect(),
            offset: Rational::from_integer(off),
            rel: self.rel,
        }
    }
}

/// Outcome of a linear program.
#[derive(Debug, Clone, PartialEq)]
pub enum LpOutcome {
    Infeasible,
    Unbounded,
    Optimal {
        value: Rational,
        point: Vec<Rational>,
    },
}

/// Maximizes `objective . x` over the constraint set (free variables).
/// Passing a zero objective turns this into a feasibility check.
pub fn lp_maximize(objective: &[Rational], constraints: &[Halfspace], nvars: usize) -> LpOutcome {
    // Free variables split as x = u - v with u, v >= 0; one slack per
    // inequality. Standard equality form M y = d, y >= 0.
    let n_ineq = constraints.iter().filter(|c| c.rel == Rel::Ge).count();
    let ncols = 2 * nvars + n_ineq;
    let nrows = constraints.len();
    let mut m = vec![vec![Rational::zero(); ncols]; nrows];
    let mut d = vec![Rational::zero(); nrows];
    let mut slack_idx = 2 * nvars;
    for (i, c) in constraints.iter().enumerate() {
        for j in 0..nvars {
            m[i][2 * j] = c.normal[j].clone();
            m[i][2 * j + 1] = -c.normal[j].clone();
        }
        d[i] = -c.offset.clone();
        if c.rel == Rel::Ge {
            // normal.x + offset - slack = 0
            m[i][slack_idx] = -Rational::one();
            slack_idx += 1;
        }
    }
    let mut cost = vec![Rational::zero(); ncols];
    for j in 0..nvars {
        cost[2 * j] = objective[j].clone();
        cost[2 * j + 1] = -objective[j].clone();
    }
    match simplex_standard(m, d, cost) {
        StandardOutcome::Infeasible => LpOutcome::Infeasible,
        StandardOutcome::Unbounded => LpOutcome::Unbounded,
        StandardOutcome::Optimal { value, point } => {
            let x: Vec<Rational> = (0..nvars)
                .map(|j| &point[2 * j] - &point[2 * j + 1])
                .collect();
            LpOutcome::Optimal { value, point: x }
        }
    }
}

/// Finds any feasible point of the constraint set.
pub fn lp_feasible_point(constraints: &[Halfspace], nvars: usize) -> Option<Vec<Rational>> {
    match lp_maximize(&vec![Rational::zero(); nvars], constraints, nvars) {
        LpOutcome::Optimal { point, .. } => Some(point),
        LpOutcome::Unbounded => unreachable!("zero objective cannot be unbounded"),
        LpOutcome::Infeasible => None,
    }
}

enum StandardOutcome {
    Infeasible,
    Unbounded,
    Optimal {
        value: Rational,
        point: Vec<Rational>,
    },
}

/// Two-phase simplex for `max cost . y` subject to `M y = d, y >= 0`,
/// with Bland's anti-cycling rule.
fn simplex_standard(
    mut m: Vec<Vec<Rational>>,
    mut d: Vec<Rational>,
    cost: Vec<Rational>,
) -> StandardOutcome {
    let nrows = m.len();
    let ncols = if nrows > 0 { m[0].len() } else { cost.len() };
    if nrows == 0 {
        if cost.iter().all(|c| !c.is_positive()) {
            return StandardOutcome::Optimal {
                value: Rational::zero(),
                point: vec![Rational::zero(); ncols],
            };
        }
        return StandardOutcome::Unbounded;
    }
    // Normalize right-hand sides to be nonnegative, then add artificials.
    for i in 0..nrows {
        if d[i].is_negative() {
            for x in m[i].iter_mut() {
                *x = -x.clone();
            }
            d[i] = -d[i].clone();
        }
        m[i].extend((0..nrows).map(|k| {
            if k == i {
                Rational::one()
            } else {
                Rational::zero()
            }
        }));
    }
    let total = ncols + nrows;
    let mut basis: Vec<usize> = (ncols..total).collect();

    // Phase 1: maximize -(sum of artificials).
    let mut phase1 = vec![Rational::zero(); total];
    for c in phase1.iter_mut().skip(ncols) {
        *c = -Rational::one();
    }
    match run_simplex(&mut m, &mut d, &mut basis, &phase1, total) {
        RunOutcome::Unbounded => return StandardOutcome::Infeasible,
        RunOutcome::Optimal(value) => {
            if value.is_negative() {
                return StandardOutcome::Infeasible;
            }
        }
    }
    // Drive leftover artificials out of the basis.
    for i in 0..nrows {
        if basis[i] >= ncols {
            if let Some(col) = (0..ncols).find(|&j| !m[i][j].is_zero()) {
                pivot(&mut m, &mut d, &mut basis, i, col);
            }
            // else: redundant zero row; the artificial stays at value zero
        }
    }
    // Phase 2 with artificial columns forbidden.
    let mut phase2 = cost;
    phase2.extend(vec![Rational::zero(); nrows]);
    match run_simplex(&mut m, &mut d, &mut basis, &phase2, ncols) {
        RunOutcome::Unbounded => StandardOutcome::Unbounded,
        RunOutcome::Optimal(value) => {
            let mut point = vec![Rational::zero(); ncols];
            for i in 0..nrows {
                if basis[i] < ncols {
                    point[basis[i]] = d[i].clone();
                }
            }
            StandardOutcome::Optimal { value, point }
        }
    }
}

enum RunOutcome {
    Optimal(Rational),
    Unbounded,
}

fn pivot(m: &mut [Vec<Rational>], d: &mut [Rational], basis: &mut [usize], row: usize, col: usize) {
    let inv = m[row][col].clone().recip();
    for x in m[row].iter_mut() {
        *x *= &inv;
    }
    d[row] *= &inv;
    for i in 0..m.len() {
        if i != row && !m[i][col].is_zero() {
            let f = m[i][col].clone();
            for j in 0..m[i].len() {
                let sub = &m[row][j] * &f;
                m[i][j] -= sub;
            }
            let sub = &d[row] * &f;
            d[i] -= sub;
        }
    }
    basis[row] = col;
}

fn run_simplex(
    m: &mut [Vec<Rational>],
    d: &mut [Rational],
    basis: &mut [usize],
    cost: &[Rational],
    allowed_cols: usize,
) -> RunOutcome {
    loop {
        // Reduced cost of column j in canonical tableau form:
        // c_j - sum_i cost[basis[i]] * m[i][j].
        let mut entering = None;
        for j in 0..allowed_cols {
            if basis.contains(&j) {
                continue;
            }
            let mut rc = cost[j].clone();
            for i in 0..m.len() {
                if !m[i][j].is_zero() && !cost[basis[i]].is_zero() {
                    let sub = &cost[basis[i]] * &m[i][j];
                    rc -= sub;
                }
            }
            if rc.is_positive() {
                entering = Some(j); // Bland: smallest index
                break;
            }
        }
        let Some(col) = entering else {
            let mut value = Rational::zero();
            for i in 0..m.len() {
                if !cost[basis[i]].is_zero() {
                    value += &cost[basis[i]] * &d[i];
                }
            }
            return RunOutcome::Optimal(value);
        };
        // Ratio test, Bland ties: smallest basis index leaves.
        let mut leave: Option<(usize, Rational)> = None;
        for i in 0..m.len() {
            if m[i][col].is_positive() {
                let ratio = &d[i] / &m[i][col];
                let better = match &leave {
                    None => true,
                    Some((li, lr)) => match ratio.cmp(lr) {
                        Ordering::Less => true,
                        Ordering::Equal => basis[i] < basis[*li],
                        Ordering::Greater => false,
                    },
                };
                if better {
                    leave = Some((i, ratio));
                }
            }
        }
        let Some((row, _)) = leave else {
            return RunOutcome::Unbounded;
        };
        pivot(m, d, basis, row, col);
    }
}

// ---------------------------------------------------------------------------
// Polyhedra
// ---------------------------------------------------------------------------

/// A rational polyhedron in H-representation. With all offsets zero this is
/// a polyhedral cone.
#[derive(Debug, Clone, PartialEq)]
pub struct Polyhedron {
    halfspaces: Vec<Halfspace>,
    nvars: usize,
}

impl Polyhedron {
    pub fn new(nvars: usize, halfspaces: Vec<Halfspace>) -> Self {
        assert!(halfspaces.iter().all(|h| h.normal.len() == nvars));
        Polyhedron { halfspaces, nvars }
    }

    /// The whole space.
    pub fn everything(nvars: usize) -> Self {
        Polyhedron {
            halfspaces: Vec::new(),
            nvars,
        }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn halfspaces(&self) -> &[Halfspace] {
        &self.halfspaces
    }

    pub fn is_cone(&self) -> bool {
        self.halfspaces.iter().all(|h| h.offset.is_zero())
    }

    pub fn contains(&self, x: &[Rational]) -> bool {
        self.halfspaces.iter().all(|h| h.satisfied_by(x))
    }

    pub fn is_empty(&self) -> bool {
        lp_feasible_point(&self.halfspaces, self.nvars).is_none()
    }

    pub fn feasible_point(&self) -> Option<Vec<Rational>> {
        lp_feasible_point(&self.halfspaces, self.nvars)
    }

    /// Intersection (concatenated constraints).
    pub fn intersect(&self, other: &Polyhedron) -> Polyhedron {
        assert_eq!(self.nvars, other.nvars);
        let mut hs = self.halfspaces.clone();
        hs.extend(other.halfspaces.iter().cloned());
        Polyhedron {
            halfspaces: hs,
            nvars: self.nvars,
        }
    }

    /// Sorted, deduplicated, primitive-integer form. Does not remove
    /// redundant constraints; see [`Polyhedron::irredundant`].
    pub fn canonical(&self) -> Polyhedron {
        let mut hs: Vec<Halfspace> = self.halfspaces.iter().map(|h| h.canonical()).collect();
        hs.sort_by(|a, b| (a.rel, &a.normal, &a.offset).cmp(&(b.rel, &b.normal, &b.offset)));
        hs.dedup();
        Polyhedron {
            halfspaces: hs,
            nvars: self.nvars,
        }
    }

    /// Drops inequalities implied by the rest (empty polyhedra are returned
    /// canonicalized but otherwise unchanged). Equalities are kept.
    pub fn irredundant(&self) -> Polyhedron {
        let canon = self.canonical();
        if canon.is_empty() {
            return canon;
        }
        let kept: Vec<Halfspace> = canon
            .halfspaces
            .iter()
            .filter(|h| h.rel == Rel::Eq)
            .cloned()
            .collect();
        let ineqs: Vec<Halfspace> = canon
            .halfspaces
            .iter()
            .filter(|h| h.rel == Rel::Ge)
            .cloned()
            .collect();
        let mut active = ineqs.clone();
        for h in &ineqs {
            let Some(pos) = active.iter().position(|g| g == h) else {
                continue;
            };
            let mut others: Vec<Halfspace> = kept.clone();
            others.extend(
                active
                    .iter()
                    .enumerate()
                    .filter(|(j, _)| *j != pos)
                    .map(|(_, g)| g.clone()),
            );
            // h is redundant iff max of -(h.normal.x) over the others stays
            // at or below h.offset.
            let neg_obj: Vec<Rational> = h.normal.iter().map(|q| -q.clone()).collect();
            let redundant = match lp_maximize(&neg_obj, &others, self.nvars) {
                LpOutcome::Infeasible => true,
                LpOutcome::Unbounded => false,
                LpOutcome::Optimal { value, .. } => value <= h.offset.clone(),
            };
            if redundant {
                active.remove(pos);
            }
        }
        let mut hs = kept;
        hs.extend(active);
        Polyhedron::new(self.nvars, hs).canonical()
    }

    /// Every point of `other` satisfies every constraint of `self`.
    pub fn contains_set(&self, other: &Polyhedron) -> bool {
        if other.is_empty() {
            return true;
        }
        for h in &self.halfspaces {
            // sup of -(h.normal.x) over other must stay <= h.offset
            let neg_obj: Vec<Rational> = h.normal.iter().map(|q| -q.clone()).collect();
            match lp_maximize(&neg_obj, &other.halfspaces, self.nvars) {
                LpOutcome::Infeasible => return true,
                LpOutcome::Unbounded => return false,
                LpOutcome::Optimal { value, .. } => {
                    if value > h.offset {
                        return false;
                    }
                }
            }
            if h.rel == Rel::Eq {
                // also sup of h.normal.x must stay <= -h.offset
                match lp_maximize(&h.normal, &other.halfspaces, self.nvars) {
                    LpOutcome::Infeasible => return true,
                    LpOutcome::Unbounded => return false,
                    LpOutcome::Optimal { value, .. } => {
                        if value > -h.offset.clone() {
                            return false;
                        }
                    }
                }
            }
        }
        true
    }

    /// Exact set equality.
    pub fn set_eq(&self, other: &Polyhedron) -> bool {
        self.contains_set(other) && other.contains_set(self)
    }

    /// Dimension of the polyhedron (-1 when empty): ambient dimension minus
    /// the rank of all constraints holding with equality everywhere.
    pub fn dim(&self) -> i64 {
        if self.is_empty() {
            return -1;
        }
        let mut tight: Vec<Vec<Rational>> = Vec::new();
        for h in &self.halfspaces {
            match h.rel {
                Rel::Eq => tight.push(h.normal.clone()),
                Rel::Ge => {
                    if self.forced_tight(h) {
                        tight.push(h.normal.clone());
                    }
                }
            }
        }
        self.nvars as i64 - rank(&tight) as i64
    }

    fn forced_tight(&self, h: &Halfspace) -> bool {
        // sup of h.normal.x over the set equals -h.offset
        match lp_maximize(&h.normal, &self.halfspaces, self.nvars) {
            LpOutcome::Unbounded => false,
            LpOutcome::Infeasible => true,
            LpOutcome::Optimal { value, .. } => value == -h.offset.clone(),
        }
    }

    /// A point in the relative interior: all non-forced inequalities hold
    /// strictly.
    pub fn relint_point(&self) -> Option<Vec<Rational>> {
        if self.is_empty() {
            return None;
        }
        let mut fixed: Vec<Halfspace> = Vec::new();
        let mut strict: Vec<Halfspace> = Vec::new();
        for h in &self.halfspaces {
            match h.rel {
                Rel::Eq => fixed.push(h.clone()),
                Rel::Ge => {
                    if self.forced_tight(h) {
                        fixed.push(Halfspace::eq(h.normal.clone(), h.offset.clone()));
                    } else {
                        strict.push(h.clone());
                    }
                }
            }
        }
        // Require a uniform positive slack; shrink it if needed (cones
        // always accept the unit slack by scaling).
        for denom in [1i64, 4, 64, 1024] {
            let eps = Rational::new(BigInt::one(), BigInt::from(denom));
            let mut sys = fixed.clone();
            for h in &strict {
                sys.push(Halfspace::ge(h.normal.clone(), &h.offset - &eps));
            }
            if let Some(p) = lp_feasible_point(&sys, self.nvars) {
                return Some(p);
            }
        }
        None
    }
}
