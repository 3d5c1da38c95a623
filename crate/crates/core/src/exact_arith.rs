//! Exact rationals and truncated Puiseux series.
//!
//! A [`PuiseuxSeries`] is a finite collection of terms `c * t^(e/k)` with
//! nonzero rational coefficients, together with a truncation marker: either
//! the series is known exactly (finitely many terms, no tail), or it is known
//! modulo `t^T` for a rational bound `T`. Every operation propagates the
//! tightest truncation that is still sound, so the order of vanishing
//! reported by [`PuiseuxSeries::ord`] is never a guess: when a series has no
//! stored terms but might have a tail beyond its truncation, asking for its
//! order fails with [`ArithError::PrecisionLoss`] instead of returning a
//! wrong value.
//!
//! All values are immutable after construction and all operations are pure.

use alloc::collections::BTreeMap;
use alloc::string::String;
use core::cmp::Ordering;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// Arbitrary-precision rational number, always in lowest terms with a
/// positive denominator.
pub type Rational = num_rational::BigRational;

/// Shorthand for a rational from machine integers.
pub fn rat(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

/// Shorthand for an integer rational.
pub fn rat_int(num: i64) -> Rational {
    Rational::from_integer(BigInt::from(num))
}

/// Errors of the series arithmetic layer.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ArithError {
    /// An order (or a decision depending on one) was demanded of a series
    /// whose stored terms vanish but which is only known modulo `t^bound`.
    PrecisionLoss { bound: Rational },
    /// Multiplicative inverse of the exact zero series.
    DivisionByZero,
}

impl fmt::Display for ArithError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ArithError::PrecisionLoss { bound } => {
                write!(f, "precision loss: series is zero modulo t^({bound})")
            }
            ArithError::DivisionByZero => write!(f, "division by exact zero series"),
        }
    }
}

impl core::error::Error for ArithError {}

/// Order of vanishing: either a finite rational or the infinite sentinel of
/// the exact zero series.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SeriesOrd {
    Finite(Rational),
    Infinite,
}

impl SeriesOrd {
    pub fn finite(&self) -> Option<&Rational> {
        match self {
            SeriesOrd::Finite(q) => Some(q),
            SeriesOrd::Infinite => None,
        }
    }

    pub fn is_infinite(&self) -> bool {
        matches!(self, SeriesOrd::Infinite)
    }
}

impl fmt::Display for SeriesOrd {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SeriesOrd::Finite(q) => write!(f, "{q}"),
            SeriesOrd::Infinite => write!(f, "inf"),
        }
    }
}

/// Truncation state of a series.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Truncation {
    /// All terms are stored; there is no tail.
    Exact,
    /// Terms with exponent `>= T` are unknown.
    To(Rational),
}

impl Truncation {
    fn min(self, other: Truncation) -> Truncation {
        match (self, other) {
            (Truncation::Exact, t) | (t, Truncation::Exact) => t,
            (Truncation::To(a), Truncation::To(b)) => Truncation::To(a.min(b)),
        }
    }

    /// Truncation shifted by a rational amount (for products).
    fn shift(&self, by: &Rational) -> Truncation {
        match self {
            Truncation::Exact => Truncation::Exact,
            Truncation::To(t) => Truncation::To(t + by),
        }
    }

    pub fn bound(&self) -> Option<&Rational> {
        match self {
            Truncation::Exact => None,
            Truncation::To(t) => Some(t),
        }
    }
}

/// A truncated formal Puiseux series over the rationals.
///
/// Terms are stored as a map from the integer exponent numerator `e` to the
/// coefficient of `t^(e/k)` where `k` is the ramification index. The
/// representation is canonical: coefficients are nonzero, stored exponents
/// lie strictly below the truncation bound, and `k` is minimal.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PuiseuxSeries {
    ramification: u64,
    terms: BTreeMap<i64, Rational>,
    trunc: Truncation,
}

impl PuiseuxSeries {
    /// The exact zero series (order infinity).
    pub fn zero() -> Self {
        PuiseuxSeries {
            ramification: 1,
            terms: BTreeMap::new(),
            trunc: Truncation::Exact,
        }
    }

    /// The constant one.
    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    /// An exact constant series.
    pub fn constant(c: Rational) -> Self {
        Self::monomial(c, Rational::zero())
    }

    /// An exact single term `c * t^q`.
    pub fn monomial(c: Rational, q: Rational) -> Self {
        let mut terms = BTreeMap::new();
        let k = q.denom().to_u64().expect("ramification fits in u64");
        if !c.is_zero() {
            terms.insert(q.numer().to_i64().expect("exponent fits in i64"), c);
        }
        PuiseuxSeries {
            ramification: k,
            terms,
            trunc: Truncation::Exact,
        }
        .normalized()
    }

    /// Builds a series from raw parts; zero coefficients are dropped, the
    /// ramification is reduced to its minimum and terms at or above the
    /// truncation bound are discarded.
    pub fn from_terms<I>(ramification: u64, terms: I, trunc: Truncation) -> Self
    where
        I: IntoIterator<Item = (i64, Rational)>,
    {
        assert!(ramification >= 1, "ramification must be positive");
        let mut map: BTreeMap<i64, Rational> = BTreeMap::new();
        for (e, c) in terms {
            let entry = map.entry(e).or_insert_with(Rational::zero);
            *entry += c;
        }
        PuiseuxSeries {
            ramification,
            terms: map,
            trunc,
        }
        .normalized()
    }

    fn normalized(mut self) -> Self {
        self.terms.retain(|_, c| !c.is_zero());
        if let Truncation::To(t) = &self.trunc {
            let k = self.ramification as i64;
            let bound = t.clone();
            self.terms.retain(|e, _| rat(*e, k) < bound);
        }
        // Minimal ramification: divide out the gcd of k and all exponents.
        let mut g = self.ramification;
        for e in self.terms.keys() {
            g = g.gcd(&e.unsigned_abs());
            if g == 1 {
                break;
            }
        }
        if self.terms.is_empty() {
            self.ramification = 1;
        } else if g > 1 {
            let terms = core::mem::take(&mut self.terms);
            self.terms = terms.into_iter().map(|(e, c)| (e / g as i64, c)).collect();
            self.ramification /= g;
        }
        self
    }

    pub fn ramification(&self) -> u64 {
        self.ramification
    }

    pub fn truncation(&self) -> &Truncation {
        &self.trunc
    }

    /// Iterates over `(exponent, coefficient)` pairs in increasing exponent
    /// order, with exponents as exact rationals.
    pub fn terms(&self) -> impl Iterator<Item = (Rational, &Rational)> + '_ {
        let k = self.ramification as i64;
        self.terms.iter().map(move |(e, c)| (rat(*e, k), c))
    }

    /// True for the exact zero series.
    pub fn is_zero(&self) -> bool {
        self.terms.is_empty() && matches!(self.trunc, Truncation::Exact)
    }

    /// True when no terms are stored, exact zero or not.
    pub fn has_no_terms(&self) -> bool {
        self.terms.is_empty()
    }

    /// Order of vanishing. Returns the least stored exponent, the infinite
    /// sentinel for the exact zero, and fails with `PrecisionLoss` when the
    /// series has no stored terms but is truncated (its order could be
    /// anywhere at or beyond the bound).
    pub fn ord(&self) -> Result<SeriesOrd, ArithError> {
        match self.terms.keys().next() {
            Some(e) => Ok(SeriesOrd::Finite(rat(*e, self.ramification as i64))),
            None => match &self.trunc {
                Truncation::Exact => Ok(SeriesOrd::Infinite),
                Truncation::To(t) => Err(ArithError::PrecisionLoss { bound: t.clone() }),
            },
        }
    }

    /// Finite order or an error; convenience for callers that require
    /// invertibility.
    pub fn finite_ord(&self) -> Result<Rational, ArithError> {
        match self.ord()? {
            SeriesOrd::Finite(q) => Ok(q),
            SeriesOrd::Infinite => Err(ArithError::DivisionByZero),
        }
    }

    /// Leading term `(exponent, coefficient)` if any term is stored.
    pub fn leading(&self) -> Option<(Rational, &Rational)> {
        self.terms
            .iter()
            .next()
            .map(|(e, c)| (rat(*e, self.ramification as i64), c))
    }

    /// A lower bound for the order of vanishing that is always available:
    /// the least stored exponent, else the truncation bound, else (for the
    /// exact zero) `None` standing for infinity.
    fn ord_lower_bound(&self) -> Option<Rational> {
        match self.terms.keys().next() {
            Some(e) => Some(rat(*e, self.ramification as i64)),
            None => match &self.trunc {
                Truncation::Exact => None,
                Truncation::To(t) => Some(t.clone()),
            },
        }
    }

    /// Rescales the internal representation to the given ramification, which
    /// must be a multiple of the current one.
    fn with_ramification(&self, k: u64) -> PuiseuxSeries {
        debug_assert!(k.is_multiple_of(self.ramification));
        let m = (k / self.ramification) as i64;
        PuiseuxSeries {
            ramification: k,
            terms: self.terms.iter().map(|(e, c)| (e * m, c.clone())).collect(),
            trunc: self.trunc.clone(),
        }
    }

    /// Forgets all terms at or above `bound` and records the truncation.
    pub fn truncate_to(&self, bound: &Rational) -> PuiseuxSeries {
        PuiseuxSeries {
            ramification: self.ramification,
            terms: self.terms.clone(),
            trunc: self.trunc.clone().min(Truncation::To(bound.clone())),
        }
        .normalized()
    }

    /// Multiplies by a scalar.
    pub fn scale(&self, c: &Rational) -> PuiseuxSeries {
        if c.is_zero() {
            // Scaling by zero kills the stored terms but cannot improve
            // knowledge about the tail.
            return PuiseuxSeries {
                ramification: 1,
                terms: BTreeMap::new(),
                trunc: self.trunc.clone(),
            };
        }
        PuiseuxSeries {
            ramification: self.ramification,
            terms: self.terms.iter().map(|(e, q)| (*e, q * c)).collect(),
            trunc: self.trunc.clone(),
        }
    }

    /// Multiplies by the monomial `t^q`.
    pub fn shift(&self, q: &Rational) -> PuiseuxSeries {
        let kq = q.denom().to_i64().expect("ramification fits in i64");
        let k = (self.ramification as i64).lcm(&kq) as u64;
        let s = self.with_ramification(k);
        let off = (q * rat_int(k as i64)).to_integer().to_i64().unwrap();
        PuiseuxSeries {
            ramification: k,
            terms: s.terms.into_iter().map(|(e, c)| (e + off, c)).collect(),
            trunc: match s.trunc {
                Truncation::Exact => Truncation::Exact,
                Truncation::To(t) => Truncation::To(t + q),
            },
        }
        .normalized()
    }

    fn add_signed(&self, rhs: &PuiseuxSeries, negate: bool) -> PuiseuxSeries {
        let k = (self.ramification as i64).lcm(&(rhs.ramification as i64)) as u64;
        let a = self.with_ramification(k);
        let b = rhs.with_ramification(k);
        let mut terms = a.terms;
        for (e, c) in b.terms {
            let c = if negate { -c } else { c };
            let entry = terms.entry(e).or_insert_with(Rational::zero);
            *entry += c;
        }
        PuiseuxSeries {
            ramification: k,
            terms,
            trunc: a.trunc.min(b.trunc),
        }
        .normalized()
    }

    fn mul_impl(&self, rhs: &PuiseuxSeries) -> PuiseuxSeries {
        if self.is_zero() || rhs.is_zero() {
            return PuiseuxSeries::zero();
        }
        // Product truncation: min(T_a + ord(b), T_b + ord(a)), using the
        // sound lower bound for orders of zero-so-far operands.
        let la = self.ord_lower_bound().expect("nonzero");
        let lb = rhs.ord_lower_bound().expect("nonzero");
        let trunc = self.trunc.shift(&lb).min(rhs.trunc.shift(&la));
        let k = (self.ramification as i64).lcm(&(rhs.ramification as i64)) as u64;
        let a = self.with_ramification(k);
        let b = rhs.with_ramification(k);
        let mut terms: BTreeMap<i64, Rational> = BTreeMap::new();
        for (ea, ca) in &a.terms {
            for (eb, cb) in &b.terms {
                let entry = terms.entry(ea + eb).or_insert_with(Rational::zero);
                *entry += ca * cb;
            }
        }
        PuiseuxSeries {
            ramification: k,
            terms,
            trunc,
        }
        .normalized()
    }

    /// Multiplicative inverse modulo `t^target`.
    ///
    /// The result `g` satisfies `self * g = 1 + O(t^target)` and
    /// `ord(g) = -ord(self)`. An exact monomial inverts exactly. Fails with
    /// `DivisionByZero` on the exact zero and with `PrecisionLoss` when the
    /// operand is not known deeply enough to support the target.
    pub fn inverse(&self, target: &Rational) -> Result<PuiseuxSeries, ArithError> {
        if self.is_zero() {
            return Err(ArithError::DivisionByZero);
        }
        let m = match self.ord()? {
            SeriesOrd::Finite(q) => q,
            SeriesOrd::Infinite => return Err(ArithError::DivisionByZero),
        };
        let (lead_exp, lead_coeff) = {
            let (e, c) = self.leading().expect("nonzero");
            (e, c.clone())
        };
        debug_assert_eq!(lead_exp, m);
        // self = c t^m (1 - h) with ord(h) > 0; 1/self = c^-1 t^-m sum h^j.
        // With self known modulo t^T, h is known modulo t^(T - m) and the
        // inverse modulo t^(T - 2m).
        if let Truncation::To(t) = &self.trunc {
            let supported = t - &m - &m;
            if *target > supported {
                return Err(ArithError::PrecisionLoss { bound: supported });
            }
        }
        let inv_lead = PuiseuxSeries::monomial(lead_coeff.recip(), -m.clone());
        if self.terms.len() == 1 {
            // Monomial: exact inverse of the stored part.
            let mut out = inv_lead;
            if let Truncation::To(t) = &self.trunc {
                out = out.truncate_to(&(t - &m - &m));
            }
            return Ok(out);
        }
        let unit = self.mul_impl(&inv_lead); // 1 - h with ord(h) > 0
        let h = PuiseuxSeries::one().add_signed(&unit, true);
        // Geometric series sum_{j>=0} h^j modulo t^(target + m); the final
        // shift by -m happens via inv_lead.
        let rel_target = target + &m;
        let mut acc = PuiseuxSeries::one();
        let mut pow = h.clone();
        let omitted = loop {
            match pow.ord_lower_bound() {
                None => break None,
                Some(l) if l >= rel_target => break Some(l),
                Some(_) => {}
            }
            acc = acc.add_signed(&pow, false);
            pow = pow.mul_impl(&h);
        };
        let out = acc.mul_impl(&inv_lead);
        // The first omitted geometric term bounds the error from below;
        // keep the honestly computed depth rather than clipping to the
        // requested target (which could discard known terms when the
        // inverse has positive order).
        Ok(match omitted {
            Some(l) => out.truncate_to(&(l - &m)),
            None => out,
        })
    }

    /// Integer power (nonnegative).
    pub fn pow(&self, n: u32) -> PuiseuxSeries {
        let mut out = PuiseuxSeries::one();
        for _ in 0..n {
            out = out.mul_impl(self);
        }
        out
    }

    /// Evaluates the stored terms at a real `t > 0` with principal real
    /// powers. The neglected tail is bounded by [`PuiseuxSeries::tail_bound`].
    pub fn eval_f64(&self, t: f64) -> f64 {
        use num_traits::Float;
        let mut acc = 0.0_f64;
        for (q, c) in self.terms() {
            let e = q.to_f64().unwrap_or(f64::NAN);
            let coeff = c.to_f64().unwrap_or(f64::NAN);
            acc += coeff * Float::powf(t, e);
        }
        acc
    }

    /// Evaluates at a complex point using principal powers, for sampling
    /// parametrized families off the positive real axis.
    pub fn eval_complex(&self, z: num_complex::Complex64) -> num_complex::Complex64 {
        let mut acc = num_complex::Complex64::new(0.0, 0.0);
        for (q, c) in self.terms() {
            let e = q.to_f64().unwrap_or(f64::NAN);
            let coeff = c.to_f64().unwrap_or(f64::NAN);
            acc += z.powf(e) * coeff;
        }
        acc
    }

    /// Magnitude bound `t^T` of the unknown tail at `0 < t <= 1`; `None`
    /// for exact series.
    pub fn tail_bound(&self, t: f64) -> Option<f64> {
        use num_traits::Float;
        match &self.trunc {
            Truncation::Exact => None,
            Truncation::To(bound) => Some(Float::powf(t, bound.to_f64().unwrap_or(f64::NAN))),
        }
    }
}

impl Add for &PuiseuxSeries {
    type Output = PuiseuxSeries;
    fn add(self, rhs: &PuiseuxSeries) -> PuiseuxSeries {
        self.add_signed(rhs, false)
    }
}

impl Sub for &PuiseuxSeries {
    type Output = PuiseuxSeries;
    fn sub(self, rhs: &PuiseuxSeries) -> PuiseuxSeries {
        self.add_signed(rhs, true)
    }
}

impl Mul for &PuiseuxSeries {
    type Output = PuiseuxSeries;
    fn mul(self, rhs: &PuiseuxSeries) -> PuiseuxSeries {
        self.mul_impl(rhs)
    }
}

impl Neg for &PuiseuxSeries {
    type Output = PuiseuxSeries;
    fn neg(self) -> PuiseuxSeries {
        self.scale(&-Rational::one())
    }
}

impl fmt::Display for PuiseuxSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            write!(f, "0")?;
        } else {
            let mut first = true;
            for (q, c) in self.terms() {
                let (neg, mag) = if c.is_negative() {
                    (true, -c.clone())
                } else {
                    (false, c.clone())
                };
                if first {
                    if neg {
                        write!(f, "-")?;
                    }
                    first = false;
                } else {
                    write!(f, " {} ", if neg { "-" } else { "+" })?;
                }
                if q.is_zero() {
                    write!(f, "{mag}")?;
                } else if mag.is_one() {
                    write!(f, "t^({q})")?;
                } else {
                    write!(f, "{mag}*t^({q})")?;
                }
            }
        }
        if let Truncation::To(t) = &self.trunc {
            write!(f, " + O(t^({t}))")?;
        }
        Ok(())
    }
}

/// Total comparison of orders extended with the infinite sentinel
/// (`Infinite` compares greater than everything finite).
pub fn cmp_ord(a: &SeriesOrd, b: &SeriesOrd) -> Ordering {
    match (a, b) {
        (SeriesOrd::Infinite, SeriesOrd::Infinite) => Ordering::Equal,
        (SeriesOrd::Infinite, _) => Ordering::Greater,
        (_, SeriesOrd::Infinite) => Ordering::Less,
        (SeriesOrd::Finite(x), SeriesOrd::Finite(y)) => x.cmp(y),
    }
}

/// Formats a rational as `p/q` (plain `p` for integers).
pub fn format_rational(q: &Rational) -> String {
    use alloc::format;
    if q.denom().is_one() {
        format!("{}", q.numer())
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;
    use alloc::vec::Vec;

    fn t_pow(q: Rational) -> PuiseuxSeries {
        PuiseuxSeries::monomial(Rational::one(), q)
    }

    #[test]
    fn ord_of_basic_series() {
        // t^(3/2) + t^2 has order 3/2
        let f = &t_pow(rat(3, 2)) + &t_pow(rat_int(2));
        assert_eq!(f.ord().unwrap(), SeriesOrd::Finite(rat(3, 2)));
        // exact zero -> infinity
        assert!(PuiseuxSeries::zero().ord().unwrap().is_infinite());
        // constant 5 -> 0
        let five = PuiseuxSeries::constant(rat_int(5));
        assert_eq!(five.ord().unwrap(), SeriesOrd::Finite(rat_int(0)));
    }

    #[test]
    fn ord_precision_loss_on_truncated_zero() {
        let f = PuiseuxSeries::zero().truncate_to(&rat_int(3));
        // not exact zero anymore: tail unknown beyond t^3
        assert_eq!(
            f.ord(),
            Err(ArithError::PrecisionLoss { bound: rat_int(3) })
        );
    }

    #[test]
    fn combine_cancellation_and_products() {
        // (t^-1 + 1) + (-t^-1 + t) = 1 + t
        let a = &t_pow(rat_int(-1)) + &PuiseuxSeries::one();
        let b = &t_pow(rat_int(1)) - &t_pow(rat_int(-1));
        let sum = &a + &b;
        let expect = &PuiseuxSeries::one() + &t_pow(rat_int(1));
        assert_eq!(sum, expect);
        // (1+t)(1-t) = 1 - t^2, exact
        let p = &(&PuiseuxSeries::one() + &t_pow(rat_int(1)))
            * &(&PuiseuxSeries::one() - &t_pow(rat_int(1)));
        let expect = &PuiseuxSeries::one() - &t_pow(rat_int(2));
        assert_eq!(p, expect);
        assert_eq!(*p.truncation(), Truncation::Exact);
    }

    #[test]
    fn truncation_propagates_through_addition() {
        // (1 + O(t^3)) + t^5 = 1 + O(t^3): the t^5 term is absorbed.
        let a = PuiseuxSeries::one().truncate_to(&rat_int(3));
        let b = t_pow(rat_int(5));
        let s = &a + &b;
        assert_eq!(*s.truncation(), Truncation::To(rat_int(3)));
        assert_eq!(s.terms().count(), 1);
        assert_eq!(s.leading().unwrap().0, rat_int(0));
    }

    #[test]
    fn product_truncation_rule() {
        // (t^2 + O(t^5)) * (t^-1 + O(t^4)):
        // T = min(5 + (-1), 4 + 2) = 4
        let a = t_pow(rat_int(2)).truncate_to(&rat_int(5));
        let b = t_pow(rat_int(-1)).truncate_to(&rat_int(4));
        let p = &a * &b;
        assert_eq!(*p.truncation(), Truncation::To(rat_int(4)));
        assert_eq!(p.finite_ord().unwrap(), rat_int(1));
    }

    #[test]
    fn inverse_monomial_and_geometric() {
        // inverse(t^2) = t^-2 exactly
        let inv = t_pow(rat_int(2)).inverse(&rat_int(10)).unwrap();
        assert_eq!(inv, t_pow(rat_int(-2)));
        assert_eq!(*inv.truncation(), Truncation::Exact);
        // inverse(1 - t) to order 4 = 1 + t + t^2 + t^3 + O(t^4)
        let f = &PuiseuxSeries::one() - &t_pow(rat_int(1));
        let g = f.inverse(&rat_int(4)).unwrap();
        let expect = PuiseuxSeries::from_terms(
            1,
            vec![
                (0, rat_int(1)),
                (1, rat_int(1)),
                (2, rat_int(1)),
                (3, rat_int(1)),
            ],
            Truncation::To(rat_int(4)),
        );
        assert_eq!(g, expect);
        // f * g = 1 modulo t^4
        let check = &f * &g;
        assert_eq!(check.leading().unwrap().0, rat_int(0));
        assert_eq!(check.terms().count(), 1);
        // zero -> DivisionByZero
        assert_eq!(
            PuiseuxSeries::zero().inverse(&rat_int(4)),
            Err(ArithError::DivisionByZero)
        );
    }

    #[test]
    fn inverse_ord_negates() {
        let f = &t_pow(rat(3, 2)) + &t_pow(rat_int(2));
        let g = f.inverse(&rat_int(6)).unwrap();
        assert_eq!(g.finite_ord().unwrap(), rat(-3, 2));
        let prod = &f * &g;
        let (e, c) = prod.leading().unwrap();
        assert_eq!(e, rat_int(0));
        assert_eq!(*c, rat_int(1));
        assert_eq!(prod.terms().count(), 1);
    }

    #[test]
    fn eval_numeric() {
        let f = t_pow(rat_int(2));
        assert!((f.eval_f64(0.1) - 0.01).abs() < 1e-15);
        let g = &PuiseuxSeries::one() + &t_pow(rat_int(1));
        assert!((g.eval_f64(0.5) - 1.5).abs() < 1e-15);
        let h = t_pow(rat(1, 2));
        assert!((h.eval_f64(0.04) - 0.2).abs() < 1e-15);
    }

    #[test]
    fn ramification_is_minimized() {
        let f =
            PuiseuxSeries::from_terms(4, vec![(2, rat_int(1)), (6, rat_int(3))], Truncation::Exact);
        // exponents 2/4 and 6/4 reduce to 1/2 and 3/2
        assert_eq!(f.ramification(), 2);
        assert_eq!(f.finite_ord().unwrap(), rat(1, 2));
    }

    #[test]
    fn non_archimedean_ord_laws() {
        use rand::Rng;
        use rand::SeedableRng;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        for _ in 0..200 {
            let mk = |rng: &mut rand_chacha::ChaCha8Rng| {
                let k = rng.gen_range(1..4u64);
                let nterms = rng.gen_range(1..4usize);
                let terms: Vec<(i64, Rational)> = (0..nterms)
                    .map(|_| (rng.gen_range(-6..7i64), rat_int(rng.gen_range(1..5i64))))
                    .collect();
                PuiseuxSeries::from_terms(k, terms, Truncation::Exact)
            };
            let a = mk(&mut rng);
            let b = mk(&mut rng);
            let oa = a.finite_ord().unwrap();
            let ob = b.finite_ord().unwrap();
            let prod = &a * &b;
            assert_eq!(prod.finite_ord().unwrap(), &oa + &ob);
            let sum = &a + &b;
            if let Ok(SeriesOrd::Finite(os)) = sum.ord() {
                assert!(os >= oa.clone().min(ob.clone()));
                if oa != ob {
                    assert_eq!(os, oa.min(ob));
                }
            }
        }
    }

    #[test]
    fn ring_laws_on_exact_series() {
        use rand::Rng;
        use rand::SeedableRng;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(11);
        for _ in 0..100 {
            let mk = |rng: &mut rand_chacha::ChaCha8Rng| {
                let nterms = rng.gen_range(0..3usize);
                let terms: Vec<(i64, Rational)> = (0..nterms)
                    .map(|_| (rng.gen_range(-4..5i64), rat_int(rng.gen_range(-3..4i64))))
                    .collect();
                PuiseuxSeries::from_terms(2, terms, Truncation::Exact)
            };
            let a = mk(&mut rng);
            let b = mk(&mut rng);
            let c = mk(&mut rng);
            assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
            assert_eq!(&a + &b, &b + &a);
            assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            assert_eq!(&a * &b, &b * &a);
            assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        }
    }
}

#[cfg(test)]
mod proptests {
    use super::*;
    use alloc::vec::Vec;
    use proptest::prelude::*;

    fn arb_series() -> impl Strategy<Value = PuiseuxSeries> {
        (
            1u64..4,
            proptest::collection::vec(((-8i64..9), (-5i64..6)), 0..4),
        )
            .prop_map(|(k, raw)| {
                let terms: Vec<(i64, Rational)> =
                    raw.into_iter().map(|(e, c)| (e, rat_int(c))).collect();
                PuiseuxSeries::from_terms(k, terms, Truncation::Exact)
            })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]

        #[test]
        fn ord_is_multiplicative(a in arb_series(), b in arb_series()) {
            prop_assume!(!a.is_zero() && !b.is_zero());
            let oa = a.finite_ord().unwrap();
            let ob = b.finite_ord().unwrap();
            prop_assert_eq!((&a * &b).finite_ord().unwrap(), oa + ob);
        }

        #[test]
        fn ord_of_sum_obeys_ultrametric(a in arb_series(), b in arb_series()) {
            prop_assume!(!a.is_zero() && !b.is_zero());
            let oa = a.finite_ord().unwrap();
            let ob = b.finite_ord().unwrap();
            let sum = &a + &b;
            if let SeriesOrd::Finite(os) = sum.ord().unwrap() {
                prop_assert!(os >= oa.clone().min(ob.clone()));
                if oa != ob {
                    prop_assert_eq!(os, oa.min(ob));
                }
            } else {
                // exact cancellation forces equal orders
                prop_assert_eq!(oa, ob);
            }
        }

        #[test]
        fn inverse_is_one_sided_to_target(a in arb_series(), depth in 1i64..8) {
            prop_assume!(!a.is_zero());
            let target = rat_int(depth);
            let inv = a.inverse(&target).unwrap();
            let residual = &(&a * &inv) - &PuiseuxSeries::one();
            // any leftover term sits at or beyond the target exponent
            for (e, _) in residual.terms() {
                prop_assert!(e >= target.clone());
            }
            prop_assert_eq!(
                inv.finite_ord().unwrap(),
                -a.finite_ord().unwrap()
            );
        }

        #[test]
        fn distributivity(a in arb_series(), b in arb_series(), c in arb_series()) {
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        }
    }
}
