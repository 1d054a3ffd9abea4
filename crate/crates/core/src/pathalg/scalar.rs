//! Exact coefficient rings for path-algebra arithmetic.
//!
//! Three rings are provided: plain rationals, rationals with a nilpotent
//! parameter (`ℚ[t]/(t^D)`), and first-order symbolic scalars
//! `c + Σ c_j ε_j` with `ε_i ε_j = 0`, used to carry unknown cochain
//! coordinates through a reduction.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

pub type Rational = BigRational;

/// Shorthand for an integer-valued rational.
pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Shorthand for `n / d`.
pub fn frac(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// Parse `a`, `-a` or `a/b`.
pub fn parse_rational(text: &str) -> Option<Rational> {
    let text = text.trim();
    if let Some((n, d)) = text.split_once('/') {
        let n: BigInt = n.trim().parse().ok()?;
        let d: BigInt = d.trim().parse().ok()?;
        if d.is_zero() {
            return None;
        }
        Some(Rational::new(n, d))
    } else {
        let n: BigInt = text.parse().ok()?;
        Some(Rational::from_integer(n))
    }
}

/// A commutative coefficient ring with exact arithmetic.
///
/// `Context` identifies which ring an element lives in (e.g. the truncation
/// degree). Arithmetic between different contexts is a caller error and is
/// rejected by [`crate::pathalg::AlgebraElement`].
pub trait Coefficient: Clone + PartialEq + fmt::Debug + Send + Sync {
    type Context: Copy + Eq + fmt::Debug + Send + Sync;

    fn context(&self) -> Self::Context;
    fn zero_in(ctx: Self::Context) -> Self;
    fn one_in(ctx: Self::Context) -> Self;
    fn from_rational(r: &Rational, ctx: Self::Context) -> Self;
    fn vanishes(&self) -> bool;
    fn plus(&self, other: &Self) -> Self;
    fn times(&self, other: &Self) -> Self;
    fn negated(&self) -> Self;
    fn render(&self) -> String;

    fn minus(&self, other: &Self) -> Self {
        self.plus(&other.negated())
    }

    fn is_unit(&self) -> bool {
        *self == Self::one_in(self.context())
    }
}

impl Coefficient for Rational {
    type Context = ();

    fn context(&self) {}
    fn zero_in(_: ()) -> Self {
        Rational::zero()
    }
    fn one_in(_: ()) -> Self {
        Rational::one()
    }
    fn from_rational(r: &Rational, _: ()) -> Self {
        r.clone()
    }
    fn vanishes(&self) -> bool {
        Zero::is_zero(self)
    }
    fn plus(&self, other: &Self) -> Self {
        self + other
    }
    fn times(&self, other: &Self) -> Self {
        self * other
    }
    fn negated(&self) -> Self {
        -self
    }
    fn render(&self) -> String {
        self.to_string()
    }
    fn is_unit(&self) -> bool {
        One::is_one(self)
    }
}

/// Element of `ℚ[t]/(t^D)`; `coeffs[k]` is the coefficient of `t^k`.
#[derive(Clone, PartialEq, Eq, Debug, Hash)]
pub struct TruncPoly {
    coeffs: Vec<Rational>,
}

impl TruncPoly {
    pub fn new(mut coeffs: Vec<Rational>, degree: usize) -> Self {
        assert!(degree >= 1, "truncation degree must be at least 1");
        coeffs.resize(degree, Rational::zero());
        coeffs.truncate(degree);
        TruncPoly { coeffs }
    }

    pub fn constant(r: Rational, degree: usize) -> Self {
        TruncPoly::new(vec![r], degree)
    }

    /// The parameter `t` itself (zero when `D = 1`).
    pub fn t(degree: usize) -> Self {
        TruncPoly::new(vec![Rational::zero(), Rational::one()], degree)
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len()
    }

    pub fn coeff(&self, k: usize) -> &Rational {
        &self.coeffs[k]
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    /// Lowest `k` with nonzero `t^k` coefficient.
    pub fn order(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !Zero::is_zero(c))
    }

    /// Substitute `t = value` (exact, the polynomial has finitely many terms).
    pub fn evaluate(&self, value: &Rational) -> Rational {
        let mut acc = Rational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * value + c;
        }
        acc
    }
}

impl Coefficient for TruncPoly {
    type Context = usize;

    fn context(&self) -> usize {
        self.coeffs.len()
    }
    fn zero_in(d: usize) -> Self {
        TruncPoly::new(Vec::new(), d)
    }
    fn one_in(d: usize) -> Self {
        TruncPoly::constant(Rational::one(), d)
    }
    fn from_rational(r: &Rational, d: usize) -> Self {
        TruncPoly::constant(r.clone(), d)
    }
    fn vanishes(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }
    fn plus(&self, other: &Self) -> Self {
        debug_assert_eq!(self.degree(), other.degree());
        TruncPoly {
            coeffs: self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a + b).collect(),
        }
    }
    fn times(&self, other: &Self) -> Self {
        debug_assert_eq!(self.degree(), other.degree());
        let d = self.degree();
        let mut out = vec![Rational::zero(); d];
        for (i, a) in self.coeffs.iter().enumerate() {
            if Zero::is_zero(a) {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate().take(d - i) {
                if !Zero::is_zero(b) {
                    out[i + j] += a * b;
                }
            }
        }
        TruncPoly { coeffs: out }
    }
    fn negated(&self) -> Self {
        TruncPoly { coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }
    fn render(&self) -> String {
        let mut parts = Vec::new();
        for (k, c) in self.coeffs.iter().enumerate() {
            if Zero::is_zero(c) {
                continue;
            }
            parts.push(match k {
                0 => c.to_string(),
                1 => format!("{c}t"),
                _ => format!("{c}t^{k}"),
            });
        }
        if parts.is_empty() {
            "0".into()
        } else if parts.len() == 1 {
            parts.remove(0)
        } else {
            format!("({})", parts.join(" + "))
        }
    }
}

/// First-order symbolic scalar `c + Σ_j c_j ε_j` with all products of two
/// ε's vanishing. Coordinates `j` index the unknowns of a linear problem.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct FirstOrder {
    pub constant: Rational,
    pub linear: BTreeMap<usize, Rational>,
}

impl FirstOrder {
    pub fn unknown(j: usize) -> Self {
        let mut linear = BTreeMap::new();
        linear.insert(j, Rational::one());
        FirstOrder { constant: Rational::zero(), linear }
    }
}

impl Coefficient for FirstOrder {
    type Context = ();

    fn context(&self) {}
    fn zero_in(_: ()) -> Self {
        FirstOrder::default()
    }
    fn one_in(_: ()) -> Self {
        FirstOrder { constant: Rational::one(), linear: BTreeMap::new() }
    }
    fn from_rational(r: &Rational, _: ()) -> Self {
        FirstOrder { constant: r.clone(), linear: BTreeMap::new() }
    }
    fn vanishes(&self) -> bool {
        Zero::is_zero(&self.constant) && self.linear.is_empty()
    }
    fn plus(&self, other: &Self) -> Self {
        let mut linear = self.linear.clone();
        for (j, c) in &other.linear {
            let entry = linear.entry(*j).or_insert_with(Rational::zero);
            *entry += c;
            if Zero::is_zero(entry) {
                linear.remove(j);
            }
        }
        FirstOrder { constant: &self.constant + &other.constant, linear }
    }
    fn times(&self, other: &Self) -> Self {
        let mut linear: BTreeMap<usize, Rational> = BTreeMap::new();
        if !Zero::is_zero(&other.constant) {
            for (j, c) in &self.linear {
                *linear.entry(*j).or_insert_with(Rational::zero) += c * &other.constant;
            }
        }
        if !Zero::is_zero(&self.constant) {
            for (j, c) in &other.linear {
                *linear.entry(*j).or_insert_with(Rational::zero) += c * &self.constant;
            }
        }
        linear.retain(|_, c| !Zero::is_zero(c));
        FirstOrder { constant: &self.constant * &other.constant, linear }
    }
    fn negated(&self) -> Self {
        FirstOrder {
            constant: -&self.constant,
            linear: self.linear.iter().map(|(j, c)| (*j, -c)).collect(),
        }
    }
    fn render(&self) -> String {
        let mut parts = vec![self.constant.to_string()];
        for (j, c) in &self.linear {
            parts.push(format!("{c}ε{j}"));
        }
        format!("({})", parts.join(" + "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn truncated_product_drops_high_powers() {
        let d = 2;
        let one_plus_t = TruncPoly::new(vec![rat(1), rat(1)], d);
        let one_minus_t = TruncPoly::new(vec![rat(1), rat(-1)], d);
        assert_eq!(one_plus_t.times(&one_minus_t), TruncPoly::one_in(d));
    }

    #[test]
    fn truncated_order_and_evaluation() {
        let p = TruncPoly::new(vec![rat(0), rat(0), rat(3)], 4);
        assert_eq!(p.order(), Some(2));
        assert_eq!(p.evaluate(&rat(2)), rat(12));
        assert_eq!(TruncPoly::zero_in(4).order(), None);
    }

    #[test]
    fn first_order_products_vanish() {
        let a = FirstOrder::unknown(0);
        let b = FirstOrder::unknown(1);
        assert!(a.times(&b).vanishes());
        let two = FirstOrder::from_rational(&rat(2), ());
        let prod = two.plus(&a).times(&two.plus(&b));
        assert_eq!(prod.constant, rat(4));
        assert_eq!(prod.linear.get(&0), Some(&rat(2)));
        assert_eq!(prod.linear.get(&1), Some(&rat(2)));
    }

    #[test]
    fn rational_text() {
        assert_eq!(parse_rational("-3/6"), Some(frac(-1, 2)));
        assert_eq!(parse_rational("7"), Some(rat(7)));
        assert_eq!(parse_rational("1/0"), None);
        assert_eq!(parse_rational("x"), None);
    }
}
