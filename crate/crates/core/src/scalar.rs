//! Scalar abstraction for densities, thresholds and bound formulas.
//!
//! Everything that compares a count against a fractional threshold is generic
//! over [`Scalar`]. The exact instantiation ([`crate::Exact`]) is what the
//! library uses by default, so `<=` versus `<` boundaries are decided without
//! rounding. Floating point instantiations are available for quick sweeps.

use std::fmt::{Debug, Display};

use num_bigint::BigInt;
use num_rational::{BigRational, Ratio};
use num_traits::{FromPrimitive, Num, Signed, ToPrimitive};

pub trait Scalar:
    Clone + Debug + Display + PartialOrd + Num + Signed + ToPrimitive + Send + Sync + 'static
{
    /// `num / den`. Exact for rational types.
    fn ratio(num: i64, den: i64) -> Self;

    /// Largest integer not above `self`, as a scalar.
    fn floor(&self) -> Self;

    fn from_count(c: usize) -> Self {
        Self::ratio(c as i64, 1)
    }

    /// Parses `"3"`, `"-2"`, `"1/10"` or a decimal such as `"0.125"`.
    /// Decimals are read digit by digit, so rational types get the exact value.
    fn parse_exact(s: &str) -> Option<Self> {
        let s = s.trim();
        if let Some((num, den)) = s.split_once('/') {
            let num: i64 = num.trim().parse().ok()?;
            let den: i64 = den.trim().parse().ok()?;
            if den == 0 {
                return None;
            }
            return Some(Self::ratio(num, den));
        }
        let (negative, body) = match s.strip_prefix('-') {
            Some(rest) => (true, rest),
            None => (false, s.strip_prefix('+').unwrap_or(s)),
        };
        let (int_part, frac_part) = body.split_once('.').unwrap_or((body, ""));
        if int_part.is_empty() && frac_part.is_empty() {
            return None;
        }
        if !int_part.chars().all(|c| c.is_ascii_digit())
            || !frac_part.chars().all(|c| c.is_ascii_digit())
        {
            return None;
        }
        let ten = Self::from_count(10);
        let mut value = Self::zero();
        for c in int_part.chars() {
            value = value * ten.clone() + Self::from_count(c.to_digit(10)? as usize);
        }
        let mut scale = Self::one();
        for c in frac_part.chars() {
            scale = scale / ten.clone();
            value = value + scale.clone() * Self::from_count(c.to_digit(10)? as usize);
        }
        Some(if negative { -value } else { value })
    }

    /// `floor(self)` as an integer, if it fits.
    fn floor_i64(&self) -> Option<i64> {
        self.floor().to_i64()
    }

    fn is_integer(&self) -> bool {
        self.floor() == *self
    }
}

impl Scalar for f64 {
    fn ratio(num: i64, den: i64) -> Self {
        num as f64 / den as f64
    }
    fn floor(&self) -> Self {
        f64::floor(*self)
    }
}

impl Scalar for f32 {
    fn ratio(num: i64, den: i64) -> Self {
        (num as f64 / den as f64) as f32
    }
    fn floor(&self) -> Self {
        f32::floor(*self)
    }
}

impl Scalar for Ratio<i64> {
    fn ratio(num: i64, den: i64) -> Self {
        Ratio::new(num, den)
    }
    fn floor(&self) -> Self {
        Ratio::floor(self)
    }
}

impl Scalar for BigRational {
    fn ratio(num: i64, den: i64) -> Self {
        BigRational::new(BigInt::from(num), BigInt::from(den))
    }
    fn floor(&self) -> Self {
        Ratio::floor(self)
    }
    fn from_count(c: usize) -> Self {
        BigRational::from_integer(BigInt::from_usize(c).expect("usize fits in BigInt"))
    }
}

/// Compares `count` against `factor * total` exactly: returns the ordering of
/// `count` relative to the product.
pub fn cmp_count<S: Scalar>(count: usize, factor: &S, total: usize) -> std::cmp::Ordering {
    let lhs = S::from_count(count);
    let rhs = factor.clone() * S::from_count(total);
    lhs.partial_cmp(&rhs).unwrap_or(std::cmp::Ordering::Equal)
}

/// `true` iff `count >= (1 - sqrt(eps)) * m`, decided without taking a root.
pub fn at_least_one_minus_sqrt<S: Scalar>(count: usize, eps: &S, m: usize) -> bool {
    if count >= m {
        return true;
    }
    let gap = S::from_count(m - count);
    // m - count <= sqrt(eps) * m  <=>  (m - count)^2 <= eps * m^2
    gap.clone() * gap <= eps.clone() * S::from_count(m) * S::from_count(m)
}

/// `true` iff `count >= sqrt(eps) * m`, decided without taking a root.
pub fn at_least_sqrt<S: Scalar>(count: usize, eps: &S, m: usize) -> bool {
    let c = S::from_count(count);
    c.clone() * c >= eps.clone() * S::from_count(m) * S::from_count(m)
}
