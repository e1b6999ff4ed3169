//! Exact scalar fields.
//!
//! Everything geometric in this crate is generic over [`Scalar`], an ordered
//! field with exact equality. Floating point types do not qualify: face
//! enumeration needs to decide strict feasibility exactly.

use std::fmt::{Debug, Display};
use std::hash::Hash;

use num_bigint::BigInt;
use num_rational::{BigRational, Ratio};
use num_traits::{One, Signed, ToPrimitive, Zero};

/// An exact ordered field.
pub trait Scalar:
    Clone + Debug + Display + Ord + Hash + Signed + Send + Sync + 'static
{
    /// Builds `numer / denom`, or `None` if `denom` is zero or the value does
    /// not fit the representation.
    fn from_ratio(numer: &BigInt, denom: &BigInt) -> Option<Self>;

    fn from_integer(value: i64) -> Self;

    /// Numerator and (positive) denominator in lowest terms.
    fn to_ratio(&self) -> (BigInt, BigInt);
}

impl Scalar for BigRational {
    fn from_ratio(numer: &BigInt, denom: &BigInt) -> Option<Self> {
        if denom.is_zero() {
            return None;
        }
        Some(Ratio::new(numer.clone(), denom.clone()))
    }

    fn from_integer(value: i64) -> Self {
        Ratio::from_integer(BigInt::from(value))
    }

    fn to_ratio(&self) -> (BigInt, BigInt) {
        (self.numer().clone(), self.denom().clone())
    }
}

/// Fixed-width rationals. Arithmetic overflow panics, so this is only
/// suitable for small inputs.
impl Scalar for Ratio<i64> {
    fn from_ratio(numer: &BigInt, denom: &BigInt) -> Option<Self> {
        let n = numer.to_i64()?;
        let d = denom.to_i64()?;
        if d == 0 {
            return None;
        }
        Some(Ratio::new(n, d))
    }

    fn from_integer(value: i64) -> Self {
        Ratio::from_integer(value)
    }

    fn to_ratio(&self) -> (BigInt, BigInt) {
        (BigInt::from(*self.numer()), BigInt::from(*self.denom()))
    }
}

/// Parses `"p"`, `"-p"` or `"p/q"` with `q > 0`.
pub fn parse_scalar<S: Scalar>(text: &str) -> Option<S> {
    let text = text.trim();
    let (numer, denom) = match text.split_once('/') {
        Some((n, d)) => (n, Some(d)),
        None => (text, None),
    };
    let numer = parse_signed(numer)?;
    let denom = match denom {
        Some(d) => {
            if d.is_empty() || !d.bytes().all(|b| b.is_ascii_digit()) {
                return None;
            }
            d.parse::<BigInt>().ok()?
        }
        None => BigInt::one(),
    };
    S::from_ratio(&numer, &denom)
}

fn parse_signed(text: &str) -> Option<BigInt> {
    let digits = text.strip_prefix('-').unwrap_or(text);
    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return None;
    }
    text.parse().ok()
}

/// Formats as `"p"` or `"p/q"`.
pub fn format_scalar<S: Scalar>(value: &S) -> String {
    let (n, d) = value.to_ratio();
    if d.is_one() {
        n.to_string()
    } else {
        format!("{n}/{d}")
    }
}
