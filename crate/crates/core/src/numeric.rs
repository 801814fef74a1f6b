//! Exact rational helpers shared by the cut, matching and cover code.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

pub type Rational = BigRational;

pub fn ratio(numer: i64, denom: i64) -> Rational {
    Rational::new(BigInt::from(numer), BigInt::from(denom))
}

pub fn int(value: i64) -> Rational {
    Rational::from_integer(BigInt::from(value))
}

/// Reduced `p/q` rendering; integers render without a denominator.
pub fn fmt_rational(value: &Rational) -> String {
    if value.denom().is_one() {
        value.numer().to_string()
    } else {
        format!("{}/{}", value.numer(), value.denom())
    }
}

/// Decimal rendering with round-half-even at `digits` places, trailing zeros
/// dropped (`0.4500` prints as `0.45`, `0.7000` as `0.7`).
pub fn fmt_decimal(value: &Rational, digits: u32) -> String {
    let scale = BigInt::from(10u32).pow(digits);
    let scaled = value * Rational::from_integer(scale.clone());
    let floor = scaled.floor();
    let frac = &scaled - &floor;
    let half = ratio(1, 2);
    let mut units = floor.to_integer();
    if frac > half || (frac == half && units.is_odd()) {
        units += 1;
    }
    let negative = units.is_negative();
    let units = units.abs();
    let (whole, rest) = units.div_rem(&scale);
    let mut rest = format!("{:0>width$}", rest.to_string(), width = digits as usize);
    while rest.ends_with('0') {
        rest.pop();
    }
    let sign = if negative { "-" } else { "" };
    if rest.is_empty() {
        format!("{sign}{whole}")
    } else {
        format!("{sign}{whole}.{rest}")
    }
}

/// Least common multiple of the denominators.
pub fn common_denominator<'a>(values: impl IntoIterator<Item = &'a Rational>) -> BigInt {
    values
        .into_iter()
        .fold(BigInt::one(), |acc, v| acc.lcm(v.denom()))
}

/// Scales `values` by their common denominator into machine integers.
/// Returns the integers and the denominator.
pub fn scale_to_i128(values: &[Rational]) -> Result<(Vec<i128>, BigInt)> {
    let denom = common_denominator(values);
    let scaled = values
        .iter()
        .map(|v| {
            let n = v.numer() * (&denom / v.denom());
            n.to_i128().ok_or(Error::Overflow)
        })
        .collect::<Result<Vec<_>>>()?;
    Ok((scaled, denom))
}

pub fn sum<'a>(values: impl IntoIterator<Item = &'a Rational>) -> Rational {
    values.into_iter().fold(Rational::zero(), |acc, v| acc + v)
}
