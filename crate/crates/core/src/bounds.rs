//! Closed-form lower bounds on the fraction of edges that k perfect
//! matchings can cover in an r-graph.

use num_traits::{One, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::numeric::{fmt_decimal, fmt_rational, int, Rational};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum BoundKind {
    /// `1 - ((r-1)/r)^k`, from a multicoloring averaging argument.
    Uniform,
    /// The parity-dependent product formula achieved by the greedy cover.
    Improved,
    /// `1 - prod (2r-1-i)/(2r+1-i)`, valid if every r-graph has a perfect
    /// matching double cover by 2r matchings.
    DoubleCoverConditional,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoundValue {
    pub r: u32,
    pub k: u32,
    pub kind: BoundKind,
    pub value: Rational,
}

impl BoundValue {
    pub fn decimal(&self, digits: u32) -> String {
        fmt_decimal(&self.value, digits)
    }
}

fn check_r(r: u32) -> Result<()> {
    if r < 3 {
        return Err(Error::InvalidParameter(format!(
            "bounds need r >= 3, got {r}"
        )));
    }
    Ok(())
}

fn check_k(k: u32) -> Result<()> {
    if k == 0 {
        return Err(Error::InvalidParameter("bounds need k >= 1".into()));
    }
    Ok(())
}

pub fn bound_uniform(r: u32, k: u32) -> Result<BoundValue> {
    check_r(r)?;
    check_k(k)?;
    let base = Rational::new((r as i64 - 1).into(), (r as i64).into());
    let value = Rational::one() - num_traits::pow(base, k as usize);
    Ok(BoundValue {
        r,
        k,
        kind: BoundKind::Uniform,
        value,
    })
}

/// Per-step retention factor of the improved bound: after step `i` the
/// uncovered fraction is multiplied by at most this value.
pub fn improved_factor(r: u32, i: u32) -> Rational {
    let (r, i) = (r as i64, i as i64);
    let (num, den) = if r % 2 == 0 {
        (
            (r * r - 3 * r + 1) * i - (r * r - 5 * r + 3),
            (r * r - 2 * r - 1) * i - (r * r - 4 * r - 1),
        )
    } else {
        (
            (r * r - 2 * r - 1) * i - (r * r - 4 * r + 1),
            (r * r - r - 2) * i - (r * r - 3 * r - 2),
        )
    };
    Rational::new(num.into(), den.into())
}

/// Per-step gain coefficient: `1 - improved_factor(r, k)`, the weight a
/// step-`k` fractional 1-factor puts on an edge no earlier matching used.
pub fn improved_gain_coefficient(r: u32, k: u32) -> Rational {
    Rational::one() - improved_factor(r, k)
}

pub fn bound_improved(r: u32, k: u32) -> Result<BoundValue> {
    check_r(r)?;
    check_k(k)?;
    let product = (1..=k).fold(Rational::one(), |acc, i| acc * improved_factor(r, i));
    Ok(BoundValue {
        r,
        k,
        kind: BoundKind::Improved,
        value: Rational::one() - product,
    })
}

pub fn bound_double_cover_conditional(r: u32, k: u32) -> Result<BoundValue> {
    check_r(r)?;
    if k == 0 || k > 2 * r - 1 {
        return Err(Error::InvalidParameter(format!(
            "conditional bound needs 1 <= k <= {}, got {k}",
            2 * r - 1
        )));
    }
    let r2 = 2 * r as i64;
    let product = (1..=k as i64).fold(Rational::one(), |acc, i| {
        acc * Rational::new((r2 - 1 - i).into(), (r2 + 1 - i).into())
    });
    Ok(BoundValue {
        r,
        k,
        kind: BoundKind::DoubleCoverConditional,
        value: Rational::one() - product,
    })
}

pub fn bound(kind: BoundKind, r: u32, k: u32) -> Result<BoundValue> {
    match kind {
        BoundKind::Uniform => bound_uniform(r, k),
        BoundKind::Improved => bound_improved(r, k),
        BoundKind::DoubleCoverConditional => bound_double_cover_conditional(r, k),
    }
}

/// The improved bound for r in {3,4,5} and k in 2..=9, row-major by k.
pub fn table() -> Vec<BoundValue> {
    (2..=9)
        .flat_map(|k| (3..=5).map(move |r| bound_improved(r, k).expect("valid range")))
        .collect()
}

/// Plain-text rendering of [`table`]: `p/q ≈ d` cells at four decimals.
pub fn render_table() -> String {
    let mut out = String::from("k\tr=3\tr=4\tr=5\n");
    for row in table().chunks(3) {
        out.push_str(&row[0].k.to_string());
        for cell in row {
            out.push('\t');
            out.push_str(&format!(
                "{} ≈ {}",
                fmt_rational(&cell.value),
                cell.decimal(4)
            ));
        }
        out.push('\n');
    }
    out
}

/// `1 - prod_{i<=k} (i+1)/(2i+1)`, the known cubic bound.
pub fn cubic_reference(k: u32) -> Rational {
    let product = (1..=k as i64).fold(Rational::one(), |acc, i| {
        acc * Rational::new((i + 1).into(), (2 * i + 1).into())
    });
    Rational::one() - product
}

pub fn in_unit_interval(v: &Rational) -> bool {
    *v >= Rational::zero() && *v <= int(1)
}
