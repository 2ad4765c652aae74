//! Closed-form counts of fuzzy topologies, in exact unbounded integers.
//!
//! Covered open-set counts:
//!
//! * `k = 2`: always exactly one topology (the indiscrete one).
//! * `k = 3`: `m^n - 2`.
//! * `k = 4`: `(m(m+1)/2)^n - 3 m^n + 2^(n-1) + 2`.
//! * `k = 5`: `C(m+2,3)^n - 4 C(m+1,2)^n + (2m-1)^n + 5 m^n - (m-1)^n - 2^(n+1)`.
//! * near the top, for `n >= m >= 2`: zero topologies strictly between
//!   `m^n - m^(n-2)` and `m^n`, exactly `n(n-1)` at `m^n - m^(n-2)`, and the
//!   unique discrete topology at `m^n`.
//!
//! Note: the `k = 5` form disagrees with exhaustive enumeration once
//! `n >= 2` and `m >= 3` (it coincides with it for crisp sets `m = 2` and
//! chains `n = 1`). It is evaluated as displayed above; the `verify`
//! machinery surfaces the affected cells as mismatches.

use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Exact binomial coefficient `C(n, k)`, zero when `k > n`.
pub fn binomial(n: u64, k: u64) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigUint::one();
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

/// Which closed-form result produced a value.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FormulaSource {
    TrivialK2,
    FormulaK3,
    FormulaK4,
    FormulaK5,
    GapZero,
    MaximalCard,
    DiscreteEndpoint,
}

impl fmt::Display for FormulaSource {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            FormulaSource::TrivialK2 => "trivial-k2",
            FormulaSource::FormulaK3 => "formula-k3",
            FormulaSource::FormulaK4 => "formula-k4",
            FormulaSource::FormulaK5 => "formula-k5",
            FormulaSource::GapZero => "gap-zero",
            FormulaSource::MaximalCard => "maximal-card",
            FormulaSource::DiscreteEndpoint => "discrete-endpoint",
        };
        f.write_str(s)
    }
}

/// A closed-form value together with its provenance.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FormulaResult {
    pub value: BigUint,
    pub source: FormulaSource,
    /// Whether the side conditions of the producing result held; values are
    /// only constructed when they do.
    pub hypotheses_met: bool,
}

impl FormulaResult {
    fn new(value: BigUint, source: FormulaSource) -> Self {
        Self {
            value,
            source,
            hypotheses_met: true,
        }
    }
}

fn validate(n: u64, m: u64) -> Result<u32> {
    if n < 1 {
        return Err(Error::InvalidArgs(format!("n must be at least 1, got {n}")));
    }
    if m < 2 {
        return Err(Error::InvalidArgs(format!("m must be at least 2, got {m}")));
    }
    u32::try_from(n).map_err(|_| Error::InvalidArgs(format!("n = {n} is too large")))
}

fn nonneg(v: BigInt, what: &str) -> BigUint {
    assert!(
        !v.is_negative(),
        "{what} evaluated to the negative value {v}"
    );
    v.to_biguint().expect("non-negative")
}

/// Number of fuzzy topologies with two open sets: always 1.
pub fn count_k2(n: u64, m: u64) -> Result<BigUint> {
    validate(n, m)?;
    Ok(BigUint::one())
}

/// Number of fuzzy topologies with three open sets: `m^n - 2`.
pub fn count_k3(n: u64, m: u64) -> Result<BigUint> {
    let e = validate(n, m)?;
    Ok(BigUint::from(m).pow(e) - 2u32)
}

/// Number of fuzzy topologies with four open sets.
pub fn count_k4(n: u64, m: u64) -> Result<BigUint> {
    let e = validate(n, m)?;
    let tri = BigInt::from(m) * BigInt::from(m + 1) / BigInt::from(2);
    let v = tri.pow(e) - 3 * BigInt::from(m).pow(e) + BigInt::from(2).pow(e - 1) + 2;
    Ok(nonneg(v, "four-open-set count"))
}

/// Number of fuzzy topologies with five open sets, as displayed above.
pub fn count_k5(n: u64, m: u64) -> Result<BigUint> {
    let e = validate(n, m)?;
    let c3 = BigInt::from(binomial(m + 2, 3));
    let c2 = BigInt::from(binomial(m + 1, 2));
    let v = c3.pow(e) - 4 * c2.pow(e) + BigInt::from(2 * m - 1).pow(e)
        + 5 * BigInt::from(m).pow(e)
        - BigInt::from(m - 1).pow(e)
        - BigInt::from(2).pow(e + 1);
    Ok(nonneg(v, "five-open-set count"))
}

/// Counts near the maximal cardinality, valid for `n >= m >= 2` and
/// `k` in `[m^n - m^(n-2), m^n]`.
///
/// Returns the gap value 0 strictly inside that range, `n(n-1)` at the
/// lower end, and 1 for the discrete topology at `k = m^n`.
pub fn maximal_results(n: u64, m: u64, k: u64) -> Result<FormulaResult> {
    let e = validate(n, m)?;
    if n < m {
        return Err(Error::HypothesisNotMet { n, m });
    }
    // n >= m >= 2 here, so n - 2 is well defined.
    let full = BigUint::from(m).pow(e);
    let lo = &full - BigUint::from(m).pow(e - 2);
    let k_big = BigUint::from(k);
    if k_big < lo || k_big > full {
        return Err(Error::InvalidArgs(format!(
            "k = {k} is outside the maximal-cardinality range [{lo}, {full}]"
        )));
    }
    let result = if k_big == full {
        FormulaResult::new(BigUint::one(), FormulaSource::DiscreteEndpoint)
    } else if k_big == lo {
        FormulaResult::new(
            BigUint::from(n) * BigUint::from(n - 1),
            FormulaSource::MaximalCard,
        )
    } else {
        FormulaResult::new(BigUint::zero(), FormulaSource::GapZero)
    };
    Ok(result)
}

/// Dispatches a `(n, m, k)` query to whichever closed form covers it.
///
/// `Err(NotCovered)` signals that only enumeration can answer. The discrete
/// endpoint `k = m^n` is covered for every `n, m`; the gap and
/// maximal-cardinality results additionally require `n >= m`.
pub fn formula_count(n: u64, m: u64, k: u64) -> Result<FormulaResult> {
    let e = validate(n, m)?;
    if k < 2 {
        return Err(Error::InvalidArgs(format!(
            "k must be at least 2, got {k}"
        )));
    }
    match k {
        2 => return Ok(FormulaResult::new(count_k2(n, m)?, FormulaSource::TrivialK2)),
        3 => return Ok(FormulaResult::new(count_k3(n, m)?, FormulaSource::FormulaK3)),
        4 => return Ok(FormulaResult::new(count_k4(n, m)?, FormulaSource::FormulaK4)),
        5 => return Ok(FormulaResult::new(count_k5(n, m)?, FormulaSource::FormulaK5)),
        _ => {}
    }
    let full = BigUint::from(m).pow(e);
    let k_big = BigUint::from(k);
    if k_big == full {
        // The whole lattice is the unique topology of maximal size,
        // independent of how n and m compare.
        return Ok(FormulaResult::new(
            BigUint::one(),
            FormulaSource::DiscreteEndpoint,
        ));
    }
    if n >= m {
        let lo = &full - BigUint::from(m).pow(e - 2);
        if k_big >= lo && k_big < full {
            return maximal_results(n, m, k);
        }
    }
    Err(Error::NotCovered { k })
}

/// True when [`formula_count`] covers the cell.
pub fn is_covered(n: u64, m: u64, k: u64) -> bool {
    formula_count(n, m, k).is_ok()
}

/// Convenience accessor for callers that only need small values.
pub fn to_u64(value: &BigUint) -> Option<u64> {
    value.to_u64()
}
