//! Formula-versus-enumeration sweeps and census tables.

use std::ops::RangeInclusive;
use std::time::Instant;

use num_bigint::BigUint;
use num_traits::ToPrimitive;

use crate::bitopology::{pair_count_from_t, PairConvention};
use crate::closed_form::{formula_count, FormulaSource};
use crate::enumerate::{enumerate_topologies, EnumBudget};
use crate::error::{Error, Result};
use crate::lattice::LatticeContext;

/// Outcome of one `(n, m, k)` verification cell.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CellStatus {
    /// Formula and enumeration both ran and agree.
    Match,
    /// Both ran and disagree.
    Mismatch,
    /// No closed form covers the cell; nothing to compare.
    SkippedNotCovered,
    /// Enumeration was skipped because the cell exceeds the budget.
    SkippedBudget,
}

impl CellStatus {
    pub fn is_skip(self) -> bool {
        matches!(self, CellStatus::SkippedNotCovered | CellStatus::SkippedBudget)
    }
}

/// One verification row.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerifyRow {
    pub n: u64,
    pub m: u64,
    pub k: u64,
    pub formula: Option<BigUint>,
    pub source: Option<FormulaSource>,
    pub enumerated: Option<u64>,
    pub status: CellStatus,
    pub elapsed_ms: u128,
}

impl VerifyRow {
    /// True iff both values are present and equal.
    pub fn matched(&self) -> bool {
        self.status == CellStatus::Match
    }
}

/// A full sweep over a grid of `(n, m, k)` cells.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerificationReport {
    pub rows: Vec<VerifyRow>,
    pub matches: usize,
    pub mismatches: usize,
    pub skipped: usize,
}

impl VerificationReport {
    pub fn all_covered_cells_match(&self) -> bool {
        self.mismatches == 0
    }
}

/// Sweeps every cell with `n <= max_n`, `m <= max_m` and
/// `2 <= k <= min(max_k, m^n)`, comparing closed forms against brute-force
/// enumeration.
pub fn run_verify(
    max_n: u64,
    max_m: u64,
    max_k: u64,
    budget: &EnumBudget,
) -> Result<VerificationReport> {
    if max_n < 1 || max_m < 2 || max_k < 2 {
        return Err(Error::InvalidArgs(format!(
            "verification needs max_n >= 1, max_m >= 2, max_k >= 2; got ({max_n}, {max_m}, {max_k})"
        )));
    }
    let mut rows = Vec::new();
    for n in 1..=max_n {
        for m in 2..=max_m {
            let k_cap = lattice_size_capped(n, m, max_k);
            for k in 2..=k_cap {
                rows.push(verify_cell(n, m, k, budget));
            }
        }
    }
    let matches = rows.iter().filter(|r| r.status == CellStatus::Match).count();
    let mismatches = rows
        .iter()
        .filter(|r| r.status == CellStatus::Mismatch)
        .count();
    let skipped = rows.iter().filter(|r| r.status.is_skip()).count();
    Ok(VerificationReport {
        rows,
        matches,
        mismatches,
        skipped,
    })
}

/// `min(limit, m^n)` without overflowing.
fn lattice_size_capped(n: u64, m: u64, limit: u64) -> u64 {
    let mut size: u64 = 1;
    for _ in 0..n {
        size = match size.checked_mul(m) {
            Some(s) => s,
            None => return limit,
        };
        if size >= limit {
            return limit;
        }
    }
    size.min(limit)
}

fn verify_cell(n: u64, m: u64, k: u64, budget: &EnumBudget) -> VerifyRow {
    let start = Instant::now();
    let (formula, source) = match formula_count(n, m, k) {
        Ok(r) => (Some(r.value), Some(r.source)),
        Err(_) => (None, None),
    };
    // Without a closed form there is nothing to verify, so the (possibly
    // expensive) enumeration is not attempted.
    let enumerated = if formula.is_some() {
        LatticeContext::new(n, m)
            .and_then(|ctx| enumerate_topologies(&ctx, k, budget))
            .ok()
    } else {
        None
    };
    let status = match (&formula, &enumerated) {
        (Some(f), Some(e)) => {
            if *f == BigUint::from(*e) {
                CellStatus::Match
            } else {
                CellStatus::Mismatch
            }
        }
        (None, _) => CellStatus::SkippedNotCovered,
        (Some(_), None) => CellStatus::SkippedBudget,
    };
    VerifyRow {
        n,
        m,
        k,
        formula,
        source,
        enumerated,
        status,
        elapsed_ms: start.elapsed().as_millis(),
    }
}

/// One census-table row; `None` cells were not computed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TableRow {
    pub n: u64,
    pub m: u64,
    pub k: u64,
    pub formula: Option<BigUint>,
    pub enumeration: Option<u64>,
    /// Pair count under the unordered-with-repetition convention, derived
    /// from the formula value when covered, else from the enumeration.
    pub bitop_paper: Option<BigUint>,
}

/// Builds census rows over inclusive ranges, ordered by `n`, then `m`,
/// then `k`. Per lattice, `k` is additionally clipped to `[2, m^n]`.
pub fn build_table(
    n_range: RangeInclusive<u64>,
    m_range: RangeInclusive<u64>,
    k_range: RangeInclusive<u64>,
    budget: &EnumBudget,
) -> Result<Vec<TableRow>> {
    if n_range.is_empty() || m_range.is_empty() || k_range.is_empty() {
        return Err(Error::InvalidArgs("empty range".to_string()));
    }
    if *n_range.start() < 1 {
        return Err(Error::InvalidArgs("n range must start at 1 or above".to_string()));
    }
    if *m_range.start() < 2 {
        return Err(Error::InvalidArgs("m range must start at 2 or above".to_string()));
    }
    let mut rows = Vec::new();
    for n in n_range {
        for m in m_range.clone() {
            let k_lo = (*k_range.start()).max(2);
            let k_hi = lattice_size_capped(n, m, *k_range.end());
            for k in k_lo..=k_hi {
                let formula = formula_count(n, m, k).ok().map(|r| r.value);
                let enumeration = LatticeContext::new(n, m)
                    .and_then(|ctx| enumerate_topologies(&ctx, k, budget))
                    .ok();
                let t = formula
                    .clone()
                    .or_else(|| enumeration.map(BigUint::from));
                let bitop_paper =
                    t.map(|t| pair_count_from_t(&t, PairConvention::PaperUnorderedWithRepetition));
                rows.push(TableRow {
                    n,
                    m,
                    k,
                    formula,
                    enumeration,
                    bitop_paper,
                });
            }
        }
    }
    Ok(rows)
}

/// Lossless u64 view of a big value, for display convenience.
pub fn as_u64(value: &BigUint) -> Option<u64> {
    value.to_u64()
}
