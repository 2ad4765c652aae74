//! Sweep a grid of (n, m, k) cells and compare every covered closed form
//! against brute-force enumeration.
//!
//! The sweep is the point of this crate: it demonstrates agreement on most
//! cells and flags the known five-open-set divergence (for example
//! formula 14 versus enumeration 12 at n=2, m=3, k=5).
//!
//! ```bash
//! cargo run -p fuztop --example verify_sweep
//! ```

use fuztop::{run_verify, CellStatus, EnumBudget, Result};

fn main() -> Result<()> {
    let report = run_verify(3, 3, 6, &EnumBudget::default())?;
    for row in &report.rows {
        let formula = match (&row.formula, &row.source) {
            (Some(v), Some(s)) => format!("{v} [{s}]"),
            _ => "-".to_string(),
        };
        let enumerated = row
            .enumerated
            .map_or_else(|| "-".to_string(), |v| v.to_string());
        let verdict = match row.status {
            CellStatus::Match => "ok",
            CellStatus::Mismatch => "MISMATCH",
            CellStatus::SkippedNotCovered => "no closed form",
            CellStatus::SkippedBudget => "over budget",
        };
        println!(
            "n={} m={} k={}  formula={formula}  enumeration={enumerated}  {verdict}",
            row.n, row.m, row.k
        );
    }
    println!(
        "matched {} / mismatched {} / skipped {}",
        report.matches, report.mismatches, report.skipped
    );
    Ok(())
}
