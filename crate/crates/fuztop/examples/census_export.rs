//! Build a census table over ranges of n, m and k and print it as CSV,
//! the same format the `fuztop table` subcommand exports.
//!
//! ```bash
//! cargo run -p fuztop --example census_export
//! ```

use fuztop::{build_table, EnumBudget, Result};

fn main() -> Result<()> {
    let rows = build_table(1..=2, 2..=4, 2..=6, &EnumBudget::default())?;
    println!("n,m,k,formula,enumeration,bitop_paper");
    for row in rows {
        let cell = |s: Option<String>| s.unwrap_or_default();
        println!(
            "{},{},{},{},{},{}",
            row.n,
            row.m,
            row.k,
            cell(row.formula.map(|v| v.to_string())),
            cell(row.enumeration.map(|v| v.to_string())),
            cell(row.bitop_paper.map(|v| v.to_string())),
        );
    }
    Ok(())
}
