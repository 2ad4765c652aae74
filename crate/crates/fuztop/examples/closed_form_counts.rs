//! Evaluate the closed-form counts in exact big-integer arithmetic,
//! including a value far beyond machine-word range, and the
//! near-maximal-cardinality results.
//!
//! ```bash
//! cargo run -p fuztop --example closed_form_counts
//! ```

use fuztop::{count_k3, count_k4, count_k5, formula_count, maximal_results, Result};

fn main() -> Result<()> {
    println!("counts by open sets, small lattices:");
    println!("  n m    k=3      k=4      k=5");
    for n in 1..=3u64 {
        for m in 2..=4u64 {
            println!(
                "  {n} {m}    {:>6}   {:>6}   {:>6}",
                count_k3(n, m)?,
                count_k4(n, m)?,
                count_k5(n, m)?
            );
        }
    }

    // Exact arithmetic keeps huge cells honest.
    println!();
    println!("count_k4(40, 25) = {}", count_k4(40, 25)?);

    // Near the top of the lattice: a gap, then n(n-1), then the discrete
    // topology. On three crisp points that is k = 6, 7, 8.
    println!();
    for k in 6..=8u64 {
        let r = maximal_results(3, 2, k)?;
        println!("maximal_results(3, 2, {k}) = {} [{}]", r.value, r.source);
    }

    // The dispatcher picks whichever result covers a cell and refuses when
    // none does.
    println!();
    for k in [2, 3, 4, 5, 6] {
        match formula_count(3, 3, k) {
            Ok(r) => println!("formula_count(3, 3, {k}) = {} [{}]", r.value, r.source),
            Err(e) => println!("formula_count(3, 3, {k}): {e}"),
        }
    }

    Ok(())
}
