//! Enumerate fuzzy topologies by brute force: list the thirteen
//! four-open-set topologies on two points with three grades, then print the
//! full census of that lattice.
//!
//! ```bash
//! cargo run -p fuztop --example enumerate_topologies
//! ```

use fuztop::{
    enumerate_all_sizes, enumerate_topologies_into, EnumBudget, LatticeContext, Result,
};

fn main() -> Result<()> {
    let ctx = LatticeContext::new(2, 3)?;
    let budget = EnumBudget::default();

    println!("four-open-set topologies on the 3x3 lattice:");
    let count = enumerate_topologies_into(&ctx, 4, &budget, |family| {
        println!("  {family}");
    })?;
    println!("count: {count}");

    println!();
    println!("census of the whole lattice:");
    let census = enumerate_all_sizes(&ctx, &budget)?;
    for (k, count) in &census {
        println!("  k = {k}: {count}");
    }
    println!("total: {}", census.values().sum::<u64>());

    Ok(())
}
