//! Count fuzzy bitopological spaces under the three pairing conventions,
//! and check the pair formula against explicit pair enumeration.
//!
//! ```bash
//! cargo run -p fuztop --example bitopology_pairs
//! ```

use fuztop::{
    bitop_count, enumerate_pairs, CountMethod, EnumBudget, LatticeContext, PairConvention, Result,
};

fn main() -> Result<()> {
    let budget = EnumBudget::default();
    let conventions = [
        PairConvention::PaperUnorderedWithRepetition,
        PairConvention::Ordered,
        PairConvention::UnorderedDistinct,
    ];

    println!("pairs of four-open-set topologies on two points, three grades:");
    for convention in conventions {
        let r = bitop_count(2, 3, 4, convention, CountMethod::Formula, &budget)?;
        println!(
            "  convention {:<8} T = {}  pairs = {}",
            r.convention.to_string(),
            r.topology_count,
            r.pair_count
        );
    }

    // The counts agree with walking the pairs one by one.
    let ctx = LatticeContext::new(2, 3)?;
    for convention in conventions {
        let walked = enumerate_pairs(&ctx, 4, convention, &budget)?;
        println!("  walked {:<8} pairs = {walked}", convention.to_string());
    }

    Ok(())
}
