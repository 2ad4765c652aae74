//! Tour of the fuzzy-subset lattice: grade vectors, codes and the
//! pointwise operations.
//!
//! ```bash
//! cargo run -p fuztop --example lattice_tour
//! ```

use fuztop::{LatticeContext, Result};

fn main() -> Result<()> {
    // Two points, three grades: the chain {0, 1/2, 1} as ranks {0, 1, 2}.
    let ctx = LatticeContext::new(2, 3)?;
    println!(
        "lattice with n = {}, m = {}: {} fuzzy subsets",
        ctx.n(),
        ctx.m(),
        ctx.size()
    );

    for code in ctx.codes() {
        println!("  code {code} = {}", ctx.decode(code)?);
    }

    let a = ctx.encode(&[1, 2])?;
    let b = ctx.encode(&[2, 0])?;
    println!("a = {} (code {a})", ctx.decode(a)?);
    println!("b = {} (code {b})", ctx.decode(b)?);
    println!("meet(a, b) = {}", ctx.decode(ctx.meet(a, b)?)?);
    println!("join(a, b) = {}", ctx.decode(ctx.join(a, b)?)?);
    println!("a <= b: {}", ctx.leq(a, b)?);
    println!("bottom <= a: {}", ctx.leq(ctx.bottom(), a)?);

    // The grade flip t -> (m-1) - t turns the lattice upside down.
    println!("complement(a) = {}", ctx.decode(ctx.complement(a)?)?);

    Ok(())
}
