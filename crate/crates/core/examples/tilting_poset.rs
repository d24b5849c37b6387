//! The poset tilt_n A explored by tilting mutation, with its Hasse diagram
//! written as DOT.
//!
//! Usage: `cargo run --example tilting_poset [family] [n]`

use tilting::cli::FamilyId;
use tilting::exactlin::Rational;
use tilting::quiver_algebra::BoundQuiverAlgebra;
use tilting::tilt_tau::{tiltn_enumerate, DEFAULT_BUDGET};

fn main() -> tilting::Result<()> {
    let mut args = std::env::args().skip(1);
    let id = args.next().unwrap_or_else(|| "nakayama_a:3".into());
    let n: usize = args.next().and_then(|s| s.parse().ok()).unwrap_or(1);
    let alg: BoundQuiverAlgebra<Rational> = id.parse::<FamilyId>()?.spec().build()?;
    let g = tiltn_enumerate(&alg, n, DEFAULT_BUDGET)?.canonicalize();
    for i in 0..g.len() {
        println!("{i}: {}", g.label(i));
    }
    println!("covers: {:?}", g.hasse());
    println!("partial order: {}, minimum: {:?}", g.order_is_partial(), g.minimum());
    println!("{}", g.to_dot());
    Ok(())
}
