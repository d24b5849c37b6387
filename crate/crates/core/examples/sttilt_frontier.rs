//! Support tau-tilting counts along the Auslander algebras of `K A_n`, with a
//! node budget for the infinite members.
//!
//! Usage: `cargo run --release --example sttilt_frontier -- [max_n] [budget]`

use std::time::Instant;

use tilting::cli::FamilyId;
use tilting::exactlin::Fp31;
use tilting::tilt_tau::sttilt_enumerate;

fn main() -> tilting::Result<()> {
    let args: Vec<String> = std::env::args().collect();
    let max_n: usize = args.get(1).and_then(|s| s.parse().ok()).unwrap_or(3);
    let budget: usize = args.get(2).and_then(|s| s.parse().ok()).unwrap_or(100_000);
    for n in args.get(3).and_then(|s| s.parse().ok()).unwrap_or(1)..=max_n {
        let id: FamilyId = format!("auslander_nakayama:{n}").parse()?;
        let alg = id.spec().build::<Fp31>()?;
        let start = Instant::now();
        let g = sttilt_enumerate(&alg, budget)?;
        let status = if g.complete { "complete" } else { "budget exceeded" };
        println!(
            "{id}: {} pairs, {} indecomposables, {status}, {:.1?}",
            g.len(),
            g.modules.len(),
            start.elapsed()
        );
    }
    Ok(())
}
