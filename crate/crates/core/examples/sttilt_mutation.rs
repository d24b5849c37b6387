//! Mutation of support tau-tilting pairs and the full mutation graph.
//!
//! Usage: `cargo run --example sttilt_mutation`

use tilting::cli::FamilyId;
use tilting::exactlin::Rational;
use tilting::quiver_algebra::BoundQuiverAlgebra;
use tilting::tilt_tau::{mutate_sttilt, sttilt_enumerate, SupportTauTiltingPair, DEFAULT_BUDGET};

fn main() -> tilting::Result<()> {
    let alg: BoundQuiverAlgebra<Rational> = "nakayama_a:3".parse::<FamilyId>()?.spec().build()?;
    let a = SupportTauTiltingPair::regular(&alg);
    println!("A = {:?}", a.m.dimvecs());
    for k in 0..a.len() {
        let b = mutate_sttilt(&a, k)?;
        println!("  mutate at {k}: {:?} | P{:?}", b.m.dimvecs(), b.p);
        let mut back = false;
        for j in 0..b.len() {
            back |= mutate_sttilt(&b, j)?.same_as(&a);
        }
        println!("    one mutation leads back: {back}");
    }
    let g = sttilt_enumerate(&alg, DEFAULT_BUDGET)?.canonicalize();
    println!("{} pairs, {} mutation edges", g.len(), g.edges.len());
    for i in 0..g.len() {
        println!("  {}", g.label(i));
    }
    Ok(())
}
