//! For 1-Gorenstein A with projective-injective idempotent e, compares
//! tilt_1 A with the support tau-tilting modules of A/(e) via T -> T/T(e).
//!
//! Usage: `cargo run --release --example bijection`

use tilting::cli::FamilyId;
use tilting::exactlin::Rational;
use tilting::quiver_algebra::BoundQuiverAlgebra;
use tilting::tilt_tau::{bijection_check, DEFAULT_BUDGET};

fn main() -> tilting::Result<()> {
    for id in ["nakayama_a:3", "auslander_uniserial:3", "auslander_uniserial:4", "preprojective_a:2"] {
        let alg: BoundQuiverAlgebra<Rational> = id.parse::<FamilyId>()?.spec().build()?;
        let r = bijection_check(&alg, DEFAULT_BUDGET)?;
        println!("{id}: e at {:?}, factor dimension {}: {}", r.removed, r.factor_dim, r.summary());
    }
    Ok(())
}
