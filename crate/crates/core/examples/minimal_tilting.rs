//! The minimum of tilt_n A assembled from the injective coresolution of A,
//! checked by the tilting verifier.
//!
//! Usage: `cargo run --example minimal_tilting [n]`

use tilting::cli::FamilyId;
use tilting::exactlin::Rational;
use tilting::gorenstein::{minimal_tilting, verify_tilting};
use tilting::quiver_algebra::BoundQuiverAlgebra;
use tilting::tilt_tau::is_minimal_in_tiltn;

fn main() -> tilting::Result<()> {
    let n: usize = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(3);
    let alg: BoundQuiverAlgebra<Rational> = format!("radsquare_a:{n}").parse::<FamilyId>()?.spec().build()?;
    for j in 1..=n {
        let t = minimal_tilting(&alg, j, false)?;
        let cert = verify_tilting(&t, j)?;
        println!(
            "T_{j} = {:?}: pd {}, tilting {}, minimal {}",
            t.dimvecs(),
            cert.pd,
            cert.is_tilting(),
            is_minimal_in_tiltn(&t, j)?
        );
    }
    Ok(())
}
