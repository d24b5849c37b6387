//! Compares the Iwanaga-Gorenstein condition with the tilting side:
//! whether DA is tilting on both sides and where the minima of tilt_n sit.
//!
//! Usage: `cargo run --example iwanaga [n]`

use tilting::cli::FamilyId;
use tilting::exactlin::Rational;
use tilting::gorenstein::iwanaga_check;
use tilting::quiver_algebra::BoundQuiverAlgebra;

fn main() -> tilting::Result<()> {
    let n: usize = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(2);
    for id in ["radsquare_a:2", "nakayama_a:3", "auslander_uniserial:3"] {
        let alg: BoundQuiverAlgebra<Rational> = id.parse::<FamilyId>()?.spec().build()?;
        let r = iwanaga_check(&alg, n)?;
        println!(
            "{id}: id A = {}, id A^op = {}, Gorenstein at {n}: {}, DA tilting both sides: {}, consistent: {}",
            r.id_left,
            r.id_right,
            r.iwanaga_gorenstein,
            r.dual_tilting_left && r.dual_tilting_right,
            r.consistent()
        );
    }
    Ok(())
}
