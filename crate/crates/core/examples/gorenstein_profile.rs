//! Gorenstein profile of the built-in families: the injective coresolution
//! of A with projective dimensions, dominant dimension and n-Gorenstein
//! levels.
//!
//! Usage: `cargo run --example gorenstein_profile [family]`

use tilting::cli::FamilyId;
use tilting::exactlin::Rational;
use tilting::gorenstein::gorenstein_profile;
use tilting::quiver_algebra::BoundQuiverAlgebra;

fn main() -> tilting::Result<()> {
    let ids: Vec<String> = match std::env::args().nth(1) {
        Some(id) => vec![id],
        None => ["nakayama_a:3", "radsquare_a:2", "auslander_uniserial:3", "preprojective_a:2"]
            .map(String::from)
            .to_vec(),
    };
    for id in ids {
        let alg: BoundQuiverAlgebra<Rational> = id.parse::<FamilyId>()?.spec().build()?;
        let p = gorenstein_profile(&alg, 4, 8);
        println!("== {id}\n{}", p.table(&alg));
    }
    Ok(())
}
