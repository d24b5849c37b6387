//! Projectives, injectives, Hom spaces and Krull-Schmidt decomposition of a
//! random module.
//!
//! Usage: `cargo run --example modules [seed]`

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use tilting::cli::FamilyId;
use tilting::exactlin::Rational;
use tilting::quiver_algebra::BoundQuiverAlgebra;
use tilting::repmod::random::random_module;
use tilting::repmod::{decompose, hom_dim, is_faithful, Representation};

fn main() -> tilting::Result<()> {
    let seed = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(7);
    let alg: BoundQuiverAlgebra<Rational> = "auslander_uniserial:2".parse::<FamilyId>()?.spec().build()?;
    for v in 0..alg.num_vertices() {
        let p = Representation::projective(&alg, v);
        let i = Representation::injective(&alg, v);
        println!("P({}) = {:?}  I({}) = {:?}", v + 1, p.dims(), v + 1, i.dims());
    }
    let a = Representation::regular(&alg);
    println!("A faithful: {}", is_faithful(&a));

    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let m = random_module(&alg, &mut rng);
    println!("random module with dimension vector {:?}", m.dims());
    let d = decompose(&m)?;
    for (x, mult) in &d.summands {
        println!("  {:?} with multiplicity {mult}", x.dims());
    }
    println!("dim Hom(A, M) = {}", hom_dim(&a, &m));
    Ok(())
}
