//! Minimal projective resolutions, injective coresolutions, Ext and the
//! Auslander-Reiten translate.
//!
//! Usage: `cargo run --example resolutions`

use tilting::cli::FamilyId;
use tilting::exactlin::Rational;
use tilting::homalg::{ext_dim, min_inj_coresolution, min_proj_resolution, tau, tau_inverse};
use tilting::quiver_algebra::BoundQuiverAlgebra;
use tilting::repmod::Representation;

fn main() -> tilting::Result<()> {
    let alg: BoundQuiverAlgebra<Rational> = "radsquare_a:2".parse::<FamilyId>()?.spec().build()?;
    for v in 0..alg.num_vertices() {
        let s = Representation::simple(&alg, v);
        let res = min_proj_resolution(&s, 5);
        println!("S({}): projective terms {:?}, pd {:?}", v + 1, res.vertices, res.length());
        let t = tau(&s);
        println!("  tau S({}) = {:?}, tau^-1 S({}) = {:?}", v + 1, t.dims(), v + 1, tau_inverse(&s).dims());
    }
    let a = Representation::regular(&alg);
    let co = min_inj_coresolution(&a, 5);
    println!("injective coresolution of A: {:?} (exact through {})", co.term_dims(), co.exact_through());
    let s1 = Representation::simple(&alg, 0);
    let s3 = Representation::simple(&alg, 2);
    for k in 0..=2 {
        println!("dim Ext^{k}(S(1), S(3)) = {}", ext_dim(&s1, &s3, k));
    }
    Ok(())
}
