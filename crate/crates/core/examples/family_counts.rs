//! Counts of tilting and support tau-tilting modules for the built-in families.
//!
//! Usage: `cargo run --release --example family_counts`

use std::time::Instant;

use tilting::cli::FamilyId;
use tilting::exactlin::Rational;
use tilting::tilt_tau::{sttilt_enumerate, tilt1_enumerate, DEFAULT_BUDGET};

fn family(id: &str) -> tilting::Result<tilting::quiver_algebra::BoundQuiverAlgebra<Rational>> {
    id.parse::<FamilyId>()?.spec().build()
}

fn main() -> tilting::Result<()> {
    for n in 1..=4 {
        let start = Instant::now();
        let g = sttilt_enumerate(&family(&format!("nakayama_a:{n}"))?, DEFAULT_BUDGET)?;
        println!("#sttilt nakayama_a:{n} = {} ({:.1?})", g.len(), start.elapsed());
    }
    for n in 2..=4 {
        let start = Instant::now();
        let t = tilt1_enumerate(&family(&format!("auslander_uniserial:{n}"))?, DEFAULT_BUDGET)?;
        println!("#tilt_1 auslander_uniserial:{n} = {} ({:.1?})", t.records.len(), start.elapsed());
        let start = Instant::now();
        let g = sttilt_enumerate(&family(&format!("preprojective_a:{}", n - 1))?, DEFAULT_BUDGET)?;
        println!("#sttilt preprojective_a:{} = {} ({:.1?})", n - 1, g.len(), start.elapsed());
    }
    Ok(())
}
