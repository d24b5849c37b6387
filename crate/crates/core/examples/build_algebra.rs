//! Builds a bound quiver algebra from a quiver with relations, both directly
//! and from the plain-text specification format.
//!
//! Usage: `cargo run --example build_algebra`

use tilting::cli::parse_spec;
use tilting::exactlin::Rational;
use tilting::quiver_algebra::{build_algebra, BoundQuiverAlgebra, Quiver, RelationExpr, DEFAULT_CAP};

fn main() -> tilting::Result<()> {
    // 1 -a-> 2 -b-> 3 with ab = 0
    let q = Quiver::new(&["1", "2", "3"], &[("a", "1", "2"), ("b", "2", "3")])?;
    let rel = RelationExpr::parse_terms(&q, &[(1, "a*b")])?;
    let alg: BoundQuiverAlgebra<Rational> = build_algebra(&q, &[rel], DEFAULT_CAP)?;
    println!("dim = {}, Loewy length = {}", alg.dim(), alg.loewy_bound());
    for i in 0..alg.dim() {
        println!("  basis {i}: {}", alg.basis_label(i));
    }

    // a commutative square in text form
    let text = "field = Q
vertex 1
vertex 2
vertex 3
vertex 4
arrow a: 1 -> 2
arrow b: 2 -> 4
arrow c: 1 -> 3
arrow d: 3 -> 4
relation a*b - c*d
";
    let square: BoundQuiverAlgebra<Rational> = parse_spec(text)?.build()?;
    println!("commutative square: dim = {}", square.dim());
    let op = square.opposite();
    println!("opposite: dim = {}, flipped = {}", op.dim(), op.is_opposite());
    Ok(())
}
