use rand::Rng;

use crate::exactlin::{Field, Subspace};
use crate::quiver_algebra::BoundQuiverAlgebra;

use super::cover::projective_sum;
use super::submodule::{close_under_arrows, quotient};
use super::Representation;

fn random_vector<F: Field, R: Rng>(len: usize, rng: &mut R) -> Vec<F> {
    (0..len).map(|_| F::from_i64(rng.gen_range(-2..=2))).collect()
}

/// Quotient of a sum of one to three projectives by a submodule generated
/// by a few random elements.
pub fn random_quotient_of_projective<F: Field, R: Rng>(alg: &BoundQuiverAlgebra<F>, rng: &mut R) -> Representation<F> {
    let nv = alg.num_vertices();
    let k = rng.gen_range(1..=3);
    let vertices: Vec<usize> = (0..k).map(|_| rng.gen_range(0..nv)).collect();
    let p = projective_sum(alg, &vertices);
    let mut subs: Vec<Subspace<F>> = (0..nv).map(|v| Subspace::zero(p.dim_at(v))).collect();
    for _ in 0..rng.gen_range(0..=3) {
        let v = rng.gen_range(0..nv);
        if p.dim_at(v) == 0 {
            continue;
        }
        let x = random_vector(p.dim_at(v), rng);
        subs[v] = subs[v].sum(&Subspace::spanned_by(p.dim_at(v), &[x]));
    }
    let subs = close_under_arrows(&p, subs);
    quotient(&p, &subs).0
}

/// A random module: a quotient of projectives, the dual of such a module
/// over the opposite algebra, or a direct sum of two of these.
pub fn random_module<F: Field, R: Rng>(alg: &BoundQuiverAlgebra<F>, rng: &mut R) -> Representation<F> {
    let one = |rng: &mut R| {
        if rng.gen_bool(0.5) {
            random_quotient_of_projective(alg, rng)
        } else {
            random_quotient_of_projective(&alg.opposite(), rng).dual()
        }
    };
    let m = one(rng);
    if rng.gen_bool(0.25) {
        m.direct_sum(&one(rng))
    } else {
        m
    }
}
