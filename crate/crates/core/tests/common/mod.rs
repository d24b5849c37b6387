#![allow(dead_code)]

use rand::Rng;
use tilting::cli::FamilyId;
use tilting::exactlin::{Field, Matrix};
use tilting::gorenstein::verify_tilting;
use tilting::homalg::{ext_dim, nonprojective_part, stable_hom_dim_injective, tau, tau_inverse};
use tilting::quiver_algebra::BoundQuiverAlgebra;
use tilting::repmod::{
    cokernel, hom_basis, hom_dim, is_isomorphic, kernel, BasicModule, ModuleMap, Representation,
};

pub fn family<F: Field>(id: &str) -> BoundQuiverAlgebra<F> {
    id.parse::<FamilyId>().unwrap().spec().build().unwrap()
}

/// The thin module with a one-dimensional space at each vertex in `support`
/// and identity maps along arrows inside the support.
pub fn thin_module<F: Field>(alg: &BoundQuiverAlgebra<F>, support: &[usize]) -> Representation<F> {
    let dims: Vec<usize> = (0..alg.num_vertices()).map(|v| usize::from(support.contains(&v))).collect();
    let maps = alg
        .quiver()
        .arrows()
        .iter()
        .map(|a| {
            let (s, t) = (dims[a.source], dims[a.target]);
            if s == 1 && t == 1 {
                Matrix::identity(1)
            } else {
                Matrix::zeros(t, s)
            }
        })
        .collect();
    Representation::new(alg, dims, maps).unwrap()
}

/// Basic tilting modules over the linear quiver A_n found by brute force:
/// every n-element set of interval modules that is rigid and passes the
/// tilting verifier. Returned as sorted dimension vector lists.
pub fn interval_oracle<F: Field>(alg: &BoundQuiverAlgebra<F>) -> Vec<Vec<Vec<usize>>> {
    let n = alg.num_vertices();
    let intervals: Vec<Representation<F>> =
        (0..n).flat_map(|i| (i..n).map(move |j| (i..=j).collect::<Vec<_>>())).map(|s| thin_module(alg, &s)).collect();
    let m = intervals.len();
    let mut found = Vec::new();
    let mut pick: Vec<usize> = (0..n).collect();
    loop {
        let parts: Vec<Representation<F>> = pick.iter().map(|&i| intervals[i].clone()).collect();
        let rigid = parts.iter().all(|x| parts.iter().all(|y| ext_dim(x, y, 1) == 0));
        if rigid {
            let t = BasicModule::from_indecomposables(alg, parts);
            if verify_tilting(&t, 1).unwrap().is_tilting() {
                let mut d = t.dimvecs();
                d.sort();
                found.push(d);
            }
        }
        // next n-subset in lexicographic order
        let mut k = n;
        while k > 0 && pick[k - 1] == m - n + k - 1 {
            k -= 1;
        }
        if k == 0 {
            break;
        }
        pick[k - 1] += 1;
        for i in k..n {
            pick[i] = pick[i - 1] + 1;
        }
    }
    found.sort();
    found
}

fn random_hom<F: Field, R: Rng>(m: &Representation<F>, n: &Representation<F>, rng: &mut R) -> ModuleMap<F> {
    let basis = hom_basis(m, n);
    let coeffs: Vec<F> = basis.iter().map(|_| F::from_i64(rng.gen_range(-2..=2))).collect();
    let terms: Vec<(F, &ModuleMap<F>)> = coeffs.into_iter().zip(&basis).collect();
    ModuleMap::linear_combination(m, n, &terms)
}

/// Runs the homological checks on `m`, using `other` as a second module.
/// Returns a description of the first failure.
pub fn homological_checks<F: Field, R: Rng>(
    m: &Representation<F>,
    other: &Representation<F>,
    rng: &mut R,
) -> Result<(), String> {
    let alg = m.algebra();
    if !m.satisfies_relations() {
        return Err(format!("{:?} violates the relations", m.dims()));
    }
    for v in 0..alg.num_vertices() {
        let p = Representation::projective(alg, v);
        if hom_dim(&p, m) != m.dim_at(v) {
            return Err(format!("dim Hom(P({v}), M) differs from dim M_{v} for {:?}", m.dims()));
        }
        let i = Representation::injective(alg, v);
        if hom_dim(m, &i) != m.dim_at(v) {
            return Err(format!("dim Hom(M, I({v})) differs from dim M_{v} for {:?}", m.dims()));
        }
    }
    let f = random_hom(m, other, rng);
    let (k, _) = kernel(&f);
    let (c, _) = cokernel(&f);
    for v in 0..alg.num_vertices() {
        let r = f.at(v).rank();
        if k.dim_at(v) + r != m.dim_at(v) || c.dim_at(v) + r != other.dim_at(v) {
            return Err(format!("rank-nullity fails at vertex {v}"));
        }
    }
    let back = tau_inverse(&tau(m));
    let np = nonprojective_part(m).map_err(|e| e.to_string())?;
    if !is_isomorphic(&back, &np) {
        return Err(format!("tau^-1 tau M differs from the nonprojective part of {:?}", m.dims()));
    }
    let e = ext_dim(m, other, 1);
    let s = stable_hom_dim_injective(other, &tau(m));
    if e != s {
        return Err(format!("Ext^1 = {e} but stable Hom(N, tau M) = {s}"));
    }
    Ok(())
}
