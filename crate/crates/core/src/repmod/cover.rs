use crate::exactlin::{Field, Matrix};
use crate::quiver_algebra::BoundQuiverAlgebra;

use super::submodule::radical_subspaces;
use super::{ModuleMap, Representation};

/// `P(v_1) + ... + P(v_k)` in the standard basis: at vertex `u` the
/// components come in order, each with the paths `v_j -> u` in block order.
pub fn projective_sum<F: Field>(alg: &BoundQuiverAlgebra<F>, vertices: &[usize]) -> Representation<F> {
    let parts: Vec<Representation<F>> = vertices.iter().map(|&v| Representation::projective(alg, v)).collect();
    Representation::direct_sum_all(alg, &parts)
}

/// `I(v_1) + ... + I(v_k)`, dual to [`projective_sum`] over the opposite algebra.
pub fn injective_sum<F: Field>(alg: &BoundQuiverAlgebra<F>, vertices: &[usize]) -> Representation<F> {
    projective_sum(&alg.opposite(), vertices).dual()
}

/// Offset of component `j` inside vertex `u` of a standard projective sum.
pub fn component_offset<F: Field>(alg: &BoundQuiverAlgebra<F>, vertices: &[usize], j: usize, u: usize) -> usize {
    vertices[..j].iter().map(|&v| alg.block_dim(v, u)).sum()
}

/// Position of the generator `e_{v_j}` of component `j`, inside vertex `v_j`.
pub fn generator_position<F: Field>(alg: &BoundQuiverAlgebra<F>, vertices: &[usize], j: usize) -> usize {
    let v = vertices[j];
    let e = alg
        .basis_index(&crate::quiver_algebra::Path::trivial(v))
        .expect("trivial path is a basis element");
    component_offset(alg, vertices, j, v) + alg.position_in_block(e)
}

/// The homomorphism `P(v_1) + ... + P(v_k) -> N` sending the `j`-th
/// generator to `images[j]`, a vector of `N` at vertex `v_j`.
pub fn projective_map<F: Field>(
    source: &Representation<F>,
    vertices: &[usize],
    target: &Representation<F>,
    images: &[Vec<F>],
) -> ModuleMap<F> {
    let alg = target.algebra();
    let nv = alg.num_vertices();
    let mut actions: Vec<Option<Matrix<F>>> = vec![None; alg.dim()];
    let mats = (0..nv)
        .map(|u| {
            let mut m = Matrix::zeros(target.dim_at(u), source.dim_at(u));
            let mut col = 0;
            for (j, &v) in vertices.iter().enumerate() {
                for &b in alg.block(v, u) {
                    let act = actions[b].get_or_insert_with(|| target.basis_action(b));
                    let image = act.mul_vec(&images[j]);
                    for (r, x) in image.into_iter().enumerate() {
                        m.set(r, col, x);
                    }
                    col += 1;
                }
            }
            m
        })
        .collect();
    ModuleMap::new_unchecked(source, target, mats)
}

/// Projective cover `P -> M` with the vertices of `P` and the chosen generators.
#[derive(Clone, Debug)]
pub struct ProjectiveCover<F: Field> {
    pub map: ModuleMap<F>,
    pub vertices: Vec<usize>,
    pub generators: Vec<Vec<F>>,
}

/// Generators complete `rad M` to a basis at each vertex.
pub fn projective_cover<F: Field>(m: &Representation<F>) -> ProjectiveCover<F> {
    let alg = m.algebra();
    let rad = radical_subspaces(m);
    let mut vertices = Vec::new();
    let mut generators = Vec::new();
    for (v, r) in rad.iter().enumerate() {
        for f in r.free_positions() {
            let mut g = vec![F::zero(); m.dim_at(v)];
            g[f] = F::one();
            vertices.push(v);
            generators.push(g);
        }
    }
    let p = projective_sum(alg, &vertices);
    let map = projective_map(&p, &vertices, m, &generators);
    ProjectiveCover { map, vertices, generators }
}

/// Injective envelope `M -> I` with the vertices of `I`.
#[derive(Clone, Debug)]
pub struct InjectiveEnvelope<F: Field> {
    pub map: ModuleMap<F>,
    pub vertices: Vec<usize>,
}

pub fn injective_envelope<F: Field>(m: &Representation<F>) -> InjectiveEnvelope<F> {
    let cover = projective_cover(&m.dual());
    InjectiveEnvelope { map: cover.map.dual(), vertices: cover.vertices }
}

/// Top of `M` as vertex multiplicities.
pub fn top_vertices<F: Field>(m: &Representation<F>) -> Vec<usize> {
    radical_subspaces(m)
        .iter()
        .enumerate()
        .flat_map(|(v, r)| std::iter::repeat_n(v, r.codim()))
        .collect()
}

/// Socle of `M` as vertex multiplicities.
pub fn socle_vertices<F: Field>(m: &Representation<F>) -> Vec<usize> {
    top_vertices(&m.dual())
}
