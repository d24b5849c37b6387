use crate::exactlin::{Field, Matrix, Subspace};

use super::{ModuleMap, Representation};

/// Submodule with the given (arrow-stable) subspace at each vertex,
/// together with its inclusion.
pub fn submodule<F: Field>(m: &Representation<F>, subs: &[Subspace<F>]) -> (Representation<F>, ModuleMap<F>) {
    let alg = m.algebra();
    let dims: Vec<usize> = subs.iter().map(Subspace::dim).collect();
    let bases: Vec<Matrix<F>> = subs.iter().map(Subspace::basis_matrix).collect();
    let maps = alg
        .quiver()
        .arrows()
        .iter()
        .enumerate()
        .map(|(a, arrow)| {
            let image = m.arrow_map(a).mul(&bases[arrow.source]);
            image.select_rows(subs[arrow.target].pivots())
        })
        .collect();
    let sub = Representation::new_unchecked(alg, dims, maps);
    let incl = ModuleMap::new_unchecked(&sub, m, bases);
    (sub, incl)
}

/// Quotient by the given (arrow-stable) subspaces, with the projection.
pub fn quotient<F: Field>(m: &Representation<F>, subs: &[Subspace<F>]) -> (Representation<F>, ModuleMap<F>) {
    let alg = m.algebra();
    let projs: Vec<Matrix<F>> = subs.iter().map(Subspace::quotient_map).collect();
    let lifts: Vec<Matrix<F>> = subs.iter().map(Subspace::complement_lift).collect();
    let dims: Vec<usize> = subs.iter().map(Subspace::codim).collect();
    let maps = alg
        .quiver()
        .arrows()
        .iter()
        .enumerate()
        .map(|(a, arrow)| projs[arrow.target].mul(m.arrow_map(a)).mul(&lifts[arrow.source]))
        .collect();
    let q = Representation::new_unchecked(alg, dims, maps);
    let proj = ModuleMap::new_unchecked(m, &q, projs);
    (q, proj)
}

pub fn kernel<F: Field>(f: &ModuleMap<F>) -> (Representation<F>, ModuleMap<F>) {
    let subs: Vec<Subspace<F>> = f.vertex_maps().iter().map(Subspace::kernel_of).collect();
    submodule(f.source(), &subs)
}

/// Image of `f` as a submodule of its target.
pub fn image<F: Field>(f: &ModuleMap<F>) -> (Representation<F>, ModuleMap<F>) {
    submodule(f.target(), &image_subspaces(f))
}

pub fn image_subspaces<F: Field>(f: &ModuleMap<F>) -> Vec<Subspace<F>> {
    f.vertex_maps().iter().map(Subspace::column_space).collect()
}

pub fn cokernel<F: Field>(f: &ModuleMap<F>) -> (Representation<F>, ModuleMap<F>) {
    quotient(f.target(), &image_subspaces(f))
}

/// `rad M`, the sum of the images of all arrows.
pub fn radical_subspaces<F: Field>(m: &Representation<F>) -> Vec<Subspace<F>> {
    let q = m.algebra().quiver();
    (0..q.num_vertices())
        .map(|v| {
            let vecs: Vec<Vec<F>> = q
                .arrows()
                .iter()
                .enumerate()
                .filter(|(_, arrow)| arrow.target == v)
                .flat_map(|(a, _)| m.arrow_map(a).columns())
                .collect();
            Subspace::spanned_by(m.dim_at(v), &vecs)
        })
        .collect()
}

/// `soc M`, the vectors killed by every arrow.
pub fn socle_subspaces<F: Field>(m: &Representation<F>) -> Vec<Subspace<F>> {
    let q = m.algebra().quiver();
    (0..q.num_vertices())
        .map(|v| {
            let mut stacked = Matrix::zeros(0, m.dim_at(v));
            for (a, arrow) in q.arrows().iter().enumerate() {
                if arrow.source == v {
                    stacked = stacked.vstack(m.arrow_map(a));
                }
            }
            Subspace::kernel_of(&stacked)
        })
        .collect()
}

pub fn radical<F: Field>(m: &Representation<F>) -> (Representation<F>, ModuleMap<F>) {
    submodule(m, &radical_subspaces(m))
}

pub fn socle<F: Field>(m: &Representation<F>) -> (Representation<F>, ModuleMap<F>) {
    submodule(m, &socle_subspaces(m))
}

pub fn top<F: Field>(m: &Representation<F>) -> (Representation<F>, ModuleMap<F>) {
    quotient(m, &radical_subspaces(m))
}

/// Smallest arrow-stable family of subspaces containing `start`.
pub fn close_under_arrows<F: Field>(m: &Representation<F>, mut subs: Vec<Subspace<F>>) -> Vec<Subspace<F>> {
    let q = m.algebra().quiver();
    let mut pending: Vec<usize> = (0..q.num_vertices()).filter(|&v| subs[v].dim() > 0).collect();
    while let Some(v) = pending.pop() {
        for (a, arrow) in q.arrows().iter().enumerate() {
            if arrow.source != v || m.dim_at(arrow.target) == 0 {
                continue;
            }
            let img = subs[v].image_under(m.arrow_map(a));
            let t = arrow.target;
            if !subs[t].contains_space(&img) {
                subs[t] = subs[t].sum(&img);
                if !pending.contains(&t) {
                    pending.push(t);
                }
            }
        }
    }
    subs
}

/// Submodule generated by vectors at given vertices.
pub fn generated_subspaces<F: Field>(m: &Representation<F>, gens: &[(usize, Vec<F>)]) -> Vec<Subspace<F>> {
    let nv = m.dims().len();
    let mut by_vertex: Vec<Vec<Vec<F>>> = vec![Vec::new(); nv];
    for (v, x) in gens {
        by_vertex[*v].push(x.clone());
    }
    let subs = (0..nv).map(|v| Subspace::spanned_by(m.dim_at(v), &by_vertex[v])).collect();
    close_under_arrows(m, subs)
}

/// `M(e)`: the submodule generated by the components of `M` at `vertices`.
pub fn generated_by_vertices<F: Field>(m: &Representation<F>, vertices: &[usize]) -> Vec<Subspace<F>> {
    let subs = (0..m.dims().len())
        .map(|v| if vertices.contains(&v) { Subspace::full(m.dim_at(v)) } else { Subspace::zero(m.dim_at(v)) })
        .collect();
    close_under_arrows(m, subs)
}

/// Sum of the images of the given maps into `m`.
pub fn sum_of_images<F: Field>(m: &Representation<F>, maps: &[ModuleMap<F>]) -> Vec<Subspace<F>> {
    (0..m.dims().len())
        .map(|v| {
            let vecs: Vec<Vec<F>> = maps.iter().flat_map(|f| f.at(v).columns()).collect();
            Subspace::spanned_by(m.dim_at(v), &vecs)
        })
        .collect()
}

pub fn total_dim<F: Field>(subs: &[Subspace<F>]) -> usize {
    subs.iter().map(Subspace::dim).sum()
}
