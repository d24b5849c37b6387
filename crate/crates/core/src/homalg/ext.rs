use crate::exactlin::{Field, Matrix};
use crate::repmod::{hom_dim, HomSpace, Representation};

use super::resolution::{min_inj_coresolution, min_proj_resolution, Resolution};

/// Matrix of `Hom(P_{k-1}, N) -> Hom(P_k, N)` in generator coordinates: a
/// homomorphism out of `P(w_1) + ... + P(w_m)` is the tuple of images of
/// the generators, a vector of `N_{w_1} + ... + N_{w_m}`.
fn hom_differential<F: Field>(res: &Resolution<F>, n: &Representation<F>, k: usize) -> Matrix<F> {
    let alg = n.algebra();
    let (src, tgt) = (&res.vertices[k], &res.vertices[k - 1]);
    let rows: usize = src.iter().map(|&v| n.dim_at(v)).sum();
    let cols: usize = tgt.iter().map(|&w| n.dim_at(w)).sum();
    let mut out = Matrix::zeros(rows, cols);
    let images = res.generator_images(k);
    let mut actions: Vec<Option<Matrix<F>>> = vec![None; alg.dim()];
    let mut r0 = 0;
    for (i, &v) in src.iter().enumerate() {
        let mut c0 = 0;
        for (j, &w) in tgt.iter().enumerate() {
            let mut block = Matrix::zeros(n.dim_at(v), n.dim_at(w));
            for (c, &b) in images[i][j].iter().zip(alg.block(w, v)) {
                if !c.is_zero() {
                    let act = actions[b].get_or_insert_with(|| n.basis_action(b));
                    block.add_scaled_assign(c, act);
                }
            }
            out.set_block(r0, c0, &block);
            c0 += n.dim_at(w);
        }
        r0 += n.dim_at(v);
    }
    out
}

fn hom_from_sum_dim<F: Field>(vertices: &[usize], n: &Representation<F>) -> usize {
    vertices.iter().map(|&v| n.dim_at(v)).sum()
}

/// `dim Ext^k(M, N)` as the cohomology of `Hom(P_*(M), N)`.
pub fn ext_dim<F: Field>(m: &Representation<F>, n: &Representation<F>, k: usize) -> usize {
    if k == 0 {
        return hom_dim(m, n);
    }
    let res = min_proj_resolution(m, k + 1);
    ext_dim_from(&res, n, k)
}

/// `dim Ext^k(M, N)` from an already computed projective resolution of `M`
/// with at least `k + 1` terms (fewer if it stopped at a zero syzygy).
pub fn ext_dim_from<F: Field>(res: &Resolution<F>, n: &Representation<F>, k: usize) -> usize {
    if k >= res.terms.len() {
        return 0;
    }
    let dim_k = hom_from_sum_dim(&res.vertices[k], n);
    if dim_k == 0 {
        return 0;
    }
    let rank_in = if k >= 1 { hom_differential(res, n, k).rank() } else { 0 };
    let rank_out = if k + 1 < res.terms.len() { hom_differential(res, n, k + 1).rank() } else { 0 };
    dim_k - rank_in - rank_out
}

/// `dim Ext^k(M, N)` as the cohomology of `Hom(M, I^*(N))`, with each hom
/// space solved directly. Independent of [`ext_dim`].
pub fn ext_dim_injective<F: Field>(m: &Representation<F>, n: &Representation<F>, k: usize) -> usize {
    let res = min_inj_coresolution(n, k + 1);
    if k >= res.terms.len() {
        return 0;
    }
    let spaces: Vec<HomSpace<F>> = res.terms.iter().take(k + 2).map(|t| HomSpace::compute(m, t)).collect();
    // rank of Hom(M, I^{j-1}) -> Hom(M, I^j), f -> d^j f
    let rank = |j: usize| -> usize {
        if j == 0 || j >= spaces.len() {
            return 0;
        }
        let d = &res.maps[j];
        let images: Vec<Vec<F>> = spaces[j - 1].basis().iter().map(|f| d.compose(f).flatten()).collect();
        crate::exactlin::Subspace::spanned_by(spaces[j].span().ambient(), &images).dim()
    };
    spaces[k].dim() - rank(k) - rank(k + 1)
}
