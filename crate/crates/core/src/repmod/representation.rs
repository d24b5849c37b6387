use std::fmt;

use crate::error::{Error, Result};
use crate::exactlin::{Field, Matrix};
use crate::quiver_algebra::BoundQuiverAlgebra;

/// Finite-dimensional right module given as a quiver representation.
///
/// The arrow `a: s -> t` acts by a `dims[t] x dims[s]` matrix, so the
/// basis path `a1*...*ak` acts by `A_ak ... A_a1`.
#[derive(Clone, PartialEq, Eq)]
pub struct Representation<F: Field> {
    alg: BoundQuiverAlgebra<F>,
    dims: Vec<usize>,
    maps: Vec<Matrix<F>>,
}

impl<F: Field> fmt::Debug for Representation<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Representation{:?}", self.dims)
    }
}

impl<F: Field> Representation<F> {
    /// Checks shapes and every relation of the algebra.
    pub fn new(alg: &BoundQuiverAlgebra<F>, dims: Vec<usize>, maps: Vec<Matrix<F>>) -> Result<Self> {
        let q = alg.quiver();
        if dims.len() != q.num_vertices() || maps.len() != q.num_arrows() {
            return Err(Error::Invalid("dimension vector or arrow list has the wrong length".into()));
        }
        for (a, m) in q.arrows().iter().zip(&maps) {
            if m.shape() != (dims[a.target], dims[a.source]) {
                return Err(Error::Invalid(format!("arrow `{}` has a matrix of the wrong shape", a.label)));
            }
        }
        let rep = Representation { alg: alg.clone(), dims, maps };
        if !rep.satisfies_relations() {
            return Err(Error::Invalid("representation violates a relation".into()));
        }
        Ok(rep)
    }

    /// Skips the relation check; shapes are still asserted in debug builds.
    pub fn new_unchecked(alg: &BoundQuiverAlgebra<F>, dims: Vec<usize>, maps: Vec<Matrix<F>>) -> Self {
        debug_assert!(alg
            .quiver()
            .arrows()
            .iter()
            .zip(&maps)
            .all(|(a, m)| m.shape() == (dims[a.target], dims[a.source])));
        Representation { alg: alg.clone(), dims, maps }
    }

    pub fn zero(alg: &BoundQuiverAlgebra<F>) -> Self {
        let dims = vec![0; alg.num_vertices()];
        let maps = vec![Matrix::zeros(0, 0); alg.num_arrows()];
        Representation { alg: alg.clone(), dims, maps }
    }

    pub fn algebra(&self) -> &BoundQuiverAlgebra<F> {
        &self.alg
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    pub fn dim_at(&self, v: usize) -> usize {
        self.dims[v]
    }

    pub fn total_dim(&self) -> usize {
        self.dims.iter().sum()
    }

    pub fn is_zero(&self) -> bool {
        self.dims.iter().all(|&d| d == 0)
    }

    pub fn arrow_map(&self, a: usize) -> &Matrix<F> {
        &self.maps[a]
    }

    pub fn arrow_maps(&self) -> &[Matrix<F>] {
        &self.maps
    }

    /// Vertices with nonzero dimension.
    pub fn support(&self) -> Vec<usize> {
        (0..self.dims.len()).filter(|&v| self.dims[v] > 0).collect()
    }

    /// Action of the path `arrows` starting at `source`.
    pub fn path_action(&self, source: usize, arrows: &[usize]) -> Matrix<F> {
        let mut m = Matrix::identity(self.dims[source]);
        for &a in arrows {
            m = self.maps[a].mul(&m);
        }
        m
    }

    /// Action of basis element `b` of the algebra.
    pub fn basis_action(&self, b: usize) -> Matrix<F> {
        let p = self.alg.basis_path(b);
        self.path_action(p.source, &p.arrows)
    }

    pub fn satisfies_relations(&self) -> bool {
        let q = self.alg.quiver();
        self.alg.relations().iter().all(|r| {
            let Some((s, t)) = q.path_endpoints(&r.terms[0].1) else { return false };
            let mut acc = Matrix::zeros(self.dims[t], self.dims[s]);
            for (c, p) in &r.terms {
                acc.add_scaled_assign(&F::from_i64(*c), &self.path_action(s, p));
            }
            acc.is_zero()
        })
    }

    pub fn direct_sum(&self, other: &Self) -> Self {
        Self::direct_sum_all(&self.alg, &[self.clone(), other.clone()])
    }

    pub fn direct_sum_all(alg: &BoundQuiverAlgebra<F>, parts: &[Self]) -> Self {
        let nv = alg.num_vertices();
        let dims: Vec<usize> = (0..nv).map(|v| parts.iter().map(|p| p.dims[v]).sum()).collect();
        let maps = (0..alg.num_arrows())
            .map(|a| Matrix::block_diagonal(&parts.iter().map(|p| p.maps[a].clone()).collect::<Vec<_>>()))
            .collect();
        Representation { alg: alg.clone(), dims, maps }
    }

    /// `M^k`.
    pub fn power(&self, k: usize) -> Self {
        Self::direct_sum_all(&self.alg, &vec![self.clone(); k])
    }

    /// Simple module at `v`.
    pub fn simple(alg: &BoundQuiverAlgebra<F>, v: usize) -> Self {
        let mut dims = vec![0; alg.num_vertices()];
        dims[v] = 1;
        let maps = alg
            .quiver()
            .arrows()
            .iter()
            .map(|a| Matrix::zeros(dims[a.target], dims[a.source]))
            .collect();
        Representation { alg: alg.clone(), dims, maps }
    }

    /// Indecomposable projective `e_v A`, with basis the paths starting at `v`.
    pub fn projective(alg: &BoundQuiverAlgebra<F>, v: usize) -> Self {
        let nv = alg.num_vertices();
        let dims: Vec<usize> = (0..nv).map(|u| alg.block_dim(v, u)).collect();
        let maps = alg
            .quiver()
            .arrows()
            .iter()
            .enumerate()
            .map(|(a, arrow)| {
                let (s, t) = (arrow.source, arrow.target);
                let mut m = Matrix::zeros(dims[t], dims[s]);
                for (col, &b) in alg.block(v, s).iter().enumerate() {
                    for (k, c) in alg.times_arrow(b, a) {
                        m.set(alg.position_in_block(*k), col, c.clone());
                    }
                }
                m
            })
            .collect();
        Representation { alg: alg.clone(), dims, maps }
    }

    /// Indecomposable injective `D(A e_v)`.
    pub fn injective(alg: &BoundQuiverAlgebra<F>, v: usize) -> Self {
        Self::projective(&alg.opposite(), v).dual()
    }

    /// The regular module `A_A`.
    pub fn regular(alg: &BoundQuiverAlgebra<F>) -> Self {
        let parts: Vec<Self> = (0..alg.num_vertices()).map(|v| Self::projective(alg, v)).collect();
        Self::direct_sum_all(alg, &parts)
    }

    /// `D A`, the sum of all indecomposable injectives.
    pub fn dual_regular(alg: &BoundQuiverAlgebra<F>) -> Self {
        let parts: Vec<Self> = (0..alg.num_vertices()).map(|v| Self::injective(alg, v)).collect();
        Self::direct_sum_all(alg, &parts)
    }

    /// `Hom_K(M, K)` as a module over the opposite algebra.
    pub fn dual(&self) -> Self {
        Representation {
            alg: self.alg.opposite(),
            dims: self.dims.clone(),
            maps: self.maps.iter().map(Matrix::transpose).collect(),
        }
    }

    /// Same vector spaces and maps, re-read over an algebra with the same quiver.
    pub fn over(&self, alg: &BoundQuiverAlgebra<F>) -> Self {
        Representation { alg: alg.clone(), dims: self.dims.clone(), maps: self.maps.clone() }
    }

    /// Offset of vertex `v` in the concatenated space `M_0 + M_1 + ...`.
    pub fn offset(&self, v: usize) -> usize {
        self.dims[..v].iter().sum()
    }
}
