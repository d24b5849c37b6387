use crate::error::{Error, Result};
use crate::exactlin::{Field, Matrix};

use super::Representation;

/// Module homomorphism, one `dims_target[v] x dims_source[v]` matrix per vertex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModuleMap<F: Field> {
    source: Representation<F>,
    target: Representation<F>,
    mats: Vec<Matrix<F>>,
}

impl<F: Field> ModuleMap<F> {
    /// Checks shapes and the intertwining condition.
    pub fn new(source: &Representation<F>, target: &Representation<F>, mats: Vec<Matrix<F>>) -> Result<Self> {
        if source.algebra() != target.algebra() {
            return Err(Error::AlgebraMismatch);
        }
        let nv = source.dims().len();
        if mats.len() != nv
            || (0..nv).any(|v| mats[v].shape() != (target.dim_at(v), source.dim_at(v)))
        {
            return Err(Error::Invalid("vertex maps have the wrong shape".into()));
        }
        let f = ModuleMap { source: source.clone(), target: target.clone(), mats };
        if !f.intertwines() {
            return Err(Error::Invalid("vertex maps do not commute with the arrows".into()));
        }
        Ok(f)
    }

    pub fn new_unchecked(source: &Representation<F>, target: &Representation<F>, mats: Vec<Matrix<F>>) -> Self {
        ModuleMap { source: source.clone(), target: target.clone(), mats }
    }

    pub fn zero(source: &Representation<F>, target: &Representation<F>) -> Self {
        let mats = (0..source.dims().len())
            .map(|v| Matrix::zeros(target.dim_at(v), source.dim_at(v)))
            .collect();
        ModuleMap { source: source.clone(), target: target.clone(), mats }
    }

    pub fn identity(m: &Representation<F>) -> Self {
        let mats = m.dims().iter().map(|&d| Matrix::identity(d)).collect();
        ModuleMap { source: m.clone(), target: m.clone(), mats }
    }

    pub fn source(&self) -> &Representation<F> {
        &self.source
    }

    pub fn target(&self) -> &Representation<F> {
        &self.target
    }

    pub fn at(&self, v: usize) -> &Matrix<F> {
        &self.mats[v]
    }

    pub fn vertex_maps(&self) -> &[Matrix<F>] {
        &self.mats
    }

    pub fn intertwines(&self) -> bool {
        let q = self.source.algebra().quiver();
        q.arrows().iter().enumerate().all(|(a, arrow)| {
            let lhs = self.target.arrow_map(a).mul(&self.mats[arrow.source]);
            let rhs = self.mats[arrow.target].mul(self.source.arrow_map(a));
            lhs == rhs
        })
    }

    /// `self` after `first`.
    pub fn compose(&self, first: &ModuleMap<F>) -> ModuleMap<F> {
        let mats = self.mats.iter().zip(&first.mats).map(|(g, f)| g.mul(f)).collect();
        ModuleMap { source: first.source.clone(), target: self.target.clone(), mats }
    }

    pub fn add(&self, other: &ModuleMap<F>) -> ModuleMap<F> {
        let mats = self.mats.iter().zip(&other.mats).map(|(a, b)| a.add(b)).collect();
        ModuleMap { source: self.source.clone(), target: self.target.clone(), mats }
    }

    pub fn scale(&self, c: &F) -> ModuleMap<F> {
        let mats = self.mats.iter().map(|a| a.scale(c)).collect();
        ModuleMap { source: self.source.clone(), target: self.target.clone(), mats }
    }

    /// `sum c_i f_i` for maps sharing source and target.
    pub fn linear_combination(source: &Representation<F>, target: &Representation<F>, terms: &[(F, &ModuleMap<F>)]) -> Self {
        let mut out = Self::zero(source, target);
        for (c, f) in terms {
            for (o, m) in out.mats.iter_mut().zip(&f.mats) {
                o.add_scaled_assign(c, m);
            }
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.mats.iter().all(Matrix::is_zero)
    }

    pub fn rank(&self) -> usize {
        self.mats.iter().map(Matrix::rank).sum()
    }

    pub fn is_injective(&self) -> bool {
        self.rank() == self.source.total_dim()
    }

    pub fn is_surjective(&self) -> bool {
        self.rank() == self.target.total_dim()
    }

    pub fn is_isomorphism(&self) -> bool {
        self.source.dims() == self.target.dims() && self.is_injective()
    }

    /// Inverse of an isomorphism.
    pub fn inverse(&self) -> Option<ModuleMap<F>> {
        let mats = self.mats.iter().map(Matrix::inverse).collect::<Option<Vec<_>>>()?;
        Some(ModuleMap { source: self.target.clone(), target: self.source.clone(), mats })
    }

    /// Transposed vertex maps: the map `D(target) -> D(source)`.
    pub fn dual(&self) -> ModuleMap<F> {
        ModuleMap {
            source: self.target.dual(),
            target: self.source.dual(),
            mats: self.mats.iter().map(Matrix::transpose).collect(),
        }
    }

    /// Concatenated vertex matrices, a vector of length `sum dims_t[v] dims_s[v]`.
    pub fn flatten(&self) -> Vec<F> {
        self.mats.iter().flat_map(|m| m.entries().iter().cloned()).collect()
    }

    /// Inverse of [`flatten`](Self::flatten).
    pub fn unflatten(source: &Representation<F>, target: &Representation<F>, v: &[F]) -> Self {
        let mut mats = Vec::with_capacity(source.dims().len());
        let mut off = 0;
        for u in 0..source.dims().len() {
            let (r, c) = (target.dim_at(u), source.dim_at(u));
            mats.push(Matrix::from_vec(r, c, v[off..off + r * c].to_vec()));
            off += r * c;
        }
        ModuleMap { source: source.clone(), target: target.clone(), mats }
    }

    /// Re-targets the map at an equal module held elsewhere (no check beyond shapes).
    pub fn with_ends(&self, source: &Representation<F>, target: &Representation<F>) -> Self {
        debug_assert_eq!(source.dims(), self.source.dims());
        debug_assert_eq!(target.dims(), self.target.dims());
        ModuleMap { source: source.clone(), target: target.clone(), mats: self.mats.clone() }
    }

    /// Map into a direct sum given by its components, stacked vertically.
    pub fn into_sum(source: &Representation<F>, target: &Representation<F>, parts: &[ModuleMap<F>]) -> Self {
        let mats = (0..source.dims().len())
            .map(|v| {
                let mut m = Matrix::zeros(0, source.dim_at(v));
                for p in parts {
                    m = m.vstack(p.at(v));
                }
                m
            })
            .collect();
        ModuleMap { source: source.clone(), target: target.clone(), mats }
    }

    /// Map out of a direct sum given by its components, stacked horizontally.
    pub fn from_sum(source: &Representation<F>, target: &Representation<F>, parts: &[ModuleMap<F>]) -> Self {
        let mats = (0..source.dims().len())
            .map(|v| {
                let mut m = Matrix::zeros(target.dim_at(v), 0);
                for p in parts {
                    m = m.hstack(p.at(v));
                }
                m
            })
            .collect();
        ModuleMap { source: source.clone(), target: target.clone(), mats }
    }
}
