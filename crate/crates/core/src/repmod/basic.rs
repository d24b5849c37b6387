use crate::error::Result;
use crate::exactlin::Field;
use crate::quiver_algebra::BoundQuiverAlgebra;

use super::decompose::{indecomposable_summands, is_isomorphic};
use super::Representation;

/// A basic module stored as its pairwise non-isomorphic indecomposable
/// summands, sorted by dimension vector.
#[derive(Clone, Debug)]
pub struct BasicModule<F: Field> {
    alg: BoundQuiverAlgebra<F>,
    summands: Vec<Representation<F>>,
}

impl<F: Field> BasicModule<F> {
    /// Indecomposable parts, deduplicated up to isomorphism. The caller
    /// guarantees that each part is indecomposable.
    pub fn from_indecomposables(alg: &BoundQuiverAlgebra<F>, parts: Vec<Representation<F>>) -> Self {
        let mut summands: Vec<Representation<F>> = Vec::new();
        for x in parts {
            if x.is_zero() {
                continue;
            }
            if !summands.iter().any(|y| is_isomorphic(y, &x)) {
                summands.push(x);
            }
        }
        summands.sort_by(|a, b| a.dims().cmp(b.dims()));
        BasicModule { alg: alg.clone(), summands }
    }

    /// Basic module with the same additive closure as `m`.
    pub fn from_module(m: &Representation<F>) -> Result<Self> {
        Ok(Self::from_indecomposables(m.algebra(), indecomposable_summands(m)?))
    }

    /// Additive closure of all the given modules.
    pub fn from_modules(alg: &BoundQuiverAlgebra<F>, ms: &[Representation<F>]) -> Result<Self> {
        let mut parts = Vec::new();
        for m in ms {
            parts.extend(indecomposable_summands(m)?);
        }
        Ok(Self::from_indecomposables(alg, parts))
    }

    pub fn algebra(&self) -> &BoundQuiverAlgebra<F> {
        &self.alg
    }

    pub fn summands(&self) -> &[Representation<F>] {
        &self.summands
    }

    /// Number of non-isomorphic indecomposable summands.
    pub fn len(&self) -> usize {
        self.summands.len()
    }

    pub fn is_empty(&self) -> bool {
        self.summands.is_empty()
    }

    pub fn module(&self) -> Representation<F> {
        Representation::direct_sum_all(&self.alg, &self.summands)
    }

    /// Sorted summand dimension vectors.
    pub fn dimvecs(&self) -> Vec<Vec<usize>> {
        self.summands.iter().map(|s| s.dims().to_vec()).collect()
    }

    /// Position of a summand isomorphic to the indecomposable `x`.
    pub fn position(&self, x: &Representation<F>) -> Option<usize> {
        self.summands.iter().position(|y| is_isomorphic(y, x))
    }

    pub fn contains(&self, x: &Representation<F>) -> bool {
        self.position(x).is_some()
    }

    /// Same additive closure.
    pub fn same_as(&self, other: &Self) -> bool {
        self.len() == other.len()
            && self.dimvecs() == other.dimvecs()
            && other.summands.iter().all(|x| self.contains(x))
    }

    /// Without the `i`-th summand.
    pub fn without(&self, i: usize) -> Self {
        let mut summands = self.summands.clone();
        summands.remove(i);
        BasicModule { alg: self.alg.clone(), summands }
    }

    /// With one more indecomposable summand.
    pub fn with(&self, x: Representation<F>) -> Self {
        let mut parts = self.summands.clone();
        parts.push(x);
        Self::from_indecomposables(&self.alg, parts)
    }
}
