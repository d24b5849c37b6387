use crate::error::{Error, Result};
use crate::exactlin::Field;
use crate::gorenstein::AddCategory;
use crate::homalg::{is_projective_indecomposable, tau, transpose};
use crate::quiver_algebra::BoundQuiverAlgebra;
use crate::repmod::{
    cokernel, hom_basis, hom_dim, indecomposable_summands, projective, projective_sum, sum_of_images, top_vertices,
    total_dim, BasicModule, Representation,
};

/// `Hom(N, tau N) = 0`.
pub fn is_tau_rigid<F: Field>(n: &Representation<F>) -> bool {
    if n.is_zero() {
        return true;
    }
    let t = tau(n);
    t.is_zero() || hom_dim(n, &t) == 0
}

/// A support tau-tilting pair `(M, P)`. `P` is recorded by the vertices of
/// its indecomposable summands, sorted.
#[derive(Clone, Debug)]
pub struct SupportTauTiltingPair<F: Field> {
    pub m: BasicModule<F>,
    pub p: Vec<usize>,
}

impl<F: Field> SupportTauTiltingPair<F> {
    pub fn new(m: BasicModule<F>, mut p: Vec<usize>) -> Self {
        p.sort_unstable();
        p.dedup();
        SupportTauTiltingPair { m, p }
    }

    /// `(A, 0)`, the maximum.
    pub fn regular(alg: &BoundQuiverAlgebra<F>) -> Self {
        let parts = (0..alg.num_vertices()).map(|i| projective(alg, i)).collect();
        Self::new(BasicModule::from_indecomposables(alg, parts), Vec::new())
    }

    /// `(0, A)`, the minimum.
    pub fn zero(alg: &BoundQuiverAlgebra<F>) -> Self {
        Self::new(BasicModule::from_indecomposables(alg, Vec::new()), (0..alg.num_vertices()).collect())
    }

    pub fn algebra(&self) -> &BoundQuiverAlgebra<F> {
        self.m.algebra()
    }

    /// `|M| + |P|`.
    pub fn len(&self) -> usize {
        self.m.len() + self.p.len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn projective_part(&self) -> Representation<F> {
        projective_sum(self.algebra(), &self.p)
    }

    /// `M` is tau-rigid, `Hom(P, M) = 0`, and `|M| + |P|` is the number of vertices.
    pub fn satisfies_invariants(&self) -> bool {
        let m = self.m.module();
        self.len() == self.algebra().num_vertices()
            && self.p.iter().all(|&i| m.dim_at(i) == 0)
            && is_tau_rigid(&m)
    }

    pub fn same_as(&self, other: &Self) -> bool {
        self.p == other.p && self.m.same_as(&other.m)
    }

    /// `(M, P)^dagger = (Tr M_np + P^*, M_pr^*)` over the opposite algebra.
    pub fn dagger(&self) -> Self {
        let op = self.algebra().opposite();
        let mut parts: Vec<Representation<F>> = self.p.iter().map(|&i| projective(&op, i)).collect();
        let mut p = Vec::new();
        for x in self.m.summands() {
            if is_projective_indecomposable(x) {
                p.push(top_vertices(x)[0]);
            } else {
                parts.push(transpose(x));
            }
        }
        Self::new(BasicModule::from_indecomposables(&op, parts), p)
    }

    /// Index, in the dagger pair, of the summand matching summand `k` here.
    fn dagger_index(&self, dag: &Self, k: usize) -> Option<usize> {
        if k >= self.m.len() {
            let v = self.p[k - self.m.len()];
            return dag.m.position(&projective(dag.algebra(), v));
        }
        let x = &self.m.summands()[k];
        if is_projective_indecomposable(x) {
            let v = top_vertices(x)[0];
            dag.p.iter().position(|&w| w == v).map(|i| dag.m.len() + i)
        } else {
            dag.m.position(&transpose(x))
        }
    }
}

/// Mutation of a support tau-tilting pair at summand `k`: summands of `M`
/// come first in their stored order, then the vertices of `P`.
///
/// Left mutation is used when summand `k` of `M` is not generated by the
/// rest of `M`; otherwise, and at summands of `P`, the right mutation is
/// computed as a left mutation of the dagger pair over the opposite algebra.
pub fn mutate_sttilt<F: Field>(pair: &SupportTauTiltingPair<F>, k: usize) -> Result<SupportTauTiltingPair<F>> {
    if k >= pair.len() {
        return Err(Error::MalformedIndex { index: k, len: pair.len() });
    }
    if k < pair.m.len() {
        if let Some(res) = left_mutation(pair, k)? {
            return Ok(res);
        }
    }
    let dag = pair.dagger();
    let j = pair
        .dagger_index(&dag, k)
        .ok_or_else(|| Error::Invalid("summand has no partner in the dagger pair".into()))?;
    let res = left_mutation(&dag, j)?
        .ok_or_else(|| Error::Invalid("neither left nor right mutation applies".into()))?;
    Ok(res.dagger())
}

/// Left mutation at summand `k < |M|`, or `None` when that summand lies in
/// `Fac` of the others.
pub fn left_mutation<F: Field>(
    pair: &SupportTauTiltingPair<F>,
    k: usize,
) -> Result<Option<SupportTauTiltingPair<F>>> {
    let alg = pair.algebra();
    let x = &pair.m.summands()[k];
    let u = pair.m.without(k);
    let traced: Vec<_> = u.summands().iter().flat_map(|ui| hom_basis(ui, x)).collect();
    if total_dim(&sum_of_images(x, &traced)) == x.total_dim() {
        return Ok(None);
    }
    let approx = AddCategory::new(&u)?.left_approximation(x);
    let (y, _) = cokernel(&approx.map);
    if y.is_zero() {
        let v = new_support_vertex(alg, &u.module(), &pair.p)?;
        let mut p = pair.p.clone();
        p.push(v);
        return Ok(Some(SupportTauTiltingPair::new(u, p)));
    }
    let parts = indecomposable_summands(&y)?;
    let m = BasicModule::from_indecomposables(alg, u.summands().iter().cloned().chain(parts).collect());
    if m.len() != pair.m.len() {
        return Err(Error::Invalid("mutation cokernel is not a single new indecomposable".into()));
    }
    Ok(Some(SupportTauTiltingPair::new(m, pair.p.clone())))
}

/// The one vertex outside both the support of `u` and `p`.
pub(crate) fn new_support_vertex<F: Field>(
    alg: &BoundQuiverAlgebra<F>,
    u: &Representation<F>,
    p: &[usize],
) -> Result<usize> {
    let free: Vec<usize> = (0..alg.num_vertices()).filter(|&v| u.dim_at(v) == 0 && !p.contains(&v)).collect();
    match free.as_slice() {
        [v] => Ok(*v),
        _ => Err(Error::Invalid(format!("expected one vertex to leave the support, found {}", free.len()))),
    }
}
