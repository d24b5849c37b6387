use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::exactlin::Field;
use crate::gorenstein::gorenstein_profile;
use crate::quiver_algebra::{quotient_by_idempotent, BoundQuiverAlgebra};
use crate::repmod::{
    generated_by_vertices, injective, is_faithful, is_isomorphic, projective, projective_sum, quotient,
    socle_vertices, BasicModule, Representation,
};

use super::engine::sttilt_enumerate;
use super::graph::dimvec_string;
use super::tilting::tilt1_enumerate;

/// `T / T(e)` as a module over `A / (e)`, where `T(e)` is the submodule
/// generated by the components of `T` at `removed`.
pub fn tensor_to_factor<F: Field>(t: &Representation<F>, removed: &[usize]) -> Result<Representation<F>> {
    let gamma = quotient_by_idempotent(t.algebra(), removed)?;
    Ok(tensor_to_factor_over(t, removed, &gamma))
}

/// [`tensor_to_factor`] with the factor algebra already built.
pub fn tensor_to_factor_over<F: Field>(
    t: &Representation<F>,
    removed: &[usize],
    gamma: &BoundQuiverAlgebra<F>,
) -> Representation<F> {
    let alg = t.algebra();
    let (q, _) = quotient(t, &generated_by_vertices(t, removed));
    let kept = alg.kept_vertices(removed);
    let dims: Vec<usize> = kept.iter().map(|&v| q.dim_at(v)).collect();
    let maps = gamma
        .quiver()
        .arrows()
        .iter()
        .map(|a| {
            let orig = alg.quiver().arrow_index(&a.label).expect("arrow of the factor quiver");
            q.arrow_map(orig).clone()
        })
        .collect();
    Representation::new_unchecked(gamma, dims, maps)
}

/// Vertices `i` with `P(i)` injective.
pub fn projective_injective_vertices<F: Field>(alg: &BoundQuiverAlgebra<F>) -> Vec<usize> {
    (0..alg.num_vertices())
        .filter(|&i| {
            let p = projective(alg, i);
            match socle_vertices(&p).as_slice() {
                [j] => is_isomorphic(&p, &injective(alg, *j)),
                _ => false,
            }
        })
        .collect()
}

/// Outcome of [`bijection_check`].
#[derive(Clone, Debug)]
pub struct BijectionReport {
    /// Vertices of the projective-injective summands of `A`.
    pub removed: Vec<usize>,
    /// All projectives are injective, so the factor algebra is zero.
    pub degenerate: bool,
    /// `eA` is faithful.
    pub faithful: bool,
    pub factor_dim: usize,
    pub tilt: Vec<String>,
    pub sttilt: Vec<String>,
    /// Index in `sttilt` of the image of each element of `tilt`.
    pub images: Vec<Option<usize>>,
}

impl BijectionReport {
    pub fn injective(&self) -> bool {
        let mut hit: Vec<usize> = self.images.iter().flatten().copied().collect();
        let n = hit.len();
        hit.sort_unstable();
        hit.dedup();
        n == self.images.len() && hit.len() == n
    }

    pub fn surjective(&self) -> bool {
        (0..self.sttilt.len()).all(|j| self.images.contains(&Some(j)))
    }

    pub fn is_bijection(&self) -> bool {
        self.faithful && self.injective() && self.surjective()
    }

    pub fn summary(&self) -> String {
        format!(
            "{} <-> {}: {}",
            self.tilt.len(),
            self.sttilt.len(),
            if self.is_bijection() { "bijection" } else { "not a bijection" }
        )
    }

    pub fn to_json(&self) -> Value {
        json!({
            "removed": self.removed,
            "degenerate": self.degenerate,
            "faithful": self.faithful,
            "factor_dim": self.factor_dim,
            "tilt_count": self.tilt.len(),
            "sttilt_count": self.sttilt.len(),
            "pairs": self.tilt.iter().zip(&self.images).map(|(t, j)| json!({
                "tilting": t,
                "image": j.map(|j| self.sttilt[j].clone()),
            })).collect::<Vec<_>>(),
            "injective": self.injective(),
            "surjective": self.surjective(),
            "bijection": self.is_bijection(),
        })
    }
}

fn label<F: Field>(m: &BasicModule<F>) -> String {
    if m.is_empty() {
        return "0".into();
    }
    m.dimvecs().iter().map(|d| dimvec_string(d)).collect::<Vec<_>>().join(" + ")
}

/// Checks that `T -> T / T(e)` maps `tilt_1 A` bijectively onto the
/// support tau-tilting modules over `A / (e)`, for `A` 1-Gorenstein and
/// `eA` the basic projective-injective module.
pub fn bijection_check<F: Field>(alg: &BoundQuiverAlgebra<F>, budget: usize) -> Result<BijectionReport> {
    if !gorenstein_profile(alg, 1, 1).is_n_gorenstein(1) {
        return Err(Error::NotOneGorenstein("the injective envelope of A is not projective".into()));
    }
    let removed = projective_injective_vertices(alg);
    let faithful = is_faithful(&projective_sum(alg, &removed));
    if removed.len() == alg.num_vertices() {
        // self-injective: tilt_1 A = {A}, and the zero algebra has only the zero pair
        let lam = BasicModule::from_indecomposables(alg, (0..alg.num_vertices()).map(|i| projective(alg, i)).collect());
        return Ok(BijectionReport {
            removed,
            degenerate: true,
            faithful,
            factor_dim: 0,
            tilt: vec![label(&lam)],
            sttilt: vec!["0".into()],
            images: vec![Some(0)],
        });
    }
    let gamma = quotient_by_idempotent(alg, &removed)?;
    let tilts = tilt1_enumerate(alg, budget)?;
    let st = sttilt_enumerate(&gamma, budget)?.canonicalize();
    if !tilts.complete || !st.complete {
        return Err(Error::IncompleteEnumeration(budget));
    }
    let targets: Vec<BasicModule<F>> = (0..st.len()).map(|j| st.basic(j)).collect();
    let mut images = Vec::new();
    for r in &tilts.records {
        let image = BasicModule::from_module(&tensor_to_factor_over(&r.module.module(), &removed, &gamma))?;
        images.push(targets.iter().position(|t| t.same_as(&image)));
    }
    Ok(BijectionReport {
        removed,
        degenerate: false,
        faithful,
        factor_dim: gamma.dim(),
        tilt: tilts.records.iter().map(|r| r.label()).collect(),
        sttilt: (0..st.len()).map(|j| st.label(j)).collect(),
        images,
    })
}
