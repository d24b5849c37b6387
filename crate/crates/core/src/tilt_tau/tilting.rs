use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::exactlin::Field;
use crate::gorenstein::{minimal_left_approximation, verify_tilting};
use crate::homalg::{ext_dim_from, min_proj_resolution, proj_dim};
use crate::quiver_algebra::BoundQuiverAlgebra;
use crate::repmod::{cokernel, indecomposable_summands, is_faithful, BasicModule};

use super::engine::sttilt_enumerate;
use super::graph::dimvec_string;

/// A basic tilting module with its projective dimension.
#[derive(Clone, Debug)]
pub struct TiltingRecord<F: Field> {
    pub module: BasicModule<F>,
    pub pd: usize,
}

impl<F: Field> TiltingRecord<F> {
    /// Certifies `t` at level `n`.
    pub fn certify(t: BasicModule<F>, n: usize) -> Result<Self> {
        let cert = verify_tilting(&t, n)?;
        match (&cert.failure, cert.pd.exact()) {
            (None, Some(pd)) => Ok(TiltingRecord { module: t, pd }),
            _ => Err(Error::Invalid(format!("not in tilt_{n}: {:?}", cert.failure))),
        }
    }

    pub fn summands(&self) -> Vec<Vec<usize>> {
        self.module.dimvecs()
    }

    pub fn label(&self) -> String {
        self.summands().iter().map(|d| dimvec_string(d)).collect::<Vec<_>>().join(" + ")
    }

    pub fn to_json(&self) -> Value {
        json!({ "summands": self.summands(), "pd": self.pd })
    }
}

/// Mutation of `t` at its summand `k` inside `tilt_n`: the summand `X` is
/// replaced by the cokernel of its minimal left `add(T/X)`-approximation.
/// `None` when that approximation is not injective or the cokernel has
/// projective dimension above `n`.
pub fn mutate_tilting<F: Field>(t: &BasicModule<F>, k: usize, n: usize) -> Result<Option<TiltingRecord<F>>> {
    if k >= t.len() {
        return Err(Error::MalformedIndex { index: k, len: t.len() });
    }
    let x = &t.summands()[k];
    let u = t.without(k);
    let f = minimal_left_approximation(x, &u)?;
    if !f.is_injective() {
        return Ok(None);
    }
    let (y, _) = cokernel(&f);
    if y.is_zero() || !proj_dim(&y, n).is_at_most(n) {
        return Ok(None);
    }
    let parts = indecomposable_summands(&y)?;
    let v = BasicModule::from_indecomposables(t.algebra(), u.summands().iter().cloned().chain(parts).collect());
    TiltingRecord::certify(v, n).map(Some)
}

/// `T >= U`: `Ext^k(T, U) = 0` for all `k >= 1`. `T` should have finite
/// projective dimension; the search for it stops at the algebra's dimension.
pub fn tilting_order_geq<F: Field>(t: &BasicModule<F>, u: &BasicModule<F>) -> bool {
    let tm = t.module();
    let bound = pd_search_bound(t.algebra());
    let res = min_proj_resolution(&tm, bound);
    let top = res.length().unwrap_or(bound);
    let um = u.module();
    (1..=top).all(|k| ext_dim_from(&res, &um, k) == 0)
}

fn pd_search_bound<F: Field>(alg: &BoundQuiverAlgebra<F>) -> usize {
    alg.dim().max(1)
}

/// Whether `t` (tilting, pd at most `n`) is minimal in `tilt_n`: no summand
/// `X` has an injective minimal left `add(T/X)`-approximation whose
/// cokernel has projective dimension at most `n`. Minimal elements are
/// the minimum when they exist.
pub fn is_minimal_in_tiltn<F: Field>(t: &BasicModule<F>, n: usize) -> Result<bool> {
    for k in 0..t.len() {
        let f = minimal_left_approximation(&t.summands()[k], &t.without(k))?;
        if f.is_injective() && proj_dim(&cokernel(&f).0, n).is_at_most(n) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Classical tilting modules found by [`tilt1_enumerate`].
#[derive(Clone, Debug)]
pub struct TiltEnumeration<F: Field> {
    pub records: Vec<TiltingRecord<F>>,
    /// False when the underlying support tau-tilting search ran out of budget.
    pub complete: bool,
}

/// `tilt_1 A` as the faithful support tau-tilting modules, each certified
/// by [`verify_tilting`] at level 1, in sorted order of dimension vectors.
pub fn tilt1_enumerate<F: Field>(alg: &BoundQuiverAlgebra<F>, budget: usize) -> Result<TiltEnumeration<F>> {
    let g = sttilt_enumerate(alg, budget)?;
    let mut records = Vec::new();
    for i in 0..g.len() {
        if !g.nodes[i].projectives.is_empty() {
            continue;
        }
        let m = g.basic(i);
        if is_faithful(&m.module()) {
            records.push(TiltingRecord::certify(m, 1)?);
        }
    }
    records.sort_by_key(|r| r.summands());
    Ok(TiltEnumeration { records, complete: g.complete })
}
