use crate::error::{Error, Result};
use crate::exactlin::Field;
use crate::homalg::{ext_dim_from, min_inj_coresolution, min_proj_resolution, proj_dim, HomDim};
use crate::quiver_algebra::BoundQuiverAlgebra;
use crate::repmod::{cokernel, injective, BasicModule, ModuleMap, Representation};

use super::approx::AddCategory;

/// Basic representative of `I^0(A) + ... + I^{j-1}(A) + Omega^{-j} A`, the
/// minimum of `tilt_j A` when `pd I^i(A) <= j` for `i < j` and
/// `pd Omega^{-j} A <= j`. Those hypotheses are checked unless `force`.
pub fn minimal_tilting<F: Field>(alg: &BoundQuiverAlgebra<F>, j: usize, force: bool) -> Result<BasicModule<F>> {
    let lam = Representation::regular(alg);
    let res = min_inj_coresolution(&lam, j.saturating_sub(1));
    let mut vertices: Vec<usize> = res.vertices.iter().take(j).flatten().copied().collect();
    vertices.sort_unstable();
    vertices.dedup();
    let cosyz = if j == 0 {
        lam.clone()
    } else {
        res.syzygies.get(j).cloned().unwrap_or_else(|| Representation::zero(alg))
    };
    if !force {
        for (i, t) in res.terms.iter().take(j).enumerate() {
            let pd = proj_dim(t, j);
            if !pd.is_at_most(j) {
                return Err(Error::HypothesesFail(format!("pd I^{i}(A) = {pd} exceeds {j}")));
            }
        }
        let pd = proj_dim(&cosyz, j);
        if !pd.is_at_most(j) {
            return Err(Error::HypothesesFail(format!("pd of the {j}-th cosyzygy of A = {pd} exceeds {j}")));
        }
    }
    let mut parts: Vec<Representation<F>> = vertices.iter().map(|&v| injective(alg, v)).collect();
    parts.extend(crate::repmod::indecomposable_summands(&cosyz)?);
    Ok(BasicModule::from_indecomposables(alg, parts))
}

/// Which defining condition of a tilting module failed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum TiltingFailure {
    ProjectiveDimension(HomDim),
    ExtNonzero { degree: usize, dim: usize },
    /// The approximation at this step of the coresolution was not injective.
    NotInjective(usize),
    /// The coresolution did not end within `n + 1` terms.
    TooLong,
}

/// Result of [`verify_tilting`]: the coresolution `0 -> A -> T_0 -> ... -> T_m -> 0`
/// by `add T` when it exists, built from minimal left approximations.
#[derive(Clone, Debug)]
pub struct TiltingCertificate<F: Field> {
    pub pd: HomDim,
    /// `maps[0]: A -> T_0`, `maps[k]: T_{k-1} -> T_k`.
    pub maps: Vec<ModuleMap<F>>,
    /// Multiplicity of each summand of `T` in each `T_k`.
    pub multiplicities: Vec<Vec<usize>>,
    pub failure: Option<TiltingFailure>,
}

impl<F: Field> TiltingCertificate<F> {
    pub fn is_tilting(&self) -> bool {
        self.failure.is_none()
    }

    pub fn length(&self) -> usize {
        self.maps.len().saturating_sub(1)
    }
}

/// Checks that `t` is tilting with projective dimension at most `n`.
pub fn verify_tilting<F: Field>(t: &BasicModule<F>, n: usize) -> Result<TiltingCertificate<F>> {
    let m = t.module();
    let res = min_proj_resolution(&m, n);
    let pd = match res.length() {
        Some(d) => HomDim::Exact(d),
        None => HomDim::AtLeast(n + 1),
    };
    let mut cert = TiltingCertificate { pd, maps: Vec::new(), multiplicities: Vec::new(), failure: None };
    let Some(d) = pd.exact() else {
        cert.failure = Some(TiltingFailure::ProjectiveDimension(pd));
        return Ok(cert);
    };
    for k in 1..=d {
        let e = ext_dim_from(&res, &m, k);
        if e != 0 {
            cert.failure = Some(TiltingFailure::ExtNonzero { degree: k, dim: e });
            return Ok(cert);
        }
    }
    let cat = AddCategory::new(t)?;
    let mut x = Representation::regular(t.algebra());
    // T_{k-1} -> X_k, the projection onto the current cokernel
    let mut proj: Option<ModuleMap<F>> = None;
    for step in 0..=n {
        let approx = cat.left_approximation(&x);
        if !approx.map.is_injective() {
            cert.failure = Some(TiltingFailure::NotInjective(step));
            return Ok(cert);
        }
        let (next, next_proj) = cokernel(&approx.map);
        cert.maps.push(match &proj {
            None => approx.map.clone(),
            Some(p) => approx.map.compose(p),
        });
        cert.multiplicities.push(approx.multiplicities);
        if next.is_zero() {
            return Ok(cert);
        }
        x = next;
        proj = Some(next_proj);
    }
    cert.failure = Some(TiltingFailure::TooLong);
    Ok(cert)
}

/// Convenience wrapper around [`verify_tilting`].
pub fn is_tilting<F: Field>(t: &BasicModule<F>, n: usize) -> Result<bool> {
    Ok(verify_tilting(t, n)?.is_tilting())
}
