//! Minimal resolutions, Ext, and the Auslander-Reiten translates.

mod ext;
mod resolution;
mod translate;

pub use ext::{ext_dim, ext_dim_from, ext_dim_injective};
pub use resolution::{
    cosyzygy, inj_dim, min_inj_coresolution, min_proj_resolution, proj_dim, syzygy, HomDim, Resolution,
    ResolutionKind,
};
pub use translate::{
    dual, is_projective_indecomposable, noninjective_part, nonprojective_part, stable_hom_dim_injective,
    stable_hom_dim_projective, tau, tau_inverse, transpose,
};

#[cfg(test)]
mod tests;
