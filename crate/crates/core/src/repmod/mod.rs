//! Right modules over a bound quiver algebra, as quiver representations.

mod basic;
mod cover;
mod decompose;
mod hom;
mod json;
mod map;
pub mod random;
mod representation;
mod submodule;

pub use basic::BasicModule;
pub use cover::{
    component_offset, generator_position, injective_envelope, injective_sum, projective_cover,
    projective_map, projective_sum, socle_vertices, top_vertices, InjectiveEnvelope, ProjectiveCover,
};
pub use decompose::{
    basic, decompose, endomorphism_ring, find_isomorphism, indecomposable_summands, is_faithful,
    is_isomorphic, is_local, num_classes, trace_form_radical, DecompositionResult, EndomorphismRing,
};
pub use hom::{hom_basis, hom_dim, HomSpace};
pub use map::ModuleMap;
pub use representation::Representation;
pub use submodule::{
    close_under_arrows, cokernel, generated_by_vertices, generated_subspaces, image, image_subspaces,
    kernel, quotient, radical, radical_subspaces, socle, socle_subspaces, submodule, sum_of_images,
    top, total_dim,
};

/// `P(i)`.
pub fn projective<F: crate::exactlin::Field>(
    alg: &crate::quiver_algebra::BoundQuiverAlgebra<F>,
    i: usize,
) -> Representation<F> {
    Representation::projective(alg, i)
}

/// `I(i)`.
pub fn injective<F: crate::exactlin::Field>(
    alg: &crate::quiver_algebra::BoundQuiverAlgebra<F>,
    i: usize,
) -> Representation<F> {
    Representation::injective(alg, i)
}

/// `S(i)`.
pub fn simple<F: crate::exactlin::Field>(
    alg: &crate::quiver_algebra::BoundQuiverAlgebra<F>,
    i: usize,
) -> Representation<F> {
    Representation::simple(alg, i)
}

#[cfg(test)]
mod tests;
