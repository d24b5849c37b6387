//! Support tau-tilting pairs and tilting modules: mutation, enumeration,
//! the tilting order, and the passage to the factor by projective-injectives.

mod bijection;
mod engine;
mod graph;
mod pairs;
mod tilting;

pub use bijection::{
    bijection_check, projective_injective_vertices, tensor_to_factor, tensor_to_factor_over, BijectionReport,
};
pub use engine::{sttilt_enumerate, sttilt_enumerate_with, tiltn_enumerate, SearchOptions, DEFAULT_BUDGET};
pub use graph::{GraphKind, GraphNode, MutationEdge, MutationGraph};
pub use pairs::{is_tau_rigid, left_mutation, mutate_sttilt, SupportTauTiltingPair};
pub use tilting::{
    is_minimal_in_tiltn, mutate_tilting, tilt1_enumerate, tilting_order_geq, TiltEnumeration, TiltingRecord,
};

#[cfg(test)]
mod tests;
