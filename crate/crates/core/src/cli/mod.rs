//! Algebra specifications, built-in families and the command-line front end.

pub mod commands;
pub mod families;
pub mod spec_text;

pub use families::{family_spec, FamilyId, FamilyName};
pub use spec_text::{parse_spec, AlgebraSpec, FieldSpec};
pub use commands::{execute, run, Cli, Outcome};
