//! Exact computations with finite-dimensional bound quiver algebras.
//!
//! The crate builds `KQ/I` from a quiver with relations, works with right
//! modules as quiver representations, computes minimal (co)resolutions,
//! Ext groups and Auslander-Reiten translates, and enumerates tilting and
//! support tau-tilting modules by mutation.

pub mod cli;
pub mod error;
pub mod gorenstein;
pub mod exactlin;
pub mod homalg;
pub mod quiver_algebra;
pub mod repmod;
pub mod tilt_tau;

pub use error::{Error, Result};
