//! Gorenstein profile of an algebra, minimum tilting modules and their verification.

mod approx;
mod iwanaga;
mod profile;
mod tilting;

pub use approx::{minimal_left_approximation, minimal_right_approximation, AddCategory, Approximation};
pub use iwanaga::{iwanaga_check, IwanagaReport};
pub use profile::{dominant_dimension, gorenstein_profile, GorensteinProfile, ProfileDegree};
pub use tilting::{is_tilting, minimal_tilting, verify_tilting, TiltingCertificate, TiltingFailure};
