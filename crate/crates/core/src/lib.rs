//! Exact incidence geometry over ℚ, quadratic fields and the quaternions.
//!
//! The crate checks Sylvester–Gallai configurations and their duals, computes
//! simplex measures in hyperplane arrangements (with the Study determinant
//! over ℍ), extracts the α-coefficient systems attached to a minimal simplex,
//! and constructs the extremal configurations: the Hesse configuration, the
//! skew triangular lattice, the Eisenstein arrangement and the dodecahedral
//! quaternion system.
//!
//! Every verdict is decided in exact arithmetic.  The binary64 helpers in
//! [`scalars::float`] only drive the sampling harness in [`lemmas`].

pub mod cli;
pub mod error;
pub mod extremal;
pub mod lemmas;
pub mod linalg;
pub mod projective;
pub mod minsimplex;
pub mod scalars;
pub mod sg_core;

pub use error::{Error, Result};
