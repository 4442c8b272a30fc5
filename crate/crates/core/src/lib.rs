//! Funk, Hilbert and Minkowski geometry on convex polytopes in dimensions 1-3.
//!
//! Modules:
//! - [`body`]: polytopes, polarity, sums, Macbeath regions, symmetrizations
//! - [`metrics`]: Funk/Hilbert/Minkowski distances, Finsler and metric balls
//! - [`measures`]: Holmes-Thompson and Busemann volumes and areas
//! - [`cover`]: expansions, nets, covering estimates, boundary diagnostics
//! - [`harness`]: named checks, duality sweeps, report emission

pub mod body;
pub mod config;
pub mod cover;
pub mod error;
pub mod harness;
pub mod measures;
pub mod metrics;

/// Points and vectors. Coordinates past the body dimension are zero.
pub type Pt = nalgebra::Vector3<f64>;

pub use body::{ConvexBody, Halfspace, Subspace, SymMode};
pub use error::{GeomError, Result};
