//! Extending a color palette with maximally distinct new colors.
//!
//! Given existing colors in CIELAB and a convex polyhedral gamut, the solvers
//! here place one or more new colors so that the smallest perceptual distance
//! (to the old colors and among the new ones) is as large as possible:
//!
//! * [`voronoi`]: exact one-color optimum under ΔE76 by enumerating vertices
//!   of the gamut-clipped Voronoi diagram, a ΔE00-selected variant, and
//!   greedy one-at-a-time extension;
//! * [`optimize`]: simultaneous placement by restarted simplex search on a
//!   slack formulation, Monte-Carlo sampling and charged-particle relaxation.
//!
//! Everything is generic over [`Scalar`] (`f32`, `f64`); the aliases below
//! fix `f64`, which the solvers' tolerances are tuned for.

// `!(x < y)` is used on purpose so that NaN takes the rejecting branch.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod color;
pub mod error;
pub mod geometry;
pub mod linalg;
pub mod optimize;
pub mod scalar;
pub mod solution;
pub mod voronoi;

pub use error::{Error, Result};
pub use scalar::Scalar;
pub use solution::{Method, Step};
pub use voronoi::{CandidateFilter, GreedyMode};

pub type LabColor = color::Lab<f64>;
pub type LabColor32 = color::Lab<f32>;
pub type Palette = color::Palette<f64>;
pub type DeltaE2000Weights = color::DeltaE2000Weights<f64>;
pub type Metric = color::Metric<f64>;
pub type Plane = geometry::Plane<f64>;
pub type Gamut = geometry::Gamut<f64>;
pub type CandidatePoint = voronoi::CandidatePoint<f64>;
pub type SolutionSet = solution::SolutionSet<f64>;
pub type SlackPoint = optimize::SlackPoint<f64>;
