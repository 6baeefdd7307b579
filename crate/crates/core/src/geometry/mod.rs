//! Polyhedral gamut, bisector planes and plane intersection.

mod gamut;
mod hull;
mod plane;

pub use gamut::Gamut;
pub use plane::{bisector_plane, intersect_three_planes, Plane, PlaneKind};
pub(crate) use plane::bisector_of_sites;
