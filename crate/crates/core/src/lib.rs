//! Triangulations of convex polygons, their flip-graphs, and exact checks of
//! eccentricity bounds.
//!
//! Vertices carry labels that survive vertex deletion. Diagonals are stored by
//! clockwise position, so relabelled copies of a triangulation share a
//! [`CanonicalKey`].

pub mod budget;
pub mod constructions;
mod error;
pub mod flip;
pub mod format;
pub mod metrics;
pub mod polygon;
pub mod verifier;

pub use budget::Budget;
pub use error::{Error, Result};
pub use flip::{build_slice, catalan, enumerate_all, FlipGraphSlice, FlipMove};
pub use format::{parse_diagonal_list, parse_diagonals, parse_json, parse_text, to_json, to_text};
pub use metrics::{
    diameter_radius, distance_upper_bound, eccentricity, flip_distance, DistanceResult,
    EccentricityResult,
};
pub use polygon::{
    crossing, oriented_length, validate_triangulation, CanonicalKey, Edge, EdgeKind, OrientedEdge,
    Polygon, Triangulation,
};
