//! ghorkit: a toolkit for dimer quivers on surfaces glued from polygons.
//!
//! The crate models the glued surface, parses and validates embedded dimer
//! quivers, enumerates their perfect matchings and the monomial labelings
//! those induce, decides path equality in the labeling quotient and bounded
//! equality under the dimer relations, certifies geodesic cycles at bounded
//! scale, computes cycle algebras with their Krull dimensions and bounded
//! centers, and builds and checks projective complexes of simple modules.

pub mod cycles;
pub mod dqif;
pub mod error;
pub mod geodesic;
pub mod lattice;
pub mod matchings;
pub mod modules;
pub mod paths;
pub mod quiver;
pub mod resolution;
pub mod rewrite;
pub mod surface;

pub use error::{Error, Result};
pub use quiver::DimerQuiver;
pub use surface::{make_surface, HomologyClass, PolygonSurface};
