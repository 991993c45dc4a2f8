//! Exact computation and cross-verification of higher-order (s,t)-Eulerian
//! numbers, generalized (s,t)-Ward numbers, the generalized Stirling
//! permutations they count, and the increasing trees and forests in
//! bijection with those permutations.
//!
//! Every value in this crate is exact: integers and rationals are
//! arbitrary precision, and triangles can also be built symbolically as
//! polynomials in the two indeterminates `s` and `t`.
//!
//! The main entry points are:
//!
//! - [`eulerian::eulerian_table`] and [`ward::ward_table`] for the triangles,
//! - [`stirlingperm::enumerate_sequences`] for exhaustive enumeration,
//! - [`trees::perm_to_tree`] / [`trees::seq_to_forest`] for the bijections,
//! - [`series`] for the truncated power-series machinery,
//! - [`verify`] for the cross-checking suites.

pub mod error;
pub mod eulerian;
pub mod numerics;
pub mod params;
pub mod series;
pub mod stirlingperm;
pub mod trees;
pub mod triangle;
pub mod verify;
pub mod ward;

pub use error::{Error, Result};
pub use numerics::{Coeff, ExactInt, ExactRat, PolyST};
pub use params::Params;
pub use triangle::{Triangle, TriangleKind};
