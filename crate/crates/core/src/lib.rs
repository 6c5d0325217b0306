//! Straight-line drawings of graphs with few distinct edge lengths.
//!
//! The crate is organised around four layers:
//!
//! * [`graph`]: labelled simple graphs, graph6 / edge-list I/O, family
//!   generators and the structural analyses the drawing algorithms need
//!   (blocks, K4-minus-minor recognition, vertex orderings, tree-partitions).
//! * [`geometry`]: drawings, length classification under a tolerance policy,
//!   validity verification and JSON/SVG serialization.
//! * [`constructions`]: one drawing algorithm per known upper-bound
//!   construction, each reporting the bound it guarantees.
//! * [`search`] and [`bounds`]: heuristic search for k-length drawings of
//!   arbitrary graphs, and evaluators for the counting bounds.

pub mod bounds;
pub mod constructions;
pub mod error;
pub mod geometry;
pub mod graph;
pub mod search;

pub use error::{Error, Result};
pub use geometry::{Drawing, DrawingKind, Point};
pub use graph::Graph;
