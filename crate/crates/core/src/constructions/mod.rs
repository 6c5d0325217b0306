//! Drawing algorithms, one per upper-bound construction. Every result carries
//! the number of distinct lengths the construction guarantees so callers can
//! self-check with [`crate::geometry::classify_lengths`].

mod bipartite;
mod ordering;
mod partition;
mod product;
mod unit;

pub use bipartite::{
    collinear_triples, draw_complete_bipartite_ngon, draw_complete_ngon, draw_k2n, draw_k3n, k2n_circle_count,
    k3n_middle_distance,
};
pub use ordering::draw_from_ordering;
pub use partition::{
    collinear_path_drawing, draw_h_partition, draw_tree_bounded, draw_treewidth_pipeline, h_partition_bound,
    treewidth_formula_bound, HPartitionResult, TreeBoundedResult, TreewidthResult,
};
pub use product::{draw_cartesian_product, draw_power};
pub use unit::{draw_k4minus_free, draw_tree_unit, paste_drawings, Pasted};

use serde::Serialize;

use crate::geometry::{classify_lengths, Drawing};

/// Identifiers reported as `lemma=TAG`.
pub mod tags {
    pub const COMPLETE_NGON: &str = "complete-ngon";
    pub const BIPARTITE_NGON: &str = "bipartite-ngon";
    pub const K2N: &str = "k2n-circles";
    pub const K3N: &str = "k3n-circles";
    pub const TREE_UNIT: &str = "tree-unit";
    pub const K4MINUS: &str = "k4minus-unit";
    pub const ORDERING: &str = "ordering-ngon";
    pub const H_PARTITION: &str = "h-partition";
    pub const TREE_BOUNDED: &str = "tree-bounded";
    pub const TREEWIDTH: &str = "treewidth";
    pub const PRODUCT: &str = "product";
}

#[derive(Clone, Debug, PartialEq)]
pub struct ConstructionResult {
    pub drawing: Drawing,
    /// Guaranteed upper bound on the number of distinct edge lengths.
    pub claimed_bound: usize,
    pub lemma_tag: &'static str,
    /// Seed used for any randomised placement.
    pub seed: Option<u64>,
}

impl ConstructionResult {
    pub fn measured(&self, rel_tol: f64) -> usize {
        classify_lengths(&self.drawing, rel_tol).count()
    }

    pub fn report(&self, rel_tol: f64) -> BoundReport {
        BoundReport {
            measured: self.measured(rel_tol),
            bound: self.claimed_bound,
            lemma: self.lemma_tag,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct BoundReport {
    pub measured: usize,
    pub bound: usize,
    pub lemma: &'static str,
}

impl std::fmt::Display for BoundReport {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "measured={} bound={} lemma={}", self.measured, self.bound, self.lemma)
    }
}

/// `⌈√(n/2)⌉` in exact integer arithmetic: the least `d` with `2d² ≥ n`.
pub fn ceil_sqrt_half(n: usize) -> usize {
    let mut d = ((n as f64 / 2.0).sqrt()) as usize;
    while 2 * d * d < n {
        d += 1;
    }
    while d > 0 && 2 * (d - 1) * (d - 1) >= n {
        d -= 1;
    }
    d
}
