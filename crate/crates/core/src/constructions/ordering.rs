use std::f64::consts::TAU;

use super::{tags, ConstructionResult};
use crate::error::{Error, Result};
use crate::geometry::{Drawing, DrawingKind, Point};
use crate::graph::{cyclic_width, Graph, VertexOrdering};

/// Vertices on a regular n-gon in the order `σ`: the length of `vw` depends
/// only on the cyclic gap between `σ(v)` and `σ(w)`, so there are at most
/// cyclic-width many lengths.
pub fn draw_from_ordering(g: &Graph, ord: &VertexOrdering) -> Result<ConstructionResult> {
    if ord.len() != g.n() {
        return Err(Error::param(format!("ordering has {} entries for {} vertices", ord.len(), g.n())));
    }
    let n = g.n() as f64;
    let pos = (0..g.n()).map(|v| Point::polar(1.0, TAU * ord.sigma(v) as f64 / n)).collect();
    Ok(ConstructionResult {
        drawing: Drawing::new(g.clone(), pos, DrawingKind::Strict)?,
        claimed_bound: cyclic_width(g, ord),
        lemma_tag: tags::ORDERING,
        seed: None,
    })
}
