//! Planar drawings, length/slope classification, validity checks and
//! serialization.

mod classify;
mod io;
mod verify;

pub use classify::{classify_lengths, classify_slopes, LengthClassification, SlopeClassification};
pub use io::{parse_drawing, to_json, to_svg, DrawingJson};
pub use verify::{adjacency_faithful_unit, check_strict, min_feature_distance, verify_drawing, VerifyReport};

use std::ops::{Add, Mul, Sub};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;

#[derive(Clone, Copy, Debug, PartialEq, Default)]
pub struct Point {
    pub x: f64,
    pub y: f64,
}

impl Point {
    pub const ORIGIN: Point = Point { x: 0.0, y: 0.0 };

    pub const fn new(x: f64, y: f64) -> Self {
        Point { x, y }
    }

    pub fn polar(r: f64, angle: f64) -> Self {
        Point::new(r * angle.cos(), r * angle.sin())
    }

    pub fn norm2(self) -> f64 {
        self.x * self.x + self.y * self.y
    }

    pub fn norm(self) -> f64 {
        self.x.hypot(self.y)
    }

    pub fn dist(self, o: Point) -> f64 {
        (self - o).norm()
    }

    pub fn dist2(self, o: Point) -> f64 {
        (self - o).norm2()
    }

    pub fn dot(self, o: Point) -> f64 {
        self.x * o.x + self.y * o.y
    }

    pub fn cross(self, o: Point) -> f64 {
        self.x * o.y - self.y * o.x
    }

    /// Rotation about the origin by `angle` radians.
    pub fn rotate(self, angle: f64) -> Self {
        let (s, c) = angle.sin_cos();
        Point::new(c * self.x - s * self.y, s * self.x + c * self.y)
    }

    pub fn is_finite(self) -> bool {
        self.x.is_finite() && self.y.is_finite()
    }
}

impl Add for Point {
    type Output = Point;
    fn add(self, o: Point) -> Point {
        Point::new(self.x + o.x, self.y + o.y)
    }
}

impl Sub for Point {
    type Output = Point;
    fn sub(self, o: Point) -> Point {
        Point::new(self.x - o.x, self.y - o.y)
    }
}

impl Mul<f64> for Point {
    type Output = Point;
    fn mul(self, k: f64) -> Point {
        Point::new(self.x * k, self.y * k)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum DrawingKind {
    /// Distinct points, no vertex on the interior of an edge.
    Strict,
    /// Vertices may lie on edge interiors.
    DegenerateAllowed,
}

impl DrawingKind {
    pub fn as_str(self) -> &'static str {
        match self {
            DrawingKind::Strict => "strict",
            DrawingKind::DegenerateAllowed => "degenerate-allowed",
        }
    }
}

/// Tolerance policy for length grouping and degeneracy tests.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Tolerances {
    /// Relative tolerance on squared edge lengths.
    pub rel_tol: f64,
    /// Absolute tolerance, multiplied by the drawing diameter.
    pub abs_tol: f64,
}

impl Default for Tolerances {
    fn default() -> Self {
        Tolerances { rel_tol: 1e-9, abs_tol: 1e-9 }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct Drawing {
    pub graph: Graph,
    pub pos: Vec<Point>,
    pub kind: DrawingKind,
}

impl Drawing {
    pub fn new(graph: Graph, pos: Vec<Point>, kind: DrawingKind) -> Result<Self> {
        if pos.len() != graph.n() {
            return Err(Error::input(format!("{} positions for {} vertices", pos.len(), graph.n())));
        }
        if let Some(v) = pos.iter().position(|p| !p.is_finite()) {
            return Err(Error::InvalidInput { message: format!("vertex {v} has a non-finite position"), witness: Some(v) });
        }
        Ok(Drawing { graph, pos, kind })
    }

    pub fn n(&self) -> usize {
        self.pos.len()
    }

    pub fn edge_vector(&self, e: usize) -> Point {
        let (u, v) = self.graph.edges()[e];
        self.pos[v] - self.pos[u]
    }

    pub fn edge_length(&self, e: usize) -> f64 {
        self.edge_vector(e).norm()
    }

    pub fn squared_lengths(&self) -> Vec<f64> {
        (0..self.graph.m()).map(|e| self.edge_vector(e).norm2()).collect()
    }

    /// Largest distance between two vertices (bounding-box diagonal above
    /// 4000 vertices).
    pub fn diameter(&self) -> f64 {
        let n = self.n();
        if n > 4000 {
            let (mut lo, mut hi) = (Point::new(f64::MAX, f64::MAX), Point::new(f64::MIN, f64::MIN));
            for p in &self.pos {
                lo = Point::new(lo.x.min(p.x), lo.y.min(p.y));
                hi = Point::new(hi.x.max(p.x), hi.y.max(p.y));
            }
            return lo.dist(hi);
        }
        let mut best = 0.0f64;
        for i in 0..n {
            for j in i + 1..n {
                best = best.max(self.pos[i].dist2(self.pos[j]));
            }
        }
        best.sqrt()
    }

    /// Applies `p -> scale * rotate(p, angle) + shift` to every vertex.
    pub fn transformed(&self, angle: f64, scale: f64, shift: Point) -> Drawing {
        Drawing {
            graph: self.graph.clone(),
            pos: self.pos.iter().map(|&p| p.rotate(angle) * scale + shift).collect(),
            kind: self.kind,
        }
    }

    /// Same positions with vertex `v` renamed `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Drawing {
        let mut pos = vec![Point::ORIGIN; self.n()];
        for (v, &p) in self.pos.iter().enumerate() {
            pos[perm[v]] = p;
        }
        Drawing { graph: self.graph.relabel(perm), pos, kind: self.kind }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rotation_and_products() {
        let p = Point::new(1.0, 0.0).rotate(std::f64::consts::FRAC_PI_2);
        assert!((p.x).abs() < 1e-15 && (p.y - 1.0).abs() < 1e-15);
        assert_eq!(Point::new(1.0, 2.0).cross(Point::new(3.0, 4.0)), -2.0);
        assert_eq!((Point::new(1.0, 2.0) - Point::new(1.0, 0.0)).norm(), 2.0);
    }

    #[test]
    fn rejects_bad_positions() {
        let g = Graph::from_edges(2, [(0, 1)]).unwrap();
        assert!(Drawing::new(g.clone(), vec![Point::ORIGIN], DrawingKind::Strict).is_err());
        assert!(Drawing::new(g, vec![Point::ORIGIN, Point::new(f64::NAN, 0.0)], DrawingKind::Strict).is_err());
    }
}
