//! Grouping edges into distinct-length and distinct-slope classes.

use std::f64::consts::PI;

use super::Drawing;

#[derive(Clone, Debug, PartialEq)]
pub struct LengthClassification {
    /// Class index per edge (edge order of the graph). Classes are numbered
    /// by increasing length.
    pub class_of: Vec<usize>,
    /// Smallest squared length in each class.
    pub representatives: Vec<f64>,
    /// The class holding zero-length edges, if any.
    pub zero_class: Option<usize>,
    pub rel_tol: f64,
}

impl LengthClassification {
    pub fn count(&self) -> usize {
        self.representatives.len()
    }

    pub fn class_sizes(&self) -> Vec<usize> {
        let mut sizes = vec![0; self.count()];
        for &c in &self.class_of {
            sizes[c] += 1;
        }
        sizes
    }
}

/// Single-linkage grouping of squared edge lengths: after sorting, a value
/// joins the previous group when it exceeds its predecessor by at most
/// `rel_tol` times itself. Squared lengths at most `rel_tol²` times the
/// largest one form a separate zero class.
pub fn classify_lengths(d: &Drawing, rel_tol: f64) -> LengthClassification {
    let sq = d.squared_lengths();
    let max_sq = sq.iter().copied().fold(0.0, f64::max);
    let mut idx: Vec<usize> = (0..sq.len()).collect();
    idx.sort_by(|&a, &b| sq[a].total_cmp(&sq[b]).then(a.cmp(&b)));

    let is_zero = |v: f64| v <= rel_tol * rel_tol * max_sq || v == 0.0;
    let mut class_of = vec![0; sq.len()];
    let mut representatives: Vec<f64> = Vec::new();
    let mut zero_class = None;
    let mut prev: Option<f64> = None;
    for &e in &idx {
        let v = sq[e];
        if is_zero(v) {
            if zero_class.is_none() {
                zero_class = Some(representatives.len());
                representatives.push(v);
            }
            class_of[e] = zero_class.unwrap();
            continue;
        }
        match prev {
            Some(p) if !is_zero(p) && v - p <= rel_tol * v => {}
            _ => representatives.push(v),
        }
        class_of[e] = representatives.len() - 1;
        prev = Some(v);
    }
    LengthClassification { class_of, representatives, zero_class, rel_tol }
}

#[derive(Clone, Debug, PartialEq)]
pub struct SlopeClassification {
    pub class_of: Vec<usize>,
    /// Direction angle in `[0, π)` of the first edge in each class.
    pub representatives: Vec<f64>,
}

impl SlopeClassification {
    pub fn count(&self) -> usize {
        self.representatives.len()
    }
}

/// Groups edges by direction modulo π; angles within `tol` radians chain
/// together, including across the wrap-around at π.
pub fn classify_slopes(d: &Drawing, tol: f64) -> SlopeClassification {
    let m = d.graph.m();
    let angle: Vec<f64> = (0..m)
        .map(|e| {
            let v = d.edge_vector(e);
            v.y.atan2(v.x).rem_euclid(PI)
        })
        .collect();
    let mut idx: Vec<usize> = (0..m).collect();
    idx.sort_by(|&a, &b| angle[a].total_cmp(&angle[b]).then(a.cmp(&b)));
    let mut class_of = vec![0; m];
    let mut representatives: Vec<f64> = Vec::new();
    let mut prev = f64::NEG_INFINITY;
    for &e in &idx {
        if angle[e] - prev > tol {
            representatives.push(angle[e]);
        }
        class_of[e] = representatives.len() - 1;
        prev = angle[e];
    }
    let k = representatives.len();
    if k > 1 {
        let first = angle[idx[0]];
        let last = angle[idx[m - 1]];
        if first + PI - last <= tol {
            for c in class_of.iter_mut() {
                if *c == k - 1 {
                    *c = 0;
                }
            }
            representatives.pop();
        }
    }
    SlopeClassification { class_of, representatives }
}
