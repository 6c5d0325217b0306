//! Validity checks: coincident vertices, vertices on open edges, crossings.

use serde::Serialize;

use super::{classify_lengths, Drawing, Point, Tolerances};

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct VerifyReport {
    pub n: usize,
    pub m: usize,
    pub distinct_length_count: usize,
    pub is_degenerate: bool,
    pub crossing_count: usize,
    pub zero_length_edges: Vec<[usize; 2]>,
    pub coincident_pairs: Vec<[usize; 2]>,
    /// `[vertex, u, v]`: the vertex lies on the open segment `uv`.
    pub vertex_on_edge: Vec<[usize; 3]>,
    /// Pairs of crossing edges as `[u1, v1, u2, v2]`.
    pub crossings: Vec<[usize; 4]>,
    pub rel_tol: f64,
    pub abs_tol: f64,
}

fn eps_for(d: &Drawing, abs_tol: f64) -> f64 {
    let diam = d.diameter();
    if diam > 0.0 {
        abs_tol * diam
    } else {
        abs_tol
    }
}

/// Distance from `p` to segment `ab` if the projection of `p` falls strictly
/// inside it.
fn interior_distance(p: Point, a: Point, b: Point) -> Option<f64> {
    let ab = b - a;
    let len2 = ab.norm2();
    if len2 == 0.0 {
        return None;
    }
    let t = (p - a).dot(ab) / len2;
    if t <= 0.0 || t >= 1.0 {
        return None;
    }
    Some((p - a).cross(ab).abs() / len2.sqrt())
}

fn coincident(d: &Drawing, eps: f64) -> Vec<[usize; 2]> {
    let mut out = Vec::new();
    let e2 = eps * eps;
    for i in 0..d.n() {
        for j in i + 1..d.n() {
            if d.pos[i].dist2(d.pos[j]) <= e2 {
                out.push([i, j]);
            }
        }
    }
    out
}

fn on_edges(d: &Drawing, eps: f64, first_only: bool) -> Vec<[usize; 3]> {
    let mut out = Vec::new();
    for &(u, v) in d.graph.edges() {
        let (a, b) = (d.pos[u], d.pos[v]);
        // bounding-box prefilter
        let (lx, hx) = (a.x.min(b.x) - eps, a.x.max(b.x) + eps);
        let (ly, hy) = (a.y.min(b.y) - eps, a.y.max(b.y) + eps);
        for (w, &p) in d.pos.iter().enumerate() {
            if w == u || w == v || p.x < lx || p.x > hx || p.y < ly || p.y > hy {
                continue;
            }
            if interior_distance(p, a, b).is_some_and(|dist| dist <= eps) {
                out.push([w, u, v]);
                if first_only {
                    return out;
                }
            }
        }
    }
    out
}

/// Proper crossings between edges without a common endpoint.
fn crossings(d: &Drawing, eps: f64) -> Vec<[usize; 4]> {
    let edges = d.graph.edges();
    let mut out = Vec::new();
    for i in 0..edges.len() {
        let (a, b) = edges[i];
        let (pa, pb) = (d.pos[a], d.pos[b]);
        let lab = pa.dist(pb);
        for &(c, e) in &edges[i + 1..] {
            if c == a || c == b || e == a || e == b {
                continue;
            }
            let (pc, pe) = (d.pos[c], d.pos[e]);
            if pa.x.max(pb.x) < pc.x.min(pe.x)
                || pc.x.max(pe.x) < pa.x.min(pb.x)
                || pa.y.max(pb.y) < pc.y.min(pe.y)
                || pc.y.max(pe.y) < pa.y.min(pb.y)
            {
                continue;
            }
            let lce = pc.dist(pe);
            let o1 = (pb - pa).cross(pc - pa);
            let o2 = (pb - pa).cross(pe - pa);
            let o3 = (pe - pc).cross(pa - pc);
            let o4 = (pe - pc).cross(pb - pc);
            let t1 = eps * lab;
            let t2 = eps * lce;
            let strict = |x: f64, y: f64, t: f64| (x > t && y < -t) || (x < -t && y > t);
            if strict(o1, o2, t1) && strict(o3, o4, t2) {
                out.push([a, b, c, e]);
            }
        }
    }
    out
}

/// Fast strict-validity test: no two vertices within `abs_tol · diameter`,
/// no vertex within that distance of the interior of an edge, no zero-length
/// edge. Crossings are not examined.
pub fn check_strict(d: &Drawing, abs_tol: f64) -> bool {
    let eps = eps_for(d, abs_tol);
    coincident(d, eps).is_empty() && on_edges(d, eps, true).is_empty()
}

/// Full report: length classes, coincidences, vertex-on-edge incidences and
/// crossings. The drawing is strictly valid iff `is_degenerate` is false.
pub fn verify_drawing(d: &Drawing, tol: &Tolerances) -> VerifyReport {
    let eps = eps_for(d, tol.abs_tol);
    let classes = classify_lengths(d, tol.rel_tol);
    let coincident_pairs = coincident(d, eps);
    let vertex_on_edge = on_edges(d, eps, false);
    let crossings = crossings(d, eps);
    let zero_length_edges: Vec<[usize; 2]> = d
        .graph
        .edges()
        .iter()
        .enumerate()
        .filter(|(e, _)| Some(classes.class_of[*e]) == classes.zero_class)
        .map(|(_, &(u, v))| [u, v])
        .collect();
    VerifyReport {
        n: d.n(),
        m: d.graph.m(),
        distinct_length_count: classes.count(),
        is_degenerate: !coincident_pairs.is_empty() || !vertex_on_edge.is_empty() || !zero_length_edges.is_empty(),
        crossing_count: crossings.len(),
        zero_length_edges,
        coincident_pairs,
        vertex_on_edge,
        crossings,
        rel_tol: tol.rel_tol,
        abs_tol: tol.abs_tol,
    }
}

/// Every edge has length within `tol` of 1 and every non-adjacent pair has
/// distance differing from 1 by more than `tol`.
pub fn adjacency_faithful_unit(d: &Drawing, tol: f64) -> bool {
    for i in 0..d.n() {
        for j in i + 1..d.n() {
            let unit = (d.pos[i].dist(d.pos[j]) - 1.0).abs() <= tol;
            if unit != d.graph.has_edge(i, j) {
                return false;
            }
        }
    }
    true
}

/// Smallest positive feature size: the minimum over vertex pairs and over
/// vertex/non-incident-edge pairs of their distance.
pub fn min_feature_distance(d: &Drawing) -> f64 {
    let mut best = f64::INFINITY;
    for i in 0..d.n() {
        for j in i + 1..d.n() {
            best = best.min(d.pos[i].dist(d.pos[j]));
        }
    }
    for &(u, v) in d.graph.edges() {
        let (a, b) = (d.pos[u], d.pos[v]);
        for (w, &p) in d.pos.iter().enumerate() {
            if w == u || w == v {
                continue;
            }
            let ab = b - a;
            let t = ((p - a).dot(ab) / ab.norm2()).clamp(0.0, 1.0);
            best = best.min(p.dist(a + ab * t));
        }
    }
    best
}
