//! Unit-distance drawings: trees, pasting at a cut vertex, and graphs whose
//! blocks are edges or cycles.

use std::f64::consts::{PI, TAU};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{tags, ConstructionResult};
use crate::error::{Error, Result};
use crate::geometry::{Drawing, DrawingKind, Point};
use crate::graph::{block_decomposition, is_k4minus_free, Graph};

/// Non-adjacent pairs must stay this far from unit distance.
const UNIT_MARGIN: f64 = 1e-6;

fn segment_hits_point(a: Point, b: Point, p: Point, eps: f64) -> bool {
    let ab = b - a;
    let len2 = ab.norm2();
    let t = (p - a).dot(ab) / len2;
    t > 0.0 && t < 1.0 && (p - a).cross(ab).abs() / len2.sqrt() <= eps
}

fn segments_cross(a: Point, b: Point, c: Point, d: Point) -> bool {
    let o1 = (b - a).cross(c - a);
    let o2 = (b - a).cross(d - a);
    let o3 = (d - c).cross(a - c);
    let o4 = (d - c).cross(b - c);
    o1 * o2 < 0.0 && o3 * o4 < 0.0
}

/// Offsets in `(-1/2, 1/2)` visited by the sweep: the midpoint, then dyadic
/// refinements moving outward.
fn sweep_offsets() -> impl Iterator<Item = f64> {
    std::iter::once(0.0).chain((2..=7).flat_map(|k| {
        let den = (1u32 << k) as f64;
        (1..(1u32 << (k - 1))).step_by(2).flat_map(move |num| {
            let t = num as f64 / den;
            [t, -t]
        })
    }))
}

/// Unit-length, crossing-free drawing of a tree in which exactly the
/// adjacent pairs are at unit distance.
///
/// Vertices are added in BFS order from vertex 0; each child hangs below
/// its parent on the parent's unit circle. Every vertex owns an x-interval
/// proportional to its subtree size, split between its left children, a
/// slot for itself and its right children, so subtrees occupy disjoint
/// vertical strips, x-coordinates stay distinct and no downward ray from a
/// vertex meets the drawing. Within its slot a vertex is placed by a sweep
/// from the slot centre outward until it is off every unit circle about a
/// non-neighbour (margin 1e-6) and its edge meets nothing.
pub fn draw_tree_unit(t: &Graph) -> Result<ConstructionResult> {
    let n = t.n();
    if n == 0 || !t.is_tree() {
        return Err(Error::input("tree drawing needs a tree"));
    }
    let mut parent = vec![usize::MAX; n];
    let mut order = vec![0usize];
    let mut seen = vec![false; n];
    seen[0] = true;
    let mut i = 0;
    while i < order.len() {
        let v = order[i];
        i += 1;
        for &w in t.neighbors(v) {
            if !seen[w] {
                seen[w] = true;
                parent[w] = v;
                order.push(w);
            }
        }
    }
    let mut size = vec![1usize; n];
    for &v in order.iter().rev().take(n - 1) {
        size[parent[v]] += size[v];
    }
    // left/right split of children, balanced by subtree size
    let mut left: Vec<Vec<usize>> = vec![Vec::new(); n];
    let mut right: Vec<Vec<usize>> = vec![Vec::new(); n];
    let mut left_weight = vec![0usize; n];
    for &v in &order {
        let mut kids: Vec<usize> = t.neighbors(v).iter().copied().filter(|&w| parent[w] == v).collect();
        kids.sort_by_key(|&w| (std::cmp::Reverse(size[w]), w));
        let (mut lw, mut rw) = (0, 0);
        for w in kids {
            if lw < rw {
                lw += size[w];
                left[v].push(w);
            } else {
                rw += size[w];
                right[v].push(w);
            }
        }
        left[v].sort_unstable();
        right[v].sort_unstable();
        left_weight[v] = lw;
    }

    let width = 0.98;
    let mut lo = vec![0.0f64; n];
    let mut hi = vec![0.0f64; n];
    lo[0] = -width * (left_weight[0] as f64 + 0.5) / size[0] as f64;
    hi[0] = lo[0] + width;
    let mut pos = vec![Point::ORIGIN; n];
    let mut placed: Vec<usize> = vec![0];
    let mut edges: Vec<(usize, usize)> = Vec::new();

    for &v in &order {
        let w_v = hi[v] - lo[v];
        let unit = w_v / size[v] as f64;
        let mut cursor = lo[v];
        let own_lo = lo[v] + unit * left_weight[v] as f64;
        for (side, kids) in [(0, &left[v]), (1, &right[v])] {
            if side == 1 {
                cursor = own_lo + unit;
            }
            for &c in kids {
                lo[c] = cursor;
                hi[c] = cursor + unit * size[c] as f64;
                cursor = hi[c];
                place_unit_child(c, v, &lo, &hi, &size, &left_weight, &mut pos, &placed, &edges)?;
                placed.push(c);
                edges.push((v, c));
            }
        }
    }

    Ok(ConstructionResult {
        drawing: Drawing::new(t.clone(), pos, DrawingKind::Strict)?,
        claimed_bound: usize::from(n > 1),
        lemma_tag: tags::TREE_UNIT,
        seed: None,
    })
}

#[allow(clippy::too_many_arguments)]
fn place_unit_child(
    c: usize,
    p: usize,
    lo: &[f64],
    hi: &[f64],
    size: &[usize],
    left_weight: &[usize],
    pos: &mut [Point],
    placed: &[usize],
    edges: &[(usize, usize)],
) -> Result<()> {
    let unit = (hi[c] - lo[c]) / size[c] as f64;
    let slot_mid = lo[c] + unit * (left_weight[c] as f64 + 0.5);
    let pp = pos[p];
    let eps = 1e-12;
    for off in sweep_offsets() {
        let x = slot_mid + off * unit;
        let dx = x - pp.x;
        if dx.abs() >= 1.0 {
            continue;
        }
        let q = Point::new(x, pp.y - (1.0 - dx * dx).sqrt());
        let ok_points = placed.iter().all(|&u| {
            let dist = q.dist(pos[u]);
            u == p || ((dist - 1.0).abs() > UNIT_MARGIN && dist > UNIT_MARGIN && !segment_hits_point(pp, q, pos[u], eps))
        });
        if !ok_points {
            continue;
        }
        let ok_edges = edges.iter().all(|&(a, b)| {
            if segment_hits_point(pos[a], pos[b], q, eps) {
                return false;
            }
            a == p || b == p || !segments_cross(pos[a], pos[b], pp, q)
        });
        if ok_edges {
            pos[c] = q;
            return Ok(());
        }
    }
    Err(Error::RetryExhausted { what: "unit tree leaf placement", attempts: sweep_offsets().count(), seed: 0 })
}

/// Result of [`paste_drawings`]: the union drawing and, for every vertex of
/// the second drawing, its index in the union.
#[derive(Clone, Debug, PartialEq)]
pub struct Pasted {
    pub drawing: Drawing,
    pub second_map: Vec<usize>,
}

/// Glues `d2` onto `d1` by identifying `v2` with `v1`: `d2` is translated so
/// the shared vertex coincides and rotated about it by uniformly sampled
/// angles until the union is a strict drawing (and, if `unit_faithful`, no
/// vertex of `d1 − v1` is within 1e-6 of unit distance from one of
/// `d2 − v2`). Vertices of `d2` other than `v2` are appended in order.
pub fn paste_drawings(d1: &Drawing, v1: usize, d2: &Drawing, v2: usize, unit_faithful: bool, seed: u64) -> Result<Pasted> {
    if v1 >= d1.n() || v2 >= d2.n() {
        return Err(Error::param("shared vertex out of range"));
    }
    let n1 = d1.n();
    let mut second_map = vec![0usize; d2.n()];
    let mut next = n1;
    for (b, slot) in second_map.iter_mut().enumerate() {
        if b == v2 {
            *slot = v1;
        } else {
            *slot = next;
            next += 1;
        }
    }
    let mut edges: Vec<(usize, usize)> = d1.graph.edges().to_vec();
    edges.extend(d2.graph.edges().iter().map(|&(a, b)| (second_map[a], second_map[b])));
    let graph = Graph::from_edges(next, edges)?;
    let kind = if d1.kind == DrawingKind::Strict && d2.kind == DrawingKind::Strict {
        DrawingKind::Strict
    } else {
        DrawingKind::DegenerateAllowed
    };
    let eps = 1e-9 * (d1.diameter() + d2.diameter()).max(1e-300);
    let anchor = d1.pos[v1];
    let rel: Vec<Point> = d2.pos.iter().map(|&p| p - d2.pos[v2]).collect();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    const ATTEMPTS: usize = 1000;
    for _ in 0..ATTEMPTS {
        let alpha = rng.gen_range(0.0..TAU);
        let q: Vec<Point> = rel.iter().map(|&r| anchor + r.rotate(alpha)).collect();
        if paste_ok(d1, v1, d2, v2, &q, eps, unit_faithful) {
            let mut pos = d1.pos.clone();
            pos.extend(q.iter().enumerate().filter(|&(b, _)| b != v2).map(|(_, &p)| p));
            return Ok(Pasted { drawing: Drawing::new(graph, pos, kind)?, second_map });
        }
    }
    Err(Error::RetryExhausted { what: "pasting rotation", attempts: ATTEMPTS, seed })
}

fn paste_ok(d1: &Drawing, v1: usize, d2: &Drawing, v2: usize, q: &[Point], eps: f64, unit: bool) -> bool {
    for (b, &qb) in q.iter().enumerate() {
        if b == v2 {
            continue;
        }
        for (a, &pa) in d1.pos.iter().enumerate() {
            if a == v1 {
                continue;
            }
            let dist = pa.dist(qb);
            if dist <= eps || (unit && (dist - 1.0).abs() <= UNIT_MARGIN) {
                return false;
            }
        }
        if d1.graph.edges().iter().any(|&(x, y)| segment_hits_point(d1.pos[x], d1.pos[y], qb, eps)) {
            return false;
        }
    }
    for &(x, y) in d2.graph.edges() {
        for (a, &pa) in d1.pos.iter().enumerate() {
            if a != v1 && segment_hits_point(q[x], q[y], pa, eps) {
                return false;
            }
        }
    }
    true
}

/// Unit regular polygon through `walk` (cycle vertices in order), first
/// vertex at the origin.
fn unit_polygon(walk: &[usize]) -> Vec<Point> {
    let l = walk.len();
    let r = 1.0 / (2.0 * (PI / l as f64).sin());
    (0..l).map(|i| Point::polar(r, TAU * i as f64 / l as f64) - Point::new(r, 0.0)).collect()
}

/// Unit-distance drawing of a connected graph whose blocks are edges or
/// cycles: cycles become unit regular polygons, bridges unit segments, and
/// blocks are pasted in root-first order with unit-faithful pasting, so
/// exactly the adjacent pairs are at distance 1.
pub fn draw_k4minus_free(g: &Graph, seed: u64) -> Result<ConstructionResult> {
    let check = is_k4minus_free(g);
    if !check.free {
        return Err(Error::InvalidInput {
            message: "graph has a K4-minus minor (a block that is neither an edge nor a cycle)".into(),
            witness: check.witness,
        });
    }
    if !g.is_connected() {
        return Err(Error::input("graph must be connected"));
    }
    let done = |drawing: Drawing| ConstructionResult {
        claimed_bound: usize::from(g.m() > 0),
        drawing,
        lemma_tag: tags::K4MINUS,
        seed: Some(seed),
    };
    if g.m() == 0 {
        return Ok(done(Drawing::new(g.clone(), vec![Point::ORIGIN; g.n()], DrawingKind::Strict)?));
    }
    let blocks = block_decomposition(g).blocks;
    let mut acc: Option<(Drawing, Vec<usize>)> = None; // drawing, local -> global
    let mut local_of = vec![usize::MAX; g.n()];
    for (bi, block) in blocks.iter().enumerate() {
        let start = block.attach.unwrap_or(block.vertices[0]);
        let walk = if block.is_edge() {
            let other = if block.vertices[0] == start { block.vertices[1] } else { block.vertices[0] };
            vec![start, other]
        } else {
            block.cycle_walk(start).ok_or_else(|| Error::input("block is neither an edge nor a cycle"))?
        };
        let pts = if walk.len() == 2 { vec![Point::ORIGIN, Point::new(1.0, 0.0)] } else { unit_polygon(&walk) };
        let l = walk.len();
        let local_edges = (0..l).filter(|&i| l > 2 || i == 0).map(|i| (i, (i + 1) % l));
        let bd = Drawing::new(Graph::from_edges(l, local_edges)?, pts, DrawingKind::Strict)?;
        acc = Some(match acc.take() {
            None => {
                for (i, &v) in walk.iter().enumerate() {
                    local_of[v] = i;
                }
                (bd, walk)
            }
            Some((cur, mut global)) => {
                let pasted = paste_drawings(&cur, local_of[start], &bd, 0, true, seed.wrapping_add(bi as u64))?;
                for (i, &v) in walk.iter().enumerate().skip(1) {
                    local_of[v] = pasted.second_map[i];
                    global.push(v);
                }
                (pasted.drawing, global)
            }
        });
    }
    let (drawing, global) = acc.expect("at least one block");
    Ok(done(drawing.relabel(&global)))
}
