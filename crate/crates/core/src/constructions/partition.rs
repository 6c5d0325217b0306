//! Drawings driven by an H-partition: small regular polygons placed at the
//! vertices of a drawing of the quotient, the bounded slope/length tree
//! drawing used for tree quotients, and the pipeline that composes them.

use std::f64::consts::{FRAC_PI_2, TAU};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{tags, ConstructionResult};
use crate::error::{Error, Result};
use crate::geometry::{
    check_strict, classify_lengths, classify_slopes, min_feature_distance, Drawing, DrawingKind, Point,
};
use crate::graph::{tree_partition, Graph, HPartition};

/// `s·ℓ·w(w−1) + ⌊w/2⌋ + ℓ`.
pub fn h_partition_bound(s: usize, l: usize, w: usize) -> usize {
    s * l * w * w.saturating_sub(1) + w / 2 + l
}

/// `(Δw−1)(2L−1)w(w−1) + ⌊w/2⌋ + 2L − 1` with `L = log₂(2n+1)`.
pub fn treewidth_formula_bound(n: usize, max_degree: usize, w: usize) -> f64 {
    let l = (2.0 * n as f64 + 1.0).log2();
    let w_f = w as f64;
    ((max_degree * w) as f64 - 1.0) * (2.0 * l - 1.0) * w_f * (w_f - 1.0) + (w / 2) as f64 + 2.0 * l - 1.0
}

#[derive(Clone, Debug, PartialEq)]
pub struct HPartitionResult {
    pub result: ConstructionResult,
    /// Slope classes of the quotient drawing.
    pub slopes: usize,
    /// Length classes of the quotient drawing.
    pub lengths: usize,
    pub width: usize,
    /// Circumradius of the polygons.
    pub scale: f64,
    /// Common rotation of the polygons.
    pub rotation: f64,
}

/// Quotient path `0 - 1 - ... - (t-1)` (any path, walked from its lowest
/// endpoint) drawn on the x-axis with unit spacing: one slope, one length.
pub fn collinear_path_drawing(h: &Graph) -> Result<Drawing> {
    let t = h.n();
    if t == 0 || h.m() + 1 != t || !h.is_connected() || h.max_degree() > 2 {
        return Err(Error::input("quotient is not a path"));
    }
    let start = (0..t).find(|&v| h.degree(v) <= 1).unwrap_or(0);
    let mut pos = vec![Point::ORIGIN; t];
    let (mut prev, mut cur) = (usize::MAX, start);
    for i in 0..t {
        pos[cur] = Point::new(i as f64, 0.0);
        let next = h.neighbors(cur).iter().copied().find(|&x| x != prev);
        prev = cur;
        match next {
            Some(x) => cur = x,
            None => break,
        }
    }
    Drawing::new(h.clone(), pos, DrawingKind::Strict)
}

/// Replaces quotient vertex `i` by a regular `w`-gon (`w` = partition width)
/// centred at its position, the vertices of part `i` (in increasing order)
/// on its first `|V_i|` corners. All polygons share one radius and one
/// rotation, so an edge between parts has a length determined by the slope
/// and length of the quotient edge and the pair of corners used:
/// at most `s·ℓ·w(w−1) + ⌊w/2⌋ + ℓ` lengths. The radius starts at the
/// quotient drawing's minimum feature size over `4w` and is halved (at most
/// 40 times) while 25 sampled rotations all fail to give a strict drawing.
pub fn draw_h_partition(g: &Graph, part: &HPartition, h_drawing: &Drawing, seed: u64) -> Result<HPartitionResult> {
    part.validate(g)?;
    if h_drawing.graph != part.quotient {
        return Err(Error::input("quotient drawing does not draw the partition's quotient graph"));
    }
    if !check_strict(h_drawing, 1e-9) {
        return Err(Error::input("quotient drawing is not strict"));
    }
    let s = classify_slopes(h_drawing, 1e-9).count();
    let l = classify_lengths(h_drawing, 1e-9).count();
    let w = part.width();
    let bound = h_partition_bound(s, l, w);
    let feature = if h_drawing.n() > 1 { min_feature_distance(h_drawing) } else { 1.0 };
    let mut scale = feature / (4.0 * w as f64);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    const HALVINGS: usize = 40;
    const ROTATIONS: usize = 25;
    for _ in 0..=HALVINGS {
        for _ in 0..ROTATIONS {
            let alpha = if w == 1 { 0.0 } else { rng.gen_range(0.0..TAU) };
            let mut pos = vec![Point::ORIGIN; g.n()];
            for (i, vs) in part.parts.iter().enumerate() {
                for (k, &v) in vs.iter().enumerate() {
                    let corner = if w == 1 { Point::ORIGIN } else { Point::polar(scale, alpha + TAU * k as f64 / w as f64) };
                    pos[v] = h_drawing.pos[i] + corner;
                }
            }
            let drawing = Drawing::new(g.clone(), pos, DrawingKind::Strict)?;
            if check_strict(&drawing, 1e-9) {
                return Ok(HPartitionResult {
                    result: ConstructionResult { drawing, claimed_bound: bound, lemma_tag: tags::H_PARTITION, seed: Some(seed) },
                    slopes: s,
                    lengths: l,
                    width: w,
                    scale,
                    rotation: alpha,
                });
            }
        }
        scale /= 2.0;
    }
    Err(Error::RetryExhausted { what: "H-partition scale/rotation", attempts: (HALVINGS + 1) * ROTATIONS, seed })
}

#[derive(Clone, Debug, PartialEq)]
pub struct TreeBoundedResult {
    pub result: ConstructionResult,
    pub slope_count: usize,
    /// `max{Δ − 1, 1}`.
    pub slope_bound: usize,
    /// `2·pw_est − 1`.
    pub length_bound: usize,
    /// Rank of the chosen root; an upper estimate of the pathwidth,
    /// at most `log₂(n+1)`.
    pub pw_est: usize,
    pub root: usize,
}

/// Rooted structure: BFS order, parent and children lists.
fn rooted(t: &Graph, root: usize) -> (Vec<usize>, Vec<Vec<usize>>) {
    let n = t.n();
    let mut parent = vec![usize::MAX; n];
    let mut order = vec![root];
    parent[root] = root;
    let mut i = 0;
    while i < order.len() {
        let v = order[i];
        i += 1;
        for &w in t.neighbors(v) {
            if parent[w] == usize::MAX {
                parent[w] = v;
                order.push(w);
            }
        }
    }
    let mut children = vec![Vec::new(); n];
    for &v in &order[1..] {
        children[parent[v]].push(v);
    }
    (order, children)
}

/// Leaves rank 1; otherwise the largest child rank, plus one if two
/// children attain it.
fn ranks(order: &[usize], children: &[Vec<usize>]) -> Vec<usize> {
    let mut rank = vec![1usize; children.len()];
    for &v in order.iter().rev() {
        let mut best = 0;
        let mut ties = 0;
        for &c in &children[v] {
            match rank[c].cmp(&best) {
                std::cmp::Ordering::Greater => {
                    best = rank[c];
                    ties = 1;
                }
                std::cmp::Ordering::Equal => ties += 1,
                std::cmp::Ordering::Less => {}
            }
        }
        rank[v] = if best == 0 { 1 } else if ties > 1 { best + 1 } else { best };
    }
    rank
}

/// Drawing of a tree with few slopes and few lengths.
///
/// Rooted at the leaf of minimum rank. Every subtree is drawn inside a box
/// whose top-left corner is its root. The largest child continues
/// horizontally to the right, beyond the boxes of its siblings; the other
/// children hang below, the first straight down and the rest along fixed
/// shallower directions, each box to the right of the previous one and below
/// the edges to the later siblings. So at most `max{Δ−1, 1}` slopes occur.
/// Every edge length is the least power of two meeting the separation
/// constraints; the length count is measured against the `2·rank − 1`
/// target, not certified.
pub fn draw_tree_bounded(t: &Graph) -> Result<TreeBoundedResult> {
    let n = t.n();
    if n == 0 || !t.is_tree() {
        return Err(Error::input("bounded tree drawing needs a tree"));
    }
    let max_deg = t.max_degree();
    let slope_bound = max_deg.saturating_sub(1).max(1);
    let (mut root, mut p) = (0, 1);
    if n > 1 {
        p = usize::MAX;
        for v in (0..n).filter(|&v| t.degree(v) == 1) {
            let (order, children) = rooted(t, v);
            let r = ranks(&order, &children)[v];
            if r < p {
                p = r;
                root = v;
            }
        }
    }
    let (order, mut children) = rooted(t, root);

    // Light directions, steepest first: straight down, then evenly spaced
    // towards (but excluding) the horizontal.
    let m = max_deg.saturating_sub(2).max(1);
    let theta: Vec<f64> = (0..m).map(|i| FRAC_PI_2 * (m - i) as f64 / m as f64).collect();
    const MARGIN: f64 = 0.5;
    let pow2 = |req: f64| {
        let mut l = 1.0f64;
        while l < req {
            l *= 2.0;
        }
        l
    };

    let mut size = vec![1usize; n];
    for &v in order.iter().rev() {
        for &c in &children[v] {
            size[v] += size[c];
        }
        // heavy child first, then light children by decreasing size
        children[v].sort_by(|&a, &b| size[b].cmp(&size[a]).then(a.cmp(&b)));
    }
    // offset of each non-root vertex from its parent, and box width/height
    let mut offset = vec![Point::ORIGIN; n];
    let (mut width, mut height) = (vec![0.0f64; n], vec![0.0f64; n]);
    for &v in order.iter().rev() {
        let Some((&heavy, light)) = children[v].split_first() else { continue };
        let (mut right, mut bottom) = (0.0f64, 0.0f64);
        for (i, &c) in light.iter().enumerate() {
            let (s, co) = theta[i].sin_cos();
            let mut req = 1.0f64;
            if i > 0 {
                req = req.max((right + MARGIN) / co);
            }
            if i + 1 < light.len() {
                let next = theta[i + 1];
                let coef = (theta[i] - next).sin() / next.cos();
                req = req.max((width[c] * next.tan() + MARGIN) / coef);
            }
            let l = pow2(req);
            offset[c] = Point::new(l * co, -l * s);
            right = right.max(offset[c].x + width[c]);
            bottom = bottom.max(l * s + height[c]);
        }
        let l = pow2(if light.is_empty() { 1.0 } else { right + MARGIN });
        offset[heavy] = Point::new(l, 0.0);
        width[v] = right.max(l + width[heavy]);
        height[v] = bottom.max(height[heavy]);
    }
    let mut pos = vec![Point::ORIGIN; n];
    for &v in &order {
        for &c in &children[v] {
            pos[c] = pos[v] + offset[c];
        }
    }
    let drawing = Drawing::new(t.clone(), pos, DrawingKind::Strict)?;
    if !check_strict(&drawing, 1e-9) {
        return Err(Error::input("bounded tree layout is not strict (numerical degeneracy)"));
    }
    let slope_count = classify_slopes(&drawing, 1e-9).count();
    Ok(TreeBoundedResult {
        result: ConstructionResult { drawing, claimed_bound: 2 * p - 1, lemma_tag: tags::TREE_BOUNDED, seed: None },
        slope_count,
        slope_bound,
        length_bound: 2 * p - 1,
        pw_est: p,
        root,
    })
}

#[derive(Clone, Debug, PartialEq)]
pub struct TreewidthResult {
    pub result: ConstructionResult,
    pub partition_width: usize,
    pub quotient_size: usize,
    pub quotient_slopes: usize,
    pub quotient_lengths: usize,
    /// `s·ℓ·w(w−1) + ⌊w/2⌋ + ℓ` with the measured quotient counts.
    pub helper_bound: usize,
    /// The closed-form bound of [`treewidth_formula_bound`].
    pub formula_bound: f64,
}

/// Tree-partition, bounded tree drawing of the quotient, then the
/// H-partition drawing. The claimed bound is the closed-form expression
/// (rounded down) evaluated at the achieved partition width.
pub fn draw_treewidth_pipeline(g: &Graph, seed: u64) -> Result<TreewidthResult> {
    let part = tree_partition(g)?;
    let tree = draw_tree_bounded(&part.quotient)?;
    let hp = draw_h_partition(g, &part, &tree.result.drawing, seed)?;
    let w = part.width();
    let formula = treewidth_formula_bound(g.n(), g.max_degree(), w);
    Ok(TreewidthResult {
        helper_bound: hp.result.claimed_bound,
        result: ConstructionResult {
            claimed_bound: (formula + 1e-9).floor() as usize,
            lemma_tag: tags::TREEWIDTH,
            ..hp.result
        },
        partition_width: w,
        quotient_size: part.quotient.n(),
        quotient_slopes: hp.slopes,
        quotient_lengths: hp.lengths,
        formula_bound: formula,
    })
}
