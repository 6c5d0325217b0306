//! Heuristic search for drawings with at most `k` distinct edge lengths.
//!
//! The inner solver places vertices for a fixed assignment of edges to
//! length classes; the outer loop tries the constructions first and then
//! anneals over assignments. Results are upper bounds only.

mod lbfgs;
mod objective;
mod solve;

use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

pub use solve::{gradient_check, residual_gradient, solve_fixed_assignment, solve_fixed_assignment_with, SolveOptions, BATCH};

use crate::constructions::{
    draw_complete_bipartite_ngon, draw_complete_ngon, draw_from_ordering, draw_k2n, draw_k4minus_free,
};
use crate::error::{Error, Result};
use crate::geometry::{classify_lengths, Drawing, DrawingKind, Point};
use crate::graph::{bandwidth_ordering, is_k4minus_free, Graph};

/// Edge `e` is meant to have length `lengths[class_of[e]]`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct LengthAssignment {
    pub class_of: Vec<usize>,
    /// Strictly increasing, positive.
    pub lengths: Vec<f64>,
}

impl LengthAssignment {
    pub fn new(class_of: Vec<usize>, lengths: Vec<f64>) -> Result<Self> {
        if lengths.is_empty() {
            return Err(Error::param("a length assignment needs at least one class"));
        }
        if lengths[0].partial_cmp(&0.0) != Some(std::cmp::Ordering::Greater) || lengths.windows(2).any(|w| w[1].partial_cmp(&w[0]) != Some(std::cmp::Ordering::Greater)) {
            return Err(Error::param("class lengths must be positive and strictly increasing"));
        }
        if let Some(e) = class_of.iter().position(|&c| c >= lengths.len()) {
            return Err(Error::param(format!("edge {e} uses class {} of {}", class_of[e], lengths.len())));
        }
        Ok(LengthAssignment { class_of, lengths })
    }

    /// Every one of `m` edges in a single class of the given length.
    pub fn uniform(m: usize, length: f64) -> Self {
        LengthAssignment { class_of: vec![0; m], lengths: vec![length] }
    }

    pub fn k(&self) -> usize {
        self.lengths.len()
    }

    /// The classes measured on a drawing; fails on zero-length edges.
    pub fn from_drawing(d: &Drawing, rel_tol: f64) -> Result<Self> {
        let c = classify_lengths(d, rel_tol);
        if c.zero_class.is_some() {
            return Err(Error::input("drawing has zero-length edges"));
        }
        Self::new(c.class_of, c.representatives.iter().map(|r| r.sqrt()).collect())
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct SearchResult {
    pub best_drawing: Option<Drawing>,
    pub k_achieved: Option<usize>,
    /// `max_e |‖p_u − p_v‖ − ℓ_class(e)|` of the best candidate seen.
    pub residual: f64,
    pub iterations: usize,
    pub seed: u64,
    /// Solver restarts consumed.
    pub work_used: u64,
    /// `construction:<tag>`, `solver`, `annealing` or `none`.
    pub method: String,
    pub assignment: Option<LengthAssignment>,
}

/// JSON view of a [`SearchResult`] (the drawing is emitted separately).
#[derive(Clone, Debug, Serialize)]
pub struct SearchSummary {
    pub k_achieved: Option<usize>,
    pub residual: Option<f64>,
    pub iterations: usize,
    pub work_used: u64,
    pub method: String,
    pub seed: u64,
}

impl SearchResult {
    pub(crate) fn failure(seed: u64) -> Self {
        SearchResult {
            best_drawing: None,
            k_achieved: None,
            residual: f64::INFINITY,
            iterations: 0,
            seed,
            work_used: 0,
            method: "none".into(),
            assignment: None,
        }
    }

    pub fn summary(&self) -> SearchSummary {
        SearchSummary {
            k_achieved: self.k_achieved,
            residual: self.residual.is_finite().then_some(self.residual),
            iterations: self.iterations,
            work_used: self.work_used,
            method: self.method.clone(),
            seed: self.seed,
        }
    }
}

/// Search budget. Work units count solver restarts, so a work budget gives
/// reproducible results; the optional wall-clock limit does not.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Budget {
    pub work_units: u64,
    pub wall_clock: Option<Duration>,
}

impl Budget {
    pub fn work(units: u64) -> Self {
        Budget { work_units: units, wall_clock: None }
    }

    pub fn wall(limit: Duration) -> Self {
        Budget { work_units: u64::MAX, wall_clock: Some(limit) }
    }
}

impl Default for Budget {
    fn default() -> Self {
        Budget::work(2000)
    }
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SearchOptions {
    pub kind: DrawingKind,
    pub unit_exclusion: bool,
    /// Restarts per solver call inside the annealing loop.
    pub restarts_per_eval: usize,
    pub max_iters: usize,
}

impl Default for SearchOptions {
    fn default() -> Self {
        SearchOptions { kind: DrawingKind::Strict, unit_exclusion: false, restarts_per_eval: BATCH, max_iters: 2000 }
    }
}

struct Meter {
    budget: Budget,
    start: Instant,
    used: u64,
    iterations: usize,
    best_residual: f64,
}

impl Meter {
    fn remaining(&self) -> u64 {
        if self.budget.wall_clock.is_some_and(|w| self.start.elapsed() >= w) {
            return 0;
        }
        self.budget.work_units.saturating_sub(self.used)
    }
}

fn solve_options(opts: &SearchOptions, restarts: usize) -> SolveOptions {
    SolveOptions { restarts, max_iters: opts.max_iters, free_lengths: true, kind: opts.kind, unit_exclusion: opts.unit_exclusion }
}

/// Construction drawings applicable to `g`, as `(tag, drawing)`.
fn construction_candidates(g: &Graph, seed: u64) -> Vec<(&'static str, Drawing)> {
    let mut out = Vec::new();
    let place = |n: usize, map: &[usize], d: &Drawing| {
        let mut pos = vec![Point::ORIGIN; n];
        for (i, &v) in map.iter().enumerate() {
            pos[v] = d.pos[i];
        }
        Drawing::new(g.clone(), pos, d.kind).ok()
    };
    if g.n() >= 2 && g.is_connected() && is_k4minus_free(g).free {
        if let Ok(r) = draw_k4minus_free(g, seed) {
            out.push((r.lemma_tag, r.drawing));
        }
    }
    if g.n() >= 3 && g.is_complete() {
        if let Ok(r) = draw_complete_ngon(g.n()) {
            out.push((r.lemma_tag, r.drawing));
        }
    }
    if let Some((a, b)) = g.complete_bipartite_sides() {
        let (a, b) = if b.len() == 2 && a.len() != 2 { (b, a) } else { (a, b) };
        let map: Vec<usize> = a.iter().chain(&b).copied().collect();
        if let Some(d) = draw_complete_bipartite_ngon(a.len(), b.len()).ok().and_then(|r| place(g.n(), &map, &r.drawing)) {
            out.push((crate::constructions::tags::BIPARTITE_NGON, d));
        }
        if a.len() == 2 {
            if let Some(d) = draw_k2n(b.len(), seed).ok().and_then(|r| place(g.n(), &map, &r.drawing)) {
                out.push((crate::constructions::tags::K2N, d));
            }
        }
    }
    if let Ok(r) = draw_from_ordering(g, &bandwidth_ordering(g)) {
        out.push((r.lemma_tag, r.drawing));
    }
    out
}

/// Starting assignment with `k` classes: the length classes of the
/// bandwidth-ordering drawing, merged into `k` consecutive groups.
fn initial_assignment(g: &Graph, k: usize) -> LengthAssignment {
    let d = draw_from_ordering(g, &bandwidth_ordering(g)).expect("ordering covers the graph").drawing;
    let c = classify_lengths(&d, 1e-9);
    let groups = c.count().max(1);
    let class_of: Vec<usize> = c.class_of.iter().map(|&x| x * k / groups).collect();
    let lengths = (0..k).map(|j| 1.0 + 0.5 * j as f64).collect();
    LengthAssignment { class_of, lengths }
}

/// Smallest `k ≤ k_max` for which a drawing with at most `k` lengths was
/// found. Constructions are tried first; for each remaining `k`, annealing
/// over class assignments (single-edge reassignment or merge-and-split of
/// two classes, geometric cooling by 0.95) with the solver as energy. The
/// remaining budget is split evenly over the remaining values of `k`.
pub fn search_min_k_with(g: &Graph, k_max: usize, budget: Budget, seed: u64, opts: &SearchOptions) -> SearchResult {
    let mut meter = Meter { budget, start: Instant::now(), used: 0, iterations: 0, best_residual: f64::INFINITY };
    if g.m() == 0 {
        let n = g.n().max(1) as f64;
        let pos = (0..g.n()).map(|i| Point::polar(1.0, std::f64::consts::TAU * i as f64 / n)).collect();
        let mut r = SearchResult::failure(seed);
        r.best_drawing = Drawing::new(g.clone(), pos, opts.kind).ok();
        r.k_achieved = Some(0);
        r.residual = 0.0;
        r.method = "trivial".into();
        return r;
    }
    let check_opts = solve_options(opts, 0);
    let mut best_construction: Option<(usize, &'static str, Drawing)> = None;
    for (tag, d) in construction_candidates(g, seed) {
        let Ok(a) = LengthAssignment::from_drawing(&d, 1e-9) else { continue };
        let d = Drawing { kind: opts.kind, ..d };
        if !solve::acceptable(&d, a.k(), &a.lengths, &check_opts) {
            continue;
        }
        if best_construction.as_ref().is_none_or(|(k, _, _)| a.k() < *k) {
            best_construction = Some((a.k(), tag, d));
        }
    }

    for k in 1..=k_max {
        if let Some((kc, tag, d)) = best_construction.as_ref().filter(|(kc, _, _)| *kc <= k) {
            let mut r = SearchResult::failure(seed);
            r.assignment = LengthAssignment::from_drawing(d, 1e-9).ok();
            r.residual = 0.0;
            r.k_achieved = Some(*kc);
            r.best_drawing = Some(d.clone());
            r.method = format!("construction:{tag}");
            r.iterations = meter.iterations;
            r.work_used = meter.used;
            advise_lower_bounds(g, *kc);
            return r;
        }
        let share = meter.remaining() / (k_max - k + 1) as u64;
        if let Some(mut r) = anneal(g, k, share, seed, opts, &mut meter) {
            r.iterations = meter.iterations;
            r.work_used = meter.used;
            r.seed = seed;
            advise_lower_bounds(g, r.k_achieved.unwrap_or(k));
            return r;
        }
    }
    let mut r = SearchResult::failure(seed);
    r.work_used = meter.used;
    r.iterations = meter.iterations;
    r.residual = meter.best_residual;
    r
}

/// [`search_min_k_with`] with default options (strict drawings).
pub fn search_min_k(g: &Graph, k_max: usize, budget: Budget, seed: u64) -> SearchResult {
    search_min_k_with(g, k_max, budget, seed, &SearchOptions::default())
}

fn anneal(g: &Graph, k: usize, units: u64, seed: u64, opts: &SearchOptions, meter: &mut Meter) -> Option<SearchResult> {
    let per_eval = opts.restarts_per_eval.max(1) as u64;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(k as u64);
    let mut spent = 0u64;
    let mut step = 0u64;
    let eval = |a: &LengthAssignment, meter: &mut Meter, spent: &mut u64, step: &mut u64| {
        let restarts = per_eval.min(units - *spent).min(meter.remaining());
        let s = seed.wrapping_mul(0x9E37_79B9_7F4A_7C15).wrapping_add((k as u64) << 32 | *step);
        *step += 1;
        let r = solve_fixed_assignment_with(g, a, s, &solve_options(opts, restarts as usize));
        *spent += r.work_used;
        meter.used += r.work_used;
        meter.iterations += r.iterations;
        meter.best_residual = meter.best_residual.min(r.residual);
        r
    };
    if units == 0 || meter.remaining() == 0 {
        return None;
    }
    let mut current = initial_assignment(g, k);
    let mut r = eval(&current, meter, &mut spent, &mut step);
    if r.best_drawing.is_some() {
        r.method = "solver".into();
        return Some(r);
    }
    if k == 1 {
        // a single class leaves nothing to anneal: spend the share on restarts
        while spent < units && meter.remaining() > 0 {
            let r = eval(&current, meter, &mut spent, &mut step);
            if r.best_drawing.is_some() {
                return Some(SearchResult { method: "solver".into(), ..r });
            }
        }
        return None;
    }
    let mut energy = r.residual;
    let mut temp = 0.5 * energy.min(1.0);
    while spent < units && meter.remaining() > 0 {
        let mut next = current.clone();
        let m = next.class_of.len();
        if rng.gen_bool(0.8) {
            let e = rng.gen_range(0..m);
            let c = (next.class_of[e] + rng.gen_range(1..k)) % k;
            next.class_of[e] = c;
        } else {
            // merge class b into a, then split a random part of the union back off
            let a = rng.gen_range(0..k);
            let b = (a + rng.gen_range(1..k)) % k;
            for c in next.class_of.iter_mut() {
                if *c == b || (*c == a && rng.gen_bool(0.5)) {
                    *c = if rng.gen_bool(0.5) { a } else { b };
                }
            }
        }
        let r = eval(&next, meter, &mut spent, &mut step);
        if r.best_drawing.is_some() {
            return Some(SearchResult { method: "annealing".into(), ..r });
        }
        let delta = r.residual - energy;
        if delta <= 0.0 || (temp > 0.0 && rng.gen::<f64>() < (-delta / temp).exp()) {
            current = next;
            energy = r.residual;
        }
        temp *= 0.95;
    }
    None
}

/// Logs (does not fail) when `k` undercuts a lower bound evaluated with
/// constant 1; the density bounds hold only up to an unspecified constant.
fn advise_lower_bounds(g: &Graph, k: usize) {
    let lb = crate::bounds::eval_lower_bounds(g.n(), g.m(), 1.0);
    if let Ok(lb) = lb {
        let density = lb.density.ceil().max(1.0) as usize;
        if k < density {
            log::warn!("found {k} lengths, below the constant-1 density estimate {density} (advisory)");
        }
        if g.is_complete() && k < lb.complete {
            log::warn!("found {k} lengths for K_{}, below the proven bound {}", g.n(), lb.complete);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete_bipartite, cycle, frame_with_matching, random_cactus, random_frame_matching, random_tree};

    #[test]
    fn assignment_validation() {
        assert!(LengthAssignment::new(vec![0, 1], vec![1.0, 2.0]).is_ok());
        assert!(LengthAssignment::new(vec![0, 2], vec![1.0, 2.0]).is_err());
        assert!(LengthAssignment::new(vec![0], vec![2.0, 1.0]).is_err());
        assert!(LengthAssignment::new(vec![0], vec![0.0]).is_err());
        assert!(LengthAssignment::new(vec![], vec![]).is_err());
    }

    #[test]
    fn unit_families() {
        for g in [random_tree(30, 1).unwrap(), cycle(9).unwrap(), random_cactus(6, 2).unwrap()] {
            let r = search_min_k(&g, 3, Budget::work(200), 0);
            assert_eq!(r.k_achieved, Some(1));
            assert_eq!(classify_lengths(r.best_drawing.as_ref().unwrap(), 1e-9).count(), 1);
        }
    }

    #[test]
    fn k2_8_needs_at_most_two() {
        let r = search_min_k(&complete_bipartite(2, 8).unwrap(), 3, Budget::work(200), 1);
        assert!(r.k_achieved.is_some_and(|k| k <= 2));
    }

    #[test]
    fn frame_search_is_reproducible() {
        let g = frame_with_matching(18, &random_frame_matching(18, 3).unwrap()).unwrap();
        let a = search_min_k(&g, 3, Budget::work(48), 5);
        let b = search_min_k(&g, 3, Budget::work(48), 5);
        assert_eq!(a, b);
        assert!(a.work_used <= 48);
        if let Some(k) = a.k_achieved {
            let lb = crate::bounds::eval_lower_bounds(18, g.m(), 1.0).unwrap();
            assert!(k as f64 >= lb.density.ceil().max(1.0));
        }
    }

    #[test]
    fn edgeless_graph() {
        let r = search_min_k(&Graph::empty(4), 2, Budget::default(), 0);
        assert_eq!(r.k_achieved, Some(0));
    }
}
