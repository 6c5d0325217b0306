//! Fixed-assignment solver: random restarts of L-BFGS on the residual
//! objective, then a barrier-augmented polish.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use super::lbfgs::{minimize, LbfgsOptions};
use super::objective::{Barrier, Objective};
use super::{LengthAssignment, SearchResult};
use crate::geometry::{check_strict, classify_lengths, Drawing, DrawingKind, Point};
use crate::graph::Graph;

/// Restarts run in parallel batches of this size; the batch is the unit of
/// early termination, which keeps parallel runs deterministic.
pub const BATCH: usize = 8;

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SolveOptions {
    pub restarts: usize,
    pub max_iters: usize,
    /// Optimise the lengths of classes `2..k` too (class 1 is pinned).
    pub free_lengths: bool,
    pub kind: DrawingKind,
    /// Forbid non-adjacent pairs at any class length.
    pub unit_exclusion: bool,
}

impl Default for SolveOptions {
    fn default() -> Self {
        SolveOptions { restarts: 64, max_iters: 3000, free_lengths: false, kind: DrawingKind::Strict, unit_exclusion: false }
    }
}

/// Outcome of one restart.
#[derive(Clone, Debug)]
pub(crate) struct Candidate {
    pub pos: Vec<Point>,
    pub residual: f64,
    pub success: bool,
    pub iterations: usize,
}

/// `max_e |‖p_u − p_v‖ − ℓ_class(e)|`.
pub(crate) fn residual(g: &Graph, class_of: &[usize], lengths: &[f64], pos: &[Point]) -> f64 {
    g.edges()
        .iter()
        .enumerate()
        .map(|(e, &(u, v))| (pos[u].dist(pos[v]) - lengths[class_of[e]]).abs())
        .fold(0.0, f64::max)
}

/// Validity of a solved drawing: distinct vertices (and strictness when
/// asked), at most `k` length classes, and with `unit_exclusion` no
/// non-adjacent pair at a class length.
pub(crate) fn acceptable(d: &Drawing, k: usize, lengths: &[f64], opts: &SolveOptions) -> bool {
    let diam = d.diameter();
    let valid = match opts.kind {
        DrawingKind::Strict => check_strict(d, 1e-9),
        DrawingKind::DegenerateAllowed => {
            let eps = 1e-9 * diam;
            (0..d.n()).all(|i| (i + 1..d.n()).all(|j| d.pos[i].dist(d.pos[j]) > eps))
        }
    };
    if !valid || classify_lengths(d, 1e-9).count() > k {
        return false;
    }
    if opts.unit_exclusion {
        for i in 0..d.n() {
            for j in i + 1..d.n() {
                if d.graph.has_edge(i, j) {
                    continue;
                }
                let dist = d.pos[i].dist(d.pos[j]);
                if lengths.iter().any(|&l| (dist - l).abs() <= 1e-6 * l) {
                    return false;
                }
            }
        }
    }
    true
}

fn run_restart(g: &Graph, a: &LengthAssignment, opts: &SolveOptions, seed: u64, index: usize) -> Candidate {
    let n = g.n();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(index as u64);
    let lambda: Vec<f64> = a.lengths.iter().map(|l| l * l).collect();
    let l_max = a.lengths.last().copied().unwrap_or(1.0);
    let side = l_max * (n as f64).sqrt().max(1.0);
    let mut obj = Objective { graph: g, class_of: &a.class_of, lambda, free_lengths: opts.free_lengths && a.k() > 1, barrier: None };
    let mut x: Vec<f64> = (0..2 * n).map(|_| rng.gen_range(0.0..side)).collect();
    if obj.free_lengths {
        x.extend_from_slice(&obj.lambda[1..]);
    }
    debug_assert_eq!(x.len(), obj.dim());
    let lam_max = obj.lambda.iter().copied().fold(0.0, f64::max);
    let lb = LbfgsOptions {
        max_iters: opts.max_iters,
        memory: 8,
        f_target: (g.m().max(1) as f64) * (1e-14 * lam_max).powi(2),
        g_tol: 0.0,
    };
    let mut iterations = minimize(|x, gr| obj.value_grad(x, gr), &mut x, &lb).iterations;

    let l_min = a.lengths[0];
    obj.barrier = Some(Barrier {
        clear: 0.05 * l_min,
        edges: opts.kind == DrawingKind::Strict,
        exclusion: opts.unit_exclusion.then_some(0.05 * l_min * l_min),
        weight: 1.0,
    });
    iterations += minimize(|x, gr| obj.value_grad(x, gr), &mut x, &lb).iterations;

    let pos: Vec<Point> = (0..n).map(|v| Point::new(x[2 * v], x[2 * v + 1])).collect();
    let lengths: Vec<f64> = (0..a.k()).map(|c| obj.lambda_at(&x, c).max(0.0).sqrt()).collect();
    let res = residual(g, &a.class_of, &lengths, &pos);
    let success = pos.iter().all(|p| p.is_finite())
        && Drawing::new(g.clone(), pos.clone(), opts.kind).is_ok_and(|d| {
            res <= 1e-7 * d.diameter().max(l_min) && acceptable(&d, a.k(), &lengths, opts)
        });
    Candidate { pos, residual: if res.is_finite() { res } else { f64::INFINITY }, success, iterations }
}

/// Random restarts (in batches of [`BATCH`], run in parallel) until a batch
/// contains a valid solution or `opts.restarts` is used up. Candidates are
/// ranked by (success, residual, restart index), so the answer does not
/// depend on the thread count.
pub fn solve_fixed_assignment_with(g: &Graph, a: &LengthAssignment, seed: u64, opts: &SolveOptions) -> SearchResult {
    let mut best: Option<(usize, Candidate)> = None;
    let mut iterations = 0;
    let mut used = 0;
    while used < opts.restarts {
        let batch = BATCH.min(opts.restarts - used);
        let results: Vec<Candidate> =
            (used..used + batch).into_par_iter().map(|i| run_restart(g, a, opts, seed, i)).collect();
        for (off, c) in results.into_iter().enumerate() {
            iterations += c.iterations;
            let better = match &best {
                None => true,
                Some((_, b)) => (c.success && !b.success) || (c.success == b.success && c.residual < b.residual),
            };
            if better {
                best = Some((used + off, c));
            }
        }
        used += batch;
        if best.as_ref().is_some_and(|(_, b)| b.success) {
            break;
        }
    }
    let mut out = SearchResult::failure(seed);
    out.iterations = iterations;
    out.work_used = used as u64;
    out.method = "solver".into();
    if let Some((_, c)) = best {
        out.residual = c.residual;
        if c.success {
            let d = Drawing::new(g.clone(), c.pos, opts.kind).expect("validated above");
            out.k_achieved = Some(classify_lengths(&d, 1e-9).count());
            out.assignment = LengthAssignment::from_drawing(&d, 1e-9).ok();
            out.best_drawing = Some(d);
        }
    }
    out
}

/// [`solve_fixed_assignment_with`] using the default options (64 restarts,
/// fixed lengths, strict drawings).
pub fn solve_fixed_assignment(g: &Graph, a: &LengthAssignment, seed: u64) -> SearchResult {
    solve_fixed_assignment_with(g, a, seed, &SolveOptions::default())
}

/// Largest discrepancy between the analytic gradient of the residual
/// objective (fixed lengths, positions only) and central differences with
/// step `1e−6`, relative to `max(1, ‖∇f‖∞)`.
pub fn gradient_check(g: &Graph, a: &LengthAssignment, positions: &[Point]) -> f64 {
    let obj = Objective {
        graph: g,
        class_of: &a.class_of,
        lambda: a.lengths.iter().map(|l| l * l).collect(),
        free_lengths: false,
        barrier: None,
    };
    let mut x: Vec<f64> = positions.iter().flat_map(|p| [p.x, p.y]).collect();
    let mut grad = vec![0.0; x.len()];
    obj.value_grad(&x, &mut grad);
    let scale = grad.iter().fold(1.0f64, |m, v| m.max(v.abs()));
    let mut scratch = vec![0.0; x.len()];
    let h = 1e-6;
    let mut worst = 0.0f64;
    for i in 0..x.len() {
        let orig = x[i];
        x[i] = orig + h;
        let fp = obj.value_grad(&x, &mut scratch);
        x[i] = orig - h;
        let fm = obj.value_grad(&x, &mut scratch);
        x[i] = orig;
        worst = worst.max(((fp - fm) / (2.0 * h) - grad[i]).abs() / scale);
    }
    worst
}

/// Gradient of the residual objective with respect to the positions.
pub fn residual_gradient(g: &Graph, a: &LengthAssignment, positions: &[Point]) -> Vec<Point> {
    let obj = Objective {
        graph: g,
        class_of: &a.class_of,
        lambda: a.lengths.iter().map(|l| l * l).collect(),
        free_lengths: false,
        barrier: None,
    };
    let x: Vec<f64> = positions.iter().flat_map(|p| [p.x, p.y]).collect();
    let mut grad = vec![0.0; x.len()];
    obj.value_grad(&x, &mut grad);
    grad.chunks(2).map(|c| Point::new(c[0], c[1])).collect()
}
