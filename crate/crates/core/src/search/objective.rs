//! The squared-length residual objective and the barrier terms of the
//! polish phase.

use crate::graph::Graph;

/// Barrier terms; each is zero once the drawing is comfortably valid.
#[derive(Clone, Copy, Debug)]
pub(crate) struct Barrier {
    /// Minimum clearance between vertices, and between a vertex and a
    /// non-incident edge (the latter only when `edges` is set).
    pub clear: f64,
    pub edges: bool,
    /// Half-width, in squared-length units, of the band around each class
    /// length that non-adjacent pairs must avoid.
    pub exclusion: Option<f64>,
    pub weight: f64,
}

/// Variables are `[x0, y0, x1, y1, …]`, followed (with free lengths) by the
/// squared lengths of classes `1..k`; class 0 keeps its given length.
pub(crate) struct Objective<'a> {
    pub graph: &'a Graph,
    pub class_of: &'a [usize],
    pub lambda: Vec<f64>,
    pub free_lengths: bool,
    pub barrier: Option<Barrier>,
}

impl Objective<'_> {
    pub fn dim(&self) -> usize {
        2 * self.graph.n() + if self.free_lengths { self.lambda.len() - 1 } else { 0 }
    }

    pub fn lambda_at(&self, x: &[f64], c: usize) -> f64 {
        if self.free_lengths && c > 0 {
            x[2 * self.graph.n() + c - 1]
        } else {
            self.lambda[c]
        }
    }

    pub fn value_grad(&self, x: &[f64], grad: &mut [f64]) -> f64 {
        grad.iter_mut().for_each(|v| *v = 0.0);
        let n = self.graph.n();
        let lam_base = 2 * n;
        let mut f = 0.0;
        for (e, &(u, v)) in self.graph.edges().iter().enumerate() {
            let c = self.class_of[e];
            let (dx, dy) = (x[2 * u] - x[2 * v], x[2 * u + 1] - x[2 * v + 1]);
            let r = dx * dx + dy * dy - self.lambda_at(x, c);
            f += r * r;
            let (gx, gy) = (4.0 * r * dx, 4.0 * r * dy);
            grad[2 * u] += gx;
            grad[2 * u + 1] += gy;
            grad[2 * v] -= gx;
            grad[2 * v + 1] -= gy;
            if self.free_lengths && c > 0 {
                grad[lam_base + c - 1] -= 2.0 * r;
            }
        }
        if let Some(b) = self.barrier {
            f += self.barrier_terms(x, grad, &b);
        }
        f
    }

    fn barrier_terms(&self, x: &[f64], grad: &mut [f64], b: &Barrier) -> f64 {
        let n = self.graph.n();
        let k = self.lambda.len();
        let mut f = 0.0;
        for i in 0..n {
            for j in i + 1..n {
                let (dx, dy) = (x[2 * i] - x[2 * j], x[2 * i + 1] - x[2 * j + 1]);
                let d2 = dx * dx + dy * dy;
                // dφ/d(d²), accumulated over the active terms
                let mut dd = 0.0;
                let dist = d2.sqrt();
                let gap = b.clear - dist;
                if gap > 0.0 {
                    f += b.weight * gap * gap;
                    // φ = w·(δ − d)²: the clearance term is linear in d, so it
                    // still pushes apart coincident points
                    let (ux, uy) = if dist > 1e-300 { (dx / dist, dy / dist) } else { (1.0, 0.0) };
                    let push = -2.0 * b.weight * gap;
                    grad[2 * i] += push * ux;
                    grad[2 * i + 1] += push * uy;
                    grad[2 * j] -= push * ux;
                    grad[2 * j + 1] -= push * uy;
                }
                if let Some(eta) = b.exclusion {
                    if !self.graph.has_edge(i, j) {
                        for c in 0..k {
                            let s = d2 - self.lambda_at(x, c);
                            let band = eta * eta - s * s;
                            if band > 0.0 {
                                f += b.weight * band * band;
                                let ds = -4.0 * b.weight * band * s;
                                dd += ds;
                                if self.free_lengths && c > 0 {
                                    grad[2 * n + c - 1] -= ds;
                                }
                            }
                        }
                    }
                }
                if dd != 0.0 {
                    grad[2 * i] += 2.0 * dd * dx;
                    grad[2 * i + 1] += 2.0 * dd * dy;
                    grad[2 * j] -= 2.0 * dd * dx;
                    grad[2 * j + 1] -= 2.0 * dd * dy;
                }
            }
        }
        if b.edges {
            for &(u, v) in self.graph.edges() {
                let (ax, ay) = (x[2 * u], x[2 * u + 1]);
                let (ex, ey) = (x[2 * v] - ax, x[2 * v + 1] - ay);
                let len2 = ex * ex + ey * ey;
                if len2 <= 0.0 {
                    continue;
                }
                for w in 0..n {
                    if w == u || w == v {
                        continue;
                    }
                    let (px, py) = (x[2 * w] - ax, x[2 * w + 1] - ay);
                    let t = ((px * ex + py * ey) / len2).clamp(0.0, 1.0);
                    let (dx, dy) = (px - t * ex, py - t * ey);
                    let dist = (dx * dx + dy * dy).sqrt();
                    let gap = b.clear - dist;
                    if gap <= 0.0 {
                        continue;
                    }
                    f += b.weight * gap * gap;
                    // the foot point is optimal in t, so t is held fixed; a
                    // vertex exactly on the edge is pushed along the normal
                    let (ux, uy) = if dist > 1e-300 { (dx / dist, dy / dist) } else { (-ey, ex) };
                    let (ux, uy) = if dist > 1e-300 { (ux, uy) } else { (ux / len2.sqrt(), uy / len2.sqrt()) };
                    let push = -2.0 * b.weight * gap;
                    let (gx, gy) = (push * ux, push * uy);
                    grad[2 * w] += gx;
                    grad[2 * w + 1] += gy;
                    grad[2 * u] -= (1.0 - t) * gx;
                    grad[2 * u + 1] -= (1.0 - t) * gy;
                    grad[2 * v] -= t * gx;
                    grad[2 * v + 1] -= t * gy;
                }
            }
        }
        f
    }
}
