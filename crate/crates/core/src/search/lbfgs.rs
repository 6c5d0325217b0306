//! Limited-memory BFGS with a backtracking Armijo line search.

use std::collections::VecDeque;

#[derive(Clone, Copy, Debug)]
pub(crate) struct LbfgsOptions {
    pub max_iters: usize,
    pub memory: usize,
    /// Stop once the objective is at or below this value.
    pub f_target: f64,
    /// Stop once `‖∇f‖∞` is at or below this value.
    pub g_tol: f64,
}

#[derive(Clone, Copy, Debug)]
pub(crate) struct LbfgsOutcome {
    pub iterations: usize,
}

fn dot(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

/// Minimises `f` (which returns the value and writes the gradient) in place.
pub(crate) fn minimize<F>(mut f: F, x: &mut [f64], opts: &LbfgsOptions) -> LbfgsOutcome
where
    F: FnMut(&[f64], &mut [f64]) -> f64,
{
    let dim = x.len();
    let mut g = vec![0.0; dim];
    let mut fx = f(x, &mut g);
    let mut hist: VecDeque<(Vec<f64>, Vec<f64>, f64)> = VecDeque::with_capacity(opts.memory);
    let mut dir = vec![0.0; dim];
    let mut x_new = vec![0.0; dim];
    let mut g_new = vec![0.0; dim];
    let mut alpha = vec![0.0; opts.memory];
    let mut stalls = 0;
    let mut iterations = 0;
    while iterations < opts.max_iters {
        if !fx.is_finite() || fx <= opts.f_target || g.iter().all(|v| v.abs() <= opts.g_tol) {
            break;
        }
        iterations += 1;
        // two-loop recursion
        dir.copy_from_slice(&g);
        for (i, (s, y, rho)) in hist.iter().enumerate().rev() {
            alpha[i] = rho * dot(s, &dir);
            dir.iter_mut().zip(y).for_each(|(d, yv)| *d -= alpha[i] * yv);
        }
        let gamma = hist.back().map_or_else(
            || 1.0 / g.iter().fold(0.0f64, |m, v| m.max(v.abs())).max(1e-300),
            |(s, y, _)| dot(s, y) / dot(y, y),
        );
        dir.iter_mut().for_each(|d| *d *= gamma);
        for (i, (s, y, rho)) in hist.iter().enumerate() {
            let beta = rho * dot(y, &dir);
            dir.iter_mut().zip(s).for_each(|(d, sv)| *d += (alpha[i] - beta) * sv);
        }
        dir.iter_mut().for_each(|d| *d = -*d);
        let mut slope = dot(&g, &dir);
        if slope >= 0.0 {
            hist.clear();
            let scale = 1.0 / g.iter().fold(0.0f64, |m, v| m.max(v.abs())).max(1e-300);
            dir.iter_mut().zip(&g).for_each(|(d, gv)| *d = -gv * scale);
            slope = dot(&g, &dir);
        }
        let mut step = 1.0;
        let mut f_new;
        loop {
            x_new.iter_mut().zip(x.iter().zip(&dir)).for_each(|(xn, (xv, d))| *xn = xv + step * d);
            f_new = f(&x_new, &mut g_new);
            if f_new.is_finite() && f_new <= fx + 1e-4 * step * slope {
                break;
            }
            step *= 0.5;
            if step < 1e-20 {
                return LbfgsOutcome { iterations };
            }
        }
        let s: Vec<f64> = x_new.iter().zip(x.iter()).map(|(a, b)| a - b).collect();
        let y: Vec<f64> = g_new.iter().zip(&g).map(|(a, b)| a - b).collect();
        let sy = dot(&s, &y);
        if sy > 1e-300 && sy > 1e-12 * dot(&y, &y).sqrt() * dot(&s, &s).sqrt() {
            if hist.len() == opts.memory {
                hist.pop_front();
            }
            hist.push_back((s, y, 1.0 / sy));
        }
        stalls = if fx - f_new <= 1e-15 * fx.abs() { stalls + 1 } else { 0 };
        x.copy_from_slice(&x_new);
        g.copy_from_slice(&g_new);
        fx = f_new;
        if stalls >= 10 {
            break;
        }
    }
    LbfgsOutcome { iterations }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rosenbrock() {
        let mut x = vec![-1.2, 1.0];
        minimize(
            |x, g| {
                let (a, b) = (x[0], x[1]);
                g[0] = -2.0 * (1.0 - a) - 400.0 * a * (b - a * a);
                g[1] = 200.0 * (b - a * a);
                (1.0 - a).powi(2) + 100.0 * (b - a * a).powi(2)
            },
            &mut x,
            &LbfgsOptions { max_iters: 500, memory: 8, f_target: 1e-24, g_tol: 0.0 },
        );
        assert!((x[0] - 1.0).abs() < 1e-9 && (x[1] - 1.0).abs() < 1e-9);
    }
}
