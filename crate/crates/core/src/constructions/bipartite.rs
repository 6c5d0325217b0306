//! Complete and complete bipartite graphs: regular polygons and circle
//! intersections.

use std::f64::consts::TAU;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{ceil_sqrt_half, tags, ConstructionResult};
use crate::error::{Error, Result};
use crate::geometry::{check_strict, Drawing, DrawingKind, Point};
use crate::graph::{complete, complete_bipartite};

/// `K_n` on the regular n-gon: chord lengths depend only on the cyclic
/// offset, giving `⌊n/2⌋` lengths.
pub fn draw_complete_ngon(n: usize) -> Result<ConstructionResult> {
    if n < 3 {
        return Err(Error::param(format!("regular polygon drawing needs n >= 3, got {n}")));
    }
    let pos = (0..n).map(|i| Point::polar(1.0, TAU * i as f64 / n as f64)).collect();
    Ok(ConstructionResult {
        drawing: Drawing::new(complete(n)?, pos, DrawingKind::Strict)?,
        claimed_bound: n / 2,
        lemma_tag: tags::COMPLETE_NGON,
        seed: None,
    })
}

/// `K_{m,n}` on a regular `2N`-gon, `N = max(m, n)`, colour classes on
/// alternating corners (the first `m` even corners and the first `n` odd
/// ones). Only odd offsets occur, so there are at most `⌈N/2⌉` lengths.
pub fn draw_complete_bipartite_ngon(m: usize, n: usize) -> Result<ConstructionResult> {
    let big = m.max(n);
    if big == 0 {
        return Err(Error::param("complete bipartite drawing needs a nonempty side"));
    }
    let corner = |k: usize| Point::polar(1.0, TAU * k as f64 / (2 * big) as f64);
    let pos = (0..m).map(|i| corner(2 * i)).chain((0..n).map(|j| corner(2 * j + 1))).collect();
    let bound = if m == 0 || n == 0 { 0 } else { big.div_ceil(2) };
    Ok(ConstructionResult {
        drawing: Drawing::new(complete_bipartite(m, n)?, pos, DrawingKind::Strict)?,
        claimed_bound: bound,
        lemma_tag: tags::BIPARTITE_NGON,
        seed: None,
    })
}

/// Intersection points of the circle of radius `a` about `(-1, 0)` and the
/// circle of radius `b` about `(1, 0)`, upper point first.
fn circle_pair(a2: f64, b2: f64) -> Option<(Point, Point)> {
    let x = (a2 - b2) / 4.0;
    let h = a2 - (x + 1.0) * (x + 1.0);
    (h > 0.0).then(|| {
        let y = h.sqrt();
        (Point::new(x, y), Point::new(x, -y))
    })
}

/// Index triples of (numerically) collinear points: `|cross| ≤ tol·|ab|·|ac|`.
pub fn collinear_triples(points: &[Point], tol: f64) -> Vec<[usize; 3]> {
    let n = points.len();
    let mut out = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            let ab = points[j] - points[i];
            let lab = ab.norm();
            for k in j + 1..n {
                let ac = points[k] - points[i];
                if ab.cross(ac).abs() <= tol * lab * ac.norm() {
                    out.push([i, j, k]);
                }
            }
        }
    }
    out
}

/// `K_{2,n}` with `v = (-1,0)`, `w = (1,0)` (vertices 0 and 1) and the `n`
/// vertices of the other class on intersections of `d = ⌈√(n/2)⌉` circles
/// about each centre, all with radii from one shared set in `(1, 2)`.
///
/// Intersections of equal-radius circles lie on the bisector `x = 0`, so
/// they are used last; the general-position check ignores triples lying
/// entirely on the bisector, which cannot be avoided once three such points
/// are needed.
pub fn draw_k2n(n: usize, seed: u64) -> Result<ConstructionResult> {
    if n == 0 {
        return Err(Error::param("K_{2,n} needs n >= 1"));
    }
    let d = ceil_sqrt_half(n);
    let graph = complete_bipartite(2, n)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    const ATTEMPTS: usize = 100;
    for _ in 0..ATTEMPTS {
        let step = 1.0 / (d as f64 + 1.0);
        let radii2: Vec<f64> = (0..d)
            .map(|i| {
                let u: f64 = rng.gen_range(0.0..0.5 * step);
                let r = 1.0 + (i as f64) * step + u.max(1e-3 * step);
                r * r
            })
            .collect();
        let mut pts = vec![Point::new(-1.0, 0.0), Point::new(1.0, 0.0)];
        'fill: for s in (1..d).chain(std::iter::once(0)) {
            for upper in [true, false] {
                for i in 0..d {
                    if pts.len() == n + 2 {
                        break 'fill;
                    }
                    let j = (i + s) % d;
                    let (p, q) = circle_pair(radii2[i], radii2[j]).expect("radii in (1,2) always intersect");
                    pts.push(if upper { p } else { q });
                }
            }
        }
        debug_assert_eq!(pts.len(), n + 2);
        let unforced = collinear_triples(&pts, 1e-9)
            .into_iter()
            .any(|t| t.iter().any(|&k| pts[k].x != 0.0));
        let drawing = Drawing::new(graph.clone(), pts, DrawingKind::Strict)?;
        if !unforced && check_strict(&drawing, 1e-9) {
            return Ok(ConstructionResult { drawing, claimed_bound: d, lemma_tag: tags::K2N, seed: Some(seed) });
        }
    }
    Err(Error::RetryExhausted { what: "K_{2,n} radii", attempts: ATTEMPTS, seed })
}

/// Numbers of distinct distances from vertex 0 and from vertex 1 to the other
/// class in a `K_{2,n}` (or `K_{3,n}` outer-centre) drawing.
pub fn k2n_circle_count(d: &Drawing, first_b: usize, rel_tol: f64) -> (usize, usize) {
    let count = |c: usize| {
        let mut r: Vec<f64> = (first_b..d.n()).map(|b| d.pos[c].dist2(d.pos[b])).collect();
        r.sort_by(f64::total_cmp);
        r.windows(2).filter(|w| w[1] - w[0] > rel_tol * w[1]).count() + usize::from(!r.is_empty())
    };
    (count(0), count(1))
}

/// `√((i+j)/(2d+2))`: distance from the middle centre to an intersection of
/// the `i`-th and `j`-th circles in the `K_{3,n}` construction (`1 ≤ i, j ≤ d`).
pub fn k3n_middle_distance(i: usize, j: usize, d: usize) -> f64 {
    ((i + j) as f64 / (2 * d + 2) as f64).sqrt()
}

/// `K_{3,n}` with centres `(-1,0), (0,0), (1,0)` (vertices 0, 1, 2) and the
/// other class on intersections of circles of radius `√(1 + i/(d+1))`,
/// `1 ≤ i ≤ d`, about the outer centres, in lexicographic `(i, j)` order.
/// Vertices of the other class may lie on edges through the middle centre,
/// so the drawing is degenerate-allowed. At most `3d − 1` lengths.
pub fn draw_k3n(n: usize) -> Result<ConstructionResult> {
    if n == 0 {
        return Err(Error::param("K_{3,n} needs n >= 1"));
    }
    let d = ceil_sqrt_half(n);
    let mut pts = vec![Point::new(-1.0, 0.0), Point::ORIGIN, Point::new(1.0, 0.0)];
    let r2 = |i: usize| 1.0 + i as f64 / (d as f64 + 1.0);
    'fill: for i in 1..=d {
        for j in 1..=d {
            let (p, q) = circle_pair(r2(i), r2(j)).expect("radii in (1,2) always intersect");
            for pt in [p, q] {
                if pts.len() == n + 3 {
                    break 'fill;
                }
                pts.push(pt);
            }
        }
    }
    Ok(ConstructionResult {
        drawing: Drawing::new(complete_bipartite(3, n)?, pts, DrawingKind::DegenerateAllowed)?,
        claimed_bound: 3 * d - 1,
        lemma_tag: tags::K3N,
        seed: None,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::classify_lengths;

    #[test]
    fn small_polygons() {
        assert_eq!(draw_complete_ngon(3).unwrap().measured(1e-9), 1);
        assert_eq!(draw_complete_ngon(7).unwrap().measured(1e-9), 3);
        assert_eq!(draw_complete_ngon(10).unwrap().measured(1e-9), 5);
        assert!(draw_complete_ngon(2).is_err());
        // chord lengths 2 sin(kπ/7) are pairwise distinct
        let chords: Vec<f64> = (1..=3).map(|k| 2.0 * (k as f64 * std::f64::consts::PI / 7.0).sin()).collect();
        assert!(chords.windows(2).all(|w| w[1] - w[0] > 0.1));
    }

    #[test]
    fn bipartite_polygons() {
        for (n, k) in [(1, 1), (4, 2), (5, 3)] {
            let r = draw_complete_bipartite_ngon(n, n).unwrap();
            assert_eq!(r.measured(1e-9), k);
            assert_eq!(r.claimed_bound, k);
            assert!(check_strict(&r.drawing, 1e-9));
        }
        let r = draw_complete_bipartite_ngon(3, 7).unwrap();
        assert!(r.measured(1e-9) <= 4);
    }

    #[test]
    fn k2n_small_cases() {
        for n in [1, 2, 3, 8, 18] {
            let r = draw_k2n(n, 0).unwrap();
            assert_eq!(r.drawing.n(), n + 2);
            assert_eq!(r.measured(1e-9), ceil_sqrt_half(n), "n = {n}");
        }
        let r = draw_k2n(18, 5).unwrap();
        let (cv, cw) = k2n_circle_count(&r.drawing, 2, 1e-9);
        assert_eq!((cv, cw), (3, 3));
    }

    #[test]
    fn k2n_is_seed_deterministic() {
        assert_eq!(draw_k2n(50, 9).unwrap(), draw_k2n(50, 9).unwrap());
        assert_ne!(draw_k2n(50, 9).unwrap().drawing.pos, draw_k2n(50, 10).unwrap().drawing.pos);
    }

    #[test]
    fn k3n_middle_distances() {
        let r = draw_k3n(18).unwrap();
        let d = &r.drawing;
        let mut seen = Vec::new();
        for b in 3..d.n() {
            let dist = d.pos[1].dist(d.pos[b]);
            let matched = (2..=6).find(|&s| (dist - k3n_middle_distance(s, 0, 3)).abs() < 1e-9);
            assert!(matched.is_some(), "distance {dist}");
            seen.push(matched.unwrap());
        }
        seen.sort_unstable();
        seen.dedup();
        assert_eq!(seen, vec![2, 3, 4, 5, 6]);
        assert_eq!(classify_lengths(d, 1e-9).count(), 8);
        assert!(draw_k3n(1).unwrap().measured(1e-9) <= 2);
    }
}
