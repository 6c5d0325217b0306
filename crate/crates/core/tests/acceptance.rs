//! Acceptance suite: one PASS/FAIL line per criterion. Exits non-zero when a
//! criterion fails for any reason other than a documented impossibility.

mod common;

use std::time::{Duration, Instant};

use fewlen_core::bounds::{
    count_perfect_matchings, degree7_exponent, degree8_exponent, eval_regular_count_bound, poly_bound_exponent,
};
use fewlen_core::constructions::{
    ceil_sqrt_half, collinear_path_drawing, draw_cartesian_product, draw_complete_bipartite_ngon, draw_complete_ngon,
    draw_from_ordering, draw_h_partition, draw_k2n, draw_k3n, draw_k4minus_free, draw_power, draw_tree_bounded,
    draw_tree_unit, draw_treewidth_pipeline, h_partition_bound,
};
use fewlen_core::geometry::{
    adjacency_faithful_unit, check_strict, classify_lengths, classify_slopes, verify_drawing, Tolerances,
};
use fewlen_core::graph::{
    complete, complete_bipartite, cycle, grid, is_k4minus_free, layer_partition, random_bounded_degree,
    random_cactus, random_series_parallel, random_tree, tree_partition, HPartition, VertexOrdering,
};
use fewlen_core::search::{
    gradient_check, search_min_k, search_min_k_with, Budget, LengthAssignment, SearchOptions,
};
use fewlen_core::{Drawing, DrawingKind, Graph, Point};
use num_bigint::BigUint;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const REL_TOL: f64 = 1e-9;

enum Verdict {
    Pass(String),
    Fail(String),
    /// Fails as stated, but only where the statement is unsatisfiable.
    Impossible(String),
}

fn check(ok: bool, detail: String) -> Verdict {
    if ok {
        Verdict::Pass(detail)
    } else {
        Verdict::Fail(detail)
    }
}

fn count(d: &Drawing) -> usize {
    classify_lengths(d, REL_TOL).count()
}

/// No coincident vertices, no vertex on an edge, no zero-length edge.
fn strict_ok(d: &Drawing) -> bool {
    check_strict(d, 1e-9) && (0..d.graph.m()).all(|e| d.edge_length(e) > 0.0)
}

fn criterion_1() -> Verdict {
    let start = Instant::now();
    let mut bad = Vec::new();
    for n in 3..=100 {
        let d = draw_complete_ngon(n).unwrap().drawing;
        let c = count(&d);
        if c != n / 2 || c < (n - 1).div_ceil(3) || !check_strict(&d, 1e-9) {
            bad.push(n);
        }
    }
    let t = start.elapsed();
    check(bad.is_empty() && t < Duration::from_secs(1), format!("K_n, n=3..100: bad={bad:?}, time={t:.2?}"))
}

fn criterion_2() -> Verdict {
    let bad: Vec<usize> = (1..=100)
        .filter(|&n| {
            let d = draw_complete_bipartite_ngon(n, n).unwrap().drawing;
            count(&d) != n.div_ceil(2) || !strict_ok(&d)
        })
        .collect();
    check(bad.is_empty(), format!("K_{{n,n}}, n=1..100: bad={bad:?}"))
}

/// Collinear triples found by direct orientation tests, scaled by the
/// drawing diameter.
fn collinear(pts: &[Point]) -> Vec<[usize; 3]> {
    let diam = pts.iter().flat_map(|a| pts.iter().map(move |b| a.dist(*b))).fold(0.0, f64::max);
    let eps = 1e-9 * diam * diam;
    let mut out = Vec::new();
    for i in 0..pts.len() {
        for j in i + 1..pts.len() {
            for k in j + 1..pts.len() {
                if (pts[j] - pts[i]).cross(pts[k] - pts[i]).abs() <= eps {
                    out.push([i, j, k]);
                }
            }
        }
    }
    out
}

fn criterion_3() -> Verdict {
    let mut bad = Vec::new();
    let mut forced = Vec::new();
    for n in 1..=200 {
        let want = common::ceil_sqrt_half_oracle(n);
        let r = draw_k2n(n, n as u64).unwrap();
        let d = &r.drawing;
        if count(d) != want || !strict_ok(d) {
            bad.push(n);
            continue;
        }
        let triples = collinear(&d.pos);
        if triples.is_empty() {
            continue;
        }
        // With d lengths every other-class vertex sits at a pair of distances
        // from the two centres; equal pairs put it on their bisector. Beyond
        // 2d(d−1) + 2 vertices three such points are unavoidable.
        let on_bisector = |k: usize| (d.pos[k].x).abs() <= 1e-9;
        let unavoidable = n > 2 * want * (want - 1) + 2;
        if unavoidable && triples.iter().all(|t| t.iter().all(|&k| on_bisector(k))) {
            forced.push(n);
        } else {
            bad.push(n);
        }
    }
    let detail = format!(
        "K_{{2,n}}, n=1..200: exact count and strict everywhere except {bad:?}; \
         three collinear points for n in {forced:?}, all on the centres' bisector, where any drawing \
         with the minimum number of lengths must place at least three points"
    );
    if !bad.is_empty() {
        Verdict::Fail(detail)
    } else if !forced.is_empty() {
        Verdict::Impossible(detail)
    } else {
        Verdict::Pass(detail)
    }
}

fn criterion_4() -> Verdict {
    let mut bad = Vec::new();
    for n in 1..=200 {
        let d = ceil_sqrt_half(n);
        let dr = draw_k3n(n).unwrap().drawing;
        let targets: Vec<f64> = (2..=2 * d).map(|s| (s as f64 / (2 * d + 2) as f64).sqrt()).collect();
        let mid: Vec<f64> = (3..dr.n()).map(|b| dr.pos[1].dist(dr.pos[b])).collect();
        let matched = mid.iter().all(|&x| targets.iter().any(|&t| (x - t).abs() <= 1e-9));
        let mut distinct: Vec<f64> = Vec::new();
        for &x in &mid {
            if !distinct.iter().any(|&y| (x - y).abs() <= 1e-9) {
                distinct.push(x);
            }
        }
        if count(&dr) > 3 * d - 1 || !matched || distinct.len() > 2 * d - 1 {
            bad.push(n);
        }
    }
    check(bad.is_empty(), format!("K_{{3,n}}, n=1..200: bad={bad:?}"))
}

fn criterion_5() -> Verdict {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let mut bad = Vec::new();
    for i in 0..100 {
        let n = rng.gen_range(2..=200);
        let t = random_tree(n, i).unwrap();
        let d = draw_tree_unit(&t).unwrap().drawing;
        let unit = (0..t.m()).all(|e| (d.edge_length(e) - 1.0).abs() <= 1e-9);
        let rep = verify_drawing(&d, &Tolerances::default());
        if !unit || rep.crossing_count != 0 || rep.is_degenerate || !adjacency_faithful_unit(&d, 1e-9) {
            bad.push((n, i));
        }
    }
    check(bad.is_empty(), format!("100 random trees, n<=200: bad={bad:?}"))
}

fn criterion_6() -> Verdict {
    let mut disagree = Vec::new();
    let mut graphs = 0;
    for n in 1..=6 {
        for g in common::connected_graphs_up_to_iso(n) {
            graphs += 1;
            if is_k4minus_free(&g).free == common::has_diamond_minor(&g) {
                disagree.push(common::pairs(n).len());
            }
        }
    }
    let mut bad_cacti = Vec::new();
    for seed in 0..50 {
        let g = random_cactus(1 + seed as usize % 8, seed).unwrap();
        let ok = draw_k4minus_free(&g, seed)
            .map(|r| count(&r.drawing) == 1 && adjacency_faithful_unit(&r.drawing, 1e-9) && strict_ok(&r.drawing))
            .unwrap_or(false);
        if !ok {
            bad_cacti.push(seed);
        }
    }
    check(
        disagree.is_empty() && bad_cacti.is_empty(),
        format!("minor oracle on {graphs} connected graphs (n<=6): {} disagreements; 50 cacti: bad={bad_cacti:?}", disagree.len()),
    )
}

fn unit_square() -> Drawing {
    let pos = vec![Point::new(0.0, 0.0), Point::new(1.0, 0.0), Point::new(1.0, 1.0), Point::new(0.0, 1.0)];
    Drawing::new(cycle(4).unwrap(), pos, DrawingKind::Strict).unwrap()
}

fn criterion_7() -> Verdict {
    let mut notes = Vec::new();
    let mut ok = true;
    let c4c4 = draw_cartesian_product(&unit_square(), &unit_square(), 1).unwrap().drawing;
    let k3 = draw_complete_ngon(3).unwrap().drawing;
    let k2 = Drawing::new(complete(2).unwrap(), vec![Point::ORIGIN, Point::new(1.0, 0.0)], DrawingKind::Strict).unwrap();
    let k33 = draw_cartesian_product(&k3, &k3, 2).unwrap().drawing;
    let k332 = draw_cartesian_product(&k33, &k2, 3).unwrap().drawing;
    let c5 = Drawing::new(cycle(5).unwrap(), draw_complete_ngon(5).unwrap().drawing.pos, DrawingKind::Strict).unwrap();
    for (name, d) in [("C4xC4", c4c4), ("K3xK3xK2", k332)] {
        let c = count(&d);
        ok &= c == 1 && strict_ok(&d);
        notes.push(format!("{name}={c}"));
    }
    for p in 1..=3 {
        let d = draw_power(&c5, p, 4).unwrap().drawing;
        let c = count(&d);
        ok &= c == 1 && d.n() == 5usize.pow(p as u32) && strict_ok(&d);
        notes.push(format!("C5^{p}={c}"));
    }
    // random pairs of small construction outputs
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let mut pair_bad = Vec::new();
    let pick = |rng: &mut ChaCha8Rng| -> Drawing {
        match rng.gen_range(0..5) {
            0 => draw_complete_ngon(rng.gen_range(3..=7)).unwrap().drawing,
            1 => {
                let a = rng.gen_range(1..=4);
                draw_complete_bipartite_ngon(a, rng.gen_range(1..=4)).unwrap().drawing
            }
            2 => draw_k2n(rng.gen_range(1..=8), rng.gen()).unwrap().drawing,
            3 => draw_tree_unit(&random_tree(rng.gen_range(2..=12), rng.gen()).unwrap()).unwrap().drawing,
            _ => {
                let n = rng.gen_range(4..=10);
                let g = random_bounded_degree(n, 3, rng.gen()).unwrap();
                let mut order: Vec<usize> = (0..n).collect();
                order.shuffle(rng);
                draw_from_ordering(&g, &VertexOrdering::from_order(order).unwrap()).unwrap().drawing
            }
        }
    };
    for i in 0..20 {
        let g = pick(&mut rng);
        let h = pick(&mut rng);
        let (cg, ch) = (count(&g), count(&h));
        let p = draw_cartesian_product(&g, &h, i).unwrap().drawing;
        if count(&p) > cg + ch - 1 || p.graph != g.graph.cartesian_product(&h.graph) {
            pair_bad.push(i);
        }
    }
    ok &= pair_bad.is_empty();
    check(ok, format!("{}; 20 random pairs: bad={pair_bad:?}", notes.join(" ")))
}

fn random_graph(rng: &mut ChaCha8Rng) -> Graph {
    let n = rng.gen_range(2..=30);
    let p: f64 = rng.gen_range(0.05..0.6);
    let edges: Vec<(usize, usize)> = common::pairs(n).into_iter().filter(|_| rng.gen_bool(p)).collect();
    Graph::from_edges(n, edges).unwrap()
}

fn criterion_8() -> Verdict {
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    let mut bad = 0;
    for _ in 0..1000 {
        let g = random_graph(&mut rng);
        let mut order: Vec<usize> = (0..g.n()).collect();
        order.shuffle(&mut rng);
        let ord = VertexOrdering::from_order(order).unwrap();
        let pos: Vec<usize> = (0..g.n()).map(|v| ord.position(v)).collect();
        let d = draw_from_ordering(&g, &ord).unwrap().drawing;
        if count(&d) > common::cyclic_width_oracle(&g, &pos) {
            bad += 1;
        }
    }
    check(bad == 0, format!("1000 random (graph, ordering) pairs: {bad} above cyclic width"))
}

fn criterion_9() -> Verdict {
    let formula = |s: usize, l: usize, w: usize| s * l * w * (w - 1) + w / 2 + l;
    let mut cases = 0;
    let mut bad = Vec::new();
    let mut suite: Vec<(String, Graph, HPartition, Drawing)> = Vec::new();
    let layered = [
        ("grid:6,9", grid(6, 9).unwrap()),
        ("cycle:20", cycle(20).unwrap()),
        ("sp:60", random_series_parallel(60, 4, 9).unwrap()),
        ("bd:40", random_bounded_degree(40, 3, 9).unwrap()),
        ("tree:50", random_tree(50, 9).unwrap()),
    ];
    for (name, g) in layered {
        let part = layer_partition(&g).unwrap();
        let h = collinear_path_drawing(&part.quotient).unwrap();
        suite.push((format!("{name}/layers"), g, part, h));
    }
    for (name, g) in [
        ("sp:80", random_series_parallel(80, 4, 10).unwrap()),
        ("grid:5,5", grid(5, 5).unwrap()),
        ("bd:30", random_bounded_degree(30, 3, 10).unwrap()),
    ] {
        let part = tree_partition(&g).unwrap();
        let h = draw_tree_bounded(&part.quotient).unwrap().result.drawing;
        suite.push((format!("{name}/tree"), g, part, h));
    }
    // path quotient with parts of even size k: columns of a k × c grid
    for k in [2usize, 4, 6] {
        let g = grid(k, 7).unwrap();
        let parts: Vec<Vec<usize>> = (0..7).map(|c| (0..k).map(|r| r * 7 + c).collect()).collect();
        let part = HPartition::new(&g, parts).unwrap();
        let h = collinear_path_drawing(&part.quotient).unwrap();
        suite.push((format!("grid:{k},7/columns"), g, part, h));
    }
    for (i, (name, g, part, h)) in suite.iter().enumerate() {
        cases += 1;
        let s = classify_slopes(h, 1e-9).count().max(1);
        let l = count(h).max(1);
        let w = part.width();
        match draw_h_partition(g, part, h, i as u64) {
            Ok(r) if count(&r.result.drawing) <= formula(s, l, w) && strict_ok(&r.result.drawing) => {
                if name.ends_with("/columns") {
                    // k(k − ½) + 1 with k = w even
                    let limit = (w * w) as f64 - w as f64 / 2.0 + 1.0;
                    if count(&r.result.drawing) as f64 > limit || h_partition_bound(1, 1, w) as f64 != limit {
                        bad.push(name.clone());
                    }
                }
            }
            _ => bad.push(name.clone()),
        }
    }
    for k in (2..=40).step_by(2) {
        if h_partition_bound(1, 1, k) as f64 != (k * k) as f64 - k as f64 / 2.0 + 1.0 {
            bad.push(format!("formula k={k}"));
        }
    }
    check(bad.is_empty(), format!("{cases} partitioned drawings: bad={bad:?}"))
}

fn slope(xs: &[f64], ys: &[f64]) -> f64 {
    let n = xs.len() as f64;
    let mx = xs.iter().sum::<f64>() / n;
    let my = ys.iter().sum::<f64>() / n;
    let cov: f64 = xs.iter().zip(ys).map(|(x, y)| (x - mx) * (y - my)).sum();
    let var: f64 = xs.iter().map(|x| (x - mx).powi(2)).sum();
    cov / var
}

fn criterion_10() -> Verdict {
    let sizes = [64usize, 128, 256, 512];
    let seeds = 0..4u64;
    let (mut xs, mut ys) = (Vec::new(), Vec::new());
    let mut over = Vec::new();
    let mut means = Vec::new();
    for &n in &sizes {
        let mut sum = 0.0;
        for seed in seeds.clone() {
            let g = random_series_parallel(n, 4, seed).unwrap();
            let r = match draw_treewidth_pipeline(&g, seed) {
                Ok(r) => r,
                Err(e) => return Verdict::Fail(format!("n={n} seed={seed}: {e}")),
            };
            let c = count(&r.result.drawing);
            let l = (2.0 * n as f64 + 1.0).log2();
            let w = r.partition_width as f64;
            let bound = (g.max_degree() as f64 * w - 1.0) * (2.0 * l - 1.0) * w * (w - 1.0)
                + (r.partition_width / 2) as f64
                + 2.0 * l
                - 1.0;
            if c as f64 > bound {
                over.push((n, seed));
            }
            xs.push((n as f64).ln());
            ys.push(c as f64);
            sum += c as f64;
        }
        means.push(format!("{n}:{:.1}", sum / seeds.clone().count() as f64));
    }
    let b = slope(&xs, &ys);
    check(b > 0.0 && over.is_empty(), format!("mean counts {}; slope vs ln n = {b:.3}; over bound: {over:?}", means.join(" ")))
}

/// Labelled 2-regular graphs: choose the cycle through the lowest vertex.
fn two_regular_oracle(n: usize) -> BigUint {
    let mut a = vec![BigUint::from(0u32); n + 1];
    a[0] = BigUint::from(1u32);
    for m in 3..=n {
        let mut total = BigUint::from(0u32);
        for k in 3..=m {
            // C(m−1, k−1) choices of the other cycle vertices, (k−1)!/2 cycles
            let mut ways = BigUint::from(1u32);
            for i in 0..k - 1 {
                ways = ways * BigUint::from(m - 1 - i) / BigUint::from(i + 1);
            }
            for i in 1..k {
                ways *= BigUint::from(i);
            }
            ways /= BigUint::from(2u32);
            total += ways * &a[m - k];
        }
        a[m] = total;
    }
    a[n].clone()
}

fn criterion_11() -> Verdict {
    let mut bad = Vec::new();
    for n in (2..=12).step_by(2) {
        if count_perfect_matchings(n).unwrap() != BigUint::from(common::enumerate_matchings(n)) {
            bad.push(format!("matchings n={n}"));
        }
    }
    let two_reg = common::enumerate_regular(6, 2);
    if two_reg != 70 || two_regular_oracle(6) != BigUint::from(70u32) {
        bad.push(format!("2-regular on 6 = {two_reg}"));
    }
    let mut checked = 0;
    for (delta, range) in [(1usize, 6..=40usize), (2, 12..=40)] {
        for n in range {
            if (n * delta) % 2 == 1 {
                continue;
            }
            let exact = if delta == 1 { count_perfect_matchings(n).unwrap() } else { two_regular_oracle(n) };
            if delta == 1 && n <= 12 && exact != BigUint::from(common::enumerate_matchings(n)) {
                bad.push(format!("matchings n={n}"));
            }
            let b = eval_regular_count_bound(n, delta).unwrap();
            checked += 1;
            if b.log_bound > fewlen_core::bounds::ln_big(&exact) + 1e-9 {
                bad.push(format!("regular n={n} Δ={delta}"));
            }
        }
    }
    check(bad.is_empty(), format!("matchings n<=12, 2-regular(6)={two_reg}, {checked} regular-count cases: bad={bad:?}"))
}

fn criterion_12() -> Verdict {
    let mut bad = Vec::new();
    let mut rng = ChaCha8Rng::seed_from_u64(12);
    let mut graphs: Vec<(String, Graph)> = Vec::new();
    for i in 0..5 {
        graphs.push((format!("tree{i}"), random_tree(rng.gen_range(2..=40), i).unwrap()));
        graphs.push((format!("cycle{i}"), cycle(rng.gen_range(3..=40)).unwrap()));
        graphs.push((format!("cactus{i}"), random_cactus(rng.gen_range(1..=6), i).unwrap()));
    }
    let mut slowest = Duration::ZERO;
    for (name, g) in &graphs {
        let start = Instant::now();
        let r = search_min_k(g, 3, Budget::default(), 1);
        let t = start.elapsed();
        slowest = slowest.max(t);
        let valid = r.best_drawing.as_ref().is_some_and(|d| count(d) <= 1 && strict_ok(d));
        if r.k_achieved != Some(1) || !valid || t > Duration::from_secs(10) {
            bad.push(name.clone());
        }
    }
    let k28 = search_min_k(&complete_bipartite(2, 8).unwrap(), 3, Budget::default(), 1);
    if !k28.k_achieved.is_some_and(|k| k <= 2) {
        bad.push("K_{2,8}".into());
    }
    let opts = SearchOptions { unit_exclusion: true, ..SearchOptions::default() };
    let k4 = search_min_k_with(&complete(4).unwrap(), 1, Budget::work(10_000), 3, &opts);
    if k4.k_achieved.is_some() || k4.work_used < 10_000 {
        bad.push(format!("K_4 unit: k={:?} work={}", k4.k_achieved, k4.work_used));
    }
    let g = random_bounded_degree(9, 4, 2).unwrap();
    let runs: Vec<_> = (0..2).map(|_| search_min_k(&g, 4, Budget::work(200), 77)).collect();
    if runs[0] != runs[1] {
        bad.push("determinism".into());
    }
    check(
        bad.is_empty(),
        format!("15 trees/cycles/cacti (slowest {slowest:.2?}), K_{{2,8}} k={:?}, K_4 unit over {} restarts: bad={bad:?}", k28.k_achieved, k4.work_used),
    )
}

fn criterion_13() -> Verdict {
    let mut rng = ChaCha8Rng::seed_from_u64(13);
    let mut worst: f64 = 0.0;
    for i in 0..100 {
        let g = random_bounded_degree(rng.gen_range(3..=20), rng.gen_range(2..=5), i).unwrap();
        let k = rng.gen_range(1..=4);
        let class_of = (0..g.m()).map(|_| rng.gen_range(0..k)).collect();
        let lengths = (0..k).map(|j| 0.5 + j as f64 * 0.6 + rng.gen_range(0.0..0.5)).collect();
        let a = LengthAssignment::new(class_of, lengths).unwrap();
        let pos: Vec<Point> = (0..g.n()).map(|_| Point::new(rng.gen_range(-2.0..2.0), rng.gen_range(-2.0..2.0))).collect();
        worst = worst.max(gradient_check(&g, &a, &pos));
    }
    check(worst <= 1e-5, format!("100 random instances: worst relative error {worst:.2e}"))
}

fn criterion_14() -> Verdict {
    let e8 = degree8_exponent(1e6, 1e-9);
    let mut worst: f64 = 0.0;
    for delta in [5.0, 7.0, 10.0, 100.0, 1e4, 1e6] {
        for eps in [1e-9, 1e-3, 0.1, 0.5, 1.0] {
            worst = worst.max((poly_bound_exponent(4.0 / 3.0, 1.0, delta, eps) - degree7_exponent(delta, eps)).abs());
        }
    }
    check(
        (e8 - 0.864138).abs() <= 1e-3 && worst <= 1e-12,
        format!("degree8(1e6) = {e8:.6}; poly vs degree7 max diff {worst:.1e}"),
    )
}

fn main() {
    let criteria: [(u32, fn() -> Verdict); 14] = [
        (1, criterion_1),
        (2, criterion_2),
        (3, criterion_3),
        (4, criterion_4),
        (5, criterion_5),
        (6, criterion_6),
        (7, criterion_7),
        (8, criterion_8),
        (9, criterion_9),
        (10, criterion_10),
        (11, criterion_11),
        (12, criterion_12),
        (13, criterion_13),
        (14, criterion_14),
    ];
    let mut hard_failures = 0;
    for (i, f) in criteria {
        let start = Instant::now();
        let v = f();
        let t = start.elapsed();
        match v {
            Verdict::Pass(d) => println!("criterion {i:2}: PASS  {d} [{t:.2?}]"),
            Verdict::Fail(d) => {
                hard_failures += 1;
                println!("criterion {i:2}: FAIL  {d} [{t:.2?}]");
            }
            Verdict::Impossible(d) => println!("criterion {i:2}: FAIL  (unsatisfiable as stated) {d} [{t:.2?}]"),
        }
    }
    if hard_failures > 0 {
        std::process::exit(1);
    }
}
