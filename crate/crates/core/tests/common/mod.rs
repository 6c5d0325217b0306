//! Independent brute-force oracles shared by the integration tests.
#![allow(dead_code)]

use fewlen_core::Graph;

/// Vertex pairs `(i, j)`, `i < j`, in lexicographic order.
pub fn pairs(n: usize) -> Vec<(usize, usize)> {
    (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect()
}

pub fn graph_from_mask(n: usize, mask: u64) -> Graph {
    let p = pairs(n);
    Graph::from_edges(n, p.iter().enumerate().filter(|(b, _)| mask >> b & 1 == 1).map(|(_, &e)| e)).unwrap()
}

fn adjacency(n: usize, mask: u64) -> Vec<Vec<bool>> {
    let mut adj = vec![vec![false; n]; n];
    for (b, &(i, j)) in pairs(n).iter().enumerate() {
        if mask >> b & 1 == 1 {
            adj[i][j] = true;
            adj[j][i] = true;
        }
    }
    adj
}

fn connected_set(adj: &[Vec<bool>], set: &[usize]) -> bool {
    if set.is_empty() {
        return false;
    }
    let mut seen = vec![set[0]];
    let mut i = 0;
    while i < seen.len() {
        let v = seen[i];
        i += 1;
        for &w in set {
            if adj[v][w] && !seen.contains(&w) {
                seen.push(w);
            }
        }
    }
    seen.len() == set.len()
}

pub fn is_connected_mask(n: usize, mask: u64) -> bool {
    n <= 1 || connected_set(&adjacency(n, mask), &(0..n).collect::<Vec<_>>())
}

/// Smallest relabelled edge mask over all vertex permutations.
pub fn canonical_mask(n: usize, mask: u64) -> u64 {
    let p = pairs(n);
    let index = |a: usize, b: usize| {
        let (a, b) = if a < b { (a, b) } else { (b, a) };
        p.iter().position(|&e| e == (a, b)).unwrap()
    };
    let mut perm: Vec<usize> = (0..n).collect();
    let mut best = u64::MAX;
    loop {
        let mut m = 0u64;
        for (b, &(i, j)) in p.iter().enumerate() {
            if mask >> b & 1 == 1 {
                m |= 1 << index(perm[i], perm[j]);
            }
        }
        best = best.min(m);
        // next lexicographic permutation
        let Some(i) = (0..n.saturating_sub(1)).rev().find(|&i| perm[i] < perm[i + 1]) else { break };
        let j = (i + 1..n).rev().find(|&j| perm[j] > perm[i]).unwrap();
        perm.swap(i, j);
        perm[i + 1..].reverse();
    }
    best
}

/// Connected graphs on `n` vertices, one per isomorphism class.
pub fn connected_graphs_up_to_iso(n: usize) -> Vec<Graph> {
    let total = n * n.saturating_sub(1) / 2;
    let mut seen = std::collections::BTreeSet::new();
    let mut out = Vec::new();
    for mask in 0..(1u64 << total) {
        if !is_connected_mask(n, mask) {
            continue;
        }
        if seen.insert(canonical_mask(n, mask)) {
            out.push(graph_from_mask(n, mask));
        }
    }
    out
}

/// Does `g` have `K_4` minus an edge as a minor? Tries every assignment of
/// vertices to four branch sets (or to none): each set must be nonempty and
/// connected and at least five of the six pairs of sets must be joined by
/// an edge.
pub fn has_diamond_minor(g: &Graph) -> bool {
    let n = g.n();
    let adj: Vec<Vec<bool>> = (0..n).map(|i| (0..n).map(|j| g.has_edge(i, j)).collect()).collect();
    let mut label = vec![0usize; n];
    let total = 5usize.pow(n as u32);
    for code in 0..total {
        let mut c = code;
        for l in label.iter_mut() {
            *l = c % 5;
            c /= 5;
        }
        let sets: Vec<Vec<usize>> = (1..=4).map(|s| (0..n).filter(|&v| label[v] == s).collect()).collect();
        if !sets.iter().all(|s| connected_set(&adj, s)) {
            continue;
        }
        let mut joined = 0;
        for a in 0..4 {
            for b in a + 1..4 {
                if sets[a].iter().any(|&u| sets[b].iter().any(|&w| adj[u][w])) {
                    joined += 1;
                }
            }
        }
        if joined >= 5 {
            return true;
        }
    }
    false
}

/// Perfect matchings on `n` points, counted by listing them: repeatedly
/// pair the first free point with every other free point.
pub fn enumerate_matchings(n: usize) -> u64 {
    fn go(free: &mut Vec<usize>) -> u64 {
        if free.is_empty() {
            return 1;
        }
        let first = free.remove(0);
        let mut total = 0;
        for i in 0..free.len() {
            let partner = free.remove(i);
            total += go(free);
            free.insert(i, partner);
        }
        free.insert(0, first);
        total
    }
    go(&mut (0..n).collect())
}

/// Labelled `d`-regular graphs on `n` vertices, by checking every edge set.
pub fn enumerate_regular(n: usize, d: usize) -> u64 {
    let p = pairs(n);
    let mut count = 0;
    for mask in 0..(1u64 << p.len()) {
        let mut deg = vec![0usize; n];
        for (b, &(i, j)) in p.iter().enumerate() {
            if mask >> b & 1 == 1 {
                deg[i] += 1;
                deg[j] += 1;
            }
        }
        if deg.iter().all(|&x| x == d) {
            count += 1;
        }
    }
    count
}

/// `max_{uv} min(|σu − σv|, n − |σu − σv|)` for positions `pos`.
pub fn cyclic_width_oracle(g: &Graph, pos: &[usize]) -> usize {
    let n = g.n();
    g.edges()
        .iter()
        .map(|&(u, v)| {
            let d = pos[u].abs_diff(pos[v]);
            d.min(n - d)
        })
        .max()
        .unwrap_or(0)
}

/// Least `d` with `2d² ≥ n`.
pub fn ceil_sqrt_half_oracle(n: usize) -> usize {
    (0..).find(|d| 2 * d * d >= n).unwrap()
}
