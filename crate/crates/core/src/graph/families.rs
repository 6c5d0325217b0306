//! Named graph families and seeded random generators.

use std::fmt;
use std::str::FromStr;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::Graph;
use crate::error::{Error, Result};

pub fn complete(n: usize) -> Result<Graph> {
    let edges = (0..n).flat_map(|j| (0..j).map(move |i| (i, j)));
    Graph::from_edges(n, edges)
}

/// `K_{a,b}` with sides `0..a` and `a..a+b`.
pub fn complete_bipartite(a: usize, b: usize) -> Result<Graph> {
    let edges = (0..a).flat_map(|i| (0..b).map(move |j| (i, a + j)));
    Graph::from_edges(a + b, edges)
}

pub fn path(n: usize) -> Result<Graph> {
    Graph::from_edges(n, (1..n).map(|i| (i - 1, i)))
}

pub fn cycle(n: usize) -> Result<Graph> {
    if n < 3 {
        return Err(Error::param(format!("cycle needs n >= 3, got {n}")));
    }
    Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n)))
}

/// `K_{1,k}` with centre 0.
pub fn star(k: usize) -> Result<Graph> {
    Graph::from_edges(k + 1, (1..=k).map(|i| (0, i)))
}

pub fn hypercube(d: usize) -> Result<Graph> {
    if d > 20 {
        return Err(Error::param(format!("hypercube dimension {d} too large")));
    }
    let n = 1usize << d;
    let edges = (0..n).flat_map(|v| (0..d).map(move |b| (v, v ^ (1 << b)))).filter(|&(u, v)| u < v);
    Graph::from_edges(n, edges)
}

pub fn grid(rows: usize, cols: usize) -> Result<Graph> {
    let id = |r: usize, c: usize| r * cols + c;
    let mut edges = Vec::new();
    for r in 0..rows {
        for c in 0..cols {
            if c + 1 < cols {
                edges.push((id(r, c), id(r, c + 1)));
            }
            if r + 1 < rows {
                edges.push((id(r, c), id(r + 1, c)));
            }
        }
    }
    Graph::from_edges(rows * cols, edges)
}

/// Spine `0..spine` with `legs` pendant vertices on every spine vertex.
pub fn caterpillar(spine: usize, legs: usize) -> Result<Graph> {
    if spine == 0 {
        return Err(Error::param("caterpillar needs a non-empty spine"));
    }
    let mut edges: Vec<(usize, usize)> = (1..spine).map(|i| (i - 1, i)).collect();
    let mut next = spine;
    for s in 0..spine {
        for _ in 0..legs {
            edges.push((s, next));
            next += 1;
        }
    }
    Graph::from_edges(next, edges)
}

/// Complete binary tree of the given depth (`2^(depth+1) - 1` vertices, heap order).
pub fn complete_binary_tree(depth: usize) -> Result<Graph> {
    if depth > 20 {
        return Err(Error::param(format!("depth {depth} too large")));
    }
    let n = (1usize << (depth + 1)) - 1;
    Graph::from_edges(n, (1..n).map(|v| ((v - 1) / 2, v)))
}

/// Centre 0 joined to every vertex of the path `1..=k`.
pub fn fan(k: usize) -> Result<Graph> {
    let mut edges: Vec<(usize, usize)> = (1..=k).map(|i| (0, i)).collect();
    edges.extend((2..=k).map(|i| (i - 1, i)));
    Graph::from_edges(k + 1, edges)
}

/// Uniform random labelled tree via a Prüfer sequence.
pub fn random_tree(n: usize, seed: u64) -> Result<Graph> {
    if n == 0 {
        return Err(Error::param("random tree needs n >= 1"));
    }
    if n <= 2 {
        return path(n);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let seq: Vec<usize> = (0..n - 2).map(|_| rng.gen_range(0..n)).collect();
    let mut degree = vec![1usize; n];
    for &s in &seq {
        degree[s] += 1;
    }
    let mut leaves: std::collections::BTreeSet<usize> = (0..n).filter(|&v| degree[v] == 1).collect();
    let mut edges = Vec::with_capacity(n - 1);
    for &s in &seq {
        let leaf = *leaves.iter().next().expect("a tree always has a leaf");
        leaves.remove(&leaf);
        edges.push((leaf, s));
        degree[s] -= 1;
        if degree[s] == 1 {
            leaves.insert(s);
        }
    }
    let rest: Vec<usize> = leaves.into_iter().collect();
    edges.push((rest[0], rest[1]));
    Graph::from_edges(n, edges)
}

/// Frame graph on `v_1..v_n` (vertex `i-1` here) with edges `|i-j| <= 2`.
pub fn frame(n: usize) -> Result<Graph> {
    if n == 0 || n % 6 != 0 {
        return Err(Error::param(format!("n must be ≡ 0 mod 6 (got {n})")));
    }
    let mut edges: Vec<(usize, usize)> = (1..n).map(|i| (i - 1, i)).collect();
    edges.extend((2..n).map(|i| (i - 2, i)));
    Graph::from_edges(n, edges)
}

/// The vertices `v_i` with `i ≡ 1 (mod 3)`, as 0-based indices.
pub fn frame_matching_set(n: usize) -> Vec<usize> {
    (0..n).step_by(3).collect()
}

/// Frame graph plus a perfect matching on [`frame_matching_set`].
pub fn frame_with_matching(n: usize, matching: &[(usize, usize)]) -> Result<Graph> {
    let base = frame(n)?;
    let set = frame_matching_set(n);
    let mut covered = vec![false; n];
    for &(u, v) in matching {
        for x in [u, v] {
            if x >= n || x % 3 != 0 {
                return Err(Error::param(format!("matching vertex {x} is not in the matching set")));
            }
            if covered[x] {
                return Err(Error::param(format!("vertex {x} matched twice")));
            }
            covered[x] = true;
        }
        if u == v {
            return Err(Error::param(format!("matching pair ({u}, {v}) is a loop")));
        }
    }
    if set.iter().any(|&v| !covered[v]) {
        return Err(Error::param("matching is not perfect on the matching set"));
    }
    let edges = base.edges().iter().copied().chain(matching.iter().copied());
    Graph::from_edges(n, edges)
}

/// Uniformly random perfect matching on the frame matching set.
pub fn random_frame_matching(n: usize, seed: u64) -> Result<Vec<(usize, usize)>> {
    frame(n)?;
    let mut set = frame_matching_set(n);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    set.shuffle(&mut rng);
    Ok(set.chunks(2).map(|c| (c[0].min(c[1]), c[0].max(c[1]))).collect())
}

/// Cactus made of `cycles` cycles of length 3..=8, each glued at one random
/// existing vertex.
pub fn random_cactus(cycles: usize, seed: u64) -> Result<Graph> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut n = 1usize;
    let mut edges = Vec::new();
    for _ in 0..cycles {
        let len = rng.gen_range(3..=8);
        let at = rng.gen_range(0..n);
        let mut ring = vec![at];
        ring.extend(n..n + len - 1);
        n += len - 1;
        for i in 0..len {
            edges.push((ring[i], ring[(i + 1) % len]));
        }
    }
    Graph::from_edges(n, edges)
}

/// Connected series-parallel graph (partial 2-tree) with maximum degree at
/// most `max_degree`, grown from an edge by subdividing edges or adding a
/// vertex adjacent to both ends of an edge.
pub fn random_series_parallel(n: usize, max_degree: usize, seed: u64) -> Result<Graph> {
    if n < 2 || max_degree < 2 {
        return Err(Error::param("series-parallel generator needs n >= 2 and max degree >= 2"));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut edges = vec![(0usize, 1usize)];
    let mut degree = vec![1usize, 1];
    for w in 2..n {
        let parallel = rng.gen_bool(0.5);
        let candidates: Vec<usize> = if parallel {
            (0..edges.len())
                .filter(|&i| degree[edges[i].0] < max_degree && degree[edges[i].1] < max_degree)
                .collect()
        } else {
            Vec::new()
        };
        degree.push(2);
        if let Some(&i) = candidates.choose(&mut rng) {
            let (a, b) = edges[i];
            edges.push((a, w));
            edges.push((b, w));
            degree[a] += 1;
            degree[b] += 1;
        } else {
            let i = rng.gen_range(0..edges.len());
            let (a, b) = edges[i];
            edges[i] = (a, w);
            edges.push((w, b));
        }
    }
    Graph::from_edges(n, edges)
}

/// Random connected graph with maximum degree `max_degree`: a random tree
/// with bounded degree, then random extra edges that respect the cap.
pub fn random_bounded_degree(n: usize, max_degree: usize, seed: u64) -> Result<Graph> {
    if n == 0 || max_degree < 2 {
        return Err(Error::param("bounded-degree generator needs n >= 1 and max degree >= 2"));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut degree = vec![0usize; n];
    let mut edges = std::collections::BTreeSet::new();
    for v in 1..n {
        let open: Vec<usize> = (0..v).filter(|&u| degree[u] < max_degree - 1 || u == v - 1).collect();
        let u = *open.choose(&mut rng).unwrap();
        edges.insert((u, v));
        degree[u] += 1;
        degree[v] += 1;
    }
    for _ in 0..4 * n {
        let u = rng.gen_range(0..n);
        let v = rng.gen_range(0..n);
        if u == v || degree[u] >= max_degree || degree[v] >= max_degree {
            continue;
        }
        if edges.insert((u.min(v), u.max(v))) {
            degree[u] += 1;
            degree[v] += 1;
        }
    }
    Graph::from_edges(n, edges)
}

/// A parsed family descriptor such as `complete:10` or `frame:18`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Family {
    Complete(usize),
    CompleteBipartite(usize, usize),
    Path(usize),
    Cycle(usize),
    Hypercube(usize),
    Star(usize),
    Grid(usize, usize),
    Caterpillar(usize, usize),
    BinaryTree(usize),
    Fan(usize),
    RandomTree { n: usize, seed: u64 },
    Frame(usize),
    FrameWithMatching { n: usize, seed: u64 },
    Cactus { cycles: usize, seed: u64 },
    SeriesParallel { n: usize, seed: u64 },
    BoundedDegree { n: usize, degree: usize, seed: u64 },
}

impl Family {
    /// Descriptor syntax for every family, for `--list-families`.
    pub const SYNTAX: &'static [(&'static str, &'static str)] = &[
        ("complete:N", "complete graph K_N"),
        ("complete_bipartite:A,B", "complete bipartite graph K_{A,B}"),
        ("path:N", "path on N vertices"),
        ("cycle:N", "cycle on N >= 3 vertices"),
        ("hypercube:D", "D-dimensional hypercube"),
        ("star:K", "star K_{1,K}"),
        ("grid:R,C", "R x C grid"),
        ("caterpillar:S,L", "spine of S vertices, L legs each"),
        ("binary_tree:D", "complete binary tree of depth D"),
        ("fan:K", "vertex joined to every vertex of a K-path"),
        ("random_tree:N,SEED", "uniform random labelled tree"),
        ("frame:N", "frame graph, N ≡ 0 mod 6"),
        ("frame_with_matching:N,SEED", "frame graph plus random perfect matching"),
        ("cactus:K,SEED", "K random cycles glued at cut vertices"),
        ("series_parallel:N,SEED", "random series-parallel graph, max degree 4"),
        ("bounded_degree:N,D,SEED", "random connected graph with max degree D"),
    ];

    pub fn build(&self) -> Result<Graph> {
        match *self {
            Family::Complete(n) => complete(n),
            Family::CompleteBipartite(a, b) => complete_bipartite(a, b),
            Family::Path(n) => path(n),
            Family::Cycle(n) => cycle(n),
            Family::Hypercube(d) => hypercube(d),
            Family::Star(k) => star(k),
            Family::Grid(r, c) => grid(r, c),
            Family::Caterpillar(s, l) => caterpillar(s, l),
            Family::BinaryTree(d) => complete_binary_tree(d),
            Family::Fan(k) => fan(k),
            Family::RandomTree { n, seed } => random_tree(n, seed),
            Family::Frame(n) => frame(n),
            Family::FrameWithMatching { n, seed } => frame_with_matching(n, &random_frame_matching(n, seed)?),
            Family::Cactus { cycles, seed } => random_cactus(cycles, seed),
            Family::SeriesParallel { n, seed } => random_series_parallel(n, 4, seed),
            Family::BoundedDegree { n, degree, seed } => random_bounded_degree(n, degree, seed),
        }
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let (name, args) = s.split_once(':').unwrap_or((s, ""));
        let nums: Vec<u64> = if args.is_empty() {
            Vec::new()
        } else {
            args.split(',')
                .map(|a| a.trim().parse::<u64>().map_err(|_| Error::param(format!("bad number {a:?} in {s:?}"))))
                .collect::<Result<_>>()?
        };
        let arity = |k: usize| -> Result<()> {
            if nums.len() == k {
                Ok(())
            } else {
                Err(Error::param(format!("family {name:?} takes {k} argument(s), got {}", nums.len())))
            }
        };
        let u = |i: usize| nums[i] as usize;
        let fam = match name {
            "complete" => { arity(1)?; Family::Complete(u(0)) }
            "complete_bipartite" => { arity(2)?; Family::CompleteBipartite(u(0), u(1)) }
            "path" => { arity(1)?; Family::Path(u(0)) }
            "cycle" => { arity(1)?; Family::Cycle(u(0)) }
            "hypercube" => { arity(1)?; Family::Hypercube(u(0)) }
            "star" => { arity(1)?; Family::Star(u(0)) }
            "grid" => { arity(2)?; Family::Grid(u(0), u(1)) }
            "caterpillar" => { arity(2)?; Family::Caterpillar(u(0), u(1)) }
            "binary_tree" => { arity(1)?; Family::BinaryTree(u(0)) }
            "fan" => { arity(1)?; Family::Fan(u(0)) }
            "random_tree" => { arity(2)?; Family::RandomTree { n: u(0), seed: nums[1] } }
            "frame" => { arity(1)?; Family::Frame(u(0)) }
            "frame_with_matching" => { arity(2)?; Family::FrameWithMatching { n: u(0), seed: nums[1] } }
            "cactus" => { arity(2)?; Family::Cactus { cycles: u(0), seed: nums[1] } }
            "series_parallel" => { arity(2)?; Family::SeriesParallel { n: u(0), seed: nums[1] } }
            "bounded_degree" => { arity(3)?; Family::BoundedDegree { n: u(0), degree: u(1), seed: nums[2] } }
            _ => return Err(Error::param(format!("unknown family {name:?}"))),
        };
        Ok(fam)
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Family::Complete(n) => write!(f, "complete:{n}"),
            Family::CompleteBipartite(a, b) => write!(f, "complete_bipartite:{a},{b}"),
            Family::Path(n) => write!(f, "path:{n}"),
            Family::Cycle(n) => write!(f, "cycle:{n}"),
            Family::Hypercube(d) => write!(f, "hypercube:{d}"),
            Family::Star(k) => write!(f, "star:{k}"),
            Family::Grid(r, c) => write!(f, "grid:{r},{c}"),
            Family::Caterpillar(s, l) => write!(f, "caterpillar:{s},{l}"),
            Family::BinaryTree(d) => write!(f, "binary_tree:{d}"),
            Family::Fan(k) => write!(f, "fan:{k}"),
            Family::RandomTree { n, seed } => write!(f, "random_tree:{n},{seed}"),
            Family::Frame(n) => write!(f, "frame:{n}"),
            Family::FrameWithMatching { n, seed } => write!(f, "frame_with_matching:{n},{seed}"),
            Family::Cactus { cycles, seed } => write!(f, "cactus:{cycles},{seed}"),
            Family::SeriesParallel { n, seed } => write!(f, "series_parallel:{n},{seed}"),
            Family::BoundedDegree { n, degree, seed } => write!(f, "bounded_degree:{n},{degree},{seed}"),
        }
    }
}
