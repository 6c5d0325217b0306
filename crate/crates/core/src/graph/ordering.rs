//! Vertex orderings, (cyclic) width and a bandwidth heuristic.

use std::collections::VecDeque;

use super::Graph;
use crate::error::{Error, Result};

/// A bijection `σ: V → {1..n}`, stored 0-based.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VertexOrdering {
    position: Vec<usize>,
    order: Vec<usize>,
}

impl VertexOrdering {
    pub fn identity(n: usize) -> Self {
        VertexOrdering { position: (0..n).collect(), order: (0..n).collect() }
    }

    /// From the vertex sequence `order[0], order[1], ...` (σ(order[i]) = i + 1).
    pub fn from_order(order: Vec<usize>) -> Result<Self> {
        let n = order.len();
        let mut position = vec![usize::MAX; n];
        for (i, &v) in order.iter().enumerate() {
            if v >= n || position[v] != usize::MAX {
                return Err(Error::param(format!("ordering is not a permutation (vertex {v})")));
            }
            position[v] = i;
        }
        Ok(VertexOrdering { position, order })
    }

    /// From 1-based labels, `sigma[v] = σ(v)`.
    pub fn from_sigma(sigma: &[usize]) -> Result<Self> {
        let n = sigma.len();
        let mut order = vec![usize::MAX; n];
        for (v, &s) in sigma.iter().enumerate() {
            if s == 0 || s > n || order[s - 1] != usize::MAX {
                return Err(Error::param(format!("sigma is not a bijection onto 1..{n}")));
            }
            order[s - 1] = v;
        }
        Self::from_order(order)
    }

    pub fn len(&self) -> usize {
        self.order.len()
    }

    pub fn is_empty(&self) -> bool {
        self.order.is_empty()
    }

    /// σ(v) − 1.
    pub fn position(&self, v: usize) -> usize {
        self.position[v]
    }

    /// 1-based label σ(v).
    pub fn sigma(&self, v: usize) -> usize {
        self.position[v] + 1
    }

    pub fn order(&self) -> &[usize] {
        &self.order
    }
}

fn check(g: &Graph, ord: &VertexOrdering) {
    assert_eq!(g.n(), ord.len(), "ordering size does not match graph");
}

/// `max |σ(v) − σ(w)|` over edges; 0 without edges.
pub fn width(g: &Graph, ord: &VertexOrdering) -> usize {
    check(g, ord);
    g.edges().iter().map(|&(u, v)| ord.position(u).abs_diff(ord.position(v))).max().unwrap_or(0)
}

/// `max min{|σ(v) − σ(w)|, n − |σ(v) − σ(w)|}` over edges; 0 without edges.
pub fn cyclic_width(g: &Graph, ord: &VertexOrdering) -> usize {
    check(g, ord);
    let n = g.n();
    g.edges()
        .iter()
        .map(|&(u, v)| {
            let d = ord.position(u).abs_diff(ord.position(v));
            d.min(n - d)
        })
        .max()
        .unwrap_or(0)
}

fn cuthill_mckee(g: &Graph, start: usize, seen: &mut [bool]) -> Vec<usize> {
    let mut out = vec![start];
    seen[start] = true;
    let mut queue = VecDeque::from([start]);
    while let Some(u) = queue.pop_front() {
        let mut next: Vec<usize> = g.neighbors(u).iter().copied().filter(|&w| !seen[w]).collect();
        next.sort_by_key(|&w| (g.degree(w), w));
        for w in next {
            seen[w] = true;
            out.push(w);
            queue.push_back(w);
        }
    }
    out
}

fn dfs_order(g: &Graph, start: usize, seen: &mut [bool]) -> Vec<usize> {
    let mut out = Vec::new();
    let mut stack = vec![start];
    while let Some(u) = stack.pop() {
        if seen[u] {
            continue;
        }
        seen[u] = true;
        out.push(u);
        stack.extend(g.neighbors(u).iter().rev().copied().filter(|&w| !seen[w]));
    }
    out
}

fn local_widths(g: &Graph, order: &[usize], pos: &mut [usize]) -> (usize, usize) {
    for (i, &v) in order.iter().enumerate() {
        pos[v] = i;
    }
    let c = order.len();
    let (mut cw, mut w) = (0, 0);
    for &v in order {
        for &x in g.neighbors(v) {
            let d = pos[v].abs_diff(pos[x]);
            w = w.max(d);
            cw = cw.max(d.min(c - d));
        }
    }
    (cw, w)
}

/// Heuristic low-width ordering. Per component, Cuthill–McKee and DFS orders
/// from several start vertices are compared by (cyclic width, width, start);
/// components are concatenated by smallest vertex.
pub fn bandwidth_ordering(g: &Graph) -> VertexOrdering {
    let mut order = Vec::with_capacity(g.n());
    let mut seen = vec![false; g.n()];
    let mut pos = vec![0usize; g.n()];
    for comp in g.components() {
        let starts: Vec<usize> = if comp.len() <= 200 {
            comp.clone()
        } else {
            let min_deg = comp.iter().map(|&v| g.degree(v)).min().unwrap_or(0);
            comp.iter().copied().filter(|&v| g.degree(v) == min_deg).take(8).collect()
        };
        let mut best: Option<((usize, usize), Vec<usize>)> = None;
        for &s in &starts {
            for dfs in [false, true] {
                for &v in &comp {
                    seen[v] = false;
                }
                let cand = if dfs { dfs_order(g, s, &mut seen) } else { cuthill_mckee(g, s, &mut seen) };
                let score = local_widths(g, &cand, &mut pos);
                if best.as_ref().map_or(true, |(b, _)| score < *b) {
                    best = Some((score, cand));
                }
            }
        }
        for &v in &comp {
            seen[v] = true;
        }
        order.extend(best.map(|(_, o)| o).unwrap_or_default());
    }
    VertexOrdering::from_order(order).expect("components partition the vertex set")
}
