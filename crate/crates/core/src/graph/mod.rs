//! Labelled simple undirected graphs and the structural analyses used by the
//! drawing algorithms.

mod blocks;
mod families;
mod graph6;
mod ordering;
mod partition;

pub use blocks::{block_decomposition, is_k4minus_free, Block, BlockDecomposition, K4MinusCheck};
pub use families::{
    caterpillar, complete, complete_binary_tree, complete_bipartite, cycle, fan, frame,
    frame_matching_set, frame_with_matching, grid, hypercube, path, random_bounded_degree,
    random_cactus, random_frame_matching, random_series_parallel, random_tree, star, Family,
};
pub use graph6::{parse_edge_list, parse_graph6, parse_graph_text, write_edge_list, write_graph6};
pub use ordering::{bandwidth_ordering, cyclic_width, width, VertexOrdering};
pub use partition::{layer_partition, tree_partition, tree_partition_bound, HPartition};

use crate::error::{Error, Result};

/// A simple undirected graph on the vertex set `0..n`.
///
/// Edges are stored once as `(u, v)` with `u < v`, sorted lexicographically,
/// so an edge index is stable for the lifetime of the value.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    edges: Vec<(usize, usize)>,
    adj: Vec<Vec<usize>>,
}

impl Graph {
    /// The edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Self {
        Graph {
            n,
            edges: Vec::new(),
            adj: vec![Vec::new(); n],
        }
    }

    /// Builds a graph, rejecting self-loops, duplicates and out-of-range endpoints.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut list = Vec::new();
        for (u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::input(format!("edge ({u}, {v}) out of range for n = {n}")));
            }
            if u == v {
                return Err(Error::input(format!("self-loop at vertex {u}")));
            }
            list.push((u.min(v), u.max(v)));
        }
        list.sort_unstable();
        if let Some(w) = list.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::input(format!("duplicate edge ({}, {})", w[0].0, w[0].1)));
        }
        Ok(Self::from_sorted_unique(n, list))
    }

    /// Like [`Graph::from_edges`] but silently drops duplicates.
    pub fn from_edges_dedup<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut list: Vec<(usize, usize)> = edges.into_iter().map(|(u, v)| (u.min(v), u.max(v))).collect();
        list.sort_unstable();
        list.dedup();
        Self::from_edges(n, list)
    }

    fn from_sorted_unique(n: usize, edges: Vec<(usize, usize)>) -> Self {
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in &edges {
            adj[u].push(v);
            adj[v].push(u);
        }
        for a in &mut adj {
            a.sort_unstable();
        }
        Graph { n, edges, adj }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.adj[u].binary_search(&v).is_ok()
    }

    /// Index of edge `uv` in [`Graph::edges`].
    pub fn edge_index(&self, u: usize, v: usize) -> Option<usize> {
        self.edges.binary_search(&(u.min(v), u.max(v))).ok()
    }

    /// Connected components, each sorted, listed by smallest vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.n];
        let mut out = Vec::new();
        for s in 0..self.n {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            let mut comp = vec![s];
            let mut i = 0;
            while i < comp.len() {
                let u = comp[i];
                i += 1;
                for &w in &self.adj[u] {
                    if !seen[w] {
                        seen[w] = true;
                        comp.push(w);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.n <= 1 || self.components().len() == 1
    }

    pub fn is_tree(&self) -> bool {
        self.n >= 1 && self.m() == self.n - 1 && self.is_connected()
    }

    pub fn is_complete(&self) -> bool {
        self.m() == self.n * self.n.saturating_sub(1) / 2
    }

    /// Two-colouring of a connected-or-not graph, `None` if an odd cycle exists.
    pub fn bipartition(&self) -> Option<Vec<bool>> {
        let mut side: Vec<Option<bool>> = vec![None; self.n];
        for s in 0..self.n {
            if side[s].is_some() {
                continue;
            }
            side[s] = Some(false);
            let mut stack = vec![s];
            while let Some(u) = stack.pop() {
                let su = side[u].unwrap();
                for &w in &self.adj[u] {
                    match side[w] {
                        None => {
                            side[w] = Some(!su);
                            stack.push(w);
                        }
                        Some(sw) if sw == su => return None,
                        _ => {}
                    }
                }
            }
        }
        Some(side.into_iter().map(Option::unwrap).collect())
    }

    /// If the graph is a complete bipartite graph `K_{a,b}` with `a <= b`,
    /// returns the two sides (smaller first, ties broken by the side holding
    /// the lowest vertex).
    pub fn complete_bipartite_sides(&self) -> Option<(Vec<usize>, Vec<usize>)> {
        if self.n < 2 || !self.is_connected() {
            return None;
        }
        let col = self.bipartition()?;
        let a: Vec<usize> = (0..self.n).filter(|&v| !col[v]).collect();
        let b: Vec<usize> = (0..self.n).filter(|&v| col[v]).collect();
        if self.m() != a.len() * b.len() {
            return None;
        }
        if b.len() < a.len() {
            Some((b, a))
        } else {
            Some((a, b))
        }
    }

    /// The subgraph induced by `vertices`, relabelled `0..k` in the given order.
    pub fn induced(&self, vertices: &[usize]) -> Graph {
        let mut local = vec![usize::MAX; self.n];
        for (i, &v) in vertices.iter().enumerate() {
            local[v] = i;
        }
        let edges = self
            .edges
            .iter()
            .filter(|&&(u, v)| local[u] != usize::MAX && local[v] != usize::MAX)
            .map(|&(u, v)| (local[u], local[v]));
        Graph::from_edges(vertices.len(), edges).expect("induced subgraph of a simple graph")
    }

    /// Spanning subgraph keeping only edges whose index satisfies `keep`.
    pub fn edge_subgraph(&self, mut keep: impl FnMut(usize) -> bool) -> Graph {
        let edges = self
            .edges
            .iter()
            .enumerate()
            .filter(|(i, _)| keep(*i))
            .map(|(_, &e)| e)
            .collect();
        Self::from_sorted_unique(self.n, edges)
    }

    /// Cartesian product; vertex `(v, w)` gets index `v * h.n() + w`.
    pub fn cartesian_product(&self, h: &Graph) -> Graph {
        let nh = h.n;
        let mut edges = Vec::with_capacity(self.n * h.m() + nh * self.m());
        for v in 0..self.n {
            for &(a, b) in &h.edges {
                edges.push((v * nh + a, v * nh + b));
            }
        }
        for &(a, b) in &self.edges {
            for w in 0..nh {
                edges.push((a * nh + w, b * nh + w));
            }
        }
        Graph::from_edges(self.n * nh, edges).expect("product of simple graphs is simple")
    }

    /// Graph with vertex `v` renamed to `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Graph {
        Graph::from_edges(self.n, self.edges.iter().map(|&(u, v)| (perm[u], perm[v])))
            .expect("relabelling preserves simplicity")
    }

    /// BFS distances from `s`; unreachable vertices get `usize::MAX`.
    pub fn bfs_distances(&self, s: usize) -> Vec<usize> {
        let mut dist = vec![usize::MAX; self.n];
        dist[s] = 0;
        let mut queue = std::collections::VecDeque::from([s]);
        while let Some(u) = queue.pop_front() {
            for &w in &self.adj[u] {
                if dist[w] == usize::MAX {
                    dist[w] = dist[u] + 1;
                    queue.push_back(w);
                }
            }
        }
        dist
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_loops_and_duplicates() {
        assert!(Graph::from_edges(3, [(0, 0)]).is_err());
        assert!(Graph::from_edges(3, [(0, 1), (1, 0)]).is_err());
        assert!(Graph::from_edges(3, [(0, 3)]).is_err());
        assert!(Graph::from_edges_dedup(3, [(0, 1), (1, 0)]).unwrap().m() == 1);
    }

    #[test]
    fn product_counts() {
        let c4 = cycle(4).unwrap();
        let p = c4.cartesian_product(&c4);
        assert_eq!(p.n(), 16);
        assert_eq!(p.m(), 32);
        assert!(p.edges().iter().all(|&(u, v)| p.has_edge(v, u)));
    }

    #[test]
    fn recognises_complete_bipartite() {
        let g = complete_bipartite(2, 5).unwrap();
        let (a, b) = g.complete_bipartite_sides().unwrap();
        assert_eq!(a, vec![0, 1]);
        assert_eq!(b.len(), 5);
        assert!(cycle(5).unwrap().complete_bipartite_sides().is_none());
        // C_4 is K_{2,2}
        assert!(cycle(4).unwrap().complete_bipartite_sides().is_some());
    }
}
