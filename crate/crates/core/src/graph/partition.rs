//! H-partitions: BFS layerings and the layered tree-partition heuristic.

use super::Graph;
use crate::error::{Error, Result};

/// A partition of `V(G)` into nonempty parts together with its quotient
/// graph (part `i` adjacent to part `j` iff some edge joins them).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HPartition {
    pub parts: Vec<Vec<usize>>,
    pub part_of: Vec<usize>,
    pub quotient: Graph,
}

impl HPartition {
    /// Builds the quotient and checks that `parts` partitions `V(g)`.
    pub fn new(g: &Graph, parts: Vec<Vec<usize>>) -> Result<Self> {
        let mut part_of = vec![usize::MAX; g.n()];
        for (i, p) in parts.iter().enumerate() {
            if p.is_empty() {
                return Err(Error::input(format!("part {i} is empty")));
            }
            for &v in p {
                if v >= g.n() {
                    return Err(Error::input(format!("part {i} holds vertex {v} outside the graph")));
                }
                if part_of[v] != usize::MAX {
                    return Err(Error::InvalidInput {
                        message: format!("vertex {v} lies in two parts"),
                        witness: Some(v),
                    });
                }
                part_of[v] = i;
            }
        }
        if let Some(v) = part_of.iter().position(|&p| p == usize::MAX) {
            return Err(Error::InvalidInput { message: format!("vertex {v} is in no part"), witness: Some(v) });
        }
        let quotient = Graph::from_edges_dedup(
            parts.len(),
            g.edges()
                .iter()
                .map(|&(u, v)| (part_of[u], part_of[v]))
                .filter(|(a, b)| a != b),
        )?;
        Ok(HPartition { parts, part_of, quotient })
    }

    pub fn width(&self) -> usize {
        self.parts.iter().map(Vec::len).max().unwrap_or(0)
    }

    /// Re-derives every invariant from scratch against `g`.
    pub fn validate(&self, g: &Graph) -> Result<()> {
        let rebuilt = HPartition::new(g, self.parts.clone())?;
        if rebuilt.part_of != self.part_of {
            return Err(Error::input("part_of table disagrees with parts"));
        }
        if rebuilt.quotient != self.quotient {
            return Err(Error::input("quotient does not match the edges between parts"));
        }
        Ok(())
    }
}

fn bfs_layers(g: &Graph) -> Result<Vec<Vec<usize>>> {
    if g.n() == 0 {
        return Ok(Vec::new());
    }
    if !g.is_connected() {
        return Err(Error::input("graph must be connected"));
    }
    let dist = g.bfs_distances(0);
    let depth = dist.iter().max().copied().unwrap_or(0);
    let mut layers = vec![Vec::new(); depth + 1];
    for v in 0..g.n() {
        layers[dist[v]].push(v);
    }
    Ok(layers)
}

/// BFS layers from vertex 0 as parts; the quotient is a path.
pub fn layer_partition(g: &Graph) -> Result<HPartition> {
    HPartition::new(g, bfs_layers(g)?)
}

fn find(parent: &mut [usize], mut x: usize) -> usize {
    while parent[x] != x {
        parent[x] = parent[parent[x]];
        x = parent[x];
    }
    x
}

/// Tree-partition by BFS layering from vertex 0: the parts of layer `i` are
/// the traces on `L_i` of the components of `G[L_i ∪ L_{i+1} ∪ ...]`.
/// Parts are listed by layer, then by smallest vertex.
pub fn tree_partition(g: &Graph) -> Result<HPartition> {
    let layers = bfs_layers(g)?;
    let n = g.n();
    let mut layer_of = vec![0usize; n];
    for (i, l) in layers.iter().enumerate() {
        for &v in l {
            layer_of[v] = i;
        }
    }
    let mut parent: Vec<usize> = (0..n).collect();
    let mut per_layer: Vec<Vec<Vec<usize>>> = vec![Vec::new(); layers.len()];
    for i in (0..layers.len()).rev() {
        for &v in &layers[i] {
            for &w in g.neighbors(v) {
                if layer_of[w] >= i {
                    let (a, b) = (find(&mut parent, v), find(&mut parent, w));
                    if a != b {
                        parent[a.max(b)] = a.min(b);
                    }
                }
            }
        }
        let mut groups: std::collections::BTreeMap<usize, Vec<usize>> = Default::default();
        for &v in &layers[i] {
            let r = find(&mut parent, v);
            groups.entry(r).or_default().push(v);
        }
        let mut parts: Vec<Vec<usize>> = groups.into_values().collect();
        parts.sort_by_key(|p| p[0]);
        per_layer[i] = parts;
    }
    HPartition::new(g, per_layer.into_iter().flatten().collect())
}

/// The cited width bound `(5/2)(k+1)((7/2)Δ − 1)` for a tree-partition of a
/// graph with treewidth `k` and maximum degree `Δ`. Reported for comparison
/// only; [`tree_partition`] does not guarantee it.
pub fn tree_partition_bound(k: usize, max_degree: usize) -> f64 {
    2.5 * (k as f64 + 1.0) * (3.5 * max_degree as f64 - 1.0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{cycle, grid, random_series_parallel, random_tree};

    #[test]
    fn six_cycle_partition() {
        let c = cycle(6).unwrap();
        let p = tree_partition(&c).unwrap();
        assert_eq!(p.parts, vec![vec![0], vec![1, 5], vec![2, 4], vec![3]]);
        assert_eq!(p.quotient.edges(), &[(0, 1), (1, 2), (2, 3)]);
        assert_eq!(p.width(), 2);
        p.validate(&c).unwrap();
    }

    #[test]
    fn tree_gives_singletons() {
        let t = random_tree(40, 2).unwrap();
        let p = tree_partition(&t).unwrap();
        assert_eq!(p.width(), 1);
        assert!(p.quotient.is_tree());
        assert_eq!(p.quotient.m(), t.m());
    }

    #[test]
    fn grid_quotient_is_tree() {
        let g = grid(3, 3).unwrap();
        let p = tree_partition(&g).unwrap();
        p.validate(&g).unwrap();
        assert!(p.quotient.is_tree());
        assert!(p.width() <= 3);
    }

    #[test]
    fn series_parallel_quotients_are_trees() {
        for seed in 0..20 {
            let g = random_series_parallel(80, 4, seed).unwrap();
            let p = tree_partition(&g).unwrap();
            p.validate(&g).unwrap();
            assert!(p.quotient.is_tree());
        }
    }

    #[test]
    fn rejects_bad_partitions() {
        let c = cycle(4).unwrap();
        assert!(HPartition::new(&c, vec![vec![0, 1], vec![1, 2, 3]]).is_err());
        assert!(HPartition::new(&c, vec![vec![0, 1], vec![2]]).is_err());
        assert!(HPartition::new(&c, vec![vec![0, 1, 2, 3], vec![]]).is_err());
        assert!(tree_partition(&Graph::from_edges(3, [(0, 1)]).unwrap()).is_err());
        assert_eq!(layer_partition(&c).unwrap().parts.len(), 3);
    }

    #[test]
    fn cited_bound_value() {
        assert!((tree_partition_bound(1, 2) - 2.5 * 2.0 * 6.0).abs() < 1e-12);
    }
}
