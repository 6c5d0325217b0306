//! Biconnected components and the edge-or-cycle test for K4⁻-minor-freeness.

use super::Graph;

/// One biconnected component (a bridge, a 2-connected piece, or an isolated
/// vertex with no edges).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Block {
    /// Sorted vertex list.
    pub vertices: Vec<usize>,
    /// Sorted edges `(u, v)`, `u < v`, in global labels.
    pub edges: Vec<(usize, usize)>,
    /// The cut vertex shared with the blocks listed before this one, or
    /// `None` for the first block of a component.
    pub attach: Option<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BlockDecomposition {
    /// Blocks in root-first order: within a component every block after the
    /// first shares exactly its `attach` vertex with the earlier ones.
    pub blocks: Vec<Block>,
    pub cut_vertices: Vec<usize>,
    /// `false` when the input had several components.
    pub connected: bool,
}

impl Block {
    /// A block is a cycle when it has at least three vertices and as many
    /// edges as vertices (2-connected plus `|E| = |V|` forces all degrees 2).
    pub fn is_cycle(&self) -> bool {
        self.vertices.len() >= 3 && self.edges.len() == self.vertices.len()
    }

    pub fn is_edge(&self) -> bool {
        self.vertices.len() == 2 && self.edges.len() == 1
    }

    /// The vertices of a cycle block in walking order starting at `start`.
    pub fn cycle_walk(&self, start: usize) -> Option<Vec<usize>> {
        if !self.is_cycle() || self.vertices.binary_search(&start).is_err() {
            return None;
        }
        let nbrs = |v: usize| {
            self.edges
                .iter()
                .filter_map(move |&(a, b)| if a == v { Some(b) } else if b == v { Some(a) } else { None })
        };
        let mut walk = vec![start];
        let mut prev = start;
        let mut cur = nbrs(start).min()?;
        while cur != start {
            walk.push(cur);
            let next = nbrs(cur).find(|&x| x != prev)?;
            prev = cur;
            cur = next;
            if walk.len() > self.vertices.len() {
                return None;
            }
        }
        (walk.len() == self.vertices.len()).then_some(walk)
    }
}

/// Iterative Hopcroft–Tarjan over every component; blocks are then ordered
/// by a DFS of the block–cut tree from the block holding the component's
/// lowest vertex (lowest index first everywhere).
pub fn block_decomposition(g: &Graph) -> BlockDecomposition {
    let n = g.n();
    let mut disc = vec![usize::MAX; n];
    let mut low = vec![0usize; n];
    let mut timer = 0usize;
    let mut raw: Vec<Vec<(usize, usize)>> = Vec::new();
    let mut isolated = Vec::new();
    let mut is_cut = vec![false; n];

    for root in 0..n {
        if disc[root] != usize::MAX {
            continue;
        }
        if g.degree(root) == 0 {
            disc[root] = timer;
            timer += 1;
            isolated.push(root);
            continue;
        }
        disc[root] = timer;
        low[root] = timer;
        timer += 1;
        let mut edge_stack: Vec<(usize, usize)> = Vec::new();
        // (vertex, parent, next neighbour index)
        let mut stack: Vec<(usize, usize, usize)> = vec![(root, usize::MAX, 0)];
        let mut root_children = 0;
        while let Some(top) = stack.last_mut() {
            let (v, parent, idx) = *top;
            if idx < g.degree(v) {
                top.2 += 1;
                let w = g.neighbors(v)[idx];
                if disc[w] == usize::MAX {
                    edge_stack.push((v, w));
                    disc[w] = timer;
                    low[w] = timer;
                    timer += 1;
                    if v == root {
                        root_children += 1;
                    }
                    stack.push((w, v, 0));
                } else if w != parent && disc[w] < disc[v] {
                    edge_stack.push((v, w));
                    low[v] = low[v].min(disc[w]);
                }
            } else {
                stack.pop();
                if let Some(&(p, _, _)) = stack.last() {
                    low[p] = low[p].min(low[v]);
                    if low[v] >= disc[p] {
                        if p != root {
                            is_cut[p] = true;
                        }
                        let mut block = Vec::new();
                        while let Some(e) = edge_stack.pop() {
                            block.push((e.0.min(e.1), e.0.max(e.1)));
                            if e == (p, v) {
                                break;
                            }
                        }
                        raw.push(block);
                    }
                }
            }
        }
        if root_children > 1 {
            is_cut[root] = true;
        }
    }

    let mut blocks_raw: Vec<Block> = raw
        .into_iter()
        .map(|mut edges| {
            edges.sort_unstable();
            let mut vertices: Vec<usize> = edges.iter().flat_map(|&(u, v)| [u, v]).collect();
            vertices.sort_unstable();
            vertices.dedup();
            Block { vertices, edges, attach: None }
        })
        .collect();
    blocks_raw.extend(isolated.into_iter().map(|v| Block { vertices: vec![v], edges: Vec::new(), attach: None }));
    // deterministic base order: by smallest vertex, then by edge list
    blocks_raw.sort_by(|a, b| (a.vertices[0], &a.edges).cmp(&(b.vertices[0], &b.edges)));

    let mut blocks_at: Vec<Vec<usize>> = vec![Vec::new(); n];
    for (i, b) in blocks_raw.iter().enumerate() {
        for &v in &b.vertices {
            blocks_at[v].push(i);
        }
    }

    let components = g.components();
    let mut used = vec![false; blocks_raw.len()];
    let mut ordered = Vec::with_capacity(blocks_raw.len());
    for comp in &components {
        let first = blocks_at[comp[0]][0];
        used[first] = true;
        let mut stack = vec![(first, None)];
        while let Some((b, attach)) = stack.pop() {
            let mut block = blocks_raw[b].clone();
            block.attach = attach;
            let mut children = Vec::new();
            for &v in &block.vertices {
                if !is_cut[v] {
                    continue;
                }
                for &c in &blocks_at[v] {
                    if !used[c] {
                        used[c] = true;
                        children.push((c, Some(v)));
                    }
                }
            }
            ordered.push(block);
            stack.extend(children.into_iter().rev());
        }
    }

    BlockDecomposition {
        blocks: ordered,
        cut_vertices: (0..n).filter(|&v| is_cut[v]).collect(),
        connected: components.len() <= 1,
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct K4MinusCheck {
    pub free: bool,
    /// A vertex of degree at least 3 inside a block that is neither an edge
    /// nor a cycle.
    pub witness: Option<usize>,
}

/// A graph has no K4⁻ minor iff each of its blocks is an edge or a cycle.
pub fn is_k4minus_free(g: &Graph) -> K4MinusCheck {
    for block in block_decomposition(g).blocks {
        if block.edges.len() <= 1 || block.is_cycle() {
            continue;
        }
        let mut deg = std::collections::BTreeMap::new();
        for &(u, v) in &block.edges {
            *deg.entry(u).or_insert(0usize) += 1;
            *deg.entry(v).or_insert(0usize) += 1;
        }
        let witness = deg.into_iter().find(|&(_, d)| d >= 3).map(|(v, _)| v);
        return K4MinusCheck { free: false, witness };
    }
    K4MinusCheck { free: true, witness: None }
}
