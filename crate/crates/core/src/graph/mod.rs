//! Simple undirected graphs on vertices `0..n` and the connectivity primitives
//! the rest of the crate is built on.

pub mod families;
mod flow;
pub mod format;

use std::collections::VecDeque;
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

pub use flow::{
    disjoint_paths, fan, fan_avoiding, local_connectivity, min_vertex_cut, vertex_connectivity,
};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("vertices {0} and {1} are adjacent; no vertex cut separates them")]
    Adjacent(usize, usize),
}

/// Simple undirected graph. Neighbor lists are sorted and duplicate-free.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Graph {
    adj: Vec<Vec<usize>>,
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n(), self.edges().collect::<Vec<_>>())
    }
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Self {
        Graph { adj: vec![Vec::new(); n] }
    }

    /// Builds a graph from an edge list. Repeated edges collapse into one.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self, GraphError> {
        let mut adj = vec![Vec::new(); n];
        for &(a, b) in edges {
            for v in [a, b] {
                if v >= n {
                    return Err(GraphError::VertexOutOfRange { vertex: v, n });
                }
            }
            if a == b {
                return Err(GraphError::SelfLoop(a));
            }
            adj[a].push(b);
            adj[b].push(a);
        }
        for list in &mut adj {
            list.sort_unstable();
            list.dedup();
        }
        Ok(Graph { adj })
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn m(&self) -> usize {
        self.adj.iter().map(Vec::len).sum::<usize>() / 2
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        a < self.n() && self.adj[a].binary_search(&b).is_ok()
    }

    /// Edges as `(a, b)` with `a < b`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(a, ns)| ns.iter().filter(move |&&b| a < b).map(move |&b| (a, b)))
    }

    pub fn min_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).min().unwrap_or(0)
    }

    pub fn is_complete(&self) -> bool {
        let n = self.n();
        self.adj.iter().all(|ns| ns.len() + 1 == n)
    }

    /// Common neighbors of `a` and `b`, ascending.
    pub fn common_neighbors(&self, a: usize, b: usize) -> Vec<usize> {
        let (x, y) = (&self.adj[a], &self.adj[b]);
        let (mut i, mut j) = (0, 0);
        let mut out = Vec::new();
        while i < x.len() && j < y.len() {
            match x[i].cmp(&y[j]) {
                std::cmp::Ordering::Less => i += 1,
                std::cmp::Ordering::Greater => j += 1,
                std::cmp::Ordering::Equal => {
                    out.push(x[i]);
                    i += 1;
                    j += 1;
                }
            }
        }
        out
    }

    /// Subgraph induced on `vertices`, relabelled to `0..k` in the given
    /// order. Returns the graph and the map from new labels to old ones.
    pub fn induced_subgraph(&self, vertices: &[usize]) -> (Graph, Vec<usize>) {
        let mut index = vec![usize::MAX; self.n()];
        for (i, &v) in vertices.iter().enumerate() {
            index[v] = i;
        }
        let adj = vertices
            .iter()
            .map(|&v| {
                let mut ns: Vec<usize> = self.adj[v]
                    .iter()
                    .filter_map(|&w| (index[w] != usize::MAX).then_some(index[w]))
                    .collect();
                ns.sort_unstable();
                ns
            })
            .collect();
        (Graph { adj }, vertices.to_vec())
    }

    /// `g - v`, relabelled; the map sends new labels to old ones.
    pub fn without_vertex(&self, v: usize) -> (Graph, Vec<usize>) {
        let keep: Vec<usize> = (0..self.n()).filter(|&w| w != v).collect();
        self.induced_subgraph(&keep)
    }

    /// Same vertex numbering, keeping only edges with both ends in `keep`.
    pub fn restrict(&self, keep: &[bool]) -> Graph {
        let adj = self
            .adj
            .iter()
            .enumerate()
            .map(|(v, ns)| {
                if keep[v] {
                    ns.iter().copied().filter(|&w| keep[w]).collect()
                } else {
                    Vec::new()
                }
            })
            .collect();
        Graph { adj }
    }

    /// Adds a new vertex `n` adjacent to every existing vertex.
    pub fn with_universal_vertex(&self) -> Graph {
        let n = self.n();
        let mut adj = self.adj.clone();
        for ns in &mut adj {
            ns.push(n);
        }
        adj.push((0..n).collect());
        Graph { adj }
    }

    pub fn is_connected(&self) -> bool {
        self.n() <= 1 || components(self, &[]).len() == 1
    }

    /// Vertex-2-connected (a single edge and `K1` count as 2-connected).
    pub fn is_biconnected(&self) -> bool {
        self.is_connected() && (self.n() <= 2 || articulation_points(self).is_empty())
    }

    pub fn check_vertex(&self, v: usize) -> Result<(), GraphError> {
        if v < self.n() {
            Ok(())
        } else {
            Err(GraphError::VertexOutOfRange { vertex: v, n: self.n() })
        }
    }
}

/// Boolean membership mask over `0..n`.
pub fn mask(n: usize, vertices: &[usize]) -> Vec<bool> {
    let mut m = vec![false; n];
    for &v in vertices {
        m[v] = true;
    }
    m
}

/// A simple path given by its vertex sequence.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Path(pub Vec<usize>);

impl Path {
    pub fn vertices(&self) -> &[usize] {
        &self.0
    }

    pub fn first(&self) -> usize {
        self.0[0]
    }

    pub fn last(&self) -> usize {
        *self.0.last().expect("paths are nonempty")
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn interior(&self) -> &[usize] {
        if self.0.len() <= 2 {
            &[]
        } else {
            &self.0[1..self.0.len() - 1]
        }
    }

    pub fn reversed(&self) -> Path {
        Path(self.0.iter().rev().copied().collect())
    }

    /// Nonempty, vertices distinct, consecutive vertices adjacent in `g`.
    pub fn is_valid_in(&self, g: &Graph) -> bool {
        if self.0.is_empty() || self.0.iter().any(|&v| v >= g.n()) {
            return false;
        }
        let mut seen = vec![false; g.n()];
        for &v in &self.0 {
            if std::mem::replace(&mut seen[v], true) {
                return false;
            }
        }
        self.0.windows(2).all(|w| g.has_edge(w[0], w[1]))
    }
}

/// A vertex set whose removal separates a stated pair.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CutSet(pub Vec<usize>);

impl CutSet {
    pub fn vertices(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// True iff `s` and `t` lie in different components of `g - self`.
    pub fn separates(&self, g: &Graph, s: usize, t: usize) -> bool {
        let removed = mask(g.n(), &self.0);
        if removed[s] || removed[t] {
            return false;
        }
        !reachable(g, s, &removed)[t]
    }
}

fn reachable(g: &Graph, s: usize, removed: &[bool]) -> Vec<bool> {
    let mut seen = vec![false; g.n()];
    seen[s] = true;
    let mut queue = VecDeque::from([s]);
    while let Some(v) = queue.pop_front() {
        for &w in g.neighbors(v) {
            if !removed[w] && !seen[w] {
                seen[w] = true;
                queue.push_back(w);
            }
        }
    }
    seen
}

/// Connected components of `g - removed`, each sorted, ordered by least vertex.
pub fn components(g: &Graph, removed: &[usize]) -> Vec<Vec<usize>> {
    let gone = mask(g.n(), removed);
    let mut seen = gone.clone();
    let mut out = Vec::new();
    for s in 0..g.n() {
        if seen[s] {
            continue;
        }
        seen[s] = true;
        let mut comp = vec![s];
        let mut queue = VecDeque::from([s]);
        while let Some(v) = queue.pop_front() {
            for &w in g.neighbors(v) {
                if !seen[w] {
                    seen[w] = true;
                    comp.push(w);
                    queue.push_back(w);
                }
            }
        }
        comp.sort_unstable();
        out.push(comp);
    }
    out
}

/// Cut vertices of `g`, ascending.
pub fn articulation_points(g: &Graph) -> Vec<usize> {
    let n = g.n();
    let mut disc = vec![usize::MAX; n];
    let mut low = vec![0; n];
    let mut is_cut = vec![false; n];
    let mut timer = 0;
    for root in 0..n {
        if disc[root] != usize::MAX {
            continue;
        }
        // iterative DFS: (vertex, parent, next neighbor index)
        let mut stack = vec![(root, usize::MAX, 0usize)];
        disc[root] = timer;
        low[root] = timer;
        timer += 1;
        let mut root_children = 0;
        while let Some(&mut (v, parent, ref mut idx)) = stack.last_mut() {
            if *idx < g.degree(v) {
                let w = g.neighbors(v)[*idx];
                *idx += 1;
                if w == parent {
                    continue;
                }
                if disc[w] == usize::MAX {
                    disc[w] = timer;
                    low[w] = timer;
                    timer += 1;
                    if v == root {
                        root_children += 1;
                    }
                    stack.push((w, v, 0));
                } else {
                    low[v] = low[v].min(disc[w]);
                }
            } else {
                stack.pop();
                if parent != usize::MAX {
                    low[parent] = low[parent].min(low[v]);
                    if parent != root && low[v] >= disc[parent] {
                        is_cut[parent] = true;
                    }
                }
            }
        }
        if root_children >= 2 {
            is_cut[root] = true;
        }
    }
    (0..n).filter(|&v| is_cut[v]).collect()
}

/// Two triangles sharing the edge `xy`: edges xy, xa, ya, xb, yb.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct K4Minus {
    pub x: usize,
    pub y: usize,
    pub a: usize,
    pub b: usize,
}

impl K4Minus {
    pub fn vertices(&self) -> [usize; 4] {
        [self.x, self.y, self.a, self.b]
    }

    pub fn is_present_in(&self, g: &Graph) -> bool {
        let distinct = {
            let mut v = self.vertices().to_vec();
            v.sort_unstable();
            v.dedup();
            v.len() == 4
        };
        distinct
            && [(self.x, self.y), (self.x, self.a), (self.y, self.a), (self.x, self.b), (self.y, self.b)]
                .iter()
                .all(|&(p, q)| g.has_edge(p, q))
    }
}

impl fmt::Display for K4Minus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{}, {}, {}, {}}}", self.x, self.y, self.a, self.b)
    }
}

/// First edge (lexicographically) lying in two triangles.
pub fn find_k4_minus(g: &Graph) -> Option<K4Minus> {
    g.edges().find_map(|(x, y)| {
        let common = g.common_neighbors(x, y);
        (common.len() >= 2).then(|| K4Minus { x, y, a: common[0], b: common[1] })
    })
}

#[cfg(test)]
mod tests {
    use super::families::*;
    use super::*;

    #[test]
    fn edge_count_and_symmetry() {
        let g = petersen();
        assert_eq!(g.m(), 15);
        for (a, b) in g.edges() {
            assert!(g.has_edge(b, a));
        }
        assert!(Graph::from_edges(3, &[(1, 1)]).is_err());
        assert!(Graph::from_edges(3, &[(0, 3)]).is_err());
        let dup = Graph::from_edges(3, &[(0, 1), (1, 0), (0, 1)]).unwrap();
        assert_eq!(dup.m(), 1);
    }

    #[test]
    fn components_examples() {
        let c6 = cycle(6);
        let comps = components(&c6, &[0, 3]);
        assert_eq!(comps, vec![vec![1, 2], vec![4, 5]]);
        assert_eq!(components(&petersen(), &[]).len(), 1);
        assert_eq!(components(&complete(5), &[0, 2, 4]).len(), 1);
    }

    #[test]
    fn k4_minus_examples() {
        let found = find_k4_minus(&icosahedron()).unwrap();
        assert!(found.is_present_in(&icosahedron()));
        assert!(find_k4_minus(&complete_bipartite(3, 4)).is_none());
        assert!(find_k4_minus(&grid(4, 4)).is_none());
        assert!(find_k4_minus(&petersen()).is_none());
    }

    #[test]
    fn articulation_points_of_path_and_cycle() {
        assert_eq!(articulation_points(&path_graph(4)), vec![1, 2]);
        assert!(articulation_points(&cycle(5)).is_empty());
        assert!(complete(4).is_biconnected());
        assert!(!path_graph(3).is_biconnected());
    }

    #[test]
    fn induced_subgraph_relabels() {
        let g = cycle(5);
        let (h, map) = g.induced_subgraph(&[1, 2, 3]);
        assert_eq!(h.m(), 2);
        assert_eq!(map, vec![1, 2, 3]);
        let (h, _) = g.without_vertex(0);
        assert_eq!(h.n(), 4);
        assert_eq!(h.m(), 3);
    }
}
