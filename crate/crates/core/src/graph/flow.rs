//! Unit-capacity vertex flows. Each vertex `v` is split into `in(v) = 2v`
//! and `out(v) = 2v + 1` joined by a unit arc, so augmenting paths are
//! internally vertex-disjoint.

use std::collections::VecDeque;

use super::{mask, CutSet, Graph, GraphError, Path};

struct Network {
    head: Vec<Vec<usize>>,
    to: Vec<usize>,
    cap: Vec<u32>,
    orig: Vec<u32>,
}

const INF: u32 = u32::MAX / 4;

impl Network {
    fn new(nodes: usize) -> Self {
        Network { head: vec![Vec::new(); nodes], to: Vec::new(), cap: Vec::new(), orig: Vec::new() }
    }

    fn add_arc(&mut self, from: usize, to: usize, cap: u32) {
        let id = self.to.len();
        self.head[from].push(id);
        self.to.push(to);
        self.cap.push(cap);
        self.orig.push(cap);
        self.head[to].push(id + 1);
        self.to.push(from);
        self.cap.push(0);
        self.orig.push(0);
    }

    /// One BFS augmentation of a single unit; false when none exists.
    fn augment(&mut self, s: usize, t: usize) -> bool {
        let mut pred = vec![usize::MAX; self.head.len()];
        let mut seen = vec![false; self.head.len()];
        seen[s] = true;
        let mut queue = VecDeque::from([s]);
        while let Some(x) = queue.pop_front() {
            for &arc in &self.head[x] {
                let y = self.to[arc];
                if self.cap[arc] > 0 && !seen[y] {
                    seen[y] = true;
                    pred[y] = arc;
                    if y == t {
                        let mut cur = t;
                        while cur != s {
                            let a = pred[cur];
                            self.cap[a] -= 1;
                            self.cap[a ^ 1] += 1;
                            cur = self.to[a ^ 1];
                        }
                        return true;
                    }
                    queue.push_back(y);
                }
            }
        }
        false
    }

    fn max_flow(&mut self, s: usize, t: usize, limit: usize) -> usize {
        let mut flow = 0;
        while flow < limit && self.augment(s, t) {
            flow += 1;
        }
        flow
    }

    fn residual_reach(&self, s: usize) -> Vec<bool> {
        let mut seen = vec![false; self.head.len()];
        seen[s] = true;
        let mut queue = VecDeque::from([s]);
        while let Some(x) = queue.pop_front() {
            for &arc in &self.head[x] {
                let y = self.to[arc];
                if self.cap[arc] > 0 && !seen[y] {
                    seen[y] = true;
                    queue.push_back(y);
                }
            }
        }
        seen
    }

    /// Decomposes the flow leaving `s` into vertex sequences. A node of the
    /// form `in(v)` contributes `v`; `start` is prepended when given.
    fn paths(&mut self, s: usize, t: usize, start: Option<usize>, n: usize) -> Vec<Path> {
        let mut out = Vec::new();
        loop {
            let mut path: Vec<usize> = start.into_iter().collect();
            let mut cur = s;
            let mut moved = false;
            while cur != t {
                let next = self.head[cur]
                    .iter()
                    .copied()
                    .find(|&a| a % 2 == 0 && self.orig[a] > self.cap[a]);
                let Some(arc) = next else { break };
                self.cap[arc] += 1;
                moved = true;
                cur = self.to[arc];
                if cur < 2 * n && cur.is_multiple_of(2) {
                    path.push(cur / 2);
                }
            }
            if !moved {
                break;
            }
            debug_assert_eq!(cur, t);
            out.push(Path(path));
        }
        out
    }
}

fn inn(v: usize) -> usize {
    2 * v
}

fn out(v: usize) -> usize {
    2 * v + 1
}

/// Maximum number of internally disjoint `s`-`t` paths (`s`, `t` distinct).
pub fn local_connectivity(g: &Graph, s: usize, t: usize) -> usize {
    local_network(g, s, t).1
}

fn local_network(g: &Graph, s: usize, t: usize) -> (Network, usize) {
    let n = g.n();
    let mut net = Network::new(2 * n);
    for v in 0..n {
        net.add_arc(inn(v), out(v), 1);
        for &w in g.neighbors(v) {
            net.add_arc(out(v), inn(w), INF);
        }
    }
    let flow = net.max_flow(out(s), inn(t), usize::MAX);
    (net, flow)
}

/// Vertex connectivity; `n - 1` for complete graphs.
pub fn vertex_connectivity(g: &Graph) -> Result<usize, GraphError> {
    let n = g.n();
    if n < 2 {
        return Err(GraphError::InvalidInput(format!(
            "vertex connectivity needs at least 2 vertices, got {n}"
        )));
    }
    if g.is_complete() {
        return Ok(n - 1);
    }
    // Some vertex among the first best+1 avoids a minimum cut and has a
    // nonadjacent partner on the far side.
    let mut best = n - 1;
    let mut i = 0;
    while i <= best && i < n {
        for t in 0..n {
            if t != i && !g.has_edge(i, t) {
                best = best.min(local_connectivity(g, i, t));
            }
        }
        i += 1;
    }
    Ok(best)
}

/// A minimum vertex set separating nonadjacent `s` and `t`.
pub fn min_vertex_cut(g: &Graph, s: usize, t: usize) -> Result<CutSet, GraphError> {
    g.check_vertex(s)?;
    g.check_vertex(t)?;
    if s == t {
        return Err(GraphError::InvalidInput("min_vertex_cut needs s != t".into()));
    }
    if g.has_edge(s, t) {
        return Err(GraphError::Adjacent(s, t));
    }
    let (net, flow) = local_network(g, s, t);
    let reach = net.residual_reach(out(s));
    let cut: Vec<usize> = (0..g.n())
        .filter(|&v| v != s && v != t && reach[inn(v)] && !reach[out(v)])
        .collect();
    debug_assert_eq!(cut.len(), flow);
    Ok(CutSet(cut))
}

fn check_all(g: &Graph, vs: &[usize]) -> Result<(), GraphError> {
    vs.iter().try_for_each(|&v| g.check_vertex(v))
}

/// `k` pairwise vertex-disjoint `(X, Y)`-paths avoiding `forbidden`, each
/// meeting `X ∪ Y` only in its two ends. Paths are sorted by first vertex.
/// Forbidden members of `X` or `Y` are simply unavailable.
pub fn disjoint_paths(
    g: &Graph,
    xs: &[usize],
    ys: &[usize],
    k: usize,
    forbidden: &[usize],
) -> Result<Option<Vec<Path>>, GraphError> {
    check_all(g, xs)?;
    check_all(g, ys)?;
    check_all(g, forbidden)?;
    let (x_set, y_set) = (mask(g.n(), xs), mask(g.n(), ys));
    let x_count = x_set.iter().filter(|&&b| b).count();
    let y_count = y_set.iter().filter(|&&b| b).count();
    if k == 0 || k > x_count.min(y_count) {
        return Err(GraphError::InvalidInput(format!(
            "k = {k} must lie in 1..=min(|X|, |Y|) = {}",
            x_count.min(y_count)
        )));
    }
    let n = g.n();
    let banned = mask(n, forbidden);
    let (source, sink) = (2 * n, 2 * n + 1);
    let mut net = Network::new(2 * n + 2);
    for v in (0..n).filter(|&v| !banned[v]) {
        if x_set[v] {
            net.add_arc(source, inn(v), 1);
        }
        net.add_arc(inn(v), out(v), 1);
        if y_set[v] {
            net.add_arc(out(v), sink, 1);
            continue;
        }
        for &w in g.neighbors(v) {
            if !banned[w] && !x_set[w] {
                net.add_arc(out(v), inn(w), 1);
            }
        }
    }
    if net.max_flow(source, sink, k) < k {
        return Ok(None);
    }
    let mut paths = net.paths(source, sink, None, n);
    paths.sort_by_key(Path::first);
    Ok(Some(paths))
}

/// An `(x, Y)`-`k`-fan: `k` paths from `x` to distinct members of `Y`,
/// pairwise sharing only `x` and internally disjoint from `Y`.
pub fn fan(g: &Graph, x: usize, ys: &[usize], k: usize) -> Result<Option<Vec<Path>>, GraphError> {
    fan_avoiding(g, x, ys, k, &[])
}

/// [`fan`] in `g - forbidden`.
pub fn fan_avoiding(
    g: &Graph,
    x: usize,
    ys: &[usize],
    k: usize,
    forbidden: &[usize],
) -> Result<Option<Vec<Path>>, GraphError> {
    g.check_vertex(x)?;
    check_all(g, ys)?;
    check_all(g, forbidden)?;
    let n = g.n();
    let y_set = mask(n, ys);
    if y_set[x] {
        return Err(GraphError::InvalidInput(format!("fan source {x} lies in Y")));
    }
    let y_count = y_set.iter().filter(|&&b| b).count();
    if k == 0 || k > y_count {
        return Err(GraphError::InvalidInput(format!("k = {k} must lie in 1..=|Y| = {y_count}")));
    }
    let banned = mask(n, forbidden);
    if banned[x] {
        return Ok(None);
    }
    let sink = 2 * n;
    let mut net = Network::new(2 * n + 1);
    for v in (0..n).filter(|&v| !banned[v] && v != x) {
        net.add_arc(inn(v), out(v), 1);
        if y_set[v] {
            net.add_arc(out(v), sink, 1);
        }
    }
    for v in (0..n).filter(|&v| !banned[v] && !y_set[v]) {
        for &w in g.neighbors(v) {
            if !banned[w] && w != x {
                net.add_arc(out(v), inn(w), 1);
            }
        }
    }
    if net.max_flow(out(x), sink, k) < k {
        return Ok(None);
    }
    let mut paths = net.paths(out(x), sink, Some(x), n);
    paths.sort_by_key(Path::last);
    Ok(Some(paths))
}

#[cfg(test)]
mod tests {
    use super::super::families::*;
    use super::*;

    #[test]
    fn connectivity_examples() {
        assert_eq!(vertex_connectivity(&complete(5)).unwrap(), 4);
        assert_eq!(vertex_connectivity(&petersen()).unwrap(), 3);
        assert_eq!(vertex_connectivity(&grid(4, 4)).unwrap(), 2);
        assert_eq!(vertex_connectivity(&icosahedron()).unwrap(), 5);
        assert_eq!(vertex_connectivity(&octahedron()).unwrap(), 4);
        assert!(vertex_connectivity(&Graph::empty(1)).is_err());
        assert!(vertex_connectivity(&Graph::empty(0)).is_err());
        assert_eq!(vertex_connectivity(&Graph::empty(3)).unwrap(), 0);
    }

    #[test]
    fn min_cut_examples() {
        let c6 = cycle(6);
        let cut = min_vertex_cut(&c6, 0, 3).unwrap();
        assert_eq!(cut.len(), 2);
        assert!(cut.separates(&c6, 0, 3));
        let k33 = complete_bipartite(3, 3);
        let cut = min_vertex_cut(&k33, 0, 1).unwrap();
        assert_eq!(cut.len(), 3);
        assert!(cut.separates(&k33, 0, 1));
        assert_eq!(min_vertex_cut(&c6, 0, 1), Err(GraphError::Adjacent(0, 1)));
        assert!(min_vertex_cut(&c6, 2, 2).is_err());
    }

    #[test]
    fn grid_rows_are_found() {
        let g = grid(4, 4);
        let left = [0, 4, 8, 12];
        let right = [3, 7, 11, 15];
        let paths = disjoint_paths(&g, &left, &right, 4, &[]).unwrap().unwrap();
        assert_eq!(paths.len(), 4);
        for p in &paths {
            assert!(p.is_valid_in(&g));
            assert_eq!(p.len(), 4);
        }
    }

    #[test]
    fn k4_pairing_and_errors() {
        let g = complete(4);
        let paths = disjoint_paths(&g, &[0, 1], &[2, 3], 2, &[]).unwrap().unwrap();
        assert!(paths.iter().all(|p| p.len() == 2));
        assert!(disjoint_paths(&g, &[0, 1], &[2, 3], 3, &[]).is_err());
        assert!(disjoint_paths(&g, &[0, 1], &[2, 3], 2, &[2]).unwrap().is_none());
    }

    #[test]
    fn shared_member_is_a_trivial_path() {
        let g = path_graph(3);
        let paths = disjoint_paths(&g, &[1], &[1], 1, &[]).unwrap().unwrap();
        assert_eq!(paths, vec![Path(vec![1])]);
    }

    #[test]
    fn fan_examples() {
        let w = wheel(5);
        let spokes = fan(&w, 0, &[1, 2, 3, 4, 5], 5).unwrap().unwrap();
        assert!(spokes.iter().all(|p| p.len() == 2));
        let p3 = path_graph(3);
        assert_eq!(fan(&p3, 0, &[2], 1).unwrap().unwrap(), vec![Path(vec![0, 1, 2])]);
        assert!(fan(&p3, 0, &[0, 2], 1).is_err());
        assert!(fan(&p3, 0, &[2], 2).is_err());
        assert!(fan_avoiding(&p3, 0, &[2], 1, &[1]).unwrap().is_none());
    }
}
