//! 4-hammocks of a 4-connected graph: construction from a 4-cut,
//! classification, minimization and the local conditions used by discharging.

use std::fmt;

use thiserror::Error;

use crate::graph::{components, mask, vertex_connectivity, Graph, GraphError};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum HammockError {
    #[error("hammock vertex set induces a disconnected subgraph")]
    Disconnected,
    #[error("boundary vertex {0} is not in the hammock")]
    BoundaryOutside(usize),
    #[error("expected a 4-vertex cut, got {0} distinct vertices")]
    CutSize(usize),
    #[error("host is only {0}-connected; a 4-connected host is required")]
    NotFourConnected(usize),
    #[error("removing the cut leaves the host connected")]
    NoSeparation,
    #[error("hammock is {0}, not fat")]
    NotFat(HammockKind),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum HammockKind {
    Trivial,
    Degenerate,
    Fat,
}

impl fmt::Display for HammockKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            HammockKind::Trivial => "trivial",
            HammockKind::Degenerate => "degenerate",
            HammockKind::Fat => "fat",
        })
    }
}

/// Induced connected subgraph of `host` with its boundary set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Hammock {
    host: Graph,
    vertices: Vec<usize>,
    boundary: Vec<usize>,
    in_h: Vec<bool>,
    in_bnd: Vec<bool>,
}

impl Hammock {
    /// Hammock on `vertices`; the boundary is every vertex with a neighbor outside.
    pub fn new(host: Graph, vertices: Vec<usize>) -> Result<Self, HammockError> {
        let mut vertices = vertices;
        vertices.sort_unstable();
        vertices.dedup();
        for &v in &vertices {
            host.check_vertex(v)?;
        }
        let in_h = mask(host.n(), &vertices);
        let boundary: Vec<usize> = vertices
            .iter()
            .copied()
            .filter(|&v| host.neighbors(v).iter().any(|&w| !in_h[w]))
            .collect();
        Self::build(host, vertices, boundary, in_h)
    }

    /// Hammock with an explicitly chosen boundary, for standalone plane
    /// graphs treated as their own hammock.
    pub fn with_boundary(
        host: Graph,
        vertices: Vec<usize>,
        boundary: Vec<usize>,
    ) -> Result<Self, HammockError> {
        let mut vertices = vertices;
        vertices.sort_unstable();
        vertices.dedup();
        for &v in &vertices {
            host.check_vertex(v)?;
        }
        let in_h = mask(host.n(), &vertices);
        let mut boundary = boundary;
        boundary.sort_unstable();
        boundary.dedup();
        if let Some(&b) = boundary.iter().find(|&&b| b >= host.n() || !in_h[b]) {
            return Err(HammockError::BoundaryOutside(b));
        }
        Self::build(host, vertices, boundary, in_h)
    }

    fn build(
        host: Graph,
        vertices: Vec<usize>,
        boundary: Vec<usize>,
        in_h: Vec<bool>,
    ) -> Result<Self, HammockError> {
        if vertices.is_empty() || !host.restrict(&in_h).induced_subgraph(&vertices).0.is_connected() {
            return Err(HammockError::Disconnected);
        }
        let in_bnd = mask(host.n(), &boundary);
        Ok(Hammock { host, vertices, boundary, in_h, in_bnd })
    }

    pub fn host(&self) -> &Graph {
        &self.host
    }

    pub fn vertices(&self) -> &[usize] {
        &self.vertices
    }

    pub fn boundary(&self) -> &[usize] {
        &self.boundary
    }

    pub fn k(&self) -> usize {
        self.boundary.len()
    }

    pub fn interior(&self) -> Vec<usize> {
        self.vertices.iter().copied().filter(|&v| !self.in_bnd[v]).collect()
    }

    pub fn contains(&self, v: usize) -> bool {
        v < self.in_h.len() && self.in_h[v]
    }

    pub fn is_boundary(&self, v: usize) -> bool {
        v < self.in_bnd.len() && self.in_bnd[v]
    }

    pub fn membership(&self) -> &[bool] {
        &self.in_h
    }

    pub fn kind(&self) -> HammockKind {
        match self.vertices.len() - self.boundary.len() {
            0 => HammockKind::Trivial,
            1 => HammockKind::Degenerate,
            _ => HammockKind::Fat,
        }
    }

    /// `d_H(v)`, counting every host edge with both ends in `H`.
    pub fn degree_in(&self, v: usize) -> usize {
        self.host.neighbors(v).iter().filter(|&&w| self.in_h[w]).count()
    }

    /// `H` in the host's numbering (vertices outside `H` become isolated).
    pub fn subgraph(&self) -> Graph {
        self.host.restrict(&self.in_h)
    }

    /// `H` relabelled to `0..|V(H)|` in ascending vertex order.
    pub fn induced(&self) -> Graph {
        self.host.induced_subgraph(&self.vertices).0
    }
}

/// The hammocks `C ∪ cut` over the components `C` of `g - cut`.
pub fn hammocks_from_cut(g: &Graph, cut: &[usize]) -> Result<Vec<Hammock>, HammockError> {
    let kappa = vertex_connectivity(g)?;
    if kappa < 4 {
        return Err(HammockError::NotFourConnected(kappa));
    }
    hammocks_from_cut_unchecked(g, cut)
}

/// As [`hammocks_from_cut`] without the connectivity check.
pub(crate) fn hammocks_from_cut_unchecked(
    g: &Graph,
    cut: &[usize],
) -> Result<Vec<Hammock>, HammockError> {
    let mut cut = cut.to_vec();
    cut.sort_unstable();
    cut.dedup();
    if cut.len() != 4 {
        return Err(HammockError::CutSize(cut.len()));
    }
    for &c in &cut {
        g.check_vertex(c)?;
    }
    let comps = components(g, &cut);
    if comps.len() < 2 {
        return Err(HammockError::NoSeparation);
    }
    comps
        .into_iter()
        .map(|c| {
            let mut vs = c;
            vs.extend_from_slice(&cut);
            Hammock::new(g.clone(), vs)
        })
        .collect()
}

/// Smallest proper fat 4-hammock of the host inside `h` (lexicographically
/// least vertex set on ties), if any.
pub fn smallest_proper_fat(h: &Hammock) -> Option<Hammock> {
    let g = &h.host;
    let vs = &h.vertices;
    let k = vs.len();
    let mut best: Option<Vec<usize>> = None;
    let consider = |cand: Vec<usize>, best: &mut Option<Vec<usize>>| {
        let better = match best {
            None => true,
            Some(b) => (cand.len(), &cand) < (b.len(), b),
        };
        if better {
            *best = Some(cand);
        }
    };
    let mut s = [0usize; 4];
    for a in 0..k {
        for b in a + 1..k {
            for c in b + 1..k {
                for d in c + 1..k {
                    s[0] = vs[a];
                    s[1] = vs[b];
                    s[2] = vs[c];
                    s[3] = vs[d];
                    let comps = components(g, &s);
                    if comps.len() < 2 {
                        continue;
                    }
                    let inside: Vec<&Vec<usize>> =
                        comps.iter().filter(|c| c.iter().all(|&v| h.in_h[v])).collect();
                    let mut options: Vec<Vec<usize>> =
                        inside.iter().filter(|c| c.len() >= 2).map(|c| c.to_vec()).collect();
                    let singles: Vec<usize> =
                        inside.iter().filter(|c| c.len() == 1).map(|c| c[0]).collect();
                    for i in 0..singles.len() {
                        for j in i + 1..singles.len() {
                            options.push(vec![singles[i], singles[j]]);
                        }
                    }
                    for mut cand in options {
                        cand.extend_from_slice(&s);
                        cand.sort_unstable();
                        if cand.len() >= k {
                            continue;
                        }
                        if let Some(b) = &best {
                            if (cand.len(), &cand) >= (b.len(), b) {
                                continue;
                            }
                        }
                        let Ok(sub) = Hammock::new(g.clone(), cand.clone()) else { continue };
                        if sub.k() == 4 && sub.kind() == HammockKind::Fat {
                            consider(cand, &mut best);
                        }
                    }
                }
            }
        }
    }
    best.map(|b| Hammock::new(g.clone(), b).expect("candidate was validated"))
}

pub fn is_minimal(h: &Hammock) -> bool {
    smallest_proper_fat(h).is_none()
}

/// Descends into proper fat 4-hammocks until none remain.
pub fn minimize_fat(h: &Hammock) -> Result<Hammock, HammockError> {
    if h.kind() != HammockKind::Fat {
        return Err(HammockError::NotFat(h.kind()));
    }
    let mut cur = h.clone();
    while let Some(next) = smallest_proper_fat(&cur) {
        cur = next;
    }
    Ok(cur)
}

/// `H` is 2-connected (graphs on at most two vertices count as such).
pub fn check_kappa2(h: &Hammock) -> bool {
    h.induced().is_biconnected()
}

/// Vertices with `d_H(v) >= 5` or on the boundary.
pub fn good_vertices(h: &Hammock) -> Vec<usize> {
    h.vertices.iter().copied().filter(|&v| is_good(h, v)).collect()
}

fn is_good(h: &Hammock, v: usize) -> bool {
    h.is_boundary(v) || h.degree_in(v) >= 5
}

/// Every 3-vertex path of `H` has a good vertex and every triangle has two.
pub fn check_p3_k3_conditions(h: &Hammock) -> bool {
    for &v in &h.vertices {
        if is_good(h, v) {
            continue;
        }
        let nbrs: Vec<usize> =
            h.host.neighbors(v).iter().copied().filter(|&w| h.in_h[w]).collect();
        let bad: Vec<usize> = nbrs.iter().copied().filter(|&w| !is_good(h, w)).collect();
        // a bad middle vertex with two bad neighbors spans a bad P3
        if bad.len() >= 2 {
            return false;
        }
        // a triangle through a bad edge: v and w bad, any common neighbor
        for &w in &bad {
            if nbrs.iter().any(|&x| x != w && h.host.has_edge(w, x)) {
                return false;
            }
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::families::*;

    #[test]
    fn octahedron_cut_gives_two_degenerate() {
        let g = octahedron();
        let hs = hammocks_from_cut(&g, &[2, 3, 4, 5]).unwrap();
        assert_eq!(hs.len(), 2);
        for h in &hs {
            assert_eq!(h.kind(), HammockKind::Degenerate);
            assert_eq!(h.boundary(), &[2, 3, 4, 5]);
        }
        assert_eq!(hammocks_from_cut(&g, &[0, 2, 3, 4]).unwrap_err(), HammockError::NoSeparation);
    }

    #[test]
    fn cut_requires_four_connected_host() {
        let mut edges: Vec<_> = wheel(4).edges().collect();
        edges.push((1, 5));
        let g = Graph::from_edges(6, &edges).unwrap();
        assert_eq!(hammocks_from_cut(&g, &[0, 2, 3, 4]).unwrap_err(), HammockError::NotFourConnected(1));
    }

    #[test]
    fn classification_and_boundary() {
        let g = icosahedron();
        let h = Hammock::new(g.clone(), vec![0, 1, 2, 3, 4, 5]).unwrap();
        assert_eq!(h.boundary(), &[1, 2, 3, 4, 5]);
        assert_eq!(h.interior(), vec![0]);
        assert_eq!(h.kind(), HammockKind::Degenerate);
        assert_eq!(h.degree_in(0), 5);
        assert_eq!(h.degree_in(1), 3);
        for &b in h.boundary() {
            assert!(g.neighbors(b).iter().any(|&w| !h.contains(w)));
        }
        assert!(Hammock::new(g, vec![0, 11]).is_err());
    }

    #[test]
    fn minimization_finds_inner_fat_hammock() {
        // Two octahedron-like layers around a 4-cycle: a nested square antiprism stack.
        // Rings r_k = 4k..4k+3, k = 0..3, consecutive rings joined as antiprisms,
        // ends capped by single vertices 16 and 17.
        let mut edges = Vec::new();
        for k in 0..4 {
            for i in 0..4 {
                edges.push((4 * k + i, 4 * k + (i + 1) % 4));
                if k < 3 {
                    edges.push((4 * k + i, 4 * (k + 1) + i));
                    edges.push((4 * k + i, 4 * (k + 1) + (i + 1) % 4));
                }
            }
        }
        for i in 0..4 {
            edges.push((16, i));
            edges.push((17, 12 + i));
        }
        let g = Graph::from_edges(18, &edges).unwrap();
        assert_eq!(vertex_connectivity(&g).unwrap(), 4);
        let hs = hammocks_from_cut(&g, &[12, 13, 14, 15]).unwrap();
        let big = hs.iter().find(|h| h.kind() == HammockKind::Fat).unwrap();
        assert_eq!(big.vertices().len(), 17);
        let m = minimize_fat(big).unwrap();
        assert_eq!(m.kind(), HammockKind::Fat);
        assert!(m.vertices().len() < big.vertices().len());
        assert!(is_minimal(&m));
        assert_eq!(minimize_fat(&m).unwrap(), m);
        assert!(check_kappa2(&m));
        let degenerate = &hs.iter().find(|h| h.kind() == HammockKind::Degenerate).unwrap();
        assert!(matches!(minimize_fat(degenerate), Err(HammockError::NotFat(_))));
    }

    #[test]
    fn kappa2_examples() {
        let p = path_graph(3);
        let h = Hammock::with_boundary(p.clone(), vec![0, 1, 2], vec![0, 2]).unwrap();
        assert!(!check_kappa2(&h));
        let t = Hammock::with_boundary(p, vec![0, 1], vec![0, 1]).unwrap();
        assert!(check_kappa2(&t));
    }

    #[test]
    fn good_vertex_conditions() {
        // triangle, one boundary vertex: two bad vertices on a triangle
        let tri = Hammock::with_boundary(cycle(3), vec![0, 1, 2], vec![0]).unwrap();
        assert_eq!(good_vertices(&tri), vec![0]);
        assert!(!check_p3_k3_conditions(&tri));
        // path of three interior low-degree vertices
        let c5 = Hammock::with_boundary(cycle(5), (0..5).collect(), vec![0]).unwrap();
        assert!(!check_p3_k3_conditions(&c5));
        let c5b = Hammock::with_boundary(cycle(5), (0..5).collect(), vec![0, 2, 4]).unwrap();
        assert!(check_p3_k3_conditions(&c5b));
        let c6 = Hammock::with_boundary(cycle(6), (0..6).collect(), vec![0, 2, 4]).unwrap();
        assert!(check_p3_k3_conditions(&c6));
        let ico = Hammock::with_boundary(icosahedron(), (0..12).collect(), vec![]).unwrap();
        assert!(check_p3_k3_conditions(&ico));
    }
}
