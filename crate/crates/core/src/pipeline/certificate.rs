//! Subdivided-K5 certificates and their independent verification.

use std::collections::HashMap;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::Graph;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CertPath {
    pub pair: [usize; 2],
    pub vertices: Vec<usize>,
}

/// Five branch vertices and one path per branch pair, ordered by the
/// positions of the pair in `branch`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Tk5Certificate {
    pub branch: [usize; 5],
    pub paths: Vec<CertPath>,
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CertificateError {
    #[error("branch vertex {0} repeated")]
    BranchRepeated(usize),
    #[error("vertex {0} is not in the graph")]
    OutOfRange(usize),
    #[error("expected 10 paths, found {0}")]
    PathCount(usize),
    #[error("no path for branch pair {0:?}")]
    MissingPair([usize; 2]),
    #[error("pair {0:?} is not a pair of branch vertices or is listed twice")]
    BadPair([usize; 2]),
    #[error("path for {pair:?} does not run between its pair")]
    Ends { pair: [usize; 2] },
    #[error("path for {pair:?} steps along non-edge {a}-{b}")]
    NonEdge { pair: [usize; 2], a: usize, b: usize },
    #[error("path for {pair:?} repeats vertex {vertex}")]
    Repeated { pair: [usize; 2], vertex: usize },
    #[error("path for {pair:?} passes through branch vertex {vertex}")]
    BranchInterior { pair: [usize; 2], vertex: usize },
    #[error("paths for {pair:?} and {other:?} share vertex {vertex}")]
    Shared { pair: [usize; 2], other: [usize; 2], vertex: usize },
}

impl Tk5Certificate {
    /// Builds a certificate from paths keyed by branch index pairs `(i, j)`,
    /// `i < j`; each path runs from `branch[i]` to `branch[j]`.
    pub fn from_indexed(branch: [usize; 5], mut paths: HashMap<(usize, usize), Vec<usize>>) -> Self {
        let mut out = Vec::with_capacity(10);
        for i in 0..5 {
            for j in i + 1..5 {
                let mut p = paths.remove(&(i, j)).unwrap_or_default();
                if p.first() == Some(&branch[j]) {
                    p.reverse();
                }
                out.push(CertPath { pair: [branch[i], branch[j]], vertices: p });
            }
        }
        Tk5Certificate { branch, paths: out }
    }

    /// Certificate for a `K5` on `branch` using the direct edges.
    pub fn from_edges(branch: [usize; 5]) -> Self {
        let mut map = HashMap::new();
        for i in 0..5 {
            for j in i + 1..5 {
                map.insert((i, j), vec![branch[i], branch[j]]);
            }
        }
        Self::from_indexed(branch, map)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("certificate serializes")
    }

    /// Vertices used by any path.
    pub fn vertex_count(&self) -> usize {
        let mut all: Vec<usize> = self.paths.iter().flat_map(|p| p.vertices.iter().copied()).collect();
        all.sort_unstable();
        all.dedup();
        all.len()
    }
}

/// Checks every certificate invariant against `g`, naming the first failure.
pub fn check_certificate(g: &Graph, c: &Tk5Certificate) -> Result<(), CertificateError> {
    let n = g.n();
    let mut is_branch = vec![false; n];
    for &b in &c.branch {
        if b >= n {
            return Err(CertificateError::OutOfRange(b));
        }
        if is_branch[b] {
            return Err(CertificateError::BranchRepeated(b));
        }
        is_branch[b] = true;
    }
    if c.paths.len() != 10 {
        return Err(CertificateError::PathCount(c.paths.len()));
    }
    let mut seen_pairs = Vec::new();
    let mut owner: HashMap<usize, [usize; 2]> = HashMap::new();
    for p in &c.paths {
        let pair = p.pair;
        let key = [pair[0].min(pair[1]), pair[0].max(pair[1])];
        if pair[0] == pair[1]
            || !pair.iter().all(|&x| x < n && is_branch[x])
            || seen_pairs.contains(&key)
        {
            return Err(CertificateError::BadPair(pair));
        }
        seen_pairs.push(key);
        let vs = &p.vertices;
        if vs.len() < 2 || vs[0] != pair[0] || vs[vs.len() - 1] != pair[1] {
            return Err(CertificateError::Ends { pair });
        }
        if let Some(&x) = vs.iter().find(|&&x| x >= n) {
            return Err(CertificateError::OutOfRange(x));
        }
        for w in vs.windows(2) {
            if !g.has_edge(w[0], w[1]) {
                return Err(CertificateError::NonEdge { pair, a: w[0], b: w[1] });
            }
        }
        let mut local = vs.clone();
        local.sort_unstable();
        if let Some(w) = local.windows(2).find(|w| w[0] == w[1]) {
            return Err(CertificateError::Repeated { pair, vertex: w[0] });
        }
        for &x in &vs[1..vs.len() - 1] {
            if is_branch[x] {
                return Err(CertificateError::BranchInterior { pair, vertex: x });
            }
            if let Some(&other) = owner.get(&x) {
                return Err(CertificateError::Shared { pair, other, vertex: x });
            }
            owner.insert(x, pair);
        }
    }
    for i in 0..5 {
        for j in i + 1..5 {
            let (a, b) = (c.branch[i], c.branch[j]);
            if !seen_pairs.contains(&[a.min(b), a.max(b)]) {
                return Err(CertificateError::MissingPair([a, b]));
            }
        }
    }
    Ok(())
}

pub fn verify_certificate(g: &Graph, c: &Tk5Certificate) -> bool {
    check_certificate(g, c).is_ok()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::families::*;

    #[test]
    fn k5_edges_verify() {
        let c = Tk5Certificate::from_edges([0, 1, 2, 3, 4]);
        assert!(verify_certificate(&complete(5), &c));
        let json = c.to_json();
        assert!(json.find("\"branch\"").unwrap() < json.find("\"paths\"").unwrap());
        let back: Tk5Certificate = serde_json::from_str(&json).unwrap();
        assert_eq!(back, c);
    }

    #[test]
    fn tampering_is_caught() {
        // K5 with edge 0-1 subdivided by 5 and edge 2-3 subdivided by 6
        let mut edges: Vec<(usize, usize)> = complete(5).edges().filter(|&e| e != (0, 1) && e != (2, 3)).collect();
        edges.extend([(0, 5), (5, 1), (2, 6), (6, 3)]);
        let g = Graph::from_edges(7, &edges).unwrap();
        let mut c = Tk5Certificate::from_edges([0, 1, 2, 3, 4]);
        c.paths[0].vertices = vec![0, 5, 1];
        let i23 = c.paths.iter().position(|p| p.pair == [2, 3]).unwrap();
        c.paths[i23].vertices = vec![2, 6, 3];
        assert!(verify_certificate(&g, &c));

        let mut shared = c.clone();
        shared.paths[i23].vertices = vec![2, 5, 3];
        assert!(matches!(check_certificate(&g, &shared), Err(CertificateError::NonEdge { .. } | CertificateError::Shared { .. })));

        let mut nonedge = c.clone();
        nonedge.paths[0].vertices = vec![0, 1];
        assert_eq!(
            check_certificate(&g, &nonedge),
            Err(CertificateError::NonEdge { pair: [0, 1], a: 0, b: 1 })
        );

        let mut repeated = c.clone();
        repeated.branch[4] = 0;
        assert_eq!(check_certificate(&g, &repeated), Err(CertificateError::BranchRepeated(0)));
    }

    #[test]
    fn shared_interior_vertex() {
        let g = complete(7);
        let mut c = Tk5Certificate::from_edges([0, 1, 2, 3, 4]);
        c.paths[0].vertices = vec![0, 5, 1];
        c.paths[1].vertices = vec![0, 5, 2];
        assert_eq!(
            check_certificate(&g, &c),
            Err(CertificateError::Shared { pair: [0, 2], other: [0, 1], vertex: 5 })
        );
    }
}
