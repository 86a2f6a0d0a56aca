//! Brute-force ground truth: exhaustive topological-K5 search and the
//! minimum-degree-5 K4- lemma.

use std::collections::{HashMap, HashSet};

use thiserror::Error;

use crate::graph::{fan, find_k4_minus, Graph};
use crate::pipeline::{check_certificate, Tk5Certificate};
use crate::planar::is_planar;

/// Environment variable overriding the default instance-size cap.
pub const MAX_N_ENV: &str = "TK5_ORACLE_MAX_N";
pub const DEFAULT_MAX_N: usize = 16;
const HARD_MAX_N: usize = 128;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum OracleError {
    #[error("graph has {n} vertices, above the oracle cap of {cap} (set {MAX_N_ENV} to raise it)")]
    TooLarge { n: usize, cap: usize },
    #[error("precondition failed: {0}")]
    Precondition(String),
}

pub fn max_n() -> usize {
    std::env::var(MAX_N_ENV)
        .ok()
        .and_then(|s| s.trim().parse().ok())
        .unwrap_or(DEFAULT_MAX_N)
        .min(HARD_MAX_N)
}

/// A verified TK5 certificate if `g` contains a subdivided K5.
pub fn has_topological_k5(g: &Graph) -> Result<Option<Tk5Certificate>, OracleError> {
    let cap = max_n();
    if g.n() > cap {
        return Err(OracleError::TooLarge { n: g.n(), cap });
    }
    let cands: Vec<usize> = (0..g.n()).filter(|&v| g.degree(v) >= 4).collect();
    let k = cands.len();
    for a in 0..k {
        for b in a + 1..k {
            for c in b + 1..k {
                for d in c + 1..k {
                    for e in d + 1..k {
                        let branch = [cands[a], cands[b], cands[c], cands[d], cands[e]];
                        if let Some(cert) = search_branch_set(g, branch) {
                            debug_assert!(check_certificate(g, &cert).is_ok());
                            return Ok(Some(cert));
                        }
                    }
                }
            }
        }
    }
    Ok(None)
}

/// TK5 with the given branch vertices, if one exists.
pub fn search_branch_set(g: &Graph, branch: [usize; 5]) -> Option<Tk5Certificate> {
    for &b in &branch {
        let others: Vec<usize> = branch.iter().copied().filter(|&x| x != b).collect();
        fan(g, b, &others, 4).ok()??;
    }
    let mut fixed = HashMap::new();
    let mut open = Vec::new();
    for i in 0..5 {
        for j in i + 1..5 {
            if g.has_edge(branch[i], branch[j]) {
                fixed.insert((i, j), vec![branch[i], branch[j]]);
            } else {
                open.push((i, j));
            }
        }
    }
    let mut used: u128 = 0;
    for &b in &branch {
        used |= 1 << b;
    }
    let mut search = Search { g, branch, failed: HashSet::new(), chosen: Vec::new() };
    let open_mask: u16 = (1 << open.len()) - 1;
    if search.solve(&open, open_mask, used) {
        for ((i, j), p) in open_pairs_paths(&open, &search.chosen) {
            fixed.insert((i, j), p);
        }
        return Some(Tk5Certificate::from_indexed(branch, fixed));
    }
    None
}

fn open_pairs_paths(
    open: &[(usize, usize)],
    chosen: &[(usize, Vec<usize>)],
) -> Vec<((usize, usize), Vec<usize>)> {
    chosen.iter().map(|(idx, p)| (open[*idx], p.clone())).collect()
}

struct Search<'a> {
    g: &'a Graph,
    branch: [usize; 5],
    failed: HashSet<(u128, u16)>,
    chosen: Vec<(usize, Vec<usize>)>,
}

const COUNT_CAP: usize = 64;

impl Search<'_> {
    fn solve(&mut self, open: &[(usize, usize)], remaining: u16, used: u128) -> bool {
        if remaining == 0 {
            return true;
        }
        if self.failed.contains(&(used, remaining)) {
            return false;
        }
        // fail fast: the pair with the fewest chordless paths goes first
        let mut best: Option<(usize, Vec<Vec<usize>>)> = None;
        for (idx, &(i, j)) in open.iter().enumerate() {
            if remaining & (1 << idx) == 0 {
                continue;
            }
            let paths = self.paths(self.branch[i], self.branch[j], used, COUNT_CAP);
            if paths.is_empty() {
                self.failed.insert((used, remaining));
                return false;
            }
            if best.as_ref().is_none_or(|(_, b)| paths.len() < b.len()) {
                best = Some((idx, paths));
            }
        }
        let (idx, mut paths) = best.expect("some pair remains");
        if paths.len() >= COUNT_CAP {
            let (i, j) = open[idx];
            paths = self.paths(self.branch[i], self.branch[j], used, usize::MAX);
        }
        for p in paths {
            let mut next = used;
            for &x in &p[1..p.len() - 1] {
                next |= 1 << x;
            }
            self.chosen.push((idx, p));
            if self.solve(open, remaining & !(1 << idx), next) {
                return true;
            }
            self.chosen.pop();
        }
        self.failed.insert((used, remaining));
        false
    }

    /// Chordless `a`-`b` paths whose interior avoids `used`, at most `limit`.
    fn paths(&self, a: usize, b: usize, used: u128, limit: usize) -> Vec<Vec<usize>> {
        let mut out = Vec::new();
        let mut path = vec![a];
        self.extend(b, used | (1 << a), &mut path, &mut out, limit);
        out
    }

    fn extend(&self, b: usize, used: u128, path: &mut Vec<usize>, out: &mut Vec<Vec<usize>>, limit: usize) {
        if out.len() >= limit {
            return;
        }
        let last = *path.last().expect("nonempty");
        if self.g.has_edge(last, b) {
            path.push(b);
            out.push(path.clone());
            path.pop();
            return;
        }
        for &x in self.g.neighbors(last) {
            if used & (1 << x) != 0 {
                continue;
            }
            // chordless: x sees no earlier path vertex except `last`
            if path[..path.len() - 1].iter().any(|&p| self.g.has_edge(p, x)) {
                continue;
            }
            path.push(x);
            self.extend(b, used | (1 << x), path, out, limit);
            path.pop();
            if out.len() >= limit {
                return;
            }
        }
    }
}

/// For 2-connected planar `g` with minimum degree at least 5, whether a K4-
/// is present (it always should be).
pub fn mohar_lemma_check(g: &Graph) -> Result<bool, OracleError> {
    if g.n() < 3 || !g.is_biconnected() {
        return Err(OracleError::Precondition("graph is not 2-connected".into()));
    }
    if !is_planar(g) {
        return Err(OracleError::Precondition("graph is not planar".into()));
    }
    if g.min_degree() < 5 {
        return Err(OracleError::Precondition(format!("minimum degree {} < 5", g.min_degree())));
    }
    Ok(find_k4_minus(g).is_some())
}
