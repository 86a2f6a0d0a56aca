//! `C_u`-linkages: four disjoint paths inside a hammock from its boundary
//! to the rim of a facial wheel, found by prescribed-end flow search.

use serde::Serialize;
use thiserror::Error;

use crate::graph::{disjoint_paths, find_k4_minus, mask, GraphError, Path};
use crate::hammock::Hammock;
use crate::planar::FacialWheel;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LinkageError {
    #[error("min_alpha must lie in 0..=4, got {0}")]
    AlphaRange(usize),
    #[error("hammock boundary has {0} vertices, expected 4")]
    BoundarySize(usize),
    #[error("prescribed end {0} is not on the rim")]
    EndOffRim(usize),
    #[error("prescribed ends must be 4 distinct rim vertices")]
    EndCount,
    #[error(transparent)]
    Graph(#[from] GraphError),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CuLinkage {
    /// `paths[i]` runs from a boundary vertex to `ends[i]`.
    pub paths: Vec<Path>,
    /// Rim ends in clockwise order.
    pub ends: [usize; 4],
    pub alpha: usize,
}

impl CuLinkage {
    /// Path ending at rim vertex `a`.
    pub fn path_to(&self, a: usize) -> Option<&Path> {
        self.ends.iter().position(|&x| x == a).map(|i| &self.paths[i])
    }
}

/// Number of ends that are neighbors of the hub.
pub fn alpha(l: &CuLinkage, w: &FacialWheel) -> usize {
    l.ends.iter().filter(|&&a| w.is_spoke_end(a)).count()
}

fn clockwise(w: &FacialWheel, ends: &[usize]) -> [usize; 4] {
    let mut e: Vec<usize> = ends.to_vec();
    e.sort_by_key(|&a| w.rim_index(a).expect("end on rim"));
    [e[0], e[1], e[2], e[3]]
}

fn check_boundary(h: &Hammock) -> Result<(), LinkageError> {
    if h.k() != 4 {
        return Err(LinkageError::BoundarySize(h.k()));
    }
    Ok(())
}

/// A linkage whose end set is exactly `ends`, or `None`.
pub fn find_linkage_with_prescribed_ends(
    h: &Hammock,
    w: &FacialWheel,
    ends: &[usize],
) -> Result<Option<CuLinkage>, LinkageError> {
    check_boundary(h)?;
    let mut sorted = ends.to_vec();
    sorted.sort_unstable();
    sorted.dedup();
    if sorted.len() != 4 || ends.len() != 4 {
        return Err(LinkageError::EndCount);
    }
    if let Some(&a) = sorted.iter().find(|&&a| !w.on_rim(a)) {
        return Err(LinkageError::EndOffRim(a));
    }
    Ok(prescribed_unchecked(h, w, &sorted))
}

fn prescribed_unchecked(h: &Hammock, w: &FacialWheel, ends: &[usize]) -> Option<CuLinkage> {
    // a boundary vertex on the rim can only be its own path's end
    if h.boundary().iter().any(|&b| w.on_rim(b) && !ends.contains(&b)) {
        return None;
    }
    let g = h.host();
    let is_end = mask(g.n(), ends);
    let mut forbidden: Vec<usize> = (0..g.n()).filter(|&v| !h.contains(v)).collect();
    forbidden.push(w.hub);
    forbidden.extend(w.rim.iter().copied().filter(|&r| !is_end[r]));
    let paths = disjoint_paths(g, h.boundary(), ends, 4, &forbidden).ok()??;
    let ordered = clockwise(w, ends);
    let paths: Vec<Path> = ordered
        .iter()
        .map(|&a| paths.iter().find(|p| p.last() == a).expect("one path per end").clone())
        .collect();
    let mut l = CuLinkage { paths, ends: ordered, alpha: 0 };
    l.alpha = alpha(&l, w);
    Some(l)
}

/// All 4-subsets of the rim, most hub neighbors first, then lexicographic.
fn candidate_end_sets(w: &FacialWheel, min_alpha: usize) -> Vec<[usize; 4]> {
    let mut rim = w.rim.clone();
    rim.sort_unstable();
    let k = rim.len();
    let mut out = Vec::new();
    for a in 0..k {
        for b in a + 1..k {
            for c in b + 1..k {
                for d in c + 1..k {
                    let set = [rim[a], rim[b], rim[c], rim[d]];
                    if set.iter().filter(|&&x| w.is_spoke_end(x)).count() >= min_alpha {
                        out.push(set);
                    }
                }
            }
        }
    }
    out.sort_by_key(|s| std::cmp::Reverse(s.iter().filter(|&&x| w.is_spoke_end(x)).count()));
    out
}

/// A linkage with `alpha >= min_alpha`, maximizing alpha first.
pub fn find_cu_linkage(
    h: &Hammock,
    w: &FacialWheel,
    min_alpha: usize,
) -> Result<Option<CuLinkage>, LinkageError> {
    if min_alpha > 4 {
        return Err(LinkageError::AlphaRange(min_alpha));
    }
    check_boundary(h)?;
    Ok(candidate_end_sets(w, min_alpha).into_iter().find_map(|s| prescribed_unchecked(h, w, &s)))
}

/// Every end set realized by some linkage, in candidate order.
pub fn realizable_end_sets(h: &Hammock, w: &FacialWheel) -> Result<Vec<[usize; 4]>, LinkageError> {
    check_boundary(h)?;
    Ok(candidate_end_sets(w, 0)
        .into_iter()
        .filter(|s| prescribed_unchecked(h, w, s).is_some())
        .collect())
}

fn realizable(h: &Hammock, w: &FacialWheel, ends: &[usize]) -> bool {
    let mut s = ends.to_vec();
    s.sort_unstable();
    s.dedup();
    s.len() == 4 && prescribed_unchecked(h, w, &s).is_some()
}

/// Every rim vertex strictly between consecutive ends can replace one of
/// those two ends.
pub fn check_slippery(h: &Hammock, w: &FacialWheel, l: &CuLinkage) -> bool {
    for i in 0..4 {
        let (a, b) = (l.ends[i], l.ends[(i + 1) % 4]);
        let arc = w.rim_arc(a, b);
        for &x in &arc[1..arc.len() - 1] {
            let swap = |old: usize| -> Vec<usize> {
                l.ends.iter().map(|&e| if e == old { x } else { e }).collect()
            };
            if !realizable(h, w, &swap(a)) && !realizable(h, w, &swap(b)) {
                return false;
            }
        }
    }
    true
}

fn hub_positions(w: &FacialWheel, ends: &[usize; 4]) -> Vec<usize> {
    (0..4).filter(|&i| w.is_spoke_end(ends[i])).collect()
}

/// When the best alpha is exactly 2, every realizable end set with alpha 2
/// has its two hub neighbors consecutive among the four ends.
pub fn check_consecutive_property(h: &Hammock, w: &FacialWheel) -> bool {
    let Ok(sets) = realizable_end_sets(h, w) else { return false };
    let best = sets.iter().map(|s| hub_positions(w, s).len()).max().unwrap_or(0);
    if best != 2 {
        return true;
    }
    sets.iter().all(|s| {
        let ordered = clockwise(w, s);
        let pos = hub_positions(w, &ordered);
        pos.len() != 2 || matches!(pos[1] - pos[0], 1 | 3)
    })
}

/// For every realizable end set satisfying the hypotheses of the alpha
/// increase lemma under some cyclic labelling, either the host has a K4-
/// or a linkage with larger alpha exists.
pub fn check_increase_property(h: &Hammock, w: &FacialWheel) -> bool {
    if find_k4_minus(h.host()).is_some() {
        return true;
    }
    let Ok(sets) = realizable_end_sets(h, w) else { return false };
    let best = sets.iter().map(|s| hub_positions(w, s).len()).max().unwrap_or(0);
    !sets.iter().any(|s| {
        let ends = clockwise(w, s);
        let k = hub_positions(w, &ends).len();
        k > 0 && k == best && increase_hypotheses(w, &ends)
    })
}

fn increase_hypotheses(w: &FacialWheel, ends: &[usize; 4]) -> bool {
    (0..4).any(|r| {
        let a = |i: usize| ends[(r + i - 1) % 4];
        let (a1, a2, a3) = (a(1), a(2), a(3));
        !w.is_spoke_end(a1)
            && !w.is_spoke_end(a3)
            && w.is_spoke_end(a2)
            && w.rim_arc(a1, a2).iter().filter(|&&x| w.is_spoke_end(x)).count() >= 2
    })
}
