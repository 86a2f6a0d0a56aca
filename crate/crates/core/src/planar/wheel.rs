//! Facial wheels `S_u` of interior vertices and the short / imbalanced /
//! proper predicates.

use serde::Serialize;

use super::{PlaneEmbedding, PlanarError};
use crate::hammock::Hammock;

/// Triangles `T = u n_i n_{i+1}`, `T' = u n_{i+2} n_{i+3}` and the two rim
/// segments left after deleting their rim edges: `q` runs `n_{i+1} .. n_{i+2}`,
/// `q_prime` runs `n_{i+3} .. n_i`, both clockwise.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ShortData {
    pub t: [usize; 3],
    pub t_prime: [usize; 3],
    pub q: Vec<usize>,
    pub q_prime: Vec<usize>,
}

impl ShortData {
    pub fn is_imbalanced(&self) -> bool {
        self.q.len() == 4 || self.q_prime.len() == 4
    }

    /// Interior of the order-4 segment, if any.
    pub fn long_interior(&self) -> Option<&[usize]> {
        [&self.q, &self.q_prime].into_iter().find(|s| s.len() == 4).map(|s| &s[1..3])
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FacialWheel {
    pub hub: usize,
    /// Rim circuit in clockwise order, starting at the first spoke end.
    pub rim: Vec<usize>,
    /// Neighbors of the hub in rotation order.
    pub spokes: Vec<usize>,
    /// Every choice of `(T, T')` satisfying SH.1 and SH.2; balanced choices first.
    pub short_options: Vec<ShortData>,
}

impl FacialWheel {
    pub fn short_data(&self) -> Option<&ShortData> {
        self.short_options.first()
    }

    pub fn rim_index(&self, v: usize) -> Option<usize> {
        self.rim.iter().position(|&x| x == v)
    }

    pub fn on_rim(&self, v: usize) -> bool {
        self.rim.contains(&v)
    }

    pub fn is_spoke_end(&self, v: usize) -> bool {
        self.spokes.contains(&v)
    }

    /// Clockwise rim walk from `a` to `b`, both included.
    pub fn rim_arc(&self, a: usize, b: usize) -> Vec<usize> {
        let k = self.rim.len();
        let mut i = self.rim_index(a).expect("a on rim");
        let j = self.rim_index(b).expect("b on rim");
        let mut out = vec![self.rim[i]];
        while i != j {
            i = (i + 1) % k;
            out.push(self.rim[i]);
        }
        out
    }
}

/// The facial wheel at `u`. The rim is the circuit of vertices cofacial
/// with `u`; it must be induced in the embedded graph.
pub fn facial_wheel(e: &PlaneEmbedding, u: usize) -> Result<FacialWheel, PlanarError> {
    if !e.contains_vertex(u) {
        return Err(PlanarError::NotEmbedded(u));
    }
    if e.outer().is_none() {
        return Err(PlanarError::NoOuterFace);
    }
    if e.on_outer_face(u) {
        return Err(PlanarError::OnOuterFace(u));
    }
    let bad = |reason: String| PlanarError::RimNotInduced { hub: u, reason };
    let spokes = e.rotation(u).to_vec();
    let d = spokes.len();
    if d < 3 {
        return Err(bad(format!("hub has degree {d}")));
    }
    let mut rim = Vec::new();
    for i in 0..d {
        let (a, b) = (spokes[i], spokes[(i + 1) % d]);
        // the face through n_i -> u -> n_{i+1}, walked from n_{i+1} back to n_i
        let f = &e.faces()[e.face_of_dart(a, u).expect("dart exists")].boundary;
        let k = f.len();
        let start = (0..k)
            .find(|&t| f[t] == u && f[(t + 1) % k] == b && f[(t + k - 1) % k] == a)
            .ok_or_else(|| bad(format!("hub repeats on the face between {a} and {b}")))?;
        let mut seg: Vec<usize> = (1..k).map(|s| f[(start + s) % k]).collect();
        seg.reverse();
        rim.extend_from_slice(&seg[..seg.len() - 1]);
    }
    let k = rim.len();
    let mut sorted = rim.clone();
    sorted.sort_unstable();
    sorted.dedup();
    if sorted.len() != k || sorted.binary_search(&u).is_ok() {
        return Err(bad("cofacial vertices do not form a circuit".into()));
    }
    let g = e.graph();
    for i in 0..k {
        for j in i + 1..k {
            let consecutive = j == i + 1 || (i == 0 && j == k - 1);
            if g.has_edge(rim[i], rim[j]) != consecutive {
                return Err(bad(format!("rim pair {} {} breaks the circuit", rim[i], rim[j])));
            }
        }
    }
    let mut w = FacialWheel { hub: u, rim, spokes, short_options: Vec::new() };
    w.short_options = short_options(&w, g);
    Ok(w)
}

fn short_options(w: &FacialWheel, g: &crate::graph::Graph) -> Vec<ShortData> {
    if w.spokes.len() != 4 {
        return Vec::new();
    }
    let n = &w.spokes;
    let mut out = Vec::new();
    for i in 0..2 {
        let (a, b, c, d) = (n[i], n[i + 1], n[(i + 2) % 4], n[(i + 3) % 4]);
        if !g.has_edge(a, b) || !g.has_edge(c, d) {
            continue;
        }
        let q = w.rim_arc(b, c);
        let q_prime = w.rim_arc(d, a);
        let orders_ok = (2..=4).contains(&q.len()) && (2..=4).contains(&q_prime.len());
        if orders_ok && !(q.len() == 4 && q_prime.len() == 4) {
            out.push(ShortData { t: [w.hub, a, b], t_prime: [w.hub, c, d], q, q_prime });
        }
    }
    out.sort_by_key(ShortData::is_imbalanced);
    out
}

pub fn is_short(w: &FacialWheel) -> bool {
    !w.short_options.is_empty()
}

/// Short, and every admissible `(T, T')` choice leaves an order-4 segment.
pub fn is_imbalanced(w: &FacialWheel) -> bool {
    is_short(w) && w.short_options.iter().all(ShortData::is_imbalanced)
}

/// Some choice's order-4 segment has interior disjoint from `bnd H`.
pub fn is_proper(w: &FacialWheel, h: &Hammock) -> Result<bool, PlanarError> {
    if !is_imbalanced(w) {
        return Err(PlanarError::NotImbalanced(w.hub));
    }
    Ok(w.short_options.iter().any(|s| {
        s.long_interior().is_some_and(|int| int.iter().all(|&x| !h.is_boundary(x)))
    }))
}
