//! Exact charging and discharging over a plane hammock, and the direct
//! search for short proper facial wheels.

use std::collections::BTreeSet;
use std::fmt::{self, Write as _};
use std::iter::Sum;
use std::ops::{Add, AddAssign, Neg, Sub, SubAssign};

use serde::Serialize;
use thiserror::Error;

use crate::graph::{find_k4_minus, vertex_connectivity, K4Minus};
use crate::hammock::{check_p3_k3_conditions, smallest_proper_fat, Hammock, HammockKind};
use crate::planar::{facial_wheel, is_imbalanced, is_proper, is_short, FacialWheel, PlaneEmbedding};

/// A rational with denominator 3, stored as its numerator.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct Charge(pub i64);

impl Charge {
    pub const ZERO: Charge = Charge(0);

    pub fn thirds(t: i64) -> Self {
        Charge(t)
    }

    pub fn whole(n: i64) -> Self {
        Charge(3 * n)
    }

    pub fn numerator_thirds(self) -> i64 {
        self.0
    }

    pub fn is_positive(self) -> bool {
        self.0 > 0
    }
}

impl fmt::Display for Charge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0 % 3 == 0 {
            write!(f, "{}", self.0 / 3)
        } else {
            write!(f, "{}/3", self.0)
        }
    }
}

impl Add for Charge {
    type Output = Charge;
    fn add(self, rhs: Charge) -> Charge {
        Charge(self.0 + rhs.0)
    }
}

impl Sub for Charge {
    type Output = Charge;
    fn sub(self, rhs: Charge) -> Charge {
        Charge(self.0 - rhs.0)
    }
}

impl Neg for Charge {
    type Output = Charge;
    fn neg(self) -> Charge {
        Charge(-self.0)
    }
}

impl AddAssign for Charge {
    fn add_assign(&mut self, rhs: Charge) {
        self.0 += rhs.0;
    }
}

impl SubAssign for Charge {
    fn sub_assign(&mut self, rhs: Charge) {
        self.0 -= rhs.0;
    }
}

impl Sum for Charge {
    fn sum<I: Iterator<Item = Charge>>(iter: I) -> Charge {
        Charge(iter.map(|c| c.0).sum())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum Rule {
    Dis1a,
    Dis1b,
    Dis1c,
    Dis2,
    Dis3a,
    Dis3b,
    Dis3c,
}

impl fmt::Display for Rule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Rule::Dis1a => "DIS.1.a",
            Rule::Dis1b => "DIS.1.b",
            Rule::Dis1c => "DIS.1.c",
            Rule::Dis2 => "DIS.2",
            Rule::Dis3a => "DIS.3.a",
            Rule::Dis3b => "DIS.3.b",
            Rule::Dis3c => "DIS.3.c",
        })
    }
}

/// Charge moving from a vertex to a face.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Transfer {
    pub rule: Rule,
    pub sender: usize,
    pub face: usize,
    pub amount: Charge,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum Element {
    Vertex(usize),
    Face(usize),
}

impl fmt::Display for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Element::Vertex(v) => write!(f, "vertex {v}"),
            Element::Face(i) => write!(f, "face {i}"),
        }
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum DischargeError {
    #[error("embedding has no designated outer face")]
    NoOuterFace,
    #[error("no discharging rule covers vertex {vertex} (d_H = {degree})")]
    RuleGap { vertex: usize, degree: usize },
    #[error("hammock is {0}, not fat")]
    NotFat(HammockKind),
    #[error("hammock is not minimal: it contains a proper fat 4-hammock")]
    NotMinimal,
    #[error("host contains K4-: {0}")]
    HostHasK4Minus(K4Minus),
    #[error("host is only {0}-connected")]
    NotFourConnected(usize),
    #[error("some 3-vertex path or triangle of H lacks good vertices")]
    GoodVertexConditions,
}

/// Charges of every vertex and face of a plane hammock, plus the transfers
/// applied so far.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ChargeLedger {
    /// `(vertex, initial)` in ascending vertex order.
    pub vertices: Vec<(usize, Charge)>,
    /// Initial charge per face index.
    pub faces: Vec<Charge>,
    pub outer: usize,
    pub transfers: Vec<Transfer>,
}

impl ChargeLedger {
    pub fn initial_total(&self) -> Charge {
        self.vertices.iter().map(|&(_, c)| c).sum::<Charge>() + self.faces.iter().copied().sum()
    }

    pub fn final_vertex(&self, v: usize) -> Charge {
        let init = self.vertices.iter().find(|&&(x, _)| x == v).map_or(Charge::ZERO, |&(_, c)| c);
        init - self.transfers.iter().filter(|t| t.sender == v).map(|t| t.amount).sum()
    }

    pub fn final_face(&self, f: usize) -> Charge {
        self.faces[f] + self.transfers.iter().filter(|t| t.face == f).map(|t| t.amount).sum()
    }

    /// Final charge of every element, vertices first.
    pub fn finals(&self) -> Vec<(Element, Charge)> {
        let mut sent = std::collections::HashMap::new();
        let mut recv = vec![Charge::ZERO; self.faces.len()];
        for t in &self.transfers {
            *sent.entry(t.sender).or_insert(Charge::ZERO) += t.amount;
            recv[t.face] += t.amount;
        }
        let mut out: Vec<(Element, Charge)> = self
            .vertices
            .iter()
            .map(|&(v, c)| (Element::Vertex(v), c - sent.get(&v).copied().unwrap_or_default()))
            .collect();
        out.extend(self.faces.iter().enumerate().map(|(i, &c)| (Element::Face(i), c + recv[i])));
        out
    }

    pub fn final_total(&self) -> Charge {
        self.finals().into_iter().map(|(_, c)| c).sum()
    }

    /// `kind id initial final` per element, then `rule sender face amount`
    /// per transfer, then `total <final total>`.
    pub fn dump(&self) -> String {
        let mut out = String::new();
        let finals = self.finals();
        for (&(v, init), (_, fin)) in self.vertices.iter().zip(&finals) {
            let _ = writeln!(out, "vertex {v} {init} {fin}");
        }
        for (i, (&init, (_, fin))) in self.faces.iter().zip(&finals[self.vertices.len()..]).enumerate() {
            let kind = if i == self.outer { "outer" } else { "face" };
            let _ = writeln!(out, "{kind} {i} {init} {fin}");
        }
        for t in &self.transfers {
            let _ = writeln!(out, "{} {} {} {}", t.rule, t.sender, t.face, t.amount);
        }
        let _ = writeln!(out, "total {}", self.final_total());
        out
    }
}

/// Sum of all charges after the recorded transfers (equal to the initial sum).
pub fn total_charge(l: &ChargeLedger) -> Charge {
    l.final_total()
}

/// `6 - d_H(v)` per vertex, `6 - 2|f|` per face and `-17/3 - 2|X_H|` for the
/// outer face.
pub fn initial_charges(e: &PlaneEmbedding, h: &Hammock) -> Result<ChargeLedger, DischargeError> {
    let outer = e.outer().ok_or(DischargeError::NoOuterFace)?;
    let vertices = h
        .vertices()
        .iter()
        .map(|&v| (v, Charge::whole(6 - e.rotation(v).len() as i64)))
        .collect();
    let faces = e
        .faces()
        .iter()
        .enumerate()
        .map(|(i, f)| {
            let len = f.len() as i64;
            if i == outer {
                Charge::thirds(-17 - 6 * len)
            } else {
                Charge::whole(6 - 2 * len)
            }
        })
        .collect();
    Ok(ChargeLedger { vertices, faces, outer, transfers: Vec::new() })
}

/// Canonical form of a cyclic sequence under rotation and reflection.
pub fn canonical_cycle(seq: &[usize]) -> Vec<usize> {
    let k = seq.len();
    let mut best: Option<Vec<usize>> = None;
    for rev in [false, true] {
        for s in 0..k {
            let cand: Vec<usize> = (0..k)
                .map(|i| if rev { seq[(s + k - i) % k] } else { seq[(s + i) % k] })
                .collect();
            if best.as_ref().is_none_or(|b| cand < *b) {
                best = Some(cand);
            }
        }
    }
    best.unwrap_or_default()
}

/// Face lengths around `v` in rotation order.
pub fn face_pattern(e: &PlaneEmbedding, v: usize) -> Vec<usize> {
    e.faces_around(v).iter().map(|&f| e.face(f).len()).collect()
}

pub fn is_3435_vertex(e: &PlaneEmbedding, v: usize) -> bool {
    canonical_cycle(&face_pattern(e, v)) == [3, 4, 3, 5]
}

/// Applies DIS.1 to DIS.3 once per (vertex, incident face) pair.
pub fn apply_discharging(
    l: &ChargeLedger,
    e: &PlaneEmbedding,
    h: &Hammock,
) -> Result<ChargeLedger, DischargeError> {
    let outer = l.outer;
    let on_outer: BTreeSet<usize> = e.face(outer).boundary.iter().copied().collect();
    let mut transfers = Vec::new();
    for &v in h.vertices() {
        let d = e.rotation(v).len();
        if d < 2 {
            return Err(DischargeError::RuleGap { vertex: v, degree: d });
        }
        let mut incident: Vec<usize> = e.faces_around(v);
        incident.sort_unstable();
        incident.dedup();
        let len = |f: usize| e.face(f).len();
        let mut send = |rule, face, thirds| {
            transfers.push(Transfer { rule, sender: v, face, amount: Charge::thirds(thirds) });
        };
        if on_outer.contains(&v) && d <= 4 {
            let others: Vec<usize> = incident.iter().copied().filter(|&f| f != outer).collect();
            match d {
                2 => {
                    let [g] = others[..] else {
                        return Err(DischargeError::RuleGap { vertex: v, degree: d });
                    };
                    if len(g) == 3 {
                        send(Rule::Dis1a, outer, 12);
                    } else {
                        send(Rule::Dis1a, outer, 11);
                        send(Rule::Dis1a, g, 1);
                    }
                }
                3 | 4 => {
                    let rule = if d == 3 { Rule::Dis1b } else { Rule::Dis1c };
                    send(rule, outer, if d == 3 { 8 } else { 5 });
                    for &f in others.iter().filter(|&&f| len(f) >= 4) {
                        send(rule, f, 1);
                    }
                }
                _ => unreachable!(),
            }
        } else if d >= 5 {
            for &f in incident.iter().filter(|&&f| len(f) >= 4) {
                send(Rule::Dis2, f, 1);
            }
        } else if d == 4 {
            let special = is_3435_vertex(e, v);
            for &f in &incident {
                match len(f) {
                    4 => send(Rule::Dis3a, f, 2),
                    5 => send(Rule::Dis3b, f, if special { 4 } else { 3 }),
                    l if l >= 6 => send(Rule::Dis3c, f, 4),
                    _ => {}
                }
            }
        }
    }
    let mut out = l.clone();
    out.transfers = transfers;
    Ok(out)
}

/// Elements with positive final charge.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NonpositiveReport {
    pub positive: Vec<(Element, Charge)>,
}

impl NonpositiveReport {
    pub fn all_nonpositive(&self) -> bool {
        self.positive.is_empty()
    }
}

pub fn verify_nonpositive(l: &ChargeLedger) -> NonpositiveReport {
    NonpositiveReport { positive: l.finals().into_iter().filter(|(_, c)| c.is_positive()).collect() }
}

/// Every facial wheel with hub off `X_H` that is short and, if imbalanced,
/// proper. No hypotheses are checked.
pub fn scan_short_proper_wheels(e: &PlaneEmbedding, h: &Hammock) -> Vec<FacialWheel> {
    let mut out = Vec::new();
    for &u in h.vertices() {
        if e.on_outer_face(u) || h.is_boundary(u) || e.rotation(u).len() != 4 {
            continue;
        }
        let Ok(w) = facial_wheel(e, u) else { continue };
        if is_short(&w) && (!is_imbalanced(&w) || is_proper(&w, h).unwrap_or(false)) {
            out.push(w);
        }
    }
    out
}

/// Checks the hypotheses (host 4-connected and K4- free, `h` minimal fat,
/// good-vertex conditions), then returns the first short proper wheel.
pub fn find_short_proper_wheel(
    e: &PlaneEmbedding,
    h: &Hammock,
) -> Result<Option<FacialWheel>, DischargeError> {
    if h.kind() != HammockKind::Fat {
        return Err(DischargeError::NotFat(h.kind()));
    }
    if !check_p3_k3_conditions(h) {
        return Err(DischargeError::GoodVertexConditions);
    }
    if let Some(k) = find_k4_minus(h.host()) {
        return Err(DischargeError::HostHasK4Minus(k));
    }
    let kappa = vertex_connectivity(h.host()).unwrap_or(0);
    if kappa < 4 {
        return Err(DischargeError::NotFourConnected(kappa));
    }
    if smallest_proper_fat(h).is_some() {
        return Err(DischargeError::NotMinimal);
    }
    Ok(scan_short_proper_wheels(e, h).into_iter().next())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::families::*;
    use crate::graph::Graph;
    use crate::planar::planar_embed;

    fn whole_graph(g: &Graph, bnd: Vec<usize>, outer: usize) -> (PlaneEmbedding, Hammock) {
        let e = planar_embed(g).unwrap().unwrap().with_outer(outer);
        let h = Hammock::with_boundary(g.clone(), (0..g.n()).collect(), bnd).unwrap();
        (e, h)
    }

    #[test]
    fn charge_display_and_arithmetic() {
        assert_eq!(Charge::thirds(1).to_string(), "1/3");
        assert_eq!(Charge::thirds(-41).to_string(), "-41/3");
        assert_eq!(Charge::whole(2).to_string(), "2");
        assert_eq!(Charge::thirds(2) + Charge::thirds(1), Charge::whole(1));
    }

    #[test]
    fn initial_values() {
        let (e, h) = whole_graph(&cube(), vec![0, 1, 2, 3], 0);
        let l = initial_charges(&e, &h).unwrap();
        assert_eq!(l.faces[0], Charge::thirds(-41));
        assert!(l.faces[1..].iter().all(|&c| c == Charge::whole(-2)));
        assert!(l.vertices.iter().all(|&(_, c)| c == Charge::whole(3)));
        assert_eq!(total_charge(&l), Charge::thirds(1));
        let (e, h) = whole_graph(&octahedron(), vec![0, 2, 3, 4], 0);
        let l = initial_charges(&e, &h).unwrap();
        assert_eq!(l.vertices[0].1, Charge::whole(2));
        assert_eq!(l.faces[1], Charge::ZERO);
        assert_eq!(total_charge(&l), Charge::thirds(1));
        let bare = planar_embed(&cube()).unwrap().unwrap();
        assert_eq!(initial_charges(&bare, &h), Err(DischargeError::NoOuterFace));
    }

    #[test]
    fn canonical_pattern() {
        assert_eq!(canonical_cycle(&[5, 3, 4, 3]), vec![3, 4, 3, 5]);
        assert_eq!(canonical_cycle(&[3, 5, 3, 4]), vec![3, 4, 3, 5]);
        assert_ne!(canonical_cycle(&[3, 3, 4, 5]), vec![3, 4, 3, 5]);
    }

    /// Hub 0 on faces (3,4,3,5); see the wheel tests for the layout.
    fn three_four_three_five() -> Graph {
        let mut edges = vec![(0, 1), (0, 2), (0, 4), (0, 5)];
        for i in 1..=7 {
            edges.push((i, i % 7 + 1));
            edges.push((8, i));
        }
        Graph::from_edges(9, &edges).unwrap()
    }

    #[test]
    fn rule_examples() {
        let g = three_four_three_five();
        let mut e = planar_embed(&g).unwrap().unwrap();
        let outer = (0..e.faces().len()).find(|&i| e.face(i).boundary == [8, 1, 2] || {
            let mut b = e.face(i).boundary.clone();
            b.sort_unstable();
            b == [1, 2, 8]
        }).unwrap();
        e.set_outer(outer);
        let h = Hammock::with_boundary(g.clone(), (0..9).collect(), vec![1, 2, 8, 3]).unwrap();
        let l = apply_discharging(&initial_charges(&e, &h).unwrap(), &e, &h).unwrap();
        let from0: Vec<_> = l.transfers.iter().filter(|t| t.sender == 0).collect();
        assert_eq!(from0.len(), 2);
        for t in from0 {
            let len = e.face(t.face).len();
            match len {
                4 => assert_eq!((t.rule, t.amount), (Rule::Dis3a, Charge::thirds(2))),
                5 => assert_eq!((t.rule, t.amount), (Rule::Dis3b, Charge::thirds(4))),
                _ => panic!("unexpected face length {len}"),
            }
        }
        assert_eq!(l.initial_total(), l.final_total());
        assert_eq!(total_charge(&l), Charge::thirds(1));
        assert!(l.transfers.iter().all(|t| t.face < l.faces.len()));
    }

    #[test]
    fn two_valent_outer_vertex() {
        // square with one diagonal: vertex 1 is 2-valent on a triangle
        let g = Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3), (3, 0), (0, 2)]).unwrap();
        let mut e = planar_embed(&g).unwrap().unwrap();
        let outer = (0..3).find(|&i| e.face(i).len() == 4).unwrap();
        e.set_outer(outer);
        let h = Hammock::with_boundary(g.clone(), (0..4).collect(), vec![0, 1, 2, 3]).unwrap();
        let l = apply_discharging(&initial_charges(&e, &h).unwrap(), &e, &h).unwrap();
        let from1: Vec<_> = l.transfers.iter().filter(|t| t.sender == 1).collect();
        assert_eq!(from1.len(), 1);
        assert_eq!((from1[0].rule, from1[0].face, from1[0].amount), (Rule::Dis1a, outer, Charge::whole(4)));
        assert_eq!(total_charge(&l), Charge::thirds(1));
    }

    #[test]
    fn high_degree_vertices_stay_nonpositive() {
        let g = wheel(7);
        let mut e = planar_embed(&g).unwrap().unwrap();
        let outer = (0..e.faces().len()).find(|&i| e.face(i).len() == 7).unwrap();
        e.set_outer(outer);
        let h = Hammock::with_boundary(g.clone(), (0..8).collect(), vec![1, 2, 3, 4]).unwrap();
        let l = apply_discharging(&initial_charges(&e, &h).unwrap(), &e, &h).unwrap();
        assert!(l.final_vertex(0) <= Charge::ZERO);
        let report = verify_nonpositive(&l);
        assert!(!report.all_nonpositive(), "total 1/3 forces a positive element");
        assert!(l.dump().ends_with("total 1/3\n"));
    }

    #[test]
    fn precondition_reports() {
        let g = octahedron();
        let hs = crate::hammock::hammocks_from_cut(&g, &[2, 3, 4, 5]).unwrap();
        let e = planar_embed(&g).unwrap().unwrap().with_outer(0);
        assert!(matches!(find_short_proper_wheel(&e, &hs[0]), Err(DischargeError::NotFat(_))));
    }
}
