//! End-to-end construction: validate a 5-connected nonplanar apex graph,
//! then report a K4- or build and verify a TK5 through a hammock, a short
//! facial wheel, a `C_u`-linkage and a 5-fan.

mod certificate;

use std::collections::HashMap;

use serde::Serialize;
use thiserror::Error;

pub use certificate::{check_certificate, verify_certificate, CertPath, CertificateError, Tk5Certificate};

use crate::discharging::scan_short_proper_wheels;
use crate::graph::{fan_avoiding, find_k4_minus, vertex_connectivity, Graph, GraphError, K4Minus, Path};
use crate::hammock::{hammocks_from_cut_unchecked, minimize_fat, Hammock, HammockKind};
use crate::linkage::{find_cu_linkage, CuLinkage};
use crate::oracle::{has_topological_k5, OracleError};
use crate::planar::{facial_wheel, faces_of_subgraph, find_apex_vertices, is_planar, planar_embed, FacialWheel};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PipelineError {
    #[error("graph is only {0}-connected, not 5-connected")]
    NotFiveConnected(usize),
    #[error("graph is planar")]
    Planar,
    #[error("graph is not apex")]
    NotApex,
    #[error("vertex {0} is not an apex vertex")]
    NotAnApexVertex(usize),
    #[error("construction failed: {reason}")]
    ConstructionFailure { reason: String, trace: Box<Trace> },
    #[error("assembly failed: {0}")]
    Assembly(String),
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Oracle(#[from] OracleError),
}

/// The objects chosen along the way, in the input graph's labels.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Trace {
    pub apex: Option<usize>,
    /// 4-valent vertex of `G - v` whose neighborhood cuts out the first hammock.
    pub cut_vertex: Option<usize>,
    pub hammock: Vec<usize>,
    pub hammock_boundary: Vec<usize>,
    pub wheel_hub: Option<usize>,
    pub wheel_rim: Vec<usize>,
    pub wheel_short: bool,
    pub linkage_ends: Vec<usize>,
    pub linkage: Vec<Path>,
    pub w: Option<usize>,
    pub fan: Vec<Path>,
}

#[allow(clippy::large_enum_variant)]
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub enum Outcome {
    K4MinusFound(K4Minus),
    Tk5Built { certificate: Tk5Certificate, trace: Trace },
    SmallGraphTk5(Tk5Certificate),
}

impl Outcome {
    pub fn certificate(&self) -> Option<&Tk5Certificate> {
        match self {
            Outcome::K4MinusFound(_) => None,
            Outcome::Tk5Built { certificate, .. } | Outcome::SmallGraphTk5(certificate) => Some(certificate),
        }
    }
}

/// Checks 5-connectivity, nonplanarity and apexness; returns the apex vertices.
pub fn validate_input(g: &Graph) -> Result<Vec<usize>, PipelineError> {
    let kappa = if g.n() < 2 { 0 } else { vertex_connectivity(g)? };
    if kappa < 5 {
        return Err(PipelineError::NotFiveConnected(kappa));
    }
    if is_planar(g) {
        return Err(PipelineError::Planar);
    }
    let apexes = find_apex_vertices(g);
    if apexes.is_empty() {
        return Err(PipelineError::NotApex);
    }
    Ok(apexes)
}

/// A K4- if present, otherwise a TK5 built through some apex vertex.
pub fn construct(g: &Graph) -> Result<Outcome, PipelineError> {
    let apexes = validate_input(g)?;
    if let Some(k) = find_k4_minus(g) {
        return Ok(Outcome::K4MinusFound(k));
    }
    let mut last = None;
    for v in apexes {
        match wheel_branch(g, v) {
            Ok(o) => return Ok(o),
            Err(e) => last = Some(e),
        }
    }
    Err(last.expect("at least one apex was tried"))
}

/// The TK5 construction through apex `v`, run even when `g` has a K4-.
pub fn construct_through_apex(g: &Graph, v: usize) -> Result<Outcome, PipelineError> {
    g.check_vertex(v)?;
    let apexes = validate_input(g)?;
    if !apexes.contains(&v) {
        return Err(PipelineError::NotAnApexVertex(v));
    }
    wheel_branch(g, v)
}

fn failure(reason: impl Into<String>, trace: &Trace) -> PipelineError {
    PipelineError::ConstructionFailure { reason: reason.into(), trace: Box::new(trace.clone()) }
}

fn map_path(p: &Path, map: &[usize]) -> Path {
    Path(p.vertices().iter().map(|&x| map[x]).collect())
}

fn map_wheel(w: &FacialWheel, map: &[usize]) -> FacialWheel {
    let m = |xs: &[usize]| xs.iter().map(|&x| map[x]).collect::<Vec<_>>();
    let mut out = w.clone();
    out.hub = map[w.hub];
    out.rim = m(&w.rim);
    out.spokes = m(&w.spokes);
    for s in &mut out.short_options {
        s.t = s.t.map(|x| map[x]);
        s.t_prime = s.t_prime.map(|x| map[x]);
        s.q = m(&s.q);
        s.q_prime = m(&s.q_prime);
    }
    out
}

fn map_linkage(l: &CuLinkage, map: &[usize]) -> CuLinkage {
    CuLinkage {
        paths: l.paths.iter().map(|p| map_path(p, map)).collect(),
        ends: l.ends.map(|x| map[x]),
        alpha: l.alpha,
    }
}

fn wheel_branch(g: &Graph, v: usize) -> Result<Outcome, PipelineError> {
    let mut trace = Trace { apex: Some(v), ..Trace::default() };
    let (gv, map) = g.without_vertex(v);
    let Ok(Some(e)) = planar_embed(&gv) else {
        return Err(failure("G - v has no plane embedding", &trace));
    };
    if gv.min_degree() != 4 {
        return Err(failure(format!("minimum degree of G - v is {}, not 4", gv.min_degree()), &trace));
    }
    let mut last_reason = String::from("no 4-valent vertex yields a fat hammock");
    for u0 in (0..gv.n()).filter(|&x| gv.degree(x) == 4) {
        trace.cut_vertex = Some(map[u0]);
        let Ok(hs) = hammocks_from_cut_unchecked(&gv, gv.neighbors(u0)) else { continue };
        if hs.iter().all(|h| h.kind() != HammockKind::Fat) {
            if g.n() == 7 {
                return match has_topological_k5(g)? {
                    Some(c) => Ok(Outcome::SmallGraphTk5(c)),
                    None => Err(failure("7-vertex graph without TK5", &trace)),
                };
            }
            continue;
        }
        for h0 in hs.iter().filter(|h| h.kind() == HammockKind::Fat) {
            let h = minimize_fat(h0).map_err(|err| failure(err.to_string(), &trace))?;
            trace.hammock = h.vertices().iter().map(|&x| map[x]).collect();
            trace.hammock_boundary = h.boundary().iter().map(|&x| map[x]).collect();
            match through_hammock(g, v, &gv, &map, &e, &h, &mut trace) {
                Ok(c) => return Ok(Outcome::Tk5Built { certificate: c, trace }),
                Err(reason) => last_reason = reason,
            }
        }
    }
    Err(failure(last_reason, &trace))
}

/// Short proper wheels first, then every other interior 4-valent hub.
fn hub_wheels(e: &crate::planar::PlaneEmbedding, h: &Hammock) -> Vec<FacialWheel> {
    let mut wheels = scan_short_proper_wheels(e, h);
    let short_hubs: Vec<usize> = wheels.iter().map(|w| w.hub).collect();
    for &u in h.vertices() {
        if short_hubs.contains(&u) || h.is_boundary(u) || e.on_outer_face(u) || e.rotation(u).len() != 4 {
            continue;
        }
        if let Ok(w) = facial_wheel(e, u) {
            wheels.push(w);
        }
    }
    wheels
}

fn through_hammock(
    g: &Graph,
    v: usize,
    gv: &Graph,
    map: &[usize],
    e: &crate::planar::PlaneEmbedding,
    h: &Hammock,
    trace: &mut Trace,
) -> Result<Tk5Certificate, String> {
    let eh = faces_of_subgraph(e, h.vertices()).map_err(|err| err.to_string())?;
    let interior: Vec<usize> = h.interior().iter().map(|&x| map[x]).collect();
    let mut bnd_prime: Vec<usize> = h.boundary().iter().map(|&x| map[x]).collect();
    bnd_prime.push(v);
    let in_h_prime = {
        let mut m = vec![false; g.n()];
        for &x in h.vertices() {
            m[map[x]] = true;
        }
        m[v] = true;
        m
    };
    let mut reason = String::from("no hub admits a linkage with alpha >= 3");
    for wheel in hub_wheels(&eh, h) {
        if gv.degree(wheel.hub) != 4 {
            continue;
        }
        let Ok(Some(link)) = find_cu_linkage(h, &wheel, 3) else { continue };
        let wheel_g = map_wheel(&wheel, map);
        let link_g = map_linkage(&link, map);
        trace.wheel_hub = Some(wheel_g.hub);
        trace.wheel_rim = wheel_g.rim.clone();
        trace.wheel_short = !wheel.short_options.is_empty();
        trace.linkage_ends = link_g.ends.to_vec();
        trace.linkage = link_g.paths.clone();
        if !g.has_edge(wheel_g.hub, v) {
            reason = format!("hub {} is not adjacent to the apex", wheel_g.hub);
            continue;
        }
        for w in (0..g.n()).filter(|&x| !in_h_prime[x]) {
            let Ok(Some(fan)) = fan_avoiding(g, w, &bnd_prime, 5, &interior) else { continue };
            trace.w = Some(w);
            trace.fan = fan.clone();
            match assemble_tk5(&wheel_g, &link_g, &fan, v, w) {
                Ok(c) => match check_certificate(g, &c) {
                    Ok(()) => return Ok(c),
                    Err(err) => reason = format!("assembled certificate rejected: {err}"),
                },
                Err(err) => reason = err.to_string(),
            }
        }
    }
    Err(reason)
}

/// Branch vertices `u`, `w` and three linkage ends adjacent to `u`.
pub fn assemble_tk5(
    wheel: &FacialWheel,
    linkage: &CuLinkage,
    fan: &[Path],
    v: usize,
    w: usize,
) -> Result<Tk5Certificate, PipelineError> {
    let u = wheel.hub;
    let chosen: Vec<usize> = linkage.ends.iter().copied().filter(|&a| wheel.is_spoke_end(a)).take(3).collect();
    if chosen.len() < 3 {
        return Err(PipelineError::Assembly(format!("linkage has alpha {} < 3", chosen.len())));
    }
    let fan_to = |target: usize| -> Result<&Path, PipelineError> {
        fan.iter()
            .find(|p| p.first() == w && p.last() == target)
            .ok_or_else(|| PipelineError::Assembly(format!("no fan path from {w} to {target}")))
    };
    let branch = [u, w, chosen[0], chosen[1], chosen[2]];
    let mut paths: HashMap<(usize, usize), Vec<usize>> = HashMap::new();
    let to_v = fan_to(v)?;
    let mut uw = vec![u];
    uw.extend(to_v.vertices().iter().rev());
    paths.insert((0, 1), uw);
    for (i, &a) in chosen.iter().enumerate() {
        paths.insert((0, 2 + i), vec![u, a]);
        let p = linkage
            .path_to(a)
            .ok_or_else(|| PipelineError::Assembly(format!("no linkage path ends at {a}")))?;
        let mut composite = fan_to(p.first())?.vertices().to_vec();
        composite.extend_from_slice(&p.vertices()[1..]);
        paths.insert((1, 2 + i), composite);
    }
    for i in 0..3 {
        let (a, b) = (chosen[i], chosen[(i + 1) % 3]);
        let arc = wheel.rim_arc(a, b);
        let key = if i < 2 { (2 + i, 3 + i) } else { (2, 4) };
        paths.insert(key, arc);
    }
    Ok(Tk5Certificate::from_indexed(branch, paths))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::families::*;

    /// Cuboctahedron: medial graph of the cube, 4-regular, 4-connected, K4- free.
    pub(crate) fn cuboctahedron() -> Graph {
        let cube = cube();
        let edges: Vec<(usize, usize)> = cube.edges().collect();
        let mut out = Vec::new();
        for (i, &(a, b)) in edges.iter().enumerate() {
            for (j, &(c, d)) in edges.iter().enumerate().skip(i + 1) {
                // consecutive edges around a face of the cube share a vertex
                // and differ in two distinct bits
                let shared = [a, b].into_iter().find(|x| *x == c || *x == d);
                if let Some(s) = shared {
                    let o1 = if a == s { b } else { a };
                    let o2 = if c == s { d } else { c };
                    if (o1 ^ s) != (o2 ^ s) {
                        out.push((i, j));
                    }
                }
            }
        }
        Graph::from_edges(12, &out).unwrap()
    }

    #[test]
    fn validation_errors() {
        assert_eq!(validate_input(&complete(6)), Err(PipelineError::NotApex));
        assert_eq!(validate_input(&complete(5)), Err(PipelineError::NotFiveConnected(4)));
        assert_eq!(validate_input(&icosahedron()), Err(PipelineError::Planar));
        let g = icosahedron().with_universal_vertex();
        assert!(validate_input(&g).unwrap().contains(&12));
    }

    #[test]
    fn apexed_icosahedron_reports_k4_minus() {
        let g = icosahedron().with_universal_vertex();
        let Outcome::K4MinusFound(k) = construct(&g).unwrap() else { panic!("expected K4-") };
        assert!(k.is_present_in(&g));
    }

    #[test]
    fn cuboctahedron_is_k4_minus_free_base() {
        let c = cuboctahedron();
        assert_eq!(c.m(), 24);
        assert!((0..12).all(|v| c.degree(v) == 4));
        assert!(find_k4_minus(&c).is_none());
        assert_eq!(vertex_connectivity(&c).unwrap(), 4);
    }

    #[test]
    fn cuboctahedron_hammock_has_no_hub() {
        // every interior vertex of the minimal fat hammock lies on X_H
        let g = cuboctahedron().with_universal_vertex();
        let err = construct_through_apex(&g, 12).unwrap_err();
        assert!(matches!(err, PipelineError::ConstructionFailure { .. }));
    }

    #[test]
    fn wheel_branch_on_medial_base() {
        let g = crate::generate::apexed_quadrangulation(17, 0).unwrap();
        let Outcome::Tk5Built { certificate, trace } = construct_through_apex(&g, 16).unwrap() else {
            panic!("expected a TK5")
        };
        assert!(verify_certificate(&g, &certificate));
        assert_eq!(trace.apex, Some(16));
        assert!(trace.wheel_short);
        assert!(certificate.branch.contains(&trace.wheel_hub.unwrap()));
        assert!(certificate.branch.contains(&trace.w.unwrap()));
        assert!(matches!(construct(&g).unwrap(), Outcome::K4MinusFound(_)));
    }

    #[test]
    fn seven_vertex_case() {
        let g = octahedron().with_universal_vertex();
        assert_eq!(g.n(), 7);
        let out = construct_through_apex(&g, 6).unwrap();
        let Outcome::SmallGraphTk5(c) = out else { panic!("expected the small-graph outcome") };
        assert!(verify_certificate(&g, &c));
    }
}
