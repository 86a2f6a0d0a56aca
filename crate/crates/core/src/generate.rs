//! Seeded random instances: 2-connected plane graphs with explicit faces,
//! triangulations with a minimum-degree target, medial graphs, and apexed
//! 5-connected graphs. Every generator checks its postconditions.

use std::collections::{BTreeSet, HashMap};

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::graph::{find_k4_minus, vertex_connectivity, Graph};
use crate::planar::{is_planar, PlaneEmbedding};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GenError {
    #[error("no {kind} instance with n = {n}: {reason}")]
    Infeasible { kind: &'static str, n: usize, reason: String },
}

fn infeasible(kind: &'static str, n: usize, reason: impl Into<String>) -> GenError {
    GenError::Infeasible { kind, n, reason: reason.into() }
}

/// A plane graph given by its faces (each a vertex cycle, consistently oriented).
#[derive(Clone, Debug)]
pub struct PlaneGraph {
    pub graph: Graph,
    pub faces: Vec<Vec<usize>>,
}

impl PlaneGraph {
    pub fn embedding(&self) -> PlaneEmbedding {
        PlaneEmbedding::from_faces(self.graph.clone(), (0..self.graph.n()).collect(), &self.faces)
            .expect("generated faces form a sphere embedding")
    }
}

fn graph_of_faces(n: usize, faces: &[Vec<usize>]) -> Graph {
    let mut edges = BTreeSet::new();
    for f in faces {
        for i in 0..f.len() {
            let (a, b) = (f[i], f[(i + 1) % f.len()]);
            edges.insert((a.min(b), a.max(b)));
        }
    }
    Graph::from_edges(n, &edges.into_iter().collect::<Vec<_>>()).expect("valid edges")
}

/// Random 2-connected plane graph on `n >= 3` vertices, built from a triangle
/// by inserting chords and ears into faces.
pub fn plane_2conn(n: usize, seed: u64) -> Result<PlaneGraph, GenError> {
    if n < 3 {
        return Err(infeasible("plane_2conn", n, "need at least 3 vertices"));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut faces: Vec<Vec<usize>> = vec![vec![0, 1, 2], vec![2, 1, 0]];
    let mut next = 3;
    let mut adj: BTreeSet<(usize, usize)> = [(0, 1), (1, 2), (0, 2)].into_iter().collect();
    let mut chords = 0;
    while next < n || (chords < n / 3 && rng.gen_bool(0.5)) {
        let fi = rng.gen_range(0..faces.len());
        let f = faces[fi].clone();
        let k = f.len();
        let i = rng.gen_range(0..k);
        let j = (i + 1 + rng.gen_range(0..k - 1)) % k;
        let (a, b) = (f[i], f[j]);
        let ear_len = if next < n { rng.gen_range(1..=(n - next).min(3)) } else { 0 };
        if ear_len == 0 && (adj.contains(&(a.min(b), a.max(b))) || k < 4) {
            if next >= n {
                chords += 1;
            }
            continue;
        }
        let ear: Vec<usize> = (next..next + ear_len).collect();
        next += ear_len;
        if ear_len == 0 {
            adj.insert((a.min(b), a.max(b)));
            chords += 1;
        } else {
            let chain: Vec<usize> = std::iter::once(a).chain(ear.iter().copied()).chain(std::iter::once(b)).collect();
            for w in chain.windows(2) {
                adj.insert((w[0].min(w[1]), w[0].max(w[1])));
            }
        }
        // f = a .. b .. (cyclic); split into a..b + ear reversed, and b..a + ear
        let arc = |from: usize, to: usize| -> Vec<usize> {
            let mut out = vec![f[from]];
            let mut t = from;
            while t != to {
                t = (t + 1) % k;
                out.push(f[t]);
            }
            out
        };
        let mut f1 = arc(i, j);
        f1.extend(ear.iter().rev());
        let mut f2 = arc(j, i);
        f2.extend(ear.iter());
        faces[fi] = f1;
        faces.push(f2);
    }
    let graph = graph_of_faces(n, &faces);
    debug_assert!(graph.is_biconnected());
    Ok(PlaneGraph { graph, faces })
}

/// Triangulation stored as a dart map: `(a, b) -> c` for each oriented face `(a, b, c)`.
struct Tri {
    n: usize,
    third: HashMap<(usize, usize), usize>,
    deg: Vec<usize>,
}

impl Tri {
    fn k4() -> Self {
        let mut t = Tri { n: 4, third: HashMap::new(), deg: vec![3; 4] };
        for f in [[0, 1, 2], [0, 2, 3], [0, 3, 1], [1, 3, 2]] {
            t.add_face(f);
        }
        t
    }

    fn add_face(&mut self, [a, b, c]: [usize; 3]) {
        self.third.insert((a, b), c);
        self.third.insert((b, c), a);
        self.third.insert((c, a), b);
    }

    fn remove_face(&mut self, [a, b, c]: [usize; 3]) {
        self.third.remove(&(a, b));
        self.third.remove(&(b, c));
        self.third.remove(&(c, a));
    }

    fn insert_vertex(&mut self, (a, b): (usize, usize)) {
        let c = self.third[&(a, b)];
        let x = self.n;
        self.n += 1;
        self.deg.push(3);
        self.remove_face([a, b, c]);
        self.add_face([a, b, x]);
        self.add_face([b, c, x]);
        self.add_face([c, a, x]);
        for v in [a, b, c] {
            self.deg[v] += 1;
        }
    }

    /// Flips edge `ab`; `None` if the flip would create a multi-edge.
    fn flip(&mut self, a: usize, b: usize) -> Option<(usize, usize)> {
        let c = self.third[&(a, b)];
        let d = self.third[&(b, a)];
        if c == d || self.third.contains_key(&(c, d)) || self.deg[a] <= 3 || self.deg[b] <= 3 {
            return None;
        }
        self.remove_face([a, b, c]);
        self.remove_face([b, a, d]);
        self.add_face([a, d, c]);
        self.add_face([d, b, c]);
        self.deg[a] -= 1;
        self.deg[b] -= 1;
        self.deg[c] += 1;
        self.deg[d] += 1;
        Some((c, d))
    }

    fn darts(&self) -> Vec<(usize, usize)> {
        let mut d: Vec<(usize, usize)> = self.third.keys().copied().collect();
        d.sort_unstable();
        d
    }

    fn faces(&self) -> Vec<Vec<usize>> {
        self.darts()
            .into_iter()
            .filter(|&(a, b)| a < b && a < self.third[&(a, b)])
            .map(|(a, b)| vec![a, b, self.third[&(a, b)]])
            .collect()
    }

    fn deficit(&self, target: usize) -> usize {
        self.deg.iter().map(|&d| target.saturating_sub(d)).sum()
    }
}

const TRI_ATTEMPTS: u64 = 40;

/// Random triangulation on `n >= 4` vertices with minimum degree at least
/// `min_degree` (3, 4 or 5); 4-connected when `min_degree >= 4`.
pub fn triangulation(n: usize, min_degree: usize, seed: u64) -> Result<PlaneGraph, GenError> {
    let kind = "triangulation";
    match min_degree {
        0..=3 if n >= 4 => {}
        4 if n >= 6 => {}
        5 if n == 12 || n >= 14 => {}
        0..=5 => return Err(infeasible(kind, n, format!("no triangulation with minimum degree {min_degree}"))),
        _ => return Err(infeasible(kind, n, "planar graphs have a vertex of degree at most 5")),
    }
    for attempt in 0..TRI_ATTEMPTS {
        let mut rng = ChaCha8Rng::seed_from_u64(seed.wrapping_mul(0x9e37_79b9).wrapping_add(attempt));
        let mut t = Tri::k4();
        while t.n < n {
            let darts = t.darts();
            let d = *darts.choose(&mut rng).expect("faces exist");
            t.insert_vertex(d);
        }
        for _ in 0..3 * n {
            let (a, b) = *t.darts().choose(&mut rng).expect("darts");
            t.flip(a, b);
        }
        let target = min_degree.max(3);
        let mut deficit = t.deficit(target);
        for _ in 0..400 * n {
            if deficit == 0 {
                break;
            }
            let (a, b) = *t.darts().choose(&mut rng).expect("darts");
            let Some((c, d)) = t.flip(a, b) else { continue };
            let now = t.deficit(target);
            if now > deficit || (now == deficit && rng.gen_bool(0.5)) {
                // undo: the new edge is cd with faces (a,d,c), (d,b,c)
                t.flip(d, c).expect("flip back");
            } else {
                deficit = now;
            }
        }
        if deficit > 0 {
            continue;
        }
        let faces = t.faces();
        let graph = graph_of_faces(n, &faces);
        if graph.m() != 3 * n - 6 || graph.min_degree() < target {
            continue;
        }
        if min_degree >= 4 && vertex_connectivity(&graph).unwrap_or(0) < 4 {
            continue;
        }
        return Ok(PlaneGraph { graph, faces });
    }
    Err(infeasible(kind, n, format!("no success after {TRI_ATTEMPTS} attempts")))
}

/// Medial graph: one vertex per edge of `p`, adjacent when consecutive on a face.
pub fn medial(p: &PlaneGraph) -> PlaneGraph {
    let index: HashMap<(usize, usize), usize> =
        p.graph.edges().enumerate().map(|(i, e)| (e, i)).collect();
    let edge = |a: usize, b: usize| index[&(a.min(b), a.max(b))];
    let mut faces = Vec::new();
    // faces of the medial: one per face of p, one per vertex of p
    for f in &p.faces {
        faces.push((0..f.len()).map(|i| edge(f[i], f[(i + 1) % f.len()])).collect::<Vec<_>>());
    }
    // around vertex x, the face following dart (x, y) enters x along (z, x)
    let mut next_dart: HashMap<(usize, usize), usize> = HashMap::new();
    for f in &p.faces {
        let k = f.len();
        for i in 0..k {
            next_dart.insert((f[i], f[(i + 1) % k]), f[(i + 2) % k]);
        }
    }
    for x in 0..p.graph.n() {
        let Some(&start) = p.graph.neighbors(x).first() else { continue };
        let mut cyc = Vec::new();
        let mut y = start;
        loop {
            cyc.push(edge(x, y));
            // face containing dart (y, x) continues to (x, z)
            let z = next_dart[&(y, x)];
            y = z;
            if y == start {
                break;
            }
        }
        cyc.reverse();
        faces.push(cyc);
    }
    let graph = graph_of_faces(p.graph.m(), &faces);
    PlaneGraph { graph, faces }
}

/// Plane graph with edge `ab` deleted, merging its two faces.
fn delete_edge(p: &PlaneGraph, a: usize, b: usize) -> PlaneGraph {
    let rot = |f: &Vec<usize>, x: usize, y: usize| -> Option<Vec<usize>> {
        let k = f.len();
        (0..k).find(|&i| f[i] == x && f[(i + 1) % k] == y).map(|i| (0..k).map(|j| f[(i + j) % k]).collect())
    };
    let i1 = p.faces.iter().position(|f| rot(f, a, b).is_some()).expect("dart a->b");
    let i2 = p.faces.iter().position(|f| rot(f, b, a).is_some()).expect("dart b->a");
    let f1 = rot(&p.faces[i1], a, b).expect("dart");
    let f2 = rot(&p.faces[i2], b, a).expect("dart");
    let mut merged = vec![a];
    merged.extend_from_slice(&f2[2..]);
    merged.push(b);
    merged.extend_from_slice(&f1[2..]);
    let mut faces: Vec<Vec<usize>> =
        p.faces.iter().enumerate().filter(|&(i, _)| i != i1 && i != i2).map(|(_, f)| f.clone()).collect();
    faces.push(merged);
    PlaneGraph { graph: graph_of_faces(p.graph.n(), &faces), faces }
}

/// 4-regular, 4-connected, K4- free plane graph on exactly `n` vertices: the
/// medial graph of a 3-connected plane graph with no 3-valent vertex on a
/// triangular face.
pub fn medial_base(n: usize, seed: u64) -> Result<PlaneGraph, GenError> {
    let kind = "medial base";
    if n < 12 {
        return Err(infeasible(kind, n, "the smallest such graph (cuboctahedron) has 12 vertices"));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..200 {
        // p needs n edges; a triangulation on t vertices has 3t - 6 of them
        let t = n.div_ceil(3) + 2;
        let Ok(mut p) = triangulation(t, 4, rng.gen()) else { continue };
        let mut tries = 0;
        while p.graph.m() > n && tries < 50 {
            tries += 1;
            let edges: Vec<(usize, usize)> = p.graph.edges().collect();
            let &(a, b) = edges.choose(&mut rng).expect("edges");
            if p.graph.degree(a) <= 3 || p.graph.degree(b) <= 3 {
                continue;
            }
            let q = delete_edge(&p, a, b);
            if q.faces.iter().all(|f| f.len() <= 5) {
                p = q;
            }
        }
        if p.graph.m() != n || vertex_connectivity(&p.graph).unwrap_or(0) < 3 {
            continue;
        }
        let three_on_triangle = p.faces.iter().any(|f| f.len() == 3 && f.iter().any(|&x| p.graph.degree(x) == 3));
        if three_on_triangle {
            continue;
        }
        let m = medial(&p);
        if m.graph.min_degree() == 4
            && find_k4_minus(&m.graph).is_none()
            && vertex_connectivity(&m.graph).unwrap_or(0) >= 4
        {
            return Ok(m);
        }
    }
    Err(infeasible(kind, n, "no 3-connected plane graph with suitable faces found"))
}

/// Plane base plus a universal apex (vertex `n - 1`); the result is checked to
/// be 5-connected and nonplanar.
fn apexed(kind: &'static str, base: &Graph) -> Result<Graph, GenError> {
    let g = base.with_universal_vertex();
    if vertex_connectivity(&g).unwrap_or(0) < 5 || is_planar(&g) {
        return Err(infeasible(kind, g.n(), "apexed base is not 5-connected and nonplanar"));
    }
    Ok(g)
}

/// 5-connected apex graph on `n` vertices: a 4-connected triangulation with
/// minimum degree `min_degree` (4 or 5) plus apex.
pub fn apexed_triangulation(n: usize, min_degree: usize, seed: u64) -> Result<Graph, GenError> {
    if n < 7 {
        return Err(infeasible("apexed triangulation", n, "need at least 7 vertices"));
    }
    if min_degree < 4 {
        return Err(infeasible("apexed triangulation", n, "a base with minimum degree below 4 is not 4-connected"));
    }
    let base = triangulation(n - 1, min_degree, seed)?;
    apexed("apexed triangulation", &base.graph)
}

/// 5-connected apex graph on `n` vertices whose base is a K4- free medial graph.
pub fn apexed_quadrangulation(n: usize, seed: u64) -> Result<Graph, GenError> {
    if n < 13 {
        return Err(infeasible("apexed quadrangulation", n, "the base needs at least 12 vertices"));
    }
    let base = medial_base(n - 1, seed)?;
    apexed("apexed quadrangulation", &base.graph)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::families;

    #[test]
    fn plane_2conn_is_embedded() {
        for seed in 0..30 {
            let n = 3 + (seed as usize % 20);
            let p = plane_2conn(n, seed).unwrap();
            assert_eq!(p.graph.n(), n);
            assert!(p.graph.is_biconnected());
            assert_eq!(p.embedding().euler_characteristic(), 2);
        }
    }

    #[test]
    fn triangulations_meet_degree_targets() {
        for (n, d) in [(8, 3), (10, 4), (12, 5), (16, 5), (20, 4)] {
            let t = triangulation(n, d, 7).unwrap();
            assert_eq!(t.graph.m(), 3 * n - 6);
            assert!(t.graph.min_degree() >= d);
            assert_eq!(t.embedding().euler_characteristic(), 2);
        }
        assert!(triangulation(13, 5, 0).is_err());
    }

    #[test]
    fn medial_of_cube_is_cuboctahedron() {
        let cube = families::cube();
        let e = crate::planar::planar_embed(&cube).unwrap().unwrap();
        let faces: Vec<Vec<usize>> = e.faces().iter().map(|f| f.boundary.clone()).collect();
        let m = medial(&PlaneGraph { graph: cube, faces });
        assert_eq!((m.graph.n(), m.graph.m()), (12, 24));
        assert_eq!(m.faces.len(), 14);
        assert!(find_k4_minus(&m.graph).is_none());
    }

    #[test]
    fn apexed_instances() {
        let g = apexed_triangulation(12, 4, 3).unwrap();
        assert_eq!(g.n(), 12);
        for n in [13, 16, 19] {
            let g = apexed_quadrangulation(n, 1).unwrap();
            assert_eq!(g.n(), n);
            assert!(find_k4_minus(&g.without_vertex(n - 1).0).is_none());
        }
    }
}
