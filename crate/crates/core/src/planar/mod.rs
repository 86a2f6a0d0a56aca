//! Combinatorial plane embeddings: rotation systems, face tracing, planarity,
//! restriction to vertex subsets, apex detection and facial wheels.

mod dmp;
mod wheel;

use std::collections::HashMap;
use std::fmt::Write as _;

use thiserror::Error;

use crate::graph::{mask, Graph, GraphError};

pub use wheel::{facial_wheel, is_imbalanced, is_proper, is_short, FacialWheel, ShortData};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PlanarError {
    #[error("graph is disconnected")]
    Disconnected,
    #[error("graph has no vertices")]
    Empty,
    #[error("rotation system is inconsistent: {0}")]
    BadRotation(String),
    #[error("embedding has no designated outer face")]
    NoOuterFace,
    #[error("vertex {0} lies on the outer face")]
    OnOuterFace(usize),
    #[error("vertex {0} is not part of the embedding")]
    NotEmbedded(usize),
    #[error("rim of the wheel at {hub} is not an induced circuit: {reason}")]
    RimNotInduced { hub: usize, reason: String },
    #[error("wheel at {0} is not imbalanced; properness is undefined")]
    NotImbalanced(usize),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// Closed boundary walk of a face, following darts `boundary[i] -> boundary[i+1]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Face {
    pub boundary: Vec<usize>,
}

impl Face {
    pub fn len(&self) -> usize {
        self.boundary.len()
    }

    pub fn is_empty(&self) -> bool {
        self.boundary.is_empty()
    }

    pub fn contains(&self, v: usize) -> bool {
        self.boundary.contains(&v)
    }
}

/// A rotation system over a vertex subset of `graph` together with its
/// traced faces. Vertices outside `vertices` carry no edges.
///
/// Faces follow the rule: after dart `a -> b` comes `b -> succ_b(a)`, where
/// `succ_b` is the cyclic successor in `b`'s rotation.
#[derive(Clone, Debug)]
pub struct PlaneEmbedding {
    graph: Graph,
    vertices: Vec<usize>,
    rotation: Vec<Vec<usize>>,
    faces: Vec<Face>,
    outer: Option<usize>,
    dart_face: HashMap<(usize, usize), usize>,
}

impl PlaneEmbedding {
    /// Traces faces of `rotation` and checks it is a genus-0 rotation system
    /// of `graph` restricted to `vertices` (which must induce a connected graph).
    pub fn from_rotation(
        graph: Graph,
        vertices: Vec<usize>,
        rotation: Vec<Vec<usize>>,
    ) -> Result<Self, PlanarError> {
        let n = graph.n();
        if rotation.len() != n {
            return Err(PlanarError::BadRotation("rotation length differs from n".into()));
        }
        let inside = mask(n, &vertices);
        for v in 0..n {
            let mut sorted = rotation[v].clone();
            sorted.sort_unstable();
            let expected: Vec<usize> = if inside[v] {
                graph.neighbors(v).iter().copied().filter(|&w| inside[w]).collect()
            } else {
                Vec::new()
            };
            if sorted != expected {
                return Err(PlanarError::BadRotation(format!(
                    "rotation at {v} is not a permutation of its neighbors"
                )));
            }
        }
        let mut pos: HashMap<(usize, usize), usize> = HashMap::new();
        for (v, rot) in rotation.iter().enumerate() {
            for (i, &w) in rot.iter().enumerate() {
                pos.insert((v, w), i);
            }
        }
        let succ = |b: usize, a: usize| {
            let rot = &rotation[b];
            rot[(pos[&(b, a)] + 1) % rot.len()]
        };
        let mut dart_face = HashMap::new();
        let mut faces = Vec::new();
        for &a in &vertices {
            for &b in &rotation[a] {
                if dart_face.contains_key(&(a, b)) {
                    continue;
                }
                let id = faces.len();
                let mut boundary = Vec::new();
                let (mut x, mut y) = (a, b);
                loop {
                    dart_face.insert((x, y), id);
                    boundary.push(x);
                    let z = succ(y, x);
                    (x, y) = (y, z);
                    if (x, y) == (a, b) {
                        break;
                    }
                }
                faces.push(Face { boundary });
            }
        }
        if vertices.len() == 1 {
            faces.push(Face { boundary: Vec::new() });
        }
        let edges: usize = vertices.iter().map(|&v| rotation[v].len()).sum::<usize>() / 2;
        let chi = vertices.len() as i64 - edges as i64 + faces.len() as i64;
        if chi != 2 {
            return Err(PlanarError::BadRotation(format!("Euler characteristic {chi}, expected 2")));
        }
        Ok(PlaneEmbedding { graph, vertices, rotation, faces, outer: None, dart_face })
    }

    /// Rotation system induced by a consistent set of oriented face cycles.
    pub fn from_faces(
        graph: Graph,
        vertices: Vec<usize>,
        faces: &[Vec<usize>],
    ) -> Result<Self, PlanarError> {
        let rotation = rotation_from_faces(graph.n(), faces)?;
        Self::from_rotation(graph, vertices, rotation)
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn vertices(&self) -> &[usize] {
        &self.vertices
    }

    pub fn contains_vertex(&self, v: usize) -> bool {
        self.vertices.binary_search(&v).is_ok()
    }

    pub fn rotation(&self, v: usize) -> &[usize] {
        &self.rotation[v]
    }

    pub fn faces(&self) -> &[Face] {
        &self.faces
    }

    pub fn face(&self, i: usize) -> &Face {
        &self.faces[i]
    }

    pub fn outer(&self) -> Option<usize> {
        self.outer
    }

    pub fn outer_face(&self) -> Option<&Face> {
        self.outer.map(|i| &self.faces[i])
    }

    pub fn set_outer(&mut self, face: usize) {
        assert!(face < self.faces.len(), "face index out of range");
        self.outer = Some(face);
    }

    pub fn with_outer(mut self, face: usize) -> Self {
        self.set_outer(face);
        self
    }

    pub fn edge_count(&self) -> usize {
        self.vertices.iter().map(|&v| self.rotation[v].len()).sum::<usize>() / 2
    }

    /// Index of the face traversing dart `a -> b`.
    pub fn face_of_dart(&self, a: usize, b: usize) -> Option<usize> {
        self.dart_face.get(&(a, b)).copied()
    }

    /// Successor of `w` in the rotation at `v`.
    pub fn succ(&self, v: usize, w: usize) -> usize {
        let rot = &self.rotation[v];
        let i = rot.iter().position(|&x| x == w).expect("w is a rotation neighbor of v");
        rot[(i + 1) % rot.len()]
    }

    /// Face at each angle of `v`, in rotation order: the angle between
    /// `rot[i]` and `rot[i+1]` belongs to the face of dart `rot[i] -> v`.
    pub fn faces_around(&self, v: usize) -> Vec<usize> {
        self.rotation[v].iter().map(|&w| self.dart_face[&(w, v)]).collect()
    }

    pub fn on_outer_face(&self, v: usize) -> bool {
        self.outer_face().is_some_and(|f| f.contains(v))
    }

    pub fn euler_characteristic(&self) -> i64 {
        self.vertices.len() as i64 - self.edge_count() as i64 + self.faces.len() as i64
    }

    /// One face per line in cyclic order; the outer face line is prefixed `*`.
    pub fn dump(&self) -> String {
        let mut out = String::new();
        for (i, f) in self.faces.iter().enumerate() {
            if Some(i) == self.outer {
                out.push('*');
            }
            let words: Vec<String> = f.boundary.iter().map(usize::to_string).collect();
            let _ = writeln!(out, "{}", words.join(" "));
        }
        out
    }
}

fn rotation_from_faces(n: usize, faces: &[Vec<usize>]) -> Result<Vec<Vec<usize>>, PlanarError> {
    let mut succ: Vec<HashMap<usize, usize>> = vec![HashMap::new(); n];
    for f in faces {
        let k = f.len();
        for t in 0..k {
            let (prev, cur, next) = (f[(t + k - 1) % k], f[t], f[(t + 1) % k]);
            if succ[cur].insert(prev, next).is_some() {
                return Err(PlanarError::BadRotation(format!("angle ({prev}, {cur}) used twice")));
            }
        }
    }
    let mut rotation = vec![Vec::new(); n];
    for v in 0..n {
        let Some(&start) = succ[v].keys().min() else { continue };
        let mut cur = start;
        loop {
            rotation[v].push(cur);
            cur = *succ[v]
                .get(&cur)
                .ok_or_else(|| PlanarError::BadRotation(format!("open rotation at {v}")))?;
            if cur == start {
                break;
            }
            if rotation[v].len() > succ[v].len() {
                return Err(PlanarError::BadRotation(format!("rotation at {v} loops")));
            }
        }
        if rotation[v].len() != succ[v].len() {
            return Err(PlanarError::BadRotation(format!("rotation at {v} splits into cycles")));
        }
    }
    Ok(rotation)
}

/// Cyclic per-vertex rotations for every block, or `None` if some block is nonplanar.
fn block_rotations(g: &Graph) -> Option<Vec<Vec<usize>>> {
    let n = g.n();
    let mut rotation = vec![Vec::new(); n];
    for block in dmp::blocks(g) {
        if block.len() == 1 {
            let (a, b) = block[0];
            rotation[a].push(b);
            rotation[b].push(a);
            continue;
        }
        let faces = dmp::embed_block(n, &block)?;
        let local = rotation_from_faces(n, &faces).expect("path addition yields consistent faces");
        for (v, rot) in local.into_iter().enumerate() {
            rotation[v].extend(rot);
        }
    }
    Some(rotation)
}

/// True iff every component of `g` is planar.
pub fn is_planar(g: &Graph) -> bool {
    let n = g.n();
    if n >= 3 && g.m() > 3 * n - 6 {
        return false;
    }
    dmp::blocks(g).iter().filter(|b| b.len() > 1).all(|b| dmp::embed_block(n, b).is_some())
}

/// A plane embedding of connected `g`, or `None` when `g` is nonplanar.
/// No outer face is designated yet.
pub fn planar_embed(g: &Graph) -> Result<Option<PlaneEmbedding>, PlanarError> {
    if g.n() == 0 {
        return Err(PlanarError::Empty);
    }
    if !g.is_connected() {
        return Err(PlanarError::Disconnected);
    }
    let n = g.n();
    if n >= 3 && g.m() > 3 * n - 6 {
        return Ok(None);
    }
    let Some(rotation) = block_rotations(g) else { return Ok(None) };
    let embedding = PlaneEmbedding::from_rotation(g.clone(), (0..n).collect(), rotation)?;
    Ok(Some(embedding))
}

/// All `v` with `g - v` planar.
pub fn find_apex_vertices(g: &Graph) -> Vec<usize> {
    (0..g.n()).filter(|&v| is_planar(&g.without_vertex(v).0)).collect()
}

/// Restriction of `e` to the subgraph induced on `h`, rotations inherited.
/// The outer face is the face of the restriction in which the deleted
/// neighbors of `h` sit (the one holding most of them; lowest index on ties).
/// With nothing deleted, the face carrying `e`'s outer dart is kept.
pub fn faces_of_subgraph(e: &PlaneEmbedding, h: &[usize]) -> Result<PlaneEmbedding, PlanarError> {
    let n = e.graph.n();
    let mut vertices: Vec<usize> = h.to_vec();
    vertices.sort_unstable();
    vertices.dedup();
    if vertices.is_empty() {
        return Err(PlanarError::Empty);
    }
    for &v in &vertices {
        if !e.contains_vertex(v) {
            return Err(PlanarError::NotEmbedded(v));
        }
    }
    let keep = mask(n, &vertices);
    let sub = e.graph.restrict(&keep);
    let (induced, _) = e.graph.induced_subgraph(&vertices);
    if !induced.is_connected() {
        return Err(PlanarError::Graph(GraphError::InvalidInput(
            "vertex set induces a disconnected graph".into(),
        )));
    }
    let rotation: Vec<Vec<usize>> = (0..n)
        .map(|v| {
            if keep[v] {
                e.rotation[v].iter().copied().filter(|&w| keep[w]).collect()
            } else {
                Vec::new()
            }
        })
        .collect();
    let mut restricted = PlaneEmbedding::from_rotation(sub, vertices.clone(), rotation)?;

    let mut votes = vec![0usize; restricted.faces.len()];
    for &x in &vertices {
        let full = &e.rotation[x];
        if restricted.rotation[x].is_empty() {
            if full.iter().any(|&w| !keep[w]) {
                votes[0] += 1;
            }
            continue;
        }
        for (i, &r) in full.iter().enumerate() {
            if keep[r] {
                continue;
            }
            // nearest kept neighbor before r in the full rotation
            let k = full.len();
            let p = (1..k).map(|d| full[(i + k - d) % k]).find(|&w| keep[w]).expect("x has kept neighbors");
            votes[restricted.dart_face[&(p, x)]] += 1;
        }
    }
    let outer = if votes.iter().any(|&c| c > 0) {
        let best = *votes.iter().max().expect("nonempty");
        votes.iter().position(|&c| c == best).expect("max exists")
    } else {
        e.outer_face()
            .and_then(|f| {
                let k = f.boundary.len();
                (0..k)
                    .map(|t| (f.boundary[t], f.boundary[(t + 1) % k]))
                    .find(|&(a, b)| keep[a] && keep[b])
                    .and_then(|(a, b)| restricted.face_of_dart(a, b))
            })
            .unwrap_or(0)
    };
    restricted.outer = Some(outer);
    Ok(restricted)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::families::*;

    fn face_lengths(e: &PlaneEmbedding) -> Vec<usize> {
        let mut v: Vec<usize> = e.faces().iter().map(Face::len).collect();
        v.sort_unstable();
        v
    }

    #[test]
    fn embed_examples() {
        let k4 = planar_embed(&complete(4)).unwrap().unwrap();
        assert_eq!(face_lengths(&k4), vec![3, 3, 3, 3]);
        assert!(planar_embed(&complete(5)).unwrap().is_none());
        let ico = planar_embed(&icosahedron()).unwrap().unwrap();
        assert_eq!(face_lengths(&ico), vec![3; 20]);
        assert_eq!(planar_embed(&Graph::empty(2)).unwrap_err(), PlanarError::Disconnected);
        let single = planar_embed(&Graph::empty(1)).unwrap().unwrap();
        assert_eq!(single.euler_characteristic(), 2);
    }

    #[test]
    fn cut_vertices_and_trees_embed() {
        let bowtie = Graph::from_edges(5, &[(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 2)]).unwrap();
        let e = planar_embed(&bowtie).unwrap().unwrap();
        assert_eq!(e.faces().len(), 3);
        let p = planar_embed(&path_graph(4)).unwrap().unwrap();
        assert_eq!(face_lengths(&p), vec![6]);
    }

    #[test]
    fn apex_examples() {
        assert_eq!(find_apex_vertices(&complete(5)), vec![0, 1, 2, 3, 4]);
        assert!(find_apex_vertices(&complete(6)).is_empty());
        let g = icosahedron().with_universal_vertex();
        assert!(find_apex_vertices(&g).contains(&12));
        assert!(!is_planar(&complete_bipartite(3, 3)));
        assert!(!is_planar(&petersen().without_vertex(0).0));
    }

    #[test]
    fn restriction_examples() {
        let mut cube_e = planar_embed(&cube()).unwrap().unwrap();
        cube_e.set_outer(0);
        let all: Vec<usize> = (0..8).collect();
        let same = faces_of_subgraph(&cube_e, &all).unwrap();
        assert_eq!(same.faces().len(), 6);
        assert_eq!(same.outer_face().unwrap().boundary, cube_e.outer_face().unwrap().boundary);

        let quad = cube_e.faces()[2].boundary.clone();
        let sq = faces_of_subgraph(&cube_e, &quad).unwrap();
        assert_eq!(face_lengths(&sq), vec![4, 4]);
        // the deleted vertices lie across the quad from its own face
        let outer = sq.outer_face().unwrap();
        let inner_dart = (quad[0], quad[1]);
        assert_ne!(sq.face_of_dart(inner_dart.0, inner_dart.1), sq.outer());
        assert_eq!(outer.len(), 4);

        let ico = planar_embed(&icosahedron()).unwrap().unwrap();
        let mut rest: Vec<usize> = (0..12).filter(|&v| v != 0 && !icosahedron().has_edge(0, v)).collect();
        rest.sort_unstable();
        let sub = faces_of_subgraph(&ico, &rest).unwrap();
        assert_eq!(sub.outer_face().unwrap().len(), 5);
        assert!(faces_of_subgraph(&ico, &[0, 11]).is_err());
    }

    #[test]
    fn dump_marks_outer() {
        let e = planar_embed(&cycle(3)).unwrap().unwrap().with_outer(1);
        let text = e.dump();
        assert_eq!(text.lines().count(), 2);
        assert!(text.lines().nth(1).unwrap().starts_with('*'));
    }
}
