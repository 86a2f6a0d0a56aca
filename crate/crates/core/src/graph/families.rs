//! Named graphs used as fixtures throughout the crate and its tests.

use super::Graph;

fn build(n: usize, edges: &[(usize, usize)]) -> Graph {
    Graph::from_edges(n, edges).expect("fixture edges are valid")
}

pub fn complete(n: usize) -> Graph {
    let edges: Vec<_> = (0..n).flat_map(|a| (a + 1..n).map(move |b| (a, b))).collect();
    build(n, &edges)
}

pub fn complete_bipartite(p: usize, q: usize) -> Graph {
    let edges: Vec<_> = (0..p).flat_map(|a| (0..q).map(move |b| (a, p + b))).collect();
    build(p + q, &edges)
}

pub fn cycle(n: usize) -> Graph {
    let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
    build(n, &edges)
}

pub fn path_graph(n: usize) -> Graph {
    let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
    build(n, &edges)
}

/// Hub `0`, rim `1..=k`.
pub fn wheel(k: usize) -> Graph {
    let mut edges: Vec<_> = (1..=k).map(|i| (0, i)).collect();
    edges.extend((1..=k).map(|i| (i, i % k + 1)));
    build(k + 1, &edges)
}

/// `rows x cols` grid, vertex `(i, j)` numbered `i * cols + j`.
pub fn grid(rows: usize, cols: usize) -> Graph {
    let mut edges = Vec::new();
    for i in 0..rows {
        for j in 0..cols {
            let v = i * cols + j;
            if j + 1 < cols {
                edges.push((v, v + 1));
            }
            if i + 1 < rows {
                edges.push((v, v + cols));
            }
        }
    }
    build(rows * cols, &edges)
}

pub fn petersen() -> Graph {
    let mut edges = Vec::new();
    for i in 0..5 {
        edges.push((i, (i + 1) % 5));
        edges.push((i, i + 5));
        edges.push((5 + i, 5 + (i + 2) % 5));
    }
    build(10, &edges)
}

/// `K6` minus the perfect matching `{01, 23, 45}`.
pub fn octahedron() -> Graph {
    let edges: Vec<_> = (0..6)
        .flat_map(|a| (a + 1..6).map(move |b| (a, b)))
        .filter(|&(a, b)| !(a % 2 == 0 && b == a + 1))
        .collect();
    build(6, &edges)
}

/// 3-cube on `0..8`, adjacent when labels differ in one bit.
pub fn cube() -> Graph {
    let edges: Vec<_> = (0..8usize)
        .flat_map(|a| (0..3).map(move |bit| (a, a ^ (1 << bit))))
        .filter(|&(a, b)| a < b)
        .collect();
    build(8, &edges)
}

/// Top `0`, upper ring `1..=5`, lower ring `6..=10`, bottom `11`.
pub fn icosahedron() -> Graph {
    let mut edges = Vec::new();
    for i in 0..5 {
        let (u, u_next) = (1 + i, 1 + (i + 1) % 5);
        let (l, l_next) = (6 + i, 6 + (i + 1) % 5);
        edges.extend([(0, u), (u, u_next), (u, l), (u, l_next), (l, l_next), (l, 11)]);
    }
    build(12, &edges)
}
