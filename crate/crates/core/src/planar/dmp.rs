//! Path-addition planarity test for 2-connected blocks: start from a cycle
//! and repeatedly embed a path of some fragment into an admissible face,
//! preferring fragments with a single admissible face.

use std::collections::{HashSet, VecDeque};

use crate::graph::Graph;

/// Biconnected components of `g` as edge lists (bridges are single-edge blocks).
pub(crate) fn blocks(g: &Graph) -> Vec<Vec<(usize, usize)>> {
    let n = g.n();
    let mut disc = vec![usize::MAX; n];
    let mut low = vec![0; n];
    let mut timer = 0;
    let mut edge_stack: Vec<(usize, usize)> = Vec::new();
    let mut out = Vec::new();
    for root in 0..n {
        if disc[root] != usize::MAX {
            continue;
        }
        disc[root] = timer;
        low[root] = timer;
        timer += 1;
        let mut stack = vec![(root, usize::MAX, 0usize)];
        while let Some(&mut (v, parent, ref mut idx)) = stack.last_mut() {
            if *idx < g.degree(v) {
                let w = g.neighbors(v)[*idx];
                *idx += 1;
                if w == parent {
                    continue;
                }
                if disc[w] == usize::MAX {
                    edge_stack.push((v, w));
                    disc[w] = timer;
                    low[w] = timer;
                    timer += 1;
                    stack.push((w, v, 0));
                } else if disc[w] < disc[v] {
                    edge_stack.push((v, w));
                    low[v] = low[v].min(disc[w]);
                }
            } else {
                stack.pop();
                if parent != usize::MAX {
                    low[parent] = low[parent].min(low[v]);
                    if low[v] >= disc[parent] {
                        let mut block = Vec::new();
                        while let Some(e) = edge_stack.pop() {
                            block.push(e);
                            if e == (parent, v) {
                                break;
                            }
                        }
                        out.push(block);
                    }
                }
            }
        }
    }
    out
}

fn find_cycle(adj: &[Vec<usize>], root: usize) -> Vec<usize> {
    let n = adj.len();
    let mut on_stack = vec![false; n];
    let mut visited = vec![false; n];
    let mut stack = vec![(root, usize::MAX, 0usize)];
    visited[root] = true;
    on_stack[root] = true;
    while let Some(&mut (v, parent, ref mut idx)) = stack.last_mut() {
        if *idx < adj[v].len() {
            let w = adj[v][*idx];
            *idx += 1;
            if w == parent {
                continue;
            }
            if on_stack[w] {
                let start = stack.iter().position(|&(x, _, _)| x == w).expect("w is on the stack");
                return stack[start..].iter().map(|&(x, _, _)| x).collect();
            }
            if !visited[w] {
                visited[w] = true;
                on_stack[w] = true;
                stack.push((w, v, 0));
            }
        } else {
            on_stack[v] = false;
            stack.pop();
        }
    }
    unreachable!("a 2-connected block with at least 3 vertices contains a cycle")
}

struct Fragment {
    attachments: Vec<usize>,
    /// Interior vertices; empty for a chord.
    interior: Vec<usize>,
}

/// Faces (oriented vertex cycles) of a planar embedding of the 2-connected
/// block given by `edges`, or `None` if the block is nonplanar.
pub(crate) fn embed_block(n: usize, edges: &[(usize, usize)]) -> Option<Vec<Vec<usize>>> {
    let mut adj = vec![Vec::new(); n];
    for &(a, b) in edges {
        adj[a].push(b);
        adj[b].push(a);
    }
    for list in &mut adj {
        list.sort_unstable();
    }
    let key = |a: usize, b: usize| (a.min(b), a.max(b));
    let root = edges.iter().map(|&(a, b)| a.min(b)).min()?;
    let cycle = find_cycle(&adj, root);
    let mut embedded = vec![false; n];
    let mut placed: HashSet<(usize, usize)> = HashSet::new();
    for (i, &v) in cycle.iter().enumerate() {
        embedded[v] = true;
        placed.insert(key(v, cycle[(i + 1) % cycle.len()]));
    }
    let mut faces = vec![cycle.clone(), cycle.iter().rev().copied().collect::<Vec<_>>()];

    while placed.len() < edges.len() {
        let mut fragments = Vec::new();
        for &(a, b) in edges {
            if embedded[a] && embedded[b] && !placed.contains(&key(a, b)) {
                fragments.push(Fragment { attachments: vec![a.min(b), a.max(b)], interior: Vec::new() });
            }
        }
        let mut seen = embedded.clone();
        for s in 0..n {
            if seen[s] || adj[s].is_empty() {
                continue;
            }
            seen[s] = true;
            let mut interior = vec![s];
            let mut attachments = Vec::new();
            let mut queue = VecDeque::from([s]);
            while let Some(v) = queue.pop_front() {
                for &w in &adj[v] {
                    if embedded[w] {
                        attachments.push(w);
                    } else if !seen[w] {
                        seen[w] = true;
                        interior.push(w);
                        queue.push_back(w);
                    }
                }
            }
            attachments.sort_unstable();
            attachments.dedup();
            fragments.push(Fragment { attachments, interior });
        }

        let face_sets: Vec<HashSet<usize>> =
            faces.iter().map(|f| f.iter().copied().collect()).collect();
        let mut choice: Option<(usize, usize)> = None;
        for (fi, frag) in fragments.iter().enumerate() {
            let admissible: Vec<usize> = (0..faces.len())
                .filter(|&k| frag.attachments.iter().all(|a| face_sets[k].contains(a)))
                .collect();
            match admissible.len() {
                0 => return None,
                1 => {
                    choice = Some((fi, admissible[0]));
                    break;
                }
                _ => {
                    if choice.is_none() {
                        choice = Some((fi, admissible[0]));
                    }
                }
            }
        }
        let (fi, face_idx) = choice.expect("an unplaced edge leaves some fragment");
        let frag = &fragments[fi];
        let path = fragment_path(&adj, &embedded, frag);
        for &v in &path {
            embedded[v] = true;
        }
        for w in path.windows(2) {
            placed.insert(key(w[0], w[1]));
        }
        let (f1, f2) = split_face(&faces[face_idx], &path);
        faces[face_idx] = f1;
        faces.push(f2);
    }
    Some(faces)
}

fn fragment_path(adj: &[Vec<usize>], embedded: &[bool], frag: &Fragment) -> Vec<usize> {
    let (a, b) = (frag.attachments[0], frag.attachments[1]);
    if frag.interior.is_empty() {
        return vec![a, b];
    }
    let n = adj.len();
    let mut in_frag = vec![false; n];
    for &v in &frag.interior {
        in_frag[v] = true;
    }
    let mut pred = vec![usize::MAX; n];
    let mut queue = VecDeque::new();
    for &w in &adj[a] {
        if in_frag[w] && pred[w] == usize::MAX {
            pred[w] = a;
            queue.push_back(w);
        }
    }
    while let Some(v) = queue.pop_front() {
        if adj[v].contains(&b) {
            let mut path = vec![b, v];
            let mut cur = v;
            while pred[cur] != a {
                cur = pred[cur];
                path.push(cur);
            }
            path.push(a);
            path.reverse();
            return path;
        }
        for &w in &adj[v] {
            if in_frag[w] && !embedded[w] && pred[w] == usize::MAX {
                pred[w] = v;
                queue.push_back(w);
            }
        }
    }
    unreachable!("fragment interiors are connected and touch every attachment")
}

/// Splits oriented face `f` along `path` (ends on `f`, interior new).
fn split_face(f: &[usize], path: &[usize]) -> (Vec<usize>, Vec<usize>) {
    let len = f.len();
    let (a, b) = (path[0], *path.last().expect("nonempty path"));
    let i = f.iter().position(|&v| v == a).expect("path start on face");
    let j = f.iter().position(|&v| v == b).expect("path end on face");
    let walk = |from: usize, to: usize| {
        let mut out = vec![f[from]];
        let mut k = from;
        while k != to {
            k = (k + 1) % len;
            out.push(f[k]);
        }
        out
    };
    let inner = &path[1..path.len() - 1];
    let mut first = walk(i, j);
    first.extend(inner.iter().rev());
    let mut second = walk(j, i);
    second.extend(inner.iter());
    (first, second)
}
