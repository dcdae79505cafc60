//! Brute-force helpers and generators shared across module tests. Everything
//! here is an independent route: no function calls into the implementation it
//! is used to check.

use crate::graph::OrientedGraph;
use proptest::prelude::*;

/// Digon-free random graphs: one ternary digit per unordered pair.
pub fn oriented_graph(max_n: usize) -> impl Strategy<Value = OrientedGraph> {
    (1..=max_n).prop_flat_map(|n| {
        let pairs = n * (n.saturating_sub(1)) / 2;
        proptest::collection::vec(0u8..3, pairs).prop_map(move |codes| {
            let mut arcs = Vec::new();
            let mut k = 0;
            for u in 0..n {
                for v in (u + 1)..n {
                    match codes[k] {
                        1 => arcs.push((u, v)),
                        2 => arcs.push((v, u)),
                        _ => {}
                    }
                    k += 1;
                }
            }
            OrientedGraph::new(n, arcs).unwrap()
        })
    })
}

/// Full reachability matrix by DFS from every vertex.
pub fn brute_reachability(g: &OrientedGraph) -> Vec<Vec<bool>> {
    let n = g.n();
    let mut reach = vec![vec![false; n]; n];
    for v in 0..n {
        reach[v][v] = true;
        let mut stack = vec![v];
        while let Some(u) = stack.pop() {
            for &w in g.out_neighbors(u) {
                if !reach[v][w] {
                    reach[v][w] = true;
                    stack.push(w);
                }
            }
        }
    }
    reach
}

/// Exhaustive minimum over all simple directed paths from `sources` to
/// `targets`, lexicographic tie-break. Exponential; test graphs only.
pub fn brute_shortest(
    g: &OrientedGraph,
    sources: &[usize],
    targets: &[usize],
) -> Option<Vec<usize>> {
    fn extend(
        g: &OrientedGraph,
        targets: &[usize],
        path: &mut Vec<usize>,
        used: &mut Vec<bool>,
        best: &mut Option<Vec<usize>>,
    ) {
        let cur = *path.last().unwrap();
        if targets.contains(&cur) {
            let better = match best {
                None => true,
                Some(b) => (path.len(), &path[..]) < (b.len(), &b[..]),
            };
            if better {
                *best = Some(path.clone());
            }
            return;
        }
        for &w in g.out_neighbors(cur) {
            if !used[w] {
                used[w] = true;
                path.push(w);
                extend(g, targets, path, used, best);
                path.pop();
                used[w] = false;
            }
        }
    }
    let mut best = None;
    for &s in sources {
        let mut used = vec![false; g.n()];
        used[s] = true;
        let mut path = vec![s];
        extend(g, targets, &mut path, &mut used, &mut best);
    }
    best
}

/// Exhaustive subset scan for the clique number and all maximum cliques of
/// the underlying graph; usable for n <= 16.
pub fn brute_force_cliques(g: &OrientedGraph) -> (usize, Vec<Vec<usize>>) {
    let n = g.n();
    assert!(n <= 16);
    let mut omega = 0;
    let mut cliques: Vec<Vec<usize>> = Vec::new();
    for mask in 1u32..(1 << n) {
        let verts: Vec<usize> = (0..n).filter(|&v| mask & (1 << v) != 0).collect();
        let is_clique = verts
            .iter()
            .enumerate()
            .all(|(i, &u)| verts[i + 1..].iter().all(|&v| g.adjacent(u, v)));
        if is_clique {
            match verts.len().cmp(&omega) {
                std::cmp::Ordering::Greater => {
                    omega = verts.len();
                    cliques = vec![verts];
                }
                std::cmp::Ordering::Equal => cliques.push(verts),
                std::cmp::Ordering::Less => {}
            }
        }
    }
    cliques.sort();
    (omega, cliques)
}

pub fn c3() -> OrientedGraph {
    OrientedGraph::new(3, [(0, 1), (1, 2), (2, 0)]).unwrap()
}

pub fn c4() -> OrientedGraph {
    OrientedGraph::new(4, [(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap()
}

pub fn tt3() -> OrientedGraph {
    OrientedGraph::new(3, [(0, 1), (0, 2), (1, 2)]).unwrap()
}

/// TT3 with a return path 2 -> 3 -> 0.
pub fn tt3_looped() -> OrientedGraph {
    OrientedGraph::new(4, [(0, 1), (0, 2), (1, 2), (2, 3), (3, 0)]).unwrap()
}
