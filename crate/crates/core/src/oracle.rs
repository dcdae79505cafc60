//! Exact brute-force ground truth at desk scale: dichromatic number by
//! backtracking, exhaustive closed-tournament search, and a second
//! pattern-detection route for cross-validation.

use crate::dicolor::Dicoloring;
use crate::graph::{mask_of, DirectedPath, OrientedGraph};
use crate::patterns::PatternId;
use crate::structure::{ClosedTournament, StructureError};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum OracleError {
    #[error("search budget exhausted after {explored} nodes (limit {limit})")]
    BudgetExceeded { explored: u64, limit: u64 },
}

/// Exact answer plus the certificate that proves it.
#[derive(Debug, Clone)]
pub struct OracleReport {
    pub exact: usize,
    pub witness: Dicoloring,
    pub nodes_explored: u64,
}

/// Smallest number of colors admitting a dicoloring, by iterative deepening
/// over the color count with backtracking. Vertex 0 always takes color 0 and
/// new colors appear in increasing order, which prunes palette permutations.
///
/// Intended for small graphs (n ≤ 14 or so); `limit` caps the number of
/// assignment attempts across the whole search.
pub fn exact_dichromatic_number(
    g: &OrientedGraph,
    limit: Option<u64>,
) -> Result<OracleReport, OracleError> {
    let n = g.n();
    if n == 0 {
        return Ok(OracleReport {
            exact: 0,
            witness: Dicoloring::from_color_map(g, vec![]).expect("empty coloring"),
            nodes_explored: 0,
        });
    }
    let mut explored = 0u64;
    for k in 1..=n {
        let mut colors = vec![usize::MAX; n];
        let mut classes: Vec<Vec<usize>> = vec![Vec::new(); k];
        if assign(g, k, 0, 0, &mut colors, &mut classes, &mut explored, limit)? {
            let witness =
                Dicoloring::from_color_map(g, colors).expect("backtracking output is valid");
            return Ok(OracleReport {
                exact: witness.colors_used(),
                witness,
                nodes_explored: explored,
            });
        }
    }
    unreachable!("n singleton classes always form a dicoloring")
}

#[allow(clippy::too_many_arguments)]
fn assign(
    g: &OrientedGraph,
    k: usize,
    v: usize,
    used: usize,
    colors: &mut Vec<usize>,
    classes: &mut Vec<Vec<usize>>,
    explored: &mut u64,
    limit: Option<u64>,
) -> Result<bool, OracleError> {
    if v == g.n() {
        return Ok(true);
    }
    let tryable = (used + 1).min(k);
    for col in 0..tryable {
        *explored += 1;
        if let Some(limit) = limit {
            if *explored > limit {
                return Err(OracleError::BudgetExceeded {
                    explored: *explored,
                    limit,
                });
            }
        }
        if closes_cycle(g, v, &classes[col]) {
            continue;
        }
        colors[v] = col;
        classes[col].push(v);
        let next_used = used.max(col + 1);
        if assign(g, k, v + 1, next_used, colors, classes, explored, limit)? {
            return Ok(true);
        }
        classes[col].pop();
        colors[v] = usize::MAX;
    }
    Ok(false)
}

/// Would adding `v` to `class` create a directed cycle inside it? True iff
/// some out-neighbor of `v` in the class reaches an in-neighbor of `v`
/// without leaving the class.
fn closes_cycle(g: &OrientedGraph, v: usize, class: &[usize]) -> bool {
    let in_class = mask_of(g.n(), class);
    let targets: Vec<usize> = g
        .in_neighbors(v)
        .iter()
        .copied()
        .filter(|&u| in_class[u])
        .collect();
    if targets.is_empty() {
        return false;
    }
    let target_mask = mask_of(g.n(), &targets);
    let mut seen = vec![false; g.n()];
    let mut stack: Vec<usize> = g
        .out_neighbors(v)
        .iter()
        .copied()
        .filter(|&u| in_class[u])
        .collect();
    for &s in &stack {
        seen[s] = true;
    }
    while let Some(u) = stack.pop() {
        if target_mask[u] {
            return true;
        }
        for &w in g.out_neighbors(u) {
            if in_class[w] && !seen[w] {
                seen[w] = true;
                stack.push(w);
            }
        }
    }
    false
}

/// Exhaustive search over every maximum tournament and every simple
/// connecting path, with the same tie-break as the structure module: global
/// minimum path length, then first tournament in lexicographic order, then
/// the lexicographically smallest path.
///
/// Enumeration is exponential; intended for n ≤ 9.
pub fn brute_force_closed_tournament(
    g: &OrientedGraph,
) -> Result<ClosedTournament, StructureError> {
    let n = g.n();
    assert!(n <= 20, "subset enumeration is infeasible beyond n = 20");
    if !g.is_strongly_connected() {
        return Err(StructureError::NotStronglyConnected);
    }
    // All maximum cliques by subset scan.
    let mut omega = 0usize;
    let mut cliques: Vec<Vec<usize>> = Vec::new();
    for bits in 1u32..(1 << n) {
        let verts: Vec<usize> = (0..n).filter(|&v| bits & (1 << v) != 0).collect();
        let is_clique = verts
            .iter()
            .enumerate()
            .all(|(i, &u)| verts[i + 1..].iter().all(|&v| g.adjacent(u, v)));
        if !is_clique {
            continue;
        }
        match verts.len().cmp(&omega) {
            std::cmp::Ordering::Greater => {
                omega = verts.len();
                cliques = vec![verts];
            }
            std::cmp::Ordering::Equal => cliques.push(verts),
            std::cmp::Ordering::Less => {}
        }
    }
    cliques.sort();

    let mut best: Option<(usize, usize, Option<Vec<usize>>)> = None;
    for (idx, k) in cliques.iter().enumerate() {
        let (sub, map) = g.induced_with_map(k);
        let scc = sub.scc();
        if scc.count() == 1 {
            if best.as_ref().map_or(true, |(bl, _, _)| *bl > 0) {
                best = Some((0, idx, None));
            }
            continue;
        }
        let source: Vec<usize> = scc.components()[0].iter().map(|&v| map[v]).collect();
        let sink: Vec<usize> = scc.components()[scc.count() - 1]
            .iter()
            .map(|&v| map[v])
            .collect();
        let in_k = mask_of(n, k);
        let mut best_path: Option<Vec<usize>> = None;
        for &start in &sink {
            let mut used = vec![false; n];
            used[start] = true;
            let mut path = vec![start];
            enumerate_paths(g, &source, &in_k, &mut path, &mut used, &mut best_path);
        }
        if let Some(p) = best_path {
            if best.as_ref().map_or(true, |(bl, _, _)| p.len() < *bl) {
                best = Some((p.len(), idx, Some(p)));
            }
        }
    }
    let Some((_, idx, path)) = best else {
        return Err(StructureError::NoClosedTournament);
    };
    let path = path.map(|vs| DirectedPath::new(g, vs).expect("enumerated path is valid"));
    ClosedTournament::new(g, cliques[idx].clone(), path, omega)
}

fn enumerate_paths(
    g: &OrientedGraph,
    targets: &[usize],
    in_k: &[bool],
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
        // Interior vertices must avoid the tournament; targets are exempt.
        if used[w] || (in_k[w] && !targets.contains(&w)) {
            continue;
        }
        used[w] = true;
        path.push(w);
        enumerate_paths(g, targets, in_k, path, used, best);
        path.pop();
        used[w] = false;
    }
}

/// Decides `h`-freeness by a different route than the detector: every
/// 4-subset in increasing order, then all 24 labelings of it, each checked
/// directly against the template. Returns true when `g` is `h`-free.
pub fn independent_pattern_scan(g: &OrientedGraph, h: PatternId) -> bool {
    const PERMS: [[usize; 4]; 24] = [
        [0, 1, 2, 3],
        [0, 1, 3, 2],
        [0, 2, 1, 3],
        [0, 2, 3, 1],
        [0, 3, 1, 2],
        [0, 3, 2, 1],
        [1, 0, 2, 3],
        [1, 0, 3, 2],
        [1, 2, 0, 3],
        [1, 2, 3, 0],
        [1, 3, 0, 2],
        [1, 3, 2, 0],
        [2, 0, 1, 3],
        [2, 0, 3, 1],
        [2, 1, 0, 3],
        [2, 1, 3, 0],
        [2, 3, 0, 1],
        [2, 3, 1, 0],
        [3, 0, 1, 2],
        [3, 0, 2, 1],
        [3, 1, 0, 2],
        [3, 1, 2, 0],
        [3, 2, 0, 1],
        [3, 2, 1, 0],
    ];
    let n = g.n();
    let arcs = h.template_arcs();
    for a in 0..n {
        for b in (a + 1)..n {
            for c in (b + 1)..n {
                for d in (c + 1)..n {
                    let subset = [a, b, c, d];
                    'perm: for perm in PERMS {
                        let quad = [
                            subset[perm[0]],
                            subset[perm[1]],
                            subset[perm[2]],
                            subset[perm[3]],
                        ];
                        for (i, j) in arcs {
                            if !g.has_arc(quad[i], quad[j]) {
                                continue 'perm;
                            }
                        }
                        if g.adjacent(quad[0], quad[2])
                            || g.adjacent(quad[0], quad[3])
                            || g.adjacent(quad[1], quad[3])
                        {
                            continue 'perm;
                        }
                        return false;
                    }
                }
            }
        }
    }
    true
}
