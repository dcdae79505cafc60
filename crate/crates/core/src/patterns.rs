//! Detection of the four induced orientations of the four-vertex path,
//! maximum-tournament enumeration, and strong neighborhoods.

use crate::graph::{mask_of, OrientedGraph};

/// Which orientation of the four-vertex path is forbidden.
///
/// Reading the underlying path `a - b - c - d` left to right:
///
/// * `P4Forward`: `a -> b -> c -> d`
/// * `A4`: `a <- b -> c <- d`
/// * `Q4`: `a -> b <- c <- d`
/// * `Q4Prime`: `a <- b <- c -> d` (the arc-reversal of `Q4`)
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum PatternId {
    P4Forward,
    A4,
    Q4,
    Q4Prime,
}

/// Direction of one path edge relative to the walk order.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Step {
    Fwd,
    Bwd,
}

impl PatternId {
    pub const ALL: [PatternId; 4] = [
        PatternId::P4Forward,
        PatternId::A4,
        PatternId::Q4,
        PatternId::Q4Prime,
    ];

    fn steps(self) -> [Step; 3] {
        use Step::*;
        match self {
            PatternId::P4Forward => [Fwd, Fwd, Fwd],
            PatternId::A4 => [Bwd, Fwd, Bwd],
            PatternId::Q4 => [Fwd, Bwd, Bwd],
            PatternId::Q4Prime => [Bwd, Bwd, Fwd],
        }
    }

    /// The three prescribed arcs on witness positions `0..4`.
    pub fn template_arcs(self) -> [(usize, usize); 3] {
        let steps = self.steps();
        let mut arcs = [(0, 0); 3];
        for (i, step) in steps.iter().enumerate() {
            arcs[i] = match step {
                Step::Fwd => (i, i + 1),
                Step::Bwd => (i + 1, i),
            };
        }
        arcs
    }

    /// The pattern realized by the same witness after reversing every arc.
    pub fn reversed(self) -> PatternId {
        match self {
            PatternId::Q4 => PatternId::Q4Prime,
            PatternId::Q4Prime => PatternId::Q4,
            other => other,
        }
    }

    /// Case constant of the binding function for this pattern.
    pub fn case_constant(self) -> u64 {
        match self {
            PatternId::Q4 | PatternId::Q4Prime => 3,
            PatternId::P4Forward => 6,
            PatternId::A4 => 7,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            PatternId::P4Forward => "p4",
            PatternId::A4 => "a4",
            PatternId::Q4 => "q4",
            PatternId::Q4Prime => "q4p",
        }
    }

    pub fn parse(s: &str) -> Option<PatternId> {
        match s {
            "p4" => Some(PatternId::P4Forward),
            "a4" => Some(PatternId::A4),
            "q4" => Some(PatternId::Q4),
            "q4p" | "q4prime" | "q4'" => Some(PatternId::Q4Prime),
            _ => None,
        }
    }
}

impl std::fmt::Display for PatternId {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.name())
    }
}

/// An induced copy of a pattern: the ordered quadruple realizing the path.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PatternWitness {
    pub pattern: PatternId,
    pub vertices: [usize; 4],
}

/// Checks that `quad` realizes `pattern` as an induced subgraph: the three
/// template arcs are present and the three remaining vertex pairs are
/// non-adjacent.
pub fn is_induced_copy(g: &OrientedGraph, pattern: PatternId, quad: [usize; 4]) -> bool {
    let [a, b, c, d] = quad;
    if a == b || a == c || a == d || b == c || b == d || c == d {
        return false;
    }
    if quad.iter().any(|&v| v >= g.n()) {
        return false;
    }
    for (i, j) in pattern.template_arcs() {
        if !g.has_arc(quad[i], quad[j]) {
            return false;
        }
    }
    !g.adjacent(a, c) && !g.adjacent(a, d) && !g.adjacent(b, d)
}

/// Lexicographically first induced copy of `h` under a scan of ordered
/// quadruples, or `None` when `g` is `h`-free.
pub fn find_pattern(g: &OrientedGraph, h: PatternId) -> Option<PatternWitness> {
    let steps = h.steps();
    let along = |v: usize, step: Step| -> &[usize] {
        match step {
            Step::Fwd => g.out_neighbors(v),
            Step::Bwd => g.in_neighbors(v),
        }
    };
    for a in 0..g.n() {
        for &b in along(a, steps[0]) {
            for &c in along(b, steps[1]) {
                if c == a || g.adjacent(a, c) {
                    continue;
                }
                for &d in along(c, steps[2]) {
                    if d == a || d == b || g.adjacent(a, d) || g.adjacent(b, d) {
                        continue;
                    }
                    return Some(PatternWitness {
                        pattern: h,
                        vertices: [a, b, c, d],
                    });
                }
            }
        }
    }
    None
}

/// Tries each candidate quadruple in both reading directions and returns the
/// first that realizes `h`.
pub fn witness_among(
    g: &OrientedGraph,
    h: PatternId,
    candidates: &[[usize; 4]],
) -> Option<PatternWitness> {
    for &quad in candidates {
        if is_induced_copy(g, h, quad) {
            return Some(PatternWitness {
                pattern: h,
                vertices: quad,
            });
        }
        let rev = [quad[3], quad[2], quad[1], quad[0]];
        if is_induced_copy(g, h, rev) {
            return Some(PatternWitness {
                pattern: h,
                vertices: rev,
            });
        }
    }
    None
}

/// Every maximum-size clique of the underlying graph, in lexicographic order.
/// In a digon-free digraph each underlying clique induces a tournament.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MaximumTournaments {
    omega: usize,
    tournaments: Vec<Vec<usize>>,
}

impl MaximumTournaments {
    pub fn omega(&self) -> usize {
        self.omega
    }

    pub fn tournaments(&self) -> &[Vec<usize>] {
        &self.tournaments
    }

    pub fn iter(&self) -> impl Iterator<Item = &Vec<usize>> {
        self.tournaments.iter()
    }
}

/// Clique number and all maximum cliques of the underlying graph, via
/// Bron-Kerbosch with pivoting.
pub fn maximum_tournaments(g: &OrientedGraph) -> MaximumTournaments {
    let n = g.n();
    let nbrs: Vec<Vec<usize>> = (0..n).map(|v| g.neighbors(v)).collect();
    let mut best: Vec<Vec<usize>> = Vec::new();
    let mut omega = 0usize;
    let mut current = Vec::new();
    let candidates: Vec<usize> = (0..n).collect();
    bron_kerbosch(
        &nbrs,
        &mut current,
        candidates,
        Vec::new(),
        &mut omega,
        &mut best,
    );
    for t in best.iter_mut() {
        t.sort_unstable();
    }
    best.sort();
    best.dedup();
    MaximumTournaments {
        omega,
        tournaments: best,
    }
}

fn bron_kerbosch(
    nbrs: &[Vec<usize>],
    current: &mut Vec<usize>,
    candidates: Vec<usize>,
    excluded: Vec<usize>,
    omega: &mut usize,
    best: &mut Vec<Vec<usize>>,
) {
    if candidates.is_empty() && excluded.is_empty() {
        if current.len() > *omega {
            *omega = current.len();
            best.clear();
        }
        if current.len() == *omega && !current.is_empty() {
            best.push(current.clone());
        }
        return;
    }
    // Pivot with the most candidate neighbors; smallest vertex on ties.
    let pivot = candidates
        .iter()
        .chain(excluded.iter())
        .copied()
        .min_by_key(|&u| {
            let deg = candidates
                .iter()
                .filter(|&&v| nbrs[u].binary_search(&v).is_ok())
                .count();
            (usize::MAX - deg, u)
        });
    let expand: Vec<usize> = match pivot {
        Some(p) => candidates
            .iter()
            .copied()
            .filter(|&v| nbrs[p].binary_search(&v).is_err())
            .collect(),
        None => candidates.clone(),
    };
    let mut cand = candidates;
    let mut excl = excluded;
    for v in expand {
        let next_cand: Vec<usize> = cand
            .iter()
            .copied()
            .filter(|&u| nbrs[v].binary_search(&u).is_ok())
            .collect();
        let next_excl: Vec<usize> = excl
            .iter()
            .copied()
            .filter(|&u| nbrs[v].binary_search(&u).is_ok())
            .collect();
        current.push(v);
        bron_kerbosch(nbrs, current, next_cand, next_excl, omega, best);
        current.pop();
        cand.retain(|&u| u != v);
        excl.push(v);
    }
}

/// Vertices outside `a` with both an in-neighbor and an out-neighbor in `a`.
pub fn strong_neighborhood(g: &OrientedGraph, a: &[usize]) -> Vec<usize> {
    let in_a = mask_of(g.n(), a);
    g.neighborhood(a, false)
        .into_iter()
        .filter(|&v| {
            let has_in = g.in_neighbors(v).iter().any(|&u| in_a[u]);
            let has_out = g.out_neighbors(v).iter().any(|&u| in_a[u]);
            has_in && has_out
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::testutil::{brute_force_cliques, c3, c4, tt3_looped};

    fn path4() -> OrientedGraph {
        OrientedGraph::new(4, [(0, 1), (1, 2), (2, 3)]).unwrap()
    }

    #[test]
    fn template_shapes() {
        assert_eq!(
            PatternId::P4Forward.template_arcs(),
            [(0, 1), (1, 2), (2, 3)]
        );
        assert_eq!(PatternId::A4.template_arcs(), [(1, 0), (1, 2), (3, 2)]);
        assert_eq!(PatternId::Q4.template_arcs(), [(0, 1), (2, 1), (3, 2)]);
        assert_eq!(PatternId::Q4Prime.template_arcs(), [(1, 0), (2, 1), (2, 3)]);
    }

    #[test]
    fn q4_prime_is_arc_reversal_of_q4() {
        // Reversing each template arc of Q4 and reading the path from the
        // other end must give the Q4' template.
        let mut reversed: Vec<(usize, usize)> = PatternId::Q4
            .template_arcs()
            .iter()
            .map(|&(i, j)| (3 - j, 3 - i))
            .collect();
        reversed.sort_unstable();
        let mut relabeled: Vec<(usize, usize)> = PatternId::Q4Prime
            .template_arcs()
            .iter()
            .map(|&(i, j)| (3 - i, 3 - j))
            .collect();
        relabeled.sort_unstable();
        assert_eq!(reversed, relabeled);
        assert_eq!(PatternId::Q4.reversed(), PatternId::Q4Prime);
        assert_eq!(PatternId::P4Forward.reversed(), PatternId::P4Forward);
        assert_eq!(PatternId::A4.reversed(), PatternId::A4);
    }

    #[test]
    fn finds_the_pattern_itself() {
        let w = find_pattern(&path4(), PatternId::P4Forward).unwrap();
        assert_eq!(w.vertices, [0, 1, 2, 3]);
        assert!(is_induced_copy(&path4(), PatternId::P4Forward, w.vertices));
    }

    #[test]
    fn c4_contains_no_pattern() {
        for h in PatternId::ALL {
            assert!(find_pattern(&c4(), h).is_none(), "C4 should be {h}-free");
        }
    }

    #[test]
    fn witnesses_validate() {
        for h in PatternId::ALL {
            let arcs: Vec<(usize, usize)> = h.template_arcs().to_vec();
            let g = OrientedGraph::new(4, arcs).unwrap();
            let w = find_pattern(&g, h).unwrap();
            assert!(is_induced_copy(&g, h, w.vertices));
        }
    }

    #[test]
    fn maximum_tournament_examples() {
        let mt = maximum_tournaments(&c3());
        assert_eq!(mt.omega(), 3);
        assert_eq!(mt.tournaments(), &[vec![0, 1, 2]]);

        let mt = maximum_tournaments(&c4());
        assert_eq!(mt.omega(), 2);
        assert_eq!(
            mt.tournaments(),
            &[vec![0, 1], vec![0, 3], vec![1, 2], vec![2, 3]]
        );

        // Frozen from brute_force_omega below: {0,1,2} and the directed
        // triangle {0,2,3} are both maximum.
        let g = tt3_looped();
        let mt = maximum_tournaments(&g);
        assert_eq!(mt.omega(), 3);
        assert_eq!(mt.tournaments(), &[vec![0, 1, 2], vec![0, 2, 3]]);
        let (bf_omega, bf_cliques) = brute_force_cliques(&g);
        assert_eq!(mt.omega(), bf_omega);
        assert_eq!(mt.tournaments(), &bf_cliques[..]);
    }

    #[test]
    fn strong_neighborhood_examples() {
        let g = tt3_looped();
        assert_eq!(strong_neighborhood(&g, &[0, 1, 2]), vec![3]);
        assert_eq!(strong_neighborhood(&c4(), &[0]), Vec::<usize>::new());
        let pendant = OrientedGraph::new(4, [(0, 1), (1, 2), (2, 0), (0, 3)]).unwrap();
        assert_eq!(strong_neighborhood(&pendant, &[0, 1, 2]), Vec::<usize>::new());
    }

    mod props {
        use super::*;
        use crate::testutil::{brute_force_cliques, oriented_graph};
        use proptest::prelude::*;

        proptest! {
            #[test]
            fn detector_agrees_with_independent_scan(g in oriented_graph(8)) {
                for h in PatternId::ALL {
                    let fast = find_pattern(&g, h).is_none();
                    let slow = crate::oracle::independent_pattern_scan(&g, h);
                    prop_assert_eq!(fast, slow, "disagreement for {}", h);
                }
            }

            #[test]
            fn q4_prime_free_iff_reverse_q4_free(g in oriented_graph(8)) {
                prop_assert_eq!(
                    find_pattern(&g, PatternId::Q4Prime).is_none(),
                    find_pattern(&g.reverse(), PatternId::Q4).is_none()
                );
            }

            #[test]
            fn maximum_tournaments_match_subset_scan(g in oriented_graph(8)) {
                let mt = maximum_tournaments(&g);
                let (omega, cliques) = brute_force_cliques(&g);
                prop_assert_eq!(mt.omega(), omega);
                prop_assert_eq!(mt.tournaments(), &cliques[..]);
            }

            #[test]
            fn strong_neighbors_are_neighbors(g in oriented_graph(8)) {
                let a: Vec<usize> = (0..g.n()).step_by(2).collect();
                let strong = strong_neighborhood(&g, &a);
                let open = g.neighborhood(&a, false);
                for v in strong {
                    prop_assert!(open.contains(&v));
                }
            }
        }
    }
}
