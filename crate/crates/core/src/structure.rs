//! Structural objects over an oriented graph: path-minimizing closed
//! tournaments, dipolar sets built from them, and the attachment partitions
//! of a path neighborhood together with the derived W/R vertex bands.

use crate::graph::{mask_of, sorted_diff, sorted_union, DirectedPath, OrientedGraph};
use crate::patterns::{maximum_tournaments, strong_neighborhood, MaximumTournaments, PatternId};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum StructureError {
    #[error("graph is not strongly connected")]
    NotStronglyConnected,
    #[error("no connecting path closes any maximum tournament")]
    NoClosedTournament,
    #[error("maximum-tournament enumeration exceeded cap {cap} ({found} found)")]
    EnumerationCapExceeded { cap: usize, found: usize },
    #[error("vertices {0} and {1} are not adjacent, so the set is not a tournament")]
    NotATournament(usize, usize),
    #[error("tournament has {got} vertices but the clique number is {expected}")]
    WrongTournamentSize { expected: usize, got: usize },
    #[error("path endpoint {0} lies outside the tournament")]
    PathEndpointOutsideTournament(usize),
    #[error("path interior vertex {0} lies inside the tournament")]
    PathInteriorInTournament(usize),
    #[error("connecting path has a forward chord ({0}, {1})")]
    PathNotForwardInduced(usize, usize),
    #[error("closed tournament does not induce a strongly connected subgraph")]
    ClosureNotStronglyConnected,
    #[error("tournament must be strongly connected when the path is empty")]
    TrivialPathNotClosed,
    #[error(
        "vertex {vertex} has both an in- and an out-neighbor outside the candidate dipolar set"
    )]
    NotDipolar {
        vertex: usize,
        /// Quadruples from the failure analysis; each induces a copy of some
        /// path orientation.
        candidates: Vec<[usize; 4]>,
    },
    #[error("vertex {0} appears on both sides of a dipolar partition")]
    OverlappingDipolarSides(usize),
}

/// A maximum tournament `K` together with a directed path `P` (possibly
/// empty) such that `K ∪ V(P)` induces a strongly connected subgraph. The
/// path, when present, runs from the sink component of the tournament back
/// to its source component, its endpoints lie in `K`, its interior avoids
/// `K`, and it is forward-induced.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClosedTournament {
    tournament: Vec<usize>,
    path: Option<DirectedPath>,
    vertices: Vec<usize>,
}

impl ClosedTournament {
    /// Validates every invariant. `omega` is the clique number of `g`.
    pub fn new(
        g: &OrientedGraph,
        tournament: Vec<usize>,
        path: Option<DirectedPath>,
        omega: usize,
    ) -> Result<Self, StructureError> {
        let mut k = tournament;
        k.sort_unstable();
        k.dedup();
        if k.len() != omega {
            return Err(StructureError::WrongTournamentSize {
                expected: omega,
                got: k.len(),
            });
        }
        for (i, &u) in k.iter().enumerate() {
            for &v in &k[i + 1..] {
                if !g.adjacent(u, v) {
                    return Err(StructureError::NotATournament(u, v));
                }
            }
        }
        let in_k = mask_of(g.n(), &k);
        if let Some(p) = &path {
            let vs = p.vertices();
            if !in_k[vs[0]] {
                return Err(StructureError::PathEndpointOutsideTournament(vs[0]));
            }
            if !in_k[*vs.last().unwrap()] {
                return Err(StructureError::PathEndpointOutsideTournament(
                    *vs.last().unwrap(),
                ));
            }
            for &v in &vs[1..vs.len() - 1] {
                if in_k[v] {
                    return Err(StructureError::PathInteriorInTournament(v));
                }
            }
            for i in 0..vs.len() {
                for j in (i + 2)..vs.len() {
                    if g.has_arc(vs[i], vs[j]) {
                        return Err(StructureError::PathNotForwardInduced(vs[i], vs[j]));
                    }
                }
            }
        } else if !g.induced(&k).is_strongly_connected() {
            return Err(StructureError::TrivialPathNotClosed);
        }
        let vertices = match &path {
            Some(p) => sorted_union(&k, p.vertices()),
            None => k.clone(),
        };
        if !g.induced(&vertices).is_strongly_connected() {
            return Err(StructureError::ClosureNotStronglyConnected);
        }
        Ok(Self {
            tournament: k,
            path,
            vertices,
        })
    }

    pub fn tournament(&self) -> &[usize] {
        &self.tournament
    }

    pub fn path(&self) -> Option<&DirectedPath> {
        self.path.as_ref()
    }

    /// Vertices of the path, empty when the tournament is already strongly
    /// connected.
    pub fn path_vertices(&self) -> &[usize] {
        self.path.as_ref().map_or(&[], |p| p.vertices())
    }

    pub fn path_len(&self) -> usize {
        self.path.as_ref().map_or(0, |p| p.len())
    }

    /// The closed tournament `C = K ∪ V(P)`, sorted.
    pub fn vertices(&self) -> &[usize] {
        &self.vertices
    }

    pub fn omega(&self) -> usize {
        self.tournament.len()
    }
}

/// Finds the closed tournament minimizing `|P|` over all maximum tournaments
/// and admissible connecting paths. Ties break to the first tournament in
/// lexicographic enumeration order, then to the lexicographically smallest
/// path.
pub fn path_minimizing_closed_tournament(
    g: &OrientedGraph,
) -> Result<ClosedTournament, StructureError> {
    path_minimizing_closed_tournament_capped(g, None)
}

/// Same as [`path_minimizing_closed_tournament`] with a cap on how many
/// maximum tournaments the search may enumerate.
pub fn path_minimizing_closed_tournament_capped(
    g: &OrientedGraph,
    cap: Option<usize>,
) -> Result<ClosedTournament, StructureError> {
    let mt = maximum_tournaments(g);
    closed_tournament_from(g, &mt, cap)
}

pub(crate) fn closed_tournament_from(
    g: &OrientedGraph,
    mt: &MaximumTournaments,
    cap: Option<usize>,
) -> Result<ClosedTournament, StructureError> {
    if !g.is_strongly_connected() {
        return Err(StructureError::NotStronglyConnected);
    }
    if let Some(cap) = cap {
        if mt.tournaments().len() > cap {
            return Err(StructureError::EnumerationCapExceeded {
                cap,
                found: mt.tournaments().len(),
            });
        }
    }
    let omega = mt.omega();
    let mut best: Option<(usize, usize, Option<Vec<usize>>)> = None;
    for (idx, k) in mt.iter().enumerate() {
        let (sub, map) = g.induced_with_map(k);
        let scc = sub.scc();
        if scc.count() == 1 {
            // Strongly connected tournament: empty path, unbeatable.
            best = Some((0, idx, None));
            break;
        }
        // The condensation of a tournament is a linear order, so the first
        // component is the unique source and the last the unique sink.
        let source: Vec<usize> = scc.components()[0].iter().map(|&v| map[v]).collect();
        let sink: Vec<usize> = scc.components()[scc.count() - 1]
            .iter()
            .map(|&v| map[v])
            .collect();
        let in_k = mask_of(g.n(), k);
        let Some(path) = g.lex_shortest_restricted(&sink, &source, |v| !in_k[v]) else {
            continue;
        };
        let len = path.len();
        if best.as_ref().map_or(true, |(bl, _, _)| len < *bl) {
            best = Some((len, idx, Some(path)));
        }
    }
    let Some((_, idx, path)) = best else {
        return Err(StructureError::NoClosedTournament);
    };
    let k = mt.tournaments()[idx].clone();
    let path = match path {
        Some(vs) => Some(DirectedPath::new(g, vs).expect("search produced a valid path")),
        None => None,
    };
    ClosedTournament::new(g, k, path, omega)
}

/// A vertex set split into a side with no out-neighbors outside the set and
/// a side with no in-neighbors outside it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DipolarSet {
    plus: Vec<usize>,
    minus: Vec<usize>,
}

impl DipolarSet {
    pub fn new(plus: Vec<usize>, minus: Vec<usize>) -> Result<Self, StructureError> {
        let mut p = plus;
        let mut m = minus;
        p.sort_unstable();
        p.dedup();
        m.sort_unstable();
        m.dedup();
        for &v in &p {
            if m.binary_search(&v).is_ok() {
                return Err(StructureError::OverlappingDipolarSides(v));
            }
        }
        Ok(Self { plus: p, minus: m })
    }

    pub fn plus(&self) -> &[usize] {
        &self.plus
    }

    pub fn minus(&self) -> &[usize] {
        &self.minus
    }

    /// All members, sorted.
    pub fn members(&self) -> Vec<usize> {
        sorted_union(&self.plus, &self.minus)
    }
}

/// Why a candidate partition fails to be dipolar.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DipolarViolation {
    pub vertex: usize,
    /// The offending arc: out of the plus side or into the minus side.
    pub arc: (usize, usize),
}

/// Checks the two defining conditions, returning the violating vertex and
/// arc on failure.
pub fn verify_dipolar(g: &OrientedGraph, d: &DipolarSet) -> Result<(), DipolarViolation> {
    let members = d.members();
    let inside = mask_of(g.n(), &members);
    for &v in d.plus() {
        for &w in g.out_neighbors(v) {
            if !inside[w] {
                return Err(DipolarViolation {
                    vertex: v,
                    arc: (v, w),
                });
            }
        }
    }
    for &v in d.minus() {
        for &w in g.in_neighbors(v) {
            if !inside[w] {
                return Err(DipolarViolation {
                    vertex: v,
                    arc: (w, v),
                });
            }
        }
    }
    Ok(())
}

/// The named parts of the dipolar set grown from a closed tournament.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DipolarParts {
    /// `C`: the closed tournament itself.
    pub closed_tournament: Vec<usize>,
    /// `X`: strong neighbors of `C`.
    pub strong_neighbors: Vec<usize>,
    /// `Z`: neighbors of `C` that are not strong.
    pub oneway_neighbors: Vec<usize>,
    /// `Y`: neighbors of `X` outside the closed neighborhood of `C`.
    pub second_neighbors: Vec<usize>,
    /// `S = N[C ∪ X]`, the union of the four parts.
    pub members: Vec<usize>,
}

/// Grows the dipolar set `N[C ∪ X]` from a closed tournament and produces
/// its witness partition. Every vertex with an out-neighbor outside the set
/// goes to the minus side, every vertex with an in-neighbor outside goes to
/// the plus side, and untouched vertices default to plus.
///
/// A vertex with neighbors on both sides contradicts the construction; the
/// error carries quadruples that each induce some orientation of the
/// four-vertex path through that vertex.
pub fn build_dipolar_set(
    g: &OrientedGraph,
    ct: &ClosedTournament,
) -> Result<(DipolarSet, DipolarParts), StructureError> {
    let c = ct.vertices().to_vec();
    let x = strong_neighborhood(g, &c);
    let z = sorted_diff(&g.neighborhood(&c, false), &x);
    let closed_c = g.neighborhood(&c, true);
    let y = sorted_diff(&g.neighborhood(&x, false), &closed_c);
    let cx = sorted_union(&c, &x);
    let s = g.neighborhood(&cx, true);
    let inside = mask_of(g.n(), &s);

    let mut plus = Vec::new();
    let mut minus = Vec::new();
    for &v in &s {
        let out_escape = g.out_neighbors(v).iter().copied().find(|&w| !inside[w]);
        let in_escape = g.in_neighbors(v).iter().copied().find(|&w| !inside[w]);
        match (in_escape, out_escape) {
            (Some(b_in), Some(b_out)) => {
                return Err(StructureError::NotDipolar {
                    vertex: v,
                    candidates: escape_candidates(g, &c, &x, &y, v, b_in, b_out),
                });
            }
            (_, Some(_)) => minus.push(v),
            _ => plus.push(v),
        }
    }
    let parts = DipolarParts {
        closed_tournament: c,
        strong_neighbors: x,
        oneway_neighbors: z,
        second_neighbors: y,
        members: s,
    };
    Ok((DipolarSet { plus, minus }, parts))
}

/// Candidate induced-path quadruples for a vertex that defeats the dipolar
/// construction: one path `* - * - v - b` per choice of inner anchor and
/// escaping neighbor.
fn escape_candidates(
    g: &OrientedGraph,
    c: &[usize],
    x: &[usize],
    y: &[usize],
    v: usize,
    b_in: usize,
    b_out: usize,
) -> Vec<[usize; 4]> {
    let in_c = mask_of(g.n(), c);
    let mut quads = Vec::new();
    if y.binary_search(&v).is_ok() {
        // v sits in the second neighborhood: anchor through a strong
        // neighbor x0 and its in/out neighbors in C.
        if let Some(&x0) = x.iter().find(|&&w| g.adjacent(w, v)) {
            let c_in = g.in_neighbors(x0).iter().copied().find(|&u| in_c[u]);
            let c_out = g.out_neighbors(x0).iter().copied().find(|&u| in_c[u]);
            for anchor in [c_in, c_out].into_iter().flatten() {
                quads.push([anchor, x0, v, b_in]);
                quads.push([anchor, x0, v, b_out]);
            }
        }
    } else {
        // v is a one-way neighbor of C: strong connectivity of C yields arcs
        // both ways across the cut (N(v) ∩ C, C \ N(v)).
        let mut into_cut: Option<(usize, usize)> = None;
        let mut out_of_cut: Option<(usize, usize)> = None;
        for &q in c {
            if !g.adjacent(q, v) {
                continue;
            }
            if into_cut.is_none() {
                if let Some(&p) = g.in_neighbors(q).iter().find(|&&p| in_c[p] && !g.adjacent(p, v))
                {
                    into_cut = Some((p, q));
                }
            }
            if out_of_cut.is_none() {
                if let Some(&p) = g.out_neighbors(q).iter().find(|&&p| in_c[p] && !g.adjacent(p, v))
                {
                    out_of_cut = Some((p, q));
                }
            }
        }
        for (p, q) in [into_cut, out_of_cut].into_iter().flatten() {
            quads.push([p, q, v, b_in]);
            quads.push([p, q, v, b_out]);
        }
    }
    quads
}

/// One class of an attachment partition: the vertices attached at a given
/// path position, refined by the direction of the attaching arc.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct AttachmentClass {
    pub members: Vec<usize>,
    /// Members `v` with the arc `(v, p_i)`: in-neighbors of the path vertex.
    pub into_path: Vec<usize>,
    /// Members `v` with the arc `(p_i, v)`: out-neighbors of the path vertex.
    pub from_path: Vec<usize>,
}

/// The partitions of `N(P)` by first and last attachment along a
/// forward-induced directed path, each refined by arc direction. Class `i`
/// (zero-based) belongs to the path vertex at position `i`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AttachmentPartitions {
    pub first: Vec<AttachmentClass>,
    pub last: Vec<AttachmentClass>,
}

impl AttachmentPartitions {
    pub fn path_len(&self) -> usize {
        self.first.len()
    }
}

/// Assigns every neighbor of the path to the class of its minimum-index and
/// maximum-index path neighbor. Expects `p` to be forward-induced.
pub fn attachment_partitions(g: &OrientedGraph, p: &DirectedPath) -> AttachmentPartitions {
    debug_assert!(g.is_forward_induced(p));
    let vs = p.vertices();
    let ell = vs.len();
    let mut first = vec![AttachmentClass::default(); ell];
    let mut last = vec![AttachmentClass::default(); ell];
    for v in g.neighborhood(vs, false) {
        let lo = (0..ell).find(|&i| g.adjacent(vs[i], v)).unwrap();
        let hi = (0..ell).rfind(|&i| g.adjacent(vs[i], v)).unwrap();
        first[lo].members.push(v);
        if g.has_arc(v, vs[lo]) {
            first[lo].into_path.push(v);
        } else {
            first[lo].from_path.push(v);
        }
        last[hi].members.push(v);
        if g.has_arc(v, vs[hi]) {
            last[hi].into_path.push(v);
        } else {
            last[hi].from_path.push(v);
        }
    }
    AttachmentPartitions { first, last }
}

/// Which of the two finer path-neighborhood analyses applies.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PathCase {
    P4Forward,
    A4,
}

impl TryFrom<PatternId> for PathCase {
    type Error = PatternId;

    fn try_from(p: PatternId) -> Result<Self, PatternId> {
        match p {
            PatternId::P4Forward => Ok(PathCase::P4Forward),
            PatternId::A4 => Ok(PathCase::A4),
            other => Err(other),
        }
    }
}

/// The W band and R residue of a path neighborhood.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WrSets {
    pub w: Vec<usize>,
    pub r: Vec<usize>,
}

/// Computes the case-specific band `W` over the interior attachment classes
/// and the residue `R` of the path neighborhood.
///
/// * `P4Forward`: `W` collects out-attachments at first contact and
///   in-attachments at last contact; `R` excludes the neighborhoods of the
///   first two and the last path vertices.
/// * `A4`: the dual band; `R` excludes the neighborhoods of the two path
///   endpoints.
pub fn w_r_sets(
    g: &OrientedGraph,
    p: &DirectedPath,
    parts: &AttachmentPartitions,
    case: PathCase,
) -> WrSets {
    let vs = p.vertices();
    let ell = vs.len();
    let np = g.neighborhood(vs, false);
    if ell < 3 {
        return WrSets {
            w: Vec::new(),
            r: Vec::new(),
        };
    }
    let mut w = Vec::new();
    for i in 1..ell - 1 {
        match case {
            PathCase::P4Forward => {
                w.extend_from_slice(&parts.first[i].from_path);
                w.extend_from_slice(&parts.last[i].into_path);
            }
            PathCase::A4 => {
                w.extend_from_slice(&parts.first[i].into_path);
                w.extend_from_slice(&parts.last[i].from_path);
            }
        }
    }
    w.sort_unstable();
    w.dedup();
    let excluded = match case {
        PathCase::P4Forward => g.neighborhood(&[vs[0], vs[1], vs[ell - 1]], false),
        PathCase::A4 => g.neighborhood(&[vs[0], vs[ell - 1]], false),
    };
    let r = sorted_diff(&sorted_diff(&np, &excluded), &w);
    WrSets { w, r }
}
