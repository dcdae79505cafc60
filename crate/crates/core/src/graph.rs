//! Oriented-graph core: representation and the elementary directed-graph
//! algorithms everything else consumes.
//!
//! Vertices are dense integers `0..n`. All vertex sets are sorted, duplicate
//! free `Vec<usize>` over that universe, which keeps iteration order and all
//! tie-breaks deterministic.

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("digon between {0} and {1}: both (u, v) and (v, u) present")]
    Digon(usize, usize),
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("path step ({0}, {1}) is not an arc")]
    MissingPathArc(usize, usize),
    #[error("vertex {0} repeats in path")]
    RepeatedPathVertex(usize),
    #[error("a directed path needs at least one vertex")]
    EmptyPath,
}

/// A simple digon-free digraph. Immutable after construction.
#[derive(Clone, PartialEq, Eq)]
pub struct OrientedGraph {
    n: usize,
    m: usize,
    out: Vec<Vec<usize>>,
    inn: Vec<Vec<usize>>,
}

impl OrientedGraph {
    /// Builds a graph on `n` vertices from an arc list. Rejects self-loops,
    /// digons, and out-of-range endpoints; duplicate arcs collapse.
    pub fn new(
        n: usize,
        arcs: impl IntoIterator<Item = (usize, usize)>,
    ) -> Result<Self, GraphError> {
        let mut out = vec![Vec::new(); n];
        let mut inn = vec![Vec::new(); n];
        let mut seen: Vec<(usize, usize)> = Vec::new();
        for (u, v) in arcs {
            if u >= n {
                return Err(GraphError::VertexOutOfRange { vertex: u, n });
            }
            if v >= n {
                return Err(GraphError::VertexOutOfRange { vertex: v, n });
            }
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            seen.push((u, v));
        }
        seen.sort_unstable();
        seen.dedup();
        for &(u, v) in &seen {
            if seen.binary_search(&(v, u)).is_ok() {
                return Err(GraphError::Digon(u.min(v), u.max(v)));
            }
            out[u].push(v);
            inn[v].push(u);
        }
        for list in inn.iter_mut() {
            list.sort_unstable();
        }
        let m = seen.len();
        Ok(Self { n, m, out, inn })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn arc_count(&self) -> usize {
        self.m
    }

    pub fn has_arc(&self, u: usize, v: usize) -> bool {
        self.out[u].binary_search(&v).is_ok()
    }

    pub fn adjacent(&self, u: usize, v: usize) -> bool {
        self.has_arc(u, v) || self.has_arc(v, u)
    }

    pub fn out_neighbors(&self, v: usize) -> &[usize] {
        &self.out[v]
    }

    pub fn in_neighbors(&self, v: usize) -> &[usize] {
        &self.inn[v]
    }

    /// All neighbors of `v` in the underlying graph, sorted.
    pub fn neighbors(&self, v: usize) -> Vec<usize> {
        let mut ns = self.out[v].clone();
        ns.extend_from_slice(&self.inn[v]);
        ns.sort_unstable();
        ns
    }

    /// Arcs in lexicographic order.
    pub fn arcs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.out
            .iter()
            .enumerate()
            .flat_map(|(u, vs)| vs.iter().map(move |&v| (u, v)))
    }

    /// The graph with every arc reversed.
    pub fn reverse(&self) -> Self {
        Self {
            n: self.n,
            m: self.m,
            out: self.inn.clone(),
            inn: self.out.clone(),
        }
    }

    /// Subgraph induced by `s`, relabeled to `0..s.len()` together with the
    /// map from new ids back to the originals.
    pub fn induced_with_map(&self, s: &[usize]) -> (OrientedGraph, Vec<usize>) {
        let mut map: Vec<usize> = s.to_vec();
        map.sort_unstable();
        map.dedup();
        let mut index = vec![usize::MAX; self.n];
        for (i, &v) in map.iter().enumerate() {
            index[v] = i;
        }
        let mut out = vec![Vec::new(); map.len()];
        let mut inn = vec![Vec::new(); map.len()];
        let mut m = 0;
        for (i, &v) in map.iter().enumerate() {
            for &w in &self.out[v] {
                if index[w] != usize::MAX {
                    out[i].push(index[w]);
                    inn[index[w]].push(i);
                    m += 1;
                }
            }
        }
        for list in inn.iter_mut() {
            list.sort_unstable();
        }
        (
            OrientedGraph {
                n: map.len(),
                m,
                out,
                inn,
            },
            map,
        )
    }

    pub fn induced(&self, s: &[usize]) -> OrientedGraph {
        self.induced_with_map(s).0
    }

    /// Open (`closed = false`) or closed neighborhood of a vertex set.
    pub fn neighborhood(&self, s: &[usize], closed: bool) -> Vec<usize> {
        let in_s = mask_of(self.n, s);
        let mut hit = vec![false; self.n];
        for &v in s {
            for &w in self.out[v].iter().chain(self.inn[v].iter()) {
                hit[w] = true;
            }
        }
        (0..self.n)
            .filter(|&v| {
                if closed {
                    in_s[v] || hit[v]
                } else {
                    hit[v] && !in_s[v]
                }
            })
            .collect()
    }

    /// Tarjan's algorithm; components come out in a topological order of the
    /// condensation (all arcs between distinct components point forward).
    pub fn scc(&self) -> SccDecomposition {
        let mut state = TarjanState {
            next_index: 0,
            stack: Vec::new(),
            on_stack: vec![false; self.n],
            index: vec![None; self.n],
            low: vec![0; self.n],
            components: Vec::new(),
        };
        for v in 0..self.n {
            if state.index[v].is_none() {
                self.strongconnect(v, &mut state);
            }
        }
        // Tarjan emits components in reverse topological order.
        state.components.reverse();
        let mut component_of = vec![usize::MAX; self.n];
        for (i, comp) in state.components.iter_mut().enumerate() {
            comp.sort_unstable();
            for &v in comp.iter() {
                component_of[v] = i;
            }
        }
        SccDecomposition {
            components: state.components,
            component_of,
        }
    }

    fn strongconnect(&self, v: usize, state: &mut TarjanState) {
        state.index[v] = Some(state.next_index);
        state.low[v] = state.next_index;
        state.next_index += 1;
        state.stack.push(v);
        state.on_stack[v] = true;
        for &w in &self.out[v] {
            if state.index[w].is_none() {
                self.strongconnect(w, state);
                state.low[v] = state.low[v].min(state.low[w]);
            } else if state.on_stack[w] {
                state.low[v] = state.low[v].min(state.index[w].unwrap());
            }
        }
        if state.low[v] == state.index[v].unwrap() {
            let mut comp = Vec::new();
            loop {
                let w = state.stack.pop().expect("tarjan stack underflow");
                state.on_stack[w] = false;
                comp.push(w);
                if w == v {
                    break;
                }
            }
            state.components.push(comp);
        }
    }

    pub fn is_strongly_connected(&self) -> bool {
        self.n > 0 && self.scc().components.len() == 1
    }

    /// Decides whether the subgraph induced by `s` is acyclic, returning a
    /// topological order when it is and a directed cycle when it is not.
    pub fn induced_is_acyclic(&self, s: &[usize]) -> Acyclicity {
        let in_s = mask_of(self.n, s);
        let mut indeg = vec![0usize; self.n];
        for &v in s {
            for &w in &self.out[v] {
                if in_s[w] {
                    indeg[w] += 1;
                }
            }
        }
        let mut order = Vec::with_capacity(s.len());
        let mut queue: Vec<usize> = s.iter().copied().filter(|&v| indeg[v] == 0).collect();
        queue.sort_unstable();
        let mut head = 0;
        while head < queue.len() {
            let v = queue[head];
            head += 1;
            order.push(v);
            for &w in &self.out[v] {
                if in_s[w] {
                    indeg[w] -= 1;
                    if indeg[w] == 0 {
                        queue.push(w);
                    }
                }
            }
        }
        if order.len() == s.len() {
            return Acyclicity::Acyclic { order };
        }
        // Some vertex with positive residual in-degree lies on a cycle. Walk
        // backwards through such vertices until one repeats.
        let leftover: Vec<usize> = s.iter().copied().filter(|&v| indeg[v] > 0).collect();
        let in_left = mask_of(self.n, &leftover);
        let mut seen = vec![usize::MAX; self.n];
        let mut walk = Vec::new();
        let mut cur = leftover[0];
        loop {
            if seen[cur] != usize::MAX {
                let cycle_start = seen[cur];
                let mut cycle: Vec<usize> = walk[cycle_start..].to_vec();
                // Rotate so the smallest vertex leads; purely cosmetic but
                // keeps witnesses deterministic.
                let min_pos = cycle
                    .iter()
                    .enumerate()
                    .min_by_key(|(_, &v)| v)
                    .map(|(i, _)| i)
                    .unwrap();
                cycle.rotate_left(min_pos);
                return Acyclicity::Cyclic { cycle };
            }
            seen[cur] = walk.len();
            walk.push(cur);
            cur = *self.inn[cur]
                .iter()
                .find(|&&u| in_left[u])
                .expect("vertex with positive residual in-degree has a leftover in-neighbor");
        }
    }

    /// True when the path has no forward chord: no arc `(p_i, p_j)` with
    /// `j > i + 1`. Backward arcs are permitted.
    pub fn is_forward_induced(&self, p: &DirectedPath) -> bool {
        let vs = p.vertices();
        for i in 0..vs.len() {
            for j in (i + 2)..vs.len() {
                if self.has_arc(vs[i], vs[j]) {
                    return false;
                }
            }
        }
        true
    }

    /// Minimum-vertex-count directed path starting in `sources` and ending in
    /// `targets`. Ties break to the lexicographically smallest vertex
    /// sequence. `None` when no such path exists.
    pub fn shortest_directed_path(
        &self,
        sources: &[usize],
        targets: &[usize],
    ) -> Option<DirectedPath> {
        let vs = self.lex_shortest_restricted(sources, targets, |_| true)?;
        Some(DirectedPath { vertices: vs })
    }

    /// Shortest-path search where interior vertices must satisfy
    /// `interior_ok`; endpoints are exempt. Lexicographic tie-break.
    pub(crate) fn lex_shortest_restricted(
        &self,
        sources: &[usize],
        targets: &[usize],
        interior_ok: impl Fn(usize) -> bool,
    ) -> Option<Vec<usize>> {
        if sources.is_empty() || targets.is_empty() {
            return None;
        }
        // dist[v] = arcs from v to the nearest target, moving only through
        // vertices accepted as interior. Targets sit at distance zero, which
        // is also the only way dist can be zero.
        let mut dist: Vec<Option<u32>> = vec![None; self.n];
        let mut queue = Vec::new();
        for &t in targets {
            if dist[t].is_none() {
                dist[t] = Some(0);
                queue.push(t);
            }
        }
        let mut head = 0;
        while head < queue.len() {
            let w = queue[head];
            head += 1;
            for &u in &self.inn[w] {
                if dist[u].is_none() && interior_ok(u) {
                    dist[u] = Some(dist[w].unwrap() + 1);
                    queue.push(u);
                }
            }
        }
        let start_cost = |s: usize| -> Option<u32> {
            if targets.binary_search(&s).is_ok() || targets.contains(&s) {
                return Some(0);
            }
            self.out[s]
                .iter()
                .filter_map(|&w| dist[w])
                .min()
                .map(|d| d + 1)
        };
        let mut best: Option<(u32, usize)> = None;
        let mut sorted_sources = sources.to_vec();
        sorted_sources.sort_unstable();
        sorted_sources.dedup();
        for &s in &sorted_sources {
            if let Some(c) = start_cost(s) {
                if best.map_or(true, |(bc, _)| c < bc) {
                    best = Some((c, s));
                }
            }
        }
        let (arcs_needed, start) = best?;
        let mut path = vec![start];
        let mut need = arcs_needed;
        let mut cur = start;
        while need > 0 {
            let next = self.out[cur]
                .iter()
                .copied()
                .find(|&w| dist[w] == Some(need - 1))
                .expect("greedy reconstruction always has an eligible successor");
            path.push(next);
            cur = next;
            need -= 1;
        }
        Some(path)
    }
}

impl std::fmt::Debug for OrientedGraph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "OrientedGraph(n={}, arcs={:?})", self.n, self.arcs().collect::<Vec<_>>())
    }
}

struct TarjanState {
    next_index: usize,
    stack: Vec<usize>,
    on_stack: Vec<bool>,
    index: Vec<Option<usize>>,
    low: Vec<usize>,
    components: Vec<Vec<usize>>,
}

/// Result of an acyclicity check, with a machine-checkable witness either way.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Acyclicity {
    Acyclic { order: Vec<usize> },
    Cyclic { cycle: Vec<usize> },
}

impl Acyclicity {
    pub fn is_acyclic(&self) -> bool {
        matches!(self, Acyclicity::Acyclic { .. })
    }
}

/// A directed path stored as its vertex sequence.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DirectedPath {
    vertices: Vec<usize>,
}

impl DirectedPath {
    /// Validates that consecutive vertices are joined by arcs and that no
    /// vertex repeats.
    pub fn new(g: &OrientedGraph, vertices: Vec<usize>) -> Result<Self, GraphError> {
        if vertices.is_empty() {
            return Err(GraphError::EmptyPath);
        }
        for &v in &vertices {
            if v >= g.n() {
                return Err(GraphError::VertexOutOfRange { vertex: v, n: g.n() });
            }
        }
        let mut sorted = vertices.clone();
        sorted.sort_unstable();
        for w in sorted.windows(2) {
            if w[0] == w[1] {
                return Err(GraphError::RepeatedPathVertex(w[0]));
            }
        }
        for w in vertices.windows(2) {
            if !g.has_arc(w[0], w[1]) {
                return Err(GraphError::MissingPathArc(w[0], w[1]));
            }
        }
        Ok(Self { vertices })
    }

    pub fn vertices(&self) -> &[usize] {
        &self.vertices
    }

    /// Number of vertices.
    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn first(&self) -> usize {
        self.vertices[0]
    }

    pub fn last(&self) -> usize {
        *self.vertices.last().unwrap()
    }
}

/// Strongly connected components in a topological order of the condensation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SccDecomposition {
    components: Vec<Vec<usize>>,
    component_of: Vec<usize>,
}

impl SccDecomposition {
    pub fn components(&self) -> &[Vec<usize>] {
        &self.components
    }

    pub fn component_of(&self, v: usize) -> usize {
        self.component_of[v]
    }

    pub fn count(&self) -> usize {
        self.components.len()
    }

    /// Indices of components with no incoming arc from another component.
    pub fn source_components(&self, g: &OrientedGraph) -> Vec<usize> {
        let mut has_in = vec![false; self.components.len()];
        for (u, v) in g.arcs() {
            let (cu, cv) = (self.component_of[u], self.component_of[v]);
            if cu != cv {
                has_in[cv] = true;
            }
        }
        (0..self.components.len()).filter(|&i| !has_in[i]).collect()
    }

    /// Indices of components with no outgoing arc to another component.
    pub fn sink_components(&self, g: &OrientedGraph) -> Vec<usize> {
        let mut has_out = vec![false; self.components.len()];
        for (u, v) in g.arcs() {
            let (cu, cv) = (self.component_of[u], self.component_of[v]);
            if cu != cv {
                has_out[cu] = true;
            }
        }
        (0..self.components.len()).filter(|&i| !has_out[i]).collect()
    }
}

pub(crate) fn mask_of(n: usize, s: &[usize]) -> Vec<bool> {
    let mut mask = vec![false; n];
    for &v in s {
        mask[v] = true;
    }
    mask
}

/// Union of two sorted vertex sets.
pub(crate) fn sorted_union(a: &[usize], b: &[usize]) -> Vec<usize> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    out.extend_from_slice(a);
    out.extend_from_slice(b);
    out.sort_unstable();
    out.dedup();
    out
}

/// Elements of sorted `a` not in sorted `b`.
pub(crate) fn sorted_diff(a: &[usize], b: &[usize]) -> Vec<usize> {
    a.iter()
        .copied()
        .filter(|v| b.binary_search(v).is_err())
        .collect()
}
