//! Immutable simple undirected graphs over small integer vertex ids.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::bitset::{Vertex, VertexSet, MAX_VERTICES};
use crate::error::{invalid, Result};

pub type Edge = (Vertex, Vertex);

#[inline]
pub(crate) fn norm(u: Vertex, v: Vertex) -> Edge {
    if u < v {
        (u, v)
    } else {
        (v, u)
    }
}

/// A simple undirected graph. Vertex ids need not be contiguous; iteration is
/// always by ascending id. Every manipulation returns a new value.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(into = "GraphRepr", try_from = "GraphRepr")]
pub struct Graph {
    vertices: VertexSet,
    // adj.len() == max id + 1 (0 for the empty graph)
    adj: Vec<VertexSet>,
}

impl Graph {
    fn from_parts(vertices: VertexSet, mut adj: Vec<VertexSet>) -> Graph {
        let bound = vertices.last().map_or(0, |v| v + 1);
        adj.resize(bound, VertexSet::EMPTY);
        Graph { vertices, adj }
    }

    /// Builds a graph from a vertex list and an edge list. Duplicate edges are
    /// merged; self-loops and edges touching unknown vertices are rejected.
    pub fn new(
        vertices: impl IntoIterator<Item = Vertex>,
        edges: impl IntoIterator<Item = Edge>,
    ) -> Result<Graph> {
        let mut vs = VertexSet::EMPTY;
        for v in vertices {
            if v >= MAX_VERTICES {
                return Err(invalid(format!(
                    "vertex id {v} exceeds the supported maximum {}",
                    MAX_VERTICES - 1
                )));
            }
            vs.insert(v);
        }
        let mut adj = vec![VertexSet::EMPTY; vs.last().map_or(0, |v| v + 1)];
        for (u, v) in edges {
            if u == v {
                return Err(invalid(format!("self-loop at {u}")));
            }
            if !vs.contains(u) || !vs.contains(v) {
                return Err(invalid(format!("edge {u}-{v} touches an unknown vertex")));
            }
            adj[u].insert(v);
            adj[v].insert(u);
        }
        Ok(Graph { vertices: vs, adj })
    }

    /// Graph on `0..n` with the given edges.
    pub fn from_edges(n: usize, edges: impl IntoIterator<Item = Edge>) -> Result<Graph> {
        Graph::new(0..n, edges)
    }

    pub fn empty(n: usize) -> Graph {
        Graph::from_edges(n, []).expect("empty graph")
    }

    pub fn complete(n: usize) -> Graph {
        let edges = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)));
        Graph::from_edges(n, edges).expect("complete graph")
    }

    pub fn cycle(n: usize) -> Graph {
        assert!(n >= 3, "a cycle needs at least three vertices");
        Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n))).expect("cycle")
    }

    pub fn path(n: usize) -> Graph {
        Graph::from_edges(n, (1..n).map(|i| (i - 1, i))).expect("path")
    }

    #[inline]
    pub fn vertices(&self) -> VertexSet {
        self.vertices
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.vertices.len()
    }

    pub fn size(&self) -> usize {
        self.adj.iter().map(|s| s.len()).sum::<usize>() / 2
    }

    #[inline]
    pub fn contains(&self, v: Vertex) -> bool {
        self.vertices.contains(v)
    }

    /// Open neighbourhood. Empty for vertices not in the graph.
    #[inline]
    pub fn neighbors(&self, v: Vertex) -> VertexSet {
        self.adj.get(v).copied().unwrap_or_default()
    }

    #[inline]
    pub fn degree(&self, v: Vertex) -> usize {
        self.neighbors(v).len()
    }

    #[inline]
    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        self.neighbors(u).contains(v)
    }

    /// Edges `(u, v)` with `u < v`, ascending.
    pub fn edges(&self) -> Vec<Edge> {
        let mut out = Vec::with_capacity(self.size());
        for u in self.vertices {
            for v in self.neighbors(u) {
                if u < v {
                    out.push((u, v));
                }
            }
        }
        out
    }

    /// `N(S) - S`.
    pub fn neighborhood_of(&self, s: VertexSet) -> VertexSet {
        let mut n = VertexSet::EMPTY;
        for v in s & self.vertices {
            n |= self.neighbors(v);
        }
        n - s
    }

    /// Subgraph induced by `s ∩ V`.
    pub fn induced(&self, s: VertexSet) -> Graph {
        let keep = s & self.vertices;
        let adj = self.adj.iter().enumerate().map(|(v, &n)| {
            if keep.contains(v) {
                n & keep
            } else {
                VertexSet::EMPTY
            }
        });
        Graph::from_parts(keep, adj.collect())
    }

    pub fn remove_vertices(&self, s: VertexSet) -> Graph {
        self.induced(self.vertices - s)
    }

    pub fn remove_vertex(&self, v: Vertex) -> Graph {
        self.remove_vertices(VertexSet::singleton(v))
    }

    /// Removes the listed edges; absent edges are ignored.
    pub fn remove_edges(&self, edges: impl IntoIterator<Item = Edge>) -> Graph {
        let mut adj = self.adj.clone();
        for (u, v) in edges {
            if u < adj.len() && v < adj.len() {
                adj[u].remove(v);
                adj[v].remove(u);
            }
        }
        Graph::from_parts(self.vertices, adj)
    }

    /// Adds edges between existing vertices.
    pub fn add_edges(&self, edges: impl IntoIterator<Item = Edge>) -> Result<Graph> {
        let mut adj = self.adj.clone();
        for (u, v) in edges {
            if u == v {
                return Err(invalid(format!("self-loop at {u}")));
            }
            if !self.contains(u) || !self.contains(v) {
                return Err(invalid(format!("edge {u}-{v} touches an unknown vertex")));
            }
            adj[u].insert(v);
            adj[v].insert(u);
        }
        Ok(Graph::from_parts(self.vertices, adj))
    }

    /// Adds a new vertex adjacent to `nbrs`.
    pub fn add_vertex(&self, v: Vertex, nbrs: VertexSet) -> Result<Graph> {
        if v >= MAX_VERTICES {
            return Err(invalid(format!("vertex id {v} out of range")));
        }
        if self.contains(v) {
            return Err(invalid(format!("vertex {v} already present")));
        }
        if !nbrs.is_subset(self.vertices) {
            return Err(invalid("new vertex attached to unknown vertices"));
        }
        let mut adj = self.adj.clone();
        adj.resize(adj.len().max(v + 1), VertexSet::EMPTY);
        adj[v] = nbrs;
        for u in nbrs {
            adj[u].insert(v);
        }
        Ok(Graph::from_parts(self.vertices.with(v), adj))
    }

    /// Smallest id not in use, if any.
    pub fn fresh_vertex(&self) -> Option<Vertex> {
        (!self.vertices).first().filter(|&v| v < MAX_VERTICES)
    }

    /// Vertices reachable from `start` using only vertices in `allowed`
    /// (`start` itself is always included).
    pub fn reach(&self, start: Vertex, allowed: VertexSet) -> VertexSet {
        let allowed = allowed & self.vertices;
        let mut seen = VertexSet::singleton(start);
        let mut frontier = seen;
        while !frontier.is_empty() {
            let mut next = VertexSet::EMPTY;
            for v in frontier {
                next |= self.neighbors(v);
            }
            next &= allowed - seen;
            seen |= next;
            frontier = next;
        }
        seen
    }

    /// A shortest `s`-`t` path whose interior lies in `allowed`; ties go to
    /// the lowest-id predecessor.
    pub fn shortest_path(&self, s: Vertex, t: Vertex, allowed: VertexSet) -> Option<Path> {
        if !self.contains(s) || !self.contains(t) {
            return None;
        }
        if s == t {
            return Some(Path(vec![s]));
        }
        let open = (allowed & self.vertices).with(t).without(s);
        let mut pred = vec![usize::MAX; self.adj.len()];
        let mut seen = VertexSet::singleton(s);
        let mut frontier = vec![s];
        while !frontier.is_empty() && !seen.contains(t) {
            let mut next = Vec::new();
            for &u in &frontier {
                for v in self.neighbors(u) & (open - seen) {
                    seen.insert(v);
                    pred[v] = u;
                    next.push(v);
                }
            }
            frontier = next;
        }
        if !seen.contains(t) {
            return None;
        }
        let mut out = vec![t];
        let mut x = t;
        while x != s {
            x = pred[x];
            out.push(x);
        }
        out.reverse();
        Some(Path(out))
    }

    /// Connected components of the subgraph induced by `within`, ordered by
    /// smallest member.
    pub fn components_within(&self, within: VertexSet) -> Vec<VertexSet> {
        let mut rest = within & self.vertices;
        let mut out = Vec::new();
        while let Some(v) = rest.first() {
            let c = self.reach(v, rest);
            rest -= c;
            out.push(c);
        }
        out
    }

    pub fn components(&self) -> Vec<VertexSet> {
        self.components_within(self.vertices)
    }

    pub fn is_connected(&self) -> bool {
        match self.vertices.first() {
            None => true,
            Some(v) => self.reach(v, self.vertices) == self.vertices,
        }
    }

    /// Whether every vertex and edge of `self` is present in `other`.
    pub fn is_subgraph_of(&self, other: &Graph) -> bool {
        self.vertices.is_subset(other.vertices)
            && self
                .vertices
                .iter()
                .all(|v| self.neighbors(v).is_subset(other.neighbors(v)))
    }

    /// `G/M`: the connected set `m` is replaced by one vertex, which keeps
    /// the smallest id in `m` and is adjacent to `N(m)`.
    pub fn contract(&self, m: VertexSet) -> Result<Graph> {
        let z = m
            .first()
            .ok_or_else(|| invalid("cannot contract an empty vertex set"))?;
        if !m.is_subset(self.vertices) {
            return Err(invalid("contracted set contains unknown vertices"));
        }
        if self.reach(z, m) != m {
            return Err(invalid(
                "contracted set does not induce a connected subgraph",
            ));
        }
        let nm = self.neighborhood_of(m);
        let rest = m.without(z);
        let mut adj: Vec<VertexSet> = self
            .adj
            .iter()
            .enumerate()
            .map(|(v, &n)| {
                if !self.contains(v) || rest.contains(v) {
                    VertexSet::EMPTY
                } else if n.intersects(m) {
                    (n - m).with(z)
                } else {
                    n
                }
            })
            .collect();
        adj[z] = nm;
        Ok(Graph::from_parts(self.vertices - rest, adj))
    }

    /// Deletes every edge `xv` with `v` outside `keep`.
    pub fn restrict_edges_at(&self, x: Vertex, keep: VertexSet) -> Result<Graph> {
        if !self.contains(x) {
            return Err(invalid(format!("vertex {x} is not in the graph")));
        }
        let drop = self.neighbors(x) - keep;
        Ok(self.remove_edges(drop.iter().map(|v| (x, v))))
    }

    /// Number of edges from `x` into `s` (`x` itself is not counted).
    pub fn edge_count(&self, x: Vertex, s: VertexSet) -> Result<usize> {
        if !self.contains(x) {
            return Err(invalid(format!("vertex {x} is not in the graph")));
        }
        Ok((self.neighbors(x) & s.without(x)).len())
    }

    /// Relabels the vertices to `0..n` in ascending order. Returns the new
    /// graph and the old id of each new vertex.
    pub fn compact(&self) -> (Graph, Vec<Vertex>) {
        let old: Vec<Vertex> = self.vertices.to_vec();
        let mut pos = vec![usize::MAX; self.adj.len()];
        for (i, &v) in old.iter().enumerate() {
            pos[v] = i;
        }
        let edges = self.edges().into_iter().map(|(u, v)| (pos[u], pos[v]));
        (Graph::from_edges(old.len(), edges).expect("relabel"), old)
    }

    /// Applies an injective relabelling `map[v]` to every vertex.
    pub fn relabel(&self, map: impl Fn(Vertex) -> Vertex) -> Result<Graph> {
        let vs: Vec<Vertex> = self.vertices.iter().map(&map).collect();
        let set: VertexSet = vs.iter().collect();
        if set.len() != vs.len() {
            return Err(invalid("relabelling is not injective"));
        }
        Graph::new(vs, self.edges().into_iter().map(|(u, v)| (map(u), map(v))))
    }
}

#[derive(Serialize, Deserialize)]
struct GraphRepr {
    vertices: Vec<Vertex>,
    edges: Vec<Edge>,
}

impl From<Graph> for GraphRepr {
    fn from(g: Graph) -> GraphRepr {
        GraphRepr {
            vertices: g.vertices.to_vec(),
            edges: g.edges(),
        }
    }
}

impl TryFrom<GraphRepr> for Graph {
    type Error = crate::error::Error;

    fn try_from(r: GraphRepr) -> Result<Graph> {
        Graph::new(r.vertices, r.edges)
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(V={:?}, E={:?})", self.vertices, self.edges())
    }
}

/// A path given by its vertex sequence. A single vertex is a trivial path.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Path(Vec<Vertex>);

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum PathError {
    #[error("path is empty")]
    Empty,
    #[error("vertex {0} repeats")]
    Repeated(Vertex),
    #[error("vertex {0} is not in the host graph")]
    UnknownVertex(Vertex),
    #[error("{0} and {1} are consecutive but not adjacent")]
    MissingEdge(Vertex, Vertex),
}

impl Path {
    pub fn new(vertices: Vec<Vertex>) -> Path {
        Path(vertices)
    }

    pub fn vertices(&self) -> &[Vertex] {
        &self.0
    }

    pub fn into_vec(self) -> Vec<Vertex> {
        self.0
    }

    pub fn first(&self) -> Option<Vertex> {
        self.0.first().copied()
    }

    pub fn last(&self) -> Option<Vertex> {
        self.0.last().copied()
    }

    /// Number of vertices.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn vertex_set(&self) -> VertexSet {
        self.0.iter().collect()
    }

    /// Vertices other than the two ends.
    pub fn interior(&self) -> VertexSet {
        if self.0.len() <= 2 {
            VertexSet::EMPTY
        } else {
            self.0[1..self.0.len() - 1].iter().collect()
        }
    }

    pub fn edges(&self) -> impl Iterator<Item = Edge> + '_ {
        self.0.windows(2).map(|w| norm(w[0], w[1]))
    }

    pub fn contains_edge(&self, u: Vertex, v: Vertex) -> bool {
        self.0.windows(2).any(|w| norm(w[0], w[1]) == norm(u, v))
    }

    pub fn reversed(&self) -> Path {
        let mut v = self.0.clone();
        v.reverse();
        Path(v)
    }

    pub fn check(&self, g: &Graph) -> Result<(), PathError> {
        if self.0.is_empty() {
            return Err(PathError::Empty);
        }
        let mut seen = VertexSet::EMPTY;
        for &v in &self.0 {
            if !g.contains(v) {
                return Err(PathError::UnknownVertex(v));
            }
            if seen.contains(v) {
                return Err(PathError::Repeated(v));
            }
            seen.insert(v);
        }
        for w in self.0.windows(2) {
            if !g.has_edge(w[0], w[1]) {
                return Err(PathError::MissingEdge(w[0], w[1]));
            }
        }
        Ok(())
    }

    pub fn is_path_in(&self, g: &Graph) -> bool {
        self.check(g).is_ok()
    }

    /// Valid path with no edge of `g` joining two non-consecutive vertices.
    pub fn is_induced_in(&self, g: &Graph) -> bool {
        if !self.is_path_in(g) {
            return false;
        }
        let set = self.vertex_set();
        self.0.iter().enumerate().all(|(i, &v)| {
            let mut allowed = VertexSet::EMPTY;
            if i > 0 {
                allowed.insert(self.0[i - 1]);
            }
            if i + 1 < self.0.len() {
                allowed.insert(self.0[i + 1]);
            }
            (g.neighbors(v) & set).is_subset(allowed)
        })
    }
}

impl From<Vec<Vertex>> for Path {
    fn from(v: Vec<Vertex>) -> Path {
        Path(v)
    }
}

/// A cycle given by its cyclic vertex sequence; the last vertex is adjacent
/// to the first.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Cycle(Vec<Vertex>);

impl Cycle {
    pub fn new(vertices: Vec<Vertex>) -> Cycle {
        Cycle(vertices)
    }

    pub fn vertices(&self) -> &[Vertex] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn vertex_set(&self) -> VertexSet {
        self.0.iter().collect()
    }

    /// Edges including the closing one.
    pub fn edges(&self) -> impl Iterator<Item = Edge> + '_ {
        let n = self.0.len();
        (0..n).map(move |i| norm(self.0[i], self.0[(i + 1) % n]))
    }

    /// At least three distinct vertices, cyclically consecutive ones adjacent.
    pub fn is_cycle_in(&self, g: &Graph) -> bool {
        self.0.len() >= 3
            && self.vertex_set().len() == self.0.len()
            && self.edges().all(|(u, v)| g.has_edge(u, v))
    }
}

/// A separation `(G1, G2)` given by its two vertex sides.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Separation {
    pub side1: VertexSet,
    pub side2: VertexSet,
}

impl Separation {
    pub fn new(side1: VertexSet, side2: VertexSet) -> Separation {
        Separation { side1, side2 }
    }

    pub fn boundary(&self) -> VertexSet {
        self.side1 & self.side2
    }

    pub fn order(&self) -> usize {
        self.boundary().len()
    }

    /// Sides cover `V(g)` and no edge joins `side1 - boundary` to
    /// `side2 - boundary`.
    pub fn is_separation_of(&self, g: &Graph) -> bool {
        if self.side1 | self.side2 != g.vertices() {
            return false;
        }
        let b = self.boundary();
        let only2 = self.side2 - b;
        (self.side1 - b)
            .iter()
            .all(|v| g.neighbors(v).is_disjoint(only2))
    }
}
