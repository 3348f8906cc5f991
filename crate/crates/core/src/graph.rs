//! Simple undirected graphs with stable vertex and edge indices.
//!
//! Vertices are dense `0..n` indices. Every edge carries the index of its
//! position in the edge list it was built from, so per-edge data (labelings
//! in particular) can live in plain arrays keyed by edge index.

use std::collections::{HashSet, VecDeque};
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

mod edgelist;
mod graph6;

pub use edgelist::{parse_edge_list, to_edge_list};
pub use graph6::{parse_graph6, to_graph6, Graph6Error, MAX_GRAPH6_VERTICES};

pub type Vertex = usize;
pub type EdgeId = usize;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("edge set is empty")]
    EmptyEdgeSet,
    #[error("loop edge at vertex {0}")]
    LoopEdge(Vertex),
    #[error("duplicate edge ({0}, {1})")]
    DuplicateEdge(Vertex, Vertex),
    #[error("vertex {vertex} out of range for a graph with {vertex_count} vertices")]
    InvalidVertex { vertex: Vertex, vertex_count: usize },
    #[error("vertices {0} and {1} are not connected")]
    Unreachable(Vertex, Vertex),
    #[error("graph is not connected")]
    Disconnected,
    #[error("graph has {0} vertices, at most {max} are supported", max = MAX_GRAPH6_VERTICES)]
    TooManyVertices(usize),
    #[error("edge list line {line}: {message}")]
    Parse { line: usize, message: String },
}

/// Sorted set of distinct vertex indices.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct VertexSet(Vec<Vertex>);

impl VertexSet {
    pub fn new() -> Self {
        Self(Vec::new())
    }

    /// Builds a set from arbitrary indices, sorting and removing duplicates.
    pub fn from_unsorted(mut vertices: Vec<Vertex>) -> Self {
        vertices.sort_unstable();
        vertices.dedup();
        Self(vertices)
    }

    pub fn contains(&self, v: Vertex) -> bool {
        self.0.binary_search(&v).is_ok()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn as_slice(&self) -> &[Vertex] {
        &self.0
    }

    pub fn iter(&self) -> std::slice::Iter<'_, Vertex> {
        self.0.iter()
    }

    pub fn into_vec(self) -> Vec<Vertex> {
        self.0
    }

    pub fn is_subset(&self, other: &VertexSet) -> bool {
        self.0.iter().all(|&v| other.contains(v))
    }
}

impl FromIterator<Vertex> for VertexSet {
    fn from_iter<I: IntoIterator<Item = Vertex>>(iter: I) -> Self {
        Self::from_unsorted(iter.into_iter().collect())
    }
}

impl<'a> IntoIterator for &'a VertexSet {
    type Item = &'a Vertex;
    type IntoIter = std::slice::Iter<'a, Vertex>;

    fn into_iter(self) -> Self::IntoIter {
        self.0.iter()
    }
}

impl From<VertexSet> for Vec<Vertex> {
    fn from(set: VertexSet) -> Self {
        set.0
    }
}

/// An undirected simple graph.
///
/// Immutable once built. `adjacency[x]` lists `(neighbor, edge index)`
/// pairs in the order the edges were inserted.
#[derive(Clone, PartialEq, Eq)]
pub struct Graph {
    vertex_count: usize,
    edges: Vec<(Vertex, Vertex)>,
    adjacency: Vec<Vec<(Vertex, EdgeId)>>,
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph")
            .field("vertex_count", &self.vertex_count)
            .field("edges", &self.edges)
            .finish()
    }
}

/// Result of restricting a graph to a vertex subset.
#[derive(Debug, Clone)]
pub struct InducedSubgraph {
    pub graph: Graph,
    /// `vertex_map[i]` is the host index of subgraph vertex `i`.
    pub vertex_map: Vec<Vertex>,
    /// `edge_map[j]` is the host index of subgraph edge `j`.
    pub edge_map: Vec<EdgeId>,
}

impl Graph {
    /// Builds a graph on exactly `vertex_count` vertices. Isolated vertices,
    /// an empty edge set and several components are all allowed here; use
    /// [`Graph::from_edge_list`] or [`Graph::require_host`] for host graphs.
    pub fn with_vertices(
        vertex_count: usize,
        pairs: impl IntoIterator<Item = (Vertex, Vertex)>,
    ) -> Result<Self, GraphError> {
        let mut edges = Vec::new();
        let mut seen = HashSet::new();
        for (u, v) in pairs {
            for w in [u, v] {
                if w >= vertex_count {
                    return Err(GraphError::InvalidVertex { vertex: w, vertex_count });
                }
            }
            if u == v {
                return Err(GraphError::LoopEdge(u));
            }
            if !seen.insert((u.min(v), u.max(v))) {
                return Err(GraphError::DuplicateEdge(u, v));
            }
            edges.push((u, v));
        }
        Ok(Self::from_checked(vertex_count, edges))
    }

    fn from_checked(vertex_count: usize, edges: Vec<(Vertex, Vertex)>) -> Self {
        let mut adjacency = vec![Vec::new(); vertex_count];
        for (e, &(u, v)) in edges.iter().enumerate() {
            adjacency[u].push((v, e));
            adjacency[v].push((u, e));
        }
        Self { vertex_count, edges, adjacency }
    }

    /// Builds a host graph from an edge list. The vertex count is one more
    /// than the largest index mentioned and edge `i` is `pairs[i]`.
    pub fn from_edge_list(pairs: &[(Vertex, Vertex)]) -> Result<Self, GraphError> {
        let n = pairs.iter().map(|&(u, v)| u.max(v) + 1).max().ok_or(GraphError::EmptyEdgeSet)?;
        if n > MAX_GRAPH6_VERTICES {
            return Err(GraphError::TooManyVertices(n));
        }
        let g = Self::with_vertices(n, pairs.iter().copied())?;
        g.require_host()?;
        Ok(g)
    }

    /// Checks the standing assumptions on host graphs: connected, at least
    /// one edge, at most [`MAX_GRAPH6_VERTICES`] vertices.
    pub fn require_host(&self) -> Result<(), GraphError> {
        if self.edges.is_empty() {
            return Err(GraphError::EmptyEdgeSet);
        }
        if self.vertex_count > MAX_GRAPH6_VERTICES {
            return Err(GraphError::TooManyVertices(self.vertex_count));
        }
        if !self.is_connected() {
            return Err(GraphError::Disconnected);
        }
        Ok(())
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(Vertex, Vertex)] {
        &self.edges
    }

    pub fn edge(&self, e: EdgeId) -> (Vertex, Vertex) {
        self.edges[e]
    }

    pub fn vertices(&self) -> std::ops::Range<Vertex> {
        0..self.vertex_count
    }

    /// `(neighbor, edge)` pairs incident with `x`.
    pub fn incident(&self, x: Vertex) -> &[(Vertex, EdgeId)] {
        &self.adjacency[x]
    }

    pub fn neighbors(&self, x: Vertex) -> impl Iterator<Item = Vertex> + '_ {
        self.adjacency[x].iter().map(|&(y, _)| y)
    }

    pub fn edge_between(&self, x: Vertex, y: Vertex) -> Option<EdgeId> {
        self.adjacency
            .get(x)?
            .iter()
            .find(|&&(z, _)| z == y)
            .map(|&(_, e)| e)
    }

    pub fn check_vertex(&self, x: Vertex) -> Result<(), GraphError> {
        if x < self.vertex_count {
            Ok(())
        } else {
            Err(GraphError::InvalidVertex { vertex: x, vertex_count: self.vertex_count })
        }
    }

    pub fn degree(&self, x: Vertex) -> usize {
        self.adjacency[x].len()
    }

    pub fn degrees(&self) -> Vec<usize> {
        self.adjacency.iter().map(Vec::len).collect()
    }

    pub fn max_degree(&self) -> usize {
        self.adjacency.iter().map(Vec::len).max().unwrap_or(0)
    }

    /// Vertices of degree exactly one.
    pub fn leaves(&self) -> VertexSet {
        VertexSet(self.vertices().filter(|&x| self.degree(x) == 1).collect())
    }

    /// Vertices of degree at least two.
    pub fn core_vertices(&self) -> VertexSet {
        VertexSet(self.vertices().filter(|&x| self.degree(x) >= 2).collect())
    }

    /// BFS distances from `source`; `None` marks unreachable vertices.
    pub fn distances_from(&self, source: Vertex) -> Vec<Option<usize>> {
        let mut dist = vec![None; self.vertex_count];
        let mut queue = VecDeque::new();
        dist[source] = Some(0);
        queue.push_back(source);
        while let Some(x) = queue.pop_front() {
            let d = dist[x].unwrap_or_default();
            for &(y, _) in &self.adjacency[x] {
                if dist[y].is_none() {
                    dist[y] = Some(d + 1);
                    queue.push_back(y);
                }
            }
        }
        dist
    }

    pub fn distance(&self, x: Vertex, y: Vertex) -> Result<usize, GraphError> {
        self.check_vertex(x)?;
        self.check_vertex(y)?;
        self.distances_from(x)[y].ok_or(GraphError::Unreachable(x, y))
    }

    /// Shortest path from `x` to `y` as a vertex sequence, both ends included.
    pub fn shortest_path(&self, x: Vertex, y: Vertex) -> Result<Vec<Vertex>, GraphError> {
        self.check_vertex(x)?;
        self.check_vertex(y)?;
        let mut parent = vec![usize::MAX; self.vertex_count];
        let mut queue = VecDeque::from([x]);
        parent[x] = x;
        while let Some(z) = queue.pop_front() {
            if z == y {
                break;
            }
            for &(w, _) in &self.adjacency[z] {
                if parent[w] == usize::MAX {
                    parent[w] = z;
                    queue.push_back(w);
                }
            }
        }
        if parent[y] == usize::MAX {
            return Err(GraphError::Unreachable(x, y));
        }
        let mut path = vec![y];
        let mut z = y;
        while z != x {
            z = parent[z];
            path.push(z);
        }
        path.reverse();
        Ok(path)
    }

    /// Eccentricity of every vertex, by BFS from each vertex.
    pub fn eccentricities(&self) -> Result<Vec<usize>, GraphError> {
        self.vertices()
            .map(|x| {
                let dist = self.distances_from(x);
                dist.iter().enumerate().try_fold(0, |acc, (y, d)| match d {
                    Some(d) => Ok(acc.max(*d)),
                    None => Err(GraphError::Unreachable(x, y)),
                })
            })
            .collect()
    }

    /// Diameter together with every vertex that realizes it against some
    /// other vertex.
    pub fn diameter_and_peripherals(&self) -> Result<(usize, VertexSet), GraphError> {
        if self.vertex_count == 0 {
            return Err(GraphError::Disconnected);
        }
        let ecc = self.eccentricities()?;
        let diam = ecc.iter().copied().max().unwrap_or(0);
        let peripherals = self.vertices().filter(|&x| ecc[x] == diam).collect();
        Ok((diam, VertexSet(peripherals)))
    }

    pub fn diameter(&self) -> Result<usize, GraphError> {
        self.diameter_and_peripherals().map(|(d, _)| d)
    }

    pub fn is_connected(&self) -> bool {
        self.vertex_count == 0 || self.distances_from(0).iter().all(Option::is_some)
    }

    /// Connected components, each sorted, ordered by least member.
    pub fn components(&self) -> Vec<VertexSet> {
        let mut seen = vec![false; self.vertex_count];
        let mut out = Vec::new();
        for start in self.vertices() {
            if seen[start] {
                continue;
            }
            seen[start] = true;
            let mut stack = vec![start];
            let mut members = Vec::new();
            while let Some(x) = stack.pop() {
                members.push(x);
                for &(y, _) in &self.adjacency[x] {
                    if !seen[y] {
                        seen[y] = true;
                        stack.push(y);
                    }
                }
            }
            out.push(VertexSet::from_unsorted(members));
        }
        out
    }

    /// True iff every component has exactly one edge fewer than vertices.
    pub fn is_forest(&self) -> bool {
        self.edges.len() + self.components().len() == self.vertex_count
    }

    pub fn is_tree(&self) -> bool {
        self.vertex_count > 0 && self.edges.len() + 1 == self.vertex_count && self.is_connected()
    }

    /// Restricts the graph to `subset`. Edges keep their relative host order.
    pub fn induced_subgraph(&self, subset: &[Vertex]) -> Result<InducedSubgraph, GraphError> {
        let mut local = vec![usize::MAX; self.vertex_count];
        let mut vertex_map = Vec::with_capacity(subset.len());
        for &x in subset {
            self.check_vertex(x)?;
            if local[x] == usize::MAX {
                local[x] = vertex_map.len();
                vertex_map.push(x);
            }
        }
        let mut edges = Vec::new();
        let mut edge_map = Vec::new();
        for (e, &(u, v)) in self.edges.iter().enumerate() {
            if local[u] != usize::MAX && local[v] != usize::MAX {
                edges.push((local[u], local[v]));
                edge_map.push(e);
            }
        }
        Ok(InducedSubgraph {
            graph: Self::from_checked(vertex_map.len(), edges),
            vertex_map,
            edge_map,
        })
    }

    /// The path `0 - 1 - ... - (n-1)`.
    pub fn path(n: usize) -> Self {
        Self::from_checked(n, (1..n).map(|i| (i - 1, i)).collect())
    }

    /// The cycle on `n >= 3` vertices, edges `(i, i+1 mod n)` in order.
    pub fn cycle(n: usize) -> Self {
        assert!(n >= 3, "a cycle needs at least three vertices");
        Self::from_checked(n, (0..n).map(|i| (i, (i + 1) % n)).collect())
    }

    /// The complete graph, edges in graph6 (column-major) order.
    pub fn complete(n: usize) -> Self {
        Self::from_checked(n, (1..n).flat_map(|j| (0..j).map(move |i| (i, j))).collect())
    }

    /// The star with centre 0 and `leaves` leaves `1..=leaves`.
    pub fn star(leaves: usize) -> Self {
        Self::from_checked(leaves + 1, (1..=leaves).map(|i| (0, i)).collect())
    }

    /// Two `n`-cycles `0..n` and `n..2n` joined by the rungs `(i, n+i)`.
    pub fn prism(n: usize) -> Self {
        let mut edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        edges.extend((0..n).map(|i| (n + i, n + (i + 1) % n)));
        edges.extend((0..n).map(|i| (i, n + i)));
        Self::from_checked(2 * n, edges)
    }

    /// Outer 5-cycle `0..5`, inner pentagram `5..10`, spokes `(i, i+5)`.
    pub fn petersen() -> Self {
        let mut edges: Vec<_> = (0..5).map(|i| (i, (i + 1) % 5)).collect();
        edges.extend((0..5).map(|i| (5 + i, 5 + (i + 2) % 5)));
        edges.extend((0..5).map(|i| (i, i + 5)));
        Self::from_checked(10, edges)
    }
}
