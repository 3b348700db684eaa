//! Finite simple graphs and the local 2-ball view the curvature computation
//! consumes.
//!
//! Vertex labels are opaque strings. Vertex order is first-appearance order,
//! which fixes the coordinate order of every matrix built downstream, so the
//! same input always produces the same matrices.

use indexmap::{IndexMap, IndexSet};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GraphError {
    #[error("line {line}: expected two whitespace-separated labels, got {found:?}")]
    Parse { line: usize, found: String },
    #[error("self-loop at vertex {vertex:?}")]
    SelfLoop { vertex: String },
    #[error("unknown vertex {vertex:?}")]
    UnknownVertex { vertex: String },
    #[error("vertex {vertex:?} is isolated (degree 0); curvature is undefined there")]
    IsolatedVertex { vertex: String },
}

/// Finite simple undirected graph.
///
/// Invariants maintained by construction: no self-loops, no parallel edges,
/// and `v ∈ adjacency(u) ⟺ u ∈ adjacency(v)`.
#[derive(Debug, Clone, Default)]
pub struct Graph {
    adjacency: IndexMap<String, IndexSet<String>>,
}

impl Graph {
    pub fn new() -> Self {
        Graph::default()
    }

    /// Insert a vertex without edges. No-op if the label is already present.
    pub fn add_vertex(&mut self, label: &str) {
        self.adjacency.entry(label.to_owned()).or_default();
    }

    /// Insert an undirected edge, creating endpoints as needed.
    /// Duplicate edges are merged silently.
    pub fn add_edge(&mut self, u: &str, v: &str) -> Result<(), GraphError> {
        if u == v {
            return Err(GraphError::SelfLoop {
                vertex: u.to_owned(),
            });
        }
        self.adjacency
            .entry(u.to_owned())
            .or_default()
            .insert(v.to_owned());
        self.adjacency
            .entry(v.to_owned())
            .or_default()
            .insert(u.to_owned());
        Ok(())
    }

    /// Build a graph from a slice of edges. Panics on self-loops, so it is
    /// meant for programmatic construction with known-good labels.
    pub fn from_edges<'a>(edges: impl IntoIterator<Item = (&'a str, &'a str)>) -> Self {
        let mut g = Graph::new();
        for (u, v) in edges {
            g.add_edge(u, v).expect("edge endpoints must be distinct");
        }
        g
    }

    /// Parse the edge-list format: one edge per line as two whitespace-separated
    /// labels; blank lines and lines starting with `#` are ignored.
    pub fn from_edge_list(text: &str) -> Result<Self, GraphError> {
        let mut g = Graph::new();
        for (idx, raw) in text.lines().enumerate() {
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let mut tokens = line.split_whitespace();
            let (u, v) = match (tokens.next(), tokens.next(), tokens.next()) {
                (Some(u), Some(v), None) => (u, v),
                _ => {
                    return Err(GraphError::Parse {
                        line: idx + 1,
                        found: line.to_owned(),
                    })
                }
            };
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    /// Serialize to the edge-list format. Each edge is emitted once, at the
    /// endpoint that appears first in vertex order. Isolated vertices are not
    /// representable in this format and are skipped.
    pub fn to_edge_list(&self) -> String {
        let mut out = String::new();
        for (u, neighbors) in &self.adjacency {
            for v in neighbors {
                if self.index_of(u) < self.index_of(v) {
                    out.push_str(u);
                    out.push(' ');
                    out.push_str(v);
                    out.push('\n');
                }
            }
        }
        out
    }

    fn index_of(&self, v: &str) -> usize {
        self.adjacency.get_index_of(v).expect("vertex is present")
    }

    pub fn vertex_count(&self) -> usize {
        self.adjacency.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adjacency.values().map(IndexSet::len).sum::<usize>() / 2
    }

    /// Vertex labels in first-appearance order.
    pub fn vertices(&self) -> impl ExactSizeIterator<Item = &str> {
        self.adjacency.keys().map(String::as_str)
    }

    pub fn contains_vertex(&self, v: &str) -> bool {
        self.adjacency.contains_key(v)
    }

    pub fn has_edge(&self, u: &str, v: &str) -> bool {
        self.adjacency.get(u).is_some_and(|n| n.contains(v))
    }

    /// Neighbors of `v` in insertion order.
    pub fn neighbors(&self, v: &str) -> Result<impl Iterator<Item = &str>, GraphError> {
        self.adjacency
            .get(v)
            .map(|n| n.iter().map(String::as_str))
            .ok_or_else(|| GraphError::UnknownVertex {
                vertex: v.to_owned(),
            })
    }

    pub fn degree(&self, v: &str) -> Result<usize, GraphError> {
        self.adjacency
            .get(v)
            .map(IndexSet::len)
            .ok_or_else(|| GraphError::UnknownVertex {
                vertex: v.to_owned(),
            })
    }

    /// Extract the 2-ball around `x`, dropping edges that lie entirely inside
    /// the 2-sphere. Those edges do not enter the curvature at `x`; dropping
    /// them here is what makes that irrelevance testable.
    pub fn two_ball(&self, x: &str) -> Result<LocalBall, GraphError> {
        self.ball_around(x, false)
    }

    /// Like [`Graph::two_ball`], but keeps edges with both endpoints in the
    /// 2-sphere, i.e. the full subgraph induced on the 2-ball. Exists so the
    /// irrelevance of those edges can be checked against the canonical view.
    pub fn induced_two_ball(&self, x: &str) -> Result<LocalBall, GraphError> {
        self.ball_around(x, true)
    }

    fn ball_around(&self, x: &str, keep_s2_edges: bool) -> Result<LocalBall, GraphError> {
        let center_adj = self
            .adjacency
            .get(x)
            .ok_or_else(|| GraphError::UnknownVertex {
                vertex: x.to_owned(),
            })?;
        if center_adj.is_empty() {
            return Err(GraphError::IsolatedVertex {
                vertex: x.to_owned(),
            });
        }

        let s1: Vec<String> = center_adj.iter().cloned().collect();
        let mut s2: Vec<String> = Vec::new();
        for u in &s1 {
            for w in &self.adjacency[u] {
                if w != x && !center_adj.contains(w) && !s2.iter().any(|v| v == w) {
                    s2.push(w.clone());
                }
            }
        }

        let mut edges: IndexSet<(String, String)> = IndexSet::new();
        let push_edges_of = |edges: &mut IndexSet<(String, String)>, v: &str| {
            for w in &self.adjacency[v] {
                edges.insert(ordered_pair(v, w));
            }
        };
        push_edges_of(&mut edges, x);
        for u in &s1 {
            push_edges_of(&mut edges, u);
        }
        if keep_s2_edges {
            for w in &s2 {
                for w2 in &self.adjacency[w] {
                    if s2.iter().any(|v| v == w2) {
                        edges.insert(ordered_pair(w, w2));
                    }
                }
            }
        }

        Ok(LocalBall::from_parts(x.to_owned(), s1, s2, edges))
    }
}

fn ordered_pair(u: &str, v: &str) -> (String, String) {
    if u <= v {
        (u.to_owned(), v.to_owned())
    } else {
        (v.to_owned(), u.to_owned())
    }
}

/// The 2-ball around a center vertex: the center, its 1-sphere and 2-sphere,
/// and every ball edge incident to the 1-ball.
///
/// Built by [`Graph::two_ball`]; immutable afterwards, so it can be shared
/// freely across threads.
#[derive(Debug, Clone)]
pub struct LocalBall {
    center: String,
    s1: Vec<String>,
    s2: Vec<String>,
    edges: IndexSet<(String, String)>,
    adjacency: IndexMap<String, IndexSet<String>>,
}

impl LocalBall {
    fn from_parts(
        center: String,
        s1: Vec<String>,
        s2: Vec<String>,
        edges: IndexSet<(String, String)>,
    ) -> Self {
        let mut adjacency: IndexMap<String, IndexSet<String>> = IndexMap::new();
        adjacency.entry(center.clone()).or_default();
        for v in s1.iter().chain(&s2) {
            adjacency.entry(v.clone()).or_default();
        }
        for (u, v) in &edges {
            adjacency[u].insert(v.clone());
            adjacency[v].insert(u.clone());
        }
        LocalBall {
            center,
            s1,
            s2,
            edges,
            adjacency,
        }
    }

    pub fn center(&self) -> &str {
        &self.center
    }

    /// Vertices at distance exactly 1 from the center.
    pub fn s1(&self) -> &[String] {
        &self.s1
    }

    /// Vertices at distance exactly 2 from the center.
    pub fn s2(&self) -> &[String] {
        &self.s2
    }

    /// All ball vertices: center, then the 1-sphere, then the 2-sphere.
    pub fn vertices(&self) -> impl Iterator<Item = &str> {
        std::iter::once(self.center.as_str())
            .chain(self.s1.iter().map(String::as_str))
            .chain(self.s2.iter().map(String::as_str))
    }

    /// Coordinate vertices for the quadratic forms: 1-sphere then 2-sphere
    /// (the center is pinned to 0 and carries no coordinate).
    pub fn coordinates(&self) -> impl Iterator<Item = &str> {
        self.s1
            .iter()
            .map(String::as_str)
            .chain(self.s2.iter().map(String::as_str))
    }

    pub fn contains(&self, v: &str) -> bool {
        self.adjacency.contains_key(v)
    }

    /// True for the center and 1-sphere: the vertices whose full neighborhood
    /// lies inside the ball, so Δ and Γ are well-defined there.
    pub fn in_core(&self, v: &str) -> bool {
        v == self.center || self.s1.iter().any(|u| u == v)
    }

    pub fn edges(&self) -> impl ExactSizeIterator<Item = (&str, &str)> {
        self.edges.iter().map(|(u, v)| (u.as_str(), v.as_str()))
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Neighbors of `v` within the ball's edge set.
    pub fn neighbors(&self, v: &str) -> impl Iterator<Item = &str> {
        self.adjacency
            .get(v)
            .into_iter()
            .flat_map(|n| n.iter().map(String::as_str))
    }
}
