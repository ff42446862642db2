//! Finite graphs with half-edge bookkeeping.
//!
//! [`MultiGraph`] allows loops and parallel edges and is used for vertex
//! links, Whitehead graphs and the underlying graph of a complex.
//! [`SimplicialGraph`] is the loop-free, multi-edge-free restriction used for
//! vertex graphs. Vertex and edge ids are dense `usize` indices and every
//! iteration in this crate walks them in ascending order.

mod iso;
mod lowlink;
mod prune;

pub use iso::{colored_isomorphic, isomorphic};
pub use lowlink::{articulation_points, bridges, connected_components};
pub use prune::{prune_hanging_trees, Pruned};

use std::collections::BTreeSet;

use serde::Serialize;
use thiserror::Error;

pub type VertexId = usize;
pub type EdgeId = usize;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("edge {edge} has endpoint {vertex} but the graph has {vertex_count} vertices")]
    VertexOutOfRange {
        edge: EdgeId,
        vertex: VertexId,
        vertex_count: usize,
    },
    #[error("edge {edge} is a loop at vertex {vertex}")]
    Loop { edge: EdgeId, vertex: VertexId },
    #[error("edge {edge} duplicates edge {first} between {a} and {b}")]
    MultiEdge {
        edge: EdgeId,
        first: EdgeId,
        a: VertexId,
        b: VertexId,
    },
}

/// Which end of a stored edge `[tail, head]` a half-edge sits at.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum End {
    Tail,
    Head,
}

impl End {
    pub fn index(self) -> usize {
        match self {
            End::Tail => 0,
            End::Head => 1,
        }
    }

    pub fn opposite(self) -> End {
        match self {
            End::Tail => End::Head,
            End::Head => End::Tail,
        }
    }
}

/// One of the two directed sides of an edge, anchored at one endpoint.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct HalfEdge {
    pub edge: EdgeId,
    pub end: End,
}

/// Graph with loops and parallel edges permitted.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct MultiGraph {
    edges: Vec<[VertexId; 2]>,
    // (neighbor, edge) in ascending edge order; a loop appears twice.
    adjacency: Vec<Vec<(VertexId, EdgeId)>>,
}

impl MultiGraph {
    pub fn new(vertex_count: usize) -> Self {
        MultiGraph {
            edges: Vec::new(),
            adjacency: vec![Vec::new(); vertex_count],
        }
    }

    /// Builds a graph from an edge list. Panics on out-of-range endpoints.
    pub fn from_edges(vertex_count: usize, edges: &[[VertexId; 2]]) -> Self {
        let mut g = MultiGraph::new(vertex_count);
        for &[a, b] in edges {
            g.add_edge(a, b);
        }
        g
    }

    pub fn add_vertex(&mut self) -> VertexId {
        self.adjacency.push(Vec::new());
        self.adjacency.len() - 1
    }

    pub fn add_edge(&mut self, a: VertexId, b: VertexId) -> EdgeId {
        assert!(
            a < self.vertex_count() && b < self.vertex_count(),
            "edge endpoint out of range"
        );
        let id = self.edges.len();
        self.edges.push([a, b]);
        self.adjacency[a].push((b, id));
        self.adjacency[b].push((a, id));
        id
    }

    pub fn vertex_count(&self) -> usize {
        self.adjacency.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[[VertexId; 2]] {
        &self.edges
    }

    pub fn endpoints(&self, e: EdgeId) -> [VertexId; 2] {
        self.edges[e]
    }

    pub fn neighbors(&self, v: VertexId) -> &[(VertexId, EdgeId)] {
        &self.adjacency[v]
    }

    /// Number of half-edges at `v`; a loop counts twice.
    pub fn degree(&self, v: VertexId) -> usize {
        self.adjacency[v].len()
    }

    pub fn half_edge_count(&self) -> usize {
        self.adjacency.iter().map(Vec::len).sum()
    }

    /// Copy of the graph with the vertices in `removed` deleted, vertex ids
    /// compacted. Returns the graph and the old-to-new vertex map.
    pub fn without_vertices(&self, removed: &BTreeSet<VertexId>) -> (MultiGraph, Vec<Option<VertexId>>) {
        let mut map = vec![None; self.vertex_count()];
        let mut next = 0;
        for (v, slot) in map.iter_mut().enumerate() {
            if !removed.contains(&v) {
                *slot = Some(next);
                next += 1;
            }
        }
        let mut g = MultiGraph::new(next);
        for &[a, b] in &self.edges {
            if let (Some(x), Some(y)) = (map[a], map[b]) {
                g.add_edge(x, y);
            }
        }
        (g, map)
    }

    /// Copy of the graph with the listed edges deleted (vertices kept).
    pub fn without_edges(&self, removed: &BTreeSet<EdgeId>) -> MultiGraph {
        let mut g = MultiGraph::new(self.vertex_count());
        for (e, &[a, b]) in self.edges.iter().enumerate() {
            if !removed.contains(&e) {
                g.add_edge(a, b);
            }
        }
        g
    }

    pub fn is_connected(&self) -> bool {
        connected_components(self).len() <= 1
    }
}

/// Finite graph without loops or parallel edges.
///
/// Each edge is stored with an orientation `[tail, head]`; attaching walks
/// refer to edges with a direction relative to this orientation.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct SimplicialGraph {
    inner: MultiGraph,
}

impl SimplicialGraph {
    pub fn new(vertex_count: usize, edges: &[[VertexId; 2]]) -> Result<Self, GraphError> {
        let mut g = SimplicialGraph {
            inner: MultiGraph::new(vertex_count),
        };
        for &[a, b] in edges {
            g.try_add_edge(a, b)?;
        }
        Ok(g)
    }

    /// A simple cycle `0 -> 1 -> ... -> len-1 -> 0`, `len >= 3`.
    pub fn cycle(len: usize) -> Self {
        assert!(len >= 3, "a simplicial cycle needs at least 3 vertices");
        let edges: Vec<_> = (0..len).map(|i| [i, (i + 1) % len]).collect();
        SimplicialGraph::new(len, &edges).expect("cycle is simplicial")
    }

    pub fn point() -> Self {
        SimplicialGraph {
            inner: MultiGraph::new(1),
        }
    }

    pub fn add_vertex(&mut self) -> VertexId {
        self.inner.add_vertex()
    }

    pub fn try_add_edge(&mut self, a: VertexId, b: VertexId) -> Result<EdgeId, GraphError> {
        let edge = self.inner.edge_count();
        let n = self.inner.vertex_count();
        for v in [a, b] {
            if v >= n {
                return Err(GraphError::VertexOutOfRange {
                    edge,
                    vertex: v,
                    vertex_count: n,
                });
            }
        }
        if a == b {
            return Err(GraphError::Loop { edge, vertex: a });
        }
        if let Some(first) = self.edge_between(a, b) {
            return Err(GraphError::MultiEdge { edge, first, a, b });
        }
        Ok(self.inner.add_edge(a, b))
    }

    pub fn edge_between(&self, a: VertexId, b: VertexId) -> Option<EdgeId> {
        self.inner
            .neighbors(a)
            .iter()
            .find(|&&(w, _)| w == b)
            .map(|&(_, e)| e)
    }

    pub fn as_multigraph(&self) -> &MultiGraph {
        &self.inner
    }

    pub fn vertex_count(&self) -> usize {
        self.inner.vertex_count()
    }

    pub fn edge_count(&self) -> usize {
        self.inner.edge_count()
    }

    pub fn edges(&self) -> &[[VertexId; 2]] {
        self.inner.edges()
    }

    pub fn endpoints(&self, e: EdgeId) -> [VertexId; 2] {
        self.inner.endpoints(e)
    }

    pub fn degree(&self, v: VertexId) -> usize {
        self.inner.degree(v)
    }

    pub fn neighbors(&self, v: VertexId) -> &[(VertexId, EdgeId)] {
        self.inner.neighbors(v)
    }

    pub fn anchor(&self, h: HalfEdge) -> VertexId {
        self.inner.endpoints(h.edge)[h.end.index()]
    }

    /// Half-edges anchored at `v`, in ascending (edge, end) order.
    pub fn half_edges_at(&self, v: VertexId) -> Vec<HalfEdge> {
        let mut out: Vec<HalfEdge> = self
            .inner
            .neighbors(v)
            .iter()
            .map(|&(_, e)| {
                let end = if self.inner.endpoints(e)[0] == v {
                    End::Tail
                } else {
                    End::Head
                };
                HalfEdge { edge: e, end }
            })
            .collect();
        out.sort();
        out
    }

    pub fn is_connected(&self) -> bool {
        self.inner.is_connected()
    }

    /// True iff the graph is a single simple cycle.
    pub fn is_circle(&self) -> bool {
        self.vertex_count() >= 3
            && self.edge_count() == self.vertex_count()
            && (0..self.vertex_count()).all(|v| self.degree(v) == 2)
            && self.is_connected()
    }

    pub fn euler_characteristic(&self) -> i64 {
        self.vertex_count() as i64 - self.edge_count() as i64
    }
}
