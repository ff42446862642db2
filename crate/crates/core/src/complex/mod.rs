//! Tubular graphs of graphs.
//!
//! A [`TubularComplex`] is a list of vertex graphs (finite connected
//! simplicial graphs) and a list of tubes. Each tube is a circle of
//! `circle_len` edges whose two ends are attached to vertex graphs by closed
//! immersed walks of the same length. The geometric realisation is a
//! nonpositively curved VH square complex: vertex-graph edges are vertical,
//! each circle vertex contributes one horizontal edge, and each circle edge
//! contributes one square.

mod flat;
mod homology;
mod iso;
mod link;
mod validate;

pub(crate) use flat::Flat;
pub use link::{Corner, LinkGraph, LinkVertex};
pub use validate::{ValidationReport, Violation};

use std::collections::BTreeSet;
use std::fmt;

use thiserror::Error;

use crate::graph::{EdgeId, End, HalfEdge, MultiGraph, SimplicialGraph, VertexId};

pub type GraphId = usize;
pub type TubeId = usize;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ComplexError {
    #[error("tube {tube} end {side} targets vertex graph {graph}, but there are {graph_count}")]
    GraphIndex {
        tube: TubeId,
        side: usize,
        graph: GraphId,
        graph_count: usize,
    },
    #[error("tube {tube} end {side} step {position} uses edge {edge}, but vertex graph {graph} has {edge_count} edges")]
    EdgeIndex {
        tube: TubeId,
        side: usize,
        position: usize,
        graph: GraphId,
        edge: EdgeId,
        edge_count: usize,
    },
    #[error("unknown vertex graph {0}")]
    UnknownGraph(GraphId),
    #[error("vertex graph {graph} has no edge {edge}")]
    UnknownEdge { graph: GraphId, edge: EdgeId },
    #[error("vertex graph {graph} has no vertex {vertex}")]
    UnknownVertex { graph: GraphId, vertex: VertexId },
    #[error("complex is not a valid tubular graph of graphs:\n{0}")]
    Invalid(ValidationReport),
}

/// An edge of a vertex graph traversed in a given direction.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Step {
    pub edge: EdgeId,
    pub forward: bool,
}

impl Step {
    pub fn forward(edge: EdgeId) -> Step {
        Step { edge, forward: true }
    }

    pub fn backward(edge: EdgeId) -> Step {
        Step { edge, forward: false }
    }

    pub fn reversed(self) -> Step {
        Step {
            edge: self.edge,
            forward: !self.forward,
        }
    }

    pub fn tail(self, g: &SimplicialGraph) -> VertexId {
        g.anchor(self.tail_half_edge())
    }

    pub fn head(self, g: &SimplicialGraph) -> VertexId {
        g.anchor(self.head_half_edge())
    }

    /// Half-edge at the vertex the step leaves.
    pub fn tail_half_edge(self) -> HalfEdge {
        let end = if self.forward { End::Tail } else { End::Head };
        HalfEdge { edge: self.edge, end }
    }

    /// Half-edge at the vertex the step enters.
    pub fn head_half_edge(self) -> HalfEdge {
        self.tail_half_edge().opposite()
    }
}

impl HalfEdge {
    pub fn opposite(self) -> HalfEdge {
        HalfEdge {
            edge: self.edge,
            end: self.end.opposite(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct VertexGraph {
    pub name: String,
    pub graph: SimplicialGraph,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct TubeEnd {
    pub graph: GraphId,
    pub walk: Vec<Step>,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Tube {
    pub circle_len: usize,
    pub ends: [TubeEnd; 2],
}

impl Tube {
    /// Tube whose two ends follow `walk0` and `walk1`.
    pub fn new(graph0: GraphId, walk0: Vec<Step>, graph1: GraphId, walk1: Vec<Step>) -> Tube {
        Tube {
            circle_len: walk0.len(),
            ends: [
                TubeEnd {
                    graph: graph0,
                    walk: walk0,
                },
                TubeEnd {
                    graph: graph1,
                    walk: walk1,
                },
            ],
        }
    }

    pub fn is_loop(&self) -> bool {
        self.ends[0].graph == self.ends[1].graph
    }
}

/// Cell counts of the square-complex realisation.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Hash, serde::Serialize)]
pub struct CellCounts {
    pub vertices: usize,
    pub vertical_edges: usize,
    pub horizontal_edges: usize,
    pub squares: usize,
}

impl std::ops::Add for CellCounts {
    type Output = CellCounts;

    fn add(self, o: CellCounts) -> CellCounts {
        CellCounts {
            vertices: self.vertices + o.vertices,
            vertical_edges: self.vertical_edges + o.vertical_edges,
            horizontal_edges: self.horizontal_edges + o.horizontal_edges,
            squares: self.squares + o.squares,
        }
    }
}

impl CellCounts {
    pub fn euler_characteristic(&self) -> i64 {
        self.vertices as i64 - (self.vertical_edges + self.horizontal_edges) as i64
            + self.squares as i64
    }
}

/// A vertical edge named by its vertex graph and edge id.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, serde::Serialize)]
pub struct EdgeRef {
    pub graph: GraphId,
    pub edge: EdgeId,
}

/// A vertex named by its vertex graph and vertex id.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, serde::Serialize)]
pub struct VertexRef {
    pub graph: GraphId,
    pub vertex: VertexId,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct TubularComplex {
    graphs: Vec<VertexGraph>,
    tubes: Vec<Tube>,
}

impl TubularComplex {
    /// Checks that every index is in range. Geometric conditions are left to
    /// [`TubularComplex::validate`].
    pub fn new(graphs: Vec<VertexGraph>, tubes: Vec<Tube>) -> Result<Self, ComplexError> {
        for (t, tube) in tubes.iter().enumerate() {
            for (side, end) in tube.ends.iter().enumerate() {
                let Some(vg) = graphs.get(end.graph) else {
                    return Err(ComplexError::GraphIndex {
                        tube: t,
                        side,
                        graph: end.graph,
                        graph_count: graphs.len(),
                    });
                };
                for (position, step) in end.walk.iter().enumerate() {
                    if step.edge >= vg.graph.edge_count() {
                        return Err(ComplexError::EdgeIndex {
                            tube: t,
                            side,
                            position,
                            graph: end.graph,
                            edge: step.edge,
                            edge_count: vg.graph.edge_count(),
                        });
                    }
                }
            }
        }
        Ok(TubularComplex { graphs, tubes })
    }

    /// Like [`TubularComplex::new`] but also requires a valid complex.
    pub fn new_valid(graphs: Vec<VertexGraph>, tubes: Vec<Tube>) -> Result<Self, ComplexError> {
        let c = TubularComplex::new(graphs, tubes)?;
        c.ensure_valid()?;
        Ok(c)
    }

    /// A single graph with no tubes.
    pub fn from_graph(name: &str, graph: SimplicialGraph) -> Self {
        TubularComplex {
            graphs: vec![VertexGraph {
                name: name.to_string(),
                graph,
            }],
            tubes: Vec::new(),
        }
    }

    pub fn ensure_valid(&self) -> Result<(), ComplexError> {
        let report = self.validate();
        if report.is_empty() {
            Ok(())
        } else {
            Err(ComplexError::Invalid(report))
        }
    }

    pub fn graphs(&self) -> &[VertexGraph] {
        &self.graphs
    }

    pub fn graph(&self, s: GraphId) -> &SimplicialGraph {
        &self.graphs[s].graph
    }

    pub fn tubes(&self) -> &[Tube] {
        &self.tubes
    }

    pub fn into_parts(self) -> (Vec<VertexGraph>, Vec<Tube>) {
        (self.graphs, self.tubes)
    }

    /// The underlying graph: one vertex per vertex graph, one edge per tube.
    pub fn underlying(&self) -> MultiGraph {
        let mut g = MultiGraph::new(self.graphs.len());
        for tube in &self.tubes {
            g.add_edge(tube.ends[0].graph, tube.ends[1].graph);
        }
        g
    }

    pub fn square_count(&self) -> usize {
        self.tubes.iter().map(|t| t.circle_len).sum()
    }

    pub fn vertical_edge_count(&self) -> usize {
        self.graphs.iter().map(|g| g.graph.edge_count()).sum()
    }

    pub fn cell_counts(&self) -> CellCounts {
        CellCounts {
            vertices: self.graphs.iter().map(|g| g.graph.vertex_count()).sum(),
            vertical_edges: self.vertical_edge_count(),
            horizontal_edges: self.square_count(),
            squares: self.square_count(),
        }
    }

    /// Vertical edges in ascending (graph, edge) order.
    pub fn vertical_edges(&self) -> impl Iterator<Item = EdgeRef> + '_ {
        self.graphs.iter().enumerate().flat_map(|(graph, vg)| {
            (0..vg.graph.edge_count()).map(move |edge| EdgeRef { graph, edge })
        })
    }

    /// Vertices in ascending (graph, vertex) order.
    pub fn vertices(&self) -> impl Iterator<Item = VertexRef> + '_ {
        self.graphs.iter().enumerate().flat_map(|(graph, vg)| {
            (0..vg.graph.vertex_count()).map(move |vertex| VertexRef { graph, vertex })
        })
    }

    /// Number of squares containing each vertical edge, indexed `[graph][edge]`.
    pub fn thickness_table(&self) -> Vec<Vec<usize>> {
        let mut table: Vec<Vec<usize>> = self
            .graphs
            .iter()
            .map(|g| vec![0; g.graph.edge_count()])
            .collect();
        for tube in &self.tubes {
            for end in &tube.ends {
                for step in &end.walk {
                    table[end.graph][step.edge] += 1;
                }
            }
        }
        table
    }

    /// Number of squares containing a vertical edge.
    pub fn thickness(&self, e: EdgeRef) -> Result<usize, ComplexError> {
        let vg = self.graphs.get(e.graph).ok_or(ComplexError::UnknownGraph(e.graph))?;
        if e.edge >= vg.graph.edge_count() {
            return Err(ComplexError::UnknownEdge {
                graph: e.graph,
                edge: e.edge,
            });
        }
        Ok(self
            .tubes
            .iter()
            .flat_map(|t| t.ends.iter())
            .filter(|end| end.graph == e.graph)
            .map(|end| end.walk.iter().filter(|s| s.edge == e.edge).count())
            .sum())
    }

    /// Thickness of the horizontal edge over circle vertex `position` of
    /// `tube`; always two in a valid complex.
    pub fn horizontal_thickness(&self, tube: TubeId, position: usize) -> usize {
        let len = self.tubes[tube].circle_len;
        (0..len)
            .filter(|&i| i == position || (i + 1) % len == position)
            .count()
    }

    /// Vertices lying on some attaching walk, per vertex graph.
    pub fn walk_vertices(&self) -> Vec<BTreeSet<VertexId>> {
        let mut out = vec![BTreeSet::new(); self.graphs.len()];
        for tube in &self.tubes {
            for end in &tube.ends {
                let g = self.graph(end.graph);
                for step in &end.walk {
                    out[end.graph].insert(step.tail(g));
                    out[end.graph].insert(step.head(g));
                }
            }
        }
        out
    }

    /// Euler characteristic of the realisation, `V - E + F`.
    pub fn euler_characteristic(&self) -> i64 {
        self.cell_counts().euler_characteristic()
    }

    /// Canonical name not already used by a vertex graph.
    pub(crate) fn fresh_name(names: &BTreeSet<String>, base: &str) -> String {
        if !names.contains(base) {
            return base.to_string();
        }
        (1..)
            .map(|k| format!("{base}.{k}"))
            .find(|n| !names.contains(n))
            .expect("unbounded suffixes")
    }
}

impl fmt::Display for TubularComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let c = self.cell_counts();
        write!(
            f,
            "{} vertex graphs, {} tubes, {} vertices, {} vertical edges, {} squares",
            self.graphs.len(),
            self.tubes.len(),
            c.vertices,
            c.vertical_edges,
            c.squares
        )
    }
}

/// Small complexes used throughout the tests and examples.
pub mod fixtures {
    use super::*;

    fn identity_walk(len: usize) -> Vec<Step> {
        (0..len).map(Step::forward).collect()
    }

    /// The torus: a 3-cycle with one loop tube attached by the identity on
    /// both ends.
    pub fn torus() -> TubularComplex {
        TubularComplex::new(
            vec![VertexGraph {
                name: "s".into(),
                graph: SimplicialGraph::cycle(3),
            }],
            vec![Tube::new(0, identity_walk(3), 0, identity_walk(3))],
        )
        .expect("indices in range")
    }

    /// Two 3-cycles sharing vertex 0, each carrying its own identity tube.
    pub fn wedge_of_tori() -> TubularComplex {
        // triangle 0-1-2 and triangle 0-3-4
        let g = SimplicialGraph::new(5, &[[0, 1], [1, 2], [2, 0], [0, 3], [3, 4], [4, 0]])
            .expect("simplicial");
        let first = identity_walk(3);
        let second: Vec<Step> = (3..6).map(Step::forward).collect();
        TubularComplex::new(
            vec![VertexGraph {
                name: "s".into(),
                graph: g,
            }],
            vec![
                Tube::new(0, first.clone(), 0, first),
                Tube::new(0, second.clone(), 0, second),
            ],
        )
        .expect("indices in range")
    }

    /// A bare 3-cycle.
    pub fn three_cycle() -> TubularComplex {
        TubularComplex::from_graph("s", SimplicialGraph::cycle(3))
    }
}
