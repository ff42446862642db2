use std::fmt;

use serde::Serialize;

use super::{Corner, GraphId, LinkVertex, TubeId, TubularComplex};
use crate::graph::{HalfEdge, VertexId};

/// A violated condition together with where it was found.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Violation {
    EmptyVertexGraph {
        graph: GraphId,
    },
    VertexGraphDisconnected {
        graph: GraphId,
    },
    UnderlyingDisconnected {
        components: usize,
    },
    CircleTooShort {
        tube: TubeId,
        circle_len: usize,
    },
    WalkLength {
        tube: TubeId,
        side: usize,
        circle_len: usize,
        walk_len: usize,
    },
    /// The step at `position` does not end where the next one starts.
    WalkNotClosed {
        tube: TubeId,
        side: usize,
        position: usize,
    },
    /// The step after `position` backtracks along the same edge.
    NotImmersion {
        tube: TubeId,
        side: usize,
        position: usize,
    },
    Bigon {
        graph: GraphId,
        vertex: VertexId,
        vertical: HalfEdge,
        horizontal: Corner,
    },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::EmptyVertexGraph { graph } => write!(f, "vertex graph {graph} has no vertices"),
            Violation::VertexGraphDisconnected { graph } => {
                write!(f, "vertex graph {graph} is disconnected")
            }
            Violation::UnderlyingDisconnected { components } => {
                write!(f, "underlying graph has {components} components")
            }
            Violation::CircleTooShort { tube, circle_len } => {
                write!(f, "tube {tube}: circle length {circle_len} < 3")
            }
            Violation::WalkLength {
                tube,
                side,
                circle_len,
                walk_len,
            } => write!(
                f,
                "tube {tube} end {side}: walk has {walk_len} steps, circle has {circle_len}"
            ),
            Violation::WalkNotClosed {
                tube,
                side,
                position,
            } => write!(f, "tube {tube} end {side}: walk breaks after step {position}"),
            Violation::NotImmersion {
                tube,
                side,
                position,
            } => write!(f, "tube {tube} end {side}: walk backtracks after step {position}"),
            Violation::Bigon {
                graph,
                vertex,
                vertical,
                horizontal,
            } => write!(
                f,
                "bigon in link of vertex {vertex} of graph {graph}: half-edge {}:{:?} and corner {}/{}/{}",
                vertical.edge, vertical.end, horizontal.tube, horizontal.side, horizontal.position
            ),
        }
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct ValidationReport {
    pub violations: Vec<Violation>,
}

impl ValidationReport {
    pub fn is_empty(&self) -> bool {
        self.violations.is_empty()
    }
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for v in &self.violations {
            writeln!(f, "  {v}")?;
        }
        Ok(())
    }
}

impl TubularComplex {
    /// Lists every violated condition; empty iff the complex is a valid
    /// nonpositively curved tubular graph of graphs.
    pub fn validate(&self) -> ValidationReport {
        let mut violations = Vec::new();

        for (s, vg) in self.graphs.iter().enumerate() {
            if vg.graph.vertex_count() == 0 {
                violations.push(Violation::EmptyVertexGraph { graph: s });
            } else if !vg.graph.is_connected() {
                violations.push(Violation::VertexGraphDisconnected { graph: s });
            }
        }
        let components = crate::graph::connected_components(&self.underlying()).len();
        if components != 1 {
            violations.push(Violation::UnderlyingDisconnected { components });
        }

        let mut walks_ok = true;
        for (t, tube) in self.tubes.iter().enumerate() {
            if tube.circle_len < 3 {
                violations.push(Violation::CircleTooShort {
                    tube: t,
                    circle_len: tube.circle_len,
                });
                walks_ok = false;
            }
            for (side, end) in tube.ends.iter().enumerate() {
                if end.walk.len() != tube.circle_len {
                    violations.push(Violation::WalkLength {
                        tube: t,
                        side,
                        circle_len: tube.circle_len,
                        walk_len: end.walk.len(),
                    });
                    walks_ok = false;
                    continue;
                }
                let g = self.graph(end.graph);
                let len = end.walk.len();
                for i in 0..len {
                    let (a, b) = (end.walk[i], end.walk[(i + 1) % len]);
                    if a.head(g) != b.tail(g) {
                        violations.push(Violation::WalkNotClosed {
                            tube: t,
                            side,
                            position: i,
                        });
                        walks_ok = false;
                    } else if b == a.reversed() {
                        violations.push(Violation::NotImmersion {
                            tube: t,
                            side,
                            position: i,
                        });
                    }
                }
            }
        }

        // Links are only meaningful once every walk is a closed loop.
        if walks_ok {
            for (s, per_vertex) in self.all_links().into_iter().enumerate() {
                for (v, link) in per_vertex.into_iter().enumerate() {
                    for (x, y) in link.parallel_edges() {
                        let (vertical, horizontal) = match (link.vertices[x], link.vertices[y]) {
                            (LinkVertex::Vertical(h), LinkVertex::Horizontal(c))
                            | (LinkVertex::Horizontal(c), LinkVertex::Vertical(h)) => (h, c),
                            _ => unreachable!("link graphs are bipartite"),
                        };
                        violations.push(Violation::Bigon {
                            graph: s,
                            vertex: v,
                            vertical,
                            horizontal,
                        });
                    }
                }
            }
        }

        ValidationReport { violations }
    }
}
