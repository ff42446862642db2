use std::collections::BTreeMap;

use serde::Serialize;

use super::{ComplexError, GraphId, TubeId, TubularComplex};
use crate::graph::{self, HalfEdge, MultiGraph, VertexId};

/// Horizontal half-edge: the end on `side` of the horizontal edge over
/// circle vertex `position` of `tube`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct Corner {
    pub tube: TubeId,
    pub side: usize,
    pub position: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum LinkVertex {
    Vertical(HalfEdge),
    Horizontal(Corner),
}

impl LinkVertex {
    pub fn is_vertical(&self) -> bool {
        matches!(self, LinkVertex::Vertical(_))
    }
}

/// The link of a vertex: one vertex per half-edge at it, one edge per square
/// corner at it. Vertical vertices come first, in ascending half-edge order,
/// followed by horizontal vertices in ascending corner order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinkGraph {
    pub vertices: Vec<LinkVertex>,
    pub graph: MultiGraph,
    vertical_count: usize,
}

impl LinkGraph {
    /// Assembles a link from sorted vertices, verticals first.
    pub fn from_parts(vertices: Vec<LinkVertex>, graph: MultiGraph, vertical_count: usize) -> LinkGraph {
        assert_eq!(vertices.len(), graph.vertex_count());
        assert!(vertices.windows(2).all(|w| w[0] < w[1]), "link vertices must be sorted");
        assert!(vertices.iter().take_while(|v| v.is_vertical()).count() == vertical_count);
        LinkGraph {
            vertices,
            graph,
            vertical_count,
        }
    }

    pub fn vertical_count(&self) -> usize {
        self.vertical_count
    }

    pub fn is_vertical(&self, x: usize) -> bool {
        x < self.vertical_count
    }

    pub fn index_of(&self, v: LinkVertex) -> Option<usize> {
        self.vertices.binary_search(&v).ok()
    }

    pub fn is_connected(&self) -> bool {
        self.graph.is_connected() && self.graph.vertex_count() > 0
    }

    /// `0` for vertical vertices and `1` for horizontal ones.
    pub fn colors(&self) -> Vec<u32> {
        (0..self.vertices.len())
            .map(|x| u32::from(!self.is_vertical(x)))
            .collect()
    }

    /// Vertex pairs joined by more than one edge, each reported once.
    pub fn parallel_edges(&self) -> Vec<(usize, usize)> {
        let mut count: BTreeMap<(usize, usize), usize> = BTreeMap::new();
        for &[a, b] in self.graph.edges() {
            *count.entry((a.min(b), a.max(b))).or_default() += 1;
        }
        count
            .into_iter()
            .filter(|&(_, n)| n > 1)
            .map(|(k, _)| k)
            .collect()
    }

    /// Vertical vertices whose deletion disconnects the link, ascending.
    pub fn vertical_cut_vertices(&self) -> Vec<usize> {
        graph::articulation_points(&self.graph)
            .into_iter()
            .filter(|&x| self.is_vertical(x))
            .collect()
    }
}

// Corners and half-edges touching one vertex, collected in a single pass.
#[derive(Default)]
struct LinkBuilder {
    corners: Vec<Corner>,
    // (half-edge, corner) per square corner
    edges: Vec<(HalfEdge, Corner)>,
}

impl TubularComplex {
    /// Links of every vertex, indexed `[graph][vertex]`. Requires closed walks.
    pub fn all_links(&self) -> Vec<Vec<LinkGraph>> {
        let mut builders: Vec<Vec<LinkBuilder>> = self
            .graphs
            .iter()
            .map(|vg| (0..vg.graph.vertex_count()).map(|_| LinkBuilder::default()).collect())
            .collect();

        for (t, tube) in self.tubes.iter().enumerate() {
            let len = tube.circle_len;
            for (side, end) in tube.ends.iter().enumerate() {
                let g = self.graph(end.graph);
                for (i, step) in end.walk.iter().enumerate() {
                    let corner = Corner {
                        tube: t,
                        side,
                        position: i,
                    };
                    builders[end.graph][step.tail(g)].corners.push(corner);
                    // square i meets circle vertices i and i + 1
                    builders[end.graph][step.tail(g)]
                        .edges
                        .push((step.tail_half_edge(), corner));
                    let next = Corner {
                        position: (i + 1) % len,
                        ..corner
                    };
                    builders[end.graph][step.head(g)]
                        .edges
                        .push((step.head_half_edge(), next));
                }
            }
        }

        builders
            .into_iter()
            .enumerate()
            .map(|(s, per_vertex)| {
                per_vertex
                    .into_iter()
                    .enumerate()
                    .map(|(v, b)| self.assemble_link(s, v, b))
                    .collect()
            })
            .collect()
    }

    fn assemble_link(&self, s: GraphId, v: VertexId, mut b: LinkBuilder) -> LinkGraph {
        let verticals = self.graph(s).half_edges_at(v);
        b.corners.sort();
        let mut vertices: Vec<LinkVertex> = verticals.iter().copied().map(LinkVertex::Vertical).collect();
        let vertical_count = vertices.len();
        vertices.extend(b.corners.iter().copied().map(LinkVertex::Horizontal));

        let mut graph = MultiGraph::new(vertices.len());
        let find = |x: LinkVertex| vertices.binary_search(&x).expect("link vertex present");
        b.edges.sort();
        for (h, c) in b.edges {
            graph.add_edge(find(LinkVertex::Vertical(h)), find(LinkVertex::Horizontal(c)));
        }
        LinkGraph {
            vertices,
            graph,
            vertical_count,
        }
    }

    /// Link of vertex `v` of vertex graph `s`.
    pub fn vertex_link(&self, s: GraphId, v: VertexId) -> Result<LinkGraph, ComplexError> {
        let vg = self.graphs.get(s).ok_or(ComplexError::UnknownGraph(s))?;
        if v >= vg.graph.vertex_count() {
            return Err(ComplexError::UnknownVertex { graph: s, vertex: v });
        }
        let mut b = LinkBuilder::default();
        for (t, tube) in self.tubes.iter().enumerate() {
            let len = tube.circle_len;
            for (side, end) in tube.ends.iter().enumerate() {
                if end.graph != s {
                    continue;
                }
                let g = self.graph(s);
                for (i, step) in end.walk.iter().enumerate() {
                    let corner = Corner {
                        tube: t,
                        side,
                        position: i,
                    };
                    if step.tail(g) == v {
                        b.corners.push(corner);
                        b.edges.push((step.tail_half_edge(), corner));
                    }
                    if step.head(g) == v {
                        let next = Corner {
                            position: (i + 1) % len,
                            ..corner
                        };
                        b.edges.push((step.head_half_edge(), next));
                    }
                }
            }
        }
        Ok(self.assemble_link(s, v, b))
    }
}
