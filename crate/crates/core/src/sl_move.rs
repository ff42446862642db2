//! Opening a vertex whose link is cut by a vertical vertex.
//!
//! Let `e` be a vertical half-edge at `u` that disconnects `link(u)`, and
//! let `C_1..C_n` be the components of `link(u) - e`. The opening replaces
//! the star of `u` by a tree: the far end `v'` of `e` is joined by new edges
//! `e_i` to new vertices `u_i`, and each half-edge `f_ij` in `C_i` is moved
//! to `u_i`. Attaching walks keep their length; a step along `e` is sent to
//! the `e_i` of the component holding its corner at `u`.

use std::collections::BTreeSet;

use serde::Serialize;
use thiserror::Error;

use crate::complex::{
    ComplexError, Corner, GraphId, LinkGraph, LinkVertex, Step, Tube, TubeEnd, TubularComplex, VertexGraph,
};
use crate::graph::{articulation_points, bridges, connected_components, End, HalfEdge, SimplicialGraph, VertexId};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SlMoveError {
    #[error("link is disconnected; check the first Brady-Meier condition first")]
    DisconnectedLink,
    #[error("half-edge {0:?} is not a vertical cut vertex of the link")]
    NotCutVertex(HalfEdge),
    #[error("half-edge {cut:?} is not anchored at vertex {vertex} of graph {graph}")]
    NotAtVertex {
        graph: GraphId,
        vertex: VertexId,
        cut: HalfEdge,
    },
    #[error("plan does not match the complex")]
    PlanMismatch,
    #[error(transparent)]
    Complex(#[from] ComplexError),
}

/// One component `C_i` of `link(u) - e`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LinkComponent {
    /// The vertical half-edges `f_ij` at `u`, ascending.
    pub half_edges: Vec<HalfEdge>,
    /// The far endpoint `x_ij` of each `f_ij`.
    pub far_ends: Vec<VertexId>,
    /// Horizontal link vertices in this component, ascending.
    pub corners: Vec<Corner>,
}

/// Everything needed to open vertex `vertex` of graph `graph` along `cut`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct OpeningPlan {
    pub graph: GraphId,
    pub vertex: VertexId,
    pub cut: HalfEdge,
    /// Far endpoint of the cut edge; it plays the primary vertex `v'`.
    pub far_end: VertexId,
    /// Components ordered by least link vertex.
    pub components: Vec<LinkComponent>,
}

impl OpeningPlan {
    pub fn component_count(&self) -> usize {
        self.components.len()
    }

    /// Vertices of the replacement tree: `v'`, the `u_i` and the `x_ij`.
    pub fn tree_vertex_count(&self) -> usize {
        1 + self.components.len() + self.components.iter().map(|c| c.half_edges.len()).sum::<usize>()
    }

    fn component_of_corner(&self, corner: Corner) -> usize {
        self.components
            .iter()
            .position(|c| c.corners.binary_search(&corner).is_ok())
            .expect("every corner at u lies in some component")
    }

    fn component_of_half_edge(&self, h: HalfEdge) -> Option<usize> {
        self.components
            .iter()
            .position(|c| c.half_edges.binary_search(&h).is_ok())
    }
}

/// Least vertical vertex whose deletion disconnects a connected link.
///
/// When every vertical edge at the vertex has thickness at least two, this
/// is `None` exactly when the second Brady-Meier condition holds there.
pub fn bm2_cut_vertex(link: &LinkGraph) -> Result<Option<HalfEdge>, SlMoveError> {
    if !link.is_connected() {
        return Err(SlMoveError::DisconnectedLink);
    }
    Ok(link.vertical_cut_vertices().first().map(|&x| match link.vertices[x] {
        LinkVertex::Vertical(h) => h,
        LinkVertex::Horizontal(_) => unreachable!("filtered to vertical vertices"),
    }))
}

/// First Brady-Meier condition: the link is nonempty and connected.
pub fn satisfies_bm1(link: &LinkGraph) -> bool {
    link.is_connected()
}

/// Second Brady-Meier condition checked by brute force: deleting any vertex
/// or any open edge leaves a nonempty connected graph.
pub fn satisfies_bm2(link: &LinkGraph) -> bool {
    let g = &link.graph;
    if g.vertex_count() < 2 {
        return false;
    }
    let vertex_ok = (0..g.vertex_count()).all(|x| {
        let (rest, _) = g.without_vertices(&BTreeSet::from([x]));
        rest.is_connected()
    });
    vertex_ok
        && (0..g.edge_count()).all(|e| g.without_edges(&BTreeSet::from([e])).is_connected())
}

/// Linear-time form of the Brady-Meier conditions at one vertex: connected,
/// no cut vertex and no bridge.
pub fn satisfies_brady_meier_fast(link: &LinkGraph) -> bool {
    link.graph.vertex_count() >= 2
        && link.is_connected()
        && articulation_points(&link.graph).is_empty()
        && bridges(&link.graph).is_empty()
}

impl TubularComplex {
    /// Both Brady-Meier conditions at every vertex, by brute force.
    pub fn is_brady_meier(&self) -> bool {
        self.all_links()
            .iter()
            .flatten()
            .all(|l| satisfies_bm1(l) && satisfies_bm2(l))
    }
}

/// The least vertex (graph, vertex) whose link has a vertical cut vertex,
/// together with the least such half-edge. Requires connected links.
pub fn first_bm2_failure(c: &TubularComplex) -> Result<Option<(GraphId, VertexId, HalfEdge)>, SlMoveError> {
    for (s, links) in c.all_links().iter().enumerate() {
        for (v, link) in links.iter().enumerate() {
            if let Some(h) = bm2_cut_vertex(link)? {
                return Ok(Some((s, v, h)));
            }
        }
    }
    Ok(None)
}

/// Computes the opening of vertex `vertex` of graph `graph` along `cut`.
pub fn plan_opening(
    c: &TubularComplex,
    graph: GraphId,
    vertex: VertexId,
    cut: HalfEdge,
) -> Result<OpeningPlan, SlMoveError> {
    let link = c.vertex_link(graph, vertex)?;
    let g = c.graph(graph);
    if cut.edge >= g.edge_count() || g.anchor(cut) != vertex {
        return Err(SlMoveError::NotAtVertex { graph, vertex, cut });
    }
    if !link.is_connected() {
        return Err(SlMoveError::DisconnectedLink);
    }
    let x = link
        .index_of(LinkVertex::Vertical(cut))
        .expect("half-edges at the vertex are link vertices");
    let (rest, map) = link.graph.without_vertices(&BTreeSet::from([x]));
    let classes = connected_components(&rest);
    if classes.len() < 2 {
        return Err(SlMoveError::NotCutVertex(cut));
    }
    // The vertex map is monotone, so classes stay ordered by least
    // original link vertex.
    let mut back = vec![0; rest.vertex_count()];
    for (old, new) in map.iter().enumerate() {
        if let Some(n) = new {
            back[*n] = old;
        }
    }
    let components = classes
        .iter()
        .map(|class| {
            let mut comp = LinkComponent {
                half_edges: Vec::new(),
                far_ends: Vec::new(),
                corners: Vec::new(),
            };
            for &y in class {
                match link.vertices[back[y]] {
                    LinkVertex::Vertical(h) => {
                        comp.half_edges.push(h);
                        comp.far_ends.push(g.anchor(h.opposite()));
                    }
                    LinkVertex::Horizontal(k) => comp.corners.push(k),
                }
            }
            comp
        })
        .collect();
    Ok(OpeningPlan {
        graph,
        vertex,
        cut,
        far_end: g.anchor(cut.opposite()),
        components,
    })
}

/// Applies an opening. `u_1` reuses the id of `u` and `e_1` the id of `e`;
/// the other `u_i` and `e_i` are appended in component order.
pub fn open_at(c: &TubularComplex, plan: &OpeningPlan) -> Result<TubularComplex, SlMoveError> {
    if plan_opening(c, plan.graph, plan.vertex, plan.cut)? != *plan {
        return Err(SlMoveError::PlanMismatch);
    }
    let s = plan.graph;
    let old = c.graph(s);
    let n = plan.components.len();
    let u_of: Vec<VertexId> = (0..n)
        .map(|i| if i == 0 { plan.vertex } else { old.vertex_count() + i - 1 })
        .collect();

    let mut edges: Vec<[VertexId; 2]> = old.edges().to_vec();
    for (i, comp) in plan.components.iter().enumerate() {
        for h in &comp.half_edges {
            edges[h.edge][h.end.index()] = u_of[i];
        }
    }
    let e_of: Vec<usize> = (0..n)
        .map(|i| if i == 0 { plan.cut.edge } else { old.edge_count() + i - 1 })
        .collect();
    for &u in &u_of[1..] {
        let mut ends = [0; 2];
        ends[plan.cut.end.index()] = u;
        ends[plan.cut.end.opposite().index()] = plan.far_end;
        edges.push(ends);
    }
    let graph = SimplicialGraph::new(old.vertex_count() + n - 1, &edges)
        .expect("an opening never creates loops or parallel edges");

    let tubes = c
        .tubes()
        .iter()
        .enumerate()
        .map(|(t, tube)| {
            let ends = [0, 1].map(|side| {
                let end = &tube.ends[side];
                if end.graph != s {
                    return end.clone();
                }
                TubeEnd {
                    graph: s,
                    walk: reroute(old, plan, &e_of, t, side, &end.walk),
                }
            });
            Tube {
                circle_len: tube.circle_len,
                ends,
            }
        })
        .collect();

    let mut graphs = c.graphs().to_vec();
    graphs[s] = VertexGraph {
        name: graphs[s].name.clone(),
        graph,
    };
    Ok(TubularComplex::new(graphs, tubes)?)
}

fn reroute(
    old: &SimplicialGraph,
    plan: &OpeningPlan,
    e_of: &[usize],
    tube: usize,
    side: usize,
    walk: &[Step],
) -> Vec<Step> {
    let len = walk.len();
    let u = plan.vertex;
    // Consecutive steps meeting at u never switch components away from e.
    for i in 0..len {
        let (a, b) = (walk[i], walk[(i + 1) % len]);
        if a.head(old) == u {
            let (h_in, h_out) = (a.head_half_edge(), b.tail_half_edge());
            if let (Some(x), Some(y)) = (plan.component_of_half_edge(h_in), plan.component_of_half_edge(h_out)) {
                assert_eq!(x, y, "walk turns between link components at the opened vertex");
            }
        }
    }
    walk.iter()
        .enumerate()
        .map(|(i, &step)| {
            if step.edge != plan.cut.edge {
                return step;
            }
            let at_u_tail = step.tail_half_edge() == plan.cut;
            let position = if at_u_tail { i } else { (i + 1) % len };
            debug_assert!(at_u_tail || step.head_half_edge() == plan.cut);
            let k = plan.component_of_corner(Corner {
                tube,
                side,
                position,
            });
            Step {
                edge: e_of[k],
                forward: step.forward,
            }
        })
        .collect()
}

/// Summary of one opening for traces.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct OpeningSummary {
    pub graph: GraphId,
    pub vertex: VertexId,
    pub cut_edge: usize,
    pub cut_end: End,
    pub components: usize,
}

impl From<&OpeningPlan> for OpeningSummary {
    fn from(p: &OpeningPlan) -> Self {
        OpeningSummary {
            graph: p.graph,
            vertex: p.vertex,
            cut_edge: p.cut.edge,
            cut_end: p.cut.end,
            components: p.components.len(),
        }
    }
}
