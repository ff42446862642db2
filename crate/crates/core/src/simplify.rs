//! Homotopy-preserving cleanup moves and free-splitting witnesses.

use std::fmt;

use serde::Serialize;
use thiserror::Error;

use crate::complex::{EdgeRef, Flat, Step, Tube, TubeEnd, TubularComplex, VertexGraph, VertexRef};
use crate::graph::{connected_components, prune_hanging_trees};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum WitnessKind {
    ThicknessZeroEdge,
    ThicknessOneEdge,
    DisconnectedLink,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Location {
    Edge(EdgeRef),
    Vertex(VertexRef),
}

/// A cell certifying that the fundamental group splits freely.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct Witness {
    pub kind: WitnessKind,
    pub location: Location,
}

impl Witness {
    pub fn thickness_zero(e: EdgeRef) -> Witness {
        Witness {
            kind: WitnessKind::ThicknessZeroEdge,
            location: Location::Edge(e),
        }
    }

    pub fn thickness_one(e: EdgeRef) -> Witness {
        Witness {
            kind: WitnessKind::ThicknessOneEdge,
            location: Location::Edge(e),
        }
    }

    pub fn disconnected_link(v: VertexRef) -> Witness {
        Witness {
            kind: WitnessKind::DisconnectedLink,
            location: Location::Vertex(v),
        }
    }

    /// True iff the location exists in `c` and has the claimed property.
    pub fn verify(&self, c: &TubularComplex) -> bool {
        match (self.kind, self.location) {
            (WitnessKind::ThicknessZeroEdge, Location::Edge(e)) => c.thickness(e) == Ok(0),
            (WitnessKind::ThicknessOneEdge, Location::Edge(e)) => c.thickness(e) == Ok(1),
            (WitnessKind::DisconnectedLink, Location::Vertex(v)) => c
                .vertex_link(v.graph, v.vertex)
                .is_ok_and(|l| connected_components(&l.graph).len() >= 2),
            _ => false,
        }
    }
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.location {
            Location::Edge(e) => {
                let t = if self.kind == WitnessKind::ThicknessZeroEdge { 0 } else { 1 };
                write!(f, "edge {} of graph {} has thickness {t}", e.edge, e.graph)
            }
            Location::Vertex(v) => {
                write!(f, "vertex {} of graph {} has a disconnected link", v.vertex, v.graph)
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SimplifyError {
    #[error("edge {} of graph {} has thickness {thickness}, expected 1", .edge.edge, .edge.graph)]
    NotThicknessOne { edge: EdgeRef, thickness: usize },
    #[error("unknown edge {} of graph {}", .0.edge, .0.graph)]
    UnknownEdge(EdgeRef),
}

/// Strips hanging trees from every vertex graph.
///
/// Vertices on attaching walks are protected. Immersed closed walks never
/// pass through a valence-one vertex, so walks keep their steps and only
/// edge ids are renumbered.
pub fn collapse_hanging_trees(c: &TubularComplex) -> TubularComplex {
    let protected = c.walk_vertices();
    let pruned: Vec<_> = c
        .graphs()
        .iter()
        .zip(&protected)
        .map(|(vg, p)| prune_hanging_trees(&vg.graph, p))
        .collect();
    if pruned.iter().all(|p| p.is_unchanged()) {
        return c.clone();
    }
    let graphs = c
        .graphs()
        .iter()
        .zip(&pruned)
        .map(|(vg, p)| VertexGraph {
            name: vg.name.clone(),
            graph: p.graph.clone(),
        })
        .collect();
    let tubes = c
        .tubes()
        .iter()
        .map(|t| Tube {
            circle_len: t.circle_len,
            ends: t.ends.clone().map(|end| TubeEnd {
                walk: end
                    .walk
                    .iter()
                    .map(|s| Step {
                        edge: pruned[end.graph].edge_map[s.edge].expect("walk edges are never pruned"),
                        forward: s.forward,
                    })
                    .collect(),
                graph: end.graph,
            }),
        })
        .collect();
    TubularComplex::new(graphs, tubes).expect("indices remapped")
}

/// The tube attached to a rudimentary circle, if any: a vertex graph that
/// is a circle with an edge of thickness one carries exactly one tube end,
/// attached by an isomorphism.
fn rudimentary_tube(c: &TubularComplex) -> Option<(usize, usize)> {
    let table = c.thickness_table();
    (0..c.graphs().len()).find_map(|s| {
        if !c.graph(s).is_circle() || !table[s].contains(&1) {
            return None;
        }
        let mut ends = c
            .tubes()
            .iter()
            .enumerate()
            .flat_map(|(t, tube)| tube.ends.iter().filter(move |e| e.graph == s).map(move |_| t));
        let t = ends.next().expect("thickness one needs a tube");
        debug_assert!(ends.next().is_none());
        Some((s, t))
    })
}

/// Removes rudimentary circles together with their tube, until none remain.
pub fn remove_rudimentary_edges(c: &TubularComplex) -> TubularComplex {
    let mut current = c.clone();
    while let Some((s, t)) = rudimentary_tube(&current) {
        let mut flat = Flat::from_complex(&current);
        let vo = flat.vertex(s, 0);
        for v in vo..vo + current.graph(s).vertex_count() {
            flat.vertex_alive[v] = false;
        }
        let eo = flat.edge(s, 0);
        for e in eo..eo + current.graph(s).edge_count() {
            flat.edge_alive[e] = false;
        }
        flat.tubes.remove(t);
        current = flat.rebuild();
    }
    current
}

/// Removes the square containing the thickness-one edge `e` and collapses
/// the rest of its tube.
///
/// Deleting that square and `e` leaves the tube a strip of squares with a
/// free horizontal edge at each end; collapsing the strip leaves the two
/// side walks and the one horizontal edge `h` over the circle vertex where
/// the square met its predecessor. `h` becomes a vertical edge (subdivided
/// when needed to stay simplicial), which merges the vertex graphs at its
/// ends.
pub fn cascade_at(c: &TubularComplex, e: EdgeRef) -> Result<TubularComplex, SimplifyError> {
    let thickness = c.thickness(e).map_err(|_| SimplifyError::UnknownEdge(e))?;
    if thickness != 1 {
        return Err(SimplifyError::NotThicknessOne { edge: e, thickness });
    }
    let (tube, position) = c
        .tubes()
        .iter()
        .enumerate()
        .find_map(|(t, tube)| {
            tube.ends.iter().find_map(|end| {
                (end.graph == e.graph)
                    .then(|| end.walk.iter().position(|s| s.edge == e.edge))
                    .flatten()
                    .map(|i| (t, i))
            })
        })
        .expect("thickness one edge lies in a square");

    let mut flat = Flat::from_complex(c);
    let [w0, w1] = flat.tubes.remove(tube);
    let global = flat.edge(e.graph, e.edge);
    flat.edge_alive[global] = false;
    let (a, b) = (flat.tail(w0[position]), flat.tail(w1[position]));
    flat.add_simplicial_path(a, b);
    Ok(flat.rebuild())
}

/// Least thickness-one vertical edge.
pub fn first_thickness_one_edge(c: &TubularComplex) -> Option<EdgeRef> {
    let table = c.thickness_table();
    c.vertical_edges().find(|e| table[e.graph][e.edge] == 1)
}

/// Applies [`cascade_at`] to the least thickness-one edge until none remain.
pub fn remove_thickness_one_cascade(c: &TubularComplex) -> TubularComplex {
    let mut current = c.clone();
    while let Some(e) = first_thickness_one_edge(&current) {
        current = cascade_at(&current, e).expect("edge found with thickness one");
    }
    current
}

/// Least witness in (kind, location) order.
pub fn find_witness(c: &TubularComplex) -> Option<Witness> {
    let table = c.thickness_table();
    for (t, build) in [
        (0, Witness::thickness_zero as fn(EdgeRef) -> Witness),
        (1, Witness::thickness_one),
    ] {
        if let Some(e) = c.vertical_edges().find(|e| table[e.graph][e.edge] == t) {
            return Some(build(e));
        }
    }
    first_disconnected_link(c).map(Witness::disconnected_link)
}

/// Least vertex whose link has two or more components.
pub fn first_disconnected_link(c: &TubularComplex) -> Option<VertexRef> {
    c.all_links().into_iter().enumerate().find_map(|(graph, links)| {
        links
            .into_iter()
            .position(|l| connected_components(&l.graph).len() >= 2)
            .map(|vertex| VertexRef { graph, vertex })
    })
}
