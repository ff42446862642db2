use std::collections::{BTreeSet, VecDeque};

use super::{EdgeId, SimplicialGraph, VertexId};

/// Result of stripping hanging trees from a graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Pruned {
    pub graph: SimplicialGraph,
    /// Old vertex id to new vertex id; `None` for removed vertices.
    pub vertex_map: Vec<Option<VertexId>>,
    /// Old edge id to new edge id; `None` for removed edges.
    pub edge_map: Vec<Option<EdgeId>>,
    pub removed_vertices: Vec<VertexId>,
    pub removed_edges: Vec<EdgeId>,
}

impl Pruned {
    pub fn is_unchanged(&self) -> bool {
        self.removed_vertices.is_empty() && self.removed_edges.is_empty()
    }
}

/// Repeatedly deletes vertices of valence at most one that are not in
/// `protected`. Surviving vertices and edges keep their relative order.
///
/// A component that would vanish entirely keeps its smallest vertex, so a
/// tree prunes to a point.
pub fn prune_hanging_trees(g: &SimplicialGraph, protected: &BTreeSet<VertexId>) -> Pruned {
    let n = g.vertex_count();
    let mut degree: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
    let mut alive_v = vec![true; n];
    let mut alive_e = vec![true; g.edge_count()];

    let mut queue: VecDeque<VertexId> = (0..n)
        .filter(|v| degree[*v] <= 1 && !protected.contains(v))
        .collect();
    while let Some(v) = queue.pop_front() {
        if !alive_v[v] || degree[v] > 1 {
            continue;
        }
        alive_v[v] = false;
        for &(w, e) in g.neighbors(v) {
            if alive_e[e] {
                alive_e[e] = false;
                degree[w] -= 1;
                degree[v] -= 1;
                if degree[w] <= 1 && alive_v[w] && !protected.contains(&w) {
                    queue.push_back(w);
                }
            }
        }
    }

    // Components that were stripped bare keep their least vertex.
    for class in super::connected_components(g.as_multigraph()) {
        if class.iter().all(|&v| !alive_v[v]) {
            alive_v[class[0]] = true;
        }
    }

    let mut vertex_map = vec![None; n];
    let mut next = 0;
    for v in 0..n {
        if alive_v[v] {
            vertex_map[v] = Some(next);
            next += 1;
        }
    }
    let mut edge_map = vec![None; g.edge_count()];
    let mut graph = SimplicialGraph::new(next, &[]).expect("empty edge list");
    for (e, &[a, b]) in g.edges().iter().enumerate() {
        if alive_e[e] {
            let id = graph
                .try_add_edge(vertex_map[a].unwrap(), vertex_map[b].unwrap())
                .expect("subgraph of a simplicial graph is simplicial");
            edge_map[e] = Some(id);
        }
    }
    Pruned {
        graph,
        removed_vertices: (0..n).filter(|&v| vertex_map[v].is_none()).collect(),
        removed_edges: (0..g.edge_count()).filter(|&e| edge_map[e].is_none()).collect(),
        vertex_map,
        edge_map,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{connected_components, MultiGraph};
    use proptest::prelude::*;

    #[test]
    fn triangle_with_pendant_path() {
        let g = SimplicialGraph::new(5, &[[0, 1], [1, 2], [2, 0], [2, 3], [3, 4]]).unwrap();
        let p = prune_hanging_trees(&g, &BTreeSet::new());
        assert_eq!(p.graph, SimplicialGraph::cycle(3));
        assert_eq!(p.removed_vertices, vec![3, 4]);
        assert_eq!(p.removed_edges, vec![3, 4]);
    }

    #[test]
    fn tree_prunes_to_smallest_vertex() {
        let g = SimplicialGraph::new(4, &[[3, 1], [1, 2], [2, 0]]).unwrap();
        let p = prune_hanging_trees(&g, &BTreeSet::new());
        assert_eq!(p.graph, SimplicialGraph::point());
        assert_eq!(p.vertex_map[0], Some(0));
    }

    #[test]
    fn protected_vertices_survive() {
        let g = SimplicialGraph::new(4, &[[0, 1], [1, 2], [2, 3]]).unwrap();
        let p = prune_hanging_trees(&g, &BTreeSet::from([0, 2]));
        assert_eq!(p.graph.vertex_count(), 3);
        assert_eq!(p.removed_vertices, vec![3]);
    }

    #[test]
    fn cycle_unchanged() {
        let g = SimplicialGraph::cycle(6);
        let p = prune_hanging_trees(&g, &BTreeSet::new());
        assert!(p.is_unchanged());
        assert_eq!(p.graph, g);
    }

    fn arb_connected_simplicial() -> impl Strategy<Value = SimplicialGraph> {
        // Random spanning tree plus random chords.
        (2usize..14).prop_flat_map(|n| {
            (
                proptest::collection::vec(any::<u32>(), n - 1),
                proptest::collection::vec((0..n, 0..n), 0..6),
            )
                .prop_map(move |(parents, chords)| {
                    let mut g = SimplicialGraph::new(n, &[]).unwrap();
                    for (i, p) in parents.iter().enumerate() {
                        let child = i + 1;
                        g.try_add_edge(*p as usize % child, child).unwrap();
                    }
                    for (a, b) in chords {
                        let _ = g.try_add_edge(a, b);
                    }
                    g
                })
        })
    }

    fn is_forest(vertices: usize, edges: &[[usize; 2]]) -> bool {
        let g = MultiGraph::from_edges(vertices, edges);
        let comps = connected_components(&g).len();
        edges.len() + comps == vertices
    }

    proptest! {
        #[test]
        fn prune_is_idempotent_and_removes_a_forest(g in arb_connected_simplicial()) {
            let p = prune_hanging_trees(&g, &BTreeSet::new());
            let again = prune_hanging_trees(&p.graph, &BTreeSet::new());
            prop_assert!(again.is_unchanged());
            // Removed edges together with their endpoints form a forest.
            let removed: Vec<[usize; 2]> = p.removed_edges.iter().map(|&e| g.endpoints(e)).collect();
            prop_assert!(is_forest(g.vertex_count(), &removed));
            // Minimum degree two unless the result is a point.
            if p.graph.vertex_count() > 1 {
                for v in 0..p.graph.vertex_count() {
                    prop_assert!(p.graph.degree(v) >= 2);
                }
            }
            // Each removed tree hangs off a single retained vertex, so the
            // Euler characteristic is unchanged.
            prop_assert_eq!(p.graph.euler_characteristic(), g.euler_characteristic());
            prop_assert!(p.graph.is_connected());
        }
    }
}
