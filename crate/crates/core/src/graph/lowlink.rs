use std::collections::BTreeSet;

use super::{EdgeId, MultiGraph, VertexId};

/// Vertex classes of `g`, each sorted, ordered by least member.
pub fn connected_components(g: &MultiGraph) -> Vec<Vec<VertexId>> {
    let n = g.vertex_count();
    let mut seen = vec![false; n];
    let mut classes = Vec::new();
    for root in 0..n {
        if seen[root] {
            continue;
        }
        seen[root] = true;
        let mut class = vec![root];
        let mut stack = vec![root];
        while let Some(v) = stack.pop() {
            for &(w, _) in g.neighbors(v) {
                if !seen[w] {
                    seen[w] = true;
                    class.push(w);
                    stack.push(w);
                }
            }
        }
        class.sort_unstable();
        classes.push(class);
    }
    classes
}

struct LowLink {
    articulation: BTreeSet<VertexId>,
    bridges: BTreeSet<EdgeId>,
}

// One iterative DFS per component. The tree edge is skipped by edge id, not
// by parent vertex, so parallel edges count as back edges.
fn low_link(g: &MultiGraph) -> LowLink {
    const UNSEEN: usize = usize::MAX;
    let n = g.vertex_count();
    let mut order = vec![UNSEEN; n];
    let mut low = vec![0; n];
    let mut out = LowLink {
        articulation: BTreeSet::new(),
        bridges: BTreeSet::new(),
    };
    let mut counter = 0;

    for root in 0..n {
        if order[root] != UNSEEN {
            continue;
        }
        order[root] = counter;
        low[root] = counter;
        counter += 1;
        let mut root_children = 0;
        // (vertex, edge used to reach it, next neighbor index)
        let mut stack: Vec<(VertexId, Option<EdgeId>, usize)> = vec![(root, None, 0)];

        while let Some(frame) = stack.last_mut() {
            let (v, via, idx) = *frame;
            if idx < g.neighbors(v).len() {
                frame.2 += 1;
                let (w, e) = g.neighbors(v)[idx];
                if Some(e) == via {
                    continue;
                }
                if order[w] == UNSEEN {
                    order[w] = counter;
                    low[w] = counter;
                    counter += 1;
                    if v == root {
                        root_children += 1;
                    }
                    stack.push((w, Some(e), 0));
                } else {
                    low[v] = low[v].min(order[w]);
                }
            } else {
                stack.pop();
                if let (Some(e), Some(&(parent, _, _))) = (via, stack.last()) {
                    low[parent] = low[parent].min(low[v]);
                    if low[v] > order[parent] {
                        out.bridges.insert(e);
                    }
                    if parent != root && low[v] >= order[parent] {
                        out.articulation.insert(parent);
                    }
                }
            }
        }
        if root_children >= 2 {
            out.articulation.insert(root);
        }
    }
    out
}

/// Vertices whose deletion increases the number of connected components.
/// Linear in `|V| + |E|`; loops and parallel edges are tolerated.
pub fn articulation_points(g: &MultiGraph) -> BTreeSet<VertexId> {
    low_link(g).articulation
}

/// Edges whose deletion increases the number of connected components.
pub fn bridges(g: &MultiGraph) -> BTreeSet<EdgeId> {
    low_link(g).bridges
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn brute_articulation(g: &MultiGraph) -> BTreeSet<VertexId> {
        let base = connected_components(g).len();
        (0..g.vertex_count())
            .filter(|&v| {
                let (h, _) = g.without_vertices(&BTreeSet::from([v]));
                connected_components(&h).len() > base
            })
            .collect()
    }

    fn brute_bridges(g: &MultiGraph) -> BTreeSet<EdgeId> {
        let base = connected_components(g).len();
        (0..g.edge_count())
            .filter(|&e| connected_components(&g.without_edges(&BTreeSet::from([e]))).len() > base)
            .collect()
    }

    #[test]
    fn components_examples() {
        assert!(connected_components(&MultiGraph::new(0)).is_empty());
        let c4 = MultiGraph::from_edges(4, &[[0, 1], [1, 2], [2, 3], [3, 0]]);
        assert_eq!(connected_components(&c4), vec![vec![0, 1, 2, 3]]);
        let two = MultiGraph::from_edges(6, &[[0, 1], [1, 2], [2, 0], [3, 4], [4, 5], [5, 3]]);
        assert_eq!(connected_components(&two), vec![vec![0, 1, 2], vec![3, 4, 5]]);
    }

    #[test]
    fn articulation_examples() {
        let path = MultiGraph::from_edges(4, &[[0, 1], [1, 2], [2, 3]]);
        assert_eq!(articulation_points(&path), BTreeSet::from([1, 2]));
        let c4 = MultiGraph::from_edges(4, &[[0, 1], [1, 2], [2, 3], [3, 0]]);
        assert!(articulation_points(&c4).is_empty());
    }

    #[test]
    fn loops_and_parallel_edges() {
        // A loop alone never creates an articulation point.
        let mut g = MultiGraph::from_edges(2, &[[0, 1]]);
        g.add_edge(1, 1);
        assert!(articulation_points(&g).is_empty());
        assert_eq!(bridges(&g), BTreeSet::from([0]));
        // A doubled edge is not a bridge.
        let g = MultiGraph::from_edges(3, &[[0, 1], [0, 1], [1, 2]]);
        assert_eq!(bridges(&g), BTreeSet::from([2]));
        assert_eq!(articulation_points(&g), BTreeSet::from([1]));
    }

    fn pairs(n: usize) -> Vec<[usize; 2]> {
        (0..n).flat_map(|a| (a + 1..n).map(move |b| [a, b])).collect()
    }

    fn graph_from_mask(n: usize, mask: u64) -> MultiGraph {
        let edges: Vec<_> = pairs(n)
            .into_iter()
            .enumerate()
            .filter(|(i, _)| mask >> i & 1 == 1)
            .map(|(_, p)| p)
            .collect();
        MultiGraph::from_edges(n, &edges)
    }

    fn permutations(n: usize) -> Vec<Vec<usize>> {
        if n == 0 {
            return vec![vec![]];
        }
        let mut out = Vec::new();
        for p in permutations(n - 1) {
            for i in 0..=p.len() {
                let mut q = p.clone();
                q.insert(i, n - 1);
                out.push(q);
            }
        }
        out
    }

    // One representative per isomorphism class of simple graphs on 6 vertices.
    fn six_vertex_classes() -> Vec<u64> {
        let ps = pairs(6);
        let index = |a: usize, b: usize| ps.iter().position(|&p| p == [a.min(b), a.max(b)]).unwrap();
        let perms = permutations(6);
        let mut classes = BTreeSet::new();
        for mask in 0u64..1 << ps.len() {
            let canon = perms
                .iter()
                .map(|p| {
                    ps.iter()
                        .enumerate()
                        .filter(|(i, _)| mask >> i & 1 == 1)
                        .fold(0u64, |acc, (_, &[a, b])| acc | 1 << index(p[a], p[b]))
                })
                .min()
                .unwrap();
            classes.insert(canon);
        }
        classes.into_iter().collect()
    }

    #[test]
    fn exhaustive_small_graphs_match_deletion_oracle() {
        // Every labeled graph on at most 6 vertices.
        for n in 0..=6 {
            for mask in 0u64..1 << pairs(n).len() {
                let g = graph_from_mask(n, mask);
                assert_eq!(articulation_points(&g), brute_articulation(&g), "{g:?}");
                assert_eq!(bridges(&g), brute_bridges(&g), "{g:?}");
            }
        }
        // Every graph on 7 and 8 vertices up to isomorphism: extend each
        // 6-vertex class by one or two vertices with arbitrary neighborhoods.
        let classes = six_vertex_classes();
        assert_eq!(classes.len(), 156);
        for &base in &classes {
            let g6 = graph_from_mask(6, base);
            for n7 in 0u32..1 << 6 {
                let mut g7 = g6.clone();
                let v7 = g7.add_vertex();
                for w in (0..6).filter(|w| n7 >> w & 1 == 1) {
                    g7.add_edge(w, v7);
                }
                assert_eq!(articulation_points(&g7), brute_articulation(&g7));
                for n8 in 0u32..1 << 7 {
                    let mut g8 = g7.clone();
                    let v8 = g8.add_vertex();
                    for w in (0..7).filter(|w| n8 >> w & 1 == 1) {
                        g8.add_edge(w, v8);
                    }
                    assert_eq!(articulation_points(&g8), brute_articulation(&g8), "{g8:?}");
                }
            }
        }
    }

    fn arb_multigraph(max_v: usize, max_e: usize) -> impl Strategy<Value = MultiGraph> {
        (1..=max_v).prop_flat_map(move |n| {
            proptest::collection::vec((0..n, 0..n), 0..=max_e)
                .prop_map(move |es| {
                    let edges: Vec<[usize; 2]> = es.into_iter().map(|(a, b)| [a, b]).collect();
                    MultiGraph::from_edges(n, &edges)
                })
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(500))]
        #[test]
        fn random_graphs_match_deletion_oracle(g in arb_multigraph(40, 70)) {
            prop_assert_eq!(articulation_points(&g), brute_articulation(&g));
            prop_assert_eq!(bridges(&g), brute_bridges(&g));
        }
    }
}
