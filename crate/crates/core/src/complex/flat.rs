//! Global-id working form for moves that delete, add or merge cells.
//!
//! Every vertex and vertical edge of every vertex graph gets a global id.
//! Moves edit this form freely; [`Flat::rebuild`] then regroups the vertical
//! 1-skeleton into connected vertex graphs and re-targets the tube ends.

use std::collections::BTreeSet;

use super::{GraphId, Step, Tube, TubeEnd, TubularComplex, VertexGraph};
use crate::graph::{connected_components, MultiGraph, SimplicialGraph, VertexId};

#[derive(Debug, Clone)]
pub(crate) struct Flat {
    /// Name of the vertex graph each vertex came from.
    pub vertex_names: Vec<String>,
    pub vertex_alive: Vec<bool>,
    pub edges: Vec<[VertexId; 2]>,
    pub edge_alive: Vec<bool>,
    /// Walks with `Step::edge` holding global edge ids.
    pub tubes: Vec<[Vec<Step>; 2]>,
    /// Global vertex and edge offset of each original vertex graph.
    pub vertex_offsets: Vec<usize>,
    pub edge_offsets: Vec<usize>,
}

impl Flat {
    pub fn from_complex(c: &TubularComplex) -> Flat {
        let mut flat = Flat {
            vertex_names: Vec::new(),
            vertex_alive: Vec::new(),
            edges: Vec::new(),
            edge_alive: Vec::new(),
            tubes: Vec::new(),
            vertex_offsets: Vec::new(),
            edge_offsets: Vec::new(),
        };
        for vg in c.graphs() {
            let vo = flat.vertex_names.len();
            flat.vertex_offsets.push(vo);
            flat.edge_offsets.push(flat.edges.len());
            for _ in 0..vg.graph.vertex_count() {
                flat.vertex_names.push(vg.name.clone());
                flat.vertex_alive.push(true);
            }
            for &[a, b] in vg.graph.edges() {
                flat.edges.push([vo + a, vo + b]);
                flat.edge_alive.push(true);
            }
        }
        for tube in c.tubes() {
            let walks = [0, 1].map(|side| {
                let end = &tube.ends[side];
                let off = flat.edge_offsets[end.graph];
                end.walk
                    .iter()
                    .map(|s| Step {
                        edge: off + s.edge,
                        forward: s.forward,
                    })
                    .collect()
            });
            flat.tubes.push(walks);
        }
        flat
    }

    pub fn vertex(&self, graph: GraphId, v: VertexId) -> usize {
        self.vertex_offsets[graph] + v
    }

    pub fn edge(&self, graph: GraphId, e: usize) -> usize {
        self.edge_offsets[graph] + e
    }

    pub fn tail(&self, s: Step) -> usize {
        self.edges[s.edge][usize::from(!s.forward)]
    }

    pub fn add_vertex(&mut self, name: &str) -> usize {
        self.vertex_names.push(name.to_string());
        self.vertex_alive.push(true);
        self.vertex_names.len() - 1
    }

    pub fn add_edge(&mut self, a: usize, b: usize) -> usize {
        self.edges.push([a, b]);
        self.edge_alive.push(true);
        self.edges.len() - 1
    }

    fn live_edge_between(&self, a: usize, b: usize) -> bool {
        self.edges
            .iter()
            .zip(&self.edge_alive)
            .any(|(&[x, y], &alive)| alive && ((x, y) == (a, b) || (x, y) == (b, a)))
    }

    /// Joins `a` and `b` by a path that keeps the graph simplicial: a direct
    /// edge when possible, otherwise subdivided once (parallel edge) or twice
    /// (loop). Returns the new edges in path order from `a`.
    pub fn add_simplicial_path(&mut self, a: usize, b: usize) -> Vec<usize> {
        let name = self.vertex_names[a].clone();
        if a == b {
            let m1 = self.add_vertex(&name);
            let m2 = self.add_vertex(&name);
            vec![self.add_edge(a, m1), self.add_edge(m1, m2), self.add_edge(m2, a)]
        } else if self.live_edge_between(a, b) {
            let m = self.add_vertex(&name);
            vec![self.add_edge(a, m), self.add_edge(m, b)]
        } else {
            vec![self.add_edge(a, b)]
        }
    }

    /// Regroups live cells into connected vertex graphs.
    ///
    /// Components are ordered by least global vertex id; vertices and edges
    /// keep their global order inside a component. A component takes the name
    /// of its least vertex, suffixed when that name is already taken.
    pub fn rebuild(&self) -> TubularComplex {
        let n = self.vertex_names.len();
        let mut skeleton = MultiGraph::new(n);
        for (e, &[a, b]) in self.edges.iter().enumerate() {
            if self.edge_alive[e] {
                debug_assert!(self.vertex_alive[a] && self.vertex_alive[b]);
                skeleton.add_edge(a, b);
            }
        }
        let mut component_of = vec![usize::MAX; n];
        let mut local = vec![usize::MAX; n];
        let mut graphs: Vec<VertexGraph> = Vec::new();
        let mut bases: Vec<String> = Vec::new();
        for class in connected_components(&skeleton) {
            if !self.vertex_alive[class[0]] {
                continue;
            }
            let id = graphs.len();
            for (i, &v) in class.iter().enumerate() {
                component_of[v] = id;
                local[v] = i;
            }
            bases.push(self.vertex_names[class[0]].clone());
            graphs.push(VertexGraph {
                name: String::new(),
                graph: SimplicialGraph::new(class.len(), &[]).expect("no edges"),
            });
        }
        let mut edge_local = vec![usize::MAX; self.edges.len()];
        for (e, &[a, b]) in self.edges.iter().enumerate() {
            if self.edge_alive[e] {
                let g = &mut graphs[component_of[a]].graph;
                edge_local[e] = g
                    .try_add_edge(local[a], local[b])
                    .expect("moves keep vertex graphs simplicial");
            }
        }
        let tubes = self
            .tubes
            .iter()
            .map(|walks| {
                let ends = [0, 1].map(|side| {
                    let walk = &walks[side];
                    let graph = component_of[self.tail(walk[0])];
                    TubeEnd {
                        graph,
                        walk: walk
                            .iter()
                            .map(|s| {
                                debug_assert!(self.edge_alive[s.edge]);
                                debug_assert_eq!(component_of[self.tail(*s)], graph);
                                Step {
                                    edge: edge_local[s.edge],
                                    forward: s.forward,
                                }
                            })
                            .collect(),
                    }
                });
                Tube {
                    circle_len: walks[0].len(),
                    ends,
                }
            })
            .collect();
        let mut c = TubularComplex::new(graphs, tubes).expect("rebuild keeps indices in range");
        c.dedupe_names_per_piece(&bases);
        c
    }
}

impl TubularComplex {
    /// Names each vertex graph after `bases`, suffixing repeats within the
    /// same connected piece.
    fn dedupe_names_per_piece(&mut self, bases: &[String]) {
        for class in connected_components(&self.underlying()) {
            let mut names: BTreeSet<String> = BTreeSet::new();
            for s in class {
                let name = TubularComplex::fresh_name(&names, &bases[s]);
                names.insert(name.clone());
                self.graphs[s].name = name;
            }
        }
    }

    /// Splits a complex whose underlying graph is disconnected into its
    /// connected pieces, ordered by least vertex graph.
    pub fn connected_pieces(&self) -> Vec<TubularComplex> {
        let classes = connected_components(&self.underlying());
        if classes.len() <= 1 {
            return vec![self.clone()];
        }
        let mut piece_of = vec![(0, 0); self.graphs().len()];
        for (p, class) in classes.iter().enumerate() {
            for (i, &s) in class.iter().enumerate() {
                piece_of[s] = (p, i);
            }
        }
        let mut parts: Vec<(Vec<VertexGraph>, Vec<Tube>)> = classes
            .iter()
            .map(|class| (class.iter().map(|&s| self.graphs()[s].clone()).collect(), Vec::new()))
            .collect();
        for tube in self.tubes() {
            let (p, _) = piece_of[tube.ends[0].graph];
            let mut t = tube.clone();
            for end in &mut t.ends {
                end.graph = piece_of[end.graph].1;
            }
            parts[p].1.push(t);
        }
        parts
            .into_iter()
            .map(|(g, t)| TubularComplex::new(g, t).expect("indices remapped"))
            .collect()
    }
}
