use std::collections::BTreeMap;

use serde::Serialize;

use super::{build_double, Letter, WordSet};
use crate::complex::LinkVertex;
use crate::graph::{self, End, MultiGraph};

/// Graph on `b_i^+` (vertex `2i`) and `b_i^-` (vertex `2i+1`) with one edge
/// from `terminal(x)` to `initial(y)` for each cyclically consecutive pair
/// `x y` of each word.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WhiteheadGraph {
    pub rank: usize,
    pub graph: MultiGraph,
}

/// `b_i^+` for `b_i` entering, `b_i^-` for `b_i` leaving.
pub(super) fn initial(x: Letter) -> usize {
    2 * x.generator + usize::from(x.inverse)
}

pub(super) fn terminal(x: Letter) -> usize {
    2 * x.generator + usize::from(!x.inverse)
}

impl WhiteheadGraph {
    /// Uses the words as given, without deduplication.
    pub fn new(ws: &WordSet) -> WhiteheadGraph {
        let mut graph = MultiGraph::new(2 * ws.rank());
        for w in ws.words() {
            let l = w.letters();
            for i in 0..l.len() {
                graph.add_edge(terminal(l[i]), initial(l[(i + 1) % l.len()]));
            }
        }
        WhiteheadGraph { rank: ws.rank(), graph }
    }

    pub fn label(&self, v: usize) -> String {
        let sign = if v.is_multiple_of(2) { '+' } else { '-' };
        format!("{}{sign}", (b'a' + (v / 2) as u8) as char)
    }

    pub fn is_connected(&self) -> bool {
        self.graph.is_connected()
    }

    pub fn cut_vertices(&self) -> Vec<usize> {
        graph::articulation_points(&self.graph).into_iter().collect()
    }

    /// First barycentric subdivision: originals keep their ids, edge `e`
    /// becomes midpoint `2n + e`.
    pub fn subdivision(&self) -> MultiGraph {
        let n = self.graph.vertex_count();
        let mut g = MultiGraph::new(n + self.graph.edge_count());
        for (e, &[x, y]) in self.graph.edges().iter().enumerate() {
            g.add_edge(x, n + e);
            g.add_edge(n + e, y);
        }
        g
    }

    pub fn summary(&self) -> WhiteheadSummary {
        WhiteheadSummary {
            rank: self.rank,
            vertices: (0..self.graph.vertex_count()).map(|v| self.label(v)).collect(),
            edges: self
                .graph
                .edges()
                .iter()
                .map(|&[x, y]| [self.label(x), self.label(y)])
                .collect(),
            connected: self.is_connected(),
            cut_vertices: self.cut_vertices().into_iter().map(|v| self.label(v)).collect(),
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct WhiteheadSummary {
    pub rank: usize,
    pub vertices: Vec<String>,
    pub edges: Vec<[String; 2]>,
    pub connected: bool,
    pub cut_vertices: Vec<String>,
}

/// Compares the link at the special vertex of the double with the
/// subdivided Whitehead graph of the deduplicated words. Checks abstract
/// isomorphism with vertical vertices matched to originals, then the
/// explicit labelling: half-edge `(3i, tail)` is `b_i^+` and `(3i+2, head)`
/// is `b_i^-`.
pub fn link_matches_whitehead(ws: &WordSet) -> bool {
    let ws = ws.deduplicated();
    let double = build_double(&ws);
    let link = double.vertex_link(0, 0).expect("special vertex exists");
    let wh = WhiteheadGraph::new(&ws);
    let sub = wh.subdivision();
    let n = wh.graph.vertex_count();
    let sub_colors: Vec<u32> = (0..sub.vertex_count()).map(|v| u32::from(v >= n)).collect();
    if !graph::colored_isomorphic(&link.graph, &link.colors(), &sub, &sub_colors) {
        return false;
    }

    let label = |x: usize| match link.vertices[x] {
        LinkVertex::Vertical(h) => match (h.edge % 3, h.end) {
            (0, End::Tail) => Some(2 * (h.edge / 3)),
            (2, End::Head) => Some(2 * (h.edge / 3) + 1),
            _ => None,
        },
        LinkVertex::Horizontal(_) => None,
    };
    let mut from_link: BTreeMap<(usize, usize), usize> = BTreeMap::new();
    for x in link.vertical_count()..link.vertices.len() {
        let ends: Vec<Option<usize>> = link.graph.neighbors(x).iter().map(|&(y, _)| label(y)).collect();
        let [Some(p), Some(q)] = ends[..] else {
            return false;
        };
        *from_link.entry((p.min(q), p.max(q))).or_default() += 1;
    }
    let mut from_words: BTreeMap<(usize, usize), usize> = BTreeMap::new();
    for &[p, q] in wh.graph.edges() {
        *from_words.entry((p.min(q), p.max(q))).or_default() += 1;
    }
    from_link == from_words
}
