use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::TubularComplex;
use crate::graph::{connected_components, MultiGraph};

type SparseRow = BTreeMap<usize, BigRational>;

/// Rank over the rationals of a set of sparse integer rows.
pub(crate) fn rational_rank(rows: Vec<BTreeMap<usize, i64>>) -> usize {
    let mut pivots: BTreeMap<usize, SparseRow> = BTreeMap::new();
    for row in rows {
        let mut r: SparseRow = row
            .into_iter()
            .filter(|(_, v)| *v != 0)
            .map(|(k, v)| (k, BigRational::from_integer(BigInt::from(v))))
            .collect();
        // Reduce against existing pivots until the leading column is new.
        while let Some((&col, lead)) = r.iter().next() {
            let Some(p) = pivots.get(&col) else {
                let lead = lead.clone();
                for v in r.values_mut() {
                    *v = &*v / &lead;
                }
                pivots.insert(col, r);
                break;
            };
            let factor = lead.clone();
            for (k, pv) in p {
                let entry = r.entry(*k).or_insert_with(BigRational::zero);
                *entry = &*entry - &factor * pv;
            }
            r.retain(|_, v| !v.is_zero());
        }
    }
    debug_assert!(pivots.values().all(|r| r.values().next().is_some_and(One::is_one)));
    pivots.len()
}

impl TubularComplex {
    /// First Betti number over the rationals.
    ///
    /// Computed from the cellular chain complex. The boundary of square `i`
    /// of a tube is `w0[i] + h[i+1] - w1[i] - h[i]`; eliminating the
    /// horizontal edges leaves `circle_len - 1` independent rows per tube
    /// plus the single row `sum w0 - sum w1` in vertical-edge coordinates.
    /// Hence `b1 = dim Z1 - (sum (L - 1) + rank of the tube rows)`.
    pub fn betti1(&self) -> usize {
        let counts = self.cell_counts();

        // Components of the 1-skeleton: vertical edges plus horizontal edges.
        let offsets: Vec<usize> = self
            .graphs
            .iter()
            .scan(0, |acc, vg| {
                let start = *acc;
                *acc += vg.graph.vertex_count();
                Some(start)
            })
            .collect();
        let mut skeleton = MultiGraph::new(counts.vertices);
        for (s, vg) in self.graphs.iter().enumerate() {
            for &[a, b] in vg.graph.edges() {
                skeleton.add_edge(offsets[s] + a, offsets[s] + b);
            }
        }
        for tube in &self.tubes {
            let [e0, e1] = &tube.ends;
            let (g0, g1) = (self.graph(e0.graph), self.graph(e1.graph));
            for (s0, s1) in e0.walk.iter().zip(&e1.walk) {
                skeleton.add_edge(offsets[e0.graph] + s0.tail(g0), offsets[e1.graph] + s1.tail(g1));
            }
        }
        let components = connected_components(&skeleton).len();
        let cycle_rank = counts.vertical_edges + counts.horizontal_edges + components - counts.vertices;

        let edge_offsets: Vec<usize> = self
            .graphs
            .iter()
            .scan(0, |acc, vg| {
                let start = *acc;
                *acc += vg.graph.edge_count();
                Some(start)
            })
            .collect();
        let tube_rows: Vec<BTreeMap<usize, i64>> = self
            .tubes
            .iter()
            .map(|tube| {
                let mut row = BTreeMap::new();
                for (side, sign) in [(0, 1i64), (1, -1i64)] {
                    let end = &tube.ends[side];
                    for step in &end.walk {
                        let dir = if step.forward { 1 } else { -1 };
                        *row.entry(edge_offsets[end.graph] + step.edge).or_insert(0) += sign * dir;
                    }
                }
                row
            })
            .collect();
        let boundary_rank: usize = self
            .tubes
            .iter()
            .map(|t| t.circle_len.saturating_sub(1))
            .sum::<usize>()
            + rational_rank(tube_rows);

        cycle_rank - boundary_rank
    }
}
