// Homotopy-preserving cleanup: hanging trees, rudimentary tubes and the
// thickness-one cascade.

use tubular::complex::{Step, Tube, TubularComplex, VertexGraph};
use tubular::graph::SimplicialGraph;
use tubular::simplify::{
    collapse_hanging_trees, find_witness, first_thickness_one_edge, remove_rudimentary_edges,
    remove_thickness_one_cascade,
};

fn main() {
    run();
}

pub fn run() {
    // A 3-cycle with a pendant path 0-3-4 and a torus tube on the cycle.
    let g = SimplicialGraph::new(5, &[[0, 1], [1, 2], [2, 0], [0, 3], [3, 4]]).unwrap();
    let walk: Vec<Step> = (0..3).map(Step::forward).collect();
    let c = TubularComplex::new(
        vec![VertexGraph { name: "s".into(), graph: g }],
        vec![Tube::new(0, walk.clone(), 0, walk)],
    )
    .unwrap();
    let collapsed = collapse_hanging_trees(&c);
    println!("hanging trees: {:?} -> {:?}", c.cell_counts(), collapsed.cell_counts());
    assert_eq!(collapsed.graph(0).vertex_count(), 3);

    // An annulus: a tube joining a circle to a circle that carries nothing else.
    let annulus = TubularComplex::new(
        vec![
            VertexGraph { name: "a".into(), graph: SimplicialGraph::cycle(3) },
            VertexGraph { name: "b".into(), graph: SimplicialGraph::cycle(3) },
        ],
        vec![Tube::new(0, (0..3).map(Step::forward).collect(), 1, (0..3).map(Step::forward).collect())],
    )
    .unwrap();
    println!("annulus witness: {}", find_witness(&annulus).map(|w| w.to_string()).unwrap_or_default());
    let reduced = remove_rudimentary_edges(&annulus);
    println!("rudimentary removal: {:?} -> {:?}", annulus.cell_counts(), reduced.cell_counts());
    assert_eq!(reduced.square_count(), 0);
    assert_eq!(reduced.betti1(), annulus.betti1());

    // The double of aba has thickness-one edges; the cascade removes them.
    let double = tubular::freewords::build_double(&tubular::freewords::WordSet::parse(2, "aba").unwrap());
    let e = first_thickness_one_edge(&double).unwrap();
    let after = remove_thickness_one_cascade(&double);
    println!("cascade from {e:?}: {:?} -> {:?}", double.cell_counts(), after.cell_counts());
    assert_eq!(after.betti1(), double.betti1());
    assert!(first_thickness_one_edge(&after).is_none());
}
