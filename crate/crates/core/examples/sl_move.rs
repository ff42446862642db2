// One opening at a vertex whose link has a vertical cut vertex.

use tubular::freewords::{build_double, WordSet};
use tubular::sl_move::{first_bm2_failure, open_at, plan_opening};

fn main() {
    run();
}

pub fn run() {
    let c = build_double(&WordSet::parse(2, "aba").unwrap());
    let (s, v, cut) = first_bm2_failure(&c).unwrap().expect("the special vertex fails");
    let plan = plan_opening(&c, s, v, cut).unwrap();
    println!(
        "opening vertex {v} of graph {s} at half-edge {:?}: {} link components",
        cut,
        plan.component_count()
    );
    let opened = open_at(&c, &plan).unwrap();
    for (label, x) in [("before", &c), ("after", &opened)] {
        println!(
            "{label:>6}: squares={} vertical edges={} chi={} b1={}",
            x.square_count(),
            x.vertical_edge_count(),
            x.euler_characteristic(),
            x.betti1()
        );
    }
    assert_eq!(opened.square_count(), c.square_count());
    assert_eq!(opened.euler_characteristic(), c.euler_characteristic());
    assert_eq!(opened.betti1(), c.betti1());
    assert!(opened.vertical_edge_count() > c.vertical_edge_count());
    assert!(opened.validate().is_empty());
}
