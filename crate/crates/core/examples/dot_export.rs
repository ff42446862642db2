// Graphviz output for a link and a Whitehead graph.

use tubular::dot::{link_to_dot, whitehead_to_dot};
use tubular::freewords::{build_double, WhiteheadGraph, WordSet};

fn main() {
    run();
}

pub fn run() {
    let ws = WordSet::parse(2, "aba").unwrap();
    let link = build_double(&ws).vertex_link(0, 0).unwrap();
    let a = link_to_dot(&link);
    let b = whitehead_to_dot(&WhiteheadGraph::new(&ws));
    print!("{a}{b}");
    assert!(a.contains("shape=box") && a.contains("shape=ellipse"));
    assert_eq!(b.matches(" -- ").count(), 3);
}
