// Free-group separability: Whitehead graphs, the double of a rose, and the
// classical minimization oracle.

use tubular::freewords::{
    is_separable, link_matches_whitehead, whitehead_oracle, WhiteheadGraph, WordSet, DEFAULT_BUDGET,
};

fn main() {
    run();
}

pub fn run() {
    for (n, words) in [(2, "aba"), (2, "abAB"), (2, "a b"), (2, "aabb"), (3, "abcABC"), (3, "abAB cc")] {
        let ws = WordSet::parse(n, words).unwrap();
        let wh = WhiteheadGraph::new(&ws);
        let s = is_separable(&ws).unwrap();
        let oracle = whitehead_oracle(&ws, DEFAULT_BUDGET).unwrap();
        println!(
            "{words:>8}: whitehead connected={} cut vertices={:?}; double -> {}; separable={} oracle={}",
            wh.is_connected(),
            wh.summary().cut_vertices,
            s.normal_form.outcome.label(),
            s.separable,
            oracle.separable
        );
        assert!(link_matches_whitehead(&ws));
        assert_eq!(s.separable, oracle.separable);
    }
}
