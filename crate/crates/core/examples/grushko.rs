// Grushko decompositions by cutting along free-splitting witnesses.

use tubular::complex::fixtures::{three_cycle, torus, wedge_of_tori};
use tubular::complex::TubularComplex;
use tubular::engine::grushko;
use tubular::freewords::{build_double, WordSet};

fn main() {
    run();
}

pub fn run() {
    let inputs = [
        ("wedge of tori", wedge_of_tori()),
        ("3-cycle", three_cycle()),
        ("double of abAB cc", build_double(&WordSet::parse(3, "abAB cc").unwrap())),
    ];
    for (name, c) in inputs {
        let d = grushko(&c).unwrap();
        let sizes: Vec<usize> = d.pieces.iter().map(TubularComplex::square_count).collect();
        println!("{name}: pieces with {sizes:?} squares, free rank {}, {} cuts", d.free_rank, d.cut_log.len());
        let b: usize = d.pieces.iter().map(TubularComplex::betti1).sum();
        assert_eq!(c.betti1(), b + d.free_rank);
        assert!(d.pieces.iter().all(TubularComplex::is_brady_meier));
    }
    let d = grushko(&wedge_of_tori()).unwrap();
    assert!(d.pieces.iter().all(|p| p.is_isomorphic(&torus())));
}
