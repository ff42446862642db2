// Cell counts, Euler characteristic and first Betti number.

use tubular::complex::fixtures::{three_cycle, torus, wedge_of_tori};
use tubular::freewords::{build_double, WordSet};

fn main() {
    run();
}

pub fn run() {
    let double = build_double(&WordSet::parse(2, "abAB").unwrap());
    for (name, c) in [
        ("torus", torus()),
        ("wedge of tori", wedge_of_tori()),
        ("3-cycle", three_cycle()),
        ("double of abAB", double),
    ] {
        let n = c.cell_counts();
        println!(
            "{name:>16}: V={} Ev={} Eh={} F={} chi={} b1={}",
            n.vertices,
            n.vertical_edges,
            n.horizontal_edges,
            n.squares,
            c.euler_characteristic(),
            c.betti1()
        );
        // Connected, so b0 = 1 and b2 = chi - 1 + b1.
        assert!(c.euler_characteristic() - 1 + c.betti1() as i64 >= 0);
    }
    assert_eq!((torus().euler_characteristic(), torus().betti1()), (0, 2));
}
