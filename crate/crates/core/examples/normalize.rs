// The normalization loop and its trace on a random complex that needs
// openings.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use tubular::engine::{normalize, replay};
use tubular::random::{random_complex, ComplexParams};

fn main() {
    run();
}

pub fn run() {
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    let (c, nf) = loop {
        let c = random_complex(&mut rng, &ComplexParams::default(), 100).expect("generator succeeds");
        let nf = normalize(&c).unwrap();
        if nf.sl_moves() > 0 {
            break (c, nf);
        }
    };
    println!("input: {:?}", c.cell_counts());
    for e in &nf.trace {
        println!("  {}", serde_json::to_string(e).unwrap());
    }
    println!("outcome: {:?}", nf.outcome);
    assert!(nf.sl_moves() <= nf.squares_at_loop);
    assert_eq!(replay(&c, &nf.trace).unwrap(), nf.complex);
}
