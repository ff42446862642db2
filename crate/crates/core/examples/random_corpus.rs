// Seeded random complexes and word sets.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use tubular::engine::normalize;
use tubular::random::{random_complex, random_word_set, ComplexParams};

fn main() {
    run();
}

pub fn run() {
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    let mut tally = std::collections::BTreeMap::new();
    for _ in 0..100 {
        let Some(c) = random_complex(&mut rng, &ComplexParams::default(), 100) else { continue };
        *tally.entry(normalize(&c).unwrap().outcome.label()).or_insert(0) += 1;
    }
    println!("outcomes over 100 random complexes: {tally:?}");
    let ws = random_word_set(&mut rng, 3, 2, 3..=6);
    println!("random word set: {ws}");
    assert_eq!(ws.words().len(), 2);
}
