use tubular::freewords::{cyclic_words, is_separable, whitehead_oracle, WordSet, DEFAULT_BUDGET};

#[test]
fn engine_agrees_with_oracle_on_short_words() {
    let mut inconclusive = 0;
    for len in 1..=8 {
        for w in cyclic_words(2, len) {
            let ws = WordSet::parse(2, &w.to_string()).unwrap();
            let engine = is_separable(&ws).unwrap().separable;
            match whitehead_oracle(&ws, DEFAULT_BUDGET) {
                Ok(v) => assert_eq!(engine, v.separable, "{w}"),
                Err(_) => inconclusive += 1,
            }
        }
    }
    assert_eq!(inconclusive, 0);
}

use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use tubular::freewords::{link_matches_whitehead, WhiteheadGraph};
use tubular::random::{random_automorphic_image, random_word_set};

fn word_set(rank: usize, seed: u64) -> WordSet {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let count = 1 + (seed % 3) as usize;
    random_word_set(&mut rng, rank, count, 1..=7)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn special_link_is_subdivided_whitehead_graph(rank in 2usize..=3, seed in any::<u64>()) {
        prop_assert!(link_matches_whitehead(&word_set(rank, seed)));
    }

    #[test]
    fn biconnected_whitehead_graph_means_not_separable(rank in 2usize..=3, seed in any::<u64>()) {
        let ws = word_set(rank, seed);
        let wh = WhiteheadGraph::new(&ws.deduplicated());
        if wh.is_connected() && wh.cut_vertices().is_empty() {
            prop_assert!(!is_separable(&ws).unwrap().separable);
        }
    }

    #[test]
    fn images_of_split_sets_stay_separable(seed in any::<u64>(), target in 4usize..30) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let ws = random_automorphic_image(&mut rng, &WordSet::parse(2, "aa bb").unwrap(), target);
        let s = is_separable(&ws).unwrap();
        prop_assert!(s.separable, "{}", ws);
        let d = s.decomposition.unwrap();
        let b: usize = d.pieces.iter().map(|p| p.betti1()).sum();
        prop_assert_eq!(s.double.betti1(), b + d.free_rank);
    }

    #[test]
    fn oracle_agrees_on_random_sets(rank in 2usize..=3, seed in any::<u64>()) {
        let ws = word_set(rank, seed);
        if let Ok(v) = whitehead_oracle(&ws, DEFAULT_BUDGET) {
            prop_assert_eq!(v.separable, is_separable(&ws).unwrap().separable, "{}", ws);
        }
    }
}
