//! Seeded generators for valid complexes and word sets.

use rand::seq::IndexedRandom;
use rand::Rng;

use crate::complex::{Step, Tube, TubularComplex, VertexGraph};
use crate::freewords::{apply_whitehead, whitehead_automorphisms, Letter, Word, WordSet};
use crate::graph::{HalfEdge, SimplicialGraph};

#[derive(Debug, Clone)]
pub struct ComplexParams {
    pub graphs: std::ops::RangeInclusive<usize>,
    pub vertices: std::ops::RangeInclusive<usize>,
    /// Edges added on top of a spanning tree.
    pub extra_edges: std::ops::RangeInclusive<usize>,
    pub tubes: std::ops::RangeInclusive<usize>,
    pub circle_len: std::ops::RangeInclusive<usize>,
    pub max_squares: usize,
}

impl Default for ComplexParams {
    fn default() -> Self {
        ComplexParams {
            graphs: 1..=3,
            vertices: 3..=6,
            extra_edges: 1..=3,
            tubes: 1..=4,
            circle_len: 3..=8,
            max_squares: 40,
        }
    }
}

/// Random connected simplicial graph: a random tree plus up to `extra`
/// distinct chords.
pub fn random_graph<R: Rng>(rng: &mut R, vertices: usize, extra: usize) -> SimplicialGraph {
    let mut g = SimplicialGraph::new(vertices, &[]).expect("no edges");
    for v in 1..vertices {
        let u = rng.random_range(0..v);
        g.try_add_edge(u, v).expect("tree edge is new");
    }
    for _ in 0..extra * 4 {
        if g.edge_count() >= vertices - 1 + extra {
            break;
        }
        let (a, b) = (rng.random_range(0..vertices), rng.random_range(0..vertices));
        let _ = g.try_add_edge(a, b);
    }
    g
}

fn step_from(h: HalfEdge) -> Step {
    Step {
        edge: h.edge,
        forward: h.end == crate::graph::End::Tail,
    }
}

/// Random closed immersed walk of exactly `len` steps, if one is found
/// within `attempts` tries.
pub fn random_closed_walk<R: Rng>(
    rng: &mut R,
    g: &SimplicialGraph,
    len: usize,
    attempts: usize,
) -> Option<Vec<Step>> {
    if g.edge_count() == 0 || len < 3 {
        return None;
    }
    for _ in 0..attempts {
        let start = rng.random_range(0..g.vertex_count());
        let mut walk: Vec<Step> = Vec::with_capacity(len);
        let mut at = start;
        for i in 0..len {
            let options: Vec<Step> = g
                .half_edges_at(at)
                .into_iter()
                .map(step_from)
                .filter(|s| walk.last().is_none_or(|p| p.edge != s.edge))
                .filter(|s| i + 1 < len || s.head(g) == start)
                .collect();
            let Some(&s) = options.choose(rng) else { break };
            walk.push(s);
            at = s.head(g);
        }
        if walk.len() == len && at == start && walk[0].edge != walk[len - 1].edge {
            return Some(walk);
        }
    }
    None
}

/// Random valid complex, or `None` if none is found within `attempts`.
pub fn random_complex<R: Rng>(rng: &mut R, p: &ComplexParams, attempts: usize) -> Option<TubularComplex> {
    'outer: for _ in 0..attempts {
        let graphs: Vec<VertexGraph> = (0..rng.random_range(p.graphs.clone()))
            .map(|s| {
                let n = rng.random_range(p.vertices.clone());
                let extra = rng.random_range(p.extra_edges.clone());
                VertexGraph {
                    name: format!("g{s}"),
                    graph: random_graph(rng, n, extra),
                }
            })
            .collect();
        let mut tubes = Vec::new();
        let mut squares = 0;
        let tube_count = rng.random_range(p.tubes.clone()).max(graphs.len() - 1);
        for t in 0..tube_count {
            // The first tubes chain the graphs together so the result is connected.
            let (g0, g1) = if t + 1 < graphs.len() {
                (t, t + 1)
            } else {
                (rng.random_range(0..graphs.len()), rng.random_range(0..graphs.len()))
            };
            let len = rng.random_range(p.circle_len.clone());
            squares += len;
            if squares > p.max_squares {
                continue 'outer;
            }
            let (Some(w0), Some(w1)) = (
                random_closed_walk(rng, &graphs[g0].graph, len, 50),
                random_closed_walk(rng, &graphs[g1].graph, len, 50),
            ) else {
                continue 'outer;
            };
            tubes.push(Tube::new(g0, w0, g1, w1));
        }
        let c = TubularComplex::new(graphs, tubes).expect("indices in range");
        if c.validate().is_empty() {
            return Some(c);
        }
    }
    None
}

/// Random cyclically reduced word of exactly `len` letters.
pub fn random_word<R: Rng>(rng: &mut R, rank: usize, len: usize) -> Word {
    loop {
        let mut letters: Vec<Letter> = Vec::with_capacity(len);
        while letters.len() < len {
            let x = Letter::new(rng.random_range(0..rank), rng.random_bool(0.5));
            if letters.last() != Some(&x.inv()) {
                letters.push(x);
            }
        }
        if len == 1 || letters[0] != letters[len - 1].inv() {
            return Word::new(&letters).expect("reduced and nonempty");
        }
    }
}

/// `count` random words with lengths drawn from `lengths`.
pub fn random_word_set<R: Rng>(
    rng: &mut R,
    rank: usize,
    count: usize,
    lengths: std::ops::RangeInclusive<usize>,
) -> WordSet {
    let words = (0..count)
        .map(|_| {
            let len = rng.random_range(lengths.clone());
            random_word(rng, rank, len).letters().to_vec()
        })
        .collect();
    WordSet::new(rank, words).expect("random words are nontrivial")
}

/// Applies random length-increasing Whitehead automorphisms to `ws` until
/// its total length reaches `min_total`. Separability is preserved, so
/// starting from a split set gives separable sets whose Whitehead graphs are
/// usually connected with cut vertices.
pub fn random_automorphic_image<R: Rng>(rng: &mut R, ws: &WordSet, min_total: usize) -> WordSet {
    let autos: Vec<_> = whitehead_automorphisms(ws.rank()).collect();
    let mut words: Vec<Word> = ws.words().to_vec();
    let total = |ws: &[Word]| ws.iter().map(Word::len).sum::<usize>();
    while total(&words) < min_total {
        let phi = autos.choose(rng).expect("rank at least 2");
        let next: Vec<Word> = words.iter().map(|w| apply_whitehead(phi, w)).collect();
        if total(&next) > total(&words) {
            words = next;
        }
    }
    WordSet::new(ws.rank(), words.iter().map(|w| w.letters().to_vec()).collect()).expect("nontrivial")
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn generated_complexes_validate() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        let mut found = 0;
        for _ in 0..50 {
            if let Some(c) = random_complex(&mut rng, &ComplexParams::default(), 100) {
                assert!(c.validate().is_empty());
                assert!(c.square_count() <= 40);
                found += 1;
            }
        }
        assert!(found > 25, "only {found} complexes");
    }

    #[test]
    fn words_are_cyclically_reduced() {
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        for len in 1..10 {
            let w = random_word(&mut rng, 3, len);
            assert_eq!(w.len(), len);
        }
    }

    #[test]
    fn automorphic_images_reach_the_target_length() {
        let mut rng = ChaCha8Rng::seed_from_u64(4);
        let base = WordSet::parse(2, "aaa bbb").unwrap();
        let ws = random_automorphic_image(&mut rng, &base, 20);
        assert!(ws.total_length() >= 20);
        assert_eq!(ws.words().len(), 2);
    }

    #[test]
    fn same_seed_same_output() {
        let a = random_complex(&mut ChaCha8Rng::seed_from_u64(3), &ComplexParams::default(), 100);
        let b = random_complex(&mut ChaCha8Rng::seed_from_u64(3), &ComplexParams::default(), 100);
        assert_eq!(a, b);
    }
}
