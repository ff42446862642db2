//! Acceptance suite. Prints one PASS/FAIL line per criterion and exits
//! nonzero if any gated criterion fails. Criterion 9 is reported only.

use std::collections::BTreeMap;
use std::path::Path;
use std::process::Command;
use std::time::{Duration, Instant};

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use tubular::complex::fixtures::{three_cycle, torus, wedge_of_tori};
use tubular::complex::TubularComplex;
use tubular::engine::{grushko, normalize, replay_states, Move, Outcome};
use tubular::freewords::{
    build_double, cyclic_words, is_separable, link_matches_whitehead, whitehead_oracle, Word, WordSet, WhiteheadGraph,
    DEFAULT_BUDGET,
};
use tubular::random::{random_complex, random_word_set, ComplexParams};

struct Verdict {
    pass: Option<bool>,
    detail: String,
}

fn pass(ok: bool, detail: String) -> Verdict {
    Verdict { pass: Some(ok), detail }
}

fn fixtures() -> Vec<(&'static str, TubularComplex)> {
    vec![("torus", torus()), ("wedge_of_tori", wedge_of_tori()), ("three_cycle", three_cycle())]
}

fn random_corpus(seed: u64, count: usize) -> Vec<TubularComplex> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .filter_map(|_| random_complex(&mut rng, &ComplexParams::default(), 200))
        .collect()
}

fn criterion_1(opening_inputs: &mut Vec<TubularComplex>) -> Verdict {
    let mut rng = ChaCha8Rng::seed_from_u64(0xC1);
    let (mut tested, mut moves, mut failures, mut drawn) = (0, 0, Vec::new(), 0);
    let mut slowest = Duration::ZERO;
    while tested < 200 && drawn < 100_000 {
        drawn += 1;
        let Some(c) = random_complex(&mut rng, &ComplexParams::default(), 200) else { continue };
        let start = Instant::now();
        let nf = normalize(&c).expect("valid input");
        if nf.sl_moves() == 0 {
            continue;
        }
        let states = replay_states(&c, &nf.trace).expect("trace replays");
        slowest = slowest.max(start.elapsed());
        let mut prev = &c;
        for (e, x) in nf.trace.iter().zip(&states) {
            if matches!(e.action, Move::SlMove(_)) {
                moves += 1;
                let ok = x.square_count() == prev.square_count()
                    && x.euler_characteristic() == prev.euler_characteristic()
                    && x.betti1() == prev.betti1()
                    && x.vertical_edge_count() > prev.vertical_edge_count();
                if !ok {
                    failures.push(tested);
                }
            }
            prev = x;
        }
        opening_inputs.push(c);
        tested += 1;
    }
    let ok = tested == 200 && failures.is_empty() && slowest < Duration::from_secs(1);
    pass(
        ok,
        format!(
            "{tested} complexes ({drawn} drawn), {moves} SL-moves, {} violations, slowest {:.1} ms",
            failures.len(),
            slowest.as_secs_f64() * 1e3
        ),
    )
}

fn criterion_2(inputs: &[TubularComplex]) -> Verdict {
    let (mut bad, mut most, mut total) = (0, (0, 0), 0);
    for c in inputs {
        let nf = normalize(c).expect("valid input");
        let m = (nf.sl_moves(), nf.squares_at_loop);
        bad += usize::from(m.0 > m.1);
        total += m.0;
        if m.0 > most.0 {
            most = m;
        }
    }
    pass(
        bad == 0,
        format!(
            "{} inputs, {total} SL-moves, {bad} over the bound, most {} moves on {} squares",
            inputs.len(),
            most.0,
            most.1
        ),
    )
}

fn criterion_3(corpus: &[TubularComplex]) -> Verdict {
    let start = Instant::now();
    let mut failures = BTreeMap::new();
    let mut pieces_seen = 0;
    let inputs = fixtures().into_iter().map(|(_, c)| c).chain(corpus.iter().cloned());
    let mut count = 0;
    for c in inputs {
        count += 1;
        let d = grushko(&c).expect("valid input");
        let b: usize = d.pieces.iter().map(TubularComplex::betti1).sum();
        if c.betti1() != b + d.free_rank {
            *failures.entry("betti1 identity").or_insert(0) += 1;
        }
        if d.pieces.iter().map(TubularComplex::square_count).sum::<usize>() > c.square_count() {
            *failures.entry("square count").or_insert(0) += 1;
        }
        for p in &d.pieces {
            pieces_seen += 1;
            if !p.is_brady_meier() {
                *failures.entry("piece not Brady-Meier").or_insert(0) += 1;
            }
            let again = grushko(p).expect("pieces are valid");
            if again.free_rank != 0 || again.pieces.len() != 1 || !again.pieces[0].is_isomorphic(p) {
                *failures.entry("not idempotent").or_insert(0) += 1;
            }
        }
    }
    let elapsed = start.elapsed();
    pass(
        failures.is_empty() && elapsed < Duration::from_secs(120),
        format!("{count} inputs, {pieces_seen} pieces, failures {failures:?}, {:.2} s", elapsed.as_secs_f64()),
    )
}

fn criterion_4() -> Verdict {
    let t = normalize(&torus()).unwrap();
    let torus_ok = t.outcome == Outcome::BradyMeier && t.move_count() == 0;
    let w = grushko(&wedge_of_tori()).unwrap();
    let wedge_ok = w.free_rank == 0 && w.pieces.len() == 2 && w.pieces.iter().all(|p| p.is_isomorphic(&torus()));
    let c = grushko(&three_cycle()).unwrap();
    let cycle_ok = c.free_rank == 1 && c.pieces.is_empty();
    pass(
        torus_ok && wedge_ok && cycle_ok,
        format!("torus {torus_ok}, wedge of tori {wedge_ok}, 3-cycle {cycle_ok}"),
    )
}

fn criterion_5() -> Verdict {
    let wh = WhiteheadGraph::new(&WordSet::parse(2, "aba").unwrap());
    let g = &wh.graph;
    let mut degrees: Vec<usize> = (0..4).map(|v| g.degree(v)).collect();
    degrees.sort();
    let is_path = g.vertex_count() == 4 && g.edge_count() == 3 && g.is_connected() && degrees == [1, 1, 2, 2];
    // The figure: b1+ b2+, b1- b2-, b1+ b1-. Swap the signs of b2 and compare labels.
    let swap = |v: usize| if v / 2 == 1 { v ^ 1 } else { v };
    let mut ours: Vec<[usize; 2]> = g
        .edges()
        .iter()
        .map(|&[x, y]| {
            let (x, y) = (swap(x), swap(y));
            [x.min(y), x.max(y)]
        })
        .collect();
    ours.sort();
    let mut figure = vec![[0, 2], [1, 3], [0, 1]];
    figure.sort();
    let cuts = wh.cut_vertices().len();
    pass(
        is_path && ours == figure && cuts >= 1,
        format!("path {is_path}, labels match after b2 sign swap {}, {cuts} cut vertices", ours == figure),
    )
}

/// Sets of distinct cyclic-word classes in rank 2 with total length at most `max`.
fn rank_two_sets(max: usize) -> Vec<Vec<Word>> {
    let classes: Vec<Word> = (1..=max).flat_map(|l| cyclic_words(2, l)).collect();
    let mut out = Vec::new();
    let mut chosen = Vec::new();
    fn go(classes: &[Word], from: usize, budget: usize, chosen: &mut Vec<Word>, out: &mut Vec<Vec<Word>>) {
        for i in from..classes.len() {
            if classes[i].len() <= budget {
                chosen.push(classes[i].clone());
                out.push(chosen.clone());
                go(classes, i + 1, budget - classes[i].len(), chosen, out);
                chosen.pop();
            }
        }
    }
    go(&classes, 0, max, &mut chosen, &mut out);
    out
}

fn set_of(rank: usize, words: &[Word]) -> WordSet {
    WordSet::new(rank, words.iter().map(|w| w.letters().to_vec()).collect()).unwrap()
}

fn criterion_6() -> Verdict {
    let start = Instant::now();
    let sets = rank_two_sets(8);
    let mut mismatches = Vec::new();
    for ws in &sets {
        let ws = set_of(2, ws);
        if !link_matches_whitehead(&ws) {
            mismatches.push(ws.to_string());
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(0xC6);
    for _ in 0..200 {
        let count = rand::Rng::random_range(&mut rng, 1..=3);
        let ws = random_word_set(&mut rng, 3, count, 1..=6);
        if !link_matches_whitehead(&ws) {
            mismatches.push(ws.to_string());
        }
    }
    let elapsed = start.elapsed();
    pass(
        mismatches.is_empty() && elapsed < Duration::from_secs(300),
        format!(
            "{} rank-2 sets + 200 rank-3 sets, {} mismatches {:?}, {:.2} s",
            sets.len(),
            mismatches.len(),
            mismatches.iter().take(3).collect::<Vec<_>>(),
            elapsed.as_secs_f64()
        ),
    )
}

fn criterion_7() -> Verdict {
    let start = Instant::now();
    let mut inputs: Vec<WordSet> = (1..=8)
        .flat_map(|l| cyclic_words(2, l))
        .map(|w| set_of(2, &[w]))
        .collect();
    let singles = inputs.len();
    for s in ["a b", "abAB", "aba"] {
        inputs.push(WordSet::parse(2, s).unwrap());
    }
    let (mut agree, mut inconclusive, mut disagree) = (0, 0, Vec::new());
    for ws in &inputs {
        let engine = is_separable(ws).expect("valid words").separable;
        match whitehead_oracle(ws, DEFAULT_BUDGET) {
            Ok(v) if v.separable == engine => agree += 1,
            Ok(_) => disagree.push(ws.to_string()),
            Err(_) => inconclusive += 1,
        }
    }
    let elapsed = start.elapsed();
    pass(
        disagree.is_empty() && elapsed < Duration::from_secs(600),
        format!(
            "{singles} single words + 3 sets: {agree} agree, {} disagree {:?}, {inconclusive} inconclusive, {:.2} s",
            disagree.len(),
            disagree,
            elapsed.as_secs_f64()
        ),
    )
}

fn run_tgg(args: &[&str]) -> (i32, Vec<u8>, Vec<u8>) {
    let out = Command::new(env!("CARGO_BIN_EXE_tgg")).args(args).output().expect("tgg runs");
    (out.status.code().unwrap_or(-1), out.stdout, out.stderr)
}

fn directory_bytes(dir: &Path) -> Vec<(String, Vec<u8>)> {
    let mut files: Vec<(String, Vec<u8>)> = std::fs::read_dir(dir)
        .unwrap()
        .map(|e| e.unwrap().path())
        .map(|p| (p.file_name().unwrap().to_string_lossy().into_owned(), std::fs::read(&p).unwrap()))
        .collect();
    files.sort();
    files
}

fn criterion_8() -> Verdict {
    let fixture_dir = Path::new(env!("CARGO_MANIFEST_DIR")).join("fixtures");
    let mut names: Vec<String> = std::fs::read_dir(&fixture_dir)
        .unwrap()
        .map(|e| e.unwrap().file_name().to_string_lossy().into_owned())
        .filter(|n| n.ends_with(".tgg"))
        .collect();
    names.sort();
    let mut differing = Vec::new();
    for name in &names {
        let mut runs = Vec::new();
        for _ in 0..3 {
            let dir = tempfile::tempdir().unwrap();
            let input = dir.path().join(name);
            std::fs::copy(fixture_dir.join(name), &input).unwrap();
            let p = input.to_str().unwrap();
            let outputs = [
                run_tgg(&["analyze", p, "--trace"]),
                run_tgg(&["analyze", p, "--trace", "--json"]),
                run_tgg(&["decompose", p, "--trace"]),
                run_tgg(&["decompose", p, "--trace", "--json"]),
            ];
            runs.push((outputs, directory_bytes(dir.path())));
        }
        if runs.windows(2).any(|w| w[0] != w[1]) {
            differing.push(name.clone());
        }
    }
    pass(
        differing.is_empty(),
        format!("{} fixtures x 3 runs of analyze/decompose, differing: {differing:?}", names.len()),
    )
}

/// Median normalize time and total openings over five inputs per size.
fn timing_series(sizes: &[usize], mut make: impl FnMut(usize) -> TubularComplex) -> Vec<(f64, f64, usize)> {
    sizes
        .iter()
        .map(|&squares| {
            let mut runs: Vec<(f64, usize, usize)> = (0..5)
                .map(|_| {
                    let c = make(squares);
                    let start = Instant::now();
                    let nf = normalize(&c).unwrap();
                    (start.elapsed().as_secs_f64(), c.square_count(), nf.sl_moves())
                })
                .collect();
            let openings = runs.iter().map(|r| r.2).sum();
            runs.sort_by(|x, y| x.0.total_cmp(&y.0));
            let (t, sq, _) = runs[2];
            (sq as f64, t, openings)
        })
        .collect()
}

fn describe(points: &[(f64, f64, usize)]) -> String {
    let slope = |a: (f64, f64, usize), b: (f64, f64, usize)| (b.1.ln() - a.1.ln()) / (b.0.ln() - a.0.ln());
    let overall = slope(points[0], points[3]);
    let last = slope(points[2], points[3]);
    let table: Vec<String> = points
        .iter()
        .map(|(s, t, k)| format!("{s:.0} sq {:.2} ms/{k} openings", t * 1e3))
        .collect();
    format!(
        "{}; log-log slope {overall:.2} overall, {last:.2} last step ({})",
        table.join(", "),
        if last < 3.0 { "sub-cubic" } else { "not sub-cubic" }
    )
}

fn criterion_9() -> Verdict {
    let sizes = [30usize, 90, 270, 810];
    let mut rng = ChaCha8Rng::seed_from_u64(0xC9);
    let plain = timing_series(&sizes, |squares| {
        let total = squares / 3;
        let a = tubular::random::random_word(&mut rng, 2, total / 2);
        let b = tubular::random::random_word(&mut rng, 2, total - total / 2);
        build_double(&set_of(2, &[a, b]))
    });
    let mut rng = ChaCha8Rng::seed_from_u64(0xC9 + 1);
    let base = WordSet::parse(2, "aaa bbb").unwrap();
    let opening = timing_series(&sizes, |squares| {
        build_double(&tubular::random::random_automorphic_image(&mut rng, &base, squares / 3))
    });
    Verdict {
        pass: None,
        detail: format!("random words: {}. automorphic images of aaa bbb: {}", describe(&plain), describe(&opening)),
    }
}

fn main() {
    let mut opening_inputs = Vec::new();
    let c1 = criterion_1(&mut opening_inputs);
    let corpus = random_corpus(0xC3, 200);
    let mut bound_inputs: Vec<TubularComplex> = fixtures().into_iter().map(|(_, c)| c).collect();
    bound_inputs.extend(opening_inputs);
    bound_inputs.extend(corpus.iter().cloned());
    bound_inputs.extend(rank_two_sets(6).iter().map(|ws| build_double(&set_of(2, ws))));

    let results = [
        (1, "SL-move invariants", c1),
        (2, "opening count bounded by squares", criterion_2(&bound_inputs)),
        (3, "Grushko identities", criterion_3(&corpus)),
        (4, "fixtures", criterion_4()),
        (5, "Whitehead graph of b1 b2 b1", criterion_5()),
        (6, "special-vertex link is the subdivided Whitehead graph", criterion_6()),
        (7, "separability agrees with the Whitehead oracle", criterion_7()),
        (8, "determinism", criterion_8()),
        (9, "normalize scaling on doubles", criterion_9()),
    ];
    let mut failed = 0;
    for (id, name, v) in &results {
        let tag = match v.pass {
            Some(true) => "PASS",
            Some(false) => {
                failed += 1;
                "FAIL"
            }
            None => "INFO",
        };
        println!("criterion {id} {tag}: {name}: {}", v.detail);
    }
    if failed > 0 {
        eprintln!("{failed} acceptance criteria failed");
        std::process::exit(1);
    }
}
