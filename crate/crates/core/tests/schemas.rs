mod common;

use common::{check, fixture, schema, tgg};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};
use tubular::engine::normalize;
use tubular::random::{random_complex, ComplexParams};

const FIXTURES: [&str; 5] = [
    "torus.tgg",
    "wedge_of_tori.tgg",
    "three_cycle.tgg",
    "double_aba.tgg",
    "double_commutator.tgg",
];

fn parse(s: &str) -> Value {
    serde_json::from_str(s).unwrap()
}

fn check_trace(stderr: &str) -> usize {
    let s = schema("trace_event");
    for line in stderr.lines() {
        check(&s, &parse(line)).unwrap_or_else(|e| panic!("{e}\n{line}"));
    }
    stderr.lines().count()
}

#[test]
fn fixtures_match_the_document_schema() {
    let s = schema("complex");
    for f in FIXTURES {
        let doc = parse(&std::fs::read_to_string(fixture(f)).unwrap());
        check(&s, &doc).unwrap();
    }
}

#[test]
fn validator_rejects_bad_documents() {
    let s = schema("complex");
    let mut doc = parse(&std::fs::read_to_string(fixture("torus.tgg")).unwrap());
    doc["tubes"][0]["end0"]["walk"][0] = json!(0);
    assert!(check(&s, &doc).is_err());
    doc["tubes"][0]["end0"]["walk"][0] = json!(1);
    doc["extra"] = json!(true);
    assert_eq!(check(&s, &doc).unwrap_err(), ": unexpected property extra");
}

#[test]
fn analyze_and_decompose_json_match_schemas() {
    let dir = tempfile::tempdir().unwrap();
    for f in FIXTURES {
        let path = dir.path().join(f);
        std::fs::copy(fixture(f), &path).unwrap();
        let p = path.to_str().unwrap();
        let (code, out, err) = tgg(&["analyze", p, "--json", "--trace"]);
        assert_eq!(code, 0, "{err}");
        let report = parse(&out);
        check(&schema("analyze"), &report).unwrap();
        check(&schema("complex"), &report["normal_form"]).unwrap();
        check_trace(&err);
        let (code, out, err) = tgg(&["decompose", p, "--json", "--trace"]);
        assert_eq!(code, 0, "{err}");
        check(&schema("decompose"), &parse(&out)).unwrap();
        check_trace(&err);
    }
}

#[test]
fn sl_move_traces_match_schema() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let dir = tempfile::tempdir().unwrap();
    let mut seen = 0;
    for k in 0..400 {
        let Some(c) = random_complex(&mut rng, &ComplexParams::default(), 100) else { continue };
        if normalize(&c).unwrap().sl_moves() == 0 {
            continue;
        }
        let path = dir.path().join(format!("r{k}.tgg"));
        tubular::io::write_complex(&path, &c).unwrap();
        let (code, out, err) = tgg(&["analyze", path.to_str().unwrap(), "--json", "--trace"]);
        assert_eq!(code, 0);
        check(&schema("analyze"), &parse(&out)).unwrap();
        assert!(err.contains("\"move\":\"sl_move\""));
        check_trace(&err);
        let (_, out, err) = tgg(&["decompose", path.to_str().unwrap(), "--json", "--trace"]);
        check(&schema("decompose"), &parse(&out)).unwrap();
        check_trace(&err);
        seen += 1;
        if seen == 5 {
            break;
        }
    }
    assert_eq!(seen, 5);
}

#[test]
fn separable_json_matches_schema() {
    let s = schema("separable");
    for words in ["aba", "abAB", "a b", "aabb", "abaB", "a"] {
        for extra in [&[][..], &["--oracle"][..]] {
            let mut args = vec!["separable", "-n", "2", "-w", words, "--json"];
            args.extend_from_slice(extra);
            let (code, out, err) = tgg(&args);
            assert_eq!(code, 0, "{err}");
            let report = parse(&out);
            check(&s, &report).unwrap();
            for e in report["certificate"].as_array().unwrap() {
                check(&schema("trace_event"), e).unwrap();
            }
        }
    }
}
