// The `.tgg` document format: canonical output and located errors.

use tubular::complex::fixtures::wedge_of_tori;
use tubular::io::{parse_complex, to_canonical_json};

fn main() {
    run();
}

pub fn run() {
    let text = to_canonical_json(&wedge_of_tori());
    print!("{text}");
    assert_eq!(parse_complex(&text).unwrap(), wedge_of_tori());

    let sparse = r#"{"format_version": 1,
        "vertex_graphs": [{"name": "s", "vertices": [7, 3, 5], "edges": [[3, 5], [5, 7], [7, 3]]}],
        "tubes": [{"circle_len": 3, "end0": {"graph": 0, "walk": [1, 2, 3]}, "end1": {"graph": 0, "walk": [-3, -2, -1]}}]}"#;
    let c = parse_complex(sparse).unwrap();
    println!("relabeled ids: {:?}", c.graph(0).edges());
    assert!(c.validate().is_empty());

    for bad in [
        sparse.replace("\"circle_len\": 3", "\"circle_len\": 4"),
        sparse.replace("[7, 3]]", "[7, 9]]"),
        sparse.replace("\"name\": \"s\"", "\"name\": 1"),
    ] {
        let e = parse_complex(&bad).unwrap_err();
        assert!(e.path().is_some());
        println!("{e}");
    }
}
