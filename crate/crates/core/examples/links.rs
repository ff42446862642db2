// Vertex links and the Brady-Meier conditions on two small complexes.

use tubular::complex::fixtures::{torus, wedge_of_tori};
use tubular::dot::link_label;
use tubular::sl_move::{satisfies_bm1, satisfies_bm2, satisfies_brady_meier_fast};

fn main() {
    run();
}

pub fn run() {
    for (name, c) in [("torus", torus()), ("wedge of tori", wedge_of_tori())] {
        println!("{name}:");
        for (s, links) in c.all_links().iter().enumerate() {
            for (v, link) in links.iter().enumerate() {
                let bm = satisfies_bm1(link) && satisfies_bm2(link);
                assert_eq!(bm, satisfies_brady_meier_fast(link));
                let edges: Vec<String> = link
                    .graph
                    .edges()
                    .iter()
                    .map(|&[a, b]| format!("{}-{}", link_label(&link.vertices[a]), link_label(&link.vertices[b])))
                    .collect();
                println!("  ({s},{v}) bm={bm} {}", edges.join(" "));
            }
        }
        println!("  brady-meier: {}", c.is_brady_meier());
    }
    assert!(torus().is_brady_meier());
    assert!(!wedge_of_tori().is_brady_meier());
}
