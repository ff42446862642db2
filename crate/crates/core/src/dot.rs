//! Graphviz export. Vertical link vertices and Whitehead-graph vertices are
//! drawn as filled blue ellipses, horizontal link vertices as orange boxes.

use std::fmt::Write;

use crate::complex::{LinkGraph, LinkVertex};
use crate::freewords::WhiteheadGraph;
use crate::graph::{End, MultiGraph};

const VERTICAL: &str = "shape=ellipse style=filled fillcolor=\"#9ecae1\"";
const HORIZONTAL: &str = "shape=box style=filled fillcolor=\"#fdae6b\"";

pub fn link_label(v: &LinkVertex) -> String {
    match v {
        LinkVertex::Vertical(h) => {
            let end = match h.end {
                End::Tail => "t",
                End::Head => "h",
            };
            format!("e{}{end}", h.edge)
        }
        LinkVertex::Horizontal(c) => format!("T{}.{}@{}", c.tube, c.side, c.position),
    }
}

fn emit(name: &str, g: &MultiGraph, labels: &[String], styles: &[&str]) -> String {
    let mut out = String::new();
    writeln!(out, "graph {name} {{").unwrap();
    for (v, (label, style)) in labels.iter().zip(styles).enumerate() {
        writeln!(out, "  n{v} [label=\"{}\" {style}];", label.replace('"', "\\\"")).unwrap();
    }
    for &[a, b] in g.edges() {
        writeln!(out, "  n{a} -- n{b};").unwrap();
    }
    out.push_str("}\n");
    out
}

pub fn link_to_dot(link: &LinkGraph) -> String {
    let labels: Vec<String> = link.vertices.iter().map(link_label).collect();
    let styles: Vec<&str> = (0..labels.len())
        .map(|x| if link.is_vertical(x) { VERTICAL } else { HORIZONTAL })
        .collect();
    emit("link", &link.graph, &labels, &styles)
}

pub fn whitehead_to_dot(wh: &WhiteheadGraph) -> String {
    let n = wh.graph.vertex_count();
    let labels: Vec<String> = (0..n).map(|v| wh.label(v)).collect();
    emit("whitehead", &wh.graph, &labels, &vec![VERTICAL; n])
}
