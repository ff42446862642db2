//! The `.tgg` JSON document format.
//!
//! ```json
//! {
//!   "format_version": 1,
//!   "vertex_graphs": [
//!     { "name": "s", "vertices": [0, 1, 2], "edges": [[0, 1], [1, 2], [2, 0]] }
//!   ],
//!   "tubes": [
//!     { "circle_len": 3,
//!       "end0": { "graph": 0, "walk": [1, 2, 3] },
//!       "end1": { "graph": 0, "walk": [1, 2, 3] } }
//!   ]
//! }
//! ```
//!
//! Vertex ids are arbitrary distinct integers and are relabeled densely in
//! ascending order. A walk entry `k > 0` traverses edge `k - 1` (1-based, in
//! list order) from its first to its second endpoint; `-k` traverses it
//! backwards. Serialization always writes dense ids, sorted keys and the
//! stored edge order, so equal complexes serialize identically.

use std::collections::BTreeMap;
use std::path::Path;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::complex::{Step, Tube, TubeEnd, TubularComplex, VertexGraph};
use crate::graph::{GraphError, SimplicialGraph};

pub const FORMAT_VERSION: u32 = 1;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GraphDocument {
    pub name: String,
    pub vertices: Vec<i64>,
    pub edges: Vec<[i64; 2]>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct EndDocument {
    pub graph: usize,
    pub walk: Vec<i64>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TubeDocument {
    pub circle_len: usize,
    pub end0: EndDocument,
    pub end1: EndDocument,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ComplexDocument {
    pub format_version: u32,
    pub vertex_graphs: Vec<GraphDocument>,
    #[serde(default)]
    pub tubes: Vec<TubeDocument>,
}

#[derive(Debug, Error)]
pub enum DocumentError {
    #[error("{path}: {message}")]
    Schema { path: String, message: String },
    #[error("{0}")]
    Io(#[from] std::io::Error),
}

impl DocumentError {
    fn at(path: impl Into<String>, message: impl Into<String>) -> DocumentError {
        DocumentError::Schema {
            path: path.into(),
            message: message.into(),
        }
    }

    /// JSON pointer of a schema error.
    pub fn path(&self) -> Option<&str> {
        match self {
            DocumentError::Schema { path, .. } => Some(path),
            DocumentError::Io(_) => None,
        }
    }
}

impl ComplexDocument {
    pub fn from_complex(c: &TubularComplex) -> ComplexDocument {
        let end = |e: &TubeEnd| EndDocument {
            graph: e.graph,
            walk: e
                .walk
                .iter()
                .map(|s| {
                    let k = s.edge as i64 + 1;
                    if s.forward {
                        k
                    } else {
                        -k
                    }
                })
                .collect(),
        };
        ComplexDocument {
            format_version: FORMAT_VERSION,
            vertex_graphs: c
                .graphs()
                .iter()
                .map(|vg| GraphDocument {
                    name: vg.name.clone(),
                    vertices: (0..vg.graph.vertex_count() as i64).collect(),
                    edges: vg.graph.edges().iter().map(|&[a, b]| [a as i64, b as i64]).collect(),
                })
                .collect(),
            tubes: c
                .tubes()
                .iter()
                .map(|t| TubeDocument {
                    circle_len: t.circle_len,
                    end0: end(&t.ends[0]),
                    end1: end(&t.ends[1]),
                })
                .collect(),
        }
    }

    /// Converts to a complex, checking every index. Geometric conditions
    /// (closed immersed walks, no bigons, connectivity) are left to
    /// [`TubularComplex::validate`].
    pub fn to_complex(&self) -> Result<TubularComplex, DocumentError> {
        if self.format_version != FORMAT_VERSION {
            return Err(DocumentError::at(
                "/format_version",
                format!("unsupported version {}, expected {FORMAT_VERSION}", self.format_version),
            ));
        }
        if self.vertex_graphs.is_empty() {
            return Err(DocumentError::at("/vertex_graphs", "at least one vertex graph is required"));
        }
        let mut graphs = Vec::new();
        for (s, g) in self.vertex_graphs.iter().enumerate() {
            let base = format!("/vertex_graphs/{s}");
            let mut sorted = g.vertices.clone();
            sorted.sort_unstable();
            let mut ids = BTreeMap::new();
            for (i, v) in sorted.iter().enumerate() {
                if ids.insert(*v, i).is_some() {
                    let at = g.vertices.iter().rposition(|x| x == v).unwrap_or(0);
                    return Err(DocumentError::at(format!("{base}/vertices/{at}"), format!("duplicate vertex {v}")));
                }
            }
            let mut graph = SimplicialGraph::new(sorted.len(), &[]).expect("no edges");
            for (e, pair) in g.edges.iter().enumerate() {
                let mut ends = [0; 2];
                for k in 0..2 {
                    ends[k] = *ids.get(&pair[k]).ok_or_else(|| {
                        DocumentError::at(format!("{base}/edges/{e}/{k}"), format!("unknown vertex {}", pair[k]))
                    })?;
                }
                graph.try_add_edge(ends[0], ends[1]).map_err(|err| {
                    let msg = match err {
                        GraphError::Loop { .. } => "edge is a loop".to_string(),
                        GraphError::MultiEdge { first, .. } => format!("edge duplicates edge {first}"),
                        GraphError::VertexOutOfRange { .. } => unreachable!("ids resolved above"),
                    };
                    DocumentError::at(format!("{base}/edges/{e}"), msg)
                })?;
            }
            graphs.push(VertexGraph {
                name: g.name.clone(),
                graph,
            });
        }
        let mut tubes = Vec::new();
        for (t, tube) in self.tubes.iter().enumerate() {
            let mut ends = Vec::new();
            for (k, end) in [&tube.end0, &tube.end1].into_iter().enumerate() {
                let base = format!("/tubes/{t}/end{k}");
                let Some(vg) = graphs.get(end.graph) else {
                    return Err(DocumentError::at(
                        format!("{base}/graph"),
                        format!("unknown vertex graph {}", end.graph),
                    ));
                };
                if end.walk.len() != tube.circle_len {
                    return Err(DocumentError::at(
                        format!("{base}/walk"),
                        format!("walk has {} steps but circle_len is {}", end.walk.len(), tube.circle_len),
                    ));
                }
                let mut walk = Vec::new();
                for (i, &k) in end.walk.iter().enumerate() {
                    let edge = k.unsigned_abs() as usize;
                    if k == 0 || edge > vg.graph.edge_count() {
                        return Err(DocumentError::at(
                            format!("{base}/walk/{i}"),
                            format!("step {k} is not a signed 1-based edge index"),
                        ));
                    }
                    walk.push(Step {
                        edge: edge - 1,
                        forward: k > 0,
                    });
                }
                ends.push(TubeEnd {
                    graph: end.graph,
                    walk,
                });
            }
            let [end0, end1]: [TubeEnd; 2] = ends.try_into().expect("two ends");
            tubes.push(Tube {
                circle_len: tube.circle_len,
                ends: [end0, end1],
            });
        }
        Ok(TubularComplex::new(graphs, tubes).expect("indices checked above"))
    }
}

/// Parses a document, reporting structural errors with a JSON pointer.
pub fn parse_document(text: &str) -> Result<ComplexDocument, DocumentError> {
    let de = &mut serde_json::Deserializer::from_str(text);
    serde_path_to_error::deserialize(de).map_err(|err| {
        use serde_path_to_error::Segment;
        let pointer: String = err
            .path()
            .iter()
            .map(|seg| match seg {
                Segment::Seq { index } => format!("/{index}"),
                Segment::Map { key } => format!("/{}", key.replace('~', "~0").replace('/', "~1")),
                Segment::Enum { variant } => format!("/{variant}"),
                Segment::Unknown => "/?".to_string(),
            })
            .collect();
        DocumentError::at(pointer, err.into_inner().to_string())
    })
}

pub fn parse_complex(text: &str) -> Result<TubularComplex, DocumentError> {
    parse_document(text)?.to_complex()
}

pub fn read_complex(path: &Path) -> Result<TubularComplex, DocumentError> {
    parse_complex(&std::fs::read_to_string(path)?)
}

/// Pretty JSON with sorted keys and a trailing newline.
pub fn to_canonical_json(c: &TubularComplex) -> String {
    canonical_string(&ComplexDocument::from_complex(c))
}

/// Any serializable value as pretty JSON with sorted keys.
pub fn canonical_string<T: Serialize>(value: &T) -> String {
    // serde_json::Value keeps object keys in a BTreeMap.
    let v = serde_json::to_value(value).expect("serializable");
    let mut s = serde_json::to_string_pretty(&v).expect("serializable");
    s.push('\n');
    s
}

pub fn write_complex(path: &Path, c: &TubularComplex) -> Result<(), DocumentError> {
    std::fs::write(path, to_canonical_json(c))?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex::fixtures::{torus, wedge_of_tori};

    const TORUS: &str = r#"{
        "format_version": 1,
        "vertex_graphs": [{"name": "s", "vertices": [10, 20, 30], "edges": [[10, 20], [20, 30], [30, 10]]}],
        "tubes": [{"circle_len": 3, "end0": {"graph": 0, "walk": [1, 2, 3]}, "end1": {"graph": 0, "walk": [1, 2, 3]}}]
    }"#;

    #[test]
    fn torus_document_parses_to_torus() {
        assert_eq!(parse_complex(TORUS).unwrap(), torus());
    }

    #[test]
    fn round_trip_is_canonical() {
        for c in [torus(), wedge_of_tori()] {
            let text = to_canonical_json(&c);
            let back = parse_complex(&text).unwrap();
            assert_eq!(back, c);
            assert_eq!(to_canonical_json(&back), text);
        }
        let canonical = to_canonical_json(&parse_complex(TORUS).unwrap());
        assert!(canonical.contains("\"vertices\": [\n        0,"));
    }

    #[test]
    fn walk_length_mismatch_is_located() {
        let bad = TORUS.replacen("[1, 2, 3]", "[1, 2]", 1);
        let err = parse_complex(&bad).unwrap_err();
        assert_eq!(err.path(), Some("/tubes/0/end0/walk"));
    }

    #[test]
    fn structural_errors_carry_pointers() {
        let bad = TORUS.replace("\"circle_len\": 3", "\"circle_len\": \"x\"");
        assert_eq!(parse_complex(&bad).unwrap_err().path(), Some("/tubes/0/circle_len"));
        let bad = TORUS.replace("[30, 10]", "[30, 40]");
        assert_eq!(parse_complex(&bad).unwrap_err().path(), Some("/vertex_graphs/0/edges/2/1"));
        let bad = TORUS.replace("[30, 10]", "[30, 30]");
        assert_eq!(parse_complex(&bad).unwrap_err().path(), Some("/vertex_graphs/0/edges/2"));
        let bad = TORUS.replacen("[1, 2, 3]", "[1, 2, 4]", 1);
        assert_eq!(parse_complex(&bad).unwrap_err().path(), Some("/tubes/0/end0/walk/2"));
        let bad = TORUS.replace("\"graph\": 0, \"walk\": [1, 2, 3]}}", "\"graph\": 5, \"walk\": [1, 2, 3]}}");
        assert_eq!(parse_complex(&bad).unwrap_err().path(), Some("/tubes/0/end1/graph"));
    }
}
