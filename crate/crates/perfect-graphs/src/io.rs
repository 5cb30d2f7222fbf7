//! Graph file formats: plain edge lists and DIMACS `.col`.
//!
//! Edge list grammar: one `u v` pair per line; `#` starts a comment
//! (whole line or trailing). An optional `n <count>` header fixes the
//! vertex count, in which case endpoints must be integers below it;
//! without the header, labels are arbitrary tokens indexed by first
//! appearance. DIMACS: a single `p edge <n> <m>` line, then `m` lines
//! `e u v` with 1-based endpoints; `c` comment lines are allowed.
//! Both formats reject duplicate edges and self-loops.

use crate::error::{Error, Result};
use crate::graph::Graph;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    EdgeList,
    Dimacs,
}

impl Format {
    pub fn from_name(name: &str) -> Result<Format> {
        match name {
            "edge-list" | "edgelist" | "edges" => Ok(Format::EdgeList),
            "dimacs" | "col" => Ok(Format::Dimacs),
            other => Err(Error::invalid(format!(
                "unknown format {other:?} (expected edge-list or dimacs)"
            ))),
        }
    }

    /// Guessed from a file extension, defaulting to edge list.
    pub fn from_path(path: &str) -> Format {
        if path.ends_with(".col") || path.ends_with(".dimacs") {
            Format::Dimacs
        } else {
            Format::EdgeList
        }
    }
}

/// A graph plus the optional vertex labels it was read with.
#[derive(Debug, Clone)]
pub struct GraphDocument {
    pub graph: Graph,
    /// One label per vertex when the source carried names.
    pub labels: Option<Vec<String>>,
    /// Provenance: file path or generator recipe.
    pub source: String,
}

impl GraphDocument {
    pub fn bare(graph: Graph, source: impl Into<String>) -> Self {
        GraphDocument {
            graph,
            labels: None,
            source: source.into(),
        }
    }

    pub fn label(&self, v: usize) -> String {
        match &self.labels {
            Some(labels) => labels[v].clone(),
            None => v.to_string(),
        }
    }
}

pub fn parse_graph(bytes: &[u8], format: Format) -> Result<GraphDocument> {
    let text = std::str::from_utf8(bytes).map_err(|_| Error::Parse {
        line: 0,
        msg: "input is not valid UTF-8".into(),
    })?;
    match format {
        Format::EdgeList => parse_edge_list(text),
        Format::Dimacs => parse_dimacs(text),
    }
}

fn parse_edge_list(text: &str) -> Result<GraphDocument> {
    let mut declared_n: Option<usize> = None;
    let mut names: Vec<String> = Vec::new();
    let mut indices: std::collections::HashMap<String, usize> = std::collections::HashMap::new();
    let mut edges: Vec<(usize, usize, usize)> = Vec::new(); // (u, v, line)
    let mut seen_edges = std::collections::HashSet::new();

    for (lineno, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let tokens: Vec<&str> = line.split_whitespace().collect();
        if tokens[0] == "n" {
            if tokens.len() != 2 || declared_n.is_some() || !edges.is_empty() {
                return Err(Error::Parse {
                    line: lineno + 1,
                    msg: "header must be a single `n <count>` before any edge".into(),
                });
            }
            declared_n = Some(tokens[1].parse().map_err(|_| Error::Parse {
                line: lineno + 1,
                msg: format!("bad vertex count {:?}", tokens[1]),
            })?);
            continue;
        }
        if tokens.len() != 2 {
            return Err(Error::Parse {
                line: lineno + 1,
                msg: format!("expected `u v`, found {line:?}"),
            });
        }
        let mut resolve = |token: &str| -> Result<usize> {
            match declared_n {
                Some(n) => {
                    let v: usize = token.parse().map_err(|_| Error::Parse {
                        line: lineno + 1,
                        msg: format!("expected a vertex index, found {token:?}"),
                    })?;
                    if v >= n {
                        return Err(Error::Parse {
                            line: lineno + 1,
                            msg: format!("vertex {v} out of declared range 0..{n}"),
                        });
                    }
                    Ok(v)
                }
                None => Ok(*indices.entry(token.to_string()).or_insert_with(|| {
                    names.push(token.to_string());
                    names.len() - 1
                })),
            }
        };
        let u = resolve(tokens[0])?;
        let v = resolve(tokens[1])?;
        if u == v {
            return Err(Error::invalid(format!(
                "self-loop at {:?} on line {}",
                tokens[0],
                lineno + 1
            )));
        }
        if !seen_edges.insert((u.min(v), u.max(v))) {
            return Err(Error::Parse {
                line: lineno + 1,
                msg: format!("duplicate edge {} {}", tokens[0], tokens[1]),
            });
        }
        edges.push((u, v, lineno + 1));
    }

    let n = declared_n.unwrap_or(names.len());
    let mut graph = Graph::empty(n);
    for (u, v, _) in &edges {
        graph.add_edge(*u, *v);
    }
    let labels = if declared_n.is_none() && !names.is_empty() {
        Some(names)
    } else {
        None
    };
    Ok(GraphDocument {
        graph,
        labels,
        source: "edge-list".into(),
    })
}

fn parse_dimacs(text: &str) -> Result<GraphDocument> {
    let mut header: Option<(usize, usize)> = None;
    let mut edges: Vec<(usize, usize)> = Vec::new();
    let mut seen = std::collections::HashSet::new();

    for (lineno, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('c') {
            continue;
        }
        let tokens: Vec<&str> = line.split_whitespace().collect();
        match tokens[0] {
            "p" => {
                if header.is_some() || tokens.len() != 4 || tokens[1] != "edge" {
                    return Err(Error::Parse {
                        line: lineno + 1,
                        msg: "expected a single `p edge <n> <m>` header".into(),
                    });
                }
                let n = tokens[2].parse().map_err(|_| Error::Parse {
                    line: lineno + 1,
                    msg: format!("bad vertex count {:?}", tokens[2]),
                })?;
                let m = tokens[3].parse().map_err(|_| Error::Parse {
                    line: lineno + 1,
                    msg: format!("bad edge count {:?}", tokens[3]),
                })?;
                header = Some((n, m));
            }
            "e" => {
                let Some((n, _)) = header else {
                    return Err(Error::Parse {
                        line: lineno + 1,
                        msg: "edge before `p edge` header".into(),
                    });
                };
                if tokens.len() != 3 {
                    return Err(Error::Parse {
                        line: lineno + 1,
                        msg: format!("expected `e u v`, found {line:?}"),
                    });
                }
                let parse_endpoint = |t: &str| -> Result<usize> {
                    let v: usize = t.parse().map_err(|_| Error::Parse {
                        line: lineno + 1,
                        msg: format!("bad endpoint {t:?}"),
                    })?;
                    if v < 1 || v > n {
                        return Err(Error::Parse {
                            line: lineno + 1,
                            msg: format!("endpoint {v} out of range 1..={n}"),
                        });
                    }
                    Ok(v - 1)
                };
                let u = parse_endpoint(tokens[1])?;
                let v = parse_endpoint(tokens[2])?;
                if u == v {
                    return Err(Error::invalid(format!(
                        "self-loop at vertex {} on line {}",
                        u + 1,
                        lineno + 1
                    )));
                }
                if !seen.insert((u.min(v), u.max(v))) {
                    return Err(Error::Parse {
                        line: lineno + 1,
                        msg: format!("duplicate edge {} {}", u + 1, v + 1),
                    });
                }
                edges.push((u, v));
            }
            other => {
                return Err(Error::Parse {
                    line: lineno + 1,
                    msg: format!("unknown record {other:?}"),
                });
            }
        }
    }

    let Some((n, m)) = header else {
        return Err(Error::Parse {
            line: 0,
            msg: "missing `p edge` header".into(),
        });
    };
    if edges.len() != m {
        return Err(Error::Parse {
            line: 0,
            msg: format!("header declares {m} edges but {} were given", edges.len()),
        });
    }
    let mut graph = Graph::empty(n);
    for (u, v) in &edges {
        graph.add_edge(*u, *v);
    }
    Ok(GraphDocument {
        graph,
        labels: None,
        source: "dimacs".into(),
    })
}

/// Serializes a document; `emit` then `parse_graph` reproduces the same
/// graph in either format.
pub fn emit(doc: &GraphDocument, format: Format) -> String {
    let g = &doc.graph;
    match format {
        Format::EdgeList => {
            let mut out = String::new();
            match &doc.labels {
                Some(labels) => {
                    for (u, v) in g.edges() {
                        out.push_str(&format!("{} {}\n", labels[u], labels[v]));
                    }
                }
                None => {
                    out.push_str(&format!("n {}\n", g.n()));
                    for (u, v) in g.edges() {
                        out.push_str(&format!("{u} {v}\n"));
                    }
                }
            }
            out
        }
        Format::Dimacs => {
            let mut out = format!("p edge {} {}\n", g.n(), g.edge_count());
            for (u, v) in g.edges() {
                out.push_str(&format!("e {} {}\n", u + 1, v + 1));
            }
            out
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn dimacs_c5() {
        let text = "p edge 5 5\ne 1 2\ne 2 3\ne 3 4\ne 4 5\ne 5 1\n";
        let doc = parse_graph(text.as_bytes(), Format::Dimacs).unwrap();
        assert_eq!(doc.graph, Graph::cycle(5));
    }

    #[test]
    fn edge_list_triangle_by_labels() {
        let doc = parse_graph(b"0 1\n1 2\n2 0\n", Format::EdgeList).unwrap();
        assert_eq!(doc.graph, Graph::complete(3));
        assert_eq!(doc.labels.as_ref().unwrap().len(), 3);
    }

    #[test]
    fn edge_list_with_header_and_comments() {
        let text = "# a path\nn 4\n0 1\n1 2 # middle\n2 3\n";
        let doc = parse_graph(text.as_bytes(), Format::EdgeList).unwrap();
        assert_eq!(doc.graph.n(), 4);
        assert_eq!(doc.graph.edge_count(), 3);
        assert!(doc.labels.is_none());
    }

    #[test]
    fn rejects_self_loop() {
        assert!(matches!(
            parse_graph(b"p edge 2 1\ne 1 1\n", Format::Dimacs),
            Err(Error::InvalidInput(_))
        ));
        assert!(parse_graph(b"x x\n", Format::EdgeList).is_err());
    }

    #[test]
    fn rejects_duplicates_and_bad_lines() {
        assert!(parse_graph(b"0 1\n1 0\n", Format::EdgeList).is_err());
        assert!(parse_graph(b"p edge 3 2\ne 1 2\ne 2 1\n", Format::Dimacs).is_err());
        let err = parse_graph(b"0 1 2\n", Format::EdgeList).unwrap_err();
        assert!(matches!(err, Error::Parse { line: 1, .. }));
    }

    #[test]
    fn edge_count_mismatch_is_an_error() {
        assert!(parse_graph(b"p edge 3 2\ne 1 2\n", Format::Dimacs).is_err());
    }

    #[test]
    fn round_trips() {
        let doc = GraphDocument::bare(Graph::cycle(7).complement(), "test");
        for format in [Format::EdgeList, Format::Dimacs] {
            let text = emit(&doc, format);
            let back = parse_graph(text.as_bytes(), format).unwrap();
            assert_eq!(back.graph, doc.graph);
        }
    }

    #[test]
    fn labeled_round_trip() {
        let doc = parse_graph(b"alice bob\nbob carol\n", Format::EdgeList).unwrap();
        let text = emit(&doc, Format::EdgeList);
        let back = parse_graph(text.as_bytes(), Format::EdgeList).unwrap();
        assert_eq!(back.graph, doc.graph);
        assert_eq!(back.labels, doc.labels);
    }
}
