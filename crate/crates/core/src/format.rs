//! The MIXED text format.
//!
//! ```text
//! MIXED <n> <edges> <arcs>
//! V <index> <tag> <coords...>     (optional, one per vertex, in index order)
//! E <u> <v>                       (u < v, ascending)
//! A <u> <v>                       (ascending)
//! ```
//!
//! Label tags are `P x y`, `L m b`, `VL i`, `SP i`, and the bare `LI` and
//! `PI` for the line and point at infinity. Field elements are written as
//! their canonical integer encodings.

use std::collections::HashSet;
use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::gf::FieldElement;
use crate::mixed::MixedGraph;
use crate::plane::VertexLabel;

/// A graph read back from a MIXED document.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParsedGraph {
    pub graph: MixedGraph,
    pub labels: Option<Vec<VertexLabel>>,
}

fn label_fields(label: &VertexLabel) -> String {
    match label {
        VertexLabel::AffinePoint { x, y } => format!("P {x} {y}"),
        VertexLabel::AffineLine { m, b } => format!("L {m} {b}"),
        VertexLabel::VerticalLine(i) => format!("VL {i}"),
        VertexLabel::SlopePoint(i) => format!("SP {i}"),
        VertexLabel::InfinityLine => "LI".to_string(),
        VertexLabel::InfinityPoint => "PI".to_string(),
    }
}

/// Renders a graph, with label lines when `labels` is given.
pub fn render_mixed(g: &MixedGraph, labels: Option<&[VertexLabel]>) -> String {
    let mut out = String::new();
    writeln!(out, "MIXED {} {} {}", g.n(), g.edge_count(), g.arc_count()).unwrap();
    if let Some(labels) = labels {
        assert_eq!(labels.len(), g.n(), "one label per vertex");
        for (i, label) in labels.iter().enumerate() {
            writeln!(out, "V {i} {}", label_fields(label)).unwrap();
        }
    }
    for (u, v) in g.edges() {
        writeln!(out, "E {u} {v}").unwrap();
    }
    for (u, v) in g.arcs() {
        writeln!(out, "A {u} {v}").unwrap();
    }
    out
}

fn syntax(line: usize, message: impl Into<String>) -> Error {
    Error::Syntax {
        line,
        message: message.into(),
    }
}

fn number(token: &str, line: usize) -> Result<usize> {
    token.parse().map_err(|_| {
        syntax(
            line,
            format!("expected a non-negative integer, found {token:?}"),
        )
    })
}

fn element(token: &str, line: usize) -> Result<FieldElement> {
    let enc: u32 = token
        .parse()
        .map_err(|_| syntax(line, format!("expected a field element, found {token:?}")))?;
    Ok(FieldElement::new(enc))
}

fn parse_label(fields: &[&str], line: usize) -> Result<VertexLabel> {
    let arity = |k: usize| {
        if fields.len() == k + 1 {
            Ok(())
        } else {
            Err(syntax(
                line,
                format!("tag {} takes {k} coordinates", fields[0]),
            ))
        }
    };
    let label = match fields[0] {
        "P" => {
            arity(2)?;
            VertexLabel::AffinePoint {
                x: element(fields[1], line)?,
                y: element(fields[2], line)?,
            }
        }
        "L" => {
            arity(2)?;
            VertexLabel::AffineLine {
                m: element(fields[1], line)?,
                b: element(fields[2], line)?,
            }
        }
        "VL" => {
            arity(1)?;
            VertexLabel::VerticalLine(element(fields[1], line)?)
        }
        "SP" => {
            arity(1)?;
            VertexLabel::SlopePoint(element(fields[1], line)?)
        }
        "LI" => {
            arity(0)?;
            VertexLabel::InfinityLine
        }
        "PI" => {
            arity(0)?;
            VertexLabel::InfinityPoint
        }
        other => return Err(syntax(line, format!("unknown label tag {other:?}"))),
    };
    Ok(label)
}

/// Parses a MIXED document, checking counts, index bounds and simplicity.
pub fn parse_mixed(doc: &str) -> Result<ParsedGraph> {
    let mut lines = doc.lines().enumerate().map(|(i, l)| (i + 1, l));
    let (_, header) = lines.next().ok_or_else(|| syntax(1, "empty document"))?;
    let head: Vec<&str> = header.split(' ').collect();
    if head.len() != 4 || head[0] != "MIXED" {
        return Err(syntax(1, "expected `MIXED <n> <edges> <arcs>`"));
    }
    let n = number(head[1], 1)?;
    let (want_edges, want_arcs) = (number(head[2], 1)?, number(head[3], 1)?);

    let mut graph = MixedGraph::new(n);
    let mut labels = Vec::new();
    let mut seen_labels = HashSet::new();
    let mut last_line = 1;
    for (line_no, line) in lines {
        last_line = line_no;
        if line.is_empty() {
            continue;
        }
        let fields: Vec<&str> = line.split(' ').collect();
        match fields[0] {
            "V" => {
                if graph.edge_count() + graph.arc_count() > 0 {
                    return Err(syntax(line_no, "label lines must precede links"));
                }
                if fields.len() < 3 {
                    return Err(syntax(line_no, "expected `V <index> <tag> ...`"));
                }
                let index = number(fields[1], line_no)?;
                if index != labels.len() {
                    return Err(syntax(
                        line_no,
                        format!("expected label for vertex {}, found {index}", labels.len()),
                    ));
                }
                if index >= n {
                    return Err(Error::IndexOutOfBounds { index, n });
                }
                let label = parse_label(&fields[2..], line_no)?;
                if !seen_labels.insert(label) {
                    return Err(syntax(line_no, format!("duplicate label {label}")));
                }
                labels.push(label);
            }
            "E" | "A" => {
                if fields.len() != 3 {
                    return Err(syntax(line_no, format!("expected `{} <u> <v>`", fields[0])));
                }
                let u = number(fields[1], line_no)?;
                let v = number(fields[2], line_no)?;
                if fields[0] == "E" {
                    if graph.arc_count() > 0 {
                        return Err(syntax(line_no, "edge lines must precede arc lines"));
                    }
                    graph.add_edge(u, v)?;
                } else {
                    graph.add_arc(u, v)?;
                }
            }
            other => return Err(syntax(line_no, format!("unknown record {other:?}"))),
        }
    }

    if graph.edge_count() != want_edges || graph.arc_count() != want_arcs {
        return Err(syntax(
            last_line,
            format!(
                "header announces {want_edges} edges and {want_arcs} arcs, found {} and {}",
                graph.edge_count(),
                graph.arc_count()
            ),
        ));
    }
    let labels = match labels.len() {
        0 => None,
        len if len == n => Some(labels),
        len => return Err(syntax(last_line, format!("{len} labels for {n} vertices"))),
    };
    Ok(ParsedGraph { graph, labels })
}
