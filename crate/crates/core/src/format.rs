//! Plain-text file formats.
//!
//! A matroid file is a header, a label line, and one line of 0/1 entries per
//! row:
//!
//! ```text
//! matroid F7
//! 1 2 3 4 5 6 7
//! 1 0 0 1 1 0 1
//! 0 1 0 1 1 1 0
//! 0 0 1 1 0 1 1
//! ```
//!
//! A graph file is a header and one `u v label` line per edge:
//!
//! ```text
//! graph triangle
//! x y xy
//! y z yz
//! x z xz
//! ```
//!
//! The header decides the kind, whatever the file extension. Blank lines
//! are ignored.

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::gf2::Gf2Matrix;
use crate::graphs::SimpleGraph;
use crate::matroid::BinaryMatroid;

/// A parsed matroid file: the name and the matrix exactly as written.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MatroidFile {
    pub name: String,
    pub matrix: Gf2Matrix,
}

impl MatroidFile {
    pub fn to_matroid(&self) -> Result<BinaryMatroid> {
        Ok(BinaryMatroid::from_matrix(&self.matrix)?.with_name(self.name.clone()))
    }
}

#[derive(Clone, Debug)]
pub enum Document {
    Matroid(MatroidFile),
    Graph(SimpleGraph),
}

fn parse_err(line: usize, msg: impl Into<String>) -> Error {
    Error::Parse {
        line,
        msg: msg.into(),
    }
}

fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty())
}

fn header<'a>(line: usize, text: &'a str, keyword: &str) -> Result<&'a str> {
    let rest = text
        .strip_prefix(keyword)
        .ok_or_else(|| parse_err(line, format!("expected `{keyword} <name>`")))?;
    let name = rest.trim();
    if name.is_empty() || !rest.starts_with(char::is_whitespace) {
        return Err(parse_err(line, format!("expected `{keyword} <name>`")));
    }
    Ok(name)
}

pub fn parse_matroid(text: &str) -> Result<MatroidFile> {
    let mut lines = content_lines(text);
    let (ln, first) = lines.next().ok_or_else(|| parse_err(1, "empty input"))?;
    let name = header(ln, first, "matroid")?.to_string();
    let (_, label_line) = lines
        .next()
        .ok_or_else(|| parse_err(ln + 1, "missing label line"))?;
    let labels: Vec<String> = label_line.split_whitespace().map(str::to_string).collect();
    if labels.len() > 64 {
        return Err(Error::TooManyColumns(labels.len()));
    }
    let mut rows = Vec::new();
    for (ln, line) in lines {
        let mut bits = 0u64;
        let mut count = 0;
        for (j, tok) in line.split_whitespace().enumerate() {
            match tok {
                "0" => {}
                "1" if j < 64 => bits |= 1u64 << j,
                "1" => {}
                other => return Err(parse_err(ln, format!("entry `{other}` is not 0 or 1"))),
            }
            count += 1;
        }
        if count != labels.len() {
            return Err(parse_err(
                ln,
                format!("row has {count} entries, expected {}", labels.len()),
            ));
        }
        rows.push(bits);
    }
    Ok(MatroidFile {
        name,
        matrix: Gf2Matrix::from_bits(labels, rows)?,
    })
}

pub fn write_matroid_matrix(name: &str, m: &Gf2Matrix) -> String {
    let mut out = format!("matroid {name}\n{}\n", m.labels().join(" "));
    for &row in m.rows() {
        let line: Vec<&str> = (0..m.width())
            .map(|j| if row >> j & 1 == 1 { "1" } else { "0" })
            .collect();
        out.push_str(&line.join(" "));
        out.push('\n');
    }
    out
}

/// The canonical representation of `m`.
pub fn write_matroid(m: &BinaryMatroid) -> String {
    write_matroid_matrix(m.name(), m.matrix())
}

pub fn parse_graph(text: &str) -> Result<SimpleGraph> {
    let mut lines = content_lines(text);
    let (ln, first) = lines.next().ok_or_else(|| parse_err(1, "empty input"))?;
    let mut g = SimpleGraph::new(header(ln, first, "graph")?);
    for (ln, line) in lines {
        let toks: Vec<&str> = line.split_whitespace().collect();
        let [u, v, label] = toks[..] else {
            return Err(parse_err(ln, "expected `u v label`"));
        };
        for x in [u, v] {
            if g.vertex(x).is_err() {
                g.add_vertex(x)?;
            }
        }
        g.add_edge(u, v, label)
            .map_err(|e| parse_err(ln, e.to_string()))?;
    }
    Ok(g)
}

pub fn write_graph(g: &SimpleGraph) -> String {
    let mut out = format!("graph {}\n", g.name());
    for e in g.edges() {
        let _ = writeln!(
            out,
            "{} {} {}",
            g.vertices()[e.u],
            g.vertices()[e.v],
            e.label
        );
    }
    out
}

/// Parses either kind of file, dispatching on the header keyword.
pub fn parse_document(text: &str) -> Result<Document> {
    let first = content_lines(text).next().map(|(_, l)| l).unwrap_or("");
    match first.split_whitespace().next() {
        Some("matroid") => Ok(Document::Matroid(parse_matroid(text)?)),
        Some("graph") => Ok(Document::Graph(parse_graph(text)?)),
        _ => Err(parse_err(1, "header must start with `matroid` or `graph`")),
    }
}

fn dot_quote(s: &str) -> String {
    format!("\"{}\"", s.replace('\\', "\\\\").replace('"', "\\\""))
}

/// Graphviz source: vertices in insertion order, then edges.
pub fn to_dot(g: &SimpleGraph) -> String {
    let mut out = format!("graph {} {{\n", dot_quote(g.name()));
    for v in g.vertices() {
        let _ = writeln!(out, "  {};", dot_quote(v));
    }
    for e in g.edges() {
        let _ = writeln!(
            out,
            "  {} -- {} [label={}];",
            dot_quote(&g.vertices()[e.u]),
            dot_quote(&g.vertices()[e.v]),
            dot_quote(&e.label)
        );
    }
    out.push_str("}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;

    const FANO: &str = "matroid F7\n1 2 3 4 5 6 7\n1 0 0 1 1 0 1\n0 1 0 1 1 1 0\n0 0 1 1 0 1 1\n";

    #[test]
    fn fano_round_trip() {
        let f = parse_matroid(FANO).unwrap();
        assert_eq!(write_matroid_matrix(&f.name, &f.matrix), FANO);
        assert_eq!(write_matroid(&catalog::fano()), FANO);
        assert!(f
            .to_matroid()
            .unwrap()
            .same_matroid(&catalog::fano())
            .unwrap());
    }

    #[test]
    fn non_canonical_rows_survive() {
        let text = "matroid m\nx y z\n1 1 0\n1 1 0\n0 0 0\n";
        let f = parse_matroid(text).unwrap();
        assert_eq!(f.matrix.row_count(), 3);
        assert_eq!(write_matroid_matrix(&f.name, &f.matrix), text);
        assert_eq!(f.to_matroid().unwrap().rank(), 1);
    }

    #[test]
    fn matroid_errors() {
        assert!(matches!(
            parse_matroid("matroid m\nx y\n1 0 1\n"),
            Err(Error::Parse { line: 3, .. })
        ));
        assert!(matches!(
            parse_matroid("matroid m\nx y\n1 2\n"),
            Err(Error::Parse { line: 3, .. })
        ));
        assert!(matches!(
            parse_matroid("graph g\n"),
            Err(Error::Parse { line: 1, .. })
        ));
        assert!(matches!(
            parse_matroid("matroid m\nx x\n1 0\n"),
            Err(Error::DuplicateLabel(_))
        ));
    }

    #[test]
    fn graph_round_trip() {
        for g in catalog::all_graphs() {
            let text = write_graph(&g);
            let back = parse_graph(&text).unwrap();
            assert_eq!(write_graph(&back), text);
            assert_eq!(back.edge_count(), g.edge_count());
        }
    }

    #[test]
    fn graph_errors() {
        assert!(matches!(
            parse_graph("graph g\nx y\n"),
            Err(Error::Parse { line: 2, .. })
        ));
        assert!(matches!(
            parse_graph("graph g\nx x l\n"),
            Err(Error::Parse { line: 2, .. })
        ));
        assert!(matches!(
            parse_graph("graph g\nx y l\ny x m\n"),
            Err(Error::Parse { line: 3, .. })
        ));
    }

    #[test]
    fn dispatch() {
        assert!(matches!(parse_document(FANO), Ok(Document::Matroid(_))));
        assert!(matches!(
            parse_document("\ngraph g\nx y l\n"),
            Ok(Document::Graph(_))
        ));
        assert!(parse_document("digraph g\n").is_err());
    }

    #[test]
    fn dot_output() {
        let g = parse_graph("graph t\nx y xy\ny z yz\n").unwrap();
        assert_eq!(
            to_dot(&g),
            "graph \"t\" {\n  \"x\";\n  \"y\";\n  \"z\";\n  \"x\" -- \"y\" [label=\"xy\"];\n  \"y\" -- \"z\" [label=\"yz\"];\n}\n"
        );
    }
}
