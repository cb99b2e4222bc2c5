//! Text formats for graphs, biases, and matroids, plus the line-oriented
//! record rendering used for machine output.
//!
//! Graph files:
//!
//! ```text
//! graph <name> <vertex_count>
//! edge <label> <u> <v>
//! signature <label> <label> ...     # optional, at most one
//! balanced {<label>,<label>,...}    # optional, one line per balanced cycle
//! ```
//!
//! `#` starts a comment and lines after the header may come in any order.  A
//! file carries a signature or explicit balanced lines, not both.  A single
//! `balanced {}` line declares the explicit form with no balanced cycles
//! (contrabalanced); a file with neither form reads as all-balanced.
//!
//! Matroid files:
//!
//! ```text
//! matroid <name>
//! uniform <r> <n>          | graphic <graph-file>
//! dual <matroid-file>      | named <F7|F7*|MK5*|MK33*>
//! ground e1 e2 ...
//! circuit e1 e2 ...
//! ```
//!
//! with exactly one body form; `ground` is followed by any number of
//! `circuit` lines.  File references resolve relative to the referencing
//! file and may nest up to [`MAX_INCLUDE_DEPTH`] levels.

use std::fmt;
use std::fs;
use std::path::{Path, PathBuf};

use thiserror::Error;

use crate::bias::{BiasError, BiasedGraph, Signature};
use crate::framework::FrameworkClass;
use crate::graph::Multigraph;
use crate::matroid::{bit_indices, Matroid, MAX_ELEMENTS};

/// How deep `graphic`/`dual` file references may nest.
pub const MAX_INCLUDE_DEPTH: usize = 8;

#[derive(Debug, Error)]
pub enum IoError {
    #[error("{path}: {source}")]
    Read {
        path: PathBuf,
        source: std::io::Error,
    },
    #[error("{path}:{line}: {message}")]
    Parse {
        path: PathBuf,
        line: usize,
        message: String,
    },
    #[error("{path}: file references nest deeper than {MAX_INCLUDE_DEPTH}")]
    TooDeep { path: PathBuf },
}

/// A parsed graph file: the graph plus at most one bias description.
#[derive(Debug, Clone)]
pub struct GraphFile {
    pub name: String,
    pub graph: Multigraph,
    pub signature: Option<Signature>,
    /// Explicit balanced cycles (edge masks); `Some(vec![])` is the declared
    /// contrabalanced form, `None` means no explicit list was given.
    pub balanced: Option<Vec<u32>>,
}

impl GraphFile {
    /// The bias the file describes: the signature bias, the explicit
    /// balanced-cycle bias, or all-balanced when neither is present.
    pub fn bias(&self) -> Result<BiasedGraph, BiasError> {
        match (&self.signature, &self.balanced) {
            (Some(sig), _) => Ok(BiasedGraph::from_signature(self.graph.clone(), *sig)),
            (None, Some(balanced)) => BiasedGraph::new(self.graph.clone(), balanced),
            (None, None) => Ok(BiasedGraph::balanced(self.graph.clone())),
        }
    }
}

struct Lines<'a> {
    path: &'a Path,
    text: &'a str,
}

impl<'a> Lines<'a> {
    fn iter(&self) -> impl Iterator<Item = (usize, Vec<&'a str>)> {
        self.text.lines().enumerate().filter_map(|(i, raw)| {
            let stripped = raw.split('#').next().unwrap_or("");
            let tokens: Vec<&str> = stripped.split_whitespace().collect();
            if tokens.is_empty() {
                None
            } else {
                Some((i + 1, tokens))
            }
        })
    }

    fn err(&self, line: usize, message: impl Into<String>) -> IoError {
        IoError::Parse {
            path: self.path.to_path_buf(),
            line,
            message: message.into(),
        }
    }
}

/// Reads and parses a graph file.
pub fn load_graph(path: &Path) -> Result<GraphFile, IoError> {
    let text = fs::read_to_string(path).map_err(|source| IoError::Read {
        path: path.to_path_buf(),
        source,
    })?;
    parse_graph_text(&text, path)
}

/// Parses graph-file text; `path` only labels error messages.
pub fn parse_graph_text(text: &str, path: &Path) -> Result<GraphFile, IoError> {
    let lines = Lines { path, text };
    let mut entries = lines.iter();
    let (header_line, header) = entries
        .next()
        .ok_or_else(|| lines.err(1, "empty file, expected `graph <name> <vertex_count>`"))?;
    if header[0] != "graph" || header.len() != 3 {
        return Err(lines.err(header_line, "expected `graph <name> <vertex_count>`"));
    }
    let vertex_count: usize = header[2]
        .parse()
        .map_err(|_| lines.err(header_line, format!("bad vertex count `{}`", header[2])))?;
    let mut graph = Multigraph::new(vertex_count);
    let mut signature_labels: Option<(usize, Vec<String>)> = None;
    let mut balanced_labels: Vec<(usize, Vec<String>)> = Vec::new();
    for (line, tokens) in entries {
        match tokens[0] {
            "edge" => {
                if tokens.len() != 4 {
                    return Err(lines.err(line, "expected `edge <label> <u> <v>`"));
                }
                let u: usize = tokens[2]
                    .parse()
                    .map_err(|_| lines.err(line, format!("bad vertex `{}`", tokens[2])))?;
                let v: usize = tokens[3]
                    .parse()
                    .map_err(|_| lines.err(line, format!("bad vertex `{}`", tokens[3])))?;
                graph
                    .add_edge(tokens[1], u, v)
                    .map_err(|e| lines.err(line, e.to_string()))?;
            }
            "signature" => {
                if signature_labels.is_some() {
                    return Err(lines.err(line, "more than one signature line"));
                }
                signature_labels =
                    Some((line, tokens[1..].iter().map(|t| t.to_string()).collect()));
            }
            "balanced" => {
                let joined = tokens[1..].join("");
                let inner = joined
                    .strip_prefix('{')
                    .and_then(|r| r.strip_suffix('}'))
                    .ok_or_else(|| lines.err(line, "expected `balanced {e_i,e_j,...}`"))?;
                let labels: Vec<String> = inner
                    .split(',')
                    .filter(|t| !t.is_empty())
                    .map(|t| t.to_string())
                    .collect();
                balanced_labels.push((line, labels));
            }
            other => return Err(lines.err(line, format!("unknown directive `{other}`"))),
        }
    }
    if signature_labels.is_some() && !balanced_labels.is_empty() {
        let (line, _) = balanced_labels[0];
        return Err(lines.err(line, "a file carries a signature or balanced lines, not both"));
    }
    let signature = match signature_labels {
        None => None,
        Some((line, labels)) => {
            let edges = mask_of_labels(&graph, &labels).map_err(|l| {
                lines.err(line, format!("signature names unknown edge `{l}`"))
            })?;
            Some(Signature { edges })
        }
    };
    let balanced = if balanced_labels.is_empty() {
        None
    } else {
        let mut masks = Vec::new();
        for (line, labels) in balanced_labels {
            if labels.is_empty() {
                continue; // the explicit-empty marker contributes no cycle
            }
            let mask = mask_of_labels(&graph, &labels).map_err(|l| {
                lines.err(line, format!("balanced line names unknown edge `{l}`"))
            })?;
            masks.push(mask);
        }
        Some(masks)
    };
    Ok(GraphFile {
        name: header[1].to_string(),
        graph,
        signature,
        balanced,
    })
}

fn mask_of_labels(graph: &Multigraph, labels: &[String]) -> Result<u32, String> {
    let mut mask = 0;
    for label in labels {
        match graph.edge_index(label) {
            Some(i) => mask |= 1 << i,
            None => return Err(label.clone()),
        }
    }
    Ok(mask)
}

/// Reads and parses a matroid file, resolving `graphic` and `dual`
/// references relative to it.
pub fn load_matroid(path: &Path) -> Result<(String, Matroid), IoError> {
    load_matroid_at(path, 0)
}

fn load_matroid_at(path: &Path, depth: usize) -> Result<(String, Matroid), IoError> {
    if depth > MAX_INCLUDE_DEPTH {
        return Err(IoError::TooDeep {
            path: path.to_path_buf(),
        });
    }
    let text = fs::read_to_string(path).map_err(|source| IoError::Read {
        path: path.to_path_buf(),
        source,
    })?;
    let base = path.parent().unwrap_or_else(|| Path::new("."));
    parse_matroid_text(&text, path, base, depth)
}

/// Parses matroid-file text; references resolve against `base`.
pub fn parse_matroid_text(
    text: &str,
    path: &Path,
    base: &Path,
    depth: usize,
) -> Result<(String, Matroid), IoError> {
    let lines = Lines { path, text };
    let mut entries = lines.iter();
    let (header_line, header) = entries
        .next()
        .ok_or_else(|| lines.err(1, "empty file, expected `matroid <name>`"))?;
    if header[0] != "matroid" || header.len() != 2 {
        return Err(lines.err(header_line, "expected `matroid <name>`"));
    }
    let name = header[1].to_string();
    let (body_line, body) = entries
        .next()
        .ok_or_else(|| lines.err(header_line, "missing matroid body"))?;
    let matroid = match body[0] {
        "uniform" => {
            if body.len() != 3 {
                return Err(lines.err(body_line, "expected `uniform <r> <n>`"));
            }
            let r: usize = body[1]
                .parse()
                .map_err(|_| lines.err(body_line, format!("bad rank `{}`", body[1])))?;
            let n: usize = body[2]
                .parse()
                .map_err(|_| lines.err(body_line, format!("bad size `{}`", body[2])))?;
            if r > n || n > MAX_ELEMENTS {
                return Err(lines.err(
                    body_line,
                    format!("uniform needs r <= n <= {MAX_ELEMENTS}, got r={r} n={n}"),
                ));
            }
            Matroid::uniform(r, n)
        }
        "graphic" => {
            if body.len() != 2 {
                return Err(lines.err(body_line, "expected `graphic <graph-file>`"));
            }
            if depth >= MAX_INCLUDE_DEPTH {
                return Err(IoError::TooDeep {
                    path: path.to_path_buf(),
                });
            }
            let file = load_graph(&base.join(body[1]))?;
            Matroid::from_graph(&file.graph)
                .map_err(|e| lines.err(body_line, e.to_string()))?
        }
        "dual" => {
            if body.len() != 2 {
                return Err(lines.err(body_line, "expected `dual <matroid-file>`"));
            }
            let (_, inner) = load_matroid_at(&base.join(body[1]), depth + 1)?;
            inner.dual()
        }
        "named" => {
            if body.len() != 2 {
                return Err(lines.err(body_line, "expected `named <F7|F7*|MK5*|MK33*>`"));
            }
            match body[1] {
                "F7" => Matroid::fano(),
                "F7*" => Matroid::fano_dual(),
                "MK5*" => Matroid::k5_bond(),
                "MK33*" => Matroid::k33_bond(),
                other => {
                    return Err(lines.err(
                        body_line,
                        format!("unknown named matroid `{other}` (F7, F7*, MK5*, MK33*)"),
                    ))
                }
            }
        }
        "ground" => {
            let names: Vec<String> = body[1..].iter().map(|t| t.to_string()).collect();
            let index_of = |token: &str| names.iter().position(|n| n == token);
            let mut circuits = Vec::new();
            for (line, tokens) in entries {
                if tokens[0] != "circuit" {
                    return Err(lines.err(line, "expected `circuit e_i e_j ...`"));
                }
                let mut mask = 0u32;
                for token in &tokens[1..] {
                    let i = index_of(token).ok_or_else(|| {
                        lines.err(line, format!("circuit names unknown element `{token}`"))
                    })?;
                    mask |= 1 << i;
                }
                circuits.push(mask);
            }
            return Matroid::from_circuits(names, circuits)
                .map(|m| (name, m))
                .map_err(|e| lines.err(body_line, e.to_string()));
        }
        other => return Err(lines.err(body_line, format!("unknown matroid form `{other}`"))),
    };
    if let Some((line, _)) = entries.next() {
        return Err(lines.err(line, "trailing content after the matroid body"));
    }
    Ok((name, matroid))
}

/// Renders a graph in the text format.
pub fn graph_file_text(name: &str, g: &Multigraph) -> String {
    let mut out = format!("graph {name} {}\n", g.vertex_count());
    for e in 0..g.edge_count() {
        let (u, v) = g.endpoints(e);
        out.push_str(&format!("edge {} {u} {v}\n", g.label(e)));
    }
    out
}

/// Renders a biased graph: the graph plus its signature when one exists,
/// otherwise explicit balanced lines (with the `balanced {}` marker when
/// contrabalanced).
pub fn bias_file_text(name: &str, bias: &BiasedGraph) -> String {
    let g = bias.graph();
    let mut out = graph_file_text(name, g);
    if let Some(sig) = bias.find_signature() {
        out.push_str("signature");
        for e in bit_indices(sig.edges) {
            out.push_str(&format!(" {}", g.label(e)));
        }
        out.push('\n');
        return out;
    }
    let balanced: Vec<u32> = bias.balanced_cycles().map(|c| c.edges).collect();
    if balanced.is_empty() {
        out.push_str("balanced {}\n");
        return out;
    }
    for mask in balanced {
        out.push_str(&format!("balanced {{{}}}\n", label_list(g, mask)));
    }
    out
}

/// Renders a matroid as `ground` + `circuit` lines.
pub fn matroid_file_text(name: &str, m: &Matroid) -> String {
    let mut out = format!("matroid {name}\nground {}\n", m.element_names().join(" "));
    for &c in m.circuits() {
        let members: Vec<&str> = bit_indices(c)
            .map(|i| m.element_names()[i].as_str())
            .collect();
        out.push_str(&format!("circuit {}\n", members.join(" ")));
    }
    out
}

fn label_list(g: &Multigraph, mask: u32) -> String {
    bit_indices(mask)
        .map(|e| g.label(e))
        .collect::<Vec<_>>()
        .join(",")
}

/// One line of machine output: a tag followed by `key=value` fields.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Record {
    pub tag: &'static str,
    pub fields: Vec<(String, String)>,
}

impl Record {
    pub fn new(tag: &'static str) -> Record {
        Record {
            tag,
            fields: Vec::new(),
        }
    }

    pub fn push(mut self, key: &str, value: impl fmt::Display) -> Record {
        self.fields.push((key.to_string(), value.to_string()));
        self
    }
}

impl fmt::Display for Record {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.tag)?;
        for (key, value) in &self.fields {
            write!(f, " {key}={value}")?;
        }
        Ok(())
    }
}

/// Joins records into the final machine output, one per line.
pub fn render_records(records: &[Record]) -> String {
    let mut out = String::new();
    for record in records {
        out.push_str(&record.to_string());
        out.push('\n');
    }
    out
}

/// `label:u-v` edge listing in edge order; the canonical one-line graph code.
pub fn edge_code(g: &Multigraph) -> String {
    (0..g.edge_count())
        .map(|e| {
            let (u, v) = g.endpoints(e);
            format!("{}:{u}-{v}", g.label(e))
        })
        .collect::<Vec<_>>()
        .join(",")
}

/// Balanced cycles as `{a,b};{c,d}` in stored cycle order, or `-` when none.
pub fn balanced_code(bias: &BiasedGraph) -> String {
    let parts: Vec<String> = bias
        .balanced_cycles()
        .map(|c| format!("{{{}}}", label_list(bias.graph(), c.edges)))
        .collect();
    if parts.is_empty() {
        "-".to_string()
    } else {
        parts.join(";")
    }
}

/// One record per framework class; the byte-comparison basis for
/// determinism checks.
pub fn class_records(classes: &[FrameworkClass]) -> Vec<Record> {
    classes
        .iter()
        .enumerate()
        .map(|(i, c)| {
            Record::new("class")
                .push("index", i)
                .push("vertices", c.graph.vertex_count())
                .push("edges", edge_code(&c.graph))
                .push("balanced", balanced_code(&c.bias))
                .push("frame", c.is_frame)
                .push("lift", c.is_lift)
                .push("relocated", c.relocated)
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::path::Path;

    fn parse_graph(text: &str) -> Result<GraphFile, IoError> {
        parse_graph_text(text, Path::new("test.graph"))
    }

    fn parse_matroid(text: &str) -> Result<(String, Matroid), IoError> {
        parse_matroid_text(text, Path::new("test.matroid"), Path::new("."), 0)
    }

    #[test]
    fn graph_text_roundtrips() {
        let mut g = Multigraph::new(3);
        g.add_edge("a", 0, 1).unwrap();
        g.add_edge("b", 1, 2).unwrap();
        g.add_edge("l", 2, 2).unwrap();
        let text = graph_file_text("demo", &g);
        let file = parse_graph(&text).unwrap();
        assert_eq!(file.name, "demo");
        assert_eq!(file.graph, g);
        assert!(file.signature.is_none());
        assert!(file.balanced.is_none());
        assert!(file.bias().unwrap().is_balanced());
    }

    #[test]
    fn comments_and_order_are_flexible() {
        let text = "graph g 2   # two vertices\n\
                    # a parallel pair\n\
                    signature p\n\
                    edge p 0 1\n\
                    edge q 0 1\n";
        let file = parse_graph(text).unwrap();
        assert_eq!(file.graph.edge_count(), 2);
        assert_eq!(file.signature.unwrap().edges, 0b01);
    }

    #[test]
    fn signature_files_reproduce_the_signed_bias() {
        let k4 = Multigraph::complete(4);
        let sigma = k4.edge_mask(&["e1"]).unwrap();
        let bias = BiasedGraph::from_signature(k4, Signature { edges: sigma });
        let text = bias_file_text("sk4", &bias);
        assert!(text.contains("signature e1") || text.contains("signature"));
        let file = parse_graph(&text).unwrap();
        let reread = file.bias().unwrap();
        let a: Vec<u32> = bias.balanced_cycles().map(|c| c.edges).collect();
        let b: Vec<u32> = reread.balanced_cycles().map(|c| c.edges).collect();
        assert_eq!(a, b);
    }

    #[test]
    fn contrabalanced_files_keep_the_empty_marker() {
        let bias = BiasedGraph::contrabalanced(Multigraph::complete(3).k_multiply(2).unwrap());
        let text = bias_file_text("c2k3", &bias);
        assert!(text.contains("balanced {}"));
        let file = parse_graph(&text).unwrap();
        assert_eq!(file.balanced, Some(vec![]));
        assert!(file.bias().unwrap().is_contrabalanced());
    }

    #[test]
    fn explicit_balanced_lines_roundtrip() {
        let k4 = Multigraph::complete(4);
        let sigma = k4.edge_mask(&["e1"]).unwrap();
        let bias = BiasedGraph::from_signature(k4, Signature { edges: sigma });
        let balanced: Vec<u32> = bias.balanced_cycles().map(|c| c.edges).collect();
        let mut text = graph_file_text("k4", bias.graph());
        for &mask in &balanced {
            text.push_str(&format!("balanced {{{}}}\n", label_list(bias.graph(), mask)));
        }
        let file = parse_graph(&text).unwrap();
        let reread = file.bias().unwrap();
        let b: Vec<u32> = reread.balanced_cycles().map(|c| c.edges).collect();
        assert_eq!(b, balanced);
    }

    #[test]
    fn parse_errors_carry_line_numbers() {
        let text = "graph g 2\nedge a 0 1\nedge b 0\n";
        match parse_graph(text).unwrap_err() {
            IoError::Parse { line, message, .. } => {
                assert_eq!(line, 3);
                assert!(message.contains("edge"));
            }
            other => panic!("expected a parse error, got {other:?}"),
        }
        let text = "graph g 2\nedge a 0 5\n";
        match parse_graph(text).unwrap_err() {
            IoError::Parse { line, .. } => assert_eq!(line, 2),
            other => panic!("expected a parse error, got {other:?}"),
        }
    }

    #[test]
    fn signature_and_balanced_lines_conflict() {
        let text = "graph g 2\nedge a 0 1\nedge b 0 1\nsignature a\nbalanced {a,b}\n";
        match parse_graph(text).unwrap_err() {
            IoError::Parse { line, message, .. } => {
                assert_eq!(line, 5);
                assert!(message.contains("not both"));
            }
            other => panic!("expected a parse error, got {other:?}"),
        }
    }

    #[test]
    fn uniform_and_named_matroids_parse() {
        let (name, m) = parse_matroid("matroid u36\nuniform 3 6\n").unwrap();
        assert_eq!(name, "u36");
        assert!(m.is_isomorphic(&Matroid::uniform(3, 6)));
        let (_, fano) = parse_matroid("matroid f\nnamed F7\n").unwrap();
        assert_eq!(fano.circuits(), Matroid::fano().circuits());
        assert!(parse_matroid("matroid f\nnamed F8\n").is_err());
        assert!(parse_matroid("matroid u\nuniform 7 6\n").is_err());
    }

    #[test]
    fn ground_circuit_files_roundtrip() {
        let m = Matroid::uniform(2, 4);
        let text = matroid_file_text("u24", &m);
        let (name, reread) = parse_matroid(&text).unwrap();
        assert_eq!(name, "u24");
        assert_eq!(reread.circuits(), m.circuits());
        assert_eq!(reread.element_names(), m.element_names());
    }

    #[test]
    fn bad_circuit_families_report_the_ground_line() {
        // two comparable circuits violate the circuit axioms
        let text = "matroid bad\nground a b c\ncircuit a b\ncircuit a b c\n";
        match parse_matroid(text).unwrap_err() {
            IoError::Parse { line, .. } => assert_eq!(line, 2),
            other => panic!("expected a parse error, got {other:?}"),
        }
    }

    #[test]
    fn file_references_resolve_and_bottom_out() {
        let dir = std::env::temp_dir().join(format!("quasigraph-io-{}", std::process::id()));
        fs::create_dir_all(&dir).unwrap();
        fs::write(
            dir.join("tri.graph"),
            "graph tri 3\nedge a 0 1\nedge b 1 2\nedge c 0 2\n",
        )
        .unwrap();
        fs::write(dir.join("mtri.matroid"), "matroid mtri\ngraphic tri.graph\n").unwrap();
        fs::write(dir.join("dtri.matroid"), "matroid dtri\ndual mtri.matroid\n").unwrap();
        fs::write(dir.join("loop.matroid"), "matroid loop\ndual loop.matroid\n").unwrap();

        let (_, m) = load_matroid(&dir.join("mtri.matroid")).unwrap();
        assert_eq!(m.circuits(), &[0b111]);
        let (_, d) = load_matroid(&dir.join("dtri.matroid")).unwrap();
        assert_eq!(d.rank(), 1);
        assert!(matches!(
            load_matroid(&dir.join("loop.matroid")).unwrap_err(),
            IoError::TooDeep { .. }
        ));
        assert!(matches!(
            load_matroid(&dir.join("absent.matroid")).unwrap_err(),
            IoError::Read { .. }
        ));
        fs::remove_dir_all(&dir).ok();
    }

    #[test]
    fn records_render_one_line_each() {
        let records = vec![
            Record::new("verdict").push("value", true).push("classes", 15),
            Record::new("stats").push("leaves", 42),
        ];
        assert_eq!(
            render_records(&records),
            "verdict value=true classes=15\nstats leaves=42\n"
        );
    }

    #[test]
    fn class_records_are_stable() {
        let g = Multigraph::complete(3);
        let bias = BiasedGraph::contrabalanced(g.clone());
        let class = FrameworkClass {
            graph: g,
            bias,
            is_frame: true,
            is_lift: false,
            relocated: false,
        };
        let records = class_records(&[class]);
        assert_eq!(
            render_records(&records),
            "class index=0 vertices=3 edges=e1:0-1,e2:0-2,e3:1-2 balanced=- \
             frame=true lift=false relocated=false\n"
        );
    }
}
