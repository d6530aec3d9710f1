//! Plain-text graph and path-family files.
//!
//! Graph files start with a header line `n m` followed by `m` lines `u v`.
//! Family files hold one path per line as its vertex sequence. In both, `#`
//! starts a comment and blank lines are ignored.

use std::fmt::Write as _;
use std::path::Path as FsPath;

use thiserror::Error;

use crate::graph::{Graph, GraphError, Path, PathError, PathFamily, Vertex};

#[derive(Debug, Error)]
pub enum IoError {
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },
    #[error("line {line}: {source}")]
    Graph { line: usize, source: GraphError },
    #[error("line {line}: {source}")]
    Path { line: usize, source: PathError },
    #[error("expected {expected} edges, found {found}")]
    EdgeCount { expected: usize, found: usize },
    #[error("missing `n m` header")]
    MissingHeader,
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

/// Non-empty content lines with comments removed, numbered from 1.
fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines().enumerate().filter_map(|(i, l)| {
        let body = l.split('#').next().unwrap_or("").trim();
        (!body.is_empty()).then_some((i + 1, body))
    })
}

fn numbers(line: usize, body: &str) -> Result<Vec<usize>, IoError> {
    body.split_whitespace()
        .map(|tok| {
            tok.parse().map_err(|_| IoError::Syntax { line, message: format!("`{tok}` is not a vertex index") })
        })
        .collect()
}

pub fn parse_graph(text: &str) -> Result<Graph, IoError> {
    let mut lines = content_lines(text);
    let (hline, header) = lines.next().ok_or(IoError::MissingHeader)?;
    let [n, m] = numbers(hline, header)?[..] else {
        return Err(IoError::Syntax { line: hline, message: "header must be `n m`".into() });
    };
    let mut g_edges = Vec::with_capacity(m);
    for (line, body) in lines {
        let [u, v] = numbers(line, body)?[..] else {
            return Err(IoError::Syntax { line, message: "edge line must be `u v`".into() });
        };
        // Validate incrementally so errors point at the offending line.
        g_edges.push((u, v));
        Graph::new(n, g_edges.iter().copied()).map_err(|source| IoError::Graph { line, source })?;
    }
    if g_edges.len() != m {
        return Err(IoError::EdgeCount { expected: m, found: g_edges.len() });
    }
    Ok(Graph::new(n, g_edges).expect("validated above"))
}

pub fn emit_graph(g: &Graph) -> String {
    let mut out = format!("{} {}\n", g.vertex_count(), g.edge_count());
    for &(u, v) in g.edges() {
        writeln!(out, "{u} {v}").expect("writing to a String");
    }
    out
}

pub fn parse_family(g: &Graph, text: &str) -> Result<PathFamily, IoError> {
    let mut fam = PathFamily::new();
    for (line, body) in content_lines(text) {
        let vs: Vec<Vertex> = numbers(line, body)?;
        fam.push(Path::new(g, vs).map_err(|source| IoError::Path { line, source })?);
    }
    Ok(fam)
}

pub fn emit_family(fam: &PathFamily) -> String {
    let mut out = String::new();
    for p in fam {
        let line: Vec<String> = p.vertices().iter().map(ToString::to_string).collect();
        out.push_str(&line.join(" "));
        out.push('\n');
    }
    out
}

/// Writes `contents` to a sibling temporary file, then renames it over `path`.
pub fn write_atomic(path: &FsPath, contents: &str) -> Result<(), IoError> {
    let name = path.file_name().map(|s| s.to_string_lossy().into_owned()).unwrap_or_default();
    let tmp = path.with_file_name(format!(".{name}.tmp{}", std::process::id()));
    std::fs::write(&tmp, contents)?;
    std::fs::rename(&tmp, path).inspect_err(|_| {
        let _ = std::fs::remove_file(&tmp);
    })?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators;

    #[test]
    fn graph_round_trip() {
        let g = generators::petersen();
        assert_eq!(parse_graph(&emit_graph(&g)).unwrap(), g);
    }

    #[test]
    fn comments_and_blanks() {
        let g = parse_graph("# triangle\n3 3\n0 1  # first\n\n1 2\n2 0\n").unwrap();
        assert_eq!(g.edge_count(), 3);
    }

    #[test]
    fn errors_carry_line_numbers() {
        let err = parse_graph("3 2\n0 1\n1 x\n").unwrap_err();
        assert!(matches!(err, IoError::Syntax { line: 3, .. }), "{err}");
        let err = parse_graph("3 2\n0 1\n1 1\n").unwrap_err();
        assert!(matches!(err, IoError::Graph { line: 3, source: GraphError::SelfLoop(1) }), "{err}");
        let err = parse_graph("3 2\n0 1\n0 1\n").unwrap_err();
        assert!(matches!(err, IoError::Graph { line: 3, .. }));
        assert!(matches!(parse_graph("3 3\n0 1\n").unwrap_err(), IoError::EdgeCount { expected: 3, found: 1 }));
        assert!(matches!(parse_graph("# nothing\n").unwrap_err(), IoError::MissingHeader));
        let g = generators::path(4);
        let err = parse_family(&g, "0 1 2\n\n0 2\n").unwrap_err();
        assert!(matches!(err, IoError::Path { line: 3, .. }), "{err}");
    }

    #[test]
    fn family_round_trip() {
        let g = generators::cycle(5);
        let fam = PathFamily::from_sequences(&g, [vec![0, 1, 2], vec![3, 4, 0], vec![4, 3]]).unwrap();
        assert_eq!(parse_family(&g, &emit_family(&fam)).unwrap(), fam);
    }

    #[test]
    fn atomic_write_replaces() {
        let dir = std::env::temp_dir().join(format!("pathsep-io-{}", std::process::id()));
        std::fs::create_dir_all(&dir).unwrap();
        let f = dir.join("g.txt");
        write_atomic(&f, "one").unwrap();
        write_atomic(&f, "two").unwrap();
        assert_eq!(std::fs::read_to_string(&f).unwrap(), "two");
        assert_eq!(std::fs::read_dir(&dir).unwrap().count(), 1);
        std::fs::remove_dir_all(dir).unwrap();
    }
}
