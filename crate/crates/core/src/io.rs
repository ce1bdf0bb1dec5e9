//! Plain-text formats.
//!
//! Graphs: first line `n m`, then `m` lines `u v c` with 0-based ids and
//! `c` in `{r, b}`; uncolored graphs drop the color column. Lines starting
//! with `#` are comments. Writers emit edges with `u < v` in lexicographic
//! order, so a write/read round trip is byte-stable.
//!
//! Tilings: one triangle per line, `a b c color`.

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::graph::{Color, ColoredGraph, Graph, Mode, Tiling, Triangle, TriangleColor};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GraphFile {
    Plain(Graph),
    Colored(ColoredGraph),
}

fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
}

fn parse_usize(tok: &str, line: usize) -> Result<usize> {
    tok.parse().map_err(|_| Error::Parse {
        line,
        msg: format!("expected a non-negative integer, found {tok:?}"),
    })
}

pub fn parse_graph(text: &str) -> Result<GraphFile> {
    let mut lines = content_lines(text);
    let (hline, header) = lines.next().ok_or(Error::Parse {
        line: 1,
        msg: "missing `n m` header".into(),
    })?;
    let head: Vec<&str> = header.split_whitespace().collect();
    if head.len() != 2 {
        return Err(Error::Parse { line: hline, msg: "header must be `n m`".into() });
    }
    let n = parse_usize(head[0], hline)?;
    let m = parse_usize(head[1], hline)?;

    let mut plain = Vec::new();
    let mut colored = Vec::new();
    let mut last_line = hline;
    for (line, l) in lines {
        last_line = line;
        let toks: Vec<&str> = l.split_whitespace().collect();
        match toks.as_slice() {
            [u, v] => plain.push((parse_usize(u, line)?, parse_usize(v, line)?)),
            [u, v, c] => {
                let color = Color::from_symbol(c).ok_or_else(|| Error::Parse {
                    line,
                    msg: format!("unknown color {c:?}"),
                })?;
                colored.push((parse_usize(u, line)?, parse_usize(v, line)?, color));
            }
            _ => {
                return Err(Error::Parse { line, msg: "edge lines are `u v` or `u v c`".into() });
            }
        }
    }
    if !plain.is_empty() && !colored.is_empty() {
        return Err(Error::Parse {
            line: last_line,
            msg: "partial coloring: some edges lack a color".into(),
        });
    }
    let found = plain.len() + colored.len();
    if found != m {
        return Err(Error::Parse {
            line: last_line,
            msg: format!("header announces {m} edges, found {found}"),
        });
    }
    if colored.is_empty() && m > 0 {
        Ok(GraphFile::Plain(Graph::new(n, &plain)?))
    } else {
        Ok(GraphFile::Colored(ColoredGraph::new(n, &colored)?))
    }
}

/// Reads a colored graph; an edgeless file counts as colored.
pub fn parse_colored(text: &str) -> Result<ColoredGraph> {
    match parse_graph(text)? {
        GraphFile::Colored(g) => Ok(g),
        GraphFile::Plain(g) if g.edge_count() == 0 => Ok(ColoredGraph::new(g.n(), &[])?),
        GraphFile::Plain(_) => Err(Error::Parse { line: 1, msg: "graph has no edge colors".into() }),
    }
}

pub fn parse_plain(text: &str) -> Result<Graph> {
    match parse_graph(text)? {
        GraphFile::Plain(g) => Ok(g),
        GraphFile::Colored(g) => Ok(g.graph().clone()),
    }
}

pub fn write_colored(g: &ColoredGraph) -> String {
    let mut s = format!("{} {}\n", g.n(), g.graph().edge_count());
    for (u, v, c) in g.colored_edges() {
        let _ = writeln!(s, "{u} {v} {}", c.symbol());
    }
    s
}

pub fn write_plain(g: &Graph) -> String {
    let mut s = format!("{} {}\n", g.n(), g.edge_count());
    for (u, v) in g.edges() {
        let _ = writeln!(s, "{u} {v}");
    }
    s
}

pub fn parse_tiling(text: &str, mode: Mode) -> Result<Tiling> {
    let mut triangles = Vec::new();
    for (line, l) in content_lines(text) {
        let toks: Vec<&str> = l.split_whitespace().collect();
        let [a, b, c, col] = toks.as_slice() else {
            return Err(Error::Parse { line, msg: "tiling lines are `a b c color`".into() });
        };
        let color = match *col {
            "m" | "mixed" => TriangleColor::Mixed,
            other => TriangleColor::from(Color::from_symbol(other).ok_or_else(|| Error::Parse {
                line,
                msg: format!("unknown color {other:?}"),
            })?),
        };
        triangles.push(Triangle::new(
            [parse_usize(a, line)?, parse_usize(b, line)?, parse_usize(c, line)?],
            color,
        ));
    }
    Ok(Tiling { triangles, mode })
}

pub fn write_tiling(t: &Tiling) -> String {
    let mut s = String::new();
    for tri in &t.triangles {
        let [a, b, c] = tri.vertices;
        let col = match tri.color {
            TriangleColor::Red => "r",
            TriangleColor::Blue => "b",
            TriangleColor::Mixed => "m",
        };
        let _ = writeln!(s, "{a} {b} {c} {col}");
    }
    s
}
