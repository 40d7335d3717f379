//! Plain-text graph format.
//!
//! ```text
//! # a triangle with one doubled edge and a loop at vertex 2
//! n 3
//! 0 1 x2
//! 1 2
//! 0 2
//! 2 x1
//! ```
//!
//! Each edge line lists its vertices followed by an optional `x<mult>`.
//! A lone vertex with a multiplicity (`2 x1`) is a 1-uniform loop, and
//! `3 3` is the 2-uniform loop `{3, 3}`. Several graphs may share one
//! stream, each starting with its own `n` header.

use std::fmt::Write as _;

use super::MultiHypergraph;
use crate::{Error, Result};

pub fn parse_graph(text: &str) -> Result<MultiHypergraph> {
    let mut graphs = parse_graphs(text)?;
    match graphs.len() {
        1 => Ok(graphs.pop().unwrap()),
        0 => Err(Error::Parse {
            line: 1,
            msg: "missing `n <count>` header".into(),
        }),
        k => Err(Error::Parse {
            line: 1,
            msg: format!("expected one graph, found {k}"),
        }),
    }
}

pub fn parse_graphs(text: &str) -> Result<Vec<MultiHypergraph>> {
    let mut out: Vec<MultiHypergraph> = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let body = raw.split('#').next().unwrap().trim();
        if body.is_empty() {
            continue;
        }
        let err = |msg: String| Error::Parse { line, msg };
        let mut tokens = body.split_whitespace().peekable();
        if tokens.peek() == Some(&"n") {
            tokens.next();
            let n: usize = tokens
                .next()
                .ok_or_else(|| err("header needs a vertex count".into()))?
                .parse()
                .map_err(|e| err(format!("bad vertex count: {e}")))?;
            if tokens.next().is_some() {
                return Err(err("trailing tokens after header".into()));
            }
            out.push(MultiHypergraph::new(n).map_err(|e| err(e.to_string()))?);
            continue;
        }
        let g = out
            .last_mut()
            .ok_or_else(|| err("edge before `n <count>` header".into()))?;
        let mut verts = Vec::new();
        let mut mult = 1u32;
        let mut saw_mult = false;
        for tok in tokens {
            if saw_mult {
                return Err(err(format!("unexpected token `{tok}` after multiplicity")));
            }
            if let Some(m) = tok.strip_prefix('x') {
                mult = m.parse().map_err(|e| err(format!("bad multiplicity `{tok}`: {e}")))?;
                saw_mult = true;
            } else {
                verts.push(
                    tok.parse::<usize>()
                        .map_err(|e| err(format!("bad vertex `{tok}`: {e}")))?,
                );
            }
        }
        if verts.len() == 1 && !saw_mult {
            return Err(err("a 1-uniform loop needs an explicit `x<mult>`".into()));
        }
        g.add_edge(&verts, mult).map_err(|e| err(e.to_string()))?;
    }
    Ok(out)
}

pub fn write_graph(g: &MultiHypergraph) -> String {
    let mut s = format!("n {}\n", g.n());
    for (k, m) in g.edges() {
        let verts: Vec<String> = k.vertices().map(|v| v.to_string()).collect();
        s.push_str(&verts.join(" "));
        if m > 1 || k.len() == 1 {
            let _ = write!(s, " x{m}");
        }
        s.push('\n');
    }
    s
}
