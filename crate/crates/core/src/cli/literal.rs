//! Inline graph literals: `K5`, `K3,3`, `C6`, `P4`, `S3`, `2K7`, `K4+C5`.
//!
//! ```text
//! graph := term ('+' term)*
//! term  := [count] atom
//! atom  := 'K' int [',' int] | 'C' int | 'P' int | 'S' int
//! ```
//! `P<t>` is the path with `t` edges and `S<t>` the star `K_{1,t}`.

use crate::constructions::{clique, complete_bipartite, cycle, path, star};
use crate::graphs::MultiHypergraph;
use crate::{Error, Result};

pub fn parse_literal(s: &str) -> Result<MultiHypergraph> {
    let mut p = Parser {
        s: s.as_bytes(),
        pos: 0,
        src: s,
    };
    let mut g = p.term()?;
    while p.eat(b'+') {
        g = g.disjoint_union(&p.term()?)?;
    }
    if p.pos != p.s.len() {
        return Err(p.err());
    }
    Ok(g)
}

struct Parser<'a> {
    s: &'a [u8],
    pos: usize,
    src: &'a str,
}

impl Parser<'_> {
    fn err(&self) -> Error {
        Error::InvalidArgument(format!("bad graph literal `{}` at offset {}", self.src, self.pos))
    }

    fn eat(&mut self, c: u8) -> bool {
        if self.s.get(self.pos) == Some(&c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn int(&mut self) -> Option<usize> {
        let start = self.pos;
        while self.s.get(self.pos).is_some_and(u8::is_ascii_digit) {
            self.pos += 1;
        }
        std::str::from_utf8(&self.s[start..self.pos]).ok()?.parse().ok()
    }

    fn term(&mut self) -> Result<MultiHypergraph> {
        let count = self.int().unwrap_or(1);
        if count == 0 {
            return Err(self.err());
        }
        let atom = self.atom()?;
        let mut g = atom.clone();
        for _ in 1..count {
            g = g.disjoint_union(&atom)?;
        }
        Ok(g)
    }

    fn atom(&mut self) -> Result<MultiHypergraph> {
        let kind = *self.s.get(self.pos).ok_or_else(|| self.err())?;
        self.pos += 1;
        let a = self.int().ok_or_else(|| self.err())?;
        Ok(match kind {
            b'K' if self.eat(b',') => {
                let b = self.int().ok_or_else(|| self.err())?;
                complete_bipartite(a, b)
            }
            b'K' => clique(a),
            b'C' if a >= 3 => cycle(a),
            b'P' if a >= 1 => path(a),
            b'S' if a >= 1 => star(a),
            _ => {
                self.pos -= 1;
                return Err(self.err());
            }
        })
    }
}
