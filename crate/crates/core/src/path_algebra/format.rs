//! Line-oriented text format for algebras.

use num::One;

use super::algebra::{build_algebra, AElem, FDAlgebra, Relation, DEFAULT_DEGREE_GUARD};
use super::quiver::{Path, Quiver};
use crate::error::{Error, Result};
use crate::linalg::{parse_q, Q};

fn perr(line: usize, msg: impl Into<String>) -> Error {
    Error::Parse(format!("line {line}: {}", msg.into()))
}

/// Parse a path `a3*a2*a1` (right to left) or a trivial path `1_v`.
fn parse_path(q: &Quiver, s: &str, line: usize) -> Result<Path> {
    let s = s.trim();
    if let Some(v) = s.strip_prefix("1_") {
        let v = q.vertex_index(v).map_err(|e| perr(line, e.to_string()))?;
        return Ok(Path::trivial(v));
    }
    let mut arrows = Vec::new();
    for name in s.split('*').rev() {
        arrows.push(q.arrow_index(name.trim()).map_err(|e| perr(line, e.to_string()))?);
    }
    Path::from_arrows(q, &arrows).ok_or_else(|| perr(line, format!("path '{s}' is not composable")))
}

/// Parse one side of a relation: `c1*p1 + c2*p2 - p3`.
fn parse_side(q: &Quiver, s: &str, line: usize) -> Result<Vec<(Q, Path)>> {
    let s = s.trim();
    if s == "0" {
        return Ok(Vec::new());
    }
    let mut terms = Vec::new();
    let mut sign = Q::one();
    let mut cur = String::new();
    let flush = |cur: &mut String, sign: &Q, terms: &mut Vec<(Q, Path)>| -> Result<()> {
        let t = cur.trim();
        if t.is_empty() {
            return Err(perr(line, "empty term in relation"));
        }
        let mut coeff = sign.clone();
        let mut rest = t;
        if let Some((head, tail)) = t.split_once('*') {
            if let Some(c) = parse_q(head) {
                coeff *= c;
                rest = tail;
            }
        }
        terms.push((coeff, parse_path(q, rest, line)?));
        cur.clear();
        Ok(())
    };
    let mut first = true;
    for ch in s.chars() {
        if ch == '+' || ch == '-' {
            if first && cur.trim().is_empty() {
                if ch == '-' {
                    sign = -sign;
                }
                continue;
            }
            flush(&mut cur, &sign, &mut terms)?;
            sign = if ch == '-' { -Q::one() } else { Q::one() };
        } else {
            cur.push(ch);
        }
        first = false;
    }
    flush(&mut cur, &sign, &mut terms)?;
    Ok(terms)
}

/// Parse an algebra element written as a combination of paths, e.g. `2*a*b - 1_e`.
pub fn parse_elem(a: &FDAlgebra, s: &str) -> Result<AElem> {
    let mut x = AElem::zero();
    for (c, p) in parse_side(&a.quiver, s, 0)? {
        x = x.add(&a.reduce_path(&p).scale(&c));
    }
    Ok(x)
}

pub fn parse_algebra(text: &str) -> Result<FDAlgebra> {
    parse_algebra_with_guard(text, DEFAULT_DEGREE_GUARD)
}

pub fn parse_algebra_with_guard(text: &str, guard: usize) -> Result<FDAlgebra> {
    let mut name = String::from("unnamed");
    let mut qv = Quiver::new();
    let mut rels = Vec::new();
    for (k, raw) in text.lines().enumerate() {
        let line = k + 1;
        let l = raw.split('#').next().unwrap_or("").trim();
        if l.is_empty() {
            continue;
        }
        let (kw, rest) = l.split_once(char::is_whitespace).unwrap_or((l, ""));
        let rest = rest.trim();
        match kw {
            "algebra" => name = rest.to_string(),
            "vertex" => {
                qv.add_vertex(rest).map_err(|e| perr(line, e.to_string()))?;
            }
            "arrow" => {
                let (nm, ends) =
                    rest.split_once(':').ok_or_else(|| perr(line, "expected 'arrow NAME : SRC -> DST'"))?;
                let (src, dst) =
                    ends.split_once("->").ok_or_else(|| perr(line, "expected 'SRC -> DST'"))?;
                qv.add_arrow(nm.trim(), src.trim(), dst.trim()).map_err(|e| perr(line, e.to_string()))?;
            }
            "relation" => {
                let (lhs, rhs) = rest.split_once('=').ok_or_else(|| perr(line, "relation needs '='"))?;
                let mut terms = parse_side(&qv, lhs, line)?;
                for (c, p) in parse_side(&qv, rhs, line)? {
                    terms.push((-c, p));
                }
                rels.push(Relation::new(terms));
            }
            other => return Err(perr(line, format!("unknown keyword '{other}'"))),
        }
    }
    build_algebra(&name, qv, rels, guard)
}

pub fn write_algebra(a: &FDAlgebra) -> String {
    let mut out = format!("algebra {}\n", a.name);
    for v in &a.quiver.vertices {
        out.push_str(&format!("vertex {v}\n"));
    }
    for ar in &a.quiver.arrows {
        out.push_str(&format!(
            "arrow {} : {} -> {}\n",
            ar.name, a.quiver.vertices[ar.source], a.quiver.vertices[ar.target]
        ));
    }
    for r in &a.relations {
        out.push_str(&format!("relation {}\n", r.render(&a.quiver)));
    }
    out
}
