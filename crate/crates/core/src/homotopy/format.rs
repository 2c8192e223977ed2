//! Line-oriented text format for complexes of projectives.
//!
//! ```text
//! complex NAME over ALGEBRA
//! term 1 : P(e)<2>
//! term 0 : P(s)<1>, P(e)
//! diff 1 : 2 x 1
//!   a
//!   0
//! ```

use std::collections::BTreeMap;
use std::sync::Arc;

use super::complex::{Complex, PMat, Summand};
use crate::error::{Error, Result};
use crate::path_algebra::{parse_elem, FDAlgebra};

fn perr(line: usize, msg: impl Into<String>) -> Error {
    Error::Parse(format!("line {line}: {}", msg.into()))
}

pub fn write_complex(name: &str, x: &Complex) -> String {
    let alg = x.alg();
    let mut out = format!("complex {name} over {}\n", alg.name);
    for (j, t) in x.terms().iter().rev() {
        let parts: Vec<String> = t.iter().map(|s| s.render(alg)).collect();
        out.push_str(&format!("term {j} : {}\n", parts.join(", ")));
    }
    for j in x.terms().keys().rev() {
        let Some(d) = x.diff_ref(*j) else { continue };
        out.push_str(&format!("diff {j} : {} x {}\n", d.rows(), d.cols()));
        for r in 0..d.rows() {
            let row: Vec<String> = (0..d.cols()).map(|c| alg.render_elem(d.get(r, c))).collect();
            out.push_str(&format!("  {}\n", row.join(" ; ")));
        }
    }
    out
}

fn parse_summand(alg: &FDAlgebra, s: &str, line: usize) -> Result<Summand> {
    let s = s.trim();
    let body = s.strip_prefix("P(").ok_or_else(|| perr(line, format!("expected P(vertex), found '{s}'")))?;
    let (v, rest) = body.split_once(')').ok_or_else(|| perr(line, format!("unclosed summand '{s}'")))?;
    let vertex = alg.vertex(v.trim()).map_err(|e| perr(line, e.to_string()))?;
    let rest = rest.trim();
    let shift = if rest.is_empty() {
        0
    } else {
        let inner = rest
            .strip_prefix('<')
            .and_then(|r| r.strip_suffix('>'))
            .ok_or_else(|| perr(line, format!("bad grading shift '{rest}'")))?;
        inner.trim().parse().map_err(|_| perr(line, format!("bad grading shift '{inner}'")))?
    };
    Ok(Summand::new(vertex, shift))
}

/// Parse a complex over `alg`; returns its name. The result is validated.
pub fn parse_complex(text: &str, alg: &Arc<FDAlgebra>) -> Result<(String, Complex)> {
    let mut name = None;
    let mut terms: BTreeMap<i32, Vec<Summand>> = BTreeMap::new();
    let mut diffs: BTreeMap<i32, PMat> = BTreeMap::new();
    let lines: Vec<(usize, &str)> = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
        .filter(|(_, l)| !l.is_empty())
        .collect();
    let mut k = 0;
    while k < lines.len() {
        let (ln, l) = lines[k];
        k += 1;
        if let Some(rest) = l.strip_prefix("complex ") {
            let (n, a) = rest.split_once(" over ").ok_or_else(|| perr(ln, "expected 'complex NAME over ALGEBRA'"))?;
            if a.trim() != alg.name {
                return Err(perr(ln, format!("complex is over '{}', not '{}'", a.trim(), alg.name)));
            }
            name = Some(n.trim().to_string());
        } else if let Some(rest) = l.strip_prefix("term ") {
            let (j, body) = rest.split_once(':').ok_or_else(|| perr(ln, "expected 'term J : summands'"))?;
            let j: i32 = j.trim().parse().map_err(|_| perr(ln, format!("bad degree '{}'", j.trim())))?;
            let body = body.trim();
            let t = if body.is_empty() || body == "0" {
                Vec::new()
            } else {
                body.split(',').map(|s| parse_summand(alg, s, ln)).collect::<Result<Vec<_>>>()?
            };
            if terms.insert(j, t).is_some() {
                return Err(perr(ln, format!("term {j} given twice")));
            }
        } else if let Some(rest) = l.strip_prefix("diff ") {
            let (j, shape) = rest.split_once(':').ok_or_else(|| perr(ln, "expected 'diff J : r x c'"))?;
            let j: i32 = j.trim().parse().map_err(|_| perr(ln, format!("bad degree '{}'", j.trim())))?;
            let (r, c) = shape.split_once('x').ok_or_else(|| perr(ln, "expected 'r x c'"))?;
            let r: usize = r.trim().parse().map_err(|_| perr(ln, "bad row count"))?;
            let c: usize = c.trim().parse().map_err(|_| perr(ln, "bad column count"))?;
            let mut d = PMat::zeros(r, c);
            for row in 0..r {
                let Some(&(rl, body)) = lines.get(k) else {
                    return Err(perr(ln, format!("diff {j} needs {r} rows")));
                };
                k += 1;
                let entries: Vec<&str> = body.split(';').collect();
                if entries.len() != c {
                    return Err(perr(rl, format!("expected {c} entries, found {}", entries.len())));
                }
                for (col, e) in entries.iter().enumerate() {
                    d.set(row, col, parse_elem(alg, e).map_err(|e| perr(rl, e.to_string()))?);
                }
            }
            diffs.insert(j, d);
        } else {
            return Err(perr(ln, format!("unrecognised line '{l}'")));
        }
    }
    let name = name.ok_or_else(|| perr(1, "missing 'complex NAME over ALGEBRA' header"))?;
    for (&j, d) in &diffs {
        let (src, dst) = (terms.get(&j).map_or(0, |t| t.len()), terms.get(&(j - 1)).map_or(0, |t| t.len()));
        if d.rows() != dst || d.cols() != src {
            return Err(Error::Parse(format!("diff {j} is {} x {}, terms need {dst} x {src}", d.rows(), d.cols())));
        }
    }
    let x = Complex::from_parts(alg, terms, diffs);
    x.validate()?;
    Ok((name, x))
}
