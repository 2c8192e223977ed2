//! Text formats for modules and composition-series tables.

use std::collections::BTreeMap;
use std::sync::Arc;

use super::module::{layout, Block, QModule};
use crate::error::{Error, Result};
use crate::linalg::{fmt_q, parse_q, Mat, Q};
use crate::path_algebra::FDAlgebra;

fn perr(line: usize, msg: impl Into<String>) -> Error {
    Error::Parse(format!("line {line}: {}", msg.into()))
}

/// Module basis positions at one vertex, in degree order.
fn vertex_positions(blocks: &[Block], v: usize) -> Vec<usize> {
    blocks.iter().filter(|b| b.vertex == v).flat_map(|b| b.range()).collect()
}

/// Render a module; each arrow `u -> v` is written as the `dim M_u x dim M_v` matrix.
pub fn write_module(name: &str, m: &QModule) -> String {
    let alg = m.alg();
    let mut out = format!("module {name} over {}\n", alg.name);
    for b in m.blocks() {
        out.push_str(&format!("space {} degree {} dim {}\n", alg.vertex_label(b.vertex), b.degree, b.dim));
    }
    for (a, arrow) in alg.quiver.arrows.iter().enumerate() {
        let rows = vertex_positions(m.blocks(), arrow.source);
        let cols = vertex_positions(m.blocks(), arrow.target);
        let sub = m.arrow_matrix(a).submatrix(&rows, &cols);
        if sub.is_zero() {
            continue;
        }
        out.push_str(&format!("map {} : {} x {}\n", arrow.name, rows.len(), cols.len()));
        for i in 0..rows.len() {
            let r: Vec<String> = (0..cols.len()).map(|j| fmt_q(sub.get(i, j))).collect();
            out.push_str(&r.join(" "));
            out.push('\n');
        }
    }
    out
}

pub fn parse_module(text: &str, alg: &Arc<FDAlgebra>) -> Result<(String, QModule)> {
    let mut name = String::from("unnamed");
    let mut spaces: Vec<(usize, i32, usize)> = Vec::new();
    let mut maps: Vec<(usize, usize, Vec<Vec<Q>>)> = Vec::new();
    let lines: Vec<(usize, &str)> = text
        .lines()
        .enumerate()
        .map(|(k, l)| (k + 1, l.split('#').next().unwrap_or("").trim()))
        .filter(|(_, l)| !l.is_empty())
        .collect();
    let mut k = 0;
    while k < lines.len() {
        let (line, l) = lines[k];
        k += 1;
        let toks: Vec<&str> = l.split_whitespace().collect();
        match toks[0] {
            "module" => {
                if toks.len() != 4 || toks[2] != "over" {
                    return Err(perr(line, "expected 'module NAME over ALGEBRA'"));
                }
                if toks[3] != alg.name {
                    return Err(perr(line, format!("module is over '{}', not '{}'", toks[3], alg.name)));
                }
                name = toks[1].to_string();
            }
            "space" => {
                if toks.len() != 6 || toks[2] != "degree" || toks[4] != "dim" {
                    return Err(perr(line, "expected 'space VERTEX degree D dim K'"));
                }
                let v = alg.vertex(toks[1]).map_err(|e| perr(line, e.to_string()))?;
                let d: i32 = toks[3].parse().map_err(|_| perr(line, "bad degree"))?;
                let n: usize = toks[5].parse().map_err(|_| perr(line, "bad dimension"))?;
                spaces.push((v, d, n));
            }
            "map" => {
                if toks.len() != 6 || toks[2] != ":" || toks[4] != "x" {
                    return Err(perr(line, "expected 'map ARROW : r x c'"));
                }
                let a = alg.quiver.arrow_index(toks[1]).map_err(|e| perr(line, e.to_string()))?;
                let r: usize = toks[3].parse().map_err(|_| perr(line, "bad row count"))?;
                let c: usize = toks[5].parse().map_err(|_| perr(line, "bad column count"))?;
                let mut rows = Vec::new();
                for _ in 0..r {
                    let (rl, row) = *lines.get(k).ok_or_else(|| perr(line, "missing matrix rows"))?;
                    k += 1;
                    let vals: Vec<Q> = row
                        .split_whitespace()
                        .map(|t| parse_q(t).ok_or_else(|| perr(rl, format!("bad rational '{t}'"))))
                        .collect::<Result<_>>()?;
                    if vals.len() != c {
                        return Err(perr(rl, format!("expected {c} entries, got {}", vals.len())));
                    }
                    rows.push(vals);
                }
                maps.push((a, line, rows));
            }
            other => return Err(perr(line, format!("unknown keyword '{other}'"))),
        }
    }
    let (blocks, dim) = layout(&spaces);
    let mut act = vec![Mat::zeros(dim, dim); alg.quiver.arrows.len()];
    for (a, line, rows) in maps {
        let arrow = &alg.quiver.arrows[a];
        let rp = vertex_positions(&blocks, arrow.source);
        let cp = vertex_positions(&blocks, arrow.target);
        if rows.len() != rp.len() || rows.iter().any(|r| r.len() != cp.len()) {
            return Err(perr(line, format!("map {} must be {} x {}", arrow.name, rp.len(), cp.len())));
        }
        for (i, row) in rows.into_iter().enumerate() {
            for (j, x) in row.into_iter().enumerate() {
                act[a].set(rp[i], cp[j], x);
            }
        }
    }
    let m = QModule::new(alg.clone(), &spaces, act)?;
    Ok((name, m))
}

/// A bundled table of composition factors `X(label) : L(l1)@d1, ...`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CompTable {
    pub name: String,
    pub labels: Vec<String>,
    pub projectives: BTreeMap<String, Vec<(String, i32)>>,
    pub vermas: BTreeMap<String, Vec<(String, i32)>>,
    /// `claim NAME : l1, l2, ...` lines: label sets asserted by a source, checked by consumers
    pub claims: Vec<(String, Vec<String>)>,
}

impl CompTable {
    /// `[X(w) : L(v)]`, summed over degrees.
    pub fn multiplicity(&self, rows: &BTreeMap<String, Vec<(String, i32)>>, w: &str, v: &str) -> usize {
        rows.get(w).map_or(0, |fs| fs.iter().filter(|(l, _)| l == v).count())
    }
}

pub fn parse_comp_table(text: &str) -> Result<CompTable> {
    let mut t = CompTable { name: String::new(), labels: Vec::new(), projectives: BTreeMap::new(), vermas: BTreeMap::new(), claims: Vec::new() };
    let mut seen_block = false;
    for (k, raw) in text.lines().enumerate() {
        let line = k + 1;
        let l = raw.split('#').next().unwrap_or("").trim();
        if l.is_empty() {
            continue;
        }
        if let Some(rest) = l.strip_prefix("block ") {
            t.name = rest.trim().to_string();
            seen_block = true;
            continue;
        }
        if !seen_block {
            return Err(perr(line, "expected 'block NAME' first"));
        }
        if let Some(rest) = l.strip_prefix("claim ") {
            let (name, items) = rest.split_once(':').ok_or_else(|| perr(line, "missing ':' in claim"))?;
            let items = items.split(',').map(str::trim).filter(|x| !x.is_empty()).map(String::from).collect();
            t.claims.push((name.trim().to_string(), items));
            continue;
        }
        let (kind, rest) = l.split_once(char::is_whitespace).ok_or_else(|| perr(line, "expected 'P LABEL : ...'"))?;
        let (label, factors) = rest.split_once(':').ok_or_else(|| perr(line, "missing ':'"))?;
        let label = label.trim().to_string();
        if label.is_empty() {
            return Err(perr(line, "empty label"));
        }
        let mut fs = Vec::new();
        for f in factors.split(',').map(str::trim).filter(|f| !f.is_empty()) {
            let (l, d) = f.split_once('@').ok_or_else(|| perr(line, format!("factor '{f}' needs '@degree'")))?;
            let d: i32 = d.trim().parse().map_err(|_| perr(line, format!("bad degree in '{f}'")))?;
            fs.push((l.trim().to_string(), d));
        }
        if !t.labels.contains(&label) {
            t.labels.push(label.clone());
        }
        let rows = match kind {
            "P" => &mut t.projectives,
            "M" => &mut t.vermas,
            other => return Err(perr(line, format!("unknown row kind '{other}' (expected P or M)"))),
        };
        if rows.insert(label.clone(), fs).is_some() {
            return Err(perr(line, format!("duplicate row for {kind}({label})")));
        }
    }
    if !seen_block {
        return Err(Error::Parse("empty table: no 'block' line".into()));
    }
    for fs in t.projectives.values().chain(t.vermas.values()) {
        for (l, _) in fs {
            if !t.labels.contains(l) {
                return Err(Error::Parse(format!("factor L({l}) has no row of its own")));
            }
        }
    }
    for (name, items) in &t.claims {
        if let Some(l) = items.iter().find(|l| !t.labels.contains(l)) {
            return Err(Error::Parse(format!("claim '{name}' names unknown label '{l}'")));
        }
    }
    Ok(t)
}

pub fn write_comp_table(t: &CompTable) -> String {
    let mut out = format!("block {}\n", t.name);
    for (kind, rows) in [("M", &t.vermas), ("P", &t.projectives)] {
        for l in &t.labels {
            if let Some(fs) = rows.get(l) {
                let parts: Vec<String> = fs.iter().map(|(x, d)| format!("{x}@{d}")).collect();
                out.push_str(&format!("{kind} {l} : {}\n", parts.join(", ")));
            }
        }
    }
    for (name, items) in &t.claims {
        out.push_str(&format!("claim {name} : {}\n", items.join(", ")));
    }
    out
}
