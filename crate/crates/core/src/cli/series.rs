//! Composition tables computed from an algebra.

use std::collections::BTreeMap;
use std::sync::Arc;

use crate::error::Result;
use crate::path_algebra::FDAlgebra;
use crate::qmod::{composition_multiplicities, parabolic_verma, projective, CompTable, QModule};

fn factors(alg: &FDAlgebra, m: &QModule) -> Vec<(String, i32)> {
    let mut by_degree: BTreeMap<i32, Vec<String>> = BTreeMap::new();
    for ((v, d), k) in composition_multiplicities(m) {
        for _ in 0..k {
            by_degree.entry(d).or_default().push(alg.vertex_label(v).to_string());
        }
    }
    by_degree.into_iter().flat_map(|(d, ls)| ls.into_iter().map(move |l| (l, d))).collect()
}

/// Graded composition factors of every `P(w)`, and of every `M(w)` when the Vermas are defined.
pub fn composition_table(alg: &Arc<FDAlgebra>) -> Result<CompTable> {
    let n = alg.num_vertices();
    let labels: Vec<String> = (0..n).map(|v| alg.vertex_label(v).to_string()).collect();
    let mut t = CompTable {
        name: alg.name.clone(),
        labels: labels.clone(),
        projectives: BTreeMap::new(),
        vermas: BTreeMap::new(),
        claims: Vec::new(),
    };
    for (v, l) in labels.iter().enumerate() {
        t.projectives.insert(l.clone(), factors(alg, &projective(alg, v)));
        if let Ok(m) = parabolic_verma(alg, v) {
            t.vermas.insert(l.clone(), factors(alg, &m));
        }
    }
    Ok(t)
}

/// One row per module, one column per Loewy layer.
pub fn render_aligned(t: &CompTable) -> String {
    let mut rows: Vec<(String, Vec<String>)> = Vec::new();
    for (kind, table) in [("M", &t.vermas), ("P", &t.projectives)] {
        for l in &t.labels {
            let Some(fs) = table.get(l) else { continue };
            let top = fs.iter().map(|(_, d)| *d).max().unwrap_or(0);
            let cells = (0..=top)
                .map(|d| {
                    let ls: Vec<String> =
                        fs.iter().filter(|(_, k)| *k == d).map(|(x, _)| format!("L({x})")).collect();
                    ls.join(" ")
                })
                .collect();
            rows.push((format!("{kind}({l})"), cells));
        }
    }
    let layers = rows.iter().map(|(_, c)| c.len()).max().unwrap_or(0);
    let name_w = rows.iter().map(|(n, _)| n.chars().count()).max().unwrap_or(0);
    let col_w: Vec<usize> = (0..layers)
        .map(|j| rows.iter().filter_map(|(_, c)| c.get(j)).map(|s| s.chars().count()).max().unwrap_or(0).max(7))
        .collect();
    let mut out = format!("composition series, {}\n", t.name);
    out.push_str(&format!("{:name_w$}", ""));
    for (j, w) in col_w.iter().enumerate() {
        out.push_str(&format!(" | {:w$}", format!("layer {j}")));
    }
    out.truncate(out.trim_end().len());
    out.push('\n');
    for (name, cells) in &rows {
        let pad = name_w - name.chars().count();
        out.push_str(&format!("{name}{}", " ".repeat(pad)));
        for (c, w) in cells.iter().zip(&col_w) {
            let pad = w - c.chars().count();
            out.push_str(&format!(" | {c}{}", " ".repeat(pad)));
        }
        out.truncate(out.trim_end().len());
        out.push('\n');
    }
    out
}
