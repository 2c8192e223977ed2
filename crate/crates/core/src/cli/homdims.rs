//! Hom-dimension bookkeeping on a composition-series table.

use std::collections::BTreeSet;

use serde::Serialize;

use crate::qmod::CompTable;

/// A projective row that disagrees with the multiplicities predicted by BGG reciprocity.
#[derive(Clone, Debug, Serialize)]
pub struct FlaggedRow {
    pub projective: String,
    /// `(L label, [P:L] in the table, Σ_x [M(x):P-label][M(x):L])`
    pub mismatches: Vec<(String, usize, usize)>,
}

#[derive(Clone, Debug, Serialize)]
pub struct Reciprocity {
    pub flagged: Vec<FlaggedRow>,
    /// End-dimension-2 projectives when every projective row is replaced by its predicted row
    pub candidates: Vec<String>,
}

#[derive(Clone, Debug, Serialize)]
pub struct ClaimCheck {
    pub name: String,
    pub labels: Vec<String>,
    pub matches_table: bool,
    pub matches_reciprocity: Option<bool>,
}

#[derive(Clone, Debug, Serialize)]
pub struct HomdimsReport {
    pub block: String,
    pub labels: Vec<String>,
    /// `dim End(P(w)) = [P(w) : L(w)]`
    pub end_dims: Vec<(String, usize)>,
    /// `hom[v][w] = dim Hom(P(v), P(w)) = [P(w) : L(v)]`
    pub hom: Vec<Vec<usize>>,
    pub candidates: Vec<String>,
    pub reciprocity: Option<Reciprocity>,
    pub claims: Vec<ClaimCheck>,
    pub notes: Vec<String>,
}

fn same_set(a: &[String], b: &[String]) -> bool {
    a.iter().collect::<BTreeSet<_>>() == b.iter().collect::<BTreeSet<_>>()
}

fn reciprocity(t: &CompTable) -> Option<Reciprocity> {
    if t.labels.iter().any(|l| !t.vermas.contains_key(l)) {
        return None;
    }
    let m = |x: &str, y: &str| t.multiplicity(&t.vermas, x, y);
    let predicted =
        |w: &str, y: &str| -> usize { t.labels.iter().map(|x| m(x, w) * m(x, y)).sum() };
    let mut flagged = Vec::new();
    for w in t.labels.iter().filter(|w| t.projectives.contains_key(*w)) {
        let mismatches: Vec<(String, usize, usize)> = t
            .labels
            .iter()
            .map(|y| (y.clone(), t.multiplicity(&t.projectives, w, y), predicted(w, y)))
            .filter(|(_, a, b)| a != b)
            .collect();
        if !mismatches.is_empty() {
            flagged.push(FlaggedRow { projective: w.clone(), mismatches });
        }
    }
    let candidates = t.labels.iter().filter(|w| predicted(w, w) == 2).cloned().collect();
    Some(Reciprocity { flagged, candidates })
}

pub fn homdims(t: &CompTable) -> HomdimsReport {
    let rows: Vec<&String> = t.labels.iter().filter(|l| t.projectives.contains_key(*l)).collect();
    let end_dims: Vec<(String, usize)> =
        rows.iter().map(|w| ((*w).clone(), t.multiplicity(&t.projectives, w, w))).collect();
    let hom = rows
        .iter()
        .map(|v| rows.iter().map(|w| t.multiplicity(&t.projectives, w, v)).collect())
        .collect();
    let candidates: Vec<String> = end_dims.iter().filter(|(_, d)| *d == 2).map(|(l, _)| l.clone()).collect();
    let recip = reciprocity(t);
    let claims = t
        .claims
        .iter()
        .map(|(name, labels)| ClaimCheck {
            name: name.clone(),
            labels: labels.clone(),
            matches_table: same_set(labels, &candidates),
            matches_reciprocity: recip.as_ref().map(|r| same_set(labels, &r.candidates)),
        })
        .collect();
    let mut notes = vec![
        "End-dimension 2 is necessary for spherelike; sphericality itself is not decidable from multiplicities alone"
            .to_string(),
    ];
    if let Some(r) = &recip {
        if !r.flagged.is_empty() {
            let names: Vec<&str> = r.flagged.iter().map(|f| f.projective.as_str()).collect();
            notes.push(format!(
                "projective rows {} disagree with BGG reciprocity against the Verma rows; candidates from the predicted rows: {{{}}}",
                names.join(", "),
                r.candidates.join(", ")
            ));
        }
    }
    if t.claims.windows(2).any(|p| !same_set(&p[0].1, &p[1].1)) {
        let lists: Vec<String> = t.claims.iter().map(|(n, l)| format!("{n} = {{{}}}", l.join(", "))).collect();
        notes.push(format!("the stated lists disagree with each other: {}", lists.join(" vs ")));
    }
    HomdimsReport {
        block: t.name.clone(),
        labels: rows.into_iter().cloned().collect(),
        end_dims,
        hom,
        candidates,
        reciprocity: recip,
        claims,
        notes,
    }
}

impl HomdimsReport {
    pub fn render(&self) -> String {
        let w = self.labels.iter().map(|l| l.len()).max().unwrap_or(1).max(4);
        let mut out = format!("block {}\n\ndim End(P(w)):\n", self.block);
        for (l, d) in &self.end_dims {
            out.push_str(&format!("  {l:w$}  {d}\n"));
        }
        out.push_str("\ndim Hom(P(row), P(column)):\n");
        out.push_str(&format!("  {:w$}", ""));
        for l in &self.labels {
            out.push_str(&format!("  {l:>w$}"));
        }
        out.push('\n');
        for (l, row) in self.labels.iter().zip(&self.hom) {
            out.push_str(&format!("  {l:w$}"));
            for d in row {
                out.push_str(&format!("  {d:>w$}"));
            }
            out.push('\n');
        }
        out.push_str(&format!("\nEnd-dimension-2 candidates: {{{}}}\n", self.candidates.join(", ")));
        match &self.reciprocity {
            None => out.push_str("BGG reciprocity: not checked (Verma rows incomplete)\n"),
            Some(r) if r.flagged.is_empty() => out.push_str("BGG reciprocity: consistent\n"),
            Some(r) => {
                out.push_str("BGG reciprocity: inconsistent rows\n");
                for f in &r.flagged {
                    let cells: Vec<String> =
                        f.mismatches.iter().map(|(l, a, b)| format!("L({l}) table {a} predicted {b}")).collect();
                    out.push_str(&format!("  P({}): {}\n", f.projective, cells.join("; ")));
                }
                out.push_str(&format!("  candidates from predicted rows: {{{}}}\n", r.candidates.join(", ")));
            }
        }
        for c in &self.claims {
            let recip = match c.matches_reciprocity {
                Some(true) => ", matches predicted rows",
                Some(false) => ", differs from predicted rows",
                None => "",
            };
            let table = if c.matches_table { "matches table" } else { "differs from table" };
            out.push_str(&format!("claim {} {{{}}}: {table}{recip}\n", c.name, c.labels.join(", ")));
        }
        for n in &self.notes {
            out.push_str(&format!("note: {n}\n"));
        }
        out
    }
}
