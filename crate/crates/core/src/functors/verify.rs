//! Sweeps comparing shuffling with twisting, and the braid relations.

use std::sync::Arc;
use std::time::Instant;

use serde::Serialize;

use super::bimodule::{bimodule_iso, Bimodule, BimoduleIso};
use super::theta::{coshuffle, shuffle, theta, TwoTermFunctor};
use super::xi::xi_prime;
use crate::error::{Error, Result};
use crate::homotopy::complex::Complex;
use crate::homotopy::lin::cotwist;
use crate::homotopy::reduce::{homotopy_equivalent, reduce};
use crate::path_algebra::{parabolic_sl, FDAlgebra};

/// One verified statement with its certificate.
#[derive(Clone, Debug, Serialize)]
pub struct CheckResult {
    pub id: String,
    pub pass: bool,
    pub detail: String,
}

#[derive(Clone, Debug, Default, Serialize)]
pub struct Report {
    pub title: String,
    pub checks: Vec<CheckResult>,
    pub notes: Vec<String>,
    pub millis: u128,
}

impl Report {
    pub fn new(title: &str) -> Self {
        Report { title: title.to_string(), ..Default::default() }
    }

    pub fn push(&mut self, id: String, pass: bool, detail: String) {
        self.checks.push(CheckResult { id, pass, detail });
    }

    pub fn pass(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }

    pub fn failures(&self) -> Vec<&CheckResult> {
        self.checks.iter().filter(|c| !c.pass).collect()
    }

    pub fn render(&self) -> String {
        let width = self.checks.iter().map(|c| c.id.len()).max().unwrap_or(0);
        let mut out = format!("{}\n", self.title);
        for c in &self.checks {
            let tag = if c.pass { "PASS" } else { "FAIL" };
            out.push_str(&format!("  {tag}  {:width$}  {}\n", c.id, c.detail));
        }
        for n in &self.notes {
            out.push_str(&format!("  note: {n}\n"));
        }
        let verdict = if self.pass() { "PASS" } else { "FAIL" };
        out.push_str(&format!("{verdict}: {} checks, {} failed\n", self.checks.len(), self.failures().len()));
        out
    }
}

fn block(n: usize, lo: usize, hi: usize) -> Result<Arc<FDAlgebra>> {
    if n < lo || n > hi {
        return Err(Error::Invalid(format!("n = {n} is outside the supported range {lo}..={hi}")));
    }
    Ok(Arc::new(parabolic_sl(n)?))
}

/// Re-check an isomorphism certificate by direct multiplication.
fn certificate_holds(m1: &Bimodule, m2: &Bimodule, iso: &BimoduleIso) -> bool {
    let BimoduleIso::Iso { map, .. } = iso else { return false };
    let arrows = m1.module.alg().quiver.arrows.len();
    let actions = (0..arrows).all(|a| map.mul(m1.module.arrow_matrix(a)) == m2.module.arrow_matrix(a).mul(map));
    let units = match (&m1.unit, &m2.unit) {
        (Some(u1), Some(u2)) => map.mul_vec(u1) == *u2,
        _ => true,
    };
    actions && units && map.is_invertible()
}

/// `M_{Θ_{s_i}} ≅ M_{Ξ'_{P(σ_i)}}` intertwining the units, and
/// `LSh_{s_i} P(σ_j)⟦1⟧ ≃ T'_{P(σ_i)} P(σ_j)` for every `j`, in parabolic `sl(n)`.
pub fn verify_main_theorem(n: usize, seed: u64) -> Result<Report> {
    let start = Instant::now();
    let alg = block(n, 2, 6)?;
    let mut rep = Report::new(&format!("main theorem, parabolic-sl({n})"));
    for i in 1..n {
        let t = theta(&alg, i)?;
        let x = xi_prime(&alg, i)?;
        let mt = Bimodule::from_functor(&t.functor, Some(&t.unit))?;
        let mx = Bimodule::from_functor(&x.functor, Some(&x.map))?;
        let iso = bimodule_iso(&mt, &mx, seed);
        let ok = iso.is_iso() && certificate_holds(&mt, &mx, &iso);
        let detail = match &iso {
            BimoduleIso::Iso { .. } => format!("dim {}; explicit iso commutes with both actions and sends unit to unit", mt.dim()),
            BimoduleIso::NotIso(r) => r.clone(),
        };
        rep.push(format!("bimodule s{i}"), ok, detail);
        let e = Complex::projective(&alg, i);
        for j in 0..n {
            let p = Complex::projective(&alg, j);
            let lhs = shuffle(&t, &p).shift(1);
            let rhs = reduce(&cotwist(&e, &p)?);
            let ok = homotopy_equivalent(&lhs, &rhs, seed).is_some();
            rep.push(
                format!("object s{i} P({})", alg.vertex_label(j)),
                ok,
                format!("LSh[1] = {}, T' = {}", lhs.render_compact(), rhs.render_compact()),
            );
        }
    }
    rep.millis = start.elapsed().as_millis();
    Ok(rep)
}

fn apply_word(ts: &[TwoTermFunctor], word: &[usize], x: &Complex) -> Complex {
    word.iter().fold(x.clone(), |acc, &i| shuffle(&ts[i - 1], &acc))
}

/// Braid and commutation relations of the `LSh_{s_i}` on projectives, and `RCsh ∘ LSh ≃ id ≃ LSh ∘ RCsh`.
pub fn verify_braid(n: usize, seed: u64) -> Result<Report> {
    let start = Instant::now();
    let alg = block(n, 2, 5)?;
    let mut rep = Report::new(&format!("braid relations, parabolic-sl({n})"));
    let ts: Vec<TwoTermFunctor> = (1..n).map(|i| theta(&alg, i)).collect::<Result<_>>()?;
    let projectives: Vec<Complex> = (0..n).map(|k| Complex::projective(&alg, k)).collect();
    for i in 1..n {
        for j in i + 1..n {
            let (w1, w2, kind) = if j == i + 1 {
                (vec![i, j, i], vec![j, i, j], "braid")
            } else {
                (vec![i, j], vec![j, i], "commute")
            };
            for (k, p) in projectives.iter().enumerate() {
                let a = apply_word(&ts, &w1, p);
                let b = apply_word(&ts, &w2, p);
                let ok = homotopy_equivalent(&a, &b, seed).is_some();
                rep.push(
                    format!("{kind} s{i},s{j} P({})", alg.vertex_label(k)),
                    ok,
                    format!("{} vs {}", a.render_compact(), b.render_compact()),
                );
            }
        }
    }
    for (i, t) in ts.iter().enumerate() {
        for (k, p) in projectives.iter().enumerate() {
            let there = coshuffle(t, &shuffle(t, p))?;
            let back = shuffle(t, &coshuffle(t, p)?);
            let ok = homotopy_equivalent(&there, p, seed).is_some() && homotopy_equivalent(&back, p, seed).is_some();
            rep.push(
                format!("inverse s{} P({})", i + 1, alg.vertex_label(k)),
                ok,
                format!("RCsh LSh = {}, LSh RCsh = {}", there.render_compact(), back.render_compact()),
            );
        }
    }
    rep.millis = start.elapsed().as_millis();
    Ok(rep)
}
