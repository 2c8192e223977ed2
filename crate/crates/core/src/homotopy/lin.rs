//! Tensor and lin complexes over a graded vector space, evaluation and twists.

use std::collections::{BTreeMap, HashMap};

use num::{One, Zero};

use super::complex::{cocone, cone, ChainMap, Complex, PMat, Summand};
use super::homcx::{hom_complex, VSComplex};
use crate::error::Result;
use crate::linalg::Q;
use crate::path_algebra::AElem;

/// Internal grading offset `c` in `Ξ_E F = ⊕ E⟦p⟧<s - c>` and `Ξ'_E F = ∏ E⟦-p⟧<c - s>`.
pub const TWIST_GRADE: i32 = 1;

fn sign(p: i32) -> Q {
    if p.rem_euclid(2) == 1 {
        -Q::one()
    } else {
        Q::one()
    }
}

/// Position of each labelled copy `(p, i, r)` in the terms of a copy complex.
struct Layout {
    terms: BTreeMap<i32, Vec<Summand>>,
    // (p, i, m, r) -> (degree, index)
    pos: HashMap<(i32, usize, i32, usize), (i32, usize)>,
}

/// Copies `X_m` for every basis vector `(p, i)` of `v`, placed at degree `m + dir * p`
/// with internal shift `gsign * (s - c)`.
fn layout(v: &VSComplex, x: &Complex, dir: i32, gsign: i32, c: i32) -> Layout {
    let mut terms: BTreeMap<i32, Vec<Summand>> = BTreeMap::new();
    let mut pos = HashMap::new();
    for (&p, tags) in &v.tags {
        for (i, &s) in tags.iter().enumerate() {
            for (&m, xt) in x.terms() {
                let j = m + dir * p;
                for (r, sm) in xt.iter().enumerate() {
                    let t = terms.entry(j).or_default();
                    pos.insert((p, i, m, r), (j, t.len()));
                    t.push(Summand::new(sm.vertex, sm.shift + gsign * (s - c)));
                }
            }
        }
    }
    Layout { terms, pos }
}

fn key(p: i32, i: usize, m: i32, r: usize) -> (i32, usize, i32, usize) {
    (p, i, m, r)
}

/// `V ⊗ X = ⊕_a X⟦p_a⟧<s_a - c>` with
/// `d(x_a) = (-1)^{p_a} (d_X x)_a + sum_{a'} D[a'][a] x_{a'}`.
pub fn vs_tensor(v: &VSComplex, x: &Complex, c: i32) -> Complex {
    let alg = x.alg().clone();
    let lay = layout(v, x, -1, 1, c);
    let mut diffs: BTreeMap<i32, PMat> = BTreeMap::new();
    for &j in lay.terms.keys() {
        let cod = lay.terms.get(&(j - 1)).map_or(0, |t| t.len());
        if cod == 0 {
            continue;
        }
        diffs.insert(j, PMat::zeros(cod, lay.terms[&j].len()));
    }
    for (&p, tags) in &v.tags {
        let dp = v.diff(p);
        for i in 0..tags.len() {
            for (&m, xt) in x.terms() {
                let dx = x.diff(m);
                for r in 0..xt.len() {
                    let (j, col) = lay.pos[&key(p, i, m, r)];
                    let Some(d) = diffs.get_mut(&j) else { continue };
                    for r2 in 0..x.term(m - 1).len() {
                        let e = dx.get(r2, r);
                        if !e.is_zero() {
                            let (_, row) = lay.pos[&key(p, i, m - 1, r2)];
                            d.add_at(row, col, &e.scale(&sign(p)));
                        }
                    }
                    for i2 in 0..v.dim(p + 1) {
                        let coef = dp.get(i2, i);
                        if !coef.is_zero() {
                            let (_, row) = lay.pos[&key(p + 1, i2, m, r)];
                            d.add_at(row, col, &AElem::term(alg.idempotent(xt[r].vertex), coef.clone()));
                        }
                    }
                }
            }
        }
    }
    Complex::from_parts(&alg, lay.terms, diffs)
}

/// `lin•(V, X) = ∏_b X⟦-p_b⟧<c - s_b>` with
/// `d(x_b) = (-1)^{p_b} (d_X x)_b + (-1)^{p_b} sum_{b'} D[b][b'] x_{b'}`.
pub fn vs_lin(v: &VSComplex, x: &Complex, c: i32) -> Complex {
    let alg = x.alg().clone();
    let lay = layout(v, x, 1, -1, c);
    let mut diffs: BTreeMap<i32, PMat> = BTreeMap::new();
    for &j in lay.terms.keys() {
        let cod = lay.terms.get(&(j - 1)).map_or(0, |t| t.len());
        if cod == 0 {
            continue;
        }
        diffs.insert(j, PMat::zeros(cod, lay.terms[&j].len()));
    }
    for (&p, tags) in &v.tags {
        let dprev = v.diff(p - 1);
        for i in 0..tags.len() {
            for (&m, xt) in x.terms() {
                let dx = x.diff(m);
                for r in 0..xt.len() {
                    let (j, col) = lay.pos[&key(p, i, m, r)];
                    let Some(d) = diffs.get_mut(&j) else { continue };
                    for r2 in 0..x.term(m - 1).len() {
                        let e = dx.get(r2, r);
                        if !e.is_zero() {
                            let (_, row) = lay.pos[&key(p, i, m - 1, r2)];
                            d.add_at(row, col, &e.scale(&sign(p)));
                        }
                    }
                    for i2 in 0..v.dim(p - 1) {
                        let coef = dprev.get(i, i2);
                        if !coef.is_zero() {
                            let (_, row) = lay.pos[&key(p - 1, i2, m, r)];
                            d.add_at(row, col, &AElem::term(alg.idempotent(xt[r].vertex), coef * sign(p)));
                        }
                    }
                }
            }
        }
    }
    Complex::from_parts(&alg, lay.terms, diffs)
}

/// `ev: Ξ_E F -> F<-c>`, `(e_a)_a ↦ sum_a a(e_a)`.
pub fn evaluation(e: &Complex, f: &Complex, c: i32) -> ChainMap {
    let hc = hom_complex(e, f);
    let xi = vs_tensor(&hc.vs, e, c);
    let lay = layout(&hc.vs, e, -1, 1, c);
    let target = f.grade_shift(-c);
    let mut comps: BTreeMap<i32, PMat> = BTreeMap::new();
    for (&p, bs) in &hc.basis {
        for (i, b) in bs.iter().enumerate() {
            // copy a = (p, i) of E_{b.k}, summand b.c, maps to F_{b.k - p}, summand b.r
            let (j, col) = lay.pos[&key(p, i, b.k, b.c)];
            let m = comps
                .entry(j)
                .or_insert_with(|| PMat::zeros(target.term(j).len(), xi.term(j).len()));
            m.add_at(b.r, col, &AElem::basis(b.idx));
        }
    }
    ChainMap { dom: xi, cod: target, hdeg: 0, internal: 0, comps }
}

/// `ev': F<c> -> Ξ'_E F`, `v ↦ (b(v))_b`.
pub fn coevaluation(e: &Complex, f: &Complex, c: i32) -> ChainMap {
    let hc = hom_complex(f, e);
    let xi = vs_lin(&hc.vs, e, c);
    let lay = layout(&hc.vs, e, 1, -1, c);
    let source = f.grade_shift(c);
    let mut comps: BTreeMap<i32, PMat> = BTreeMap::new();
    for (&p, bs) in &hc.basis {
        for (i, b) in bs.iter().enumerate() {
            // b maps F_{b.k} summand b.c to E_{b.k - p} summand b.r, which sits in
            // copy (p, i) at degree b.k
            let (j, row) = lay.pos[&key(p, i, b.k - p, b.r)];
            debug_assert_eq!(j, b.k);
            let m = comps
                .entry(b.k)
                .or_insert_with(|| PMat::zeros(xi.term(b.k).len(), source.term(b.k).len()));
            m.add_at(row, b.c, &AElem::basis(b.idx));
        }
    }
    ChainMap { dom: source, cod: xi, hdeg: 0, internal: 0, comps }
}

/// `T_E F = cone(ev)`.
pub fn twist(e: &Complex, f: &Complex) -> Result<Complex> {
    cone(&evaluation(e, f, TWIST_GRADE))
}

/// `T'_E F = cocone(ev')`.
pub fn cotwist(e: &Complex, f: &Complex) -> Result<Complex> {
    cocone(&coevaluation(e, f, TWIST_GRADE))
}
