//! Gaussian elimination of contractible summands and homotopy equivalence.

use std::collections::BTreeMap;

use num::Zero;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::complex::{is_scalar_iso_entry, ChainMap, Complex, PMat, Summand};
use super::homcx::hom_complex;
use crate::error::{Error, Result};
use crate::linalg::Mat;
use crate::path_algebra::{AElem, FDAlgebra};
use crate::poly::generic_det_nonzero;
use crate::qmod::series::{generic_combination, GENERIC_DRAWS};

/// Scalar part of a degree-0 map between projective sums: the coefficients
/// of idempotents between equal summands.
pub fn scalar_part(alg: &FDAlgebra, d: &PMat, cod: &[Summand], dom: &[Summand]) -> Mat {
    let mut m = Mat::zeros(cod.len(), dom.len());
    for (r, w) in cod.iter().enumerate() {
        for (c, v) in dom.iter().enumerate() {
            if w == v {
                let x = d.get(r, c);
                let e = alg.idempotent(v.vertex);
                m.set(r, c, x.coeff(e));
            }
        }
    }
    m
}

fn scalar_pmat(alg: &FDAlgebra, m: &Mat, cod: &[Summand]) -> PMat {
    let mut p = PMat::zeros(m.rows(), m.cols());
    for r in 0..m.rows() {
        for c in 0..m.cols() {
            let x = m.get(r, c);
            if !x.is_zero() {
                p.set(r, c, AElem::term(alg.idempotent(cod[r].vertex), x.clone()));
            }
        }
    }
    p
}

/// Inverse of a degree-0 map between projective sums, if it is invertible.
pub fn pmat_inverse(alg: &FDAlgebra, d: &PMat, cod: &[Summand], dom: &[Summand]) -> Option<PMat> {
    if cod.len() != dom.len() {
        return None;
    }
    let d0 = scalar_part(alg, d, cod, dom);
    let d0inv_m = d0.inverse()?;
    let d0inv = scalar_pmat(alg, &d0inv_m, dom);
    let d0p = scalar_pmat(alg, &d0, cod);
    let nil = d.sub(&d0p);
    // d^-1 = d0^-1 sum_k (-N d0^-1)^k, where N d0^-1 is nilpotent
    let step = nil.mul(alg, &d0inv).neg();
    let mut acc = PMat::identity(alg, cod);
    let mut pow = PMat::identity(alg, cod);
    for _ in 0..=cod.len() + 8 {
        pow = pow.mul(alg, &step);
        if pow.is_zero() {
            return Some(d0inv.mul(alg, &acc));
        }
        acc = acc.add(&pow);
    }
    None
}

/// Result of one elimination: the smaller complex and the mutually inverse
/// homotopy equivalences.
#[derive(Clone, Debug)]
pub struct Elimination {
    pub complex: Complex,
    pub proj: ChainMap,
    pub incl: ChainMap,
}

/// Remove the summands `W ⊆ X_j` and `U ⊆ X_{j-1}` joined by an invertible
/// block of `d_j`, replacing the remaining component by `e - c d^-1 b`.
pub fn eliminate(x: &Complex, j: i32, w_cols: &[usize], u_rows: &[usize]) -> Result<Elimination> {
    let alg = x.alg().clone();
    let xj = x.term(j).to_vec();
    let xj1 = x.term(j - 1).to_vec();
    let dj = x.diff(j);
    let c_cols: Vec<usize> = (0..xj.len()).filter(|i| !w_cols.contains(i)).collect();
    let d_rows: Vec<usize> = (0..xj1.len()).filter(|i| !u_rows.contains(i)).collect();
    let u_sum: Vec<Summand> = u_rows.iter().map(|&i| xj1[i]).collect();
    let w_sum: Vec<Summand> = w_cols.iter().map(|&i| xj[i]).collect();
    let d = dj.submatrix(u_rows, w_cols);
    let dinv = pmat_inverse(&alg, &d, &u_sum, &w_sum)
        .ok_or_else(|| Error::Invalid(format!("selected block of d_{j} is not invertible")))?;
    let b = dj.submatrix(u_rows, &c_cols);
    let c = dj.submatrix(&d_rows, w_cols);
    let e = dj.submatrix(&d_rows, &c_cols);
    let cdinv = c.mul(&alg, &dinv);
    let new_dj = e.sub(&cdinv.mul(&alg, &b));
    let mut terms = x.terms().clone();
    let mut diffs: BTreeMap<i32, PMat> = BTreeMap::new();
    terms.insert(j, c_cols.iter().map(|&i| xj[i]).collect());
    terms.insert(j - 1, d_rows.iter().map(|&i| xj1[i]).collect());
    for &k in x.terms().keys() {
        let dk = x.diff(k);
        let nd = if k == j {
            new_dj.clone()
        } else if k == j + 1 {
            let all: Vec<usize> = (0..dk.cols()).collect();
            dk.submatrix(&c_cols, &all)
        } else if k == j - 1 {
            let all: Vec<usize> = (0..dk.rows()).collect();
            dk.submatrix(&all, &d_rows)
        } else {
            dk
        };
        diffs.insert(k, nd);
    }
    if !x.terms().contains_key(&(j + 1)) {
        diffs.remove(&(j + 1));
    }
    let y = Complex::from_parts(&alg, terms, diffs);
    // projection X -> Y and inclusion Y -> X
    let mut pc = BTreeMap::new();
    let mut ic = BTreeMap::new();
    for (&k, t) in x.terms() {
        let yt = y.term(k);
        let (p, i) = if k == j {
            let all: Vec<usize> = (0..t.len()).collect();
            let id = PMat::identity(&alg, t);
            let p = id.submatrix(&c_cols, &all);
            // C -> W ⊕ C: (-d^-1 b; 1)
            let mut i = PMat::zeros(t.len(), c_cols.len());
            let mdb = dinv.mul(&alg, &b).neg();
            for (a, &wc) in w_cols.iter().enumerate() {
                for cc in 0..c_cols.len() {
                    i.set(wc, cc, mdb.get(a, cc).clone());
                }
            }
            for (cc, &col) in c_cols.iter().enumerate() {
                i.set(col, cc, AElem::basis(alg.idempotent(t[col].vertex)));
            }
            (p, i)
        } else if k == j - 1 {
            // U ⊕ D -> D: (-c d^-1, 1)
            let mut p = PMat::zeros(d_rows.len(), t.len());
            for (dr, &row) in d_rows.iter().enumerate() {
                p.set(dr, row, AElem::basis(alg.idempotent(t[row].vertex)));
                for (a, &ur) in u_rows.iter().enumerate() {
                    p.set(dr, ur, cdinv.get(dr, a).neg());
                }
            }
            let all: Vec<usize> = (0..t.len()).collect();
            let i = PMat::identity(&alg, t).submatrix(&all, &d_rows);
            (p, i)
        } else {
            (PMat::identity(&alg, t), PMat::identity(&alg, t))
        };
        if !yt.is_empty() {
            pc.insert(k, p);
            ic.insert(k, i);
        }
    }
    let proj = ChainMap { dom: x.clone(), cod: y.clone(), hdeg: 0, internal: 0, comps: pc };
    let incl = ChainMap { dom: y.clone(), cod: x.clone(), hdeg: 0, internal: 0, comps: ic };
    Ok(Elimination { complex: y, proj, incl })
}

/// The lowest position `(j, column, row)` of an invertible scalar entry.
pub fn find_trivial_pair(x: &Complex) -> Option<(i32, usize, usize)> {
    let alg = x.alg();
    for &j in x.terms().keys() {
        let Some(d) = x.diff_ref(j) else { continue };
        let (src, dst) = (x.term(j), x.term(j - 1));
        for c in 0..d.cols() {
            for r in 0..d.rows() {
                if is_scalar_iso_entry(alg, d.get(r, c), &src[c], &dst[r]).is_some() {
                    return Some((j, c, r));
                }
            }
        }
    }
    None
}

/// Eliminate invertible scalar entries until the complex is minimal.
pub fn reduce(x: &Complex) -> Complex {
    let mut cur = x.clone();
    while let Some((j, c, r)) = find_trivial_pair(&cur) {
        cur = eliminate(&cur, j, &[c], &[r]).expect("scalar entry is invertible").complex;
    }
    cur
}

/// `reduce` together with the homotopy equivalences to and from the result.
pub fn reduce_with_maps(x: &Complex) -> Elimination {
    let mut cur = Elimination { complex: x.clone(), proj: ChainMap::identity(x), incl: ChainMap::identity(x) };
    while let Some((j, c, r)) = find_trivial_pair(&cur.complex) {
        let step = eliminate(&cur.complex, j, &[c], &[r]).expect("scalar entry is invertible");
        cur = Elimination {
            complex: step.complex,
            proj: step.proj.compose(&cur.proj),
            incl: cur.incl.compose(&step.incl),
        };
    }
    cur
}

/// Whether a degree-(0, 0) map between minimal complexes is a degreewise isomorphism.
pub fn is_degreewise_iso(f: &ChainMap) -> bool {
    let alg = f.dom.alg();
    let degs: Vec<i32> = f.dom.terms().keys().chain(f.cod.terms().keys()).copied().collect();
    degs.iter().all(|&k| {
        let (s, t) = (f.dom.term(k), f.cod.term(k));
        s.len() == t.len() && scalar_part(alg, &f.comp(k), t, s).is_invertible()
    })
}

/// Search for a chain isomorphism between the reduced forms of `X` and `Y`.
///
/// Returns the reduced forms' isomorphism on success; `None` proves that no
/// homotopy equivalence exists.
pub fn homotopy_equivalent(x: &Complex, y: &Complex, seed: u64) -> Option<ChainMap> {
    let rx = reduce(x);
    let ry = reduce(y);
    if rx.summand_multiset() != ry.summand_multiset() {
        return None;
    }
    if rx.is_zero() {
        return Some(ChainMap::zero(&rx, &ry, 0, 0));
    }
    let hc = hom_complex(&rx, &ry);
    let z = hc.vs.cocycles(0, 0);
    if z.is_empty() {
        return None;
    }
    let maps: Vec<ChainMap> = z.iter().map(|v| hc.map_of(0, v)).collect();
    let n = hc.vs.dim(0);
    let zmats: Vec<Mat> = z.iter().map(|v| Mat::from_cols(n, std::slice::from_ref(v))).collect();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let try_draw = |rng: &mut ChaCha8Rng| -> Option<ChainMap> {
        let (_, col) = generic_combination(&zmats, rng);
        let f = hc.map_of(0, &col.col(0));
        let mut f = f;
        f.internal = 0;
        if is_degreewise_iso(&f) {
            Some(f)
        } else {
            None
        }
    };
    for _ in 0..GENERIC_DRAWS {
        if let Some(f) = try_draw(&mut rng) {
            return Some(f);
        }
    }
    // symbolic fallback, one block per (degree, summand type)
    let alg = rx.alg();
    for (&k, t) in rx.terms() {
        let mut kinds: Vec<Summand> = t.clone();
        kinds.sort();
        kinds.dedup();
        for kind in kinds {
            let src: Vec<usize> = (0..t.len()).filter(|&i| t[i] == kind).collect();
            let dst: Vec<usize> = (0..ry.term(k).len()).filter(|&i| ry.term(k)[i] == kind).collect();
            let blocks: Vec<Mat> = maps
                .iter()
                .map(|f| scalar_part(alg, &f.comp(k), ry.term(k), t).submatrix(&dst, &src))
                .collect();
            if !generic_det_nonzero(&blocks) {
                return None;
            }
        }
    }
    for _ in 0..256 {
        if let Some(f) = try_draw(&mut rng) {
            return Some(f);
        }
    }
    None
}

/// Coefficient-level equality of two complexes.
pub fn same_complex(x: &Complex, y: &Complex) -> bool {
    x.terms() == y.terms() && x.terms().keys().all(|&j| x.diff(j) == y.diff(j))
}

