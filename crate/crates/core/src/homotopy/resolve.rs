//! Realizing complexes of projectives as modules: homology and resolutions.

use std::collections::BTreeMap;
use std::sync::Arc;

use super::complex::{Complex, PMat, Summand};
use super::homcx::{derived_end_ring, hom_complex, EndRing};
use crate::error::{Error, Result};
use crate::linalg::{coords_in, Mat, Q};
use crate::path_algebra::{AElem, FDAlgebra};
use crate::qmod::maps::{kernel, ModuleMap};
use crate::qmod::module::{projective, projective_basis, QModule};
use crate::qmod::series::projective_cover;

pub const DEFAULT_MAX_LEN: usize = 32;

/// `⊕ P(v)<a>` as a module, with the inclusion of each summand.
pub fn realize_term(alg: &Arc<FDAlgebra>, summands: &[Summand]) -> (QModule, Vec<Mat>) {
    let parts: Vec<QModule> = summands.iter().map(|s| projective(alg, s.vertex).shift(s.shift)).collect();
    QModule::direct_sum(alg, &parts)
}

/// The module map realizing a matrix of left multiplications.
pub fn realize_map(
    alg: &Arc<FDAlgebra>,
    m: &PMat,
    dom: &(QModule, Vec<Mat>),
    dom_s: &[Summand],
    cod: &(QModule, Vec<Mat>),
    cod_s: &[Summand],
    shift: i32,
) -> ModuleMap {
    let mut mat = Mat::zeros(cod.0.dim(), dom.0.dim());
    for (r, w) in cod_s.iter().enumerate() {
        for (c, v) in dom_s.iter().enumerate() {
            let x = m.get(r, c);
            if x.is_zero() {
                continue;
            }
            let l = QModule::left_mult_matrix(alg, x, v.vertex, w.vertex);
            mat = mat.add(&cod.1[r].mul(&l).mul(&dom.1[c].transpose()));
        }
    }
    ModuleMap { dom: dom.0.clone(), cod: cod.0.clone(), shift, mat }
}

/// Every term of `X` realized as a module, with every differential.
pub struct Realized {
    pub terms: BTreeMap<i32, (QModule, Vec<Mat>)>,
    pub diffs: BTreeMap<i32, ModuleMap>,
}

pub fn realize(x: &Complex) -> Realized {
    let alg = x.alg();
    let lo = x.min_degree().unwrap_or(0) - 1;
    let hi = x.max_degree().unwrap_or(0) + 1;
    let terms: BTreeMap<i32, (QModule, Vec<Mat>)> = (lo..=hi).map(|j| (j, realize_term(alg, x.term(j)))).collect();
    let mut diffs = BTreeMap::new();
    for j in lo + 1..=hi {
        let d = realize_map(alg, &x.diff(j), &terms[&j], x.term(j), &terms[&(j - 1)], x.term(j - 1), 0);
        diffs.insert(j, d);
    }
    Realized { terms, diffs }
}

/// Homology modules `H_j = ker d_j / im d_{j+1}`, nonzero degrees only.
pub fn homology(x: &Complex) -> Result<BTreeMap<i32, QModule>> {
    let re = realize(x);
    let mut out = BTreeMap::new();
    for &j in x.terms().keys() {
        let (k, incl) = kernel(&re.diffs[&j])?;
        let din = &re.diffs[&(j + 1)];
        // image of d_{j+1} in kernel coordinates, block by block
        let mut spans: BTreeMap<(usize, i32), Vec<Vec<Q>>> = BTreeMap::new();
        for kb in k.blocks() {
            let tb = *re.terms[&j].0.block(kb.vertex, kb.degree).expect("kernel block lies in the term");
            let basis: Vec<Vec<Q>> = kb.range().map(|c| incl.mat.col(c)[tb.range()].to_vec()).collect();
            let img = din.block_matrix(kb.vertex, kb.degree);
            let mut vs = Vec::new();
            for v in img.column_space() {
                let c = coords_in(tb.dim, &basis, &v)
                    .ok_or_else(|| Error::Invalid(format!("d_{} does not square to zero", j + 1)))?;
                vs.push(c);
            }
            if !vs.is_empty() {
                spans.insert((kb.vertex, kb.degree), vs);
            }
        }
        let (h, _) = k.quotient(&spans)?;
        if !h.is_zero() {
            out.insert(j, h);
        }
    }
    Ok(out)
}

/// Graded homology dimensions `j -> (vertex, degree) -> dim`, via block ranks.
pub fn homology_dims(x: &Complex) -> BTreeMap<i32, BTreeMap<(usize, i32), usize>> {
    let re = realize(x);
    let mut out = BTreeMap::new();
    for &j in x.terms().keys() {
        let mut dims = BTreeMap::new();
        for b in re.terms[&j].0.blocks() {
            let out_rank = re.diffs[&j].block_matrix(b.vertex, b.degree).rank();
            let in_rank = re.diffs[&(j + 1)].block_matrix(b.vertex, b.degree).rank();
            let h = b.dim - out_rank - in_rank;
            if h > 0 {
                dims.insert((b.vertex, b.degree), h);
            }
        }
        if !dims.is_empty() {
            out.insert(j, dims);
        }
    }
    out
}

/// A minimal projective resolution with its augmentation `P_0 -> M`.
#[derive(Clone, Debug)]
pub struct Resolution {
    pub complex: Complex,
    pub augmentation: ModuleMap,
}

fn generator_columns(alg: &FDAlgebra, cover: &ModuleMap, summands: &[(usize, i32)], incl: &[Mat]) -> Vec<Vec<Q>> {
    summands
        .iter()
        .zip(incl)
        .map(|(&(v, _), inc)| {
            let pos = projective_basis(alg, v).iter().position(|&i| i == alg.idempotent(v)).expect("idempotent");
            cover.mat.mul(inc).col(pos)
        })
        .collect()
}

/// PMat column for a vector of the realized sum `⊕ P(w)<b>`.
fn vector_to_column(alg: &FDAlgebra, v: &[Q], cod_s: &[Summand], incl: &[Mat]) -> Vec<AElem> {
    cod_s
        .iter()
        .zip(incl)
        .map(|(s, inc)| {
            let part = inc.transpose().mul_vec(v);
            let mut x = AElem::zero();
            for (k, &i) in projective_basis(alg, s.vertex).iter().enumerate() {
                x.add_term(i, &part[k]);
            }
            x
        })
        .collect()
}

/// Minimal projective resolution by iterated projective covers of kernels.
pub fn min_projective_resolution(m: &QModule, max_len: usize) -> Result<Resolution> {
    let alg = m.alg().clone();
    let mut terms: BTreeMap<i32, Vec<Summand>> = BTreeMap::new();
    let mut diffs: BTreeMap<i32, PMat> = BTreeMap::new();
    let (s0, aug) = projective_cover(m);
    if s0.is_empty() {
        return Ok(Resolution { complex: Complex::zero(&alg), augmentation: aug });
    }
    // prev: realized P_{k-1}; cur: cover map P_{k-1} -> N_{k-1}
    let mut prev_s: Vec<Summand> = s0.iter().map(|&(v, d)| Summand::new(v, d)).collect();
    terms.insert(0, prev_s.clone());
    let mut prev_real = realize_term(&alg, &prev_s);
    let mut prev_cover = aug.clone();
    let mut k = 1;
    loop {
        let (ker, incl) = kernel(&prev_cover)?;
        if ker.is_zero() {
            break;
        }
        if k > max_len {
            return Err(Error::Guard(format!(
                "resolution longer than {max_len}; infinite global dimension suspected"
            )));
        }
        let (sk, cover) = projective_cover(&ker);
        let cur_s: Vec<Summand> = sk.iter().map(|&(v, d)| Summand::new(v, d)).collect();
        let cur_real = realize_term(&alg, &cur_s);
        let into_prev = ModuleMap { dom: cover.dom.clone(), cod: prev_cover.dom.clone(), shift: 0, mat: incl.mat.mul(&cover.mat) };
        let gens = generator_columns(&alg, &into_prev, &sk, &cur_real.1);
        let mut d = PMat::zeros(prev_s.len(), cur_s.len());
        for (c, g) in gens.iter().enumerate() {
            for (r, x) in vector_to_column(&alg, g, &prev_s, &prev_real.1).into_iter().enumerate() {
                d.set(r, c, x);
            }
        }
        terms.insert(k as i32, cur_s.clone());
        diffs.insert(k as i32, d);
        // the cover's domain has the same layout as the realized term
        prev_cover = ModuleMap { dom: cur_real.0.clone(), cod: ker, shift: 0, mat: cover.mat };
        prev_s = cur_s;
        prev_real = cur_real;
        k += 1;
    }
    Ok(Resolution { complex: Complex::from_parts(&alg, terms, diffs), augmentation: aug })
}

pub fn resolve(m: &QModule) -> Result<Complex> {
    Ok(min_projective_resolution(m, DEFAULT_MAX_LEN)?.complex)
}

/// Derived Hom dimensions keyed by `(j, internal degree)`.
pub fn derived_hom_graded(m: &QModule, n: &QModule) -> Result<BTreeMap<(i32, i32), usize>> {
    Ok(hom_complex(&resolve(m)?, &resolve(n)?).vs.cohomology_dims())
}

/// Derived Hom dimensions by `j`, summed over internal degrees.
pub fn derived_hom_dims(m: &QModule, n: &QModule) -> Result<BTreeMap<i32, usize>> {
    Ok(hom_complex(&resolve(m)?, &resolve(n)?).vs.total_dims())
}

pub fn derived_end_ring_of(m: &QModule) -> Result<EndRing> {
    Ok(derived_end_ring(&resolve(m)?))
}
