//! Composition data, radical series, isomorphism tests and projective recognition.

use std::collections::BTreeMap;
use std::sync::Arc;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::maps::{cokernel, hom_space, ModuleMap};
use super::module::{projective, QModule};
use crate::error::{Error, Result};
use crate::linalg::{complement_in, q, Mat, Q};
use crate::path_algebra::{AElem, FDAlgebra};
use crate::poly::generic_det_nonzero;

/// Graded multiplicities `[M : L(v)<d>]`, keyed by `(vertex, degree)`.
pub fn composition_multiplicities(m: &QModule) -> BTreeMap<(usize, i32), usize> {
    m.graded_dims()
}

type Spans = BTreeMap<(usize, i32), Vec<Vec<Q>>>;

/// Block-wise image of a subspace under all arrows.
fn radical_of(m: &QModule, sub: &Spans) -> Spans {
    let mut out: Spans = BTreeMap::new();
    for (a, arrow) in m.alg().quiver.arrows.iter().enumerate() {
        let act = m.arrow_matrix(a);
        for (&(v, d), vecs) in sub {
            if v != arrow.target {
                continue;
            }
            let (Some(src), Some(dst)) = (m.block(v, d), m.block(arrow.source, d + 1)) else {
                continue;
            };
            for vec in vecs {
                let mut full = vec![Q::from_integer(0.into()); m.dim()];
                for (k, x) in vec.iter().enumerate() {
                    full[src.offset + k] = x.clone();
                }
                let img = act.mul_vec(&full);
                let part = img[dst.range()].to_vec();
                if part.iter().any(|x| *x != q(0)) {
                    out.entry((arrow.source, d + 1)).or_default().push(part);
                }
            }
        }
    }
    for (key, vecs) in out.iter_mut() {
        let dim = m.block_dim(key.0, key.1);
        *vecs = Mat::from_cols(dim, vecs).column_space();
    }
    out
}

fn full_spans(m: &QModule) -> Spans {
    m.blocks()
        .iter()
        .map(|b| {
            let std = (0..b.dim).map(|i| (0..b.dim).map(|j| q(i64::from(i == j))).collect()).collect();
            ((b.vertex, b.degree), std)
        })
        .collect()
}

fn span_dims(s: &Spans) -> BTreeMap<(usize, i32), usize> {
    s.iter().filter(|(_, v)| !v.is_empty()).map(|(k, v)| (*k, v.len())).collect()
}

/// Layers `rad^k M / rad^{k+1} M`, as multiplicities of simples.
pub fn radical_series(m: &QModule) -> Vec<BTreeMap<(usize, i32), usize>> {
    let mut cur = full_spans(m);
    let mut layers = Vec::new();
    loop {
        let next = radical_of(m, &cur);
        let a = span_dims(&cur);
        let b = span_dims(&next);
        let mut layer = BTreeMap::new();
        for (k, d) in &a {
            let e = d - b.get(k).copied().unwrap_or(0);
            if e > 0 {
                layer.insert(*k, e);
            }
        }
        if layer.is_empty() {
            break;
        }
        layers.push(layer);
        cur = next;
    }
    layers
}

/// Head `M / rad M` as multiplicities of simples.
pub fn head(m: &QModule) -> BTreeMap<(usize, i32), usize> {
    radical_series(m).into_iter().next().unwrap_or_default()
}

/// Outcome of an isomorphism test.
#[derive(Clone, Debug)]
pub enum IsoResult {
    Iso(ModuleMap),
    NotIso(String),
}

impl IsoResult {
    pub fn is_iso(&self) -> bool {
        matches!(self, IsoResult::Iso(_))
    }
}

pub const GENERIC_DRAWS: usize = 5;

/// Random integer combination of a family of matrices.
pub fn generic_combination(basis: &[Mat], rng: &mut ChaCha8Rng) -> (Vec<Q>, Mat) {
    let r = basis[0].rows();
    let c = basis[0].cols();
    let coeffs: Vec<Q> = basis.iter().map(|_| q(rng.gen_range(-9..=9))).collect();
    let mut m = Mat::zeros(r, c);
    for (b, x) in basis.iter().zip(&coeffs) {
        if *x != q(0) {
            m = m.add(&b.scale(x));
        }
    }
    (coeffs, m)
}

/// Search for a degree-0 isomorphism `M -> N`.
///
/// Tries a few seeded generic combinations of a hom basis; if none is
/// invertible, decides existence with the symbolic determinant of each
/// vertex-degree block.
pub fn is_isomorphic(m: &QModule, n: &QModule, seed: u64) -> IsoResult {
    if m.graded_dims() != n.graded_dims() {
        return IsoResult::NotIso(format!(
            "graded dimension vectors differ ({} vs {})",
            m.dim(),
            n.dim()
        ));
    }
    if radical_series(m) != radical_series(n) {
        return IsoResult::NotIso("radical series differ".into());
    }
    if m.dim() == 0 {
        return IsoResult::Iso(ModuleMap::zero(m, n, 0));
    }
    let homs = hom_space(m, n, 0);
    if homs.is_empty() {
        return IsoResult::NotIso("no degree-0 maps".into());
    }
    let mats: Vec<Mat> = homs.iter().map(|f| f.mat.clone()).collect();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..GENERIC_DRAWS {
        let (_, f) = generic_combination(&mats, &mut rng);
        if f.is_invertible() {
            return IsoResult::Iso(ModuleMap { dom: m.clone(), cod: n.clone(), shift: 0, mat: f });
        }
    }
    for b in m.blocks() {
        let blocks: Vec<Mat> = homs.iter().map(|h| h.block_matrix(b.vertex, b.degree)).collect();
        if !generic_det_nonzero(&blocks) {
            return IsoResult::NotIso(format!(
                "determinant of the generic map vanishes identically on block ({}, {})",
                m.alg().vertex_label(b.vertex),
                b.degree
            ));
        }
    }
    // the product of the block determinants is a nonzero polynomial, so a
    // wider search finds a point where it does not vanish
    for _ in 0..256 {
        let (_, f) = generic_combination(&mats, &mut rng);
        if f.is_invertible() {
            return IsoResult::Iso(ModuleMap { dom: m.clone(), cod: n.clone(), shift: 0, mat: f });
        }
    }
    IsoResult::NotIso("generic search exhausted although an isomorphism exists".into())
}

/// Map `P(v)<d> -> M` sending the generator `1_v` to the vector `x` of `M_{v,d}`.
pub fn map_from_projective(m: &QModule, v: usize, d: i32, x: &[Q]) -> ModuleMap {
    let alg = m.alg();
    let p = projective(alg, v).shift(d);
    let idx = super::module::projective_basis(alg, v);
    let mut mat = Mat::zeros(m.dim(), p.dim());
    for (k, &i) in idx.iter().enumerate() {
        let img = m.act_path(alg.basis_path(i)).mul_vec(x);
        for (r, y) in img.into_iter().enumerate() {
            mat.set(r, k, y);
        }
    }
    ModuleMap { dom: p, cod: m.clone(), shift: 0, mat }
}

/// Projective cover: summands `(vertex, shift)` and the cover map.
pub fn projective_cover(m: &QModule) -> (Vec<(usize, i32)>, ModuleMap) {
    let alg = m.alg().clone();
    let rad = radical_of(m, &full_spans(m));
    let mut summands = Vec::new();
    let mut gens: Vec<Vec<Q>> = Vec::new();
    for b in m.blocks() {
        let sub = rad.get(&(b.vertex, b.degree)).cloned().unwrap_or_default();
        let std: Vec<Vec<Q>> = (0..b.dim).map(|i| (0..b.dim).map(|j| q(i64::from(i == j))).collect()).collect();
        for c in complement_in(b.dim, &sub, &std) {
            let mut full = vec![q(0); m.dim()];
            for (k, x) in c.into_iter().enumerate() {
                full[b.offset + k] = x;
            }
            summands.push((b.vertex, b.degree));
            gens.push(full);
        }
    }
    let parts: Vec<QModule> = summands.iter().map(|&(v, d)| projective(&alg, v).shift(d)).collect();
    let (sum, incl) = QModule::direct_sum(&alg, &parts);
    let mut mat = Mat::zeros(m.dim(), sum.dim());
    for ((&(v, d), g), inc) in summands.iter().zip(&gens).zip(&incl) {
        let f = map_from_projective(m, v, d, g);
        mat = mat.add(&f.mat.mul(&inc.transpose()));
    }
    (summands, ModuleMap { dom: sum, cod: m.clone(), shift: 0, mat })
}

/// Recognise `M` as a direct sum of shifted indecomposable projectives.
pub fn decompose_projective(m: &QModule) -> Result<Vec<(usize, i32)>> {
    let (summands, cover) = projective_cover(m);
    let excess = cover.dom.dim() as i64 - m.dim() as i64;
    if excess != 0 || !cover.mat.is_invertible() {
        let residue = if excess >= 0 { excess as usize } else { m.dim() };
        return Err(Error::Rejected(format!(
            "module is not projective: its projective cover has a kernel of dimension {residue}"
        )));
    }
    let mut s = summands;
    s.sort();
    Ok(s)
}

/// `M^p(σ_i) = coker(P(σ_{i-1})<1> -> P(σ_i))`, and `M^p(σ_0) = P(σ_0)`.
///
/// The map is left multiplication by the arrow `σ_{i-1} -> σ_i`.
pub fn parabolic_verma(alg: &Arc<FDAlgebra>, i: usize) -> Result<QModule> {
    let n = alg.num_vertices();
    if i >= n {
        return Err(Error::Invalid(format!("Verma index {i} out of range 0..{n}")));
    }
    if i == 0 {
        return Ok(projective(alg, 0));
    }
    let a = alg
        .quiver
        .arrow_between(i - 1, i)
        .ok_or_else(|| Error::Invalid(format!("no unique arrow from vertex {} to {i}", i - 1)))?;
    let f = left_mult_map(alg, &alg.arrow_elem(a), i - 1, i)?;
    Ok(cokernel(&f)?.0)
}

/// Left multiplication `P(v) -> P(w)` by a homogeneous `x ∈ 1_w A 1_v`, of internal degree `deg x`.
pub fn left_mult_map(alg: &Arc<FDAlgebra>, x: &AElem, v: usize, w: usize) -> Result<ModuleMap> {
    let deg = if x.is_zero() { 0 } else {
        alg.elem_degree(x).ok_or_else(|| Error::Invalid("element is not homogeneous".into()))? as i32
    };
    let dom = projective(alg, v);
    let cod = projective(alg, w);
    let mat = QModule::left_mult_matrix(alg, x, v, w);
    Ok(ModuleMap { dom, cod, shift: deg, mat })
}
