//! `M_F = ⊕_v F(P(v))` as a graded `A`-`A`-bimodule, and isomorphisms of bimodules.

use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use num::{One, Zero};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::proj::{NatTrans, ProjFunctor};
use crate::error::Result;
use crate::homotopy::resolve::{realize_map, realize_term};
use crate::linalg::{coords_in, Mat, Q};
use crate::path_algebra::algebra::presentation_only;
use crate::path_algebra::{write_algebra, FDAlgebra, Path, Quiver, Relation};
use crate::poly::generic_det_nonzero;
use crate::qmod::maps::{hom_space, ModuleMap};
use crate::qmod::module::QModule;
use crate::qmod::series::{generic_combination, GENERIC_DRAWS};

/// A bimodule as a module over `A^op ⊗ A`: vertex `(v, x)` is the part `F(P(v))` at vertex `x`,
/// arrow `α|x` acts through `F(α)` and arrow `v|β` through the module structure of `F(P(v))`.
#[derive(Clone, Debug)]
pub struct Bimodule {
    pub alg: Arc<FDAlgebra>,
    pub name: String,
    pub module: QModule,
    /// image of `Σ_v 1_v` under the unit, when one is attached
    pub unit: Option<Vec<Q>>,
}

fn env_vertex(nv: usize, v: usize, x: usize) -> usize {
    v * nv + x
}

fn build_envelope(alg: &FDAlgebra) -> Result<FDAlgebra> {
    let nv = alg.num_vertices();
    let q = &alg.quiver;
    let label = |v: usize, x: usize| format!("{}|{}", q.vertices[v], q.vertices[x]);
    let mut eq = Quiver::new();
    for v in 0..nv {
        for x in 0..nv {
            eq.add_vertex(&label(v, x))?;
        }
    }
    // outer[a][x] and inner[v][b]
    let mut outer = vec![vec![0; nv]; q.arrows.len()];
    let mut inner = vec![vec![0; q.arrows.len()]; nv];
    for (a, arr) in q.arrows.iter().enumerate() {
        for x in 0..nv {
            // modules are acted on contravariantly, so the side through `F(α)` is reversed
            outer[a][x] = eq.add_arrow(&format!("{}|{}", arr.name, q.vertices[x]), &label(arr.target, x), &label(arr.source, x))?;
        }
    }
    for v in 0..nv {
        for (b, arr) in q.arrows.iter().enumerate() {
            inner[v][b] = eq.add_arrow(&format!("{}|{}", q.vertices[v], arr.name), &label(v, arr.source), &label(v, arr.target))?;
        }
    }
    let mut rels = Vec::new();
    for r in &alg.relations {
        for x in 0..nv {
            let terms = r.terms.iter().map(|(c, p)| {
                let arrows: Vec<usize> = p.arrows.iter().rev().map(|&a| outer[a][x]).collect();
                (c.clone(), Path::from_arrows(&eq, &arrows).expect("lifted path"))
            });
            rels.push(Relation::new(terms.collect()));
        }
        for v in 0..nv {
            let terms = r.terms.iter().map(|(c, p)| {
                let arrows: Vec<usize> = p.arrows.iter().map(|&b| inner[v][b]).collect();
                (c.clone(), Path::from_arrows(&eq, &arrows).expect("lifted path"))
            });
            rels.push(Relation::new(terms.collect()));
        }
    }
    for (a, aa) in q.arrows.iter().enumerate() {
        for (b, bb) in q.arrows.iter().enumerate() {
            let p1 = Path::from_arrows(&eq, &[outer[a][bb.source], inner[aa.source][b]]).expect("square");
            let p2 = Path::from_arrows(&eq, &[inner[aa.target][b], outer[a][bb.target]]).expect("square");
            rels.push(Relation::new(vec![(Q::one(), p1), (-Q::one(), p2)]));
        }
    }
    presentation_only(&format!("{}-envelope", alg.name), eq, rels)
}

/// `A^op ⊗ A` for the two commuting actions, cached per algebra.
pub fn envelope(alg: &FDAlgebra) -> Result<Arc<FDAlgebra>> {
    static CACHE: OnceLock<Mutex<HashMap<String, Arc<FDAlgebra>>>> = OnceLock::new();
    let key = write_algebra(alg);
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(e) = cache.lock().expect("envelope cache").get(&key) {
        return Ok(e.clone());
    }
    let e = Arc::new(build_envelope(alg)?);
    cache.lock().expect("envelope cache").insert(key, e.clone());
    Ok(e)
}

impl Bimodule {
    /// `M_F`, with the unit vector of `unit: id<k> => F` when given.
    pub fn from_functor(f: &ProjFunctor, unit: Option<&NatTrans>) -> Result<Self> {
        let alg = &f.alg;
        let env = envelope(alg)?;
        let nv = alg.num_vertices();
        let parts: Vec<_> = (0..nv).map(|v| realize_term(alg, &f.objects[v])).collect();
        let mut spaces = Vec::new();
        for (v, (m, _)) in parts.iter().enumerate() {
            for b in m.blocks() {
                spaces.push((env_vertex(nv, v, b.vertex), b.degree, b.dim));
            }
        }
        let (blocks, dim) = crate::qmod::module::layout(&spaces);
        // position in the total space of every basis vector of every F(P(v))
        let pos: Vec<Vec<usize>> = parts
            .iter()
            .enumerate()
            .map(|(v, (m, _))| {
                let mut p = vec![0; m.dim()];
                for b in m.blocks() {
                    let eb = blocks
                        .iter()
                        .find(|e| e.vertex == env_vertex(nv, v, b.vertex) && e.degree == b.degree)
                        .expect("block");
                    for i in 0..b.dim {
                        p[b.offset + i] = eb.offset + i;
                    }
                }
                p
            })
            .collect();
        let q = &alg.quiver;
        let mut act = vec![Mat::zeros(dim, dim); env.quiver.arrows.len()];
        let vertex_of = |m: &QModule, i: usize| m.blocks().iter().find(|b| b.range().contains(&i)).expect("row").vertex;
        for (a, arr) in q.arrows.iter().enumerate() {
            let (u, v) = (arr.source, arr.target);
            let fa = realize_map(alg, &f.arrows[a], &parts[u], &f.objects[u], &parts[v], &f.objects[v], 1);
            for i in 0..fa.mat.rows() {
                for j in 0..fa.mat.cols() {
                    let c = fa.mat.get(i, j);
                    if !c.is_zero() {
                        let x = vertex_of(&parts[u].0, j);
                        act[a * nv + x].set(pos[v][i], pos[u][j], c.clone());
                    }
                }
            }
        }
        let base = q.arrows.len() * nv;
        for (v, (m, _)) in parts.iter().enumerate() {
            for b in 0..q.arrows.len() {
                let mb = m.arrow_matrix(b);
                for i in 0..mb.rows() {
                    for j in 0..mb.cols() {
                        let c = mb.get(i, j);
                        if !c.is_zero() {
                            act[base + v * q.arrows.len() + b].set(pos[v][i], pos[v][j], c.clone());
                        }
                    }
                }
            }
        }
        let module = QModule::new(env, &spaces, act)?;
        let unit = unit.map(|t| {
            let mut u = vec![Q::zero(); dim];
            for v in 0..nv {
                let src = &t.dom.objects[v];
                let sp = realize_term(alg, src);
                let comp = realize_map(alg, &t.comps[v], &sp, src, &parts[v], &f.objects[v], 0);
                // generator of the source projective, at the idempotent
                let gen = crate::qmod::module::projective_basis(alg, src[0].vertex)
                    .iter()
                    .position(|&i| i == alg.idempotent(v))
                    .expect("idempotent");
                let image = comp.mat.mul(&sp.1[0]).col(gen);
                for (k, y) in image.into_iter().enumerate() {
                    u[pos[v][k]] += y;
                }
            }
            u
        });
        Ok(Bimodule { alg: alg.clone(), name: f.name.clone(), module, unit })
    }

    pub fn dim(&self) -> usize {
        self.module.dim()
    }

    /// Dimensions by `(left vertex, right vertex, degree)`.
    pub fn graded_dims(&self) -> Vec<((usize, usize, i32), usize)> {
        let nv = self.alg.num_vertices();
        self.module.blocks().iter().map(|b| ((b.vertex / nv, b.vertex % nv, b.degree), b.dim)).collect()
    }
}

/// Certificate of a bimodule isomorphism, or the reason none exists.
#[derive(Clone, Debug)]
pub enum BimoduleIso {
    Iso { map: Mat, unit_scale: Option<Q> },
    NotIso(String),
}

impl BimoduleIso {
    pub fn is_iso(&self) -> bool {
        matches!(self, BimoduleIso::Iso { .. })
    }
}

/// An isomorphism `M_1 -> M_2` of bimodules; when both carry units it must send unit to unit.
pub fn bimodule_iso(m1: &Bimodule, m2: &Bimodule, seed: u64) -> BimoduleIso {
    let (a, b) = (&m1.module, &m2.module);
    if !Arc::ptr_eq(a.alg(), b.alg()) && write_algebra(a.alg()) != write_algebra(b.alg()) {
        return BimoduleIso::NotIso("different algebras".into());
    }
    if a.graded_dims() != b.graded_dims() {
        return BimoduleIso::NotIso(format!("graded dimension profiles differ ({} vs {})", m1.dim(), m2.dim()));
    }
    if a.dim() == 0 {
        return BimoduleIso::Iso { map: Mat::zeros(0, 0), unit_scale: None };
    }
    let mut homs: Vec<Mat> = hom_space(a, b, 0).into_iter().map(|f| f.mat).collect();
    let units = m1.unit.as_ref().zip(m2.unit.as_ref());
    if let Some((u1, u2)) = units {
        // keep the maps with f(u_1) ∈ k u_2
        let n = homs.len();
        let images: Vec<Vec<Q>> = homs.iter().map(|h| h.mul_vec(u1)).collect();
        let mut cols: Vec<Vec<Q>> = images.clone();
        cols.push(u2.iter().map(|x| -x.clone()).collect());
        let sys = Mat::from_cols(b.dim(), &cols);
        homs = sys
            .kernel()
            .into_iter()
            .filter(|k| k[..n].iter().any(|x| !x.is_zero()))
            .map(|k| {
                let mut m = Mat::zeros(b.dim(), a.dim());
                for (h, c) in homs.iter().zip(&k[..n]) {
                    m = m.add(&h.scale(c));
                }
                m
            })
            .collect();
    }
    if homs.is_empty() {
        return BimoduleIso::NotIso("no degree-0 bimodule maps with the required unit condition".into());
    }
    let finish = |f: Mat| -> Option<BimoduleIso> {
        if !f.is_invertible() {
            return None;
        }
        let unit_scale = match units {
            Some((u1, u2)) => {
                let img = f.mul_vec(u1);
                let lambda = coords_in(b.dim(), std::slice::from_ref(u2), &img)?.remove(0);
                if lambda.is_zero() {
                    return None;
                }
                Some(lambda)
            }
            None => None,
        };
        // normalize so the unit goes to the unit exactly
        let map = match &unit_scale {
            Some(l) => f.scale(&(Q::one() / l)),
            None => f,
        };
        Some(BimoduleIso::Iso { map, unit_scale: unit_scale.map(|_| Q::one()) })
    };
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..GENERIC_DRAWS {
        let (_, f) = generic_combination(&homs, &mut rng);
        if let Some(iso) = finish(f) {
            return iso;
        }
    }
    for blk in a.blocks() {
        let blocks: Vec<Mat> = homs
            .iter()
            .map(|h| {
                ModuleMap { dom: a.clone(), cod: b.clone(), shift: 0, mat: h.clone() }.block_matrix(blk.vertex, blk.degree)
            })
            .collect();
        if !generic_det_nonzero(&blocks) {
            let nv = m1.alg.num_vertices();
            return BimoduleIso::NotIso(format!(
                "determinant of the generic bimodule map vanishes on block ({}, {}, degree {})",
                m1.alg.vertex_label(blk.vertex / nv),
                m1.alg.vertex_label(blk.vertex % nv),
                blk.degree
            ));
        }
    }
    for _ in 0..256 {
        let (_, f) = generic_combination(&homs, &mut rng);
        if let Some(iso) = finish(f) {
            return iso;
        }
    }
    BimoduleIso::NotIso("generic search exhausted".into())
}
