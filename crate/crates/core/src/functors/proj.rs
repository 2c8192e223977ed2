//! Additive functors on graded projectives, given on objects and arrows.

use std::collections::BTreeMap;
use std::sync::Arc;

use num::{One, Zero};

use crate::error::{Error, Result};
use crate::homotopy::complex::{ChainMap, Complex, PMat, Summand};
use crate::homotopy::resolve::{realize_map, realize_term, resolve};
use crate::linalg::{Mat, Q};
use crate::path_algebra::{AElem, FDAlgebra};
use crate::qmod::maps::{cokernel, ModuleMap};
use crate::qmod::module::QModule;

/// `F(P(v))` for every vertex and `F(α): F(P(u))<1> -> F(P(v))` for every arrow `α: u -> v`.
#[derive(Clone, Debug)]
pub struct ProjFunctor {
    pub alg: Arc<FDAlgebra>,
    pub name: String,
    pub objects: Vec<Vec<Summand>>,
    pub arrows: Vec<PMat>,
    // F of every basis element, filled by `new`
    basis_images: Vec<PMat>,
}

fn shifted(t: &[Summand], k: i32) -> Vec<Summand> {
    t.iter().map(|s| Summand::new(s.vertex, s.shift + k)).collect()
}

impl ProjFunctor {
    pub fn new(alg: &Arc<FDAlgebra>, name: &str, objects: Vec<Vec<Summand>>, arrows: Vec<PMat>) -> Result<Self> {
        let q = &alg.quiver;
        if objects.len() != q.num_vertices() || arrows.len() != q.arrows.len() {
            return Err(Error::Invalid(format!("functor {name} needs one image per vertex and per arrow")));
        }
        for (a, m) in arrows.iter().enumerate() {
            let arr = &q.arrows[a];
            let (dom, cod) = (&objects[arr.source], &objects[arr.target]);
            if m.rows() != cod.len() || m.cols() != dom.len() {
                return Err(Error::Invalid(format!("functor {name}: image of arrow {} has the wrong shape", arr.name)));
            }
            m.check_degrees(alg, cod, dom, 1)?;
        }
        let mut basis_images = Vec::with_capacity(alg.dim());
        for i in 0..alg.dim() {
            let p = alg.basis_path(i);
            let mut acc = PMat::identity(alg, &objects[p.source]);
            for &a in &p.arrows {
                acc = arrows[a].mul(alg, &acc);
            }
            basis_images.push(acc);
        }
        let f = ProjFunctor { alg: alg.clone(), name: name.to_string(), objects, arrows, basis_images };
        f.check_multiplicative()?;
        Ok(f)
    }

    /// `F(b_i) F(b_j) = F(b_i b_j)` on all composable basis pairs, i.e. `F` kills the relations.
    fn check_multiplicative(&self) -> Result<()> {
        let alg = &self.alg;
        for i in 0..alg.dim() {
            for j in 0..alg.dim() {
                let (pi, pj) = (alg.basis_path(i), alg.basis_path(j));
                if pi.source != pj.target {
                    continue;
                }
                let lhs = self.basis_images[i].mul(alg, &self.basis_images[j]);
                let rhs = self.apply_elem(alg.mul_basis(i, j), pj.source, pi.target);
                if lhs != rhs {
                    return Err(Error::Invalid(format!(
                        "functor {} does not respect the relations: F({}) F({}) differs from F of the product",
                        self.name,
                        pi.render(&alg.quiver),
                        pj.render(&alg.quiver)
                    )));
                }
            }
        }
        Ok(())
    }

    /// The identity functor followed by the grading shift `<k>`.
    pub fn identity(alg: &Arc<FDAlgebra>, k: i32) -> Self {
        let objects = (0..alg.num_vertices()).map(|v| vec![Summand::new(v, k)]).collect();
        let arrows = (0..alg.quiver.arrows.len())
            .map(|a| {
                let mut m = PMat::zeros(1, 1);
                m.set(0, 0, alg.arrow_elem(a));
                m
            })
            .collect();
        Self::new(alg, &format!("id<{k}>"), objects, arrows).expect("identity is a functor")
    }

    /// `F(x): F(P(v)) -> F(P(w))` for `x ∈ 1_w A 1_v`.
    pub fn apply_elem(&self, x: &AElem, v: usize, w: usize) -> PMat {
        let mut out = PMat::zeros(self.objects[w].len(), self.objects[v].len());
        for (i, c) in x.terms() {
            out = out.add(&self.basis_images[i].scale(c));
        }
        out
    }

    pub fn apply_summands(&self, t: &[Summand]) -> Vec<Summand> {
        t.iter().flat_map(|s| shifted(&self.objects[s.vertex], s.shift)).collect()
    }

    /// `F` applied entrywise to a matrix between projective sums.
    pub fn apply_pmat(&self, m: &PMat, cod: &[Summand], dom: &[Summand]) -> PMat {
        let rows: Vec<usize> = cod.iter().map(|s| self.objects[s.vertex].len()).collect();
        let cols: Vec<usize> = dom.iter().map(|s| self.objects[s.vertex].len()).collect();
        let mut out = PMat::zeros(rows.iter().sum(), cols.iter().sum());
        let mut r0 = 0;
        for (r, w) in cod.iter().enumerate() {
            let mut c0 = 0;
            for (c, v) in dom.iter().enumerate() {
                let x = m.get(r, c);
                if !x.is_zero() {
                    out.put(r0, c0, &self.apply_elem(x, v.vertex, w.vertex));
                }
                c0 += cols[c];
            }
            r0 += rows[r];
        }
        out
    }

    pub fn apply_complex(&self, x: &Complex) -> Complex {
        let terms: BTreeMap<i32, Vec<Summand>> = x.terms().iter().map(|(j, t)| (*j, self.apply_summands(t))).collect();
        let diffs = x
            .terms()
            .keys()
            .filter_map(|&j| x.diff_ref(j).map(|d| (j, self.apply_pmat(d, x.term(j - 1), x.term(j)))))
            .collect();
        Complex::from_parts(&self.alg, terms, diffs)
    }

    pub fn apply_chain_map(&self, f: &ChainMap) -> ChainMap {
        let dom = self.apply_complex(&f.dom);
        let cod = self.apply_complex(&f.cod);
        let comps = f
            .comps
            .iter()
            .map(|(&k, m)| (k, self.apply_pmat(m, f.cod.term(k - f.hdeg), f.dom.term(k))))
            .collect();
        ChainMap { dom, cod, hdeg: f.hdeg, internal: f.internal, comps }
    }

    /// `M ⊗_A M_F` through the presentation `P_1 -> P_0 -> M` from a minimal resolution.
    pub fn apply_module(&self, m: &QModule) -> Result<QModule> {
        let (c, _) = self.presented_cokernel(m, None)?;
        Ok(c)
    }

    /// Cokernel of `F(d_1)`, optionally enlarged by further maps into `F(P_0)`.
    pub(crate) fn presented_cokernel(&self, m: &QModule, extra: Option<&NatTrans>) -> Result<(QModule, ModuleMap)> {
        let alg = &self.alg;
        let res = resolve(m)?;
        let p0 = res.term(0).to_vec();
        let p1 = res.term(1).to_vec();
        let fp0 = self.apply_summands(&p0);
        let mut dom = self.apply_summands(&p1);
        let mut mat = self.apply_pmat(&res.diff(1), &p0, &p1);
        if let Some(eta) = extra {
            let src = eta.dom.apply_summands(&p0);
            let comp = eta.component(&p0);
            let mut wide = PMat::zeros(fp0.len(), mat.cols() + comp.cols());
            wide.put(0, 0, &mat);
            wide.put(0, mat.cols(), &comp);
            mat = wide;
            dom.extend(src);
        }
        let dr = realize_term(alg, &dom);
        let cr = realize_term(alg, &fp0);
        let f = realize_map(alg, &mat, &dr, &dom, &cr, &fp0, 0);
        let (c, proj) = cokernel(&f)?;
        Ok((c, proj))
    }
}

/// A natural transformation `G => F` of internal degree 0, one component per vertex.
#[derive(Clone, Debug)]
pub struct NatTrans {
    pub dom: ProjFunctor,
    pub cod: ProjFunctor,
    pub comps: Vec<PMat>,
}

impl NatTrans {
    /// Block-diagonal component on a projective sum.
    pub fn component(&self, t: &[Summand]) -> PMat {
        let mut out = PMat::zeros(self.cod.apply_summands(t).len(), self.dom.apply_summands(t).len());
        let (mut r0, mut c0) = (0, 0);
        for s in t {
            let m = &self.comps[s.vertex];
            out.put(r0, c0, m);
            r0 += m.rows();
            c0 += m.cols();
        }
        out
    }

    /// The chain map `G(X) -> F(X)`.
    pub fn on_complex(&self, x: &Complex) -> ChainMap {
        let comps = x.terms().iter().map(|(&j, t)| (j, self.component(t))).collect();
        ChainMap { dom: self.dom.apply_complex(x), cod: self.cod.apply_complex(x), hdeg: 0, internal: 0, comps }
    }

    pub fn is_natural(&self) -> bool {
        let alg = &self.dom.alg;
        alg.quiver.arrows.iter().enumerate().all(|(a, arr)| {
            let (u, v) = (arr.source, arr.target);
            let lhs = self.cod.arrows[a].mul(alg, &self.comps[u]);
            let rhs = self.comps[v].mul(alg, &self.dom.arrows[a]);
            lhs == rhs
        })
    }

    pub fn is_zero(&self) -> bool {
        self.comps.iter().all(|m| m.is_zero())
    }
}

/// Basis of the natural transformations `G => F` of internal degree 0.
pub fn natural_transformations(g: &ProjFunctor, f: &ProjFunctor) -> Vec<NatTrans> {
    let alg = &g.alg;
    // unknowns: (vertex, row, col, basis index) of each component entry of the right degree
    let mut unknowns: Vec<(usize, usize, usize, usize)> = Vec::new();
    for v in 0..alg.num_vertices() {
        for (r, w) in f.objects[v].iter().enumerate() {
            for (c, u) in g.objects[v].iter().enumerate() {
                let want = u.shift - w.shift;
                for i in alg.block(w.vertex, u.vertex) {
                    if alg.degree_of(i) as i32 == want {
                        unknowns.push((v, r, c, i));
                    }
                }
            }
        }
    }
    let trans_of = |coeffs: &[Q]| -> NatTrans {
        let mut comps: Vec<PMat> =
            (0..alg.num_vertices()).map(|v| PMat::zeros(f.objects[v].len(), g.objects[v].len())).collect();
        for (&(v, r, c, i), x) in unknowns.iter().zip(coeffs) {
            if !x.is_zero() {
                comps[v].add_at(r, c, &AElem::term(i, x.clone()));
            }
        }
        NatTrans { dom: g.clone(), cod: f.clone(), comps }
    };
    // each unknown's naturality defect, flattened into algebra coordinates
    let defect = |t: &NatTrans| -> Vec<Q> {
        let mut out = Vec::new();
        for (a, arr) in alg.quiver.arrows.iter().enumerate() {
            let d = f.arrows[a].mul(alg, &t.comps[arr.source]).sub(&t.comps[arr.target].mul(alg, &g.arrows[a]));
            for r in 0..d.rows() {
                for c in 0..d.cols() {
                    let x = d.get(r, c);
                    for i in 0..alg.dim() {
                        out.push(x.coeff(i));
                    }
                }
            }
        }
        out
    };
    if unknowns.is_empty() {
        return Vec::new();
    }
    let cols: Vec<Vec<Q>> = (0..unknowns.len())
        .map(|k| {
            let mut e = vec![Q::zero(); unknowns.len()];
            e[k] = Q::one();
            defect(&trans_of(&e))
        })
        .collect();
    let rows = cols.first().map_or(0, |c| c.len());
    let sys = Mat::from_cols(rows, &cols);
    sys.kernel().iter().map(|k| trans_of(k)).collect()
}
