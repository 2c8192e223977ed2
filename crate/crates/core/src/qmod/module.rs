//! Graded right modules as quiver representations.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::Range;
use std::sync::Arc;

use num::{One, Zero};

use crate::error::{Error, Result};
use crate::linalg::{coords_in, Mat, Q};
use crate::path_algebra::{AElem, FDAlgebra, Path};

/// The graded piece of a module at one vertex and degree.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Block {
    pub vertex: usize,
    pub degree: i32,
    pub dim: usize,
    pub offset: usize,
}

impl Block {
    pub fn range(&self) -> Range<usize> {
        self.offset..self.offset + self.dim
    }
}

#[derive(Debug)]
struct Inner {
    alg: Arc<FDAlgebra>,
    blocks: Vec<Block>,
    dim: usize,
    // act[a] is dim x dim; an arrow u -> v sends block (v, d) to block (u, d + 1)
    act: Vec<Mat>,
}

/// A finite-dimensional graded right module; cheap to clone.
#[derive(Clone)]
pub struct QModule(Arc<Inner>);

impl fmt::Debug for QModule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "QModule(")?;
        let parts: Vec<String> = self
            .blocks()
            .iter()
            .map(|b| format!("{}@{}:{}", self.alg().vertex_label(b.vertex), b.degree, b.dim))
            .collect();
        write!(f, "{})", parts.join(", "))
    }
}

pub(crate) fn layout(spaces: &[(usize, i32, usize)]) -> (Vec<Block>, usize) {
    let mut merged: BTreeMap<(usize, i32), usize> = BTreeMap::new();
    for &(v, d, k) in spaces {
        if k > 0 {
            *merged.entry((v, d)).or_insert(0) += k;
        }
    }
    let mut blocks = Vec::new();
    let mut off = 0;
    for ((v, d), k) in merged {
        blocks.push(Block { vertex: v, degree: d, dim: k, offset: off });
        off += k;
    }
    (blocks, off)
}

impl QModule {
    /// Build and validate a module from its graded spaces and arrow matrices.
    pub fn new(alg: Arc<FDAlgebra>, spaces: &[(usize, i32, usize)], act: Vec<Mat>) -> Result<Self> {
        let m = Self::new_unchecked(alg, spaces, act)?;
        m.validate()?;
        Ok(m)
    }

    pub(crate) fn new_unchecked(alg: Arc<FDAlgebra>, spaces: &[(usize, i32, usize)], act: Vec<Mat>) -> Result<Self> {
        let (blocks, dim) = layout(spaces);
        if act.len() != alg.quiver.arrows.len() {
            return Err(Error::Invalid(format!(
                "expected {} arrow matrices, got {}",
                alg.quiver.arrows.len(),
                act.len()
            )));
        }
        for (a, m) in act.iter().enumerate() {
            if m.rows() != dim || m.cols() != dim {
                return Err(Error::Invalid(format!(
                    "arrow {} matrix is {}x{}, expected {dim}x{dim}",
                    alg.quiver.arrows[a].name,
                    m.rows(),
                    m.cols()
                )));
            }
        }
        Ok(QModule(Arc::new(Inner { alg, blocks, dim, act })))
    }

    pub fn zero(alg: Arc<FDAlgebra>) -> Self {
        let n = alg.quiver.arrows.len();
        QModule(Arc::new(Inner { alg, blocks: Vec::new(), dim: 0, act: vec![Mat::zeros(0, 0); n] }))
    }

    /// Check degree compatibility and the defining relations.
    pub fn validate(&self) -> Result<()> {
        let alg = self.alg();
        for (a, arrow) in alg.quiver.arrows.iter().enumerate() {
            let m = &self.0.act[a];
            for bc in self.blocks() {
                for br in self.blocks() {
                    let ok = bc.vertex == arrow.target && br.vertex == arrow.source && br.degree == bc.degree + 1;
                    if ok {
                        continue;
                    }
                    for i in br.range() {
                        for j in bc.range() {
                            if !m.get(i, j).is_zero() {
                                return Err(Error::Invalid(format!(
                                    "arrow {} has an entry outside its degree-one component",
                                    arrow.name
                                )));
                            }
                        }
                    }
                }
            }
        }
        for r in &alg.relations {
            let mut sum = Mat::zeros(self.dim(), self.dim());
            for (c, p) in &r.terms {
                sum = sum.add(&self.act_path(p).scale(c));
            }
            if !sum.is_zero() {
                return Err(Error::Invalid(format!("relation {} fails on the module", r.render(&alg.quiver))));
            }
        }
        Ok(())
    }

    pub fn alg(&self) -> &Arc<FDAlgebra> {
        &self.0.alg
    }

    pub fn blocks(&self) -> &[Block] {
        &self.0.blocks
    }

    pub fn dim(&self) -> usize {
        self.0.dim
    }

    pub fn is_zero(&self) -> bool {
        self.0.dim == 0
    }

    pub fn arrow_matrix(&self, a: usize) -> &Mat {
        &self.0.act[a]
    }

    pub fn block(&self, v: usize, d: i32) -> Option<&Block> {
        self.0.blocks.iter().find(|b| b.vertex == v && b.degree == d)
    }

    pub fn block_dim(&self, v: usize, d: i32) -> usize {
        self.block(v, d).map_or(0, |b| b.dim)
    }

    /// Spaces as `(vertex, degree, dim)` triples.
    pub fn spaces(&self) -> Vec<(usize, i32, usize)> {
        self.blocks().iter().map(|b| (b.vertex, b.degree, b.dim)).collect()
    }

    pub fn graded_dims(&self) -> BTreeMap<(usize, i32), usize> {
        self.blocks().iter().map(|b| ((b.vertex, b.degree), b.dim)).collect()
    }

    /// Action matrix of a path; for `α_k ∘ ... ∘ α_1` this is `act(α_1) ⋯ act(α_k)`.
    pub fn act_path(&self, p: &Path) -> Mat {
        if p.is_trivial() {
            let mut m = Mat::zeros(self.dim(), self.dim());
            for b in self.blocks().iter().filter(|b| b.vertex == p.source) {
                for i in b.range() {
                    m.set(i, i, Q::one());
                }
            }
            return m;
        }
        let mut m = self.0.act[p.arrows[0]].clone();
        for &a in &p.arrows[1..] {
            m = m.mul(&self.0.act[a]);
        }
        m
    }

    pub fn act_elem(&self, x: &AElem) -> Mat {
        let mut m = Mat::zeros(self.dim(), self.dim());
        for (i, c) in x.terms() {
            m = m.add(&self.act_path(self.alg().basis_path(i)).scale(c));
        }
        m
    }

    /// `M<k>`, with `M<k>_d = M_{d-k}`.
    pub fn shift(&self, k: i32) -> QModule {
        if k == 0 {
            return self.clone();
        }
        let spaces: Vec<_> = self.spaces().into_iter().map(|(v, d, n)| (v, d + k, n)).collect();
        QModule::new_unchecked(self.alg().clone(), &spaces, self.0.act.clone()).expect("shift preserves layout")
    }

    pub fn same_algebra(&self, other: &QModule) -> bool {
        Arc::ptr_eq(self.alg(), other.alg()) || self.alg().name == other.alg().name && self.alg().dim() == other.alg().dim()
    }

    /// Direct sum with the inclusions of each summand (as `dim x dim_i` matrices).
    pub fn direct_sum(alg: &Arc<FDAlgebra>, parts: &[QModule]) -> (QModule, Vec<Mat>) {
        let mut spaces = Vec::new();
        for p in parts {
            spaces.extend(p.spaces());
        }
        let (blocks, dim) = layout(&spaces);
        // position of (part, local index) in the sum: within each (v, d) block,
        // parts appear in order
        let mut incl: Vec<Mat> = parts.iter().map(|p| Mat::zeros(dim, p.dim())).collect();
        for b in &blocks {
            let mut pos = b.offset;
            for (pi, p) in parts.iter().enumerate() {
                if let Some(pb) = p.block(b.vertex, b.degree) {
                    for k in 0..pb.dim {
                        incl[pi].set(pos + k, pb.offset + k, Q::one());
                    }
                    pos += pb.dim;
                }
            }
        }
        let narrows = alg.quiver.arrows.len();
        let mut act = vec![Mat::zeros(dim, dim); narrows];
        for (pi, p) in parts.iter().enumerate() {
            let proj = incl[pi].transpose();
            for (a, m) in act.iter_mut().enumerate() {
                *m = m.add(&incl[pi].mul(&p.0.act[a]).mul(&proj));
            }
        }
        let m = QModule::new_unchecked(alg.clone(), &spaces, act).expect("direct sum layout");
        (m, incl)
    }

    /// Left multiplication matrix `P(v) -> P(w)`, `p ↦ x·p`, for `x ∈ 1_w A 1_v`.
    pub fn left_mult_matrix(alg: &FDAlgebra, x: &AElem, v: usize, w: usize) -> Mat {
        let dom = projective_basis(alg, v);
        let cod = projective_basis(alg, w);
        let cidx: BTreeMap<usize, usize> = cod.iter().enumerate().map(|(k, &i)| (i, k)).collect();
        let mut m = Mat::zeros(cod.len(), dom.len());
        for (col, &p) in dom.iter().enumerate() {
            let y = alg.mul(x, &AElem::basis(p));
            for (i, c) in y.terms() {
                if let Some(&row) = cidx.get(&i) {
                    m.set(row, col, c.clone());
                }
            }
        }
        m
    }

    /// Coordinates of a vector in `M` restricted to one block.
    pub fn block_part(&self, v: &[Q], b: &Block) -> Vec<Q> {
        v[b.range()].to_vec()
    }

    /// Submodule spanned by the given vectors of each block, with its inclusion.
    ///
    /// `spans` is keyed by `(vertex, degree)`; the spanning vectors are
    /// expressed in the block's own coordinates.
    pub fn submodule(&self, spans: &BTreeMap<(usize, i32), Vec<Vec<Q>>>) -> Result<(QModule, Mat)> {
        let mut bases: BTreeMap<(usize, i32), Vec<Vec<Q>>> = BTreeMap::new();
        for b in self.blocks() {
            if let Some(vs) = spans.get(&(b.vertex, b.degree)) {
                let basis = if vs.is_empty() { Vec::new() } else { Mat::from_cols(b.dim, vs).column_space() };
                if !basis.is_empty() {
                    bases.insert((b.vertex, b.degree), basis);
                }
            }
        }
        let spaces: Vec<_> = bases.iter().map(|(&(v, d), bs)| (v, d, bs.len())).collect();
        let (sblocks, sdim) = layout(&spaces);
        let mut incl = Mat::zeros(self.dim(), sdim);
        for sb in &sblocks {
            let b = self.block(sb.vertex, sb.degree).expect("block exists");
            for (k, vec) in bases[&(sb.vertex, sb.degree)].iter().enumerate() {
                for (i, x) in vec.iter().enumerate() {
                    incl.set(b.offset + i, sb.offset + k, x.clone());
                }
            }
        }
        let mut act = Vec::new();
        for a in 0..self.alg().quiver.arrows.len() {
            let img = self.0.act[a].mul(&incl);
            let mut m = Mat::zeros(sdim, sdim);
            for sb in &sblocks {
                for col in sb.range() {
                    let v = img.col(col);
                    if v.iter().all(|x| x.is_zero()) {
                        continue;
                    }
                    let arrow = &self.alg().quiver.arrows[a];
                    let tgt = sblocks.iter().find(|t| t.vertex == arrow.source && t.degree == sb.degree + 1);
                    let tb = self.block(arrow.source, sb.degree + 1).expect("image block");
                    let part = &v[tb.range()];
                    let Some(t) = tgt else {
                        return Err(Error::Invalid("subspace is not closed under the action".into()));
                    };
                    let c = coords_in(tb.dim, &bases[&(t.vertex, t.degree)], part)
                        .ok_or_else(|| Error::Invalid("subspace is not closed under the action".into()))?;
                    for (k, x) in c.into_iter().enumerate() {
                        m.set(t.offset + k, col, x);
                    }
                }
            }
            act.push(m);
        }
        let sub = QModule::new_unchecked(self.alg().clone(), &spaces, act)?;
        Ok((sub, incl))
    }

    /// Quotient by the submodule spanned by the given block vectors, with the projection.
    pub fn quotient(&self, spans: &BTreeMap<(usize, i32), Vec<Vec<Q>>>) -> Result<(QModule, Mat)> {
        // per block: basis [I | C] of the block, quotient coordinates = C-part of the inverse
        let mut inv_parts: BTreeMap<(usize, i32), (usize, Mat)> = BTreeMap::new();
        let mut spaces = Vec::new();
        for b in self.blocks() {
            let sub: Vec<Vec<Q>> = spans
                .get(&(b.vertex, b.degree))
                .map(|vs| if vs.is_empty() { Vec::new() } else { Mat::from_cols(b.dim, vs).column_space() })
                .unwrap_or_default();
            let std: Vec<Vec<Q>> = (0..b.dim)
                .map(|i| (0..b.dim).map(|j| if i == j { Q::one() } else { Q::zero() }).collect())
                .collect();
            let comp = crate::linalg::complement_in(b.dim, &sub, &std);
            let r = sub.len();
            let mut all = sub.clone();
            all.extend(comp.iter().cloned());
            let inv = Mat::from_cols(b.dim, &all).inverse().expect("basis of the block");
            if !comp.is_empty() {
                spaces.push((b.vertex, b.degree, comp.len()));
            }
            inv_parts.insert((b.vertex, b.degree), (r, inv));
        }
        let (qblocks, qdim) = layout(&spaces);
        let mut proj = Mat::zeros(qdim, self.dim());
        for qb in &qblocks {
            let b = self.block(qb.vertex, qb.degree).expect("block");
            let (r, inv) = &inv_parts[&(qb.vertex, qb.degree)];
            for k in 0..qb.dim {
                for j in 0..b.dim {
                    proj.set(qb.offset + k, b.offset + j, inv.get(r + k, j).clone());
                }
            }
        }
        // section: quotient basis -> complement vectors
        let mut sect = Mat::zeros(self.dim(), qdim);
        for qb in &qblocks {
            let b = self.block(qb.vertex, qb.degree).expect("block");
            let (r, inv) = &inv_parts[&(qb.vertex, qb.degree)];
            let basis = inv.inverse().expect("invertible");
            for k in 0..qb.dim {
                for i in 0..b.dim {
                    sect.set(b.offset + i, qb.offset + k, basis.get(i, r + k).clone());
                }
            }
        }
        let act: Vec<Mat> = self.0.act.iter().map(|m| proj.mul(m).mul(&sect)).collect();
        let qm = QModule::new_unchecked(self.alg().clone(), &spaces, act)?;
        Ok((qm, proj))
    }
}

/// Basis indices of `1_w A`, the paths ending at `w`, in module order
/// (source vertex, then degree, then algebra index).
pub fn projective_basis(alg: &FDAlgebra, w: usize) -> Vec<usize> {
    let mut idx: Vec<usize> = (0..alg.dim()).filter(|&i| alg.basis_path(i).target == w).collect();
    idx.sort_by_key(|&i| (alg.basis_path(i).source, alg.degree_of(i), i));
    idx
}

/// The indecomposable projective `P(w) = 1_w A`.
pub fn projective(alg: &Arc<FDAlgebra>, w: usize) -> QModule {
    let idx = projective_basis(alg, w);
    let spaces: Vec<(usize, i32, usize)> =
        idx.iter().map(|&i| (alg.basis_path(i).source, alg.degree_of(i) as i32, 1)).collect();
    let dim = idx.len();
    let pos: BTreeMap<usize, usize> = idx.iter().enumerate().map(|(k, &i)| (i, k)).collect();
    let mut act = Vec::new();
    for a in 0..alg.quiver.arrows.len() {
        let x = alg.arrow_elem(a);
        let mut m = Mat::zeros(dim, dim);
        for (k, &i) in idx.iter().enumerate() {
            let y = alg.mul(&AElem::basis(i), &x);
            for (j, c) in y.terms() {
                m.set(pos[&j], k, c.clone());
            }
        }
        act.push(m);
    }
    QModule::new_unchecked(alg.clone(), &spaces, act).expect("projective layout")
}

/// The simple module `L(w)<shift>`.
pub fn simple(alg: &Arc<FDAlgebra>, w: usize, shift: i32) -> QModule {
    let n = alg.quiver.arrows.len();
    QModule::new_unchecked(alg.clone(), &[(w, shift, 1)], vec![Mat::zeros(1, 1); n]).expect("simple layout")
}
