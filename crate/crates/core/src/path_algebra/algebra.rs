//! Finite-dimensional graded quotients of path algebras.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use num::{One, Zero};

use super::quiver::{Path, Quiver};
use crate::error::{Error, Result};
use crate::linalg::{fmt_q, Mat, Q};

pub const DEFAULT_DEGREE_GUARD: usize = 12;
const MAX_PATHS_PER_DEGREE: usize = 200_000;

/// A homogeneous linear combination of paths, read as `sum = 0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Relation {
    pub terms: Vec<(Q, Path)>,
}

impl Relation {
    pub fn new(terms: Vec<(Q, Path)>) -> Self {
        let mut merged: Vec<(Q, Path)> = Vec::new();
        for (c, p) in terms {
            if let Some(e) = merged.iter_mut().find(|(_, q)| *q == p) {
                e.0 += c;
            } else {
                merged.push((c, p));
            }
        }
        merged.retain(|(c, _)| !c.is_zero());
        Relation { terms: merged }
    }

    pub fn degree(&self) -> usize {
        self.terms.first().map_or(0, |(_, p)| p.degree())
    }

    fn validate(&self, q: &Quiver) -> Result<()> {
        let Some((_, p0)) = self.terms.first() else {
            return Err(Error::Invalid("relation is identically zero".into()));
        };
        for (_, p) in &self.terms {
            if (p.source, p.target, p.degree()) != (p0.source, p0.target, p0.degree()) {
                return Err(Error::Invalid(format!(
                    "relation is not homogeneous: {} vs {}",
                    p0.render(q),
                    p.render(q)
                )));
            }
        }
        if p0.degree() < 2 {
            return Err(Error::Invalid(format!(
                "relation of degree {} < 2 is not admissible",
                p0.degree()
            )));
        }
        Ok(())
    }

    pub fn render(&self, q: &Quiver) -> String {
        let mut out = String::new();
        for (i, (c, p)) in self.terms.iter().enumerate() {
            let (neg, a) = if c < &Q::zero() { (true, -c.clone()) } else { (false, c.clone()) };
            if i == 0 {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            if !a.is_one() {
                out.push_str(&fmt_q(&a));
                out.push('*');
            }
            out.push_str(&p.render(q));
        }
        out.push_str(" = 0");
        out
    }
}

/// An element of an algebra as coordinates in its path basis.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct AElem {
    coeffs: BTreeMap<usize, Q>,
}

impl AElem {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn basis(i: usize) -> Self {
        Self::term(i, Q::one())
    }

    pub fn term(i: usize, c: Q) -> Self {
        let mut e = Self::default();
        e.add_term(i, &c);
        e
    }

    pub fn add_term(&mut self, i: usize, c: &Q) {
        if c.is_zero() {
            return;
        }
        let e = self.coeffs.entry(i).or_insert_with(Q::zero);
        *e += c;
        if e.is_zero() {
            self.coeffs.remove(&i);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeff(&self, i: usize) -> Q {
        self.coeffs.get(&i).cloned().unwrap_or_else(Q::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (usize, &Q)> {
        self.coeffs.iter().map(|(i, c)| (*i, c))
    }

    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn add(&self, other: &AElem) -> AElem {
        let mut out = self.clone();
        for (i, c) in &other.coeffs {
            out.add_term(*i, c);
        }
        out
    }

    pub fn sub(&self, other: &AElem) -> AElem {
        let mut out = self.clone();
        for (i, c) in &other.coeffs {
            out.add_term(*i, &-c);
        }
        out
    }

    pub fn scale(&self, c: &Q) -> AElem {
        let mut out = AElem::zero();
        for (i, x) in &self.coeffs {
            out.add_term(*i, &(x * c));
        }
        out
    }

    pub fn neg(&self) -> AElem {
        self.scale(&-Q::one())
    }

    /// The scalar `c` if `self = c * basis(i)` for a single `i`.
    pub fn as_single(&self) -> Option<(usize, &Q)> {
        if self.coeffs.len() == 1 {
            self.coeffs.iter().next().map(|(i, c)| (*i, c))
        } else {
            None
        }
    }
}

impl fmt::Debug for AElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.coeffs.iter().map(|(i, c)| format!("{}*b{}", fmt_q(c), i)).collect();
        write!(f, "[{}]", parts.join(" + "))
    }
}

#[derive(Clone, Debug)]
pub struct FDAlgebra {
    pub name: String,
    pub quiver: Quiver,
    pub relations: Vec<Relation>,
    basis: Vec<Path>,
    index: HashMap<Path, usize>,
    // normal forms of non-basis paths up to the top degree
    nf: HashMap<Path, Vec<(usize, Q)>>,
    top_degree: usize,
    // mult[i * dim + j] = basis[i] * basis[j]
    mult: Vec<AElem>,
}

impl FDAlgebra {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Path] {
        &self.basis
    }

    pub fn basis_path(&self, i: usize) -> &Path {
        &self.basis[i]
    }

    pub fn degree_of(&self, i: usize) -> usize {
        self.basis[i].degree()
    }

    pub fn top_degree(&self) -> usize {
        self.top_degree
    }

    pub fn num_vertices(&self) -> usize {
        self.quiver.num_vertices()
    }

    pub fn vertex_label(&self, v: usize) -> &str {
        &self.quiver.vertices[v]
    }

    pub fn vertex(&self, label: &str) -> Result<usize> {
        self.quiver.vertex_index(label)
    }

    pub fn idempotent(&self, v: usize) -> usize {
        self.index[&Path::trivial(v)]
    }

    /// Indices of the basis of `1_w A 1_v` (paths from `v` to `w`).
    pub fn block(&self, w: usize, v: usize) -> Vec<usize> {
        (0..self.dim()).filter(|&i| self.basis[i].target == w && self.basis[i].source == v).collect()
    }

    /// Indices of the basis of `1_w A 1_v` in degree `d`.
    pub fn block_deg(&self, w: usize, v: usize, d: usize) -> Vec<usize> {
        self.block(w, v).into_iter().filter(|&i| self.basis[i].degree() == d).collect()
    }

    /// Normal form of an arbitrary path.
    pub fn reduce_path(&self, p: &Path) -> AElem {
        if p.degree() > self.top_degree {
            return AElem::zero();
        }
        if let Some(&i) = self.index.get(p) {
            return AElem::basis(i);
        }
        let mut e = AElem::zero();
        if let Some(v) = self.nf.get(p) {
            for (i, c) in v {
                e.add_term(*i, c);
            }
        }
        e
    }

    pub fn elem_of_path(&self, p: &Path) -> AElem {
        self.reduce_path(p)
    }

    pub fn arrow_elem(&self, a: usize) -> AElem {
        self.reduce_path(&Path::arrow(&self.quiver, a))
    }

    /// Product of basis elements, `basis[i] ∘ basis[j]`.
    pub fn mul_basis(&self, i: usize, j: usize) -> &AElem {
        &self.mult[i * self.dim() + j]
    }

    /// `x * y`, meaning first `y` then `x`.
    pub fn mul(&self, x: &AElem, y: &AElem) -> AElem {
        let mut out = AElem::zero();
        for (i, a) in x.terms() {
            for (j, b) in y.terms() {
                let ab = a * b;
                for (k, c) in self.mul_basis(i, j).terms() {
                    out.add_term(k, &(&ab * c));
                }
            }
        }
        out
    }

    /// Degree of a homogeneous nonzero element.
    pub fn elem_degree(&self, x: &AElem) -> Option<usize> {
        let mut it = x.terms().map(|(i, _)| self.degree_of(i));
        let d = it.next()?;
        if it.all(|e| e == d) {
            Some(d)
        } else {
            None
        }
    }

    pub fn render_elem(&self, x: &AElem) -> String {
        if x.is_zero() {
            return "0".into();
        }
        let mut out = String::new();
        for (k, (i, c)) in x.terms().enumerate() {
            let (neg, a) = if c < &Q::zero() { (true, -c.clone()) } else { (false, c.clone()) };
            if k == 0 {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            if !a.is_one() {
                out.push_str(&fmt_q(&a));
                out.push('*');
            }
            out.push_str(&self.basis[i].render(&self.quiver));
        }
        out
    }
}

/// Graded dimension of `1_w A 1_v`.
pub fn graded_hom_dims(a: &FDAlgebra, w: usize, v: usize) -> BTreeMap<usize, usize> {
    let mut out = BTreeMap::new();
    for i in a.block(w, v) {
        *out.entry(a.degree_of(i)).or_insert(0) += 1;
    }
    out
}

fn paths_extend(q: &Quiver, prev: &[Path]) -> Vec<Path> {
    let mut out = Vec::new();
    for p in prev {
        for (ai, a) in q.arrows.iter().enumerate() {
            if a.source == p.target {
                let mut arrows = p.arrows.clone();
                arrows.push(ai);
                out.push(Path { source: p.source, target: a.target, arrows });
            }
        }
    }
    out
}

/// A quiver with relations whose quotient is not expanded: only the trivial paths
/// are recorded as basis, so it serves as the index set of modules given by matrices.
pub(crate) fn presentation_only(name: &str, quiver: Quiver, relations: Vec<Relation>) -> Result<FDAlgebra> {
    for r in &relations {
        r.validate(&quiver)?;
    }
    let nv = quiver.num_vertices();
    let basis: Vec<Path> = (0..nv).map(Path::trivial).collect();
    let index = basis.iter().enumerate().map(|(i, p)| (p.clone(), i)).collect();
    let mult = (0..nv * nv).map(|k| if k / nv == k % nv { AElem::basis(k / nv) } else { AElem::zero() }).collect();
    Ok(FDAlgebra { name: name.to_string(), quiver, relations, basis, index, nf: HashMap::new(), top_degree: 0, mult })
}

/// Compute a path basis and structure constants of `kQ / (relations)`.
///
/// Works degree by degree: the ideal in degree `d` is spanned by the
/// relations of degree `d` and the products of the degree `d-1` part with
/// arrows on either side. Row reduction with the larger paths as pivots
/// gives the normal forms, so the surviving basis is the set of paths that
/// are not leading terms.
pub fn build_algebra(name: &str, quiver: Quiver, relations: Vec<Relation>, guard: usize) -> Result<FDAlgebra> {
    for r in &relations {
        r.validate(&quiver)?;
    }
    let nv = quiver.num_vertices();
    let mut basis: Vec<Path> = (0..nv).map(Path::trivial).collect();
    let mut nf: HashMap<Path, Vec<(usize, Q)>> = HashMap::new();
    // generators of the ideal in the previous degree, over paths
    let mut prev_gens: Vec<HashMap<Path, Q>> = Vec::new();
    let mut prev_paths: Vec<Path> = (0..nv).map(Path::trivial).collect();
    let mut nf_paths: Vec<(Path, Vec<(Path, Q)>)> = Vec::new();
    let mut top = 0usize;
    let mut d = 1usize;
    loop {
        let paths = if d == 1 {
            (0..quiver.arrows.len()).map(|a| Path::arrow(&quiver, a)).collect::<Vec<_>>()
        } else {
            paths_extend(&quiver, &prev_paths)
        };
        if paths.len() > MAX_PATHS_PER_DEGREE {
            return Err(Error::Guard(format!(
                "{} paths of length {d} exceed the enumeration limit",
                paths.len()
            )));
        }
        if paths.is_empty() {
            break;
        }
        let mut cols = paths.clone();
        cols.sort_by(|a, b| b.cmp_order(a));
        let col_of: HashMap<&Path, usize> = cols.iter().enumerate().map(|(i, p)| (p, i)).collect();
        let mut gens: Vec<HashMap<Path, Q>> = Vec::new();
        for g in &prev_gens {
            for ai in 0..quiver.arrows.len() {
                let ap = Path::arrow(&quiver, ai);
                for left in [true, false] {
                    let mut h: HashMap<Path, Q> = HashMap::new();
                    for (p, c) in g {
                        let comp = if left { ap.compose(p) } else { p.compose(&ap) };
                        if let Some(pp) = comp {
                            *h.entry(pp).or_insert_with(Q::zero) += c;
                        }
                    }
                    h.retain(|_, c| !c.is_zero());
                    if !h.is_empty() {
                        gens.push(h);
                    }
                }
            }
        }
        for r in relations.iter().filter(|r| r.degree() == d) {
            gens.push(r.terms.iter().map(|(c, p)| (p.clone(), c.clone())).collect());
        }
        let mut m = Mat::zeros(gens.len(), cols.len());
        for (ri, g) in gens.iter().enumerate() {
            for (p, c) in g {
                m.add_at(ri, col_of[p], c);
            }
        }
        let (rr, pivots) = m.rref();
        let mut is_pivot = vec![false; cols.len()];
        for &p in &pivots {
            is_pivot[p] = true;
        }
        let free: Vec<usize> = (0..cols.len()).filter(|&c| !is_pivot[c]).collect();
        if free.is_empty() {
            break;
        }
        if d >= guard {
            return Err(Error::NonAdmissible(format!(
                "quotient is nonzero in degree {d} (guard {guard}); irreducible path {}",
                cols[free[0]].render(&quiver)
            )));
        }
        let mut new_gens = Vec::new();
        for (row, &pc) in pivots.iter().enumerate() {
            let mut tail = Vec::new();
            let mut g: HashMap<Path, Q> = HashMap::new();
            g.insert(cols[pc].clone(), Q::one());
            for &fc in &free {
                let x = rr.get(row, fc);
                if !x.is_zero() {
                    tail.push((cols[fc].clone(), -x.clone()));
                    g.insert(cols[fc].clone(), x.clone());
                }
            }
            nf_paths.push((cols[pc].clone(), tail));
            new_gens.push(g);
        }
        for &fc in &free {
            basis.push(cols[fc].clone());
        }
        top = d;
        prev_gens = new_gens;
        prev_paths = paths;
        d += 1;
    }
    basis.sort_by(|a, b| a.cmp_order(b));
    let index: HashMap<Path, usize> = basis.iter().enumerate().map(|(i, p)| (p.clone(), i)).collect();
    for (p, tail) in nf_paths {
        nf.insert(p, tail.into_iter().map(|(b, c)| (index[&b], c)).collect());
    }
    let mut alg = FDAlgebra {
        name: name.to_string(),
        quiver,
        relations,
        basis,
        index,
        nf,
        top_degree: top,
        mult: Vec::new(),
    };
    let n = alg.dim();
    let mut mult = Vec::with_capacity(n * n);
    for i in 0..n {
        for j in 0..n {
            mult.push(match alg.basis[i].compose(&alg.basis[j]) {
                Some(p) => alg.reduce_path(&p),
                None => AElem::zero(),
            });
        }
    }
    alg.mult = mult;
    Ok(alg)
}
