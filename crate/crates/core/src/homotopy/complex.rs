//! Bounded complexes of graded projective modules.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use num::{One, Zero};

use crate::error::{Error, Result};
use crate::linalg::Q;
use crate::path_algebra::{AElem, FDAlgebra};

/// The shifted indecomposable projective `P(vertex)<shift>`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Summand {
    pub vertex: usize,
    pub shift: i32,
}

impl Summand {
    pub fn new(vertex: usize, shift: i32) -> Self {
        Summand { vertex, shift }
    }

    pub fn render(&self, alg: &FDAlgebra) -> String {
        if self.shift == 0 {
            format!("P({})", alg.vertex_label(self.vertex))
        } else {
            format!("P({})<{}>", alg.vertex_label(self.vertex), self.shift)
        }
    }
}

/// Matrix of algebra elements; entry `(r, c)` is left multiplication
/// `P(v_c)<a_c> -> P(w_r)<b_r>` by an element of `1_{w_r} A 1_{v_c}`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct PMat {
    rows: usize,
    cols: usize,
    data: Vec<AElem>,
}

impl fmt::Debug for PMat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "PMat {}x{} [", self.rows, self.cols)?;
        for r in 0..self.rows {
            let row: Vec<String> = (0..self.cols).map(|c| format!("{:?}", self.get(r, c))).collect();
            write!(f, "[{}]", row.join(", "))?;
        }
        write!(f, "]")
    }
}

impl PMat {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        PMat { rows, cols, data: vec![AElem::zero(); rows * cols] }
    }

    /// Identity between equal summand lists.
    pub fn identity(alg: &FDAlgebra, terms: &[Summand]) -> Self {
        let mut m = Self::zeros(terms.len(), terms.len());
        for (i, s) in terms.iter().enumerate() {
            m.set(i, i, AElem::basis(alg.idempotent(s.vertex)));
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &AElem {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, x: AElem) {
        self.data[r * self.cols + c] = x;
    }

    pub fn add_at(&mut self, r: usize, c: usize, x: &AElem) {
        let i = r * self.cols + c;
        self.data[i] = self.data[i].add(x);
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|x| x.is_zero())
    }

    /// `self * other`: apply `other` first.
    pub fn mul(&self, alg: &FDAlgebra, other: &PMat) -> PMat {
        assert_eq!(self.cols, other.rows, "PMat dimension mismatch");
        let mut out = PMat::zeros(self.rows, other.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(r, k);
                if a.is_zero() {
                    continue;
                }
                for c in 0..other.cols {
                    let b = other.get(k, c);
                    if !b.is_zero() {
                        let p = alg.mul(a, b);
                        out.add_at(r, c, &p);
                    }
                }
            }
        }
        out
    }

    pub fn add(&self, other: &PMat) -> PMat {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        PMat { rows: self.rows, cols: self.cols, data: self.data.iter().zip(&other.data).map(|(a, b)| a.add(b)).collect() }
    }

    pub fn sub(&self, other: &PMat) -> PMat {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        PMat { rows: self.rows, cols: self.cols, data: self.data.iter().zip(&other.data).map(|(a, b)| a.sub(b)).collect() }
    }

    pub fn scale(&self, c: &Q) -> PMat {
        PMat { rows: self.rows, cols: self.cols, data: self.data.iter().map(|a| a.scale(c)).collect() }
    }

    pub fn neg(&self) -> PMat {
        self.scale(&-Q::one())
    }

    pub fn submatrix(&self, rows: &[usize], cols: &[usize]) -> PMat {
        let mut m = PMat::zeros(rows.len(), cols.len());
        for (i, &r) in rows.iter().enumerate() {
            for (j, &c) in cols.iter().enumerate() {
                m.set(i, j, self.get(r, c).clone());
            }
        }
        m
    }

    /// Write `block` with its top-left corner at `(r0, c0)`.
    pub fn put(&mut self, r0: usize, c0: usize, block: &PMat) {
        for r in 0..block.rows {
            for c in 0..block.cols {
                self.set(r0 + r, c0 + c, block.get(r, c).clone());
            }
        }
    }

    /// Block diagonal sum.
    pub fn block_diag(a: &PMat, b: &PMat) -> PMat {
        let mut m = PMat::zeros(a.rows + b.rows, a.cols + b.cols);
        m.put(0, 0, a);
        m.put(a.rows, a.cols, b);
        m
    }

    /// Check that each entry has the degree forced by the summand shifts.
    pub fn check_degrees(&self, alg: &FDAlgebra, cod: &[Summand], dom: &[Summand], internal: i32) -> Result<()> {
        for (r, w) in cod.iter().enumerate() {
            for (c, v) in dom.iter().enumerate() {
                let x = self.get(r, c);
                if x.is_zero() {
                    continue;
                }
                let want = internal + v.shift - w.shift;
                for (i, _) in x.terms() {
                    let p = alg.basis_path(i);
                    if p.target != w.vertex || p.source != v.vertex || p.degree() as i32 != want {
                        return Err(Error::Invalid(format!(
                            "entry ({r}, {c}) = {} does not lie in degree {want} of 1_{} A 1_{}",
                            alg.render_elem(x),
                            alg.vertex_label(w.vertex),
                            alg.vertex_label(v.vertex)
                        )));
                    }
                }
            }
        }
        Ok(())
    }
}

/// A bounded complex `X_j` with `d_j: X_j -> X_{j-1}`.
#[derive(Clone)]
pub struct Complex {
    alg: Arc<FDAlgebra>,
    terms: BTreeMap<i32, Vec<Summand>>,
    // diffs[j] = d_j : X_j -> X_{j-1}
    diffs: BTreeMap<i32, PMat>,
}

impl fmt::Debug for Complex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.render())
    }
}

impl Complex {
    pub fn zero(alg: &Arc<FDAlgebra>) -> Self {
        Complex { alg: alg.clone(), terms: BTreeMap::new(), diffs: BTreeMap::new() }
    }

    /// Build from terms and differentials, dropping empty terms and zero maps.
    pub fn from_parts(alg: &Arc<FDAlgebra>, terms: BTreeMap<i32, Vec<Summand>>, diffs: BTreeMap<i32, PMat>) -> Self {
        let mut c = Complex { alg: alg.clone(), terms, diffs };
        c.normalize();
        c
    }

    fn normalize(&mut self) {
        self.terms.retain(|_, t| !t.is_empty());
        let terms = &self.terms;
        self.diffs.retain(|j, d| {
            terms.contains_key(j) && terms.contains_key(&(j - 1)) && !d.is_zero()
        });
    }

    /// A single projective sum placed in degree `j`.
    pub fn concentrated(alg: &Arc<FDAlgebra>, j: i32, summands: Vec<Summand>) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(j, summands);
        Self::from_parts(alg, terms, BTreeMap::new())
    }

    pub fn projective(alg: &Arc<FDAlgebra>, v: usize) -> Self {
        Self::concentrated(alg, 0, vec![Summand::new(v, 0)])
    }

    pub fn alg(&self) -> &Arc<FDAlgebra> {
        &self.alg
    }

    pub fn term(&self, j: i32) -> &[Summand] {
        self.terms.get(&j).map_or(&[], |t| t.as_slice())
    }

    pub fn terms(&self) -> &BTreeMap<i32, Vec<Summand>> {
        &self.terms
    }

    /// `d_j: X_j -> X_{j-1}` (a zero matrix when absent).
    pub fn diff(&self, j: i32) -> PMat {
        self.diffs.get(&j).cloned().unwrap_or_else(|| PMat::zeros(self.term(j - 1).len(), self.term(j).len()))
    }

    pub fn diff_ref(&self, j: i32) -> Option<&PMat> {
        self.diffs.get(&j)
    }

    pub fn degrees(&self) -> Vec<i32> {
        self.terms.keys().copied().collect()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn min_degree(&self) -> Option<i32> {
        self.terms.keys().next().copied()
    }

    pub fn max_degree(&self) -> Option<i32> {
        self.terms.keys().next_back().copied()
    }

    /// Total number of indecomposable summands.
    pub fn size(&self) -> usize {
        self.terms.values().map(|t| t.len()).sum()
    }

    /// Check degrees of all entries and `d^2 = 0`.
    pub fn validate(&self) -> Result<()> {
        for (&j, d) in &self.diffs {
            if d.rows() != self.term(j - 1).len() || d.cols() != self.term(j).len() {
                return Err(Error::Invalid(format!("d_{j} has the wrong size")));
            }
            d.check_degrees(&self.alg, self.term(j - 1), self.term(j), 0)?;
        }
        for &j in self.diffs.keys() {
            if let Some(d2) = self.diffs.get(&(j - 1)) {
                if !d2.mul(&self.alg, &self.diffs[&j]).is_zero() {
                    return Err(Error::Invalid(format!("d_{} d_{j} != 0", j - 1)));
                }
            }
        }
        Ok(())
    }

    /// `X⟦k⟧_j = X_{j+k}`, differentials times `(-1)^k`.
    pub fn shift(&self, k: i32) -> Complex {
        let sign = if k.rem_euclid(2) == 1 { -Q::one() } else { Q::one() };
        let terms = self.terms.iter().map(|(j, t)| (j - k, t.clone())).collect();
        let diffs = self.diffs.iter().map(|(j, d)| (j - k, d.scale(&sign))).collect();
        Complex { alg: self.alg.clone(), terms, diffs }
    }

    /// Internal grading shift `X<i>`.
    pub fn grade_shift(&self, i: i32) -> Complex {
        let terms = self
            .terms
            .iter()
            .map(|(j, t)| (*j, t.iter().map(|s| Summand::new(s.vertex, s.shift + i)).collect()))
            .collect();
        Complex { alg: self.alg.clone(), terms, diffs: self.diffs.clone() }
    }

    pub fn direct_sum(&self, other: &Complex) -> Complex {
        let mut terms = BTreeMap::new();
        let mut diffs = BTreeMap::new();
        let degs: std::collections::BTreeSet<i32> = self.terms.keys().chain(other.terms.keys()).copied().collect();
        for &j in &degs {
            let mut t = self.term(j).to_vec();
            t.extend_from_slice(other.term(j));
            terms.insert(j, t);
            diffs.insert(j, PMat::block_diag(&self.diff(j), &other.diff(j)));
        }
        Complex::from_parts(&self.alg, terms, diffs)
    }

    /// Compact ungraded rendering, e.g. `{ [1] P(e) -> [0] P(s) }`.
    pub fn render_compact(&self) -> String {
        if self.terms.is_empty() {
            return "{ 0 }".into();
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .rev()
            .map(|(j, t)| {
                let names: Vec<String> =
                    t.iter().map(|s| format!("P({})", self.alg.vertex_label(s.vertex))).collect();
                format!("[{j}] {}", names.join(" ⊕ "))
            })
            .collect();
        format!("{{ {} }}", parts.join(" -> "))
    }

    /// One line per homological degree, highest first, e.g. `[1] P(s)<2> ⊕ P(e)`.
    pub fn render(&self) -> String {
        if self.terms.is_empty() {
            return "0".into();
        }
        self.terms
            .iter()
            .rev()
            .map(|(j, t)| {
                let names: Vec<String> = t.iter().map(|s| s.render(&self.alg)).collect();
                format!("[{j}] {}", names.join(" ⊕ "))
            })
            .collect::<Vec<_>>()
            .join("\n")
    }

    /// Differentials rendered entry by entry.
    pub fn render_with_maps(&self) -> String {
        let mut out = self.render();
        for (j, d) in &self.diffs {
            out.push_str(&format!("\nd_{j}:"));
            for r in 0..d.rows() {
                let row: Vec<String> = (0..d.cols()).map(|c| self.alg.render_elem(d.get(r, c))).collect();
                out.push_str(&format!("\n  [{}]", row.join(", ")));
            }
        }
        out
    }

    /// Multiset of `(degree, summand)` pairs.
    pub fn summand_multiset(&self) -> Vec<(i32, Summand)> {
        let mut v: Vec<(i32, Summand)> =
            self.terms.iter().flat_map(|(j, t)| t.iter().map(move |s| (*j, *s))).collect();
        v.sort();
        v
    }

    /// Ungraded multiset `(degree, vertex)`.
    pub fn ungraded_multiset(&self) -> Vec<(i32, usize)> {
        let mut v: Vec<(i32, usize)> =
            self.terms.iter().flat_map(|(j, t)| t.iter().map(move |s| (*j, s.vertex))).collect();
        v.sort();
        v
    }
}

/// A morphism of complexes `f_k: X_k -> Y_{k - hdeg}` of internal degree `internal`.
#[derive(Clone, Debug)]
pub struct ChainMap {
    pub dom: Complex,
    pub cod: Complex,
    pub hdeg: i32,
    pub internal: i32,
    pub comps: BTreeMap<i32, PMat>,
}

impl ChainMap {
    pub fn zero(dom: &Complex, cod: &Complex, hdeg: i32, internal: i32) -> Self {
        ChainMap { dom: dom.clone(), cod: cod.clone(), hdeg, internal, comps: BTreeMap::new() }
    }

    pub fn identity(x: &Complex) -> Self {
        let comps = x.terms.iter().map(|(j, t)| (*j, PMat::identity(&x.alg, t))).collect();
        ChainMap { dom: x.clone(), cod: x.clone(), hdeg: 0, internal: 0, comps }
    }

    /// Component `X_k -> Y_{k - hdeg}`.
    pub fn comp(&self, k: i32) -> PMat {
        self.comps
            .get(&k)
            .cloned()
            .unwrap_or_else(|| PMat::zeros(self.cod.term(k - self.hdeg).len(), self.dom.term(k).len()))
    }

    /// `d_Y f - (-1)^hdeg f d_X`, as components indexed by source degree.
    pub fn boundary(&self) -> BTreeMap<i32, PMat> {
        let alg = self.dom.alg().clone();
        let sign = if self.hdeg.rem_euclid(2) == 1 { -Q::one() } else { Q::one() };
        let mut out = BTreeMap::new();
        for &k in self.dom.terms.keys() {
            let a = self.cod.diff(k - self.hdeg).mul(&alg, &self.comp(k));
            let b = self.comp(k - 1).mul(&alg, &self.dom.diff(k)).scale(&sign);
            let r = a.sub(&b);
            if !r.is_zero() {
                out.insert(k, r);
            }
        }
        out
    }

    pub fn is_chain_map(&self) -> bool {
        self.boundary().is_empty()
    }

    pub fn validate(&self) -> Result<()> {
        for (&k, m) in &self.comps {
            m.check_degrees(self.dom.alg(), self.cod.term(k - self.hdeg), self.dom.term(k), self.internal)?;
        }
        if !self.is_chain_map() {
            return Err(Error::Invalid("map does not commute with the differentials".into()));
        }
        Ok(())
    }

    /// `self ∘ g`.
    pub fn compose(&self, g: &ChainMap) -> ChainMap {
        let alg = self.dom.alg().clone();
        let mut comps = BTreeMap::new();
        for &k in g.dom.terms.keys() {
            let m = self.comp(k - g.hdeg).mul(&alg, &g.comp(k));
            if !m.is_zero() {
                comps.insert(k, m);
            }
        }
        ChainMap { dom: g.dom.clone(), cod: self.cod.clone(), hdeg: self.hdeg + g.hdeg, internal: self.internal + g.internal, comps }
    }

    pub fn is_zero(&self) -> bool {
        self.comps.values().all(|m| m.is_zero())
    }
}

/// `cone(f: X -> Y)_j = Y_j ⊕ X_{j-1}` with `d = [[d_Y, f], [0, -d_X]]`.
pub fn cone(f: &ChainMap) -> Result<Complex> {
    if f.hdeg != 0 || f.internal != 0 {
        return Err(Error::Invalid("cone needs a chain map of degree (0, 0)".into()));
    }
    let (x, y) = (&f.dom, &f.cod);
    let alg = x.alg().clone();
    let mut degs: Vec<i32> = y.terms.keys().copied().collect();
    degs.extend(x.terms.keys().map(|j| j + 1));
    degs.sort_unstable();
    degs.dedup();
    let mut terms = BTreeMap::new();
    let mut diffs = BTreeMap::new();
    for &j in &degs {
        let mut t = y.term(j).to_vec();
        t.extend_from_slice(x.term(j - 1));
        terms.insert(j, t);
    }
    for &j in &degs {
        let (ny1, nx2) = (y.term(j - 1).len(), x.term(j - 2).len());
        let (ny, nx1) = (y.term(j).len(), x.term(j - 1).len());
        let mut d = PMat::zeros(ny1 + nx2, ny + nx1);
        d.put(0, 0, &y.diff(j));
        d.put(0, ny, &f.comp(j - 1));
        d.put(ny1, ny, &x.diff(j - 1).neg());
        diffs.insert(j, d);
    }
    Ok(Complex::from_parts(&alg, terms, diffs))
}

/// `cocone(f) = cone(f)⟦1⟧`.
pub fn cocone(f: &ChainMap) -> Result<Complex> {
    Ok(cone(f)?.shift(1))
}

/// Graded Euler characteristic: `vertex -> (shift -> signed count)`.
pub fn euler_characteristic(x: &Complex) -> BTreeMap<(usize, i32), i64> {
    let mut out: BTreeMap<(usize, i32), i64> = BTreeMap::new();
    for (j, t) in &x.terms {
        let sign = if j.rem_euclid(2) == 0 { 1 } else { -1 };
        for s in t {
            *out.entry((s.vertex, s.shift)).or_insert(0) += sign;
        }
    }
    out.retain(|_, v| *v != 0);
    out
}

pub(crate) fn is_scalar_iso_entry(alg: &FDAlgebra, x: &AElem, from: &Summand, to: &Summand) -> Option<Q> {
    if from != to {
        return None;
    }
    let (i, c) = x.as_single()?;
    if i == alg.idempotent(from.vertex) && !c.is_zero() {
        Some(c.clone())
    } else {
        None
    }
}
