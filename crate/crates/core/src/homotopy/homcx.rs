//! Hom complexes between complexes of projectives and derived Hom.

use std::collections::{BTreeMap, HashMap};

use num::Zero;

use super::complex::{ChainMap, Complex, PMat};
use crate::linalg::{complement_in, Mat, Q};
use crate::path_algebra::AElem;

/// A bounded cochain complex of vector spaces with graded bases;
/// `d[j]: V_j -> V_{j+1}` and every basis vector carries an internal degree.
#[derive(Clone, Debug, Default)]
pub struct VSComplex {
    pub tags: BTreeMap<i32, Vec<i32>>,
    pub d: BTreeMap<i32, Mat>,
}

impl VSComplex {
    pub fn dim(&self, j: i32) -> usize {
        self.tags.get(&j).map_or(0, |t| t.len())
    }

    /// `D_j` as a `dim(j+1) x dim(j)` matrix (zero when absent).
    pub fn diff(&self, j: i32) -> Mat {
        self.d.get(&j).cloned().unwrap_or_else(|| Mat::zeros(self.dim(j + 1), self.dim(j)))
    }

    pub fn internal_degrees(&self, j: i32) -> Vec<i32> {
        let mut s: Vec<i32> = self.tags.get(&j).cloned().unwrap_or_default();
        s.sort_unstable();
        s.dedup();
        s
    }

    fn positions(&self, j: i32, s: i32) -> Vec<usize> {
        self.tags.get(&j).map_or(Vec::new(), |t| t.iter().enumerate().filter(|(_, x)| **x == s).map(|(i, _)| i).collect())
    }

    /// Cocycles `Z^{j,s}` as full vectors in `V_j`.
    pub fn cocycles(&self, j: i32, s: i32) -> Vec<Vec<Q>> {
        let pos = self.positions(j, s);
        if pos.is_empty() {
            return Vec::new();
        }
        let dj = self.diff(j);
        let rows: Vec<usize> = (0..dj.rows()).collect();
        let sub = dj.submatrix(&rows, &pos);
        let n = self.dim(j);
        sub.kernel()
            .into_iter()
            .map(|k| {
                let mut v = vec![Q::zero(); n];
                for (a, &p) in pos.iter().enumerate() {
                    v[p] = k[a].clone();
                }
                v
            })
            .collect()
    }

    /// Coboundaries `B^{j,s}` as full vectors in `V_j`.
    pub fn coboundaries(&self, j: i32, s: i32) -> Vec<Vec<Q>> {
        let pos = self.positions(j - 1, s);
        if pos.is_empty() {
            return Vec::new();
        }
        let d = self.diff(j - 1);
        let rows: Vec<usize> = (0..d.rows()).collect();
        d.submatrix(&rows, &pos).column_space()
    }

    /// Representatives of a basis of `H^{j,s}`.
    pub fn cohomology_basis(&self, j: i32, s: i32) -> Vec<Vec<Q>> {
        let z = self.cocycles(j, s);
        let b = self.coboundaries(j, s);
        complement_in(self.dim(j), &b, &z)
    }

    /// Whether the cocycle `v` of degree `j` is a coboundary.
    pub fn is_coboundary(&self, j: i32, v: &[Q]) -> bool {
        let d = self.diff(j - 1);
        if d.cols() == 0 {
            return v.iter().all(|x| x.is_zero());
        }
        d.solve(v).is_some()
    }

    /// Cohomology dimensions keyed by `(j, internal degree)`.
    pub fn cohomology_dims(&self) -> BTreeMap<(i32, i32), usize> {
        let mut out = BTreeMap::new();
        for &j in self.tags.keys() {
            for s in self.internal_degrees(j) {
                let z = self.cocycles(j, s).len();
                let b = self.coboundaries(j, s).len();
                if z > b {
                    out.insert((j, s), z - b);
                }
            }
        }
        out
    }

    /// Cohomology dimensions by `j`, summed over internal degrees.
    pub fn total_dims(&self) -> BTreeMap<i32, usize> {
        let mut out = BTreeMap::new();
        for ((j, _), d) in self.cohomology_dims() {
            *out.entry(j).or_insert(0) += d;
        }
        out
    }

    pub fn d_squared_zero(&self) -> bool {
        self.d.iter().all(|(j, dj)| match self.d.get(&(j + 1)) {
            Some(dn) => dn.mul(dj).is_zero(),
            None => true,
        })
    }
}

/// One basis map of `hom•(X, Y)`: the single entry `basis[idx]`
/// from summand `c` of `X_k` to summand `r` of `Y_{k-j}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct HomBasis {
    pub k: i32,
    pub r: usize,
    pub c: usize,
    pub idx: usize,
}

/// `hom•(X, Y)` with degree `j` maps lowering homological degree by `j`,
/// differential `d f = d_Y f - (-1)^j f d_X`.
#[derive(Clone, Debug)]
pub struct HomComplex {
    pub x: Complex,
    pub y: Complex,
    pub basis: BTreeMap<i32, Vec<HomBasis>>,
    pub vs: VSComplex,
}

impl HomComplex {
    pub fn new(x: &Complex, y: &Complex) -> Self {
        let alg = x.alg().clone();
        let mut basis: BTreeMap<i32, Vec<HomBasis>> = BTreeMap::new();
        let mut tags: BTreeMap<i32, Vec<i32>> = BTreeMap::new();
        for (&k, xt) in x.terms() {
            for (&m, yt) in y.terms() {
                let j = k - m;
                for (c, sx) in xt.iter().enumerate() {
                    for (r, sy) in yt.iter().enumerate() {
                        for idx in alg.block(sy.vertex, sx.vertex) {
                            let s = alg.degree_of(idx) as i32 - sx.shift + sy.shift;
                            basis.entry(j).or_default().push(HomBasis { k, r, c, idx });
                            tags.entry(j).or_default().push(s);
                        }
                    }
                }
            }
        }
        let mut hc = HomComplex { x: x.clone(), y: y.clone(), basis, vs: VSComplex { tags, d: BTreeMap::new() } };
        let mut d = BTreeMap::new();
        let js: Vec<i32> = hc.basis.keys().copied().collect();
        for j in js {
            let n = hc.vs.dim(j);
            let m = hc.vs.dim(j + 1);
            if m == 0 {
                continue;
            }
            let mut dj = Mat::zeros(m, n);
            for col in 0..n {
                let f = hc.basis_map(j, col);
                let bd = f.boundary();
                let v = hc.vector_of(j + 1, &bd);
                for (row, x) in v.into_iter().enumerate() {
                    if !x.is_zero() {
                        dj.set(row, col, x);
                    }
                }
            }
            if !dj.is_zero() {
                d.insert(j, dj);
            }
        }
        hc.vs.d = d;
        hc
    }

    pub fn tag(&self, j: i32, i: usize) -> i32 {
        self.vs.tags[&j][i]
    }

    fn lookup(&self, j: i32) -> HashMap<HomBasis, usize> {
        self.basis.get(&j).map_or(HashMap::new(), |bs| bs.iter().enumerate().map(|(i, b)| (*b, i)).collect())
    }

    /// The map given by one basis element.
    pub fn basis_map(&self, j: i32, i: usize) -> ChainMap {
        let b = self.basis[&j][i];
        let mut m = PMat::zeros(self.y.term(b.k - j).len(), self.x.term(b.k).len());
        m.set(b.r, b.c, AElem::basis(b.idx));
        let mut comps = BTreeMap::new();
        comps.insert(b.k, m);
        ChainMap { dom: self.x.clone(), cod: self.y.clone(), hdeg: j, internal: self.tag(j, i), comps }
    }

    /// Coordinates of a family of components (indexed by source degree) in degree `j`.
    pub fn vector_of(&self, j: i32, comps: &BTreeMap<i32, PMat>) -> Vec<Q> {
        let look = self.lookup(j);
        let mut v = vec![Q::zero(); self.vs.dim(j)];
        for (&k, m) in comps {
            for r in 0..m.rows() {
                for c in 0..m.cols() {
                    for (idx, x) in m.get(r, c).terms() {
                        let pos = look[&HomBasis { k, r, c, idx }];
                        v[pos] += x;
                    }
                }
            }
        }
        v
    }

    pub fn vector_of_map(&self, f: &ChainMap) -> Vec<Q> {
        self.vector_of(f.hdeg, &f.comps)
    }

    /// The map with coordinates `v` in degree `j`; its internal degree is
    /// taken from the first nonzero coordinate.
    pub fn map_of(&self, j: i32, v: &[Q]) -> ChainMap {
        let mut comps: BTreeMap<i32, PMat> = BTreeMap::new();
        let mut internal = 0;
        let mut seen = false;
        if let Some(bs) = self.basis.get(&j) {
            for (i, b) in bs.iter().enumerate() {
                if v[i].is_zero() {
                    continue;
                }
                if !seen {
                    internal = self.tag(j, i);
                    seen = true;
                }
                let m = comps
                    .entry(b.k)
                    .or_insert_with(|| PMat::zeros(self.y.term(b.k - j).len(), self.x.term(b.k).len()));
                m.add_at(b.r, b.c, &AElem::term(b.idx, v[i].clone()));
            }
        }
        ChainMap { dom: self.x.clone(), cod: self.y.clone(), hdeg: j, internal, comps }
    }
}

pub fn hom_complex(x: &Complex, y: &Complex) -> HomComplex {
    HomComplex::new(x, y)
}

/// Derived endomorphism data of a complex of projectives.
#[derive(Clone, Debug)]
pub struct EndRing {
    /// cohomology dims by `(j, internal degree)`
    pub graded: BTreeMap<(i32, i32), usize>,
    /// cohomology dims by `j`
    pub dims: BTreeMap<i32, usize>,
    /// `(j, internal degree)` of the non-identity generator when the total dimension is 2
    pub generator: Option<(i32, i32)>,
    /// whether `x ∘ x` is null-homotopic, when a generator exists
    pub x_squared_zero: Option<bool>,
    pub x: Option<ChainMap>,
}

pub fn derived_end_ring(e: &Complex) -> EndRing {
    let hc = hom_complex(e, e);
    let graded = hc.vs.cohomology_dims();
    let dims = hc.vs.total_dims();
    let total: usize = graded.values().sum();
    let mut generator = None;
    let mut x_squared_zero = None;
    let mut xmap = None;
    if total == 2 && graded.get(&(0, 0)) == Some(&1) {
        let other = graded.keys().find(|k| **k != (0, 0)).copied();
        if let Some((j, s)) = other {
            let reps = hc.vs.cohomology_basis(j, s);
            if let Some(v) = reps.first() {
                let x = hc.map_of(j, v);
                let xx = x.compose(&x);
                let w = hc.vector_of(2 * j, &xx.comps);
                let zero = if hc.vs.dim(2 * j) == 0 { true } else { hc.vs.is_coboundary(2 * j, &w) };
                generator = Some((j, s));
                x_squared_zero = Some(zero);
                xmap = Some(x);
            }
        }
    }
    EndRing { graded, dims, generator, x_squared_zero, x: xmap }
}
