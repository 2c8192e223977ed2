//! Multicomplexes of projectives and their ⊕-total complexes.

use std::collections::BTreeMap;
use std::sync::Arc;

use num::One;

use super::complex::{ChainMap, Complex, PMat, Summand};
use crate::error::{Error, Result};
use crate::linalg::Q;
use crate::path_algebra::FDAlgebra;

/// A finitely supported grid of projective sums with one face map per
/// direction; face `i` at `idx` maps cell `idx` to `idx - e_i`.
///
/// Faces square to zero and commute; the cell at the zero index lands in
/// total degree 0, and direction `i` carries the sign `(-1)^(idx_0 + ... + idx_{i-1})`.
#[derive(Clone, Debug)]
pub struct MultiComplex {
    alg: Arc<FDAlgebra>,
    rank: usize,
    cells: BTreeMap<Vec<i32>, Vec<Summand>>,
    faces: BTreeMap<(usize, Vec<i32>), PMat>,
}

fn minus(idx: &[i32], i: usize) -> Vec<i32> {
    let mut t = idx.to_vec();
    t[i] -= 1;
    t
}

impl MultiComplex {
    pub fn new(alg: &Arc<FDAlgebra>, rank: usize) -> Self {
        MultiComplex { alg: alg.clone(), rank, cells: BTreeMap::new(), faces: BTreeMap::new() }
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn alg(&self) -> &Arc<FDAlgebra> {
        &self.alg
    }

    pub fn set_cell(&mut self, idx: Vec<i32>, summands: Vec<Summand>) {
        assert_eq!(idx.len(), self.rank, "cell index has the wrong rank");
        self.cells.insert(idx, summands);
    }

    pub fn set_face(&mut self, dir: usize, idx: Vec<i32>, m: PMat) {
        assert!(dir < self.rank && idx.len() == self.rank, "face index has the wrong rank");
        self.faces.insert((dir, idx), m);
    }

    pub fn cell(&self, idx: &[i32]) -> &[Summand] {
        self.cells.get(idx).map_or(&[], |t| t.as_slice())
    }

    pub fn cells(&self) -> &BTreeMap<Vec<i32>, Vec<Summand>> {
        &self.cells
    }

    pub fn face(&self, dir: usize, idx: &[i32]) -> PMat {
        self.faces
            .get(&(dir, idx.to_vec()))
            .cloned()
            .unwrap_or_else(|| PMat::zeros(self.cell(&minus(idx, dir)).len(), self.cell(idx).len()))
    }

    /// A complex as a rank-1 multicomplex.
    pub fn from_complex(x: &Complex) -> Self {
        let mut m = MultiComplex::new(x.alg(), 1);
        for (&j, t) in x.terms() {
            m.set_cell(vec![j], t.clone());
            if let Some(d) = x.diff_ref(j) {
                m.set_face(0, vec![j], d.clone());
            }
        }
        m
    }

    /// A row of complexes `C_0 <- C_1 <- ...` joined by degree-(0, 0) chain maps
    /// `maps[p - 1]: C_p -> C_{p-1}`; cell `(p, q)` is `(C_p)_q`.
    pub fn from_row(cols: &[Complex], maps: &[ChainMap]) -> Result<Self> {
        let Some(first) = cols.first() else {
            return Err(Error::Invalid("a row needs at least one complex".into()));
        };
        if maps.len() + 1 != cols.len() {
            return Err(Error::Invalid("a row of n complexes needs n - 1 maps".into()));
        }
        let mut m = MultiComplex::new(first.alg(), 2);
        for (p, c) in cols.iter().enumerate() {
            let p = p as i32;
            for (&q, t) in c.terms() {
                m.set_cell(vec![p, q], t.clone());
                if let Some(d) = c.diff_ref(q) {
                    m.set_face(1, vec![p, q], d.clone());
                }
            }
        }
        for (k, f) in maps.iter().enumerate() {
            if f.hdeg != 0 || f.internal != 0 {
                return Err(Error::Invalid("row maps must have degree (0, 0)".into()));
            }
            for (&q, comp) in &f.comps {
                m.set_face(0, vec![k as i32 + 1, q], comp.clone());
            }
        }
        m.validate()?;
        Ok(m)
    }

    /// The two-column multicomplex of `f: X -> Y`, whose total complex is `cone(f)`.
    pub fn from_map(f: &ChainMap) -> Result<Self> {
        Self::from_row(&[f.cod.clone(), f.dom.clone()], std::slice::from_ref(f))
    }

    pub fn validate(&self) -> Result<()> {
        for idx in self.cells.keys() {
            for i in 0..self.rank {
                let di = self.face(i, idx);
                for k in i..self.rank {
                    let t = minus(idx, i);
                    let a = self.face(k, &t).mul(&self.alg, &di);
                    let b = if k == i {
                        PMat::zeros(a.rows(), a.cols())
                    } else {
                        let dk = self.face(k, idx);
                        self.face(i, &minus(idx, k)).mul(&self.alg, &dk)
                    };
                    if a != b {
                        let what = if k == i { "does not square to zero" } else { "does not commute" };
                        return Err(Error::Invalid(format!("face {i} at {idx:?} {what} (with face {k})")));
                    }
                }
                self.face(i, idx).check_degrees(&self.alg, self.cell(&minus(idx, i)), self.cell(idx), 0)?;
            }
        }
        Ok(())
    }

    fn sign(idx: &[i32], dir: usize) -> Q {
        let s: i32 = idx[..dir].iter().sum();
        if s.rem_euclid(2) == 1 {
            -Q::one()
        } else {
            Q::one()
        }
    }

    /// Merge directions `dir` and `dir + 1` into one.
    pub fn collapse(&self, dir: usize) -> Result<MultiComplex> {
        if dir + 1 >= self.rank {
            return Err(Error::Invalid(format!("cannot collapse direction {dir} of a rank-{} grid", self.rank)));
        }
        let squash = |idx: &[i32]| -> Vec<i32> {
            let mut t = idx[..dir].to_vec();
            t.push(idx[dir] + idx[dir + 1]);
            t.extend_from_slice(&idx[dir + 2..]);
            t
        };
        // new cell -> list of (old index, offset)
        let mut groups: BTreeMap<Vec<i32>, Vec<(Vec<i32>, usize)>> = BTreeMap::new();
        let mut cells: BTreeMap<Vec<i32>, Vec<Summand>> = BTreeMap::new();
        for (idx, t) in &self.cells {
            let n = squash(idx);
            let cell = cells.entry(n.clone()).or_default();
            groups.entry(n).or_default().push((idx.clone(), cell.len()));
            cell.extend_from_slice(t);
        }
        let offset_of = |old: &[i32]| -> Option<usize> {
            groups.get(&squash(old))?.iter().find(|(o, _)| o == old).map(|(_, off)| *off)
        };
        let mut out = MultiComplex { alg: self.alg.clone(), rank: self.rank - 1, cells: cells.clone(), faces: BTreeMap::new() };
        for idx in self.cells.keys() {
            let src = squash(idx);
            let soff = offset_of(idx).expect("cell is grouped");
            for i in 0..self.rank {
                let f = self.face(i, idx);
                if f.is_zero() {
                    continue;
                }
                let t = minus(idx, i);
                let toff = offset_of(&t).expect("target cell exists for a nonzero face");
                let (ndir, sgn) = if i < dir {
                    (i, Q::one())
                } else if i == dir {
                    (dir, Q::one())
                } else if i == dir + 1 {
                    (dir, Self::sign(&idx[dir..], 1))
                } else {
                    (i - 1, Q::one())
                };
                let tgt = squash(&t);
                let entry = out
                    .faces
                    .entry((ndir, src.clone()))
                    .or_insert_with(|| PMat::zeros(cells[&tgt].len(), cells[&src].len()));
                let mut placed = PMat::zeros(entry.rows(), entry.cols());
                placed.put(toff, soff, &f.scale(&sgn));
                *entry = entry.add(&placed);
            }
        }
        Ok(out)
    }

    /// The ⊕-total complex.
    pub fn total(&self) -> Complex {
        let mut terms: BTreeMap<i32, Vec<Summand>> = BTreeMap::new();
        let mut offset: BTreeMap<&Vec<i32>, usize> = BTreeMap::new();
        for (idx, t) in &self.cells {
            let n: i32 = idx.iter().sum();
            let term = terms.entry(n).or_default();
            offset.insert(idx, term.len());
            term.extend_from_slice(t);
        }
        let mut diffs: BTreeMap<i32, PMat> = BTreeMap::new();
        for idx in self.cells.keys() {
            let n: i32 = idx.iter().sum();
            for i in 0..self.rank {
                let f = self.face(i, idx);
                if f.is_zero() {
                    continue;
                }
                let t = minus(idx, i);
                let d = diffs
                    .entry(n)
                    .or_insert_with(|| PMat::zeros(terms.get(&(n - 1)).map_or(0, |t| t.len()), terms[&n].len()));
                let mut placed = PMat::zeros(d.rows(), d.cols());
                placed.put(offset[&t], offset[idx], &f.scale(&Self::sign(idx, i)));
                *d = d.add(&placed);
            }
        }
        Complex::from_parts(&self.alg, terms, diffs)
    }
}

/// The ⊕-total complex of `m`.
pub fn total(m: &MultiComplex) -> Complex {
    m.total()
}
