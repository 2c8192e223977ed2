//! Kazhdan-Lusztig polynomials and the `C` basis.

use std::collections::HashMap;

use num::Zero;

use super::hecke::{HeckeBasis, HeckeElem};
use super::laurent::LaurentPoly;
use super::perm::Perm;
use crate::error::{Error, Result};
use crate::linalg::Q;

pub const KL_MAX_RANK: usize = 6;

/// All polynomials `p_{xw}` in `q` for `S_n`.
#[derive(Clone, Debug)]
pub struct KLTable {
    n: usize,
    perms: Vec<Perm>,
    index: HashMap<Perm, usize>,
    // entries[w][x]
    entries: Vec<Vec<LaurentPoly>>,
}

impl KLTable {
    pub fn new(n: usize) -> Result<Self> {
        if n == 0 || n > KL_MAX_RANK {
            return Err(Error::Guard(format!(
                "KL tables are computed for 1 <= n <= {KL_MAX_RANK}, got n = {n}"
            )));
        }
        let perms = Perm::all(n);
        let index: HashMap<Perm, usize> =
            perms.iter().enumerate().map(|(i, p)| (p.clone(), i)).collect();
        let m = perms.len();
        let lens: Vec<usize> = perms.iter().map(|p| p.length()).collect();
        let mut leq = vec![vec![false; m]; m];
        for (i, x) in perms.iter().enumerate() {
            for (j, w) in perms.iter().enumerate() {
                leq[i][j] = lens[i] <= lens[j] && x.bruhat_leq(w).expect("same rank");
            }
        }
        let mut entries: Vec<Vec<LaurentPoly>> = vec![Vec::new(); m];
        // `perms` is sorted by length, so every shorter column is ready.
        for (wi, w) in perms.iter().enumerate() {
            let mut col = vec![LaurentPoly::zero(); m];
            if lens[wi] == 0 {
                col[wi] = LaurentPoly::one();
                entries[wi] = col;
                continue;
            }
            let s = (1..n).find(|&i| w.has_right_descent(i)).expect("nonidentity has a descent");
            let v = w.mul_simple_right(s);
            let vi = index[&v];
            // mu(z, v) for z < v with zs < z
            let mut mus: Vec<(usize, Q)> = Vec::new();
            for (zi, z) in perms.iter().enumerate() {
                if zi == vi || !leq[zi][vi] || !z.has_right_descent(s) {
                    continue;
                }
                let diff = lens[vi] - lens[zi];
                if diff % 2 == 1 {
                    let c = entries[vi][zi].coeff(((diff - 1) / 2) as i32);
                    if !c.is_zero() {
                        mus.push((zi, c));
                    }
                }
            }
            for (xi, x) in perms.iter().enumerate() {
                if !leq[xi][wi] {
                    continue;
                }
                let xs = index[&x.mul_simple_right(s)];
                let c = i32::from(x.has_right_descent(s));
                let mut p = &entries[vi][xs].shift(1 - c) + &entries[vi][xi].shift(c);
                for (zi, mu) in &mus {
                    let pz = &entries[*zi][xi];
                    if pz.is_zero() {
                        continue;
                    }
                    let e = ((lens[wi] - lens[*zi]) / 2) as i32;
                    p = &p - &pz.shift(e).scale(mu);
                }
                col[xi] = p;
            }
            entries[wi] = col;
        }
        Ok(KLTable { n, perms, index, entries })
    }

    pub fn rank(&self) -> usize {
        self.n
    }

    pub fn perms(&self) -> &[Perm] {
        &self.perms
    }

    /// `p_{xw}` as a polynomial in `q`; zero unless `x <= w`.
    pub fn get(&self, x: &Perm, w: &Perm) -> Result<LaurentPoly> {
        let (Some(&xi), Some(&wi)) = (self.index.get(x), self.index.get(w)) else {
            return Err(Error::Invalid(format!("permutations must lie in S{}", self.n)));
        };
        Ok(self.entries[wi][xi].clone())
    }

    /// `C_w = sum_x v^{l(w)-l(x)} p_{xw}(v^-2) H_x`.
    pub fn c_basis(&self, w: &Perm) -> Result<HeckeElem> {
        let wi = *self
            .index
            .get(w)
            .ok_or_else(|| Error::Invalid(format!("permutation must lie in S{}", self.n)))?;
        let lw = w.length() as i32;
        let mut out = HeckeElem::zero(self.n, HeckeBasis::H);
        for (xi, x) in self.perms.iter().enumerate() {
            let p = &self.entries[wi][xi];
            if p.is_zero() {
                continue;
            }
            out.add_term(x, &p.substitute_pow(-2).shift(lw - x.length() as i32));
        }
        Ok(out)
    }
}

pub fn kl_polynomial(v: &Perm, w: &Perm) -> Result<LaurentPoly> {
    if v.rank() != w.rank() {
        return Err(Error::Invalid(format!("rank mismatch: S{} vs S{}", v.rank(), w.rank())));
    }
    KLTable::new(v.rank())?.get(v, w)
}

pub fn c_basis(w: &Perm) -> Result<HeckeElem> {
    KLTable::new(w.rank())?.c_basis(w)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn s4_nontrivial_polynomial() {
        let x = Perm::parse_word(4, "s2").unwrap();
        let w = Perm::parse_word(4, "s2*s1*s3*s2").unwrap();
        assert_eq!(kl_polynomial(&x, &w).unwrap(), LaurentPoly::from_pairs(&[(0, 1), (1, 1)]));
    }

    #[test]
    fn guard() {
        assert!(KLTable::new(7).is_err());
    }
}
