//! The Iwahori-Hecke algebra of the symmetric group in the standard basis.

use std::collections::BTreeMap;
use std::fmt;

use super::laurent::LaurentPoly;
use super::perm::Perm;
use crate::error::{Error, Result};
use crate::linalg::q;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum HeckeBasis {
    H,
    C,
}

/// A Hecke algebra element as Laurent coefficients over `S_n`.
#[derive(Clone, PartialEq, Eq)]
pub struct HeckeElem {
    n: usize,
    basis: HeckeBasis,
    coeffs: BTreeMap<Perm, LaurentPoly>,
}

impl HeckeElem {
    pub fn zero(n: usize, basis: HeckeBasis) -> Self {
        HeckeElem { n, basis, coeffs: BTreeMap::new() }
    }

    /// The basis element `H_w` (or `C_w` when `basis` is `C`).
    pub fn basis_elem(w: &Perm, basis: HeckeBasis) -> Self {
        let mut e = Self::zero(w.rank(), basis);
        e.add_term(w, &LaurentPoly::one());
        e
    }

    pub fn h(w: &Perm) -> Self {
        Self::basis_elem(w, HeckeBasis::H)
    }

    pub fn rank(&self) -> usize {
        self.n
    }

    pub fn basis(&self) -> HeckeBasis {
        self.basis
    }

    pub fn coeff(&self, w: &Perm) -> LaurentPoly {
        self.coeffs.get(w).cloned().unwrap_or_default()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Perm, &LaurentPoly)> {
        self.coeffs.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn add_term(&mut self, w: &Perm, c: &LaurentPoly) {
        assert_eq!(w.rank(), self.n, "rank mismatch in Hecke element");
        if c.is_zero() {
            return;
        }
        let e = self.coeffs.entry(w.clone()).or_default();
        *e = &*e + c;
        if e.is_zero() {
            self.coeffs.remove(w);
        }
    }

    pub fn add(&self, other: &HeckeElem) -> Result<HeckeElem> {
        self.check_compatible(other)?;
        let mut out = self.clone();
        for (w, c) in &other.coeffs {
            out.add_term(w, c);
        }
        Ok(out)
    }

    pub fn sub(&self, other: &HeckeElem) -> Result<HeckeElem> {
        self.add(&other.scale(&LaurentPoly::monomial(0, q(-1))))
    }

    pub fn scale(&self, c: &LaurentPoly) -> HeckeElem {
        let mut out = Self::zero(self.n, self.basis);
        for (w, x) in &self.coeffs {
            out.add_term(w, &(x * c));
        }
        out
    }

    fn check_compatible(&self, other: &HeckeElem) -> Result<()> {
        if self.n != other.n {
            return Err(Error::Invalid(format!("rank mismatch: S{} vs S{}", self.n, other.n)));
        }
        if self.basis != other.basis {
            return Err(Error::Invalid(format!(
                "basis mismatch: {:?} vs {:?}",
                self.basis, other.basis
            )));
        }
        Ok(())
    }

    /// Right multiplication by `H_{s_i}` in the standard basis.
    pub fn mul_simple(&self, i: usize) -> HeckeElem {
        assert_eq!(self.basis, HeckeBasis::H);
        let mut out = Self::zero(self.n, HeckeBasis::H);
        let skew = LaurentPoly::from_pairs(&[(1, -1), (-1, 1)]);
        for (w, c) in &self.coeffs {
            let ws = w.mul_simple_right(i);
            out.add_term(&ws, c);
            if w.has_right_descent(i) {
                out.add_term(w, &(c * &skew));
            }
        }
        out
    }

    pub fn render(&self) -> String {
        if self.coeffs.is_empty() {
            return "0".to_string();
        }
        let tag = match self.basis {
            HeckeBasis::H => "H",
            HeckeBasis::C => "C",
        };
        self.coeffs
            .iter()
            .map(|(w, c)| format!("({c}){tag}[{w}]"))
            .collect::<Vec<_>>()
            .join(" + ")
    }
}

impl fmt::Display for HeckeElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.render())
    }
}

impl fmt::Debug for HeckeElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.render())
    }
}

/// Product of two elements given in the standard basis.
///
/// Uses `H_w H_s = H_{ws}` when `w < ws` and
/// `H_w H_s = H_{ws} - (v - v^-1) H_w` when `ws < w`.
pub fn hecke_mul(a: &HeckeElem, b: &HeckeElem) -> Result<HeckeElem> {
    a.check_compatible(b)?;
    if a.basis != HeckeBasis::H {
        return Err(Error::Invalid("hecke_mul expects elements in the H basis".into()));
    }
    let mut out = HeckeElem::zero(a.n, HeckeBasis::H);
    for (y, c) in &b.coeffs {
        let mut acc = a.scale(c);
        for i in y.reduced_word() {
            acc = acc.mul_simple(i);
        }
        out = out.add(&acc)?;
    }
    Ok(out)
}
