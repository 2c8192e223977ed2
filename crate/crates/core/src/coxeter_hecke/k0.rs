//! Grothendieck group classes in the simple, standard and projective bases.

use std::fmt;

use super::hecke::HeckeElem;
use super::kl::KLTable;
use super::laurent::LaurentPoly;
use super::perm::{sigma, Perm};
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum K0Basis {
    L,
    M,
    P,
}

impl K0Basis {
    pub fn parse(s: &str) -> Result<Self> {
        match s {
            "L" => Ok(K0Basis::L),
            "M" => Ok(K0Basis::M),
            "P" => Ok(K0Basis::P),
            _ => Err(Error::Parse(format!("unknown K0 basis tag '{s}'"))),
        }
    }
}

/// A class `sum_w c_w [B(w)]` with Laurent coefficients, `v[X] = [X<1>]`.
#[derive(Clone, PartialEq, Eq)]
pub struct K0Class {
    pub labels: Vec<String>,
    pub coeffs: Vec<LaurentPoly>,
    pub basis: K0Basis,
}

impl K0Class {
    pub fn zero(labels: &[String], basis: K0Basis) -> Self {
        K0Class { labels: labels.to_vec(), coeffs: vec![LaurentPoly::zero(); labels.len()], basis }
    }

    /// `v^shift [B(label)]`.
    pub fn basis_class(labels: &[String], basis: K0Basis, label: &str, shift: i32) -> Result<Self> {
        let mut c = Self::zero(labels, basis);
        let i = c.index_of(label)?;
        c.coeffs[i] = LaurentPoly::var_pow(shift);
        Ok(c)
    }

    pub fn index_of(&self, label: &str) -> Result<usize> {
        self.labels
            .iter()
            .position(|l| l == label)
            .ok_or_else(|| Error::Invalid(format!("label '{label}' not in the index set")))
    }

    pub fn coeff(&self, label: &str) -> Result<LaurentPoly> {
        Ok(self.coeffs[self.index_of(label)?].clone())
    }

    pub fn add(&self, other: &K0Class) -> Result<K0Class> {
        if self.labels != other.labels || self.basis != other.basis {
            return Err(Error::Invalid("K0 classes over different index sets or bases".into()));
        }
        let coeffs = self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a + b).collect();
        Ok(K0Class { labels: self.labels.clone(), coeffs, basis: self.basis })
    }

    pub fn scale(&self, c: &LaurentPoly) -> K0Class {
        K0Class {
            labels: self.labels.clone(),
            coeffs: self.coeffs.iter().map(|x| x * c).collect(),
            basis: self.basis,
        }
    }
}

impl fmt::Display for K0Class {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let tag = match self.basis {
            K0Basis::L => "L",
            K0Basis::M => "M",
            K0Basis::P => "P",
        };
        let parts: Vec<String> = self
            .labels
            .iter()
            .zip(&self.coeffs)
            .filter(|(_, c)| !c.is_zero())
            .map(|(l, c)| format!("({c})[{tag}({l})]"))
            .collect();
        if parts.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", parts.join(" + "))
        }
    }
}

impl fmt::Debug for K0Class {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

type LMat = Vec<Vec<LaurentPoly>>;

/// Graded base change data for one block.
///
/// `m_in_l[w][x]` is the coefficient of `[L(x)]` in `[M(w)]` and
/// `p_in_m[w][x]` the coefficient of `[M(x)]` in `[P(w)]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct K0Tables {
    pub labels: Vec<String>,
    pub m_in_l: LMat,
    pub p_in_m: LMat,
}

fn lmat_mul(a: &LMat, b: &LMat) -> LMat {
    let n = a.len();
    let mut out = vec![vec![LaurentPoly::zero(); n]; n];
    for i in 0..n {
        for k in 0..n {
            if a[i][k].is_zero() {
                continue;
            }
            for j in 0..n {
                if !b[k][j].is_zero() {
                    out[i][j] = &out[i][j] + &(&a[i][k] * &b[k][j]);
                }
            }
        }
    }
    out
}

/// Inverse of a unitriangular matrix via the nilpotent series `sum (-N)^k`.
fn unitriangular_inverse(t: &LMat) -> Result<LMat> {
    let n = t.len();
    let mut nil = t.clone();
    for (i, row) in nil.iter_mut().enumerate() {
        if row.len() != n {
            return Err(Error::Invalid("base change table is not square".into()));
        }
        if row[i] != LaurentPoly::one() {
            return Err(Error::Invalid("base change table is not unitriangular".into()));
        }
        row[i] = LaurentPoly::zero();
        for x in row.iter_mut() {
            *x = -&*x;
        }
    }
    let mut out: LMat = (0..n)
        .map(|i| (0..n).map(|j| if i == j { LaurentPoly::one() } else { LaurentPoly::zero() }).collect())
        .collect();
    let mut pow = out.clone();
    for _ in 0..n {
        pow = lmat_mul(&pow, &nil);
        if pow.iter().all(|r| r.iter().all(|x| x.is_zero())) {
            return Ok(out);
        }
        for i in 0..n {
            for j in 0..n {
                out[i][j] = &out[i][j] + &pow[i][j];
            }
        }
    }
    Err(Error::Invalid("base change table is singular (not unitriangular in any order)".into()))
}

impl K0Tables {
    pub fn new(labels: Vec<String>, m_in_l: LMat, p_in_m: LMat) -> Result<Self> {
        let t = K0Tables { labels, m_in_l, p_in_m };
        unitriangular_inverse(&t.m_in_l)?;
        unitriangular_inverse(&t.p_in_m)?;
        Ok(t)
    }

    /// Matrix expressing each basis element of `b` in the simple basis.
    fn to_l(&self, b: K0Basis) -> LMat {
        match b {
            K0Basis::L => unitriangular_inverse(&self.m_in_l)
                .map(|inv| lmat_mul(&self.m_in_l, &inv))
                .expect("validated table"),
            K0Basis::M => self.m_in_l.clone(),
            K0Basis::P => lmat_mul(&self.p_in_m, &self.m_in_l),
        }
    }

    /// Matrix expressing each simple class in the basis `b`; both factors are unitriangular.
    fn l_to(&self, b: K0Basis) -> Result<LMat> {
        match b {
            K0Basis::L => Ok(self.to_l(K0Basis::L)),
            K0Basis::M => unitriangular_inverse(&self.m_in_l),
            K0Basis::P => Ok(lmat_mul(&unitriangular_inverse(&self.m_in_l)?, &unitriangular_inverse(&self.p_in_m)?)),
        }
    }

    /// Tables for the parabolic block with weights `σ_0..σ_{n-1}`:
    /// `[M(σ_i)] = [L(σ_i)] + v[L(σ_{i+1})]` and `[P(σ_i)] = [M(σ_i)] + v[M(σ_{i-1})]`.
    pub fn parabolic(n: usize) -> Result<Self> {
        if n < 2 {
            return Err(Error::Invalid(format!("parabolic block needs n >= 2, got {n}")));
        }
        let labels: Vec<String> = (0..n).map(|i| sigma(n, i).word_string()).collect();
        let mut m_in_l = vec![vec![LaurentPoly::zero(); n]; n];
        let mut p_in_m = m_in_l.clone();
        for i in 0..n {
            m_in_l[i][i] = LaurentPoly::one();
            p_in_m[i][i] = LaurentPoly::one();
            if i + 1 < n {
                m_in_l[i][i + 1] = LaurentPoly::var_pow(1);
            }
            if i > 0 {
                p_in_m[i][i - 1] = LaurentPoly::var_pow(1);
            }
        }
        K0Tables::new(labels, m_in_l, p_in_m)
    }

    /// Tables for the principal block of `S_n`, read off from the `C` basis.
    pub fn principal(n: usize) -> Result<Self> {
        let kl = KLTable::new(n)?;
        let perms = kl.perms().to_vec();
        let labels: Vec<String> = perms.iter().map(|p| p.word_string()).collect();
        let mut p_in_m = Vec::new();
        for w in &perms {
            let c = kl.c_basis(w)?;
            p_in_m.push(perms.iter().map(|x| c.coeff(x)).collect::<Vec<_>>());
        }
        let m = perms.len();
        let m_in_l = (0..m).map(|y| (0..m).map(|x| p_in_m[x][y].clone()).collect()).collect();
        K0Tables::new(labels, m_in_l, p_in_m)
    }
}

/// Re-express a class in another basis.
pub fn k0_base_change(c: &K0Class, target: K0Basis, tables: &K0Tables) -> Result<K0Class> {
    if c.labels != tables.labels {
        return Err(Error::Invalid("class index set does not match the table".into()));
    }
    let src = tables.to_l(c.basis);
    let dst_inv = tables.l_to(target)?;
    let n = c.labels.len();
    let mut in_l = vec![LaurentPoly::zero(); n];
    for (w, cw) in c.coeffs.iter().enumerate() {
        if cw.is_zero() {
            continue;
        }
        for x in 0..n {
            in_l[x] = &in_l[x] + &(cw * &src[w][x]);
        }
    }
    let mut out = vec![LaurentPoly::zero(); n];
    for (x, cx) in in_l.iter().enumerate() {
        if cx.is_zero() {
            continue;
        }
        for y in 0..n {
            out[y] = &out[y] + &(cx * &dst_inv[x][y]);
        }
    }
    Ok(K0Class { labels: c.labels.clone(), coeffs: out, basis: target })
}

/// Right multiplication by `H_s` under `[M(w)] -> H_w`.
pub fn k0_shuffle_shadow(c: &K0Class, n: usize, s: usize) -> Result<K0Class> {
    if c.basis != K0Basis::M {
        return Err(Error::Invalid("shuffle shadow expects a class in the M basis".into()));
    }
    if s == 0 || s >= n {
        return Err(Error::Invalid(format!("s{s} is not a simple reflection of S{n}")));
    }
    let perms: Vec<Perm> =
        c.labels.iter().map(|l| Perm::parse_word(n, l)).collect::<Result<_>>()?;
    let full = Perm::all(n).len();
    let mut sorted = perms.clone();
    sorted.sort();
    sorted.dedup();
    if sorted.len() != full || perms.len() != full {
        return Err(Error::Unsupported(
            "shuffle shadow is defined on the full Weyl group index set only".into(),
        ));
    }
    let mut h = HeckeElem::zero(n, super::hecke::HeckeBasis::H);
    for (p, x) in perms.iter().zip(&c.coeffs) {
        h.add_term(p, x);
    }
    let r = h.mul_simple(s);
    Ok(K0Class {
        labels: c.labels.clone(),
        coeffs: perms.iter().map(|p| r.coeff(p)).collect(),
        basis: K0Basis::M,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sl2_tables() {
        let t = K0Tables::principal(2).unwrap();
        assert_eq!(t.labels, vec!["e".to_string(), "s1".to_string()]);
        let pe = K0Class::basis_class(&t.labels, K0Basis::P, "s1", 0).unwrap();
        let m = k0_base_change(&pe, K0Basis::M, &t).unwrap();
        assert_eq!(m.coeff("e").unwrap(), LaurentPoly::var_pow(1));
        assert_eq!(m.coeff("s1").unwrap(), LaurentPoly::one());
    }
}
