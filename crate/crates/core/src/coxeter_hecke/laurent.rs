//! Laurent polynomials with rational coefficients.

use num::{One, Signed, Zero};
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::linalg::{fmt_q, q, Q};

#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct LaurentPoly {
    coeffs: BTreeMap<i32, Q>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(0, Q::one())
    }

    pub fn monomial(exp: i32, c: Q) -> Self {
        let mut p = Self::default();
        if !c.is_zero() {
            p.coeffs.insert(exp, c);
        }
        p
    }

    /// `v^exp` with coefficient 1.
    pub fn var_pow(exp: i32) -> Self {
        Self::monomial(exp, Q::one())
    }

    pub fn from_pairs(pairs: &[(i32, i64)]) -> Self {
        let mut p = Self::default();
        for &(e, c) in pairs {
            p.add_term(e, &q(c));
        }
        p
    }

    pub fn add_term(&mut self, exp: i32, c: &Q) {
        if c.is_zero() {
            return;
        }
        let e = self.coeffs.entry(exp).or_insert_with(Q::zero);
        *e += c;
        if e.is_zero() {
            self.coeffs.remove(&exp);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeff(&self, exp: i32) -> Q {
        self.coeffs.get(&exp).cloned().unwrap_or_else(Q::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (i32, &Q)> {
        self.coeffs.iter().map(|(e, c)| (*e, c))
    }

    pub fn max_degree(&self) -> Option<i32> {
        self.coeffs.keys().next_back().copied()
    }

    pub fn min_degree(&self) -> Option<i32> {
        self.coeffs.keys().next().copied()
    }

    pub fn scale(&self, c: &Q) -> Self {
        let mut p = Self::default();
        for (e, x) in &self.coeffs {
            p.add_term(*e, &(x * c));
        }
        p
    }

    /// Multiply by `v^k`.
    pub fn shift(&self, k: i32) -> Self {
        LaurentPoly { coeffs: self.coeffs.iter().map(|(e, c)| (e + k, c.clone())).collect() }
    }

    /// Substitute `v -> v^k`.
    pub fn substitute_pow(&self, k: i32) -> Self {
        let mut p = Self::default();
        for (e, c) in &self.coeffs {
            p.add_term(e * k, c);
        }
        p
    }

    /// Value at `v = 1`.
    pub fn eval_one(&self) -> Q {
        self.coeffs.values().fold(Q::zero(), |a, b| a + b)
    }

    pub fn render(&self, var: &str) -> String {
        if self.coeffs.is_empty() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (i, (e, c)) in self.coeffs.iter().enumerate() {
            let neg = c.is_negative();
            let a = c.abs();
            if i == 0 {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            let mono = match *e {
                0 => String::new(),
                1 => var.to_string(),
                k => format!("{var}^{k}"),
            };
            if mono.is_empty() {
                out.push_str(&fmt_q(&a));
            } else if a.is_one() {
                out.push_str(&mono);
            } else {
                out.push_str(&format!("{}{}", fmt_q(&a), mono));
            }
        }
        out
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.render("v"))
    }
}

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.render("v"))
    }
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut p = self.clone();
        for (e, c) in &rhs.coeffs {
            p.add_term(*e, c);
        }
        p
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut p = self.clone();
        for (e, c) in &rhs.coeffs {
            p.add_term(*e, &-c);
        }
        p
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut p = LaurentPoly::default();
        for (e1, c1) in &self.coeffs {
            for (e2, c2) in &rhs.coeffs {
                p.add_term(e1 + e2, &(c1 * c2));
            }
        }
        p
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        self.scale(&-Q::one())
    }
}

impl Add for LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: LaurentPoly) -> LaurentPoly {
        &self + &rhs
    }
}

impl Sub for LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: LaurentPoly) -> LaurentPoly {
        &self - &rhs
    }
}

impl Mul for LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: LaurentPoly) -> LaurentPoly {
        &self * &rhs
    }
}
