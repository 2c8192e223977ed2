//! Multivariate polynomials, used for the symbolic invertibility fallback.

use std::collections::{BTreeMap, HashMap};

use num::Zero;

use crate::linalg::{Mat, Q};

/// Sparse polynomial: exponent vector -> coefficient.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct MPoly {
    terms: BTreeMap<Vec<u32>, Q>,
}

impl MPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn constant(nvars: usize, c: Q) -> Self {
        let mut p = Self::default();
        if !c.is_zero() {
            p.terms.insert(vec![0; nvars], c);
        }
        p
    }

    /// The linear form `sum_k c_k t_k`.
    pub fn linear(coeffs: &[Q]) -> Self {
        let n = coeffs.len();
        let mut p = Self::default();
        for (k, c) in coeffs.iter().enumerate() {
            if !c.is_zero() {
                let mut e = vec![0; n];
                e[k] = 1;
                p.terms.insert(e, c.clone());
            }
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_assign(&mut self, other: &MPoly, sign: bool) {
        for (e, c) in &other.terms {
            let x = self.terms.entry(e.clone()).or_insert_with(Q::zero);
            if sign {
                *x += c;
            } else {
                *x -= c;
            }
            if x.is_zero() {
                self.terms.remove(e);
            }
        }
    }

    pub fn mul(&self, other: &MPoly) -> MPoly {
        let mut out = MPoly::zero();
        for (e1, c1) in &self.terms {
            for (e2, c2) in &other.terms {
                let e: Vec<u32> = e1.iter().zip(e2).map(|(a, b)| a + b).collect();
                let x = out.terms.entry(e.clone()).or_insert_with(Q::zero);
                *x += c1 * c2;
                if x.is_zero() {
                    out.terms.remove(&e);
                }
            }
        }
        out
    }
}

/// Whether `det(sum_k t_k B_k)` is a nonzero polynomial in the `t_k`.
///
/// Laplace expansion along rows, memoized over the set of used columns.
pub fn generic_det_nonzero(basis: &[Mat]) -> bool {
    let Some(first) = basis.first() else {
        return false;
    };
    let n = first.rows();
    assert_eq!(n, first.cols());
    if n == 0 {
        return true;
    }
    assert!(n <= 24, "symbolic determinant limited to 24x24 blocks");
    let entries: Vec<Vec<MPoly>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| MPoly::linear(&basis.iter().map(|b| b.get(i, j).clone()).collect::<Vec<_>>()))
                .collect()
        })
        .collect();
    let nvars = basis.len();
    let one = MPoly::constant(nvars, Q::from_integer(1.into()));
    let mut memo: HashMap<u32, MPoly> = HashMap::new();
    fn rec(row: usize, used: u32, n: usize, one: &MPoly, entries: &[Vec<MPoly>], memo: &mut HashMap<u32, MPoly>) -> MPoly {
        if row == n {
            return one.clone();
        }
        if let Some(p) = memo.get(&used) {
            return p.clone();
        }
        let mut acc = MPoly::zero();
        let mut sign = true;
        for c in 0..n {
            if used & (1 << c) != 0 {
                continue;
            }
            let e = &entries[row][c];
            if !e.is_zero() {
                let sub = rec(row + 1, used | (1 << c), n, one, entries, memo);
                if !sub.is_zero() {
                    acc.add_assign(&e.mul(&sub), sign);
                }
            }
            sign = !sign;
        }
        memo.insert(used, acc.clone());
        acc
    }
    !rec(0, 0, n, &one, &entries, &mut memo).is_zero()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn symbolic_det() {
        // t0 * [[1,0],[0,0]] + t1 * [[0,0],[0,1]] has det t0 t1 != 0
        let a = Mat::from_i64(&[&[1, 0], &[0, 0]]);
        let b = Mat::from_i64(&[&[0, 0], &[0, 1]]);
        assert!(generic_det_nonzero(&[a, b]));
        // t0 * [[1,1],[1,1]] is singular everywhere
        let c = Mat::from_i64(&[&[1, 1], &[1, 1]]);
        assert!(!generic_det_nonzero(&[c]));
    }
}
