//! Permutations in one-line notation, viewed as elements of the Coxeter group S_n.

use std::cmp::Ordering;
use std::fmt;

use crate::error::{Error, Result};

/// A permutation of `1..=n`, stored in one-line notation.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Perm {
    images: Vec<u8>,
}

impl Perm {
    pub fn identity(n: usize) -> Self {
        Perm { images: (1..=n as u8).collect() }
    }

    pub fn from_images(images: Vec<u8>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n + 1];
        for &x in &images {
            let x = x as usize;
            if x == 0 || x > n || seen[x] {
                return Err(Error::Invalid(format!("not a permutation: {images:?}")));
            }
            seen[x] = true;
        }
        Ok(Perm { images })
    }

    /// The simple reflection `s_i` swapping `i` and `i+1` (1-based).
    pub fn simple(n: usize, i: usize) -> Self {
        assert!(i >= 1 && i < n, "simple reflection s{i} out of range for S{n}");
        let mut p = Self::identity(n);
        p.images.swap(i - 1, i);
        p
    }

    /// The product `s_{w[0]} s_{w[1]} ...`.
    pub fn from_word(n: usize, word: &[usize]) -> Self {
        let mut p = Self::identity(n);
        for &i in word {
            p = p.mul_simple_right(i);
        }
        p
    }

    /// Parse `e` or `s1*s2*...`.
    pub fn parse_word(n: usize, s: &str) -> Result<Self> {
        let s = s.trim();
        if s == "e" || s == "1" {
            return Ok(Self::identity(n));
        }
        let mut word = Vec::new();
        for tok in s.split('*') {
            let tok = tok.trim();
            let i: usize = tok
                .strip_prefix('s')
                .and_then(|d| d.parse().ok())
                .ok_or_else(|| Error::Parse(format!("bad reflection `{tok}` in word `{s}`")))?;
            if i == 0 || i >= n {
                return Err(Error::Parse(format!("reflection s{i} out of range for S{n}")));
            }
            word.push(i);
        }
        Ok(Self::from_word(n, &word))
    }

    pub fn longest(n: usize) -> Self {
        Perm { images: (1..=n as u8).rev().collect() }
    }

    pub fn rank(&self) -> usize {
        self.images.len()
    }

    pub fn images(&self) -> &[u8] {
        &self.images
    }

    pub fn apply(&self, k: usize) -> usize {
        self.images[k - 1] as usize
    }

    /// Number of inversions.
    pub fn length(&self) -> usize {
        let w = &self.images;
        let mut l = 0;
        for i in 0..w.len() {
            for j in i + 1..w.len() {
                if w[i] > w[j] {
                    l += 1;
                }
            }
        }
        l
    }

    /// Composition `(self * other)(k) = self(other(k))`.
    pub fn mul(&self, other: &Perm) -> Perm {
        assert_eq!(self.rank(), other.rank());
        Perm { images: other.images.iter().map(|&k| self.images[k as usize - 1]).collect() }
    }

    pub fn inverse(&self) -> Perm {
        let mut inv = vec![0u8; self.rank()];
        for (i, &x) in self.images.iter().enumerate() {
            inv[x as usize - 1] = (i + 1) as u8;
        }
        Perm { images: inv }
    }

    /// `w s_i`: swaps positions `i`, `i+1`.
    pub fn mul_simple_right(&self, i: usize) -> Perm {
        let mut p = self.clone();
        p.images.swap(i - 1, i);
        p
    }

    /// `s_i w`: swaps the values `i`, `i+1`.
    pub fn mul_simple_left(&self, i: usize) -> Perm {
        let images = self
            .images
            .iter()
            .map(|&x| {
                if x as usize == i {
                    (i + 1) as u8
                } else if x as usize == i + 1 {
                    i as u8
                } else {
                    x
                }
            })
            .collect();
        Perm { images }
    }

    /// `l(w s_i) < l(w)`.
    pub fn has_right_descent(&self, i: usize) -> bool {
        self.images[i - 1] > self.images[i]
    }

    /// `l(s_i w) < l(w)`.
    pub fn has_left_descent(&self, i: usize) -> bool {
        let pos = |v: usize| self.images.iter().position(|&x| x as usize == v).unwrap();
        pos(i) > pos(i + 1)
    }

    /// Lexicographically smallest reduced word.
    pub fn reduced_word(&self) -> Vec<usize> {
        let n = self.rank();
        let mut w = self.clone();
        let mut word = Vec::new();
        while let Some(i) = (1..n).find(|&i| w.has_left_descent(i)) {
            word.push(i);
            w = w.mul_simple_left(i);
        }
        word
    }

    pub fn word_string(&self) -> String {
        let w = self.reduced_word();
        if w.is_empty() {
            "e".to_string()
        } else {
            w.iter().map(|i| format!("s{i}")).collect::<Vec<_>>().join("*")
        }
    }

    /// Bruhat order via the tableau criterion.
    pub fn bruhat_leq(&self, other: &Perm) -> Result<bool> {
        if self.rank() != other.rank() {
            return Err(Error::Invalid(format!(
                "rank mismatch: S{} vs S{}",
                self.rank(),
                other.rank()
            )));
        }
        let n = self.rank();
        for k in 1..n {
            let mut a: Vec<u8> = self.images[..k].to_vec();
            let mut b: Vec<u8> = other.images[..k].to_vec();
            a.sort_unstable();
            b.sort_unstable();
            if a.iter().zip(&b).any(|(x, y)| x > y) {
                return Ok(false);
            }
        }
        Ok(true)
    }

    pub fn all(n: usize) -> Vec<Perm> {
        let mut out = Vec::new();
        let mut cur: Vec<u8> = (1..=n as u8).collect();
        permute(&mut cur, 0, &mut out);
        out.sort();
        out
    }
}

fn permute(cur: &mut Vec<u8>, k: usize, out: &mut Vec<Perm>) {
    if k == cur.len() {
        out.push(Perm { images: cur.clone() });
        return;
    }
    for i in k..cur.len() {
        cur.swap(k, i);
        permute(cur, k + 1, out);
        cur.swap(k, i);
    }
}

impl Ord for Perm {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.rank(), self.length(), &self.images).cmp(&(other.rank(), other.length(), &other.images))
    }
}

impl PartialOrd for Perm {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.word_string())
    }
}

impl fmt::Debug for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.word_string())
    }
}

/// Minimal length representatives of the cosets `W_p \ W`, where `W_p` is
/// generated by the given simple reflections. Sorted by (length, word).
pub fn min_coset_reps(n: usize, generators_p: &[usize]) -> Vec<Perm> {
    let mut reps: Vec<Perm> = Perm::all(n)
        .into_iter()
        .filter(|w| generators_p.iter().all(|&i| !w.has_left_descent(i)))
        .collect();
    reps.sort_by_key(|w| (w.length(), w.reduced_word()));
    reps
}

/// `sigma_i = s_1 s_2 ... s_i` in S_n.
pub fn sigma(n: usize, i: usize) -> Perm {
    Perm::from_word(n, &(1..=i).collect::<Vec<_>>())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lengths() {
        assert_eq!(Perm::identity(3).length(), 0);
        assert_eq!(Perm::longest(3).length(), 3);
        assert_eq!(Perm::from_word(3, &[1, 2, 1]), Perm::longest(3));
    }

    #[test]
    fn words_round_trip() {
        for w in Perm::all(4) {
            let s = w.word_string();
            assert_eq!(Perm::parse_word(4, &s).unwrap(), w);
            assert_eq!(w.reduced_word().len(), w.length());
        }
    }

    #[test]
    fn coset_reps_small() {
        let r = min_coset_reps(3, &[2]);
        let words: Vec<String> = r.iter().map(|w| w.word_string()).collect();
        assert_eq!(words, vec!["e", "s1", "s1*s2"]);
    }
}
