use std::collections::BTreeSet;

use shuffle_twist::coxeter_hecke::*;
use shuffle_twist::path_algebra::parabolic_sl;

fn w(n: usize, s: &str) -> Perm {
    Perm::parse_word(n, s).unwrap()
}

fn lp(pairs: &[(i32, i64)]) -> LaurentPoly {
    LaurentPoly::from_pairs(pairs)
}

/// Inversions of the one-line notation.
fn inversions(p: &Perm) -> usize {
    let im = p.images();
    (0..im.len()).flat_map(|i| (i + 1..im.len()).map(move |j| (i, j))).filter(|&(i, j)| im[i] > im[j]).count()
}

/// Every product of a subword of a reduced word of `w`.
fn subword_products(w: &Perm) -> BTreeSet<Perm> {
    let word = w.reduced_word();
    let n = w.rank();
    (0u32..1 << word.len())
        .map(|mask| {
            let sub: Vec<usize> = word.iter().enumerate().filter(|(k, _)| mask >> k & 1 == 1).map(|(_, &s)| s).collect();
            Perm::from_word(n, &sub)
        })
        .collect()
}

fn bar_poly(p: &LaurentPoly) -> LaurentPoly {
    p.substitute_pow(-1)
}

/// `bar(H_w) = H_{s_1}^{-1} ... H_{s_k}^{-1}` with `H_s^{-1} = H_s + (v - v^{-1})`, coefficients inverted.
fn bar(x: &HeckeElem) -> HeckeElem {
    let n = x.rank();
    let e = Perm::identity(n);
    let mut out = HeckeElem::zero(n, HeckeBasis::H);
    for (p, c) in x.terms() {
        let mut y = HeckeElem::h(&e);
        for &s in &p.reduced_word() {
            let mut inv = HeckeElem::h(&Perm::simple(n, s));
            inv.add_term(&e, &lp(&[(1, 1), (-1, -1)]));
            y = hecke_mul(&y, &inv).unwrap();
        }
        out = out.add(&y.scale(&bar_poly(c))).unwrap();
    }
    out
}

#[test]
fn length_examples() {
    assert_eq!(Perm::identity(3).length(), 0);
    assert_eq!(Perm::longest(3).length(), 3);
    assert_eq!(w(3, "s1*s2*s1").length(), 3);
    for n in 1..=5 {
        for p in Perm::all(n) {
            assert_eq!(p.length(), inversions(&p));
        }
    }
}

#[test]
fn bruhat_examples() {
    assert!(Perm::identity(3).bruhat_leq(&Perm::longest(3)).unwrap());
    assert!(!w(3, "s1").bruhat_leq(&w(3, "s2")).unwrap());
    assert!(w(4, "s2*s1").bruhat_leq(&w(4, "s2*s1*s3*s2")).unwrap());
    assert!(Perm::identity(3).bruhat_leq(&Perm::identity(4)).is_err());
    for n in 2..=4 {
        let all = Perm::all(n);
        for y in &all {
            let below = subword_products(y);
            for x in &all {
                assert_eq!(x.bruhat_leq(y).unwrap(), below.contains(x), "{} <= {}", x.word_string(), y.word_string());
            }
        }
    }
}

#[test]
fn coset_representative_examples() {
    let words = |n, g: &[usize]| -> Vec<String> { min_coset_reps(n, g).iter().map(|p| p.word_string()).collect() };
    assert_eq!(words(3, &[2]), vec!["e", "s1", "s1*s2"]);
    let s4: BTreeSet<String> = words(4, &[1, 3]).into_iter().collect();
    let expected: BTreeSet<String> =
        ["e", "s2", "s2*s3", "s2*s1", "s2*s1*s3", "s2*s1*s3*s2"].iter().map(|s| s.to_string()).collect();
    assert_eq!(s4, expected);
    let lengths: Vec<usize> = min_coset_reps(4, &[1, 3]).iter().map(Perm::length).collect();
    assert!(lengths.windows(2).all(|p| p[0] <= p[1]));
    let reps = min_coset_reps(5, &[2, 3, 4]);
    assert_eq!(reps, (0..5).map(|i| sigma(5, i)).collect::<Vec<_>>());
    assert_eq!(reps[3], w(5, "s1*s2*s3"));
}

#[test]
fn hecke_examples() {
    let (e, s, t) = (Perm::identity(3), Perm::simple(3, 1), Perm::simple(3, 2));
    let hw = HeckeElem::h(&w(3, "s1*s2"));
    assert_eq!(hecke_mul(&HeckeElem::h(&e), &hw).unwrap(), hw);
    let mut quad = HeckeElem::h(&e);
    quad.add_term(&s, &lp(&[(1, -1), (-1, 1)]));
    assert_eq!(hecke_mul(&HeckeElem::h(&s), &HeckeElem::h(&s)).unwrap(), quad);
    let sts = hecke_mul(&HeckeElem::h(&s), &hecke_mul(&HeckeElem::h(&t), &HeckeElem::h(&s)).unwrap()).unwrap();
    let tst = hecke_mul(&HeckeElem::h(&t), &hecke_mul(&HeckeElem::h(&s), &HeckeElem::h(&t)).unwrap()).unwrap();
    assert_eq!(sts, tst);
    assert_eq!(sts, HeckeElem::h(&Perm::longest(3)));
}

#[test]
fn kl_examples() {
    for n in 2..=3 {
        for y in Perm::all(n) {
            for x in Perm::all(n) {
                let expected = if x.bruhat_leq(&y).unwrap() { LaurentPoly::one() } else { LaurentPoly::zero() };
                assert_eq!(kl_polynomial(&x, &y).unwrap(), expected);
            }
        }
    }
    assert!(kl_polynomial(&Perm::identity(7), &Perm::identity(7)).is_err());
}

#[test]
fn kl_basis_is_characterized_by_bar_invariance() {
    // C_w is the unique bar-invariant element in H_w + sum_{x<w} vZ[v] H_x
    for n in 2..=4 {
        for y in Perm::all(n) {
            let c = c_basis(&y).unwrap();
            assert_eq!(bar(&c), c, "C_{}", y.word_string());
            for (x, p) in c.terms() {
                if *x == y {
                    assert_eq!(*p, LaurentPoly::one());
                } else {
                    assert!(x.bruhat_leq(&y).unwrap());
                    assert!(p.min_degree().unwrap() >= 1, "C_{} at {}", y.word_string(), x.word_string());
                }
            }
        }
    }
}

#[test]
fn c_basis_examples() {
    let e = Perm::identity(2);
    let s = Perm::simple(2, 1);
    let mut cs = HeckeElem::h(&s);
    cs.add_term(&e, &lp(&[(1, 1)]));
    assert_eq!(c_basis(&s).unwrap(), cs);
    assert_eq!(c_basis(&e).unwrap(), HeckeElem::h(&e));
    let w0 = Perm::longest(3);
    let mut expected = HeckeElem::zero(3, HeckeBasis::H);
    for x in Perm::all(3) {
        expected.add_term(&x, &LaurentPoly::var_pow((3 - x.length()) as i32));
    }
    assert_eq!(c_basis(&w0).unwrap(), expected);
}

#[test]
fn parabolic_tables_match_vertex_labels() {
    for n in 2..=6 {
        let t = K0Tables::parabolic(n).unwrap();
        assert_eq!(t.labels, parabolic_sl(n).unwrap().quiver.vertices);
    }
}

#[test]
fn base_change_examples() {
    let n = 4;
    let t = K0Tables::parabolic(n).unwrap();
    let last = t.labels[n - 1].clone();
    let l = K0Class::basis_class(&t.labels, K0Basis::L, &last, 0).unwrap();
    let m = K0Class::basis_class(&t.labels, K0Basis::M, &last, 0).unwrap();
    assert_eq!(k0_base_change(&l, K0Basis::M, &t).unwrap(), m);
    let m0 = K0Class::basis_class(&t.labels, K0Basis::M, "e", 0).unwrap();
    let expected = K0Class::basis_class(&t.labels, K0Basis::L, "e", 0)
        .unwrap()
        .add(&K0Class::basis_class(&t.labels, K0Basis::L, "s1", 1).unwrap())
        .unwrap();
    assert_eq!(k0_base_change(&m0, K0Basis::L, &t).unwrap(), expected);
    assert!(k0_base_change(&m0, K0Basis::L, &K0Tables::principal(2).unwrap()).is_err());
}

#[test]
fn shadow_examples() {
    let labels = K0Tables::principal(2).unwrap().labels;
    let me = K0Class::basis_class(&labels, K0Basis::M, "e", 0).unwrap();
    let ms = K0Class::basis_class(&labels, K0Basis::M, "s1", 0).unwrap();
    assert_eq!(k0_shuffle_shadow(&me, 2, 1).unwrap(), ms);
    // H_s H_s = H_e - (v - v^{-1}) H_s
    let expected = me.add(&ms.scale(&lp(&[(1, -1), (-1, 1)]))).unwrap();
    assert_eq!(k0_shuffle_shadow(&ms, 2, 1).unwrap(), expected);
    let v = LaurentPoly::var_pow(1);
    assert_eq!(k0_shuffle_shadow(&me.scale(&v), 2, 1).unwrap(), ms.scale(&v));
    let para = K0Tables::parabolic(3).unwrap();
    let c = K0Class::basis_class(&para.labels, K0Basis::M, "e", 0).unwrap();
    assert!(matches!(k0_shuffle_shadow(&c, 3, 1), Err(shuffle_twist::Error::Unsupported(_))));
}
