use std::sync::Arc;

use shuffle_twist::coxeter_hecke::{hecke_mul, HeckeElem, K0Basis, LaurentPoly, Perm};
use shuffle_twist::functors::*;
use shuffle_twist::homotopy::*;
use shuffle_twist::path_algebra::{parabolic_sl, sl2_principal, FDAlgebra};
use shuffle_twist::qmod::*;
use shuffle_twist::Error;

fn sl2() -> Arc<FDAlgebra> {
    Arc::new(sl2_principal().unwrap())
}

fn para(n: usize) -> Arc<FDAlgebra> {
    Arc::new(parabolic_sl(n).unwrap())
}

fn ungraded(x: &Complex) -> Vec<(i32, Vec<usize>)> {
    x.terms()
        .iter()
        .map(|(j, t)| {
            let mut vs: Vec<usize> = t.iter().map(|s| s.vertex).collect();
            vs.sort_unstable();
            (*j, vs)
        })
        .collect()
}

fn equivalent(x: &Complex, y: &Complex) -> bool {
    homotopy_equivalent(x, y, 0).is_some()
}

/// Θ_{s_i} P(σ_j) from the translation table: the vertices of the summands.
fn theta_table(i: usize, j: usize) -> Vec<usize> {
    match j {
        _ if j + 1 == i || j == i + 1 => vec![i],
        _ if j == i => vec![i, i],
        _ => vec![],
    }
}

/// LSh_{s_i} P(σ_j) from the shuffling table.
fn shuffle_table(i: usize, j: usize) -> Vec<(i32, Vec<usize>)> {
    if j + 1 == i || j == i + 1 {
        vec![(0, vec![i]), (1, vec![j])]
    } else if j == i {
        vec![(0, vec![i])]
    } else {
        vec![(1, vec![j])]
    }
}

#[test]
fn theta_images_of_projectives_match_table() {
    for n in 3..=6 {
        let a = para(n);
        for i in 1..n {
            let t = theta(&a, i).unwrap();
            for j in 0..n {
                let m = t.functor.apply_module(&projective(&a, j)).unwrap();
                let mut got: Vec<usize> = decompose_projective(&m).unwrap().into_iter().map(|(v, _)| v).collect();
                got.sort_unstable();
                assert_eq!(got, theta_table(i, j), "n={n} i={i} j={j}");
            }
        }
    }
}

#[test]
fn theta_of_p_sigma_i_is_shifted_pair() {
    let a = para(4);
    for i in 1..4 {
        let t = theta(&a, i).unwrap();
        let mut got = decompose_projective(&t.functor.apply_module(&projective(&a, i)).unwrap()).unwrap();
        got.sort_unstable();
        assert_eq!(got, vec![(i, -1), (i, 1)], "i={i}");
        assert!(theta_squared(&t, i).unwrap());
    }
}

#[test]
fn theta_squared_decomposes_for_all_projectives() {
    for n in 2..=5 {
        let a = para(n);
        for i in 1..n {
            let t = theta(&a, i).unwrap();
            for w in 0..n {
                assert!(theta_squared(&t, w).unwrap(), "n={n} i={i} w={w}");
            }
        }
    }
}

#[test]
fn theta_of_dominant_verma_is_projective() {
    let a = sl2();
    let t = theta(&a, 1).unwrap();
    let m = t.functor.apply_module(&parabolic_verma(&a, 0).unwrap()).unwrap();
    assert!(is_isomorphic(&m, &projective(&a, 1), 0).is_iso());
    // the defining sequence 0 -> M(e)<1> -> Θ M(e) -> M(s) -> 0 forces dim Θ M(e) = dim M(e) + dim M(s)
    let (me, ms) = (parabolic_verma(&a, 0).unwrap(), parabolic_verma(&a, 1).unwrap());
    assert_eq!(m.dim(), me.dim() + ms.dim());
}

#[test]
fn shuffling_images_of_projectives_match_table() {
    for n in 3..=6 {
        let a = para(n);
        for i in 1..n {
            let t = theta(&a, i).unwrap();
            for j in 0..n {
                let x = reduce(&shuffle(&t, &Complex::projective(&a, j)));
                assert_eq!(ungraded(&x), shuffle_table(i, j), "n={n} i={i} j={j}");
            }
        }
    }
}

#[test]
fn sl2_shuffling_and_coshuffling() {
    let a = sl2();
    let t = theta(&a, 1).unwrap();
    let (pe, ps) = (Complex::projective(&a, 0), Complex::projective(&a, 1));
    assert_eq!(reduce(&shuffle(&t, &pe)).render_compact(), "{ [1] P(e) -> [0] P(s) }");
    assert_eq!(reduce(&shuffle(&t, &ps)).render_compact(), "{ [0] P(s) }");
    assert_eq!(reduce(&coshuffle(&t, &ps).unwrap()).render_compact(), "{ [0] P(s) }");
    assert_eq!(reduce(&coshuffle(&t, &pe).unwrap()).render_compact(), "{ [0] P(s) -> [-1] P(e) }");
}

#[test]
fn shuffling_twice_on_verma_resolution() {
    let a = sl2();
    let t = theta(&a, 1).unwrap();
    let ms = resolve(&parabolic_verma(&a, 1).unwrap()).unwrap();
    let x = reduce(&shuffle(&t, &shuffle(&t, &ms)));
    let shape: Vec<Vec<usize>> = x.terms().values().rev().map(|t| t.iter().map(|s| s.vertex).collect()).collect();
    assert_eq!(shape, vec![vec![0], vec![1], vec![1], vec![1]]);
}

#[test]
fn shuffling_commutes_with_shift() {
    let a = para(3);
    let t = theta(&a, 1).unwrap();
    let x = Complex::projective(&a, 0);
    for k in -2..=2 {
        assert!(equivalent(&shuffle(&t, &x.shift(k)), &shuffle(&t, &x).shift(k)));
    }
}

#[test]
fn bimodule_dimensions() {
    let a = sl2();
    let t = theta(&a, 1).unwrap();
    assert_eq!(Bimodule::from_functor(&t.functor, Some(&t.unit)).unwrap().dim(), 9);
    for n in 3..=5 {
        let a = para(n);
        for i in 1..n {
            let t = theta(&a, i).unwrap();
            let m = Bimodule::from_functor(&t.functor, Some(&t.unit)).unwrap();
            // the image of every P(σ_j) is a sum of copies of P(σ_i); count them from the table
            let copies: usize = (0..n).map(|j| theta_table(i, j).len()).sum();
            assert_eq!(m.dim(), copies * projective(&a, i).dim(), "n={n} i={i}");
        }
    }
    let a = para(4);
    let dims: Vec<usize> = (1..4)
        .map(|i| {
            let t = theta(&a, i).unwrap();
            Bimodule::from_functor(&t.functor, None).unwrap().dim()
        })
        .collect();
    assert_eq!(dims, vec![16, 16, 9]);
}

#[test]
fn sl2_bimodule_isomorphism_is_explicit() {
    let a = sl2();
    let t = theta(&a, 1).unwrap();
    let x = xi_prime(&a, 1).unwrap();
    let mt = Bimodule::from_functor(&t.functor, Some(&t.unit)).unwrap();
    let mx = Bimodule::from_functor(&x.functor, Some(&x.map)).unwrap();
    let BimoduleIso::Iso { map, .. } = bimodule_iso(&mt, &mx, 0) else { panic!("expected an isomorphism") };
    assert_eq!((map.rows(), map.cols()), (9, 9));
    assert!(map.is_invertible());
    for ar in 0..mt.module.alg().quiver.arrows.len() {
        assert_eq!(map.mul(mt.module.arrow_matrix(ar)), mx.module.arrow_matrix(ar).mul(&map));
    }
    assert_eq!(map.mul_vec(mt.unit.as_ref().unwrap()), *mx.unit.as_ref().unwrap());
}

#[test]
fn distinct_wall_crossings_are_not_isomorphic() {
    let a = para(4);
    let t1 = theta(&a, 1).unwrap();
    let t2 = theta(&a, 2).unwrap();
    let m1 = Bimodule::from_functor(&t1.functor, None).unwrap();
    let m2 = Bimodule::from_functor(&t2.functor, None).unwrap();
    assert_eq!(m1.dim(), m2.dim());
    assert!(!bimodule_iso(&m1, &m2, 0).is_iso());
    assert!(bimodule_iso(&m1, &m1, 0).is_iso());
    let a = para(3);
    let m: Vec<Bimodule> =
        (1..3).map(|i| Bimodule::from_functor(&theta(&a, i).unwrap().functor, None).unwrap()).collect();
    assert_eq!((m[0].dim(), m[1].dim()), (16, 9));
    assert!(!bimodule_iso(&m[0], &m[1], 0).is_iso());
}

#[test]
fn sl2_cotwist_by_projective() {
    let a = sl2();
    let (pe, ps) = (Complex::projective(&a, 0), Complex::projective(&a, 1));
    let ms = resolve(&parabolic_verma(&a, 1).unwrap()).unwrap();
    let t = cotwist_projective(&a, 1, &pe).unwrap();
    assert_eq!(ungraded(&t), ungraded(&ms.shift(1)));
    assert_eq!(homology_dims(&t).keys().copied().collect::<Vec<_>>(), vec![-1]);
    // graded lift: T'_{P(s)} P(e) = M(s)[1] and T'_{P(s)} P(s) = P(s)<-1>[1]
    assert!(equivalent(&t, &ms.shift(1)));
    assert!(equivalent(&cotwist_projective(&a, 1, &ps).unwrap(), &ps.grade_shift(-1).shift(1)));
    assert!(equivalent(&twist_projective(&a, 1, &ps).unwrap(), &ps.grade_shift(1).shift(-1)));
}

#[test]
fn bimodule_and_complex_routes_agree() {
    let a = sl2();
    let ps = Complex::projective(&a, 1);
    let objects =
        vec![Complex::projective(&a, 0), ps.clone(), resolve(&simple(&a, 0, 0)).unwrap(), resolve(&parabolic_verma(&a, 1).unwrap()).unwrap()];
    for x in &objects {
        let b = cotwist_projective(&a, 1, x).unwrap();
        let c = reduce(&cotwist(&ps, x).unwrap());
        assert!(equivalent(&b, &c), "{} vs {}", b.render(), c.render());
        let b = twist_projective(&a, 1, x).unwrap();
        let c = reduce(&twist(&ps, x).unwrap());
        assert!(equivalent(&b, &c), "{} vs {}", b.render(), c.render());
    }
}

#[test]
fn twist_and_cotwist_are_inverse() {
    let a = para(3);
    for w in 1..3 {
        for v in 0..3 {
            let x = Complex::projective(&a, v);
            let y = twist_projective(&a, w, &cotwist_projective(&a, w, &x).unwrap()).unwrap();
            let z = cotwist_projective(&a, w, &twist_projective(&a, w, &x).unwrap()).unwrap();
            assert!(equivalent(&reduce(&y), &x) && equivalent(&reduce(&z), &x), "w={w} v={v}");
        }
    }
}

#[test]
fn cotwist_fixes_orthogonal_projective() {
    let a = para(3);
    let pe = Complex::projective(&a, 0);
    // Hom*(P(σ_0), P(σ_2)) = 0, so only the grading normalization of the twist remains
    assert!(equivalent(&cotwist_projective(&a, 2, &pe).unwrap(), &pe.grade_shift(1)));
    assert!(equivalent(&twist_projective(&a, 2, &pe).unwrap(), &pe.grade_shift(-1)));
}

#[test]
fn xi_needs_spherelike_projective() {
    let a = para(3);
    assert!(matches!(xi_prime(&a, 0), Err(Error::Rejected(_))));
    assert!(matches!(xi(&a, 0), Err(Error::Rejected(_))));
    assert!(xi_prime(&a, 1).is_ok());
}

#[test]
fn sphericality_examples() {
    let a = sl2();
    assert!(check_spherical(&Complex::projective(&a, 1), 0).pass);
    let le = resolve(&simple(&a, 0, 0)).unwrap();
    assert!(check_spherelike(&le, 2).pass);
    assert!(check_spherical(&le, 2).pass);
    assert!(!check_spherelike(&le, 0).pass);
    let ms = resolve(&parabolic_verma(&a, 1).unwrap()).unwrap();
    assert!(!check_spherelike(&ms, 0).pass);
    assert!(!check_spherelike(&Complex::projective(&a, 0), 0).pass);
    let b = para(3);
    let p1 = Complex::projective(&b, 1);
    assert!(!check_spherelike(&p1.direct_sum(&p1), 0).pass);
    assert!(!check_spherelike(&Complex::zero(&b), 0).pass);
}

#[test]
fn spherical_pairings_are_square() {
    let a = para(4);
    let v = check_spherical(&Complex::projective(&a, 2), 0);
    assert!(v.pass);
    assert!(v.pairings.iter().all(|p| p.nondegenerate && p.matrix.rows() == p.matrix.cols()));
}

#[test]
fn configuration_examples() {
    let a = para(4);
    let ps: Vec<Complex> = (0..4).map(|v| Complex::projective(&a, v)).collect();
    let v = check_an_configuration(&ps[1..], 0);
    assert!(v.pass, "{}", v.reason);
    assert_eq!(v.hom_totals, vec![vec![2, 1, 0], vec![1, 2, 1], vec![0, 1, 2]]);
    assert!(!check_an_configuration(&[ps[1].clone(), ps[3].clone()], 0).pattern_ok);
    assert!(!check_an_configuration(&ps, 0).pass);
}

#[test]
fn euler_classes_follow_hecke_multiplication() {
    let a = sl2();
    let t = theta(&a, 1).unwrap();
    let (e, s) = (Perm::identity(2), Perm::simple(2, 1));
    let hs = HeckeElem::h(&s);
    for (v, w) in [(0, &e), (1, &s)] {
        let x = resolve(&parabolic_verma(&a, v).unwrap()).unwrap();
        let verdict = euler_consistency(&t, &x).unwrap();
        assert!(verdict.pass);
        let (predicted, actual) = verdict.shadow.unwrap();
        assert_eq!(predicted, actual);
        assert_eq!(actual.basis, K0Basis::M);
        let product = hecke_mul(&HeckeElem::h(w), &hs).unwrap();
        assert_eq!(actual.coeffs, vec![product.coeff(&e), product.coeff(&s)]);
    }
    // [M(s)] H_s = [M(e)] + (v^-1 - v)[M(s)]
    let x = resolve(&parabolic_verma(&a, 1).unwrap()).unwrap();
    let (_, actual) = euler_consistency(&t, &x).unwrap().shadow.unwrap();
    assert_eq!(actual.coeffs, vec![LaurentPoly::from_pairs(&[(0, 1)]), LaurentPoly::from_pairs(&[(-1, 1), (1, -1)])]);
}

#[test]
fn euler_consistency_on_parabolic_objects() {
    for n in 3..=4 {
        let a = para(n);
        for i in 1..n {
            let t = theta(&a, i).unwrap();
            for v in 0..n {
                let p = Complex::projective(&a, v);
                assert!(euler_consistency(&t, &p).unwrap().pass);
                let m = resolve(&parabolic_verma(&a, v).unwrap()).unwrap();
                assert!(euler_consistency(&t, &m).unwrap().pass, "n={n} i={i} v={v}");
            }
        }
    }
}

#[test]
fn reports_render_verdicts() {
    let r = verify_main_theorem(2, 0).unwrap();
    assert!(r.pass());
    assert_eq!(r.checks.len(), 3);
    assert!(r.render().ends_with("PASS: 3 checks, 0 failed\n"));
    assert!(verify_main_theorem(7, 0).is_err());
    assert!(verify_braid(1, 0).is_err());
}
