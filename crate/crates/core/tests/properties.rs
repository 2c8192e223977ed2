mod common;

use std::collections::BTreeMap;
use std::sync::Arc;

use num::Zero;
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use shuffle_twist::coxeter_hecke::*;
use shuffle_twist::functors::*;
use shuffle_twist::homotopy::*;
use shuffle_twist::linalg::Q;
use shuffle_twist::path_algebra::{parabolic_sl, sl2_principal, AElem, FDAlgebra};
use shuffle_twist::qmod::series::generic_combination;
use shuffle_twist::qmod::*;

use common::*;

fn para(n: usize) -> Arc<FDAlgebra> {
    Arc::new(parabolic_sl(n).unwrap())
}

fn sl2() -> Arc<FDAlgebra> {
    Arc::new(sl2_principal().unwrap())
}

fn bundled() -> Vec<Arc<FDAlgebra>> {
    let mut v = vec![sl2()];
    v.extend((2..=5).map(para));
    v
}

/// Row `r` of a two-row grid as a complex, with the direction-1 faces as differentials.
fn grid_row(m: &MultiComplex, r: i32) -> Complex {
    let mut terms = BTreeMap::new();
    let mut diffs = BTreeMap::new();
    for (idx, t) in m.cells() {
        if idx[0] == r {
            terms.insert(idx[1], t.clone());
        }
    }
    for &j in terms.keys() {
        if terms.contains_key(&(j - 1)) {
            diffs.insert(j, m.face(1, &[r, j]));
        }
    }
    Complex::from_parts(m.alg(), terms, diffs)
}

/// The direction-0 faces of a two-row grid as a chain map from row 1 to row 0.
fn grid_map(m: &MultiComplex) -> ChainMap {
    let dom = grid_row(m, 1);
    let cod = grid_row(m, 0);
    let comps = dom.terms().keys().map(|&j| (j, m.face(0, &[1, j]))).collect();
    ChainMap { dom, cod, hdeg: 0, internal: 0, comps }
}

fn total_dims(h: &BTreeMap<i32, BTreeMap<(usize, i32), usize>>, j: i32) -> BTreeMap<(usize, i32), usize> {
    h.get(&j).cloned().unwrap_or_default()
}

/// A random module: a homology module of a random complex, or a projective when all vanish.
fn random_module(alg: &Arc<FDAlgebra>, seed: u64) -> QModule {
    let x = random_complex(alg, seed);
    let h = homology(&x).unwrap();
    h.into_values().next().unwrap_or_else(|| projective(alg, (seed as usize) % alg.num_vertices()))
}

// coxeter_hecke

#[test]
fn hecke_braid_and_quadratic_relations() {
    for n in 2..=5 {
        for i in 1..n {
            let s = HeckeElem::h(&Perm::simple(n, i));
            let ss = hecke_mul(&s, &s).unwrap();
            let mut want = HeckeElem::h(&Perm::identity(n));
            want.add_term(&Perm::simple(n, i), &LaurentPoly::from_pairs(&[(1, -1), (-1, 1)]));
            assert_eq!(ss, want);
            if i + 1 < n {
                let t = HeckeElem::h(&Perm::simple(n, i + 1));
                let sts = hecke_mul(&s, &hecke_mul(&t, &s).unwrap()).unwrap();
                let tst = hecke_mul(&t, &hecke_mul(&s, &t).unwrap()).unwrap();
                assert_eq!(sts, tst, "n={n} i={i}");
            }
        }
    }
}

#[test]
fn kl_positivity_and_degree_bound() {
    for n in 2..=5 {
        let kl = KLTable::new(n).unwrap();
        for v in kl.perms() {
            for w in kl.perms() {
                let p = kl.get(v, w).unwrap();
                if !v.bruhat_leq(w).unwrap() {
                    assert!(p.is_zero());
                    continue;
                }
                for (_, c) in p.terms() {
                    assert!(c.is_integer() && *c > Q::zero(), "n={n}");
                }
                if v != w {
                    let bound = (w.length() as i32 - v.length() as i32 - 1) / 2;
                    assert!(p.max_degree().unwrap() <= bound);
                } else {
                    assert_eq!(p, LaurentPoly::one());
                }
            }
        }
    }
}

#[test]
fn coset_representatives_are_sigmas() {
    for n in 2..=6 {
        let reps = min_coset_reps(n, &(2..n).collect::<Vec<_>>());
        assert_eq!(reps.len(), n);
        for (i, r) in reps.iter().enumerate() {
            assert_eq!(*r, sigma(n, i));
        }
    }
}

fn random_laurent(rng: &mut ChaCha8Rng) -> LaurentPoly {
    let mut p = LaurentPoly::zero();
    for e in -2..=2 {
        p.add_term(e, &coeff(rng));
    }
    p
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn shadow_twice_is_quadratic(seed in any::<u64>(), n in 2usize..=3, s in 1usize..=2) {
        prop_assume!(s < n);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let tables = K0Tables::principal(n).unwrap();
        let mut c = K0Class::zero(&tables.labels, K0Basis::M);
        for k in 0..c.coeffs.len() {
            c.coeffs[k] = random_laurent(&mut rng);
        }
        let once = k0_shuffle_shadow(&c, n, s).unwrap();
        let twice = k0_shuffle_shadow(&once, n, s).unwrap();
        // H_s^2 = H_e + (v^-1 - v) H_s
        let want = c.add(&once.scale(&LaurentPoly::from_pairs(&[(-1, 1), (1, -1)]))).unwrap();
        prop_assert_eq!(twice, want);
    }

    #[test]
    fn base_change_round_trip(seed in any::<u64>(), n in 2usize..=3) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let tables = K0Tables::principal(n).unwrap();
        let mut c = K0Class::zero(&tables.labels, K0Basis::P);
        for k in 0..c.coeffs.len() {
            c.coeffs[k] = random_laurent(&mut rng);
        }
        let l = k0_base_change(&c, K0Basis::L, &tables).unwrap();
        let m = k0_base_change(&l, K0Basis::M, &tables).unwrap();
        prop_assert_eq!(k0_base_change(&m, K0Basis::P, &tables).unwrap(), c);
    }
}

// path_algebra

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn associativity_unit_grading(n in 2usize..=6, seed in any::<u64>()) {
        let a = parabolic_sl(n).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        use rand::Rng;
        let (p, q, r) = (rng.gen_range(0..a.dim()), rng.gen_range(0..a.dim()), rng.gen_range(0..a.dim()));
        let (xp, xq, xr) = (AElem::basis(p), AElem::basis(q), AElem::basis(r));
        prop_assert_eq!(a.mul(&a.mul(&xp, &xq), &xr), a.mul(&xp, &a.mul(&xq, &xr)));
        let mut one = AElem::zero();
        for v in 0..a.num_vertices() {
            one.add_term(a.idempotent(v), &Q::from_integer(1.into()));
        }
        prop_assert_eq!(a.mul(&one, &xp), xp.clone());
        prop_assert_eq!(a.mul(&xp, &one), xp.clone());
        let pq = a.mul(&xp, &xq);
        if !pq.is_zero() {
            prop_assert_eq!(a.elem_degree(&pq), Some(a.degree_of(p) + a.degree_of(q)));
        }
    }
}

// qmod

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn hom_from_projective_counts_factors(seed in any::<u64>(), n in 2usize..=4) {
        let a = para(n);
        let m = random_module(&a, seed);
        let mult = composition_multiplicities(&m);
        for v in 0..n {
            let p = projective(&a, v);
            let dims = hom_dims(&p, &m);
            for (&(w, d), &k) in &mult {
                if w == v {
                    prop_assert_eq!(dims.get(&d).copied().unwrap_or(0), k);
                }
            }
            prop_assert_eq!(dims.values().sum::<usize>(), mult.iter().filter(|((w, _), _)| *w == v).map(|(_, k)| *k).sum::<usize>());
        }
    }

    #[test]
    fn kernel_image_cokernel_exactness(seed in any::<u64>()) {
        let a = para(3);
        let m = random_module(&a, seed);
        let n = random_module(&a, seed.wrapping_add(1));
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        for s in -2..=2 {
            let basis = hom_space(&m, &n, s);
            if basis.is_empty() {
                continue;
            }
            let mats: Vec<_> = basis.iter().map(|f| f.mat.clone()).collect();
            let (_, mat) = generic_combination(&mats, &mut rng);
            let f = ModuleMap::new(&m, &n, s, mat).unwrap();
            let (k, _) = kernel(&f).unwrap();
            let (im, _) = image(&f).unwrap();
            let (c, _) = cokernel(&f).unwrap();
            let shifted: BTreeMap<(usize, i32), usize> = im.graded_dims().into_iter().map(|((v, d), k)| ((v, d - s), k)).collect();
            for (&(v, d), &dim) in &m.graded_dims() {
                let sum = k.block_dim(v, d) + shifted.get(&(v, d)).copied().unwrap_or(0);
                prop_assert_eq!(dim, sum);
            }
            for (&(v, d), &dim) in &n.graded_dims() {
                prop_assert_eq!(dim, im.block_dim(v, d) + c.block_dim(v, d));
            }
        }
    }
}

#[test]
fn radical_layers_are_graded_components() {
    for a in bundled() {
        for w in 0..a.num_vertices() {
            let p = projective(&a, w);
            let layers = radical_series(&p);
            for (i, layer) in layers.iter().enumerate() {
                let graded: BTreeMap<(usize, i32), usize> =
                    p.graded_dims().into_iter().filter(|((_, d), _)| *d == i as i32).collect();
                assert_eq!(*layer, graded, "{} w={w} layer {i}", a.name);
            }
        }
    }
}

#[test]
fn bgg_reciprocity_in_verma_basis() {
    for n in 2..=6 {
        let a = para(n);
        let vermas: Vec<QModule> = (0..n).map(|i| parabolic_verma(&a, i).unwrap()).collect();
        for j in 0..n {
            // (P(σ_j) : M(σ_i)<d>) read off by peeling Verma heads is [M(σ_i) : L(σ_j)<d>]
            let p = composition_multiplicities(&projective(&a, j));
            let mut rest: BTreeMap<(usize, i32), i64> = p.iter().map(|(k, v)| (*k, *v as i64)).collect();
            let mut flag: BTreeMap<(usize, i32), i64> = BTreeMap::new();
            for i in 0..n {
                for d in 0..=4 {
                    let c = rest.get(&(i, d)).copied().unwrap_or(0);
                    if c == 0 {
                        continue;
                    }
                    flag.insert((i, d), c);
                    for (&(w, e), &k) in &composition_multiplicities(&vermas[i]) {
                        *rest.entry((w, e + d)).or_default() -= c * k as i64;
                    }
                }
            }
            assert!(rest.values().all(|k| *k == 0), "n={n} j={j}");
            for i in 0..n {
                for (&(w, d), &k) in &composition_multiplicities(&vermas[i]) {
                    if w == j {
                        assert_eq!(flag.get(&(i, d)).copied().unwrap_or(0), k as i64, "n={n} i={i} j={j}");
                    }
                }
            }
        }
    }
}

#[test]
fn endomorphism_squares_to_zero() {
    for n in 2..=6 {
        let a = para(n);
        for i in 1..n {
            let p = projective(&a, i);
            let x = hom_space(&p, &p, 2);
            assert_eq!(x.len(), 1);
            assert!(x[0].mat.mul(&x[0].mat).is_zero());
            assert_eq!(hom_space(&p, &p, 0).len(), 1);
        }
    }
}

// homotopy

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    #[test]
    fn constructors_keep_d_squared_zero(seed in any::<u64>()) {
        let a = para(3);
        let m = random_double_complex(&a, seed, 2, 3);
        m.validate().unwrap();
        let t = m.total();
        prop_assert!(t.validate().is_ok());
        let f = grid_map(&m);
        prop_assert!(f.validate().is_ok());
        let c = cone(&f).unwrap();
        prop_assert!(c.validate().is_ok());
        prop_assert!(cocone(&f).unwrap().validate().is_ok());
        let r = reduce(&t);
        prop_assert!(r.validate().is_ok());
        for (j, col, row) in legal_eliminations(&t).into_iter().take(3) {
            prop_assert!(eliminate(&t, j, &[col], &[row]).unwrap().complex.validate().is_ok());
        }
        let x = random_complex(&a, seed ^ 0x5a5a);
        let v = hom_complex(&Complex::projective(&a, 1), &x).vs;
        prop_assert!(v.d_squared_zero());
        prop_assert!(vs_tensor(&v, &x, 1).validate().is_ok());
        prop_assert!(vs_lin(&v, &x, 1).validate().is_ok());
    }

    #[test]
    fn euler_characteristic_survives_reduction(seed in any::<u64>()) {
        let a = para(3);
        let t = random_double_complex(&a, seed, 3, 3).total();
        let chi = euler_characteristic(&t);
        prop_assert_eq!(euler_characteristic(&reduce(&t)), chi.clone());
        for (j, col, row) in legal_eliminations(&t).into_iter().take(4) {
            prop_assert_eq!(euler_characteristic(&eliminate(&t, j, &[col], &[row]).unwrap().complex), chi.clone());
        }
    }

    #[test]
    fn cone_homology_obeys_long_exact_sequence(seed in any::<u64>()) {
        let a = para(3);
        let f = grid_map(&random_double_complex(&a, seed, 2, 4));
        let hx = homology_dims(&f.dom);
        let hy = homology_dims(&f.cod);
        let hc = homology_dims(&cone(&f).unwrap());
        for j in -2..=6 {
            let c = total_dims(&hc, j);
            let y = total_dims(&hy, j);
            let x = total_dims(&hx, j - 1);
            for (k, &d) in &c {
                prop_assert!(d <= y.get(k).copied().unwrap_or(0) + x.get(k).copied().unwrap_or(0));
            }
        }
        // with the zero map the bound is an equality
        let z = ChainMap::zero(&f.dom, &f.cod, 0, 0);
        let hz = homology_dims(&cone(&z).unwrap());
        for j in -2..=6 {
            let mut want = total_dims(&hy, j);
            for (k, d) in total_dims(&hx, j - 1) {
                *want.entry(k).or_default() += d;
            }
            prop_assert_eq!(total_dims(&hz, j), want);
        }
    }

    #[test]
    fn hom_from_projective_is_exact(seed in any::<u64>(), v in 0usize..3) {
        let a = para(3);
        let x = random_double_complex(&a, seed, 2, 3).total();
        let coh = hom_complex(&Complex::projective(&a, v), &x).vs.cohomology_dims();
        let h = homology_dims(&x);
        let mut from_homology: BTreeMap<(i32, i32), usize> = BTreeMap::new();
        for (j, dims) in &h {
            for (&(w, d), &k) in dims {
                if w == v && k > 0 {
                    *from_homology.entry((-*j, d)).or_default() += k;
                }
            }
        }
        let coh: BTreeMap<(i32, i32), usize> = coh.into_iter().filter(|(_, k)| *k > 0).collect();
        prop_assert_eq!(coh, from_homology);
    }

    #[test]
    fn reduce_is_idempotent(seed in any::<u64>()) {
        let a = para(3);
        let t = random_double_complex(&a, seed, 3, 3).total();
        let r = reduce(&t);
        let rr = reduce(&r);
        prop_assert!(same_complex(&rr, &r));
        prop_assert_eq!(homology_dims(&r), homology_dims(&t));
    }
}

// functors

#[test]
fn units_are_validated_on_vermas() {
    let mut algs = vec![sl2()];
    algs.extend((2..=6).map(para));
    for a in algs {
        for i in 1..a.num_vertices() {
            let t = theta(&a, i).unwrap();
            validate_unit(&a, &t.functor, &t.unit, i).unwrap();
            let mv = parabolic_verma(&a, i - 1).unwrap();
            let h = homology(&shuffle(&t, &resolve(&mv).unwrap())).unwrap();
            assert_eq!(h.len(), 1);
            // LSh M(σ_{i-1}) = coker(η) = M(σ_i), in degree 0
            assert!(is_isomorphic(&h[&0], &parabolic_verma(&a, i).unwrap(), 0).is_iso(), "{} i={i}", a.name);
        }
    }
}

#[test]
fn twist_inverts_cotwist_for_every_bundled_spherical_object() {
    let a = sl2();
    let le = resolve(&simple(&a, 0, 0)).unwrap();
    for w in 0..2 {
        let p = Complex::projective(&a, w);
        let y = reduce(&twist(&le, &cotwist(&le, &p).unwrap()).unwrap());
        assert!(homotopy_equivalent(&y, &p, 0).is_some(), "L(e), w={w}");
    }
    for n in 2..=4 {
        let a = para(n);
        for e in 1..n {
            for w in 0..n {
                let p = Complex::projective(&a, w);
                let y = twist_projective(&a, e, &cotwist_projective(&a, e, &p).unwrap()).unwrap();
                assert!(homotopy_equivalent(&reduce(&y), &p, 0).is_some(), "n={n} e={e} w={w}");
            }
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(16))]

    #[test]
    fn spherelike_is_shift_stable(k in -3i32..=3, n in 2usize..=4, i in 0usize..4) {
        prop_assume!(i < n);
        let a = para(n);
        let e = Complex::projective(&a, i);
        let base = check_spherelike(&e, 0);
        let moved = check_spherelike(&e.shift(k), 0);
        prop_assert_eq!(base.pass, moved.pass);
        prop_assert_eq!(base.end.dims, moved.end.dims);
        let le = resolve(&simple(&sl2(), 0, 0)).unwrap();
        prop_assert!(check_spherelike(&le.shift(k), 2).pass);
    }
}
