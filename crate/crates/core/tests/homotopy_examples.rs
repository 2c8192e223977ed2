use std::collections::BTreeMap;
use std::sync::Arc;

use shuffle_twist::homotopy::*;
use shuffle_twist::path_algebra::{parabolic_sl, sl2_principal, FDAlgebra};
use shuffle_twist::qmod::*;

fn sl2() -> Arc<FDAlgebra> {
    Arc::new(sl2_principal().unwrap())
}

fn one_by_one(alg: &FDAlgebra, name: &str) -> PMat {
    let mut m = PMat::zeros(1, 1);
    m.set(0, 0, alg.arrow_elem(alg.quiver.arrow_index(name).unwrap()));
    m
}

/// The map `a: P(e)<1> -> P(s)` as a chain map of complexes in degree 0.
fn map_a(a: &Arc<FDAlgebra>) -> ChainMap {
    let (e, s) = (a.vertex("e").unwrap(), a.vertex("s").unwrap());
    let dom = Complex::concentrated(a, 0, vec![Summand::new(e, 1)]);
    let cod = Complex::projective(a, s);
    ChainMap { dom, cod, hdeg: 0, internal: 0, comps: BTreeMap::from([(0, one_by_one(a, "a"))]) }
}

fn summands(x: &Complex) -> Vec<(i32, Vec<(String, i32)>)> {
    x.terms()
        .iter()
        .map(|(j, t)| (*j, t.iter().map(|s| (x.alg().vertex_label(s.vertex).to_string(), s.shift)).collect()))
        .collect()
}

fn owned(v: &[(i32, &[(&str, i32)])]) -> Vec<(i32, Vec<(String, i32)>)> {
    v.iter().map(|(j, t)| (*j, t.iter().map(|(l, s)| (l.to_string(), *s)).collect())).collect()
}

#[test]
fn cone_of_a_has_homology_m_s() {
    let a = sl2();
    let c = cone(&map_a(&a)).unwrap();
    c.validate().unwrap();
    let h = homology(&c).unwrap();
    assert_eq!(h.keys().copied().collect::<Vec<_>>(), vec![0]);
    let ms = parabolic_verma(&a, 1).unwrap();
    assert!(is_isomorphic(&h[&0], &ms, 1).is_iso());
    // M(s) = L(s) in the principal sl2 block
    assert!(is_isomorphic(&ms, &simple(&a, a.vertex("s").unwrap(), 0), 1).is_iso());
}

#[test]
fn cone_of_identity_and_zero_map() {
    let a = sl2();
    let x = resolve(&simple(&a, 0, 0)).unwrap();
    let c = cone(&ChainMap::identity(&x)).unwrap();
    c.validate().unwrap();
    assert!(homology_dims(&c).is_empty());
    assert!(reduce(&c).is_zero());
    let p = Complex::projective(&a, 1);
    let z = cone(&ChainMap::zero(&x, &p, 0, 0)).unwrap();
    let expect = p.direct_sum(&x.shift(-1));
    assert_eq!(z.summand_multiset(), expect.summand_multiset());
}

#[test]
fn resolutions_of_simple_and_verma() {
    let a = sl2();
    let le = resolve(&simple(&a, 0, 0)).unwrap();
    assert_eq!(summands(&le), owned(&[(0, &[("e", 0)]), (1, &[("s", 1)]), (2, &[("e", 2)])]));
    assert_eq!(le.render_compact(), "{ [2] P(e) -> [1] P(s) -> [0] P(e) }");
    let ms = resolve(&parabolic_verma(&a, 1).unwrap()).unwrap();
    assert_eq!(summands(&ms), owned(&[(0, &[("s", 0)]), (1, &[("e", 1)])]));
    let ps = resolve(&projective(&a, 1)).unwrap();
    assert_eq!(summands(&ps), owned(&[(0, &[("s", 0)])]));
    // resolutions are minimal, so reduce leaves them alone
    assert_eq!(write_complex("x", &reduce(&le)), write_complex("x", &le));
}

#[test]
fn homology_of_resolution_is_the_module() {
    let a = Arc::new(parabolic_sl(3).unwrap());
    for w in 0..3 {
        let m = simple(&a, w, 0);
        let r = resolve(&m).unwrap();
        let h = homology(&r).unwrap();
        assert_eq!(h.len(), 1);
        assert!(is_isomorphic(&h[&0], &m, 3).is_iso());
        let h1 = homology(&r.shift(1)).unwrap();
        assert_eq!(h1.keys().copied().collect::<Vec<_>>(), vec![-1]);
    }
}

#[test]
fn hom_complexes_against_resolution_of_le() {
    let a = sl2();
    let le = resolve(&simple(&a, 0, 0)).unwrap();
    let ps = Complex::projective(&a, 1);
    let pe = Complex::projective(&a, 0);
    assert!(hom_complex(&ps, &le).vs.cohomology_dims().is_empty());
    let h = hom_complex(&pe, &le);
    assert_eq!(h.vs.cohomology_dims(), BTreeMap::from([((0, 0), 1)]));
    // the cocycle is the inclusion of P(e) into the degree-0 term
    let rep = &h.vs.cohomology_basis(0, 0)[0];
    let f = h.map_of(0, rep);
    assert!(f.is_chain_map());
    assert_eq!(f.comp(0).get(0, 0).as_single().map(|(i, _)| i), Some(a.idempotent(0)));
    let id = ChainMap::identity(&le);
    let hx = hom_complex(&le, &le);
    let v = hx.vector_of_map(&id);
    assert!(hx.vs.diff(0).mul_vec(&v).iter().all(num::Zero::is_zero));
}

#[test]
fn derived_end_rings() {
    let a = sl2();
    let le = derived_end_ring_of(&simple(&a, 0, 0)).unwrap();
    assert_eq!(le.dims, BTreeMap::from([(0, 1), (2, 1)]));
    assert_eq!(le.generator.map(|g| g.0), Some(2));
    assert_eq!(le.x_squared_zero, Some(true));
    let ms = derived_end_ring_of(&parabolic_verma(&a, 1).unwrap()).unwrap();
    assert_eq!(ms.dims, BTreeMap::from([(0, 1)]));
    for w in 0..2 {
        let p = derived_end_ring_of(&projective(&a, w)).unwrap();
        assert!(p.dims.keys().all(|&j| j == 0));
    }
}

#[test]
fn tensor_and_lin_of_one_dimensional_space() {
    let a = sl2();
    let x = resolve(&simple(&a, 0, 0)).unwrap();
    let v = VSComplex { tags: BTreeMap::from([(0, vec![TWIST_GRADE])]), d: BTreeMap::new() };
    assert_eq!(write_complex("x", &vs_tensor(&v, &x, TWIST_GRADE)), write_complex("x", &x));
    assert_eq!(write_complex("x", &vs_lin(&v, &x, TWIST_GRADE)), write_complex("x", &x));
}

#[test]
fn coevaluation_examples() {
    let a = sl2();
    let ps = Complex::projective(&a, 1);
    let pe = Complex::projective(&a, 0);
    let f = coevaluation(&ps, &pe, TWIST_GRADE);
    assert!(f.is_chain_map());
    assert_eq!(a.render_elem(f.comp(0).get(0, 0)), "a");
    let t = reduce(&cotwist(&ps, &pe).unwrap());
    assert_eq!(t.render_compact(), "{ [0] P(e) -> [-1] P(s) }");
    // T'_{P(s)} P(s) = {(1 x): P(s) -> P(s) ⊕ P(s)} ≃ P(s)⟦1⟧
    let raw = cotwist(&ps, &ps).unwrap();
    assert_eq!(raw.size(), 3);
    let red = reduce(&raw);
    assert_eq!(red.ungraded_multiset(), vec![(-1, 1)]);
    // 1_{σ2} A 1_{σ0} = 0 in parabolic-sl(3), so the coevaluation lands in zero
    let b = Arc::new(parabolic_sl(3).unwrap());
    let g = coevaluation(&Complex::projective(&b, 2), &Complex::projective(&b, 0), TWIST_GRADE);
    assert!(g.cod.is_zero() && g.is_zero());
}

#[test]
fn evaluation_is_a_chain_map() {
    let a = Arc::new(parabolic_sl(3).unwrap());
    let xs: Vec<Complex> = (0..3).map(|w| resolve(&simple(&a, w, 0)).unwrap()).collect();
    for e in &xs {
        for f in &xs {
            let ev = evaluation(e, f, TWIST_GRADE);
            ev.validate().unwrap();
            let co = coevaluation(e, f, TWIST_GRADE);
            co.validate().unwrap();
            twist(e, f).unwrap().validate().unwrap();
            cotwist(e, f).unwrap().validate().unwrap();
        }
    }
}

#[test]
fn cotwist_of_pe_by_le() {
    let a = sl2();
    let le = resolve(&simple(&a, 0, 0)).unwrap();
    let t = reduce(&cotwist(&le, &Complex::projective(&a, 0)).unwrap());
    assert_eq!(t.render_compact(), "{ [1] P(e) -> [0] P(s) }");
    let entry = t.diff(1).get(0, 0).clone();
    assert!(entry == a.arrow_elem(0) || entry == a.arrow_elem(0).neg());
}

#[test]
fn elimination_of_identity() {
    let a = sl2();
    let (e, s) = (0, 1);
    // {P(e)<1> -a-> P(s) -id-> P(s)} in degrees 2, 1, 0
    let terms = BTreeMap::from([(2, vec![Summand::new(e, 1)]), (1, vec![Summand::new(s, 0)]), (0, vec![Summand::new(s, 0)])]);
    let mut id = PMat::zeros(1, 1);
    id.set(0, 0, shuffle_twist::path_algebra::AElem::basis(a.idempotent(s)));
    let diffs = BTreeMap::from([(2, one_by_one(&a, "a")), (1, id)]);
    let x = Complex::from_parts(&a, terms, diffs);
    // d^2 = 0 fails here since id ∘ a = a ≠ 0
    assert!(x.validate().is_err());
    let terms = BTreeMap::from([(1, vec![Summand::new(e, 1), Summand::new(s, 0)]), (0, vec![Summand::new(s, 0)])]);
    let mut d = PMat::zeros(1, 2);
    d.set(0, 0, a.arrow_elem(0));
    d.set(0, 1, shuffle_twist::path_algebra::AElem::basis(a.idempotent(s)));
    let x = Complex::from_parts(&a, terms, BTreeMap::from([(1, d)]));
    x.validate().unwrap();
    let el = eliminate(&x, 1, &[1], &[0]).unwrap();
    assert_eq!(el.complex.render_compact(), "{ [1] P(e) }");
    el.proj.validate().unwrap();
    el.incl.validate().unwrap();
    assert!(eliminate(&x, 1, &[0], &[0]).is_err());
    assert_eq!(euler_characteristic(&x), euler_characteristic(&el.complex));
}

#[test]
fn homotopy_equivalence_verdicts() {
    let a = Arc::new(parabolic_sl(3).unwrap());
    let x = resolve(&simple(&a, 1, 0)).unwrap();
    let junk = cone(&ChainMap::identity(&resolve(&simple(&a, 2, 0)).unwrap())).unwrap();
    assert!(homotopy_equivalent(&junk.direct_sum(&x), &x, 7).is_some());
    assert!(homotopy_equivalent(&x, &x.shift(1), 7).is_none());
    let iso = homotopy_equivalent(&x, &x, 7).unwrap();
    iso.validate().unwrap();
}

#[test]
fn total_of_a_map_is_its_cone() {
    let a = sl2();
    let f = map_a(&a);
    let m = MultiComplex::from_map(&f).unwrap();
    assert_eq!(write_complex("c", &total(&m)), write_complex("c", &cone(&f).unwrap()));
}

#[test]
fn complex_format_round_trip() {
    let a = Arc::new(parabolic_sl(4).unwrap());
    for w in 0..4 {
        let x = resolve(&simple(&a, w, 0)).unwrap();
        let text = write_complex("res", &x);
        let (name, y) = parse_complex(&text, &a).unwrap();
        assert_eq!(name, "res");
        assert_eq!(write_complex("res", &y), text);
    }
    let bad = "complex x over parabolic-sl(4)\nterm 1 : P(e)\nterm 0 : P(s1)\ndiff 1 : 1 x 1\n  1_e\n";
    assert!(parse_complex(bad, &a).is_err());
}
