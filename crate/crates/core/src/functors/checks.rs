//! Spherelike, spherical and configuration checks, and Grothendieck group consistency.

use std::collections::BTreeMap;
use std::sync::Arc;


use super::theta::TwoTermFunctor;
use crate::coxeter_hecke::{k0_base_change, k0_shuffle_shadow, K0Basis, K0Class, K0Tables, LaurentPoly};
use crate::error::Result;
use crate::homotopy::complex::{euler_characteristic, Complex};
use crate::homotopy::homcx::{derived_end_ring, hom_complex, EndRing};
use crate::homotopy::resolve::homology;
use crate::linalg::{coords_in, fmt_q, Mat, Q};
use crate::path_algebra::FDAlgebra;
use crate::qmod::module::{projective, QModule};
use crate::qmod::series::{composition_multiplicities, decompose_projective};

/// A vertex with its total `hom•(P(w), E)` and `hom•(E, P(w))` dimensions by degree.
pub type VertexHoms = (usize, BTreeMap<i32, usize>, BTreeMap<i32, usize>);

/// Both spherelike conditions for a candidate `d`-spherelike object.
#[derive(Clone, Debug)]
pub struct SpherelikeVerdict {
    pub d: i32,
    /// total `hom•(P(w), E)` and `hom•(E, P(w))` dimensions by degree, for every vertex
    pub s1: Vec<VertexHoms>,
    pub end: EndRing,
    pub pass: bool,
    pub reason: String,
}

/// A composition pairing `Hom^i(P(w), E) × Hom^{d-i}(E, P(w)) -> k x`.
#[derive(Clone, Debug)]
pub struct Pairing {
    pub vertex: usize,
    pub i: i32,
    pub matrix: Mat,
    pub nondegenerate: bool,
}

#[derive(Clone, Debug)]
pub struct SphericalVerdict {
    pub spherelike: SpherelikeVerdict,
    pub pairings: Vec<Pairing>,
    pub pass: bool,
    pub reason: String,
}

#[derive(Clone, Debug)]
pub struct ConfigurationVerdict {
    pub spherical: Vec<bool>,
    /// total derived Hom dimension between every ordered pair
    pub hom_totals: Vec<Vec<usize>>,
    pub pattern_ok: bool,
    pub pass: bool,
    pub reason: String,
}

fn expected_end_dims(d: i32) -> BTreeMap<i32, usize> {
    if d == 0 {
        BTreeMap::from([(0, 2)])
    } else {
        BTreeMap::from([(0, 1), (d, 1)])
    }
}

pub fn check_spherelike(e: &Complex, d: i32) -> SpherelikeVerdict {
    let alg = e.alg();
    let s1 = (0..alg.num_vertices())
        .map(|w| {
            let p = Complex::projective(alg, w);
            (w, hom_complex(&p, e).vs.total_dims(), hom_complex(e, &p).vs.total_dims())
        })
        .collect();
    let end = derived_end_ring(e);
    let want = expected_end_dims(d);
    let (pass, reason) = if e.is_zero() {
        (false, "zero object".to_string())
    } else if end.dims != want {
        let total: usize = end.dims.values().sum();
        (false, format!("Hom*(E,E) has dimensions {:?} (total {total}), expected {:?}", end.dims, want))
    } else if end.generator.map(|g| g.0) != Some(d) {
        (false, format!("no generator in degree {d}"))
    } else if end.x_squared_zero != Some(true) {
        (false, "x^2 is not zero".to_string())
    } else {
        (true, format!("Hom*(E,E) = k[x]/(x^2) with x in degree {d}"))
    };
    SpherelikeVerdict { d, s1, end, pass, reason }
}

/// Vector of the identity of `E` in `hom^0(E, E)`.
fn identity_vector(e: &Complex) -> Vec<Q> {
    let hc = hom_complex(e, e);
    hc.vector_of_map(&crate::homotopy::complex::ChainMap::identity(e))
}

pub fn check_spherical(e: &Complex, d: i32) -> SphericalVerdict {
    let spherelike = check_spherelike(e, d);
    if !spherelike.pass {
        let reason = format!("not {d}-spherelike: {}", spherelike.reason);
        return SphericalVerdict { spherelike, pairings: Vec::new(), pass: false, reason };
    }
    let alg = e.alg();
    let hce = hom_complex(e, e);
    let x = spherelike.end.x.as_ref().expect("spherelike generator");
    let n = hce.vs.dim(d);
    let mut quotient: Vec<Vec<Q>> = Vec::new();
    for s in hce.vs.internal_degrees(d) {
        quotient.extend(hce.vs.coboundaries(d, s));
    }
    if d == 0 {
        quotient.push(identity_vector(e));
    }
    let x_pos = quotient.len();
    quotient.push(hce.vector_of_map(x));
    let mut pairings = Vec::new();
    let mut pass = true;
    let mut reason = String::from("all composition pairings are non-degenerate");
    for w in 0..alg.num_vertices() {
        let p = Complex::projective(alg, w);
        let hc1 = hom_complex(&p, e);
        let hc2 = hom_complex(e, &p);
        let mut degrees: Vec<i32> = hc1.vs.tags.keys().copied().collect();
        degrees.extend(hc2.vs.tags.keys().map(|k| d - k));
        degrees.sort_unstable();
        degrees.dedup();
        for i in degrees {
            let left: Vec<Vec<Q>> =
                hc1.vs.internal_degrees(i).into_iter().flat_map(|s| hc1.vs.cohomology_basis(i, s)).collect();
            let right: Vec<Vec<Q>> = hc2
                .vs
                .internal_degrees(d - i)
                .into_iter()
                .flat_map(|s| hc2.vs.cohomology_basis(d - i, s))
                .collect();
            if left.is_empty() && right.is_empty() {
                continue;
            }
            let mut m = Mat::zeros(left.len(), right.len());
            for (r, f) in left.iter().enumerate() {
                let fm = hc1.map_of(i, f);
                for (c, g) in right.iter().enumerate() {
                    let gm = hc2.map_of(d - i, g);
                    let comp = fm.compose(&gm);
                    let v = hce.vector_of(d, &comp.comps);
                    let coords = coords_in(n, &quotient, &v).expect("composition is a cocycle of E");
                    m.set(r, c, coords[x_pos].clone());
                }
            }
            let ok = m.rows() == m.cols() && m.is_invertible();
            if !ok && pass {
                pass = false;
                reason = format!(
                    "pairing at P({}), degree {i} is {}x{} of rank {}",
                    alg.vertex_label(w),
                    m.rows(),
                    m.cols(),
                    m.rank()
                );
            }
            pairings.push(Pairing { vertex: w, i, matrix: m, nondegenerate: ok });
        }
    }
    SphericalVerdict { spherelike, pairings, pass, reason }
}

/// `dim Hom*(E_i, E_j) = 1` for `|i - j| = 1` and `0` for `|i - j| > 1`, each `E_i` being `d`-spherical.
pub fn check_an_configuration(objects: &[Complex], d: i32) -> ConfigurationVerdict {
    let spherical: Vec<bool> = objects.iter().map(|e| check_spherical(e, d).pass).collect();
    let k = objects.len();
    let mut hom_totals = vec![vec![0; k]; k];
    let mut pattern_ok = true;
    let mut reason = format!("A_{k}-configuration of {d}-spherical objects");
    for i in 0..k {
        for j in 0..k {
            let total: usize = hom_complex(&objects[i], &objects[j]).vs.total_dims().values().sum();
            hom_totals[i][j] = total;
            if i == j {
                continue;
            }
            let want = usize::from(i.abs_diff(j) == 1);
            if total != want && pattern_ok {
                pattern_ok = false;
                reason = format!("dim Hom*(E_{}, E_{}) = {total}, expected {want}", i + 1, j + 1);
            }
        }
    }
    if let Some(bad) = spherical.iter().position(|s| !s) {
        if pattern_ok {
            reason = format!("E_{} is not {d}-spherical", bad + 1);
        }
    }
    let pass = pattern_ok && spherical.iter().all(|s| *s);
    ConfigurationVerdict { spherical, hom_totals, pattern_ok, pass, reason }
}

fn labels(alg: &FDAlgebra) -> Vec<String> {
    alg.quiver.vertices.clone()
}

fn add_simple(c: &mut K0Class, v: usize, degree: i32, n: i64) {
    c.coeffs[v] = &c.coeffs[v] + &LaurentPoly::monomial(degree, Q::from_integer(n.into()));
}

/// Class of a module in the simple basis, `[L(x)<d>] = v^d [L(x)]`.
pub fn module_class(m: &QModule) -> K0Class {
    let mut c = K0Class::zero(&labels(m.alg()), K0Basis::L);
    for ((x, d), k) in composition_multiplicities(m) {
        add_simple(&mut c, x, d, k as i64);
    }
    c
}

/// Euler characteristic of a complex of projectives in the simple basis.
pub fn complex_class(x: &Complex) -> K0Class {
    let alg = x.alg();
    let mut c = K0Class::zero(&labels(alg), K0Basis::L);
    let comps: Vec<_> = (0..alg.num_vertices()).map(|v| composition_multiplicities(&projective(alg, v))).collect();
    for ((v, k), n) in euler_characteristic(x) {
        for (&(y, d), &m) in &comps[v] {
            add_simple(&mut c, y, d + k, n * m as i64);
        }
    }
    c
}

fn class_sub(a: &K0Class, b: &K0Class) -> K0Class {
    let coeffs = a.coeffs.iter().zip(&b.coeffs).map(|(x, y)| x - y).collect();
    K0Class { labels: a.labels.clone(), coeffs, basis: a.basis }
}

fn class_shift(a: &K0Class, k: i32) -> K0Class {
    K0Class { labels: a.labels.clone(), coeffs: a.coeffs.iter().map(|x| x.shift(k)).collect(), basis: a.basis }
}

/// Two computations of `[LSh X]`, and for `sl2` the Hecke algebra prediction.
#[derive(Clone, Debug)]
pub struct EulerVerdict {
    /// Euler class of `cone(η_X)`
    pub cone_class: K0Class,
    /// `Σ_j (-1)^j ([Θ H_j X] - v [H_j X])`
    pub homology_class: K0Class,
    /// `[X] H_s` and `[cone(η_X)]`, both in the Verma basis, for `sl2`
    pub shadow: Option<(K0Class, K0Class)>,
    pub pass: bool,
}

pub fn render_class(c: &K0Class) -> String {
    let tag = match c.basis {
        K0Basis::L => "L",
        K0Basis::M => "M",
        K0Basis::P => "P",
    };
    let parts: Vec<String> = c
        .labels
        .iter()
        .zip(&c.coeffs)
        .filter(|(_, x)| !x.is_zero())
        .map(|(l, x)| format!("({})[{tag}({l})]", x.render("v")))
        .collect();
    if parts.is_empty() {
        "0".into()
    } else {
        parts.join(" + ")
    }
}

pub fn euler_consistency(t: &TwoTermFunctor, x: &Complex) -> Result<EulerVerdict> {
    let alg = x.alg();
    let cone_class = complex_class(&t.unit_cone(x));
    let mut homology_class = K0Class::zero(&labels(alg), K0Basis::L);
    for (j, h) in homology(x)? {
        let th = module_class(&t.functor.apply_module(&h)?);
        let d = class_sub(&th, &class_shift(&module_class(&h), 1));
        let signed = if j.rem_euclid(2) == 0 { d } else { class_sub(&K0Class::zero(&labels(alg), K0Basis::L), &d) };
        homology_class = K0Class {
            labels: homology_class.labels.clone(),
            coeffs: homology_class.coeffs.iter().zip(&signed.coeffs).map(|(a, b)| a + b).collect(),
            basis: K0Basis::L,
        };
    }
    let mut pass = cone_class == homology_class;
    let shadow = if alg.num_vertices() == 2 {
        let tables = K0Tables::principal(2)?;
        let relabel = |c: &K0Class| K0Class { labels: tables.labels.clone(), coeffs: c.coeffs.clone(), basis: c.basis };
        let xm = k0_base_change(&relabel(&complex_class(x)), K0Basis::M, &tables)?;
        let predicted = k0_shuffle_shadow(&xm, 2, 1)?;
        let actual = k0_base_change(&relabel(&cone_class), K0Basis::M, &tables)?;
        pass &= predicted == actual;
        Some((predicted, actual))
    } else {
        None
    };
    Ok(EulerVerdict { cone_class, homology_class, shadow, pass })
}

/// `Θ Θ P(w) ≅ Θ P(w)<-1> ⊕ Θ P(w)<1>` as multisets of indecomposable projectives.
pub fn theta_squared(t: &TwoTermFunctor, w: usize) -> Result<bool> {
    let alg: &Arc<FDAlgebra> = &t.functor.alg;
    let once = t.functor.apply_module(&projective(alg, w))?;
    let twice = decompose_projective(&t.functor.apply_module(&once)?)?;
    let base = decompose_projective(&once)?;
    let mut want: Vec<(usize, i32)> = base.iter().flat_map(|&(v, k)| [(v, k - 1), (v, k + 1)]).collect();
    want.sort();
    Ok(twice == want)
}

/// Text rendering of a pairing matrix.
pub fn render_matrix(m: &Mat) -> String {
    let rows: Vec<String> =
        (0..m.rows()).map(|r| (0..m.cols()).map(|c| fmt_q(m.get(r, c))).collect::<Vec<_>>().join(" ")).collect();
    format!("[{}]", rows.join("; "))
}
