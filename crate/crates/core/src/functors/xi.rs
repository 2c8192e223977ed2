//! `Ξ_E` and `Ξ'_E` for an indecomposable projective `E = P(w)`, and the twists they give.

use std::sync::Arc;

use super::proj::{NatTrans, ProjFunctor};
use crate::error::{Error, Result};
use crate::homotopy::complex::{cocone, cone, Complex, PMat, Summand};
use crate::homotopy::lin::TWIST_GRADE;
use crate::homotopy::reduce::reduce;
use crate::path_algebra::{AElem, FDAlgebra};

/// `Ξ_E` with `ev: Ξ_E => id<-c>`, or `Ξ'_E` with `ev': id<c> => Ξ'_E`.
#[derive(Clone, Debug)]
pub struct XiFunctor {
    pub vertex: usize,
    pub functor: ProjFunctor,
    pub map: NatTrans,
}

fn require_spherelike(alg: &FDAlgebra, w: usize) -> Result<()> {
    let end = alg.block(w, w).len();
    if end != 2 {
        return Err(Error::Rejected(format!(
            "P({}) is not 0-spherelike: End has dimension {end}, expected 2",
            alg.vertex_label(w)
        )));
    }
    Ok(())
}

/// `Ξ'_{P(w)} P(v) = ∏_{b ∈ 1_w A 1_v} P(w)<c - deg b>`, with `Ξ'(α)` given by `b ↦ b α`.
pub fn xi_prime(alg: &Arc<FDAlgebra>, w: usize) -> Result<XiFunctor> {
    require_spherelike(alg, w)?;
    let c = TWIST_GRADE;
    let nv = alg.num_vertices();
    let bases: Vec<Vec<usize>> = (0..nv).map(|v| alg.block(w, v)).collect();
    let objects: Vec<Vec<Summand>> =
        bases.iter().map(|bs| bs.iter().map(|&b| Summand::new(w, c - alg.degree_of(b) as i32)).collect()).collect();
    let one_w = AElem::basis(alg.idempotent(w));
    let arrows = alg
        .quiver
        .arrows
        .iter()
        .enumerate()
        .map(|(a, arr)| {
            let (rows, cols) = (&bases[arr.target], &bases[arr.source]);
            let alpha = alg.arrow_elem(a);
            let mut m = PMat::zeros(rows.len(), cols.len());
            for (r, &b2) in rows.iter().enumerate() {
                let prod = alg.mul(&AElem::basis(b2), &alpha);
                for (col, &b) in cols.iter().enumerate() {
                    let k = prod.coeff(b);
                    if !num::Zero::is_zero(&k) {
                        m.set(r, col, one_w.scale(&k));
                    }
                }
            }
            m
        })
        .collect();
    let functor = ProjFunctor::new(alg, &format!("xi':P({})", alg.vertex_label(w)), objects, arrows)?;
    let comps = bases
        .iter()
        .map(|bs| {
            let mut m = PMat::zeros(bs.len(), 1);
            for (r, &b) in bs.iter().enumerate() {
                m.set(r, 0, AElem::basis(b));
            }
            m
        })
        .collect();
    let map = NatTrans { dom: ProjFunctor::identity(alg, c), cod: functor.clone(), comps };
    Ok(XiFunctor { vertex: w, functor, map })
}

/// `Ξ_{P(w)} P(v) = ⊕_{a ∈ 1_v A 1_w} P(w)<deg a - c>`, with `Ξ(α)` given by `a ↦ α a`.
pub fn xi(alg: &Arc<FDAlgebra>, w: usize) -> Result<XiFunctor> {
    require_spherelike(alg, w)?;
    let c = TWIST_GRADE;
    let nv = alg.num_vertices();
    let bases: Vec<Vec<usize>> = (0..nv).map(|v| alg.block(v, w)).collect();
    let objects: Vec<Vec<Summand>> =
        bases.iter().map(|bs| bs.iter().map(|&a| Summand::new(w, alg.degree_of(a) as i32 - c)).collect()).collect();
    let one_w = AElem::basis(alg.idempotent(w));
    let arrows = alg
        .quiver
        .arrows
        .iter()
        .enumerate()
        .map(|(k, arr)| {
            let (rows, cols) = (&bases[arr.target], &bases[arr.source]);
            let alpha = alg.arrow_elem(k);
            let mut m = PMat::zeros(rows.len(), cols.len());
            for (col, &a) in cols.iter().enumerate() {
                let prod = alg.mul(&alpha, &AElem::basis(a));
                for (r, &a2) in rows.iter().enumerate() {
                    let x = prod.coeff(a2);
                    if !num::Zero::is_zero(&x) {
                        m.set(r, col, one_w.scale(&x));
                    }
                }
            }
            m
        })
        .collect();
    let functor = ProjFunctor::new(alg, &format!("xi:P({})", alg.vertex_label(w)), objects, arrows)?;
    let comps = bases
        .iter()
        .map(|bs| {
            let mut m = PMat::zeros(1, bs.len());
            for (col, &a) in bs.iter().enumerate() {
                m.set(0, col, AElem::basis(a));
            }
            m
        })
        .collect();
    let map = NatTrans { dom: functor.clone(), cod: ProjFunctor::identity(alg, -c), comps };
    Ok(XiFunctor { vertex: w, functor, map })
}

/// `T_{P(w)} X = cone(ev_X)`, reduced.
pub fn twist_projective(alg: &Arc<FDAlgebra>, w: usize, x: &Complex) -> Result<Complex> {
    let t = xi(alg, w)?;
    Ok(reduce(&cone(&t.map.on_complex(x))?))
}

/// `T'_{P(w)} X = cocone(ev'_X)`, reduced.
pub fn cotwist_projective(alg: &Arc<FDAlgebra>, w: usize, x: &Complex) -> Result<Complex> {
    let t = xi_prime(alg, w)?;
    Ok(reduce(&cocone(&t.map.on_complex(x))?))
}
