//! Wall-crossing `Θ_{s_i}` with its unit and counit, and derived shuffling.

use std::sync::Arc;

use num::{One, Zero};

use super::proj::{natural_transformations, NatTrans, ProjFunctor};
use crate::error::{Error, Result};
use crate::homotopy::complex::{cocone, cone, Complex, PMat, Summand};
use crate::homotopy::reduce::reduce;
use crate::linalg::Q;
use crate::path_algebra::{AElem, FDAlgebra};
use crate::qmod::series::{is_isomorphic, parabolic_verma};

/// A functor on projectives with a unit `id<1> => F` and a counit `F => id<-1>`.
#[derive(Clone, Debug)]
pub struct TwoTermFunctor {
    pub functor: ProjFunctor,
    pub unit: NatTrans,
    pub counit: Option<NatTrans>,
}

/// The arrows `σ_k -> σ_{k+1}` and `σ_{k+1} -> σ_k` of a chain-shaped quiver.
pub(crate) fn chain_arrows(alg: &FDAlgebra) -> Result<(Vec<usize>, Vec<usize>)> {
    let q = &alg.quiver;
    let n = q.num_vertices();
    let mut up = Vec::new();
    let mut down = Vec::new();
    for k in 0..n.saturating_sub(1) {
        match (q.arrow_between(k, k + 1), q.arrow_between(k + 1, k)) {
            (Some(u), Some(d)) => {
                up.push(u);
                down.push(d);
            }
            _ => {
                return Err(Error::Unsupported(format!(
                    "algebra {} is not a bundled chain-shaped block (missing arrows at vertex {k})",
                    alg.name
                )))
            }
        }
    }
    if q.arrows.len() != 2 * up.len() {
        return Err(Error::Unsupported(format!("algebra {} has arrows outside the chain", alg.name)));
    }
    Ok((up, down))
}

fn unit_entry(alg: &FDAlgebra, rows: usize, cols: usize, at: (usize, usize), v: usize) -> PMat {
    let mut m = PMat::zeros(rows, cols);
    m.set(at.0, at.1, AElem::basis(alg.idempotent(v)));
    m
}

/// `Θ_{s_i}` on projectives: `P(σ_{i±1}) ↦ P(σ_i)` and `P(σ_i) ↦ P(σ_i)<1> ⊕ P(σ_i)<-1>`,
/// with the images of the generating arrows read off the naturality squares.
pub fn theta_functor(alg: &Arc<FDAlgebra>, i: usize) -> Result<ProjFunctor> {
    let (up, down) = chain_arrows(alg)?;
    let n = alg.num_vertices();
    if i == 0 || i >= n {
        return Err(Error::Invalid(format!("s{i} is not a simple reflection for a block with {n} vertices")));
    }
    let mut objects = vec![Vec::new(); n];
    objects[i - 1] = vec![Summand::new(i, 0)];
    objects[i] = vec![Summand::new(i, 1), Summand::new(i, -1)];
    if i + 1 < n {
        objects[i + 1] = vec![Summand::new(i, 0)];
    }
    let q = &alg.quiver;
    let mut arrows: Vec<PMat> = q
        .arrows
        .iter()
        .map(|a| PMat::zeros(objects[a.target].len(), objects[a.source].len()))
        .collect();
    // into the <1> copy from the neighbours, out of the <-1> copy to the neighbours
    arrows[up[i - 1]] = unit_entry(alg, 2, 1, (0, 0), i);
    arrows[down[i - 1]] = unit_entry(alg, 1, 2, (0, 1), i);
    if i + 1 < n {
        arrows[down[i]] = unit_entry(alg, 2, 1, (0, 0), i);
        arrows[up[i]] = unit_entry(alg, 1, 2, (0, 1), i);
    }
    ProjFunctor::new(alg, &format!("theta:s{i}"), objects, arrows)
}

/// Scale a transformation so that the idempotent coefficient at `(v, r, c)` is one.
fn normalize(t: &NatTrans, alg: &FDAlgebra, v: usize, r: usize, c: usize, w: usize) -> Option<NatTrans> {
    let lead = t.comps[v].get(r, c).coeff(alg.idempotent(w));
    if lead.is_zero() {
        return None;
    }
    let inv = Q::one() / lead;
    let comps = t.comps.iter().map(|m| m.scale(&inv)).collect();
    Some(NatTrans { dom: t.dom.clone(), cod: t.cod.clone(), comps })
}

/// Candidates for a normalized natural transformation from a solution basis.
fn candidates(basis: &[NatTrans]) -> Vec<NatTrans> {
    let mut out: Vec<NatTrans> = basis.to_vec();
    if basis.len() > 1 {
        // the plain sum catches a unit spread over several basis vectors
        let mut sum = basis[0].clone();
        for t in &basis[1..] {
            sum.comps = sum.comps.iter().zip(&t.comps).map(|(a, b)| a.add(b)).collect();
        }
        out.push(sum);
    }
    out
}

/// `Θ_{s_i}` with unit and counit solved from naturality, and validated on parabolic Vermas:
/// `coker(η_{M(σ_{i-1})}) ≅ M(σ_i)` and `Θ M(σ_i) ≅ Θ M(σ_{i-1})<-1>`.
pub fn theta(alg: &Arc<FDAlgebra>, i: usize) -> Result<TwoTermFunctor> {
    let f = theta_functor(alg, i)?;
    let id_up = ProjFunctor::identity(alg, 1);
    let id_down = ProjFunctor::identity(alg, -1);
    let units = natural_transformations(&id_up, &f);
    let counits = natural_transformations(&f, &id_down);
    let unit = candidates(&units)
        .iter()
        .filter_map(|t| normalize(t, alg, i, 0, 0, i))
        .find(|t| validate_unit(alg, &f, t, i).is_ok())
        .ok_or_else(|| {
            let err = units
                .first()
                .map(|t| validate_unit(alg, &f, t, i).err().map(|e| e.to_string()).unwrap_or_default())
                .unwrap_or_else(|| "no natural transformation id<1> => Θ".into());
            Error::Rejected(format!("no valid unit for {}: {err}", f.name))
        })?;
    let counit = candidates(&counits).iter().find_map(|t| normalize(t, alg, i, 0, 1, i));
    Ok(TwoTermFunctor { functor: f, unit, counit })
}

/// The defining sequence `0 -> M(w)<1> -> Θ M(w) -> M(ws) -> 0` for `w = σ_{i-1}`.
pub fn validate_unit(alg: &Arc<FDAlgebra>, f: &ProjFunctor, unit: &NatTrans, i: usize) -> Result<()> {
    if !unit.is_natural() {
        return Err(Error::Rejected("unit is not natural".into()));
    }
    let mw = parabolic_verma(alg, i - 1)?;
    let mws = parabolic_verma(alg, i)?;
    let (coker, _) = f.presented_cokernel(&mw, Some(unit))?;
    if !is_isomorphic(&coker, &mws, 0).is_iso() {
        return Err(Error::Rejected(format!(
            "coker(η) on M({}) is not M({})",
            alg.vertex_label(i - 1),
            alg.vertex_label(i)
        )));
    }
    let tw = f.apply_module(&mw)?;
    let tws = f.apply_module(&mws)?;
    if !is_isomorphic(&tws, &tw.shift(-1), 0).is_iso() {
        return Err(Error::Rejected(format!("Θ M({}) is not Θ M({})<-1>", alg.vertex_label(i), alg.vertex_label(i - 1))));
    }
    Ok(())
}

impl TwoTermFunctor {
    /// `cone(η_X: X<1> -> F X)`, unreduced.
    pub fn unit_cone(&self, x: &Complex) -> Complex {
        cone(&self.unit.on_complex(x)).expect("unit has degree (0, 0)")
    }

    /// `cocone(ε_X: F X -> X<-1>)`, unreduced.
    pub fn counit_cocone(&self, x: &Complex) -> Result<Complex> {
        let eps = self.counit.as_ref().ok_or_else(|| Error::Unsupported(format!("{} has no counit", self.functor.name)))?;
        cocone(&eps.on_complex(x))
    }
}

/// `LSh_{s_i} X`, reduced.
pub fn shuffle(t: &TwoTermFunctor, x: &Complex) -> Complex {
    reduce(&t.unit_cone(x))
}

/// `RCsh_{s_i} X`, reduced.
pub fn coshuffle(t: &TwoTermFunctor, x: &Complex) -> Result<Complex> {
    Ok(reduce(&t.counit_cocone(x)?))
}
