//! Object and functor names on the command line.

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::functors::{coshuffle, cotwist_projective, shuffle, theta, twist_projective};
use crate::homotopy::{cotwist, resolve, twist, Complex};
use crate::path_algebra::FDAlgebra;
use crate::qmod::{parabolic_verma, simple};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Kind {
    P,
    M,
    L,
}

/// `P:LABEL`, `M:LABEL` or `L:LABEL`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ObjectSpec {
    pub kind: Kind,
    pub vertex: usize,
}

impl ObjectSpec {
    pub fn parse(alg: &FDAlgebra, s: &str) -> Result<Self> {
        let (k, label) =
            s.split_once(':').ok_or_else(|| Error::Parse(format!("object '{s}': expected P:LABEL, M:LABEL or L:LABEL")))?;
        let kind = match k.trim() {
            "P" => Kind::P,
            "M" => Kind::M,
            "L" => Kind::L,
            other => return Err(Error::Parse(format!("object '{s}': unknown kind '{other}'"))),
        };
        let vertex = alg.vertex(label.trim()).map_err(|e| Error::Parse(format!("object '{s}': {e}")))?;
        Ok(ObjectSpec { kind, vertex })
    }

    pub fn name(&self, alg: &FDAlgebra) -> String {
        let k = match self.kind {
            Kind::P => "P",
            Kind::M => "M",
            Kind::L => "L",
        };
        format!("{k}({})", alg.vertex_label(self.vertex))
    }

    /// The object as a complex of projectives (a minimal resolution for `M` and `L`).
    pub fn complex(&self, alg: &Arc<FDAlgebra>) -> Result<Complex> {
        match self.kind {
            Kind::P => Ok(Complex::projective(alg, self.vertex)),
            Kind::M => resolve(&parabolic_verma(alg, self.vertex)?),
            Kind::L => resolve(&simple(alg, self.vertex, 0)),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FunctorSpec {
    Theta(usize),
    Shuffle(usize),
    Coshuffle(usize),
    Twist(ObjectSpec),
    Cotwist(ObjectSpec),
}

fn reflection(alg: &FDAlgebra, s: &str) -> Result<usize> {
    let s = s.trim();
    let rest = s.strip_prefix('s').ok_or_else(|| Error::Parse(format!("reflection '{s}': expected s or sN")))?;
    let i = if rest.is_empty() {
        1
    } else {
        rest.parse().map_err(|_| Error::Parse(format!("reflection '{s}': bad index")))?
    };
    let n = alg.num_vertices();
    if i == 0 || i >= n {
        return Err(Error::Invalid(format!("reflection '{s}': index must lie in 1..{n}")));
    }
    Ok(i)
}

impl FunctorSpec {
    /// `theta:sI`, `shuffle:sI`, `coshuffle:sI`, `twist:OBJECT`, `cotwist:OBJECT`.
    pub fn parse(alg: &FDAlgebra, s: &str) -> Result<Self> {
        let (head, rest) = s.split_once(':').ok_or_else(|| Error::Parse(format!("functor '{s}': expected NAME:ARG")))?;
        match head.trim() {
            "theta" => Ok(FunctorSpec::Theta(reflection(alg, rest)?)),
            "shuffle" => Ok(FunctorSpec::Shuffle(reflection(alg, rest)?)),
            "coshuffle" => Ok(FunctorSpec::Coshuffle(reflection(alg, rest)?)),
            "twist" => Ok(FunctorSpec::Twist(ObjectSpec::parse(alg, rest)?)),
            "cotwist" => Ok(FunctorSpec::Cotwist(ObjectSpec::parse(alg, rest)?)),
            other => Err(Error::Parse(format!("functor '{s}': unknown functor '{other}'"))),
        }
    }

    /// Twists by an indecomposable projective go through the bimodule `Ξ_E`; all others through `hom•`.
    pub fn apply(&self, alg: &Arc<FDAlgebra>, x: &Complex) -> Result<Complex> {
        match self {
            FunctorSpec::Theta(i) => Ok(theta(alg, *i)?.functor.apply_complex(x)),
            FunctorSpec::Shuffle(i) => Ok(shuffle(&theta(alg, *i)?, x)),
            FunctorSpec::Coshuffle(i) => coshuffle(&theta(alg, *i)?, x),
            FunctorSpec::Twist(e) if e.kind == Kind::P => twist_projective(alg, e.vertex, x),
            FunctorSpec::Cotwist(e) if e.kind == Kind::P => cotwist_projective(alg, e.vertex, x),
            FunctorSpec::Twist(e) => twist(&e.complex(alg)?, x),
            FunctorSpec::Cotwist(e) => cotwist(&e.complex(alg)?, x),
        }
    }
}
