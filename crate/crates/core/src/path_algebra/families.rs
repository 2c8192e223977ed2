//! The bundled algebra families.

use super::algebra::{build_algebra, FDAlgebra, Relation, DEFAULT_DEGREE_GUARD};
use super::quiver::{Path, Quiver};
use crate::error::{Error, Result};
use crate::linalg::q;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Family {
    Sl2Principal,
    ParabolicSl(usize),
}

impl Family {
    /// Accepts `sl2`, `sl2-principal`, `parabolic-sl(N)` and `parabolic-sl:N`.
    pub fn parse(s: &str) -> Result<Self> {
        let s = s.trim();
        if s == "sl2" || s == "sl2-principal" {
            return Ok(Family::Sl2Principal);
        }
        let rest = s
            .strip_prefix("parabolic-sl(")
            .and_then(|r| r.strip_suffix(')'))
            .or_else(|| s.strip_prefix("parabolic-sl:"))
            .ok_or_else(|| Error::Parse(format!("unknown family '{s}'")))?;
        let n: usize =
            rest.trim().parse().map_err(|_| Error::Parse(format!("bad rank in family '{s}'")))?;
        if n < 2 {
            return Err(Error::Invalid(format!("parabolic-sl(n) needs n >= 2, got {n}")));
        }
        Ok(Family::ParabolicSl(n))
    }

    /// Number of weights `σ_0, ..., σ_{n-1}` (vertices).
    pub fn rank(&self) -> usize {
        match self {
            Family::Sl2Principal => 2,
            Family::ParabolicSl(n) => *n,
        }
    }

    pub fn name(&self) -> String {
        match self {
            Family::Sl2Principal => "sl2-principal".into(),
            Family::ParabolicSl(n) => format!("parabolic-sl({n})"),
        }
    }

    pub fn build(&self) -> Result<FDAlgebra> {
        match self {
            Family::Sl2Principal => sl2_principal(),
            Family::ParabolicSl(n) => parabolic_sl(*n),
        }
    }
}

pub fn family(name: &str) -> Result<FDAlgebra> {
    Family::parse(name)?.build()
}

fn path(q: &Quiver, rtl: &[&str]) -> Path {
    let arrows: Vec<usize> = rtl.iter().rev().map(|a| q.arrow_index(a).expect("known arrow")).collect();
    Path::from_arrows(q, &arrows).expect("composable path")
}

/// `e ⇄ s` with arrows `a: e -> s`, `b: s -> e` and the relation `b*a = 0`.
pub fn sl2_principal() -> Result<FDAlgebra> {
    let mut qv = Quiver::new();
    qv.add_vertex("e")?;
    qv.add_vertex("s")?;
    qv.add_arrow("a", "e", "s")?;
    qv.add_arrow("b", "s", "e")?;
    let rel = Relation::new(vec![(q(1), path(&qv, &["b", "a"]))]);
    build_algebra("sl2-principal", qv, vec![rel], DEFAULT_DEGREE_GUARD)
}

/// Label of `σ_i = s_1 ⋯ s_i`.
pub fn sigma_label(i: usize) -> String {
    if i == 0 {
        "e".into()
    } else {
        (1..=i).map(|k| format!("s{k}")).collect::<Vec<_>>().join("*")
    }
}

/// The parabolic block algebra with vertices `σ_0, ..., σ_{n-1}`.
///
/// Arrows `u_i: σ_i -> σ_{i+1}` and `d_i: σ_{i+1} -> σ_i`, subject to
/// `d0*u0 = 0`, `d_i*u_i = u_{i-1}*d_{i-1}` and every length-two path that
/// moves two steps in the same direction being zero.
pub fn parabolic_sl(n: usize) -> Result<FDAlgebra> {
    if n < 2 {
        return Err(Error::Invalid(format!("parabolic-sl(n) needs n >= 2, got {n}")));
    }
    let mut qv = Quiver::new();
    for i in 0..n {
        qv.add_vertex(&sigma_label(i))?;
    }
    for i in 0..n - 1 {
        let (a, b) = (sigma_label(i), sigma_label(i + 1));
        qv.add_arrow(&format!("u{i}"), &a, &b)?;
        qv.add_arrow(&format!("d{i}"), &b, &a)?;
    }
    let mut rels = vec![Relation::new(vec![(q(1), path(&qv, &["d0", "u0"]))])];
    for i in 1..n - 1 {
        rels.push(Relation::new(vec![
            (q(1), path(&qv, &[&format!("d{i}"), &format!("u{i}")])),
            (q(-1), path(&qv, &[&format!("u{}", i - 1), &format!("d{}", i - 1)])),
        ]));
    }
    for i in 0..n.saturating_sub(2) {
        rels.push(Relation::new(vec![(q(1), path(&qv, &[&format!("d{i}"), &format!("d{}", i + 1)]))]));
        rels.push(Relation::new(vec![(q(1), path(&qv, &[&format!("u{}", i + 1), &format!("u{i}")]))]));
    }
    build_algebra(&format!("parabolic-sl({n})"), qv, rels, DEFAULT_DEGREE_GUARD)
}
