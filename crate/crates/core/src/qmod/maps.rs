//! Module maps, hom spaces and the induced kernel, image and cokernel.

use std::collections::BTreeMap;

use num::Zero;

use super::module::QModule;
use crate::error::{Error, Result};
use crate::linalg::{Mat, Q};

/// A module map of internal degree `shift`: it sends degree `d` to `d + shift`.
#[derive(Clone, Debug)]
pub struct ModuleMap {
    pub dom: QModule,
    pub cod: QModule,
    pub shift: i32,
    /// `cod.dim() x dom.dim()`
    pub mat: Mat,
}

impl ModuleMap {
    pub fn new(dom: &QModule, cod: &QModule, shift: i32, mat: Mat) -> Result<Self> {
        let f = ModuleMap { dom: dom.clone(), cod: cod.clone(), shift, mat };
        f.validate()?;
        Ok(f)
    }

    pub fn identity(m: &QModule) -> Self {
        ModuleMap { dom: m.clone(), cod: m.clone(), shift: 0, mat: Mat::identity(m.dim()) }
    }

    pub fn zero(dom: &QModule, cod: &QModule, shift: i32) -> Self {
        ModuleMap { dom: dom.clone(), cod: cod.clone(), shift, mat: Mat::zeros(cod.dim(), dom.dim()) }
    }

    /// Check block structure and commutation with every arrow.
    pub fn validate(&self) -> Result<()> {
        if self.mat.rows() != self.cod.dim() || self.mat.cols() != self.dom.dim() {
            return Err(Error::Invalid("map matrix has the wrong size".into()));
        }
        for bd in self.dom.blocks() {
            for bc in self.cod.blocks() {
                if bc.vertex == bd.vertex && bc.degree == bd.degree + self.shift {
                    continue;
                }
                for i in bc.range() {
                    for j in bd.range() {
                        if !self.mat.get(i, j).is_zero() {
                            return Err(Error::Invalid("map does not respect vertices and degrees".into()));
                        }
                    }
                }
            }
        }
        for a in 0..self.dom.alg().quiver.arrows.len() {
            let l = self.mat.mul(self.dom.arrow_matrix(a));
            let r = self.cod.arrow_matrix(a).mul(&self.mat);
            if l != r {
                return Err(Error::Invalid(format!(
                    "map does not commute with arrow {}",
                    self.dom.alg().quiver.arrows[a].name
                )));
            }
        }
        Ok(())
    }

    /// `self ∘ g`.
    pub fn compose(&self, g: &ModuleMap) -> ModuleMap {
        ModuleMap { dom: g.dom.clone(), cod: self.cod.clone(), shift: self.shift + g.shift, mat: self.mat.mul(&g.mat) }
    }

    pub fn is_zero(&self) -> bool {
        self.mat.is_zero()
    }

    pub fn is_iso(&self) -> bool {
        self.shift == 0 && self.mat.is_invertible()
    }

    /// The block of the matrix from `(v, d)` to `(v, d + shift)`.
    pub fn block_matrix(&self, v: usize, d: i32) -> Mat {
        let dr: Vec<usize> = self.dom.block(v, d).map(|b| b.range().collect()).unwrap_or_default();
        let cr: Vec<usize> = self.cod.block(v, d + self.shift).map(|b| b.range().collect()).unwrap_or_default();
        self.mat.submatrix(&cr, &dr)
    }
}

/// Basis of the module maps `M -> N` of internal degree `shift`.
pub fn hom_space(m: &QModule, n: &QModule, shift: i32) -> Vec<ModuleMap> {
    // unknowns: entries of each block (v, d) -> (v, d + shift)
    let mut unknowns: Vec<(usize, usize)> = Vec::new();
    let mut uidx: BTreeMap<(usize, usize), usize> = BTreeMap::new();
    for bd in m.blocks() {
        if let Some(bc) = n.block(bd.vertex, bd.degree + shift) {
            for i in bc.range() {
                for j in bd.range() {
                    uidx.insert((i, j), unknowns.len());
                    unknowns.push((i, j));
                }
            }
        }
    }
    if unknowns.is_empty() {
        return Vec::new();
    }
    // equations: (F M_a - N_a F)[i][j] = 0
    let mut rows: Vec<Vec<(usize, Q)>> = Vec::new();
    for a in 0..m.alg().quiver.arrows.len() {
        let ma = m.arrow_matrix(a);
        let na = n.arrow_matrix(a);
        let mut eqs: BTreeMap<(usize, usize), Vec<(usize, Q)>> = BTreeMap::new();
        // (F ma)[i][j] = sum_k F[i][k] ma[k][j]
        for (&(i, k), &u) in &uidx {
            for j in 0..m.dim() {
                let x = ma.get(k, j);
                if !x.is_zero() {
                    eqs.entry((i, j)).or_default().push((u, x.clone()));
                }
            }
        }
        // (na F)[i][j] = sum_k na[i][k] F[k][j]
        for (&(k, j), &u) in &uidx {
            for i in 0..n.dim() {
                let x = na.get(i, k);
                if !x.is_zero() {
                    eqs.entry((i, j)).or_default().push((u, -x.clone()));
                }
            }
        }
        rows.extend(eqs.into_values());
    }
    let mut sys = Mat::zeros(rows.len(), unknowns.len());
    for (r, eq) in rows.iter().enumerate() {
        for (u, c) in eq {
            sys.add_at(r, *u, c);
        }
    }
    sys.kernel()
        .into_iter()
        .map(|v| {
            let mut mat = Mat::zeros(n.dim(), m.dim());
            for (u, &(i, j)) in unknowns.iter().enumerate() {
                mat.set(i, j, v[u].clone());
            }
            ModuleMap { dom: m.clone(), cod: n.clone(), shift, mat }
        })
        .collect()
}

/// All internal degrees at which module maps `M -> N` can exist.
pub fn possible_shifts(m: &QModule, n: &QModule) -> Vec<i32> {
    let mut out: Vec<i32> = Vec::new();
    for bd in m.blocks() {
        for bc in n.blocks().iter().filter(|b| b.vertex == bd.vertex) {
            out.push(bc.degree - bd.degree);
        }
    }
    out.sort_unstable();
    out.dedup();
    out
}

/// Dimension of maps `M -> N` by internal degree.
pub fn hom_dims(m: &QModule, n: &QModule) -> BTreeMap<i32, usize> {
    possible_shifts(m, n)
        .into_iter()
        .map(|s| (s, hom_space(m, n, s).len()))
        .filter(|(_, d)| *d > 0)
        .collect()
}

type Spans = BTreeMap<(usize, i32), Vec<Vec<Q>>>;

fn kernel_spans(f: &ModuleMap) -> Spans {
    let mut out = Spans::new();
    for b in f.dom.blocks() {
        let blk = f.block_matrix(b.vertex, b.degree);
        let k = if blk.rows() == 0 {
            (0..b.dim)
                .map(|i| (0..b.dim).map(|j| if i == j { Q::from_integer(1.into()) } else { Q::zero() }).collect())
                .collect()
        } else {
            blk.kernel()
        };
        out.insert((b.vertex, b.degree), k);
    }
    out
}

fn image_spans(f: &ModuleMap) -> Spans {
    let mut out = Spans::new();
    for b in f.dom.blocks() {
        if f.cod.block(b.vertex, b.degree + f.shift).is_none() {
            continue;
        }
        let blk = f.block_matrix(b.vertex, b.degree);
        out.insert((b.vertex, b.degree + f.shift), blk.column_space());
    }
    out
}

/// Kernel with its inclusion into the domain.
pub fn kernel(f: &ModuleMap) -> Result<(QModule, ModuleMap)> {
    let (k, incl) = f.dom.submodule(&kernel_spans(f))?;
    Ok((k.clone(), ModuleMap { dom: k, cod: f.dom.clone(), shift: 0, mat: incl }))
}

/// Image as a submodule of the codomain, with its inclusion.
pub fn image(f: &ModuleMap) -> Result<(QModule, ModuleMap)> {
    let (im, incl) = f.cod.submodule(&image_spans(f))?;
    Ok((im.clone(), ModuleMap { dom: im, cod: f.cod.clone(), shift: 0, mat: incl }))
}

/// Cokernel with the projection from the codomain.
pub fn cokernel(f: &ModuleMap) -> Result<(QModule, ModuleMap)> {
    let (c, proj) = f.cod.quotient(&image_spans(f))?;
    Ok((c.clone(), ModuleMap { dom: f.cod.clone(), cod: c, shift: 0, mat: proj }))
}
