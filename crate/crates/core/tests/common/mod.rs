//! Seeded random complexes shared by the property and acceptance tests.
#![allow(dead_code)]

use std::collections::BTreeMap;
use std::sync::Arc;

use num::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use shuffle_twist::homotopy::*;
use shuffle_twist::linalg::Q;
use shuffle_twist::path_algebra::{AElem, FDAlgebra};

pub fn coeff(rng: &mut ChaCha8Rng) -> Q {
    let k: i64 = rng.gen_range(-3..=3);
    Q::from_integer(k.into())
}

fn nonzero(rng: &mut ChaCha8Rng) -> Q {
    let k: i64 = rng.gen_range(1..=3);
    let k = if rng.gen_bool(0.5) { k } else { -k };
    Q::from_integer(k.into())
}

/// A random combination of the degree-`deg` paths from `v` to `w`.
pub fn random_elem(alg: &FDAlgebra, rng: &mut ChaCha8Rng, w: usize, v: usize, deg: i32) -> AElem {
    let mut x = AElem::zero();
    if deg < 0 {
        return x;
    }
    for i in alg.block_deg(w, v, deg as usize) {
        x.add_term(i, &coeff(rng));
    }
    x
}

/// A random map `dom -> cod` of the given internal degree, with Hom-basis combinations as entries.
pub fn random_pmat(alg: &FDAlgebra, rng: &mut ChaCha8Rng, cod: &[Summand], dom: &[Summand], internal: i32) -> PMat {
    let mut m = PMat::zeros(cod.len(), dom.len());
    for (r, w) in cod.iter().enumerate() {
        for (c, v) in dom.iter().enumerate() {
            m.set(r, c, random_elem(alg, rng, w.vertex, v.vertex, internal + v.shift - w.shift));
        }
    }
    m
}

pub fn random_summands(alg: &FDAlgebra, rng: &mut ChaCha8Rng, max: usize) -> Vec<Summand> {
    let k = rng.gen_range(0..=max);
    (0..k).map(|_| Summand::new(rng.gen_range(0..alg.num_vertices()), rng.gen_range(-1..=1))).collect()
}

/// A direct sum of elementary rank-2 pieces on a grid, as cells and face entries.
struct Pieces {
    alg: Arc<FDAlgebra>,
    cells: BTreeMap<Vec<i32>, Vec<Summand>>,
    entries: Vec<(usize, Vec<i32>, usize, usize, AElem)>,
}

fn step(idx: &[i32], dir: usize) -> Vec<i32> {
    let mut t = idx.to_vec();
    t[dir] -= 1;
    t
}

impl Pieces {
    fn put(&mut self, idx: &[i32], s: Summand) -> usize {
        let cell = self.cells.entry(idx.to_vec()).or_default();
        cell.push(s);
        cell.len() - 1
    }

    fn edge(&mut self, dir: usize, idx: &[i32], from: Summand, to: Summand, x: AElem) -> (usize, usize) {
        let c = self.put(idx, from);
        let r = self.put(&step(idx, dir), to);
        self.entries.push((dir, idx.to_vec(), r, c, x));
        (r, c)
    }

    fn scalar(&self, v: usize, c: Q) -> AElem {
        AElem::term(self.alg.idempotent(v), c)
    }
}

/// A seeded random double complex over `alg` on an `rows x cols` grid.
///
/// Pieces: single projectives, isomorphisms along either direction, arrow and
/// loop maps, two-step chains through zero relations, and commuting squares of
/// isomorphisms. Every cell is then conjugated by a random automorphism.
pub fn random_double_complex(alg: &Arc<FDAlgebra>, seed: u64, rows: i32, cols: i32) -> MultiComplex {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let n = alg.num_vertices();
    let mut p = Pieces { alg: alg.clone(), cells: BTreeMap::new(), entries: Vec::new() };
    let pieces = rng.gen_range(2..=7);
    for _ in 0..pieces {
        let idx = vec![rng.gen_range(0..rows), rng.gen_range(0..cols)];
        let dir = rng.gen_range(0..2);
        let v = rng.gen_range(0..n);
        let k = rng.gen_range(-1..=1);
        match rng.gen_range(0..6) {
            0 => {
                p.put(&idx, Summand::new(v, k));
            }
            1 if idx[dir] >= 1 => {
                let x = p.scalar(v, nonzero(&mut rng));
                p.edge(dir, &idx, Summand::new(v, k), Summand::new(v, k), x);
            }
            2 if idx[dir] >= 1 => {
                let w = rng.gen_range(0..n);
                let deg = rng.gen_range(1..=2);
                let x = random_elem(alg, &mut rng, w, v, deg);
                if !x.is_zero() {
                    p.edge(dir, &idx, Summand::new(v, k + deg), Summand::new(w, k), x);
                }
            }
            3 if idx[dir] >= 2 && n >= 3 => {
                // u1 * u0 = 0, and d0 * d1 = 0
                let up = rng.gen_bool(0.5);
                let (a, b, c) = if up { (0, 1, 2) } else { (2, 1, 0) };
                let (x, y) = if up { ("u0", "u1") } else { ("d1", "d0") };
                let ex = alg.arrow_elem(alg.quiver.arrow_index(x).unwrap()).scale(&nonzero(&mut rng));
                let ey = alg.arrow_elem(alg.quiver.arrow_index(y).unwrap()).scale(&nonzero(&mut rng));
                let mid = step(&idx, dir);
                let low = step(&mid, dir);
                let top = p.put(&idx, Summand::new(a, k + 2));
                let centre = p.put(&mid, Summand::new(b, k + 1));
                let bottom = p.put(&low, Summand::new(c, k));
                p.entries.push((dir, idx.clone(), centre, top, ex));
                p.entries.push((dir, mid, bottom, centre, ey));
            }
            4 if idx[0] >= 1 && idx[1] >= 1 => {
                // d0 d1 = d1 d0 on four copies of P(v)<k>
                let (a, b, c) = (nonzero(&mut rng), nonzero(&mut rng), nonzero(&mut rng));
                let d = &a * &b / &c;
                let i00 = p.put(&idx, Summand::new(v, k));
                let i10 = p.put(&step(&idx, 0), Summand::new(v, k));
                let i01 = p.put(&step(&idx, 1), Summand::new(v, k));
                let corner = step(&step(&idx, 0), 1);
                let i11 = p.put(&corner, Summand::new(v, k));
                // face 1 from idx-e0, then face 0 from idx: b * a; face 0 from idx-e1, then face 1 from idx: d * c
                p.entries.push((0, idx.clone(), i10, i00, p.scalar(v, a)));
                p.entries.push((1, step(&idx, 0), i11, i10, p.scalar(v, b)));
                p.entries.push((1, idx.clone(), i01, i00, p.scalar(v, c)));
                p.entries.push((0, step(&idx, 1), i11, i01, p.scalar(v, d)));
            }
            _ => {
                p.put(&idx, Summand::new(v, k));
            }
        }
    }
    let mut faces: BTreeMap<(usize, Vec<i32>), PMat> = BTreeMap::new();
    for (dir, idx, r, c, x) in &p.entries {
        let rows = p.cells[&step(idx, *dir)].len();
        let cols = p.cells[idx].len();
        let f = faces.entry((*dir, idx.clone())).or_insert_with(|| PMat::zeros(rows, cols));
        f.set(*r, *c, x.clone());
    }
    // conjugate every cell by a random automorphism
    let mut autos: BTreeMap<Vec<i32>, (PMat, PMat)> = BTreeMap::new();
    for (idx, t) in &p.cells {
        let pair = (0..8)
            .find_map(|_| {
                let mut g = random_pmat(alg, &mut rng, t, t, 0);
                for i in 0..t.len() {
                    if g.get(i, i).is_empty() {
                        g.set(i, i, p.scalar(t[i].vertex, nonzero(&mut rng)));
                    }
                }
                pmat_inverse(alg, &g, t, t).map(|gi| (g, gi))
            })
            .unwrap_or_else(|| (PMat::identity(alg, t), PMat::identity(alg, t)));
        autos.insert(idx.clone(), pair);
    }
    let mut m = MultiComplex::new(alg, 2);
    for (idx, t) in &p.cells {
        m.set_cell(idx.clone(), t.clone());
    }
    for ((dir, idx), f) in faces {
        let g = &autos[&step(&idx, dir)].0;
        let gi = &autos[&idx].1;
        m.set_face(dir, idx.clone(), g.mul(alg, &f).mul(alg, gi));
    }
    m
}

/// Every `(j, column, row)` whose entry is an invertible scalar between equal summands.
pub fn legal_eliminations(x: &Complex) -> Vec<(i32, usize, usize)> {
    let alg = x.alg();
    let mut out = Vec::new();
    for &j in x.terms().keys() {
        let Some(d) = x.diff_ref(j) else { continue };
        let (dom, cod) = (x.term(j), x.term(j - 1));
        for (c, v) in dom.iter().enumerate() {
            for (r, w) in cod.iter().enumerate() {
                if v == w && !d.get(r, c).coeff(alg.idempotent(v.vertex)).is_zero() {
                    out.push((j, c, r));
                }
            }
        }
    }
    out
}

/// A random complex of projectives: a random total complex of a one-row grid.
pub fn random_complex(alg: &Arc<FDAlgebra>, seed: u64) -> Complex {
    random_double_complex(alg, seed, 1, 4).total()
}
