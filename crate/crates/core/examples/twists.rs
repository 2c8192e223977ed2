//! Spherical twists and cotwists by L(e) and by projectives, through both routes.

use std::sync::Arc;

use shuffle_twist::functors::{cotwist_projective, twist_projective};
use shuffle_twist::homotopy::{cotwist, reduce, resolve, twist, Complex};
use shuffle_twist::path_algebra::sl2_principal;
use shuffle_twist::qmod::simple;

fn main() -> shuffle_twist::Result<()> {
    let a = Arc::new(sl2_principal()?);
    let le = resolve(&simple(&a, 0, 0))?;
    let ps = Complex::projective(&a, 1);
    for v in 0..2 {
        let p = Complex::projective(&a, v);
        let name = a.vertex_label(v);
        println!("T'_L(e) P({name}) = {}", reduce(&cotwist(&le, &p)?).render_compact());
        println!("T_L(e) P({name}) = {}", reduce(&twist(&le, &p)?).render_compact());
        println!("T'_P(s) P({name}) = {} (bimodule route)", cotwist_projective(&a, 1, &p)?.render_compact());
        println!("T'_P(s) P({name}) = {} (complex route)", reduce(&cotwist(&ps, &p)?).render_compact());
        println!("T_P(s) P({name}) = {}", twist_projective(&a, 1, &p)?.render_compact());
    }
    Ok(())
}
