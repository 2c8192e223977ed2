//! Minimal projective resolutions and derived endomorphism rings.

use std::sync::Arc;

use shuffle_twist::homotopy::{derived_end_ring_of, resolve};
use shuffle_twist::path_algebra::sl2_principal;
use shuffle_twist::qmod::{parabolic_verma, simple};

fn main() -> shuffle_twist::Result<()> {
    let a = Arc::new(sl2_principal()?);
    for (name, m) in [("M(s)", parabolic_verma(&a, 1)?), ("L(e)", simple(&a, 0, 0)), ("L(s)", simple(&a, 1, 0))] {
        println!("{name}: {}", resolve(&m)?.render_compact());
        println!("  Hom*({name}, {name}) dims {:?}", derived_end_ring_of(&m)?.dims);
    }
    Ok(())
}
