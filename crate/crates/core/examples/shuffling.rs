//! Derived shuffling functors: powers of LSh_s on sl2 and image tables over parabolic blocks.

use std::sync::Arc;

use shuffle_twist::functors::{coshuffle, shuffle, theta};
use shuffle_twist::homotopy::{reduce, Complex};
use shuffle_twist::path_algebra::{parabolic_sl, sl2_principal};

fn main() -> shuffle_twist::Result<()> {
    let a = Arc::new(sl2_principal()?);
    let t = theta(&a, 1)?;
    let (mut up, mut down) = (Complex::projective(&a, 0), Complex::projective(&a, 0));
    for n in 1..=3 {
        up = reduce(&shuffle(&t, &up));
        down = reduce(&coshuffle(&t, &down)?);
        println!("LSh^{n} P(e) = {}", up.render_compact());
        println!("RCsh^{n} P(e) = {}", down.render_compact());
    }
    let b = Arc::new(parabolic_sl(4)?);
    for i in 1..4 {
        let t = theta(&b, i)?;
        for j in 0..4 {
            let x = reduce(&shuffle(&t, &Complex::projective(&b, j)));
            println!("LSh_s{i} P({}) = {}", b.vertex_label(j), x.render_compact());
        }
    }
    Ok(())
}
