//! Spherelike and spherical checks, and the A_n-configuration of parabolic projectives.

use std::sync::Arc;

use shuffle_twist::functors::{check_an_configuration, check_spherelike, check_spherical};
use shuffle_twist::homotopy::{resolve, Complex};
use shuffle_twist::path_algebra::{parabolic_sl, sl2_principal};
use shuffle_twist::qmod::{parabolic_verma, simple};

fn main() -> shuffle_twist::Result<()> {
    let a = Arc::new(sl2_principal()?);
    let le = resolve(&simple(&a, 0, 0))?;
    println!("L(e) 2-spherical: {}", check_spherical(&le, 2).pass);
    println!("P(s) 0-spherical: {}", check_spherical(&Complex::projective(&a, 1), 0).pass);
    let ms = resolve(&parabolic_verma(&a, 1)?)?;
    println!("M(s) 0-spherelike: {}", check_spherelike(&ms, 0).pass);
    let b = Arc::new(parabolic_sl(5)?);
    let ps: Vec<Complex> = (1..5).map(|v| Complex::projective(&b, v)).collect();
    let cfg = check_an_configuration(&ps, 0);
    println!("P(σ1..σ4) configuration: {} {:?}", cfg.pass, cfg.hom_totals);
    Ok(())
}
