//! Projective functors: wall-crossing, shuffling, spherical twists and the comparison.

pub mod bimodule;
pub mod checks;
pub mod proj;
pub mod theta;
pub mod verify;
pub mod xi;

pub use bimodule::{bimodule_iso, envelope, Bimodule, BimoduleIso};
pub use checks::{
    check_an_configuration, check_spherical, check_spherelike, complex_class, euler_consistency, module_class,
    render_class, render_matrix, theta_squared, ConfigurationVerdict, EulerVerdict, Pairing, SphericalVerdict,
    SpherelikeVerdict,
};
pub use proj::{natural_transformations, NatTrans, ProjFunctor};
pub use theta::{coshuffle, shuffle, theta, theta_functor, validate_unit, TwoTermFunctor};
pub use verify::{verify_braid, verify_main_theorem, CheckResult, Report};
pub use xi::{cotwist_projective, twist_projective, xi, xi_prime, XiFunctor};
