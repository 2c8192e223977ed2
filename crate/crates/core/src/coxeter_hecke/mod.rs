//! Symmetric groups, the Hecke algebra and Grothendieck group bookkeeping.

pub mod hecke;
pub mod k0;
pub mod kl;
pub mod laurent;
pub mod perm;

pub use hecke::{hecke_mul, HeckeBasis, HeckeElem};
pub use k0::{k0_base_change, k0_shuffle_shadow, K0Basis, K0Class, K0Tables};
pub use kl::{c_basis, kl_polynomial, KLTable};
pub use laurent::LaurentPoly;
pub use perm::{min_coset_reps, sigma, Perm};
