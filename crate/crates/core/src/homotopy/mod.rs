//! Bounded complexes of graded projectives, hom complexes and elimination.

pub mod complex;
pub mod format;
pub mod homcx;
pub mod lin;
pub mod multi;
pub mod reduce;
pub mod resolve;

pub use complex::{cocone, cone, euler_characteristic, ChainMap, Complex, PMat, Summand};
pub use format::{parse_complex, write_complex};
pub use homcx::{derived_end_ring, hom_complex, EndRing, HomBasis, HomComplex, VSComplex};
pub use lin::{coevaluation, cotwist, evaluation, twist, vs_lin, vs_tensor, TWIST_GRADE};
pub use multi::{total, MultiComplex};
pub use reduce::{eliminate, homotopy_equivalent, pmat_inverse, reduce, reduce_with_maps, same_complex, Elimination};
pub use resolve::{
    derived_end_ring_of, derived_hom_dims, derived_hom_graded, homology, homology_dims, min_projective_resolution,
    realize, resolve, Resolution, DEFAULT_MAX_LEN,
};
