//! Graded right modules over a quotient path algebra.

pub mod format;
pub mod maps;
pub mod module;
pub mod series;

pub use format::{parse_comp_table, parse_module, write_comp_table, write_module, CompTable};
pub use maps::{cokernel, hom_dims, hom_space, image, kernel, ModuleMap};
pub use module::{projective, projective_basis, simple, Block, QModule};
pub use series::{
    composition_multiplicities, decompose_projective, head, is_isomorphic, left_mult_map, map_from_projective,
    parabolic_verma, projective_cover, radical_series, IsoResult,
};
