//! Exact computations with quiver algebras of category O blocks.

pub mod cli;
pub mod coxeter_hecke;
pub mod error;
pub mod functors;
pub mod homotopy;
pub mod linalg;

pub use error::{Error, Result};
pub mod path_algebra;
pub mod poly;
pub mod qmod;
