//! Quivers with relations and their finite-dimensional quotient algebras.

pub mod algebra;
pub mod families;
pub mod format;
pub mod quiver;

pub use algebra::{build_algebra, graded_hom_dims, AElem, FDAlgebra, Relation, DEFAULT_DEGREE_GUARD};
pub use families::{family, parabolic_sl, sigma_label, sl2_principal, Family};
pub use format::{parse_algebra, parse_elem, parse_algebra_with_guard, write_algebra};
pub use quiver::{Arrow, Path, Quiver};

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sl2_basis() {
        let a = sl2_principal().unwrap();
        let names: Vec<String> = a.basis().iter().map(|p| p.render(&a.quiver)).collect();
        assert_eq!(names, vec!["1_e", "1_s", "a", "b", "a*b"]);
    }

    #[test]
    fn parabolic_dims() {
        for n in 2..=6 {
            assert_eq!(parabolic_sl(n).unwrap().dim(), 4 * n - 3);
        }
    }

    #[test]
    fn cycle_without_relations_is_rejected() {
        let text = "vertex x\narrow a : x -> x\n";
        assert!(matches!(parse_algebra(text), Err(crate::Error::NonAdmissible(_))));
    }

    #[test]
    fn round_trip() {
        let a = parabolic_sl(4).unwrap();
        let b = parse_algebra(&write_algebra(&a)).unwrap();
        assert_eq!(a.basis(), b.basis());
        for i in 0..a.dim() {
            for j in 0..a.dim() {
                assert_eq!(a.mul_basis(i, j), b.mul_basis(i, j));
            }
        }
    }
}
