//! Shared fixtures for the criterion benches.

use lscoinv_core::{build_poset, pl_matrix, GradedMatrix, OrbitPoset, WeylType};

/// The `[P:L]` matrix and orbit poset the factorization bench starts from.
pub fn ls_input(wt: WeylType) -> (GradedMatrix, OrbitPoset) {
    (pl_matrix(wt), build_poset(wt).expect("supported rank"))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fixture_is_square() {
        let (p, poset) = ls_input(WeylType::b(2));
        assert_eq!(p.labels(), poset.labels.as_slice());
    }
}
