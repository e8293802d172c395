use crate::linalg::{hermitian_eigenvalues, partial_transpose_dense, Subsystem};
use crate::states::XState;

/// Eigenvalues below `-EIGEN_CUTOFF` count as negative.
pub const EIGEN_CUTOFF: f64 = 1e-10;

pub fn min_eigenvalue(x: &XState) -> f64 {
    hermitian_eigenvalues(&x.to_dense())[0]
}

/// Positivity of the dense matrix by full eigensolve.
pub fn eigen_positive(x: &XState) -> bool {
    min_eigenvalue(x) >= -EIGEN_CUTOFF
}

/// PPT by dense partial transposes and eigensolves (independent of the block
/// criterion in [`XState::is_ppt`]).
pub fn eigen_ppt_oracle(x: &XState) -> bool {
    let m = x.to_dense();
    hermitian_eigenvalues(&m)[0] >= -EIGEN_CUTOFF
        && Subsystem::ALL
            .iter()
            .all(|&sys| hermitian_eigenvalues(&partial_transpose_dense(&m, sys))[0] >= -EIGEN_CUTOFF)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::states::GhzDiagonalState;

    #[test]
    fn examples() {
        assert!(!eigen_ppt_oracle(&GhzDiagonalState::ghz().to_xstate()));
        assert!(eigen_ppt_oracle(&GhzDiagonalState::maximally_mixed().to_xstate()));
        assert!(eigen_positive(&GhzDiagonalState::ghz().to_xstate()));
    }
}
