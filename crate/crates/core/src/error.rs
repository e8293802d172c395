use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("negative GHZ weight p{index} = {value}")]
    NegativeWeight { index: usize, value: f64 },

    #[error("negative component {index} = {value} where a nonnegative vector is required")]
    NegativeComponent { index: usize, value: f64 },

    #[error("non-finite input value")]
    NonFinite,

    #[error("zero vector has no region or C value")]
    ZeroVector,

    #[error("matrix is not Hermitian (entry ({row},{col}) deviates by {deviation:e})")]
    NotHermitian { row: usize, col: usize, deviation: f64 },

    #[error("degenerate witness normalization: {0}")]
    DegenerateWitness(&'static str),

    #[error("no finite critical point: t{index} vanishes")]
    NoCriticalPoint { index: usize },

    #[error("sufficient bound undefined: product of the anti-diagonal Pauli coefficients is not positive")]
    BoundUndefined,

    #[error("sufficient bound radicand is not positive ({radicand:e})")]
    RadicandNotPositive { radicand: f64 },

    #[error("state is not positive semidefinite")]
    NonPositiveState,
}
