#[derive(Clone, Debug, PartialEq, thiserror::Error)]
pub enum OpError {
    #[error("R-matrix denominator sinh(π(λ+iω₁)/ω₂) vanishes at λ = {0}")]
    SingularRMatrix(num_complex::Complex64),
    #[error("Vandermonde system ill conditioned (condition number {0:e})")]
    IllConditioned(f64),
    #[error("{0}")]
    Invalid(String),
}

pub type Result<T> = std::result::Result<T, OpError>;
