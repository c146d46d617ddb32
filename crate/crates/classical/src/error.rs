#[derive(Clone, Debug, PartialEq, thiserror::Error)]
pub enum ClassicalError {
    #[error("denominator vanishes at site {site}")]
    SingularDenominator { site: usize },
    #[error("Newton iteration diverged (residual {residual:e})")]
    NewtonDiverged { last: Vec<f64>, residual: f64 },
    #[error("invalid state: {0}")]
    InvalidState(String),
}

pub type Result<T> = std::result::Result<T, ClassicalError>;
