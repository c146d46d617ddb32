#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum QweylError {
    #[error("monomial of degree {degree} exceeds the truncation order {order}")]
    TruncationOverflow { degree: i64, order: i64 },
    #[error("argument of the q-exponential is not nilpotent: {0}")]
    NonNilpotentConstantTerm(String),
    #[error("series is not invertible: {0}")]
    NotInvertible(String),
    #[error("invalid input: {0}")]
    Invalid(String),
}

pub type Result<T> = std::result::Result<T, QweylError>;
