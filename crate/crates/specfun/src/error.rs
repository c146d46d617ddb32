use num_complex::Complex64;
use std::fmt;

/// Which of the two double-sine lattices a point sits on.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LatticeKind {
    Zero,
    Pole,
}

impl fmt::Display for LatticeKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LatticeKind::Zero => write!(f, "zero"),
            LatticeKind::Pole => write!(f, "pole"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, thiserror::Error)]
pub enum SpecError {
    #[error("periods must have positive real parts (got {0}, {1})")]
    InvalidPeriods(Complex64, Complex64),
    #[error("q-product base has modulus {0} >= 1")]
    DivergentBase(f64),
    #[error("argument {z} lies on the {kind} lattice (m={m}, n={n})")]
    OnLattice {
        z: Complex64,
        kind: LatticeKind,
        m: i64,
        n: i64,
    },
    #[error("evaluation method not admissible: {0}")]
    MethodInadmissible(String),
    #[error("product truncation exceeded {0} factors")]
    TruncationExceeded(usize),
    #[error("integrand does not decay: {0}")]
    NonDecayingIntegrand(String),
    #[error("quadrature did not converge: {0}")]
    QuadratureNotConverged(String),
    #[error("branch ambiguity: {0}")]
    BranchAmbiguity(String),
}

pub type Result<T> = std::result::Result<T, SpecError>;
