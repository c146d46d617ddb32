use specfun::SpecError;

#[derive(Clone, Debug, PartialEq, thiserror::Error)]
pub enum KernelError {
    #[error("factor {factor} is singular: {source}")]
    OnLattice {
        factor: &'static str,
        #[source]
        source: SpecError,
    },
    #[error("21 entry of the gauged matrix is {0:e}, expected 0")]
    NonVanishing21(f64),
    #[error("integrand does not decay: {0}")]
    NonDecayingIntegrand(String),
    #[error("quadrature did not converge: {0}")]
    QuadratureNotConverged(String),
    #[error("invalid input: {0}")]
    Invalid(String),
    #[error(transparent)]
    Spec(#[from] SpecError),
}

pub type Result<T> = std::result::Result<T, KernelError>;

pub(crate) trait Tag<T> {
    fn factor(self, name: &'static str) -> Result<T>;
}

impl<T> Tag<T> for specfun::Result<T> {
    fn factor(self, name: &'static str) -> Result<T> {
        self.map_err(|e| match e {
            e @ SpecError::OnLattice { .. } => KernelError::OnLattice { factor: name, source: e },
            e => KernelError::Spec(e),
        })
    }
}
