use kernels::KernelError;
use opcalc::ModelKind;

#[derive(Clone, Debug, PartialEq, thiserror::Error)]
pub enum SpectralError {
    #[error("no canonical t-q form for the {0:?} model")]
    NoCanonicalForm(ModelKind),
    #[error("invalid input: {0}")]
    Invalid(String),
    #[error("root finding failed: {0}")]
    RootFinding(String),
    #[error(transparent)]
    Kernel(#[from] KernelError),
}

pub type Result<T> = std::result::Result<T, SpectralError>;
