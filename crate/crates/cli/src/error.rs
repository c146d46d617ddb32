use specfun::{LatticeKind, SpecError};

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("invalid configuration: {0}")]
    ConfigInvalid(String),
    #[error("check failed: {0}")]
    CheckFailed(String),
    #[error("OnLattice({kind}, m={m}, n={n}){}", factor.map(|f| format!(" in factor {f}")).unwrap_or_default())]
    OnLattice {
        kind: LatticeKind,
        m: i64,
        n: i64,
        factor: Option<&'static str>,
    },
    #[error("parse error: {0}")]
    Parse(String),
    #[error("evaluation failed: {0}")]
    Eval(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl CliError {
    /// 0 pass, 1 check or evaluation failure, 2 bad input.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::ConfigInvalid(_) | CliError::Parse(_) | CliError::Io(_) => 2,
            _ => 1,
        }
    }
}

impl From<SpecError> for CliError {
    fn from(e: SpecError) -> Self {
        match e {
            SpecError::OnLattice { kind, m, n, .. } => CliError::OnLattice { kind, m, n, factor: None },
            e => CliError::Eval(e.to_string()),
        }
    }
}

impl From<kernels::KernelError> for CliError {
    fn from(e: kernels::KernelError) -> Self {
        match e {
            kernels::KernelError::OnLattice {
                factor,
                source: SpecError::OnLattice { kind, m, n, .. },
            } => CliError::OnLattice {
                kind,
                m,
                n,
                factor: Some(factor),
            },
            kernels::KernelError::Spec(e) => e.into(),
            e => CliError::Eval(e.to_string()),
        }
    }
}

impl From<spectral::SpectralError> for CliError {
    fn from(e: spectral::SpectralError) -> Self {
        match e {
            spectral::SpectralError::Kernel(k) => k.into(),
            e => CliError::Eval(e.to_string()),
        }
    }
}

pub type Result<T> = std::result::Result<T, CliError>;
