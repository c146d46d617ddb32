//! Double sine, quantum dilogarithm and the q-products and theta functions behind them.

pub mod checks;
pub mod dilog;
pub mod dsine;
pub mod error;
pub mod modular;
pub mod qpoch;
pub mod quad;
pub mod theta;

pub use dilog::{d_alpha, dilog_d, fourier_d_check, fourier_d_residual, rel_or_abs, varpi, DTransformData, FourierBudget, FourierCheck};
pub use dsine::{classify_lattice, dsine, sfun, DoubleSine, EvalMethod, MethodKind, QuadBudget, Sheet};
pub use error::{LatticeKind, Result, SpecError};
pub use modular::ModularPair;
pub use qpoch::{qpoch, QPoch};
pub use theta::{quad_b, theta_pair};

pub use num_complex::Complex64;
