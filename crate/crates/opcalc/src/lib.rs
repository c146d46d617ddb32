//! Operator words for the quantum Lax matrices: RLL, transfer matrices and
//! their coefficients, checked on Gaussian test functions.

pub mod error;
pub mod model;
pub mod quantum;
pub mod rmatrix;
pub mod testfn;
pub mod transfer;
pub mod word;

pub use error::{OpError, Result};
pub use model::{ModelKind, ModelParams};
pub use quantum::{conjugate_by_momentum, conjugate_by_sigma3, lax, lax_dual, m_by_substitution, m_matrix, MatrixTag, QuantumMatrix};
pub use rmatrix::{r_matrix, rll_applied_residual, rll_word_residual};
pub use testfn::TestFunction;
pub use transfer::{hamiltonian_coeffs, h1_printed, hn_printed, transfer_apply, transfer_word, Coefficients, Side};
pub use word::OpWord;
