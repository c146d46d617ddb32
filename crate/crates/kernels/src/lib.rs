//! Intertwiner factors, the kernels 𝓛 and Q, triangularisation and the
//! operator Baxter equation, checked pointwise and by quadrature.

pub mod error;
pub mod factors;
pub mod grid;
pub mod integral;
pub mod kernel;
pub mod params;
pub mod poles;
pub mod triangular;

pub use error::{KernelError, Result};
pub use factors::{intertwiner_factors, FdEquation, Frame, IntertwinerFactors};
pub use integral::{llm_operator_residual, q_commutator_residual, reduced_baxter, reduced_kernel, LineQuad};
pub use kernel::{kernel_l, kernel_q, Kernel, LFactors};
pub use params::{CompactRepParams, KernelParams};
pub use poles::{detect_blow_up, BlowUp, PoleFamily, Singularity};
pub use triangular::{baxter_residual, baxter_terms, triangular_checked, triangular_decompose, BaxterTerms, Triangular};
