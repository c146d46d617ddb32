//! Classical relativistic Toda chain: Lax and Bäcklund matrices, the
//! Bäcklund map and the identities it satisfies.

pub mod backlund;
pub mod error;
pub mod genfun;
pub mod lax;
pub mod monodromy;
pub mod sklyanin;
pub mod state;
pub mod symplectic;
pub mod triangular;

pub use backlund::{backlund_map, backlund_solve, gauge_residual, BacklundImage, Newton};
pub use error::{ClassicalError, Result};
pub use lax::{backlund_m, build_matrix, lax_l, MatrixKind};
pub use monodromy::{monodromy_trace, trace_coefficients};
pub use state::{ClassicalParams, ClassicalState};
pub use triangular::{triangulate_classical, Triangulation};

pub type Mat2 = nalgebra::Matrix2<num_complex::Complex64>;
