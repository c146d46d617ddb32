//! Truncated normal-ordered series over q-commuting generators, with exact
//! checks of the q-exponential identities used to build the intertwiners.

pub mod algebra;
pub mod coeff;
pub mod error;
pub mod identities;
pub mod qexp;
pub mod series;

pub use algebra::{Primitive, WeylAlgebra};
pub use coeff::{default_q, rat, Coeff, GaussRational, Rational};
pub use error::{QweylError, Result};
pub use identities::{
    adjoint_residual, clcr_residual, functional_equation_residual, rmm_residual, schutzenberger_orientation,
    schutzenberger_residual, weyl_pair_theta, AdjointResidual, ClcrParams, ClcrResidual, Lambda, Sites,
};
pub use qexp::{compact_s, compact_s_euler, compact_s_inv, qexp};
pub use series::{normal_order, Exponents, WeylSeries};
