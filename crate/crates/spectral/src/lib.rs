//! Scalar t-q equations of the reduced chains: τ-roots, the canonical gauge
//! transform, pole-pinching lattices and the zero-mode reduced kernel.

pub mod canonical;
pub mod error;
pub mod lattice;
pub mod roots;

/// Zero-mode reduced kernel Q̄ and its checks, evaluated by line quadrature.
pub mod reduced {
    pub use kernels::integral::{reduced_baxter, reduced_even_split, reduced_inverse_check, reduced_kernel, reduced_strip, ReducedBaxter};
    pub use kernels::LineQuad;
}

pub use canonical::{
    baxter_coefficients, baxter_signed_residual, canonical_residual, canonical_signed_residual, canonical_transform, gauge,
    gauge_exponent, CanonicalParams, CanonicalTransform,
};
pub use error::{Result, SpectralError};
pub use lattice::{pole_families, pole_pinch_lattice, Combination, FamilyShape, HalfPlane, PinchPoint, PoleLattice};
pub use roots::{constant_term, normalisation, t_tau, transfer_eigenvalue, TauRoots};
