//! Transfer-matrix eigenvalue polynomials and their τ-roots.

use crate::error::{Result, SpectralError};
use kernels::KernelParams;
use nalgebra::DMatrix;
use num_complex::Complex64;
use opcalc::ModelKind;
use std::f64::consts::PI;

const I: Complex64 = Complex64::new(0.0, 1.0);
const ONE: Complex64 = Complex64::new(1.0, 0.0);

fn reduced_kind(params: &KernelParams) -> Result<ModelKind> {
    match params.model.kind {
        ModelKind::Generic => Err(SpectralError::NoCanonicalForm(ModelKind::Generic)),
        k => Ok(k),
    }
}

/// (-1)ᴺ times the constant term of t(λ) in z = e^{-2πλ/ω₂}:
/// e^{-ω₁p₀} for q-Toda, e^{-ω₁p₀} + d₂ᴺ for Toda₂.
pub fn constant_term(params: &KernelParams, p0: f64, n: usize) -> Result<Complex64> {
    let w1 = params.pair.omega1();
    let base = (-w1 * p0).exp();
    Ok(match reduced_kind(params)? {
        ModelKind::Toda2 => base + params.model.couplings(&params.pair).1.powu(n as u32),
        _ => base,
    })
}

/// t(λ) = zᴺ + H₁z^{N-1} + … + H_{N-1}z + (-1)ᴺc with z = e^{-2πλ/ω₂}.
pub fn transfer_eigenvalue(lambda: Complex64, middle: &[Complex64], p0: f64, params: &KernelParams) -> Result<Complex64> {
    let n = middle.len() + 1;
    let z = (-2.0 * PI * lambda / params.pair.omega2()).exp();
    let c = constant_term(params, p0, n)?;
    let sign = if n % 2 == 0 { ONE } else { -ONE };
    // Horner from the leading coefficient.
    let mut acc = ONE;
    for h in middle {
        acc = acc * z + h;
    }
    Ok(acc * z + sign * c)
}

/// τ₁..τ_N of a reduced model at zero mode p₀.
#[derive(Clone, Debug, PartialEq)]
pub struct TauRoots {
    pub kind: ModelKind,
    pub tau: Vec<Complex64>,
    pub p0: f64,
}

impl TauRoots {
    pub fn n(&self) -> usize {
        self.tau.len()
    }

    /// Completes N-1 free roots with the one fixed by the constraint.
    pub fn complete(free: &[Complex64], p0: f64, params: &KernelParams) -> Result<Self> {
        let kind = reduced_kind(params)?;
        let n = free.len() + 1;
        let w2 = params.pair.omega2();
        let last = match kind {
            ModelKind::QToda => params.pair.omega1() * w2 * p0 / (2.0 * PI) - free.iter().sum::<Complex64>(),
            _ => {
                let c = constant_term(params, p0, n)?;
                let rest: Complex64 = free.iter().map(|t| (-2.0 * PI * t / w2).exp()).product();
                -(w2 / (2.0 * PI)) * (c / rest).ln()
            }
        };
        let mut tau = free.to_vec();
        tau.push(last);
        Ok(Self { kind, tau, p0 })
    }

    /// Roots of t(λ) as a polynomial in e^{-2πλ/ω₂}. For q-Toda the square
    /// roots e^{-πτ_k/ω₂} are fixed up to one overall sign, settled by
    /// moving the last root by iω₂.
    pub fn from_transfer(middle: &[Complex64], p0: f64, params: &KernelParams) -> Result<Self> {
        let kind = reduced_kind(params)?;
        let n = middle.len() + 1;
        let c = constant_term(params, p0, n)?;
        let sign = if n % 2 == 0 { ONE } else { -ONE };
        let mut coeffs = middle.to_vec();
        coeffs.push(sign * c);
        let z = companion_roots(&coeffs)?;
        let w2 = params.pair.omega2();
        let mut tau: Vec<Complex64> = z.iter().map(|z| -(w2 / (2.0 * PI)) * z.ln()).collect();
        let mut roots = Self { kind, tau: tau.clone(), p0 };
        if kind == ModelKind::QToda && roots.constraint_residual(params) > 1e-6 {
            tau[n - 1] += I * w2;
            roots.tau = tau;
        }
        Ok(roots)
    }

    /// |∏ e^{-πτ_k/ω₂} - e^{-ω₁p₀/2}| (q-Toda) or |∏ e^{-2πτ_k/ω₂} - e^{-ω₁p₀} - d₂ᴺ| (Toda₂), relative.
    pub fn constraint_residual(&self, params: &KernelParams) -> f64 {
        let w2 = params.pair.omega2();
        let (lhs, rhs) = match self.kind {
            ModelKind::QToda => (
                self.tau.iter().map(|t| (-PI * t / w2).exp()).product::<Complex64>(),
                (-0.5 * params.pair.omega1() * self.p0).exp(),
            ),
            _ => (
                self.tau.iter().map(|t| (-2.0 * PI * t / w2).exp()).product::<Complex64>(),
                constant_term(params, self.p0, self.n()).unwrap_or(ONE * f64::NAN),
            ),
        };
        (lhs - rhs).norm() / rhs.norm().max(1.0)
    }
}

/// Roots of zⁿ + c₀z^{n-1} + … + c_{n-1} from the companion matrix.
fn companion_roots(coeffs: &[Complex64]) -> Result<Vec<Complex64>> {
    let n = coeffs.len();
    let mut m = DMatrix::<Complex64>::zeros(n, n);
    for (j, c) in coeffs.iter().enumerate() {
        m[(0, j)] = -c;
    }
    for i in 1..n {
        m[(i, i - 1)] = ONE;
    }
    let eig = m
        .schur()
        .eigenvalues()
        .ok_or_else(|| SpectralError::RootFinding("Schur form did not triangularise".into()))?;
    Ok(eig.iter().copied().collect())
}

/// t_τ(λ): ∏ 2sinh(π(λ-τ_k)/ω₂) for q-Toda, ∏ (e^{-2πλ/ω₂} - e^{-2πτ_k/ω₂}) for Toda₂.
pub fn t_tau(lambda: Complex64, roots: &TauRoots, params: &KernelParams) -> Complex64 {
    let w2 = params.pair.omega2();
    match roots.kind {
        ModelKind::QToda => roots.tau.iter().map(|t| 2.0 * (PI * (lambda - t) / w2).sinh()).product(),
        _ => roots
            .tau
            .iter()
            .map(|t| (-2.0 * PI * lambda / w2).exp() - (-2.0 * PI * t / w2).exp())
            .product(),
    }
}

/// Factor with t_τ(λ) = normalisation(λ)·t(λ): (-1)ᴺe^{ω₁p₀/2}e^{Nπλ/ω₂} for q-Toda, 1 for Toda₂.
pub fn normalisation(lambda: Complex64, n: usize, p0: f64, params: &KernelParams) -> Result<Complex64> {
    Ok(match reduced_kind(params)? {
        ModelKind::QToda => {
            let sign = if n % 2 == 0 { 1.0 } else { -1.0 };
            sign * (0.5 * params.pair.omega1() * p0 + n as f64 * PI * lambda / params.pair.omega2()).exp()
        }
        _ => ONE,
    })
}
