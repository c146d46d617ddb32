//! The scalar t-q equation, its gauge transform and the canonical form
//! t_τ(λ)q(λ) = g^{Nω₁}(σϰ^{ω₁}q(λ-iω₁) + σ⁻¹q(λ+iω₁)).

use crate::error::{Result, SpectralError};
use crate::roots::{normalisation, t_tau, TauRoots};
use kernels::KernelParams;
use num_complex::Complex64;
use opcalc::ModelKind;
use rayon::prelude::*;
use std::f64::consts::PI;

const I: Complex64 = Complex64::new(0.0, 1.0);

/// Coefficients (A, B) of t(λ)𝔮(λ) = A𝔮(λ-iω₁) + B𝔮(λ+iω₁).
pub fn baxter_coefficients(lambda: Complex64, n: usize, p0: f64, params: &KernelParams) -> (Complex64, Complex64) {
    let p = &params.pair;
    let (w1, w2, q) = (p.omega1(), p.omega2(), p.q());
    let (d1, d2) = params.model.couplings(p);
    let nn = n as i32;
    let a = (-q * q * q).powi(-nn) * (2.0 * PI * n as f64 * lambda / w2 - w1 * p0).exp();
    let b = (-q).powi(nn)
        * (-2.0 * PI * n as f64 * lambda / w2).exp()
        * (d2 + d1 / q * (-2.0 * PI * lambda / w2).exp()).powi(nn);
    (a, b)
}

/// t(λ)𝔮(λ) - A𝔮(λ-iω₁) - B𝔮(λ+iω₁).
pub fn baxter_signed_residual<F>(frak_q: F, t: Complex64, lambda: Complex64, n: usize, p0: f64, params: &KernelParams) -> Complex64
where
    F: Fn(Complex64) -> Complex64,
{
    let w1 = params.pair.omega1();
    let (a, b) = baxter_coefficients(lambda, n, p0, params);
    t * frak_q(lambda) - a * frak_q(lambda - I * w1) - b * frak_q(lambda + I * w1)
}

/// σ, log g and log ϰ of the canonical form.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct CanonicalParams {
    pub sigma: Complex64,
    pub log_g: Complex64,
    pub log_kappa: Complex64,
}

impl CanonicalParams {
    /// q-Toda: σ = (-i)ᴺ, g = e^{-πκ₁/ω₁ω₂}, ϰ = 1. Toda₂: σ = (-1)ᴺ, g = e^{-πκ₂/ω₁ω₂}, ϰ = e^{-p₀}.
    pub fn new(n: usize, p0: f64, params: &KernelParams) -> Result<Self> {
        let mu = params.pair.mu();
        let zero = Complex64::new(0.0, 0.0);
        match params.model.kind {
            ModelKind::QToda => Ok(Self {
                sigma: (-I).powu(n as u32),
                log_g: -PI * params.kappa1() / mu,
                log_kappa: zero,
            }),
            ModelKind::Toda2 => Ok(Self {
                sigma: Complex64::new(-1.0, 0.0).powu(n as u32),
                log_g: -PI * params.kappa2() / mu,
                log_kappa: Complex64::new(-p0, 0.0),
            }),
            k => Err(SpectralError::NoCanonicalForm(k)),
        }
    }

    pub fn g(&self) -> Complex64 {
        self.log_g.exp()
    }

    pub fn kappa(&self) -> Complex64 {
        self.log_kappa.exp()
    }

    /// g^{Nω₁}σϰ^{ω₁} and g^{Nω₁}σ⁻¹, powers taken through the logarithms.
    pub fn coefficients(&self, n: usize, w1: Complex64) -> (Complex64, Complex64) {
        let gn = (n as f64 * w1 * self.log_g).exp();
        (gn * self.sigma * (w1 * self.log_kappa).exp(), gn / self.sigma)
    }
}

/// Quadratic exponent (a, b) of the gauge factor G(λ) = e^{aλ² + bλ}, with 𝔮 = Gq.
pub fn gauge_exponent(n: usize, p0: f64, params: &KernelParams) -> Result<(Complex64, Complex64)> {
    let p = &params.pair;
    let (mu, om) = (p.mu(), p.omega());
    let nf = n as f64;
    match params.model.kind {
        ModelKind::QToda => Ok((
            -3.0 * I * PI * nf / (2.0 * mu),
            -3.0 * PI * nf * om / (2.0 * mu) + 0.5 * I * p0 - I * PI * nf * params.kappa1() / mu,
        )),
        ModelKind::Toda2 => Ok((-I * PI * nf / mu, -2.0 * PI * nf * om / mu - I * PI * nf * params.kappa2() / mu)),
        k => Err(SpectralError::NoCanonicalForm(k)),
    }
}

pub fn gauge(lambda: Complex64, n: usize, p0: f64, params: &KernelParams) -> Result<Complex64> {
    let (a, b) = gauge_exponent(n, p0, params)?;
    Ok((a * lambda * lambda + b * lambda).exp())
}

/// Gauge factor and the coefficients of the gauged equation next to the canonical ones.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct CanonicalTransform {
    pub gauge: Complex64,
    pub backward: Complex64,
    pub forward: Complex64,
    pub canonical_backward: Complex64,
    pub canonical_forward: Complex64,
}

impl CanonicalTransform {
    /// Largest relative mismatch of the two multipliers.
    pub fn residual(&self) -> f64 {
        let r = |a: Complex64, b: Complex64| (a - b).norm() / b.norm();
        r(self.backward, self.canonical_backward).max(r(self.forward, self.canonical_forward))
    }
}

/// Multiplies the scalar t-q equation by the normalisation of t and substitutes 𝔮 = Gq.
pub fn canonical_transform(lambda: Complex64, n: usize, p0: f64, params: &KernelParams) -> Result<CanonicalTransform> {
    let w1 = params.pair.omega1();
    let (a, b) = gauge_exponent(n, p0, params)?;
    let log_g = |l: Complex64| a * l * l + b * l;
    let nf = normalisation(lambda, n, p0, params)?;
    let (ca, cb) = baxter_coefficients(lambda, n, p0, params);
    let back_ratio = (log_g(lambda - I * w1) - log_g(lambda)).exp();
    let fwd_ratio = (log_g(lambda + I * w1) - log_g(lambda)).exp();
    let (canonical_backward, canonical_forward) = CanonicalParams::new(n, p0, params)?.coefficients(n, w1);
    Ok(CanonicalTransform {
        gauge: log_g(lambda).exp(),
        backward: nf * ca * back_ratio,
        forward: nf * cb * fwd_ratio,
        canonical_backward,
        canonical_forward,
    })
}

/// t_τ(λ)q(λ) - g^{Nω₁}(σϰ^{ω₁}q(λ-iω₁) + σ⁻¹q(λ+iω₁)).
pub fn canonical_signed_residual<F>(q_fn: F, lambda: Complex64, roots: &TauRoots, params: &KernelParams) -> Result<Complex64>
where
    F: Fn(Complex64) -> Complex64,
{
    let w1 = params.pair.omega1();
    let (cb, cf) = CanonicalParams::new(roots.n(), roots.p0, params)?.coefficients(roots.n(), w1);
    Ok(t_tau(lambda, roots, params) * q_fn(lambda) - cb * q_fn(lambda - I * w1) - cf * q_fn(lambda + I * w1))
}

/// Maximum of |canonical_signed_residual| over the samples.
pub fn canonical_residual<F>(q_fn: F, samples: &[Complex64], roots: &TauRoots, params: &KernelParams) -> Result<f64>
where
    F: Fn(Complex64) -> Complex64 + Sync,
{
    samples
        .par_iter()
        .map(|&l| canonical_signed_residual(&q_fn, l, roots, params).map(|r| r.norm()))
        .try_reduce(|| 0.0, |a, b| Ok(a.max(b)))
}
