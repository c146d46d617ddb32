//! Quantum dilogarithm ϖ, the ratio D_α and its Fourier transform.

use crate::dsine::{DoubleSine, EvalMethod};
use crate::error::{Result, SpecError};
use crate::modular::ModularPair;
use crate::quad::{trapezoid_line, GaussPanels};
use crate::theta::quad_b;
use num_complex::Complex64;
use std::f64::consts::PI;

const I: Complex64 = Complex64::new(0.0, 1.0);

/// ϖ(w) = e^{-iB(w-iΩ/2)/2} 𝒮(w-iΩ/2).
pub fn varpi(w: Complex64, ds: &DoubleSine) -> Result<Complex64> {
    let z = w - 0.5 * I * ds.pair().omega();
    Ok((-0.5 * I * quad_b(z, ds.pair())).exp() * ds.eval(z)?)
}

/// D_α(x) = ϖ(x+α)/ϖ(x-α).
pub fn d_alpha(x: Complex64, alpha: Complex64, ds: &DoubleSine) -> Result<Complex64> {
    if alpha == Complex64::new(0.0, 0.0) {
        return Ok(Complex64::new(1.0, 0.0));
    }
    Ok(varpi(x + alpha, ds)? / varpi(x - alpha, ds)?)
}

/// (ϖ(λ), D_α(λ)).
pub fn dilog_d(lambda: Complex64, alpha: Complex64, p: &ModularPair) -> Result<(Complex64, Complex64)> {
    let ds = DoubleSine::new(*p, EvalMethod::default())?;
    Ok((varpi(lambda, &ds)?, d_alpha(lambda, alpha, &ds)?))
}

/// α, its partner α* = -α - iΩ/2 and the constant 𝒜(α) = ϖ(α - α*).
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct DTransformData {
    pub alpha: Complex64,
    pub alpha_star: Complex64,
    pub a_alpha: Complex64,
}

impl DTransformData {
    pub fn new(alpha: Complex64, ds: &DoubleSine) -> Result<Self> {
        let alpha_star = star(alpha, ds.pair());
        let a_alpha = varpi(alpha - alpha_star, ds)?;
        Ok(Self {
            alpha,
            alpha_star,
            a_alpha,
        })
    }
}

pub fn star(alpha: Complex64, p: &ModularPair) -> Complex64 {
    -alpha - 0.5 * I * p.omega()
}

/// (α₀, β₀) with 2α₀ = t+κ₁-κ₂-iΩ/2 and 2β₀ = t+κ₁-κ₂+iΩ/2.
pub fn intertwiner_exponents(t: Complex64, k1: Complex64, k2: Complex64, p: &ModularPair) -> (Complex64, Complex64) {
    let s = t + k1 - k2;
    let h = 0.5 * I * p.omega();
    (0.5 * (s - h), 0.5 * (s + h))
}

/// Outcome of the Fourier check.
#[derive(Clone, Debug, PartialEq)]
pub struct FourierCheck {
    pub max_residual: f64,
    /// |trapezoid - Gauss–Legendre| for the p = 0 integral, when 0 is sampled.
    pub p0_cross_check: Option<f64>,
    pub samples: usize,
}

/// Quadrature settings for the Fourier check.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct FourierBudget {
    pub tol: f64,
    pub cutoff: f64,
    pub gauss_degree: usize,
}

impl Default for FourierBudget {
    fn default() -> Self {
        Self {
            tol: 1e-13,
            cutoff: 200.0,
            gauss_degree: 24,
        }
    }
}

/// Residual of D_α(p) = (𝒜(α)/√(ω₁ω₂)) ∫ D_{α*}(v) e^{-2πivp/ω₁ω₂} dv, maximised over p.
pub fn fourier_d_residual(alpha: Complex64, p: &ModularPair, samples: &[Complex64], budget: &FourierBudget) -> Result<f64> {
    Ok(fourier_d_check(alpha, p, samples, budget)?.max_residual)
}

pub fn fourier_d_check(alpha: Complex64, pair: &ModularPair, samples: &[Complex64], budget: &FourierBudget) -> Result<FourierCheck> {
    let ds = DoubleSine::new(*pair, EvalMethod::default())?;
    let data = DTransformData::new(alpha, &ds)?;
    let mu = pair.mu();
    let a_star = data.alpha_star;
    let half = 0.5 * pair.omega().re;
    if !(a_star.im < 0.0 && a_star.im > -half) {
        return Err(SpecError::NonDecayingIntegrand(format!(
            "Im α* = {} outside (-Re Ω/2, 0)",
            a_star.im
        )));
    }
    for &ps in samples {
        if !((a_star + ps) / mu).im.lt(&0.0) || !((a_star - ps) / mu).im.lt(&0.0) {
            return Err(SpecError::NonDecayingIntegrand(format!(
                "D_(α*) e^(-2πivp/μ) grows along the real line for p = {ps}"
            )));
        }
    }
    // Width of the strip around ℝ where the integrand is analytic.
    let d = (a_star.im + half).min(-a_star.im);
    let norm = data.a_alpha / mu.sqrt();
    let mut worst: f64 = 0.0;
    let mut cross = None;
    for &ps in samples {
        let f = |v: f64| -> Complex64 {
            let v = Complex64::new(v, 0.0);
            match d_alpha(v, a_star, &ds) {
                Ok(x) => x * (-2.0 * PI * I * v * ps / mu).exp(),
                Err(_) => Complex64::new(f64::NAN, f64::NAN),
            }
        };
        let growth = 2.0 * PI * d * (ps / mu).norm();
        let step = 2.0 * PI * d / ((1.0 / budget.tol).ln() + growth + 5.0);
        let integral = trapezoid_line(f, step, budget.tol * 1e-2, budget.cutoff)?;
        let lhs = d_alpha(ps, alpha, &ds)?;
        let rhs = norm * integral;
        worst = worst.max(rel_or_abs(lhs, rhs));
        if ps == Complex64::new(0.0, 0.0) {
            let span = extent(&f, step, budget.tol * 1e-2, budget.cutoff);
            let panels = (2.0 * span).ceil() as usize * 2;
            let g = GaussPanels::new(budget.gauss_degree).integrate(f, -span, span, panels.max(4));
            cross = Some((g - integral).norm() / integral.norm().max(1.0));
        }
    }
    Ok(FourierCheck {
        max_residual: worst,
        p0_cross_check: cross,
        samples: samples.len(),
    })
}

/// Half-width beyond which |f| stays below tol.
fn extent<F: Fn(f64) -> Complex64>(f: &F, step: f64, tol: f64, cutoff: f64) -> f64 {
    let scale = f(0.0).norm().max(1.0);
    let mut r: f64 = 0.0;
    let mut s = step;
    while s < cutoff {
        if f(s).norm() >= tol * scale || f(-s).norm() >= tol * scale {
            r = s;
        }
        s += step;
    }
    r + 1.0
}

/// Relative residual when |reference| > 1, absolute otherwise.
pub fn rel_or_abs(value: Complex64, reference: Complex64) -> f64 {
    let d = (value - reference).norm();
    let r = reference.norm();
    if r > 1.0 {
        d / r
    } else {
        d
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn d_zero_is_one() {
        let p = ModularPair::default_pair();
        let (_, d) = dilog_d(c(0.4, 0.1), c(0.0, 0.0), &p).unwrap();
        assert_eq!(d, c(1.0, 0.0));
    }

    #[test]
    fn star_is_involution() {
        let p = ModularPair::default_pair();
        let a = c(-0.35, -0.55);
        assert!((star(star(a, &p), &p) - a).norm() < 1e-15);
    }

    #[test]
    fn growing_integrand_rejected() {
        let p = ModularPair::default_pair();
        let r = fourier_d_residual(c(0.0, 0.3), &p, &[c(0.0, 0.0)], &FourierBudget::default());
        assert!(matches!(r, Err(SpecError::NonDecayingIntegrand(_))));
    }
}
