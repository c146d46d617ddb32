//! The building blocks φ₁₄, φ₂₃, ψ₁₃, ψ₂₄ of the intertwiner and the
//! first-order difference equations they solve.

use crate::error::{Result, Tag};
use crate::params::KernelParams;
use num_complex::Complex64;
use specfun::dilog::{varpi, DTransformData};
use specfun::{DoubleSine, EvalMethod};
use std::f64::consts::PI;

const I: Complex64 = Complex64::new(0.0, 1.0);
const ONE: Complex64 = Complex64::new(1.0, 0.0);

/// Which difference equation.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum FdEquation {
    E14,
    E23,
    E13,
    E24,
}

impl FdEquation {
    pub const ALL: [FdEquation; 4] = [FdEquation::E14, FdEquation::E23, FdEquation::E13, FdEquation::E24];

    pub fn label(&self) -> &'static str {
        match self {
            FdEquation::E14 => "(14)",
            FdEquation::E23 => "(23)",
            FdEquation::E13 => "(13)",
            FdEquation::E24 => "(24)",
        }
    }
}

/// Direct frame shifts by iω₁ and exponentiates with 2π/ω₂; the dual frame swaps them.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Frame {
    Direct,
    Dual,
}

#[derive(Clone, Debug)]
pub struct IntertwinerFactors {
    pub t: Complex64,
    /// α₀ = (t+κ₁-κ₂)/2 - iΩ/4
    pub alpha0: Complex64,
    /// C_𝕃(t) = √(ω₁ω₂) e^{-2iπα₀(α₀+iΩ/2)/ω₁ω₂} / ϖ(2α₀ - iΩ/2)
    pub c_l: Complex64,
    params: KernelParams,
    ds: DoubleSine,
}

impl IntertwinerFactors {
    pub fn new(t: Complex64, params: &KernelParams) -> Result<Self> {
        let ds = DoubleSine::new(params.pair, EvalMethod::default())?;
        let om = params.pair.omega();
        let mu = params.pair.mu();
        let alpha0 = 0.5 * (t + params.kappa1() - params.kappa2()) - 0.25 * I * om;
        let c_l = mu.sqrt() * (-2.0 * PI * I * alpha0 * (alpha0 + 0.5 * I * om) / mu).exp()
            / varpi(2.0 * alpha0 - 0.5 * I * om, &ds).factor("varpi(2a0-iW/2)")?;
        Ok(Self {
            t,
            alpha0,
            c_l,
            params: *params,
            ds,
        })
    }

    fn s(&self, z: Complex64, name: &'static str) -> Result<Complex64> {
        self.ds.eval(z).factor(name)
    }

    /// φ₁₄(x) = e^{-2iπtx/ω₁ω₂} / 𝒮(x-t+iΩ/2).
    pub fn phi14(&self, x: Complex64) -> Result<Complex64> {
        let p = &self.params.pair;
        Ok((-2.0 * PI * I * self.t * x / p.mu()).exp() / self.s(x - self.t + 0.5 * I * p.omega(), "phi14")?)
    }

    /// φ₂₃(x) = 𝒮(x+κ₁-iΩ/2).
    pub fn phi23(&self, x: Complex64) -> Result<Complex64> {
        self.s(x + self.params.kappa1() - 0.5 * I * self.params.pair.omega(), "phi23")
    }

    /// ψ₁₃ ≡ 1.
    pub fn psi13(&self, _x: Complex64) -> Result<Complex64> {
        Ok(ONE)
    }

    /// ψ₂₄(p) = e^{ip(κ₂-iΩ/2)} 𝒮(ω₁ω₂p/2π + t+κ₁-κ₂-iΩ/2) / 𝒮(ω₁ω₂p/2π).
    pub fn psi24(&self, pm: Complex64) -> Result<Complex64> {
        let p = &self.params.pair;
        let (om, mu) = (p.omega(), p.mu());
        let (k1, k2) = (self.params.kappa1(), self.params.kappa2());
        let w = mu * pm / (2.0 * PI);
        Ok((I * pm * (k2 - 0.5 * I * om)).exp() * self.s(w + self.t + k1 - k2 - 0.5 * I * om, "psi24 num")?
            / self.s(w, "psi24 den")?)
    }

    /// φ₁₄ with the λ-dependent exponential of the elementary solution.
    pub fn phi14_at(&self, lambda: Complex64, x: Complex64) -> Result<Complex64> {
        let p = &self.params.pair;
        let g = (-2.0 * PI * I * x * (lambda + 0.5 * I * p.omega2()) / p.mu()).exp();
        Ok(g * self.phi14(x)?)
    }

    pub fn phi23_at(&self, lambda: Complex64, x: Complex64) -> Result<Complex64> {
        let p = &self.params.pair;
        let g = (2.0 * PI * I * x * (lambda + 0.5 * I * p.omega2()) / p.mu()).exp();
        Ok(g * self.phi23(x)?)
    }

    /// ψ₂₄ in the variable X of the elementary solution:
    /// e^{iX(κ₂-iΩ/2)} 𝒮(ω₁ω₂X/2π+t+κ₁-κ₂+λ-iω₁/2) / 𝒮(ω₁ω₂X/2π+λ+iω₂/2).
    pub fn psi24_at(&self, lambda: Complex64, big_x: Complex64) -> Result<Complex64> {
        let p = &self.params.pair;
        let (om, mu) = (p.omega(), p.mu());
        let (k1, k2) = (self.params.kappa1(), self.params.kappa2());
        let w = mu * big_x / (2.0 * PI);
        Ok((I * big_x * (k2 - 0.5 * I * om)).exp()
            * self.s(w + self.t + k1 - k2 + lambda - 0.5 * I * p.omega1(), "psi24 num")?
            / self.s(w + lambda + 0.5 * I * p.omega2(), "psi24 den")?)
    }

    /// Right-hand sides of (14), (23), (13), (24) as printed, at spectral parameter λ.
    pub fn printed_rhs(&self, eq: FdEquation, lambda: Complex64, x: Complex64) -> Complex64 {
        let p = &self.params.pair;
        let (w1, w2, om, mu) = (p.omega1(), p.omega2(), p.omega(), p.mu());
        let (k1, k2) = (self.params.kappa1(), self.params.kappa2());
        let t = self.t;
        let e = |z: Complex64| (2.0 * PI / w2 * z).exp();
        match eq {
            FdEquation::E14 => e(-(lambda + t + 0.5 * I * w2)) * (ONE - e(t - x - 0.5 * I * om)),
            FdEquation::E23 => e(lambda + 0.5 * I * w2) / (ONE - e(-(x + k1 - 0.5 * I * om))),
            FdEquation::E13 => ONE,
            FdEquation::E24 => {
                let w = mu * x / (2.0 * PI);
                e(k2 - 0.5 * I * om) * (ONE - e(-(w + lambda + 0.5 * I * w2)))
                    / (ONE - e(-(w + lambda + t + k1 - k2 - 0.5 * I * w1)))
            }
        }
    }

    /// Residual of the printed equation for the λ-dependent solution at x
    /// (x plays the role of X for the momentum equations).
    pub fn printed_residual(&self, eq: FdEquation, lambda: Complex64, x: Complex64) -> Result<f64> {
        let p = &self.params.pair;
        let w1 = p.omega1();
        let (shifted, base) = match eq {
            FdEquation::E14 => (self.phi14_at(lambda, x - I * w1)?, self.phi14_at(lambda, x)?),
            FdEquation::E23 => (self.phi23_at(lambda, x - I * w1)?, self.phi23_at(lambda, x)?),
            FdEquation::E13 => (self.psi13(x)?, self.psi13(x)?),
            FdEquation::E24 => {
                let h = 2.0 * PI * I / p.omega2();
                (self.psi24_at(lambda, x - h)?, self.psi24_at(lambda, x)?)
            }
        };
        Ok(rel(shifted / base, self.printed_rhs(eq, lambda, x)))
    }

    /// Right-hand side for the λ-free factors in either frame; the dual is
    /// the direct one with ω₁ ↔ ω₂.
    pub fn frame_rhs(&self, eq: FdEquation, frame: Frame, x: Complex64) -> Complex64 {
        let p = &self.params.pair;
        let (om, mu) = (p.omega(), p.mu());
        let wb = match frame {
            Frame::Direct => p.omega2(),
            Frame::Dual => p.omega1(),
        };
        let (k1, k2) = (self.params.kappa1(), self.params.kappa2());
        let t = self.t;
        let e = |z: Complex64| (2.0 * PI / wb * z).exp();
        match eq {
            FdEquation::E14 => e(-t) * (ONE - e(-(x - t + 0.5 * I * om))),
            FdEquation::E23 => ONE / (ONE - e(-(x + k1 - 0.5 * I * om))),
            FdEquation::E13 => ONE,
            FdEquation::E24 => {
                let w = mu * x / (2.0 * PI);
                e(k2 - 0.5 * I * om) * (ONE - e(-w)) / (ONE - e(-(w + t + k1 - k2 - 0.5 * I * om)))
            }
        }
    }

    /// Residual of the λ-free factor's equation in the given frame.
    pub fn frame_residual(&self, eq: FdEquation, frame: Frame, x: Complex64) -> Result<f64> {
        let p = &self.params.pair;
        let (wa, wb) = match frame {
            Frame::Direct => (p.omega1(), p.omega2()),
            Frame::Dual => (p.omega2(), p.omega1()),
        };
        let (shifted, base) = match eq {
            FdEquation::E14 => (self.phi14(x - I * wa)?, self.phi14(x)?),
            FdEquation::E23 => (self.phi23(x - I * wa)?, self.phi23(x)?),
            FdEquation::E13 => (self.psi13(x - I * wa)?, self.psi13(x)?),
            FdEquation::E24 => (self.psi24(x - 2.0 * PI * I / wb)?, self.psi24(x)?),
        };
        Ok(rel(shifted / base, self.frame_rhs(eq, frame, x)))
    }

    /// 𝒮(p+t+κ₁-κ₂-iΩ/2)/𝒮(p) against D_{α₀}(p+β₀) e^{2iπα₀(p+β₀)/ω₁ω₂}.
    pub fn psi24_dilog_residual(&self, pm: Complex64) -> Result<f64> {
        let p = &self.params.pair;
        let (om, mu) = (p.omega(), p.mu());
        let s = self.t + self.params.kappa1() - self.params.kappa2();
        let beta0 = 0.5 * (s + 0.5 * I * om);
        let lhs = self.s(pm + s - 0.5 * I * om, "psi24 num")? / self.s(pm, "psi24 den")?;
        let d = specfun::d_alpha(pm + beta0, self.alpha0, &self.ds)?;
        let rhs = d * (2.0 * PI * I * self.alpha0 * (pm + beta0) / mu).exp();
        Ok(rel(lhs, rhs))
    }

    /// 𝒜(α₀) of the Fourier pair, for callers rebuilding C_𝕃.
    pub fn transform_data(&self) -> Result<DTransformData> {
        Ok(DTransformData::new(self.alpha0, &self.ds)?)
    }
}

fn rel(a: Complex64, b: Complex64) -> f64 {
    (a - b).norm() / b.norm().max(f64::MIN_POSITIVE)
}

/// Factors at t with a fresh evaluator.
pub fn intertwiner_factors(t: Complex64, params: &KernelParams) -> Result<IntertwinerFactors> {
    IntertwinerFactors::new(t, params)
}
