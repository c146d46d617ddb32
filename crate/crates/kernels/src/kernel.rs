//! The kernel 𝓛_t(x,u;v) and the product kernel Q_λ(x⃗,y⃗).

use crate::error::{Result, Tag};
use crate::params::KernelParams;
use num_complex::Complex64;
use opcalc::ModelKind;
use specfun::{DoubleSine, EvalMethod};
use std::f64::consts::PI;

const I: Complex64 = Complex64::new(0.0, 1.0);

pub const FACTOR_NAMES: [&str; 4] = [
    "S(x-v+k2-3iW/2)",
    "S(u-v+k1-iW/2)",
    "S(x-v+t+k1-iW)",
    "S(u-x-t+iW/2)",
];

/// The pieces of 𝓛_t(x,u;v); factors absent from the model are `None`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct LFactors {
    pub exponential: Complex64,
    /// numerators 𝒮(x-v+κ₂-3iΩ/2), 𝒮(u-v+κ₁-iΩ/2)
    pub num: [Option<Complex64>; 2],
    /// denominators 𝒮(x-v+t+κ₁-iΩ), 𝒮(u-x-t+iΩ/2)
    pub den: [Option<Complex64>; 2],
}

impl LFactors {
    pub fn value(&self) -> Complex64 {
        let mut v = self.exponential;
        for n in self.num.iter().flatten() {
            v *= n;
        }
        for d in self.den.iter().flatten() {
            v /= d;
        }
        v
    }
}

/// Evaluator for the kernels at fixed periods and couplings.
#[derive(Clone, Debug)]
pub struct Kernel {
    params: KernelParams,
    ds: DoubleSine,
}

impl Kernel {
    pub fn new(params: KernelParams) -> Result<Self> {
        Self::with_method(params, EvalMethod::default())
    }

    pub fn with_method(params: KernelParams, method: EvalMethod) -> Result<Self> {
        let ds = DoubleSine::new(params.pair, method)?;
        Ok(Self { params, ds })
    }

    pub fn params(&self) -> &KernelParams {
        &self.params
    }

    pub fn dsine(&self) -> &DoubleSine {
        &self.ds
    }

    /// Which of the four factors the model keeps.
    pub fn present(kind: ModelKind) -> [bool; 4] {
        match kind {
            ModelKind::Generic => [true; 4],
            ModelKind::QToda => [false, true, true, true],
            ModelKind::Toda2 => [true, false, false, true],
        }
    }

    pub fn l_factors(&self, t: Complex64, x: Complex64, u: Complex64, v: Complex64) -> Result<LFactors> {
        let p = &self.params.pair;
        let om = p.omega();
        let (k1, k2) = (self.params.kappa1(), self.params.kappa2());
        let keep = Self::present(self.params.model.kind);
        let args = [
            x - v + k2 - 1.5 * I * om,
            u - v + k1 - 0.5 * I * om,
            x - v + t + k1 - I * om,
            u - x - t + 0.5 * I * om,
        ];
        let mut vals = [None; 4];
        for k in 0..4 {
            if keep[k] {
                vals[k] = Some(self.ds.eval(args[k]).factor(FACTOR_NAMES[k])?);
            }
        }
        Ok(LFactors {
            exponential: (2.0 * PI * I * t * (x - u) / p.mu()).exp(),
            num: [vals[0], vals[1]],
            den: [vals[2], vals[3]],
        })
    }

    /// 𝓛_t(x,u;v).
    pub fn l(&self, t: Complex64, x: Complex64, u: Complex64, v: Complex64) -> Result<Complex64> {
        Ok(self.l_factors(t, x, u, v)?.value())
    }

    /// Q_λ(x⃗,y⃗) = ∏_a 𝓛_λ(x_a, y_a; y_{a-1}) with y₀ = y_N.
    pub fn q(&self, lambda: Complex64, x: &[Complex64], y: &[Complex64]) -> Result<Complex64> {
        let n = x.len();
        if n == 0 || y.len() != n {
            return Err(crate::KernelError::Invalid(format!("need N >= 1 and matching lengths, got {} and {}", n, y.len())));
        }
        let mut v = Complex64::new(1.0, 0.0);
        for a in 0..n {
            v *= self.l(lambda, x[a], y[a], y[(a + n - 1) % n])?;
        }
        Ok(v)
    }

    /// The rational factor of 𝓛_λ(x+iω₁,y;y')/𝓛_λ(x,y;y'):
    /// q⁻¹(qΛ + e^{-2π(y-x)/ω₂})(1 + q d₂e^{-2π(x-y')/ω₂}) / (1 - d₁Λe^{-2π(x-y')/ω₂}).
    pub fn shift_ratio_printed(&self, lambda: Complex64, x: Complex64, y: Complex64, yp: Complex64) -> Complex64 {
        let p = &self.params.pair;
        let (w2, q) = (p.omega2(), p.q());
        let (d1, d2) = self.params.model.couplings(p);
        let big_l = (-2.0 * PI * lambda / w2).exp();
        let e = |z: Complex64| (-2.0 * PI * z / w2).exp();
        (q * big_l + e(y - x)) * (1.0 + q * d2 * e(x - yp)) / (q * (1.0 - d1 * big_l * e(x - yp)))
    }

    /// Relative defect of the shift identity at one point.
    pub fn shift_identity_residual(&self, lambda: Complex64, x: Complex64, y: Complex64, yp: Complex64) -> Result<f64> {
        let w1 = self.params.pair.omega1();
        let base = self.l(lambda, x, y, yp)?;
        let shifted = self.l(lambda, x + I * w1, y, yp)?;
        let expect = self.shift_ratio_printed(lambda, x, y, yp) * base;
        Ok((shifted - expect).norm() / shifted.norm().max(expect.norm()))
    }
}

/// 𝓛_t(x,u;v) with a fresh evaluator.
pub fn kernel_l(x: Complex64, u: Complex64, v: Complex64, t: Complex64, params: &KernelParams) -> Result<Complex64> {
    Kernel::new(*params)?.l(t, x, u, v)
}

/// Q_λ(x⃗,y⃗) with a fresh evaluator.
pub fn kernel_q(x: &[Complex64], y: &[Complex64], lambda: Complex64, params: &KernelParams) -> Result<Complex64> {
    Kernel::new(*params)?.q(lambda, x, y)
}
