use num_complex::Complex64;
use opcalc::{ModelKind, ModelParams};
use specfun::ModularPair;
use std::f64::consts::PI;

const I: Complex64 = Complex64::new(0.0, 1.0);

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct KernelParams {
    pub pair: ModularPair,
    pub model: ModelParams,
}

impl KernelParams {
    pub fn new(pair: ModularPair, model: ModelParams) -> Self {
        Self { pair, model }
    }

    /// Default pair with κ₁ = 0.37, κ₂ = -0.21.
    pub fn default_for(kind: ModelKind) -> Self {
        Self::new(ModularPair::default_pair(), ModelParams::new(kind, 0.37, -0.21))
    }

    /// Same couplings κ, periods exchanged.
    pub fn swapped(&self) -> Self {
        Self::new(self.pair.swap(), self.model)
    }

    pub fn kappa1(&self) -> Complex64 {
        Complex64::new(self.model.kappa1, 0.0)
    }

    pub fn kappa2(&self) -> Complex64 {
        Complex64::new(self.model.kappa2, 0.0)
    }
}

/// Parameters of the compact form of the intertwiner.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct CompactRepParams {
    pub a: Complex64,
    pub b: Complex64,
    pub alpha: Complex64,
    pub beta: Complex64,
    /// 𝔞 = d₂q²e^{2πt/ω₂}
    pub frak_a: Complex64,
    /// 𝔟 = -q³d₁
    pub frak_b: Complex64,
}

impl CompactRepParams {
    /// Uses the generic couplings d_i = e^{-2πκ_i/ω₂} whatever the model tag.
    pub fn new(t: Complex64, params: &KernelParams) -> Self {
        let p = &params.pair;
        let (w2, om, q) = (p.omega2(), p.omega(), p.q());
        let (k1, k2) = (params.kappa1(), params.kappa2());
        let d1 = (-2.0 * PI * k1 / w2).exp();
        let d2 = (-2.0 * PI * k2 / w2).exp();
        Self {
            a: (2.0 * PI / w2 * (k2 + 0.5 * I * om)).exp(),
            b: (2.0 * PI / w2 * (k1 + 0.5 * I * om)).exp(),
            alpha: k2 - 0.5 * I * om,
            beta: k2 - k1 + 0.5 * I * om,
            frak_a: d2 * q * q * (2.0 * PI * t / w2).exp(),
            frak_b: -q * q * q * d1,
        }
    }

    /// Largest relative defect among the relations tying the two forms together:
    /// a/b = e^{2π(κ₂-κ₁)/ω₂}, a = -q/d₂, b = -q/d₁, q⁴/𝔟 = b, q⁴/𝔞 = -aq e^{-2πt/ω₂}.
    pub fn consistency_residual(&self, t: Complex64, params: &KernelParams) -> f64 {
        let p = &params.pair;
        let (w2, q) = (p.omega2(), p.q());
        let (k1, k2) = (params.kappa1(), params.kappa2());
        let d1 = (-2.0 * PI * k1 / w2).exp();
        let d2 = (-2.0 * PI * k2 / w2).exp();
        let q4 = q.powi(4);
        let rel = |x: Complex64, y: Complex64| (x - y).norm() / y.norm();
        [
            rel(self.a / self.b, (2.0 * PI * (k2 - k1) / w2).exp()),
            rel(self.a, -q / d2),
            rel(self.b, -q / d1),
            rel(q4 / self.frak_b, self.b),
            rel(q4 / self.frak_a, -self.a * q * (-2.0 * PI * t / w2).exp()),
            rel(self.beta - self.alpha, I * p.omega() - k1),
        ]
        .into_iter()
        .fold(0.0, f64::max)
    }
}
