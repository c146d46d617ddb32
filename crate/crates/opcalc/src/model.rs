use num_complex::Complex64;
use specfun::ModularPair;
use std::f64::consts::PI;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ModelKind {
    Generic,
    QToda,
    Toda2,
}

impl ModelKind {
    pub const ALL: [ModelKind; 3] = [ModelKind::Generic, ModelKind::QToda, ModelKind::Toda2];

    pub fn name(&self) -> &'static str {
        match self {
            ModelKind::Generic => "generic",
            ModelKind::QToda => "qtoda",
            ModelKind::Toda2 => "toda2",
        }
    }
}

impl std::str::FromStr for ModelKind {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        match s.to_ascii_lowercase().as_str() {
            "generic" => Ok(ModelKind::Generic),
            "qtoda" | "q-toda" => Ok(ModelKind::QToda),
            "toda2" => Ok(ModelKind::Toda2),
            other => Err(format!("unknown model '{other}'")),
        }
    }
}

/// Model tag with real κ₁, κ₂; the couplings are d_i = e^{-2πκ_i/ω₂} and
/// the dual ones d̃_i = e^{-2πκ_i/ω₁}. q-Toda sets d₂ = 0, Toda₂ sets d₁ = 0.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ModelParams {
    pub kind: ModelKind,
    pub kappa1: f64,
    pub kappa2: f64,
}

impl ModelParams {
    pub fn new(kind: ModelKind, kappa1: f64, kappa2: f64) -> Self {
        Self { kind, kappa1, kappa2 }
    }

    fn couplings_for(&self, w: Complex64) -> (Complex64, Complex64) {
        let d1 = (-2.0 * PI * self.kappa1 / w).exp();
        let d2 = (-2.0 * PI * self.kappa2 / w).exp();
        let zero = Complex64::new(0.0, 0.0);
        match self.kind {
            ModelKind::Generic => (d1, d2),
            ModelKind::QToda => (d1, zero),
            ModelKind::Toda2 => (zero, d2),
        }
    }

    /// (d₁, d₂).
    pub fn couplings(&self, p: &ModularPair) -> (Complex64, Complex64) {
        self.couplings_for(p.omega2())
    }

    /// (d̃₁, d̃₂).
    pub fn dual_couplings(&self, p: &ModularPair) -> (Complex64, Complex64) {
        self.couplings_for(p.omega1())
    }
}
