//! Run configuration, read from TOML. Complex numbers are `[re, im]` pairs.

use crate::error::{CliError, Result};
use kernels::{KernelParams, LineQuad};
use num_complex::Complex64;
use opcalc::{ModelKind, ModelParams};
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};
use specfun::{DoubleSine, EvalMethod, MethodKind, ModularPair};
use std::path::Path;

/// Named period pairs.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Preset {
    /// (1, 1.3+0.9i)
    #[default]
    Default,
    /// ω₁ = ω₂ = 1, a point of the real regime
    SelfDual,
    /// ω₂ = conj(ω₁) = 1-0.6i
    Conjugate,
}

impl Preset {
    pub fn periods(self) -> ([f64; 2], [f64; 2]) {
        match self {
            Preset::Default => ([1.0, 0.0], [1.3, 0.9]),
            Preset::SelfDual => ([1.0, 0.0], [1.0, 0.0]),
            Preset::Conjugate => ([1.0, 0.6], [1.0, -0.6]),
        }
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ModelTag {
    #[default]
    All,
    Generic,
    QToda,
    Toda2,
}

impl ModelTag {
    pub fn kinds(self) -> Vec<ModelKind> {
        match self {
            ModelTag::All => ModelKind::ALL.to_vec(),
            ModelTag::Generic => vec![ModelKind::Generic],
            ModelTag::QToda => vec![ModelKind::QToda],
            ModelTag::Toda2 => vec![ModelKind::Toda2],
        }
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Method {
    #[default]
    Auto,
    Product,
    Integral,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum Tier {
    #[default]
    Core,
    Full,
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields, default)]
pub struct Quadrature {
    pub tol: f64,
    pub cutoff: f64,
}

impl Default for Quadrature {
    fn default() -> Self {
        let q = LineQuad::default();
        Self { tol: q.tol, cutoff: q.cutoff }
    }
}

/// Per-suite overrides; when set, every check of the suite uses this tolerance.
#[derive(Clone, Copy, Debug, Default, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields, default)]
pub struct Tolerances {
    pub specfun: Option<f64>,
    pub classical: Option<f64>,
    pub opcalc: Option<f64>,
    pub kernels: Option<f64>,
    pub qweyl: Option<f64>,
    pub spectral: Option<f64>,
    /// full-tier quadrature checks
    pub quadrature: Option<f64>,
}

impl Tolerances {
    fn all(&self) -> [Option<f64>; 7] {
        [self.specfun, self.classical, self.opcalc, self.kernels, self.qweyl, self.spectral, self.quadrature]
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields, default)]
pub struct RunConfig {
    pub preset: Preset,
    pub omega1: Option<[f64; 2]>,
    pub omega2: Option<[f64; 2]>,
    pub kappa1: f64,
    pub kappa2: f64,
    pub model: ModelTag,
    pub t: [f64; 2],
    /// chain lengths
    pub n: Vec<usize>,
    /// overrides the per-identity truncation orders of the symbolic suite
    pub truncation: Option<i64>,
    pub method: Method,
    pub quadrature: Quadrature,
    pub tolerances: Tolerances,
    pub seed: u64,
    pub tier: Tier,
}

impl Default for RunConfig {
    fn default() -> Self {
        Self {
            preset: Preset::Default,
            omega1: None,
            omega2: None,
            kappa1: 0.37,
            kappa2: -0.21,
            model: ModelTag::All,
            t: [0.15, 0.05],
            n: vec![1, 2, 3],
            truncation: None,
            method: Method::Auto,
            quadrature: Quadrature::default(),
            tolerances: Tolerances::default(),
            seed: 2024,
            tier: Tier::Core,
        }
    }
}

fn c(v: [f64; 2]) -> Complex64 {
    Complex64::new(v[0], v[1])
}

impl RunConfig {
    pub fn from_toml(text: &str) -> Result<Self> {
        let cfg: Self = toml::from_str(text).map_err(|e| CliError::ConfigInvalid(e.message().to_string()))?;
        cfg.validate()?;
        Ok(cfg)
    }

    pub fn load(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path).map_err(|e| CliError::ConfigInvalid(format!("{}: {e}", path.display())))?;
        Self::from_toml(&text)
    }

    pub fn preset(preset: Preset) -> Self {
        Self { preset, ..Self::default() }
    }

    pub fn periods(&self) -> (Complex64, Complex64) {
        let (a, b) = self.preset.periods();
        (c(self.omega1.unwrap_or(a)), c(self.omega2.unwrap_or(b)))
    }

    pub fn pair(&self) -> Result<ModularPair> {
        let (a, b) = self.periods();
        ModularPair::new(a, b).map_err(|e| CliError::ConfigInvalid(e.to_string()))
    }

    pub fn eval_method(&self) -> EvalMethod {
        EvalMethod {
            kind: match self.method {
                Method::Auto => MethodKind::Auto,
                Method::Product => MethodKind::Product,
                Method::Integral => MethodKind::Integral,
            },
            ..EvalMethod::default()
        }
    }

    pub fn t(&self) -> Complex64 {
        c(self.t)
    }

    pub fn line_quad(&self) -> LineQuad {
        LineQuad {
            tol: self.quadrature.tol,
            cutoff: self.quadrature.cutoff,
            ..LineQuad::default()
        }
    }

    pub fn kernel_params(&self, kind: ModelKind) -> Result<KernelParams> {
        Ok(KernelParams::new(self.pair()?, ModelParams::new(kind, self.kappa1, self.kappa2)))
    }

    pub fn validate(&self) -> Result<()> {
        let bad = |m: String| Err(CliError::ConfigInvalid(m));
        let pair = self.pair()?;
        if self.method == Method::Product {
            if pair.is_resonant(1e-6, 50) {
                return bad(format!("product method refused: ω₁/ω₂ = {} is resonant", pair.ratio()));
            }
            DoubleSine::new(pair, self.eval_method()).map_err(|e| CliError::ConfigInvalid(e.to_string()))?;
        }
        let finite = [self.kappa1, self.kappa2, self.t[0], self.t[1]];
        if finite.iter().any(|v| !v.is_finite()) {
            return bad("kappa1, kappa2 and t must be finite".into());
        }
        if self.n.is_empty() || self.n.iter().any(|&n| !(1..=4).contains(&n)) {
            return bad(format!("n must list chain lengths in 1..=4, got {:?}", self.n));
        }
        if let Some(k) = self.truncation {
            if !(1..=12).contains(&k) {
                return bad(format!("truncation must be in 1..=12, got {k}"));
            }
        }
        let q = self.quadrature;
        if !(q.tol > 0.0 && q.tol < 1.0) || !(q.cutoff > 0.0 && q.cutoff.is_finite()) {
            return bad(format!("quadrature budget out of range: {q:?}"));
        }
        if self.tolerances.all().iter().flatten().any(|t| !(t.is_finite() && *t >= 0.0)) {
            return bad("tolerances must be finite and non-negative".into());
        }
        Ok(())
    }

    /// sha256 of the canonical JSON form.
    pub fn hash(&self) -> String {
        let json = serde_json::to_string(self).expect("config serialises");
        Sha256::digest(json.as_bytes()).iter().map(|b| format!("{b:02x}")).collect()
    }
}
