//! Invariant batteries of each module, run as independent seeded checks.

mod classical;
mod kernels;
mod opcalc;
mod qweyl;
mod specfun;
mod spectral;

use crate::config::RunConfig;
use crate::error::{CliError, Result};
use crate::report::{Check, Report};
use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde_json::Value;
use sha2::{Digest, Sha256};
use std::time::Instant;

pub type CheckResult = std::result::Result<Vec<Residual>, Box<dyn std::error::Error + Send + Sync>>;

/// Residual of one sample. Routines that only return a normalised residual
/// report the same number in both fields.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Residual {
    pub abs: f64,
    pub rel: f64,
}

impl Residual {
    pub fn normalised(r: f64) -> Self {
        Self { abs: r, rel: r }
    }

    pub fn of(value: Complex64, reference: Complex64) -> Self {
        let abs = (value - reference).norm();
        Self {
            abs,
            rel: abs / reference.norm().max(1.0),
        }
    }
}

type Runner = Box<dyn Fn(&mut ChaCha8Rng) -> CheckResult + Send + Sync>;

pub struct CheckDef {
    pub name: String,
    pub params: Value,
    pub tolerance: f64,
    run: Runner,
}

impl CheckDef {
    pub fn new<F>(name: &str, params: Value, tolerance: f64, run: F) -> Self
    where
        F: Fn(&mut ChaCha8Rng) -> CheckResult + Send + Sync + 'static,
    {
        Self {
            name: name.to_string(),
            params,
            tolerance,
            run: Box::new(run),
        }
    }

    /// The check's own random stream: the run seed, on a stream chosen by name.
    fn rng(&self, seed: u64) -> ChaCha8Rng {
        let digest = Sha256::digest(self.name.as_bytes());
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        rng.set_stream(u64::from_le_bytes(digest[..8].try_into().unwrap()));
        rng
    }

    pub fn execute(&self, seed: u64) -> Check {
        let start = Instant::now();
        let mut params = self.params.clone();
        let (samples, abs, rel) = match (self.run)(&mut self.rng(seed)) {
            Ok(rs) => {
                let fold = |f: fn(&Residual) -> f64| rs.iter().map(f).fold(0.0, |a: f64, b| if b.is_nan() { f64::MAX } else { a.max(b) });
                (rs.len(), fold(|r| r.abs), fold(|r| r.rel))
            }
            Err(e) => {
                if let Value::Object(m) = &mut params {
                    m.insert("error".into(), Value::String(e.to_string()));
                }
                (0, f64::MAX, f64::MAX)
            }
        };
        Check {
            name: self.name.clone(),
            params,
            samples,
            max_abs_residual: abs,
            max_rel_residual: rel,
            tolerance: self.tolerance,
            pass: rel <= self.tolerance,
            seconds: start.elapsed().as_secs_f64(),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Suite {
    Specfun,
    Classical,
    Opcalc,
    Kernels,
    Qweyl,
    Spectral,
    All,
}

impl Suite {
    pub const MODULES: [Suite; 6] = [Suite::Specfun, Suite::Classical, Suite::Opcalc, Suite::Kernels, Suite::Qweyl, Suite::Spectral];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Specfun => "specfun",
            Suite::Classical => "classical",
            Suite::Opcalc => "opcalc",
            Suite::Kernels => "kernels",
            Suite::Qweyl => "qweyl",
            Suite::Spectral => "spectral",
            Suite::All => "all",
        }
    }
}

pub fn check_defs(suite: Suite, cfg: &RunConfig) -> Result<Vec<CheckDef>> {
    Ok(match suite {
        Suite::Specfun => specfun::checks(cfg)?,
        Suite::Classical => classical::checks(cfg)?,
        Suite::Opcalc => opcalc::checks(cfg)?,
        Suite::Kernels => kernels::checks(cfg)?,
        Suite::Qweyl => qweyl::checks(cfg)?,
        Suite::Spectral => spectral::checks(cfg)?,
        Suite::All => {
            let mut all = Vec::new();
            for s in Suite::MODULES {
                all.extend(check_defs(s, cfg)?);
            }
            all
        }
    })
}

/// Runs the checks of `suite` in parallel; the report keeps their declared order.
pub fn run_suite(suite: Suite, cfg: &RunConfig) -> Result<Report> {
    cfg.validate()?;
    let defs = check_defs(suite, cfg)?;
    let checks = defs.par_iter().map(|d| d.execute(cfg.seed)).collect();
    Ok(Report {
        suite: suite.name().to_string(),
        checks,
        config_hash: cfg.hash(),
        seed: cfg.seed,
    })
}

/// 0 when every check passed, otherwise CheckFailed naming the first failure.
pub fn verdict(report: &Report) -> Result<()> {
    match report.first_failure() {
        None => Ok(()),
        Some(c) => Err(CliError::CheckFailed(format!(
            "{} (residual {:e} > tolerance {:e})",
            c.name, c.max_rel_residual, c.tolerance
        ))),
    }
}

pub(crate) fn config_err<E: std::fmt::Display>(e: E) -> CliError {
    CliError::ConfigInvalid(e.to_string())
}

pub(crate) fn cpx(rng: &mut ChaCha8Rng, re: (f64, f64), im: (f64, f64)) -> Complex64 {
    Complex64::new(rng.gen_range(re.0..re.1), rng.gen_range(im.0..im.1))
}

pub(crate) fn cpxs(rng: &mut ChaCha8Rng, n: usize, re: (f64, f64), im: (f64, f64)) -> Vec<Complex64> {
    (0..n).map(|_| cpx(rng, re, im)).collect()
}
