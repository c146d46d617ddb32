//! Point evaluation of the special functions, kernels and t_τ.

use crate::config::RunConfig;
use crate::error::{CliError, Result};
use kernels::grid::{grid_csv, rectangle};
use kernels::{kernel_l, kernel_q, KernelError};
use num_complex::Complex64;
use opcalc::ModelKind;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use specfun::{dsine, theta_pair, varpi, DoubleSine, SpecError};
use spectral::{t_tau, TauRoots};

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Target {
    Dsine,
    Dilog,
    Theta,
    KernelL,
    KernelQ,
    TTau,
}

#[derive(Clone, Debug, PartialEq)]
pub struct EvalArgs {
    pub model: Option<ModelKind>,
    /// z for dsine, w for dilog, x for kernel-l, λ otherwise
    pub at: Option<Complex64>,
    pub u: Option<Complex64>,
    pub v: Option<Complex64>,
    pub t: Option<Complex64>,
    pub x: Vec<Complex64>,
    pub y: Vec<Complex64>,
    pub n: Option<usize>,
    pub seed: Option<u64>,
    /// the N-1 free τ-roots
    pub roots: Vec<Complex64>,
    /// evaluate t_τ at its k-th root (1-based)
    pub at_root: Option<usize>,
    pub p0: f64,
    pub factors: usize,
}

impl Default for EvalArgs {
    fn default() -> Self {
        Self {
            model: None,
            at: None,
            u: None,
            v: None,
            t: None,
            x: Vec::new(),
            y: Vec::new(),
            n: None,
            seed: None,
            roots: Vec::new(),
            at_root: None,
            p0: 0.4,
            factors: 400,
        }
    }
}

/// Rectangle [re0, re1] × [im0, im1] sampled with `n` points per side.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Grid {
    pub re: (f64, f64),
    pub im: (f64, f64),
    pub n: usize,
}

impl std::str::FromStr for Grid {
    type Err = CliError;

    fn from_str(s: &str) -> Result<Self> {
        let v: Vec<f64> = s
            .split(',')
            .map(|p| p.trim().parse::<f64>())
            .collect::<std::result::Result<_, _>>()
            .map_err(|e| CliError::Parse(format!("grid {s:?}: {e}")))?;
        match v[..] {
            [a, b, c, d, n] if n >= 2.0 && n.fract() == 0.0 => Ok(Grid {
                re: (a, b),
                im: (c, d),
                n: n as usize,
            }),
            _ => Err(CliError::Parse(format!("grid must be re0,re1,im0,im1,n with n >= 2, got {s:?}"))),
        }
    }
}

/// `re,im` or a bare real number.
pub fn parse_complex(s: &str) -> Result<Complex64> {
    let err = |e: std::num::ParseFloatError| CliError::Parse(format!("complex {s:?}: {e}"));
    match s.split_once(',') {
        Some((a, b)) => Ok(Complex64::new(a.trim().parse().map_err(err)?, b.trim().parse().map_err(err)?)),
        None => Ok(Complex64::new(s.trim().parse().map_err(err)?, 0.0)),
    }
}

/// 15 significant digits for each part.
pub fn format_value(z: Complex64) -> String {
    format!("{:.14e} {:.14e}", z.re, z.im)
}

fn need(v: Option<Complex64>, what: &str) -> Result<Complex64> {
    v.ok_or_else(|| CliError::Parse(format!("missing --{what}")))
}

/// Points of `n` sites for kernel-q when none are given, drawn like the kernel battery.
fn seeded_points(cfg: &RunConfig, args: &EvalArgs) -> Result<(Vec<Complex64>, Vec<Complex64>, Complex64)> {
    let pair = cfg.pair()?;
    let b = pair.omega().re / 8.0;
    let mut rng = ChaCha8Rng::seed_from_u64(args.seed.unwrap_or(cfg.seed));
    let mut pt = || Complex64::new(rng.gen_range(-1.0..1.0), rng.gen_range(-b..b));
    let n = args.n.unwrap_or(1);
    let x: Vec<Complex64> = (0..n).map(|_| pt()).collect();
    let y: Vec<Complex64> = (0..n).map(|_| pt()).collect();
    Ok((x, y, pt()))
}

/// Labelled values of `target`; theta yields θ and its dual.
pub fn eval_point(target: Target, args: &EvalArgs, cfg: &RunConfig) -> Result<Vec<(String, Complex64)>> {
    let pair = cfg.pair()?;
    let one = |label: &str, v: Complex64| Ok(vec![(label.to_string(), v)]);
    match target {
        Target::Dsine => one("dsine", dsine(need(args.at, "at")?, &pair, &cfg.eval_method())?),
        Target::Dilog => {
            let ds = DoubleSine::new(pair, cfg.eval_method())?;
            one("dilog", varpi(need(args.at, "at")?, &ds)?)
        }
        Target::Theta => {
            let (a, b) = theta_pair(need(args.at, "at")?, &pair, args.factors).map_err(|e| match e {
                SpecError::DivergentBase(m) => CliError::Eval(format!(
                    "theta products need |q| < 1 and |q̃| > 1 (base modulus {m:.6}); swap the periods"
                )),
                e => e.into(),
            })?;
            Ok(vec![("theta".into(), a), ("theta_dual".into(), b)])
        }
        Target::KernelL => {
            let params = cfg.kernel_params(args.model.unwrap_or(ModelKind::Generic))?;
            let t = args.t.unwrap_or(cfg.t());
            one("kernel_l", kernel_l(need(args.at, "at")?, need(args.u, "u")?, need(args.v, "v")?, t, &params)?)
        }
        Target::KernelQ => {
            let params = cfg.kernel_params(args.model.unwrap_or(ModelKind::Generic))?;
            let (x, y, l) = if args.x.is_empty() {
                let (x, y, l) = seeded_points(cfg, args)?;
                (x, y, args.at.unwrap_or(l))
            } else {
                if args.x.len() != args.y.len() {
                    return Err(CliError::Parse(format!("{} x values but {} y values", args.x.len(), args.y.len())));
                }
                (args.x.clone(), args.y.clone(), need(args.at, "at")?)
            };
            one("kernel_q", kernel_q(&x, &y, l, &params)?)
        }
        Target::TTau => {
            let params = cfg.kernel_params(args.model.unwrap_or(ModelKind::QToda))?;
            let free = if !args.roots.is_empty() || args.n.unwrap_or(1) == 1 {
                args.roots.clone()
            } else {
                let mut rng = ChaCha8Rng::seed_from_u64(args.seed.unwrap_or(cfg.seed));
                (0..args.n.unwrap() - 1)
                    .map(|_| Complex64::new(rng.gen_range(-1.5..1.5), rng.gen_range(-0.6..0.6)))
                    .collect()
            };
            let roots = TauRoots::complete(&free, args.p0, &params)?;
            let l = match args.at_root {
                Some(k) if (1..=roots.n()).contains(&k) => roots.tau[k - 1],
                Some(k) => return Err(CliError::Parse(format!("root index {k} outside 1..={}", roots.n()))),
                None => need(args.at, "at")?,
            };
            one("t_tau", t_tau(l, &roots, &params))
        }
    }
}

/// CSV over a grid in the primary argument, in the format of the kernel grid dumps.
pub fn eval_grid(target: Target, args: &EvalArgs, cfg: &RunConfig, grid: Grid) -> Result<String> {
    if target == Target::TTau && args.at_root.is_some() {
        return Err(CliError::Parse("--grid and --at-root are exclusive".into()));
    }
    cfg.validate()?;
    let points: Vec<Vec<Complex64>> = rectangle(grid.re, grid.im, grid.n).into_iter().map(|z| vec![z]).collect();
    let csv = grid_csv(&points, |pt| {
        let a = EvalArgs { at: Some(pt[0]), ..args.clone() };
        eval_point(target, &a, cfg)
            .map(|v| v[0].1)
            .map_err(|e| KernelError::Invalid(e.to_string()))
    })?;
    Ok(csv)
}
