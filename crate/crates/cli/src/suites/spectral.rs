use super::{config_err, cpxs, CheckDef, Residual};
use crate::config::{RunConfig, Tier};
use crate::error::Result;
use kernels::{detect_blow_up, Kernel, KernelParams, PoleFamily};
use num_complex::Complex64;
use opcalc::ModelKind;
use serde_json::json;
use spectral::reduced::reduced_baxter;
use spectral::*;

const P0: f64 = 0.4;
const MMAX: usize = 3;
const I: Complex64 = Complex64::new(0.0, 1.0);

fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

pub fn checks(cfg: &RunConfig) -> Result<Vec<CheckDef>> {
    let tol = |d: f64| cfg.tolerances.spectral.unwrap_or(d);
    let reduced: Vec<KernelParams> = cfg
        .model
        .kinds()
        .into_iter()
        .filter(|&k| k != ModelKind::Generic)
        .map(|k| cfg.kernel_params(k))
        .collect::<Result<_>>()?;
    let names: Vec<&str> = reduced.iter().map(|p| p.model.kind.name()).collect();
    let ns = cfg.n.clone();
    let nmax = *ns.iter().max().unwrap();
    let mut out = Vec::new();

    let (rp, nl) = (reduced.clone(), ns.clone());
    out.push(CheckDef::new(
        "spectral.tau_constraint",
        json!({"models": names, "n": nl, "p0": P0, "solvers": ["complete", "transfer"]}),
        tol(1e-12),
        move |rng| {
            let mut r = Vec::new();
            for p in &rp {
                for &n in &nl {
                    let free = cpxs(rng, n - 1, (-1.5, 1.5), (-0.6, 0.6));
                    r.push(Residual::normalised(TauRoots::complete(&free, P0, p)?.constraint_residual(p)));
                    let middle = cpxs(rng, n - 1, (-1.5, 1.5), (-0.6, 0.6));
                    r.push(Residual::normalised(TauRoots::from_transfer(&middle, P0, p)?.constraint_residual(p)));
                }
            }
            Ok(r)
        },
    ));

    let (rp, nl) = (reduced.clone(), ns.clone());
    out.push(CheckDef::new(
        "spectral.canonical_multipliers",
        json!({"models": names, "n": nl, "p0": P0, "lambdas": 20}),
        tol(1e-10),
        move |rng| {
            let mut r = Vec::new();
            for p in &rp {
                for &n in &nl {
                    for l in cpxs(rng, 20, (-1.5, 1.5), (-0.6, 0.6)) {
                        r.push(Residual::normalised(canonical_transform(l, n, P0, p)?.residual()));
                    }
                }
            }
            Ok(r)
        },
    ));

    let all: Vec<KernelParams> = ModelKind::ALL.iter().map(|&k| cfg.kernel_params(k)).collect::<Result<_>>()?;
    let ap = all.clone();
    out.push(CheckDef::new(
        "spectral.pinch_lattice",
        json!({"n": nmax, "mmax": MMAX, "generic": "kappa2-kappa1+iOmega/2+i(m omega1+n omega2)", "specialisations": "empty"}),
        tol(1e-12),
        move |_| {
            let mut r = Vec::new();
            for p in &ap {
                let lat = pole_pinch_lattice(p, nmax, MMAX);
                if p.model.kind == ModelKind::Generic {
                    if lat.points.len() != (MMAX + 1) * (MMAX + 1) {
                        return Err(format!("{} pinch points, expected {}", lat.points.len(), (MMAX + 1) * (MMAX + 1)).into());
                    }
                    let base = p.kappa2() - p.kappa1() + 0.5 * I * p.pair.omega();
                    for pt in &lat.points {
                        let expect = base + p.pair.lattice_point(pt.m, pt.n);
                        let order = if pt.order == nmax { 0.0 } else { 1.0 };
                        r.push(Residual::of(pt.lambda(), expect));
                        r.push(Residual::normalised(order));
                    }
                } else {
                    r.push(Residual::normalised(lat.points.len() as f64));
                }
            }
            Ok(r)
        },
    ));

    let ap = all;
    out.push(CheckDef::new(
        "spectral.pole_coalescence",
        json!({"family": "XV", "expected_exponent": {"pinch": 2, "otherwise": 1}}),
        tol(0.05),
        move |_| {
            let u = [c(0.31, 0.0), c(0.0, 0.0)];
            let w = [c(-0.17, 0.0), c(0.42, 0.0)];
            let exponent = |p: &KernelParams, l: Complex64| -> std::result::Result<f64, kernels::KernelError> {
                let k = Kernel::new(*p)?;
                Ok(detect_blow_up(PoleFamily::XV, 0, -1, -1, l, &u, &w, &k)?.exponent)
            };
            let mut r = Vec::new();
            for p in &ap {
                let lat = pole_pinch_lattice(p, 2, 1);
                if p.model.kind == ModelKind::Generic {
                    for pt in &lat.points {
                        r.push(Residual::normalised((exponent(p, pt.lambda())? - 2.0).abs()));
                    }
                    r.push(Residual::normalised((exponent(p, lat.base + 0.37)? - 1.0).abs()));
                } else {
                    r.push(Residual::normalised((exponent(p, lat.base)? - 1.0).abs()));
                }
            }
            Ok(r)
        },
    ));

    if cfg.tier == Tier::Full {
        let k = Kernel::with_method(cfg.kernel_params(ModelKind::Generic)?, cfg.eval_method()).map_err(config_err)?;
        let quad = cfg.line_quad();
        out.push(CheckDef::new(
            "spectral.reduced_baxter",
            json!({"n": 2, "u": [0.31], "z": [-0.17], "p0": P0, "lambda": 0.23}),
            cfg.tolerances.quadrature.unwrap_or(1e-4),
            move |_| {
                let rb = reduced_baxter(&k, &[c(0.31, 0.0)], &[c(-0.17, 0.0)], c(P0, 0.0), c(0.23, 0.0), &quad)?;
                Ok(vec![Residual::normalised(rb.residual())])
            },
        ));
    }
    Ok(out)
}
