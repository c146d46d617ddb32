use super::{config_err, cpxs, CheckDef, Residual};
use crate::config::RunConfig;
use crate::error::Result;
use num_complex::Complex64;
use rand::Rng;
use serde_json::json;
use specfun::checks::{quasi_periodicity, reflection, representations, sfun_safe_args, sfun_shift, theta_modular};
use specfun::{fourier_d_check, DoubleSine, EvalMethod, FourierBudget, ModularPair};
use std::sync::Arc;

pub fn checks(cfg: &RunConfig) -> Result<Vec<CheckDef>> {
    let pair = cfg.pair()?;
    let tol = |d: f64| cfg.tolerances.specfun.unwrap_or(d);
    let ds = Arc::new(DoubleSine::new(pair, cfg.eval_method()).map_err(config_err)?);
    // Orientations in which the theta products and S converge.
    let theta_pair = ModularPair::new(Complex64::new(1.0, 0.7), Complex64::new(1.0, 0.0)).unwrap();
    let s_pair = theta_pair.swap();

    let mut out = Vec::new();
    let d = ds.clone();
    out.push(CheckDef::new(
        "specfun.quasi_periodicity",
        json!({"points": 100, "re": [-2.5, 2.5], "im": [-2.5, 1.5]}),
        tol(1e-10),
        move |rng| {
            cpxs(rng, 100, (-2.5, 2.5), (-2.5, 1.5))
                .into_iter()
                .map(|z| Ok(Residual::normalised(quasi_periodicity(z, &d)?)))
                .collect()
        },
    ));
    let d = ds.clone();
    out.push(CheckDef::new(
        "specfun.reflection",
        json!({"points": 100, "re": [-2.5, 2.5], "im": [-3.0, 1.0]}),
        tol(1e-10),
        move |rng| {
            cpxs(rng, 100, (-2.5, 2.5), (-3.0, 1.0))
                .into_iter()
                .map(|z| Ok(Residual::normalised(reflection(z, &d)?)))
                .collect()
        },
    ));
    out.push(CheckDef::new(
        "specfun.theta_modular",
        json!({"points": 100, "omega1": [1.0, 0.7], "omega2": [1.0, 0.0], "factors": 400}),
        tol(1e-10),
        move |rng| {
            cpxs(rng, 100, (-1.5, 1.5), (-1.5, 1.5))
                .into_iter()
                .map(|l| Ok(Residual::normalised(theta_modular(l, &theta_pair, 400)?)))
                .collect()
        },
    ));
    out.push(CheckDef::new(
        "specfun.s_functional_equation",
        json!({"points": 100, "omega1": [1.0, 0.0], "omega2": [1.0, 0.7], "modulus": [0.2, 3.0]}),
        tol(1e-10),
        move |rng| {
            let (lo, hi) = sfun_safe_args(&s_pair);
            let m = EvalMethod::default();
            (0..100)
                .map(|_| {
                    let x = Complex64::from_polar(rng.gen_range(0.2..3.0), rng.gen_range(lo..hi));
                    Ok(Residual::normalised(sfun_shift(x, &s_pair, &m)?))
                })
                .collect()
        },
    ));
    let product = DoubleSine::new(pair, EvalMethod::product());
    let integral = DoubleSine::new(pair, EvalMethod::integral()).map_err(config_err)?;
    out.push(CheckDef::new(
        "specfun.product_vs_integral",
        json!({"points": 20, "re": [-3.0, 3.0], "im": [-3.0, 1.0]}),
        tol(1e-8),
        move |rng| {
            let pr = product.clone()?;
            cpxs(rng, 20, (-3.0, 3.0), (-3.0, 1.0))
                .into_iter()
                .map(|z| Ok(Residual::normalised(representations(z, &pr, &integral)?)))
                .collect()
        },
    ));
    let alpha = Complex64::new(-0.35, -0.55);
    let samples: Vec<Complex64> = [0.0, 0.3, -0.3, 0.7, -1.1].iter().map(|&p| Complex64::new(p, 0.0)).collect();
    out.push(CheckDef::new(
        "specfun.fourier_d",
        json!({"alpha": [alpha.re, alpha.im], "p": [0.0, 0.3, -0.3, 0.7, -1.1]}),
        tol(1e-6),
        move |_| {
            let chk = fourier_d_check(alpha, &pair, &samples, &FourierBudget::default())?;
            let mut r = vec![Residual::normalised(chk.max_residual); chk.samples];
            // the p = 0 integral by two quadratures
            if let Some(x) = chk.p0_cross_check {
                r.push(Residual::normalised(x));
            }
            Ok(r)
        },
    ));
    Ok(out)
}
