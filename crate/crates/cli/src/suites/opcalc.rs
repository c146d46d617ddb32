use super::{config_err, cpx, cpxs, CheckDef, Residual};
use crate::config::RunConfig;
use crate::error::Result;
use num_complex::Complex64;
use opcalc::{lax, r_matrix, rll_applied_residual, rll_word_residual, ModelParams, TestFunction};
use rand::Rng;
use serde_json::json;
use std::f64::consts::PI;

pub fn checks(cfg: &RunConfig) -> Result<Vec<CheckDef>> {
    let pair = cfg.pair()?;
    let tol = |d: f64| cfg.tolerances.opcalc.unwrap_or(d);
    let kinds = cfg.model.kinds();
    let models: Vec<ModelParams> = kinds.iter().map(|&k| ModelParams::new(k, cfg.kappa1, cfg.kappa2)).collect();
    let names: Vec<&str> = kinds.iter().map(|k| k.name()).collect();
    r_matrix(Complex64::new(0.3, 0.1), &pair).map_err(config_err)?;

    let m = models.clone();
    let word = CheckDef::new("opcalc.rll_words", json!({"models": names, "pairs": 20}), tol(1e-12), move |rng| {
        let mut out = Vec::new();
        for model in &m {
            for _ in 0..20 {
                let (l1, l2) = (cpx(rng, (-1.0, 1.0), (-0.5, 0.5)), cpx(rng, (-1.0, 1.0), (-0.5, 0.5)));
                let r = r_matrix(l1 - l2, &pair)?;
                out.push(Residual::normalised(rll_word_residual(&lax(l1, &pair, model, 0, 1), &lax(l2, &pair, model, 0, 1), &r)));
            }
        }
        Ok(out)
    });
    let applied = CheckDef::new(
        "opcalc.rll_applied",
        json!({"models": names, "pairs": 20, "functions": 10}),
        tol(1e-9),
        move |rng| {
            let mut out = Vec::new();
            for model in &models {
                for _ in 0..20 {
                    let (l1, l2) = (cpx(rng, (-1.0, 1.0), (-0.5, 0.5)), cpx(rng, (-1.0, 1.0), (-0.5, 0.5)));
                    let r = r_matrix(l1 - l2, &pair)?;
                    let (a, b) = (lax(l1, &pair, model, 0, 1), lax(l2, &pair, model, 0, 1));
                    for _ in 0..10 {
                        let f = TestFunction::gaussian(vec![Complex64::from_polar(rng.gen_range(0.0..1.0), rng.gen_range(-PI..PI))]);
                        let x = cpxs(rng, 1, (-2.0, 2.0), (-0.3, 0.3));
                        out.push(Residual::normalised(rll_applied_residual(&a, &b, &r, &f, &x)));
                    }
                }
            }
            Ok(out)
        },
    );
    Ok(vec![word, applied])
}
