//! Exact identities in the truncated q-Weyl algebra over the rationals, q = 1/3.

use super::{CheckDef, Residual};
use crate::config::RunConfig;
use crate::error::Result;
use qweyl::*;
use serde_json::json;

fn exact<'a>(parts: impl IntoIterator<Item = &'a WeylSeries<Rational>>) -> Vec<Residual> {
    parts.into_iter().map(|s| Residual::normalised(s.max_magnitude())).collect()
}

pub fn checks(cfg: &RunConfig) -> Result<Vec<CheckDef>> {
    let tol = cfg.tolerances.qweyl.unwrap_or(0.0);
    let k = |d: i64| cfg.truncation.unwrap_or(d);
    let (ks, ka, kc, kr) = (k(8), k(5), k(5), k(4));
    Ok(vec![
        CheckDef::new("qweyl.schutzenberger", json!({"q": "1/3", "K": ks}), tol, move |_| {
            Ok(exact([&schutzenberger_residual(default_q(), 1, ks)?]))
        }),
        CheckDef::new("qweyl.adjoint_action", json!({"q": "1/3", "K": ka, "c": ["2/5", "-7/3"]}), tol, move |_| {
            let mut out = Vec::new();
            for c in [rat(2, 5), rat(-7, 3)] {
                let r = adjoint_residual(default_q(), &c, ka)?;
                out.extend(exact([&r.identity, &r.intermediate, &r.shift]));
            }
            Ok(out)
        }),
        CheckDef::new(
            "qweyl.cl_equals_cr",
            json!({"q": "1/3", "K": kc, "d1": "5/6", "d2": "-2/9", "t": "2/7", "t'": "5/11"}),
            tol,
            move |_| {
                let p = ClcrParams {
                    d1: rat(5, 6),
                    d2: rat(-2, 9),
                    tau: rat(2, 7),
                    tau_p: rat(5, 11),
                };
                Ok(exact(clcr_residual(default_q(), &p, kc)?.parts()))
            },
        ),
        CheckDef::new("qweyl.rmm", json!({"q": "1/3", "K": kr, "t": "2/7", "t'": "5/11", "lambda": "central"}), tol, move |_| {
            let r = rmm_residual(default_q(), &rat(2, 7), &rat(5, 11), &Lambda::Central, kr)?;
            Ok(exact(r.iter().flatten()))
        }),
    ])
}
