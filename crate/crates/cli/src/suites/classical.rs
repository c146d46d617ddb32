use super::{cpx, CheckDef, Residual};
use crate::config::RunConfig;
use crate::error::Result;
use classical::genfun::generating_residual;
use classical::sklyanin::{backlund_entries, lax_entries, sklyanin_residual, FactorMatrix};
use classical::symplectic::symplectic_defect;
use classical::*;
use rand::Rng;
use rand_chacha::ChaCha8Rng;
use serde_json::json;

const PARAMS: ClassicalParams = ClassicalParams {
    d1: 0.3,
    d2: 0.45,
    t: 0.7,
    s: 1.0,
};

fn state(rng: &mut ChaCha8Rng, n: usize) -> classical::Result<ClassicalState> {
    let x = (0..n).map(|_| rng.gen_range(0.5..2.0)).collect();
    let y = (0..n).map(|_| rng.gen_range(0.5..2.0)).collect();
    ClassicalState::new(x, y, PARAMS)
}

pub fn checks(cfg: &RunConfig) -> Result<Vec<CheckDef>> {
    let tol = |d: f64| cfg.tolerances.classical.unwrap_or(d);
    let base = json!({"d1": PARAMS.d1, "d2": PARAMS.d2, "t": PARAMS.t, "x": [0.5, 2.0]});
    let with = |extra: serde_json::Value| {
        let mut v = base.clone();
        v.as_object_mut().unwrap().extend(extra.as_object().unwrap().clone());
        v
    };
    Ok(vec![
        CheckDef::new("classical.gauge", with(json!({"n": [1, 2, 3, 4], "states": 50})), tol(1e-12), |rng| {
            let mut out = Vec::new();
            for n in 1..=4 {
                for _ in 0..50 {
                    let st = state(rng, n)?;
                    let img = backlund_map(&st)?;
                    let l = cpx(rng, (-2.0, 2.0), (-2.0, 2.0));
                    out.push(Residual::normalised(gauge_residual(&st, &img, l)));
                }
            }
            Ok(out)
        }),
        CheckDef::new("classical.triangulation", with(json!({"n": [1, 2, 3, 4], "states": 10})), tol(1e-12), |rng| {
            let mut out = Vec::new();
            for n in 1..=4 {
                for _ in 0..10 {
                    let st = state(rng, n)?;
                    let tri = triangulate_classical(&st, &backlund_map(&st)?)?;
                    for r in [tri.lower_residual, tri.closed_form_residual, tri.kernel_residual] {
                        out.push(Residual::normalised(r));
                    }
                }
            }
            Ok(out)
        }),
        CheckDef::new("classical.sklyanin", json!({"pairs": 10, "factor": [0.7, -1.3, 0.4, 1.1]}), tol(1e-12), |rng| {
            let mut out = Vec::new();
            let p = FactorMatrix::new(0.7, -1.3, 0.4, 1.1);
            let r = FactorMatrix::reduced(0.7, -1.3, 0.4);
            for _ in 0..10 {
                let l1 = cpx(rng, (-1.0, 1.0), (-1.0, 1.0));
                let l2 = cpx(rng, (-1.0, 1.0), (-1.0, 1.0));
                out.push(sklyanin_residual(|l| p.elementary(l), l1, l2));
                out.push(sklyanin_residual(|l| r.elementary(l), l1, l2));
                out.push(sklyanin_residual(|l| lax_entries(l, PARAMS.d1, PARAMS.d2), l1, l2));
                out.push(sklyanin_residual(|l| backlund_entries(l, PARAMS.t), l1, l2));
            }
            Ok(out.into_iter().map(Residual::normalised).collect())
        }),
        CheckDef::new("classical.symplectic", with(json!({"n": 3, "states": 5, "step": 1e-6})), tol(1e-6), |rng| {
            (0..5)
                .map(|_| {
                    let st = state(rng, 3)?;
                    let img = backlund_map(&st)?;
                    Ok(Residual::normalised(symplectic_defect(&st.x, &img.big_x, &PARAMS, 1e-6)?))
                })
                .collect()
        }),
        CheckDef::new(
            "classical.generating_function",
            with(json!({"n": 3, "states": 5, "anchors": [1.0, 2.0]})),
            tol(1e-8),
            |rng| {
                let mut out = Vec::new();
                for _ in 0..5 {
                    let st = state(rng, 3)?;
                    let img = backlund_map(&st)?;
                    for anchor in [1.0, 2.0] {
                        let r = generating_residual(&st.x, &st.y, &img.big_x, &img.big_y, &PARAMS, anchor);
                        out.push(Residual::normalised(r));
                    }
                }
                Ok(out)
            },
        ),
        CheckDef::new("classical.conservation", with(json!({"n": [1, 2, 3, 4], "states": 10})), tol(1e-10), |rng| {
            let mut out = Vec::new();
            for n in 1..=4 {
                for _ in 0..10 {
                    let st = state(rng, n)?;
                    let img = backlund_map(&st)?;
                    let before = trace_coefficients(&st.x, &img.big_x, PARAMS.d1, PARAMS.d2);
                    let after = trace_coefficients(&st.y, &img.big_y, PARAMS.d1, PARAMS.d2);
                    for (a, b) in before.iter().zip(&after) {
                        let abs = (a - b).abs();
                        out.push(Residual {
                            abs,
                            rel: abs / a.abs().max(1.0),
                        });
                    }
                }
            }
            Ok(out)
        }),
    ])
}
