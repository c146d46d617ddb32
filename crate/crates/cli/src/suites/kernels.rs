use super::{config_err, cpx, CheckDef, Residual};
use crate::config::{RunConfig, Tier};
use crate::error::Result;
use kernels::integral::q_commutator_residual;
use kernels::*;
use num_complex::Complex64;
use opcalc::{ModelKind, Side, TestFunction};
use rand_chacha::ChaCha8Rng;
use serde_json::json;
use specfun::EvalMethod;

fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

/// Real part in [-1, 1], imaginary part within Re Ω / 8.
fn point(rng: &mut ChaCha8Rng, params: &KernelParams) -> Complex64 {
    let b = params.pair.omega().re / 8.0;
    cpx(rng, (-1.0, 1.0), (-b, b))
}

fn points(rng: &mut ChaCha8Rng, params: &KernelParams, n: usize) -> Vec<Complex64> {
    (0..n).map(|_| point(rng, params)).collect()
}

fn baxter(name: &str, side: Side, kernels: Vec<Kernel>, ns: Vec<usize>, tol: f64) -> CheckDef {
    let models: Vec<&str> = kernels.iter().map(|k| k.params().model.kind.name()).collect();
    CheckDef::new(name, json!({"models": models, "n": ns, "points": 25}), tol, move |rng| {
        let mut out = Vec::new();
        for k in &kernels {
            for &n in &ns {
                for _ in 0..25 {
                    let x = points(rng, k.params(), n);
                    let y = points(rng, k.params(), n);
                    let l = point(rng, k.params());
                    out.push(Residual::normalised(baxter_residual(&x, &y, l, k, side)?));
                }
            }
        }
        Ok(out)
    })
}

pub fn checks(cfg: &RunConfig) -> Result<Vec<CheckDef>> {
    let tol = |d: f64| cfg.tolerances.kernels.unwrap_or(d);
    let kinds = cfg.model.kinds();
    let mut kernels = Vec::new();
    for &k in &kinds {
        kernels.push(Kernel::with_method(cfg.kernel_params(k)?, cfg.eval_method()).map_err(config_err)?);
    }
    let mut out = vec![
        baxter("kernels.baxter", Side::Direct, kernels.clone(), cfg.n.clone(), tol(1e-8)),
        baxter("kernels.baxter_dual", Side::Dual, kernels.clone(), cfg.n.clone(), tol(1e-8)),
    ];

    let ks = kernels.clone();
    out.push(CheckDef::new("kernels.shift_identity", json!({"points": 50}), tol(1e-10), move |rng| {
        let mut r = Vec::new();
        for k in &ks {
            for _ in 0..50 {
                let [x, y, yp, l] = [0; 4].map(|_| point(rng, k.params()));
                r.push(Residual::normalised(k.shift_identity_residual(l, x, y, yp)?));
            }
        }
        Ok(r)
    }));

    let ks = kernels.clone();
    out.push(CheckDef::new("kernels.modular_swap", json!({"points": 17}), tol(1e-9), move |rng| {
        let mut r = Vec::new();
        for k in &ks {
            let swapped = Kernel::with_method(k.params().swapped(), EvalMethod::integral())?;
            for _ in 0..17 {
                let [x, u, v, t] = [0; 4].map(|_| point(rng, k.params()));
                r.push(Residual::of(swapped.l(t, x, u, v)?, k.l(t, x, u, v)?));
            }
        }
        Ok(r)
    }));

    // The intertwiner factors belong to the general model.
    let gp = cfg.kernel_params(ModelKind::Generic)?;
    let t = cfg.t();
    let factors = intertwiner_factors(t, &gp).map_err(config_err)?;
    let f = factors.clone();
    out.push(CheckDef::new(
        "kernels.fd_equations",
        json!({"t": [t.re, t.im], "equations": FdEquation::ALL.map(|e| e.label()), "points": 20}),
        tol(1e-10),
        move |rng| {
            let mut r = Vec::new();
            for eq in FdEquation::ALL {
                for _ in 0..20 {
                    let (x, l) = (point(rng, &gp), point(rng, &gp));
                    r.push(Residual::normalised(f.printed_residual(eq, l, x)?));
                }
            }
            Ok(r)
        },
    ));
    out.push(CheckDef::new(
        "kernels.fd_equations_frames",
        json!({"t": [t.re, t.im], "frames": ["direct", "dual"], "points": 20}),
        tol(1e-10),
        move |rng| {
            let mut r = Vec::new();
            for frame in [Frame::Direct, Frame::Dual] {
                for eq in FdEquation::ALL {
                    for _ in 0..20 {
                        r.push(Residual::normalised(factors.frame_residual(eq, frame, point(rng, &gp))?));
                    }
                }
            }
            Ok(r)
        },
    ));

    if cfg.tier == Tier::Full {
        let qtol = |d: f64| cfg.tolerances.quadrature.unwrap_or(d);
        let quad = cfg.line_quad();
        let k = Kernel::with_method(gp, cfg.eval_method()).map_err(config_err)?;
        let kq = k.clone();
        out.push(CheckDef::new(
            "kernels.llm_quadrature",
            json!({"t": [0.23, 0.05], "lambda": 0.15, "x": 0.31, "u": -0.27, "gaussian": [[0.3, -0.2], [-0.4, 0.1]]}),
            qtol(1e-5),
            move |_| {
                let f = TestFunction::new(vec![c(-2.0, 0.0); 2], vec![c(0.3, -0.2), c(-0.4, 0.1)], vec![c(0.0, 0.0); 2]);
                let chk = llm_operator_residual(&k, &f, c(0.23, 0.05), c(0.15, 0.0), c(0.31, 0.0), c(-0.27, 0.0), &quad)?;
                Ok(vec![Residual::normalised(chk.residual)])
            },
        ));
        out.push(CheckDef::new(
            "kernels.q_commutativity",
            json!({"n": 1, "x": 0.3, "y": -0.2, "pairs": [[[0.2, 0.0], [-0.1, 0.05]], [[0.2, 0.0], [0.35, 0.0]]]}),
            qtol(1e-4),
            move |_| {
                [(c(0.2, 0.0), c(-0.1, 0.05)), (c(0.2, 0.0), c(0.35, 0.0))]
                    .iter()
                    .map(|&(l, m)| Ok(Residual::normalised(q_commutator_residual(&kq, l, m, c(0.3, 0.0), c(-0.2, 0.0), &quad)?)))
                    .collect()
            },
        ));
    }
    Ok(out)
}
