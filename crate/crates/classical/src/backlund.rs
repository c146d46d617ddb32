//! The Bäcklund map (x̂, ŷ) ↦ (X̂, Ŷ, Û, û) and its inversion for ŷ.

use crate::error::{ClassicalError, Result};
use crate::lax::{backlund_m, lax_l};
use crate::state::{next, prev, ClassicalParams, ClassicalState};
use crate::Mat2;
use nalgebra::{DMatrix, DVector};
use num_complex::Complex64;

/// Denominators closer to zero than this are treated as singular.
const SINGULAR: f64 = 1e-12;

/// Largest |log(ŷ/x̂)| the Newton iteration may reach.
const RUNAWAY: f64 = 25.0;

#[derive(Clone, Debug, PartialEq)]
pub struct BacklundImage {
    pub big_x: Vec<f64>,
    pub big_y: Vec<f64>,
    pub big_u: Vec<f64>,
    pub u: Vec<f64>,
}

fn check(den: f64, site: usize) -> Result<f64> {
    if den.abs() < SINGULAR {
        Err(ClassicalError::SingularDenominator { site })
    } else {
        Ok(den)
    }
}

pub fn backlund_map(st: &ClassicalState) -> Result<BacklundImage> {
    let ClassicalParams { d1, d2, t, s } = st.params;
    let (x, y) = (&st.x, &st.y);
    let len = st.len();
    let mut out = BacklundImage {
        big_x: vec![0.0; len],
        big_y: vec![0.0; len],
        big_u: vec![0.0; len],
        u: vec![0.0; len],
    };
    for n in 0..len {
        let (xm, xp, yp) = (x[prev(n, len)], x[next(n, len)], y[next(n, len)]);
        let head = t + x[n] / (s * y[n]);
        let den_x = check(1.0 - t * d1 * s * yp / x[n], n)?;
        let den_y = check(1.0 - t * d1 * s * y[n] / xm, n)?;
        let den_c = check(1.0 + d1 * x[n] / xm, n)?;
        out.big_x[n] = (1.0 + d1 * xp / x[n]) / den_c * head * (1.0 + d2 * s * yp / x[n]) / den_x;
        out.big_y[n] = head * (1.0 + d2 * s * y[n] / xm) / den_y;
        out.big_u[n] = den_c * (1.0 + d2 * s * y[n] / xm) / den_y;
        out.u[next(n, len)] = x[n];
    }
    Ok(out)
}

/// max_n ‖L(x̂_n,X̂_n)M_n D - M_{n+1} D L(ŷ_n,Ŷ_n)‖ with D = diag(1, 1/s).
pub fn gauge_residual(st: &ClassicalState, img: &BacklundImage, lambda: Complex64) -> f64 {
    let ClassicalParams { d1, d2, t, s } = st.params;
    let len = st.len();
    let one = Complex64::new(1.0, 0.0);
    let dg = Mat2::new(one, 0.0 * one, 0.0 * one, one / s);
    let mut worst: f64 = 0.0;
    for n in 0..len {
        let m = next(n, len);
        let lhs = lax_l(lambda, st.x[n], img.big_x[n], d1, d2) * backlund_m(lambda, t, img.u[n], img.big_u[n]) * dg;
        let rhs = backlund_m(lambda, t, img.u[m], img.big_u[m]) * dg * lax_l(lambda, st.y[n], img.big_y[n], d1, d2);
        let scale = lhs.iter().map(|e| e.norm()).fold(1.0, f64::max);
        worst = worst.max((lhs - rhs).iter().map(|e| e.norm()).fold(0.0, f64::max) / scale);
    }
    worst
}

/// Newton settings for the inversion of the X̂ equations.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Newton {
    pub tol: f64,
    pub max_iter: usize,
}

impl Default for Newton {
    fn default() -> Self {
        Self { tol: 1e-13, max_iter: 100 }
    }
}

/// log X̂_n as a function of η = log ŷ, and its Jacobian.
fn log_big_x(x: &[f64], eta: &[f64], p: &ClassicalParams) -> Option<(DVector<f64>, DMatrix<f64>)> {
    let ClassicalParams { d1, d2, t, s } = *p;
    let len = x.len();
    let mut f = DVector::zeros(len);
    let mut jac = DMatrix::zeros(len, len);
    for n in 0..len {
        let (xm, xp) = (x[prev(n, len)], x[next(n, len)]);
        let k = next(n, len);
        let r = x[n] / (s * eta[n].exp());
        let w = eta[k].exp() / x[n];
        let parts = [
            1.0 + d1 * xp / x[n],
            1.0 / (1.0 + d1 * x[n] / xm),
            t + r,
            1.0 + d2 * s * w,
            1.0 / (1.0 - t * d1 * s * w),
        ];
        if parts.iter().any(|v| !(*v > 0.0) || !v.is_finite()) {
            return None;
        }
        f[n] = parts.iter().map(|v| v.ln()).sum();
        jac[(n, n)] += -r / (t + r);
        jac[(n, k)] += d2 * s * w / (1.0 + d2 * s * w) + t * d1 * s * w / (1.0 - t * d1 * s * w);
    }
    Some((f, jac))
}

/// Solve the X̂ equations for ŷ given x̂ and X̂, starting from `guess`
/// (x̂ itself when absent).
pub fn backlund_solve(x: &[f64], big_x: &[f64], p: &ClassicalParams, guess: Option<&[f64]>, newton: &Newton) -> Result<Vec<f64>> {
    let len = x.len();
    if big_x.len() != len || big_x.iter().chain(x).any(|v| !(*v > 0.0)) {
        return Err(ClassicalError::InvalidState("x and X must be positive and of equal length".into()));
    }
    let target = DVector::from_iterator(len, big_x.iter().map(|v| v.ln()));
    let mut eta = DVector::from_iterator(len, guess.unwrap_or(x).iter().map(|v| v.ln()));
    let diverged = |eta: &DVector<f64>, residual: f64| ClassicalError::NewtonDiverged {
        last: eta.iter().map(|e| e.exp()).collect(),
        residual,
    };
    let (mut f, mut jac) = log_big_x(x, eta.as_slice(), p).ok_or_else(|| diverged(&eta, f64::INFINITY))?;
    let mut res = (&f - &target).amax();
    for _ in 0..newton.max_iter {
        // ŷ running off to 0 or ∞ relative to x̂ signals a target with no
        // finite preimage.
        if eta.iter().zip(x).any(|(e, xi)| (e - xi.ln()).abs() > RUNAWAY) {
            return Err(diverged(&eta, res));
        }
        if res < newton.tol {
            return Ok(eta.iter().map(|e| e.exp()).collect());
        }
        let step = jac.clone().lu().solve(&(&f - &target)).ok_or_else(|| diverged(&eta, res))?;
        let mut damp = 1.0;
        loop {
            let trial = &eta - &step * damp;
            if let Some((f2, j2)) = log_big_x(x, trial.as_slice(), p) {
                let r2 = (&f2 - &target).amax();
                if r2 < res {
                    eta = trial;
                    f = f2;
                    jac = j2;
                    res = r2;
                    break;
                }
            }
            damp *= 0.5;
            if damp < 1e-10 {
                return Err(diverged(&eta, res));
            }
        }
    }
    if res < newton.tol {
        Ok(eta.iter().map(|e| e.exp()).collect())
    } else {
        Err(diverged(&eta, res))
    }
}
