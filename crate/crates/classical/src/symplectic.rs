//! Canonicity of the Bäcklund map in the log coordinates (log x̂, log X̂).

use crate::backlund::{backlund_map, backlund_solve, Newton};
use crate::error::Result;
use crate::state::{ClassicalParams, ClassicalState};
use nalgebra::DMatrix;

/// (log ŷ, log Ŷ) as a function of (log x̂, log X̂).
pub fn forward(logs: &[f64], p: &ClassicalParams, newton: &Newton) -> Result<Vec<f64>> {
    let n = logs.len() / 2;
    let x: Vec<f64> = logs[..n].iter().map(|v| v.exp()).collect();
    let bx: Vec<f64> = logs[n..].iter().map(|v| v.exp()).collect();
    let y = backlund_solve(&x, &bx, p, None, newton)?;
    let img = backlund_map(&ClassicalState::new(x, y.clone(), *p)?)?;
    Ok(y.iter().chain(&img.big_y).map(|v| v.ln()).collect())
}

/// ‖JᵀΩJ - Ω‖_max with J by central differences of step `h`.
pub fn symplectic_defect(x: &[f64], big_x: &[f64], p: &ClassicalParams, h: f64) -> Result<f64> {
    let n = x.len();
    let newton = Newton { tol: 1e-14, max_iter: 200 };
    let base: Vec<f64> = x.iter().chain(big_x).map(|v| v.ln()).collect();
    let mut jac = DMatrix::zeros(2 * n, 2 * n);
    for j in 0..2 * n {
        let mut up = base.clone();
        let mut dn = base.clone();
        up[j] += h;
        dn[j] -= h;
        let (fu, fd) = (forward(&up, p, &newton)?, forward(&dn, p, &newton)?);
        for i in 0..2 * n {
            jac[(i, j)] = (fu[i] - fd[i]) / (2.0 * h);
        }
    }
    let mut omega = DMatrix::zeros(2 * n, 2 * n);
    for i in 0..n {
        omega[(i, n + i)] = 1.0;
        omega[(n + i, i)] = -1.0;
    }
    Ok((jac.transpose() * &omega * &jac - omega).amax())
}
