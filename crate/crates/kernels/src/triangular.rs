//! Triangularisation of (L₀ⱼ(λ)·wⱼ) and the operator Baxter equation on the Q kernel.

use crate::error::{KernelError, Result};
use crate::kernel::Kernel;
use num_complex::Complex64;
use opcalc::{lax, transfer_word, Side};
use std::f64::consts::PI;

const I: Complex64 = Complex64::new(0.0, 1.0);

/// Upper-triangular core of the gauged site matrix and its residuals.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Triangular {
    pub a: Complex64,
    pub b: Complex64,
    pub d: Complex64,
    /// |21 entry| relative to the largest entry of the site matrix
    pub lower: f64,
    /// A_j against -q⁻³e^{2πλ/ω₂}𝓛_{λ-iω₁}(x_j+iω₁, y_j; y_{j-1})
    pub a_residual: f64,
    /// D_j against -qΛ(d₂+q⁻¹d₁Λ)𝓛_{λ+iω₁}(x_j, y_j; y_{j-1})
    pub d_residual: f64,
    /// A_j, D_j against the forms in terms of 𝓛_λ itself
    pub a_printed_residual: f64,
    pub d_printed_residual: f64,
}

/// Tolerance on the 21 entry before `NonVanishing21` is raised.
pub const LOWER_TOL: f64 = 1e-9;

/// Gauge the matrix (L₀ⱼ·wⱼ)(x⃗,y⃗), wⱼ = 𝓛_λ(x_j,y_j;y_{j-1}), to upper-triangular form.
pub fn triangular_decompose(j: usize, x: &[Complex64], y: &[Complex64], lambda: Complex64, kernel: &Kernel) -> Result<Triangular> {
    let n = x.len();
    if j >= n || y.len() != n {
        return Err(KernelError::Invalid(format!("site {j} of an {n}-site chain")));
    }
    let params = kernel.params();
    let p = &params.pair;
    let (w1, w2, q) = (p.omega1(), p.omega2(), p.q());
    let (d1, d2) = params.model.couplings(p);
    let (yj, yprev) = (y[j], y[(j + n - 1) % n]);
    let big_l = (-2.0 * PI * lambda / w2).exp();
    let e = |z: Complex64| (2.0 * PI * z / w2).exp();

    let lax1 = lax(lambda, p, &params.model, 0, 1);
    let w = |xs: &[Complex64]| kernel.l(lambda, xs[0], yj, yprev);
    let mut m = [[Complex64::new(0.0, 0.0); 2]; 2];
    for (r, row) in lax1.entries.iter().enumerate() {
        for (c, word) in row.iter().enumerate() {
            m[r][c] = word.try_apply(w, &[x[j]])?;
        }
    }
    // G₁⁻¹ M G₂⁻¹ with G₁ = [[1,0],[g₁,1]], G₂ = [[1,0],[-g₂,1]].
    let g1 = e(yj) / q;
    let g2 = e(yprev) / q;
    let r0 = [m[0][0] + m[0][1] * g2, m[0][1]];
    let r1 = [m[1][0] + m[1][1] * g2, m[1][1]];
    let tri = [r0, [r1[0] - g1 * r0[0], r1[1] - g1 * r0[1]]];
    let scale = m.iter().flatten().map(|v| v.norm()).fold(0.0, f64::max);
    let lower = tri[1][0].norm() / scale;

    let l0 = kernel.l(lambda, x[j], yj, yprev)?;
    let a_closed = -(2.0 * PI * lambda / w2).exp() / (q * q * q) * kernel.l(lambda - I * w1, x[j] + I * w1, yj, yprev)?;
    let coupling = d2 + d1 * big_l / q;
    let d_closed = -q * big_l * coupling * kernel.l(lambda + I * w1, x[j], yj, yprev)?;
    let ex = |z: Complex64| (-2.0 * PI * z / w2).exp();
    let a_printed = -ex(yj - x[j]) * (1.0 + q * d2 * ex(x[j] - yprev)) * l0 / q;
    let d_printed = -coupling * ex(x[j] - yj) * (q * big_l + ex(yj - x[j])) / (1.0 - d1 * big_l * ex(x[j] - yprev)) * l0;
    let rel = |a: Complex64, b: Complex64| (a - b).norm() / a.norm().max(b.norm()).max(f64::MIN_POSITIVE);
    Ok(Triangular {
        a: tri[0][0],
        b: tri[0][1],
        d: tri[1][1],
        lower,
        a_residual: rel(tri[0][0], a_closed),
        d_residual: rel(tri[1][1], d_closed),
        a_printed_residual: rel(tri[0][0], a_printed),
        d_printed_residual: rel(tri[1][1], d_printed),
    })
}

/// Like `triangular_decompose` but fails with `NonVanishing21` when the 21 entry survives.
pub fn triangular_checked(j: usize, x: &[Complex64], y: &[Complex64], lambda: Complex64, kernel: &Kernel) -> Result<Triangular> {
    let t = triangular_decompose(j, x, y, lambda, kernel)?;
    if t.lower > LOWER_TOL {
        return Err(KernelError::NonVanishing21(t.lower));
    }
    Ok(t)
}

/// The three terms of the Baxter equation at one point.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct BaxterTerms {
    /// (t(λ)Q_λ)(x⃗,y⃗), through the transfer-matrix word
    pub lhs: Complex64,
    /// (-q³e^{-2πλ/ω₂})^{-N} Q_{λ-iω₁}(x⃗+iω₁e⃗, y⃗)
    pub backward: Complex64,
    /// (-qe^{-2πλ/ω₂})^N (d₂+q⁻¹d₁e^{-2πλ/ω₂})^N Q_{λ+iω₁}(x⃗, y⃗)
    pub forward: Complex64,
}

impl BaxterTerms {
    /// |lhs - backward - forward| over the largest of the three magnitudes.
    pub fn residual(&self) -> f64 {
        let scale = self.lhs.norm().max(self.backward.norm()).max(self.forward.norm());
        (self.lhs - self.backward - self.forward).norm() / scale
    }
}

/// Baxter terms in the direct frame, or in the dual one (ω₁ ↔ ω₂, dual couplings,
/// dual transfer matrix), using the same kernel.
pub fn baxter_terms(x: &[Complex64], y: &[Complex64], lambda: Complex64, kernel: &Kernel, side: Side) -> Result<BaxterTerms> {
    let params = kernel.params();
    let n = x.len();
    let frame = match side {
        Side::Direct => params.pair,
        Side::Dual => params.pair.swap(),
    };
    let (d1, d2) = match side {
        Side::Direct => params.model.couplings(&params.pair),
        Side::Dual => params.model.dual_couplings(&params.pair),
    };
    let (w1, w2, q) = (frame.omega1(), frame.omega2(), frame.q());
    let big_l = (-2.0 * PI * lambda / w2).exp();
    let word = transfer_word(lambda, &params.pair, &params.model, n, side);
    let lhs = word.try_apply(|xs| kernel.q(lambda, xs, y), x)?;
    let shifted: Vec<Complex64> = x.iter().map(|v| v + I * w1).collect();
    let nn = n as i32;
    let backward = (-q * q * q * big_l).powi(-nn) * kernel.q(lambda - I * w1, &shifted, y)?;
    let forward = (-q * big_l).powi(nn) * (d2 + d1 * big_l / q).powi(nn) * kernel.q(lambda + I * w1, x, y)?;
    Ok(BaxterTerms { lhs, backward, forward })
}

pub fn baxter_residual(x: &[Complex64], y: &[Complex64], lambda: Complex64, kernel: &Kernel, side: Side) -> Result<f64> {
    Ok(baxter_terms(x, y, lambda, kernel, side)?.residual())
}
