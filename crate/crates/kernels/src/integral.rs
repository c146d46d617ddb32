//! Quadrature realisations: the 𝕃 operator on two-variable test functions,
//! the N = 1 composition of Q kernels and the reduced kernel Q̄.
//!
//! Every integral runs along a horizontal line Im v = c separating the upper
//! and lower pole families of the integrand, with c in the middle of the strip.

use crate::error::{KernelError, Result};
use crate::kernel::Kernel;
use num_complex::Complex64;
use opcalc::{lax, m_matrix, transfer_word, OpWord, QuantumMatrix, TestFunction};
use specfun::quad::{trapezoid_line, GaussPanels};
use std::cell::RefCell;
use std::f64::consts::PI;

const I: Complex64 = Complex64::new(0.0, 1.0);

/// Settings shared by the line integrals.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct LineQuad {
    pub tol: f64,
    pub cutoff: f64,
    /// probe radii for the decay certificate
    pub probe: (f64, f64),
}

impl Default for LineQuad {
    fn default() -> Self {
        Self {
            tol: 1e-13,
            cutoff: 60.0,
            probe: (6.0, 12.0),
        }
    }
}

/// Analyticity strip (lo, hi) of the integrand in Im v; `None` bounds are open.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Strip {
    pub lo: Option<f64>,
    pub hi: Option<f64>,
}

impl Strip {
    /// Contour height and distance to the nearest singular line.
    pub fn centre(&self, fallback: f64) -> Result<(f64, f64)> {
        match (self.lo, self.hi) {
            (Some(lo), Some(hi)) if lo < hi => Ok((0.5 * (lo + hi), 0.5 * (hi - lo))),
            (Some(lo), Some(hi)) => Err(KernelError::Invalid(format!("pole families pinch the contour: lo {lo} >= hi {hi}"))),
            (Some(lo), None) => Ok((lo + fallback, fallback)),
            (None, Some(hi)) => Ok((hi - fallback, fallback)),
            (None, None) => Ok((0.0, fallback)),
        }
    }

    fn raise(&mut self, v: f64) {
        self.lo = Some(self.lo.map_or(v, |l| l.max(v)));
    }

    fn lower(&mut self, v: f64) {
        self.hi = Some(self.hi.map_or(v, |h| h.min(v)));
    }
}

/// ∫ f(s + ic) ds with the trapezoid rule, after checking that |f| decreases
/// between the two probe radii on both sides.
pub fn line_integral<F>(f: F, c: f64, width: f64, quad: &LineQuad) -> Result<Complex64>
where
    F: Fn(Complex64) -> Result<Complex64>,
{
    certify_decay(&f, c, quad)?;
    let err = RefCell::new(None);
    let g = |s: f64| match f(Complex64::new(s, c)) {
        Ok(v) => v,
        Err(e) => {
            err.borrow_mut().get_or_insert(e);
            Complex64::new(f64::NAN, f64::NAN)
        }
    };
    let step = 2.0 * PI * width / ((1.0 / quad.tol).ln() + 5.0);
    let r = trapezoid_line(g, step, quad.tol * 1e-2, quad.cutoff);
    if let Some(e) = err.into_inner() {
        return Err(e);
    }
    r.map_err(|e| KernelError::QuadratureNotConverged(e.to_string()))
}

fn certify_decay<F>(f: &F, c: f64, quad: &LineQuad) -> Result<()>
where
    F: Fn(Complex64) -> Result<Complex64>,
{
    let (r1, r2) = quad.probe;
    for sgn in [1.0, -1.0] {
        let a = f(Complex64::new(sgn * r1, c))?.norm();
        let b = f(Complex64::new(sgn * r2, c))?.norm();
        if !(b < a || b == 0.0) {
            return Err(KernelError::NonDecayingIntegrand(format!(
                "|integrand| grows from {a:e} at s = {} to {b:e} at s = {}",
                sgn * r1,
                sgn * r2
            )));
        }
    }
    Ok(())
}

fn re_omega(kernel: &Kernel) -> f64 {
    kernel.params().pair.omega().re
}

/// Strip in Im v for v ↦ 𝓛_t(x,u;v).
pub fn l_strip(kernel: &Kernel, t: Complex64, x: Complex64, u: Complex64) -> Strip {
    let r = re_omega(kernel);
    let keep = Kernel::present(kernel.params().model.kind);
    let mut s = Strip { lo: None, hi: None };
    if keep[0] {
        s.lower(x.im - 0.5 * r);
    }
    if keep[1] {
        s.lower(u.im + 0.5 * r);
    }
    if keep[2] {
        s.raise((x + t).im - r);
    }
    s
}

/// (𝕃 F)(x,u) = ∫ 𝓛_t(x,u;v) F(u,v) dv.
pub fn apply_l<F>(kernel: &Kernel, t: Complex64, f: F, x: Complex64, u: Complex64, quad: &LineQuad) -> Result<Complex64>
where
    F: Fn(Complex64, Complex64) -> Complex64,
{
    let (c, width) = l_strip(kernel, t, x, u).centre(0.25 * re_omega(kernel))?;
    line_integral(|v| Ok(kernel.l(t, x, u, v)? * f(u, v)), c, width, quad)
}

/// Outcome of the L·M intertwining check.
#[derive(Clone, Debug, PartialEq)]
pub struct LlmCheck {
    /// max over entries of |𝕃(LM)_{ij}f - (ML)_{ij}𝕃f| over the largest entry
    pub residual: f64,
    pub entries: [[(Complex64, Complex64); 2]; 2],
}

fn product(a: &QuantumMatrix, b: &QuantumMatrix) -> [[OpWord; 2]; 2] {
    let e = |i: usize, j: usize| a.entries[i][0].compose(&b.entries[0][j]).add(&a.entries[i][1].compose(&b.entries[1][j]));
    [[e(0, 0), e(0, 1)], [e(1, 0), e(1, 1)]]
}

/// 𝕃 L₀ₓ(λ) M₀ᵤ(λ;t) = M₀ᵤ(λ;t) L₀ₓ(λ) 𝕃 applied to f(x,u) at one point.
pub fn llm_operator_residual(
    kernel: &Kernel,
    f: &TestFunction,
    lambda: Complex64,
    t: Complex64,
    x: Complex64,
    u: Complex64,
    quad: &LineQuad,
) -> Result<LlmCheck> {
    let params = kernel.params();
    let l = lax(lambda, &params.pair, &params.model, 0, 2);
    let m = m_matrix(lambda, t, &params.pair, 1, 2);
    let lm = product(&l, &m);
    let ml = product(&m, &l);
    let zero = Complex64::new(0.0, 0.0);
    let mut entries = [[(zero, zero); 2]; 2];
    let lf = |a: Complex64, b: Complex64| apply_l(kernel, t, |y, v| f.eval(&[y, v]), a, b, quad);
    for i in 0..2 {
        for j in 0..2 {
            let lhs = apply_l(kernel, t, |y, v| lm[i][j].apply(f, &[y, v]), x, u, quad)?;
            let rhs = ml[i][j].try_apply(|z| lf(z[0], z[1]), &[x, u])?;
            entries[i][j] = (lhs, rhs);
        }
    }
    let scale = entries.iter().flatten().map(|(a, b)| a.norm().max(b.norm())).fold(0.0, f64::max);
    let residual = entries.iter().flatten().map(|(a, b)| (a - b).norm()).fold(0.0, f64::max) / scale;
    Ok(LlmCheck { residual, entries })
}

/// 𝕃f computed as ∫ 𝓛_t(x,u;v-3iΩ/4) f(u,v-3iΩ/4) dv against 𝔼𝕃⁽ᶜ⁾𝔼⁻¹f with
/// 𝔼 = e^{-3Ω(X+U)/4}, both on the real line. Returns (gauge form, conjugated form).
pub fn e_gauge_pair(kernel: &Kernel, f: &TestFunction, t: Complex64, x: Complex64, u: Complex64, quad: &LineQuad) -> Result<(Complex64, Complex64)> {
    let s = 0.75 * I * kernel.params().pair.omega();
    let width = 0.25 * re_omega(kernel);
    let direct = line_integral(|v| Ok(kernel.l(t, x, u, v - s)? * f.eval(&[u, v - s])), 0.0, width, quad)?;
    let conj = line_integral(|v| Ok(kernel.l(t, x + s, u + s, v)? * f.eval(&[u, v - s])), 0.0, width, quad)?;
    Ok((direct, conj))
}

/// ∫ Q_λ(x,z) Q_μ(z,y) dz for N = 1 along the real line.
pub fn q_compose(kernel: &Kernel, lambda: Complex64, mu: Complex64, x: Complex64, y: Complex64, quad: &LineQuad) -> Result<Complex64> {
    let width = 0.15 * re_omega(kernel);
    line_integral(|z| Ok(kernel.q(lambda, &[x], &[z])? * kernel.q(mu, &[z], &[y])?), 0.0, width, quad)
}

/// Relative asymmetry of the N = 1 composition under λ ↔ μ.
pub fn q_commutator_residual(kernel: &Kernel, lambda: Complex64, mu: Complex64, x: Complex64, y: Complex64, quad: &LineQuad) -> Result<f64> {
    let a = q_compose(kernel, lambda, mu, x, y, quad)?;
    let b = q_compose(kernel, mu, lambda, x, y, quad)?;
    Ok((a - b).norm() / a.norm().max(b.norm()))
}

/// Strip in Im y for y ↦ Q_λ(x⃗, z⃗+ye⃗).
pub fn reduced_strip(kernel: &Kernel, lambda: Complex64, x: &[Complex64], z: &[Complex64]) -> Strip {
    let r = re_omega(kernel);
    let keep = Kernel::present(kernel.params().model.kind);
    let n = x.len();
    let mut s = Strip { lo: None, hi: None };
    for a in 0..n {
        let zp = z[(a + n - 1) % n];
        if keep[0] {
            s.lower((x[a] - zp).im - 0.5 * r);
        }
        if keep[2] {
            s.raise((x[a] - zp + lambda).im - r);
        }
        if keep[3] {
            s.lower((x[a] + lambda - z[a]).im - 0.5 * r);
        }
    }
    s
}

fn embed(v: &[Complex64]) -> Vec<Complex64> {
    let mut out = v.to_vec();
    out.push(Complex64::new(0.0, 0.0));
    out
}

/// Q̄_λ(u⃗,z⃗;p) = ∫ Q_λ(u⃗_N, z⃗_N + ye⃗) e^{ipy} dy with u⃗_N = (u⃗,0), z⃗_N = (z⃗,0).
pub fn reduced_kernel(kernel: &Kernel, u: &[Complex64], z: &[Complex64], p: Complex64, lambda: Complex64, quad: &LineQuad) -> Result<Complex64> {
    let (x, zz) = (embed(u), embed(z));
    let (c, width) = reduced_strip(kernel, lambda, &x, &zz).centre(0.25 * re_omega(kernel))?;
    line_integral(
        |y| {
            let w: Vec<Complex64> = zz.iter().map(|v| v + y).collect();
            Ok(kernel.q(lambda, &x, &w)? * (I * p * y).exp())
        },
        c,
        width,
        quad,
    )
}

/// Terms of the reduced Baxter equation at (u⃗, z⃗, p₀).
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ReducedBaxter {
    pub lhs: Complex64,
    pub backward: Complex64,
    pub forward: Complex64,
}

impl ReducedBaxter {
    pub fn residual(&self) -> f64 {
        let scale = self.lhs.norm().max(self.backward.norm()).max(self.forward.norm());
        (self.lhs - self.backward - self.forward).norm() / scale
    }
}

/// t̄(λ;p₀)Q̄(λ;p₀) against e^{-ω₁p₀}(-q³Λ)^{-N}Q̄(λ-iω₁;p₀) + (-qΛ)^N(d₂+q⁻¹d₁Λ)^N Q̄(λ+iω₁;p₀).
///
/// The transfer matrix acts on G(x⃗) = e^{ip₀x_N} Q̄(x⃗ - x_N e⃗), which is the
/// function of all N variables that the reduced kernel stands for.
pub fn reduced_baxter(kernel: &Kernel, u: &[Complex64], z: &[Complex64], p0: Complex64, lambda: Complex64, quad: &LineQuad) -> Result<ReducedBaxter> {
    let params = kernel.params();
    let pair = &params.pair;
    let (w1, w2, q) = (pair.omega1(), pair.omega2(), pair.q());
    let (d1, d2) = params.model.couplings(pair);
    let n = u.len() + 1;
    let big_l = (-2.0 * PI * lambda / w2).exp();
    let word = transfer_word(lambda, pair, &params.model, n, opcalc::Side::Direct);
    let g = |xs: &[Complex64]| -> Result<Complex64> {
        let xn = xs[n - 1];
        let red: Vec<Complex64> = xs[..n - 1].iter().map(|v| v - xn).collect();
        Ok((I * p0 * xn).exp() * reduced_kernel(kernel, &red, z, p0, lambda, quad)?)
    };
    let lhs = word.try_apply(g, &embed(u))?;
    let nn = n as i32;
    let backward = (-w1 * p0).exp() * (-q * q * q * big_l).powi(-nn) * reduced_kernel(kernel, u, z, p0, lambda - I * w1, quad)?;
    let forward = (-q * big_l).powi(nn) * (d2 + d1 * big_l / q).powi(nn) * reduced_kernel(kernel, u, z, p0, lambda + I * w1, quad)?;
    Ok(ReducedBaxter { lhs, backward, forward })
}

/// Forward transform of y ↦ Q_λ(u⃗_N, z⃗_N+(y+ic)e⃗) by Gauss–Legendre panels,
/// then the inverse transform at y = 0 by the trapezoid rule in p.
/// Returns (recovered, direct value).
pub fn reduced_inverse_check(kernel: &Kernel, u: &[Complex64], z: &[Complex64], lambda: Complex64, quad: &LineQuad) -> Result<(Complex64, Complex64)> {
    let (x, zz) = (embed(u), embed(z));
    let (c, width) = reduced_strip(kernel, lambda, &x, &zz).centre(0.25 * re_omega(kernel))?;
    let at = |s: f64| -> Result<Complex64> {
        let y = Complex64::new(s, c);
        let w: Vec<Complex64> = zz.iter().map(|v| v + y).collect();
        kernel.q(lambda, &x, &w)
    };
    let direct = at(0.0)?;
    let span = decay_span(&at, quad)?;
    let rule = GaussPanels::new(16).nodes_weights(-span, span, (4.0 * span).ceil() as usize);
    let nodes = rule
        .iter()
        .map(|&(s, w)| Ok((s, w * at(s)?)))
        .collect::<Result<Vec<(f64, Complex64)>>>()?;
    // F(p) = ∫ Q(s) e^{ips} ds; the e^{-pc} of the contour cancels against e^{pc} of the inverse at y = ic.
    let big_f = |pm: f64| -> Complex64 {
        nodes.iter().map(|(s, v)| v * Complex64::new(0.0, pm * s).exp()).sum()
    };
    // F decays like e^{-width·|p|}; the step keeps the aliases at |s| = 2π/step beyond the span.
    let p_max = ((1.0 / quad.tol).ln() + 5.0) / width;
    let step = 0.5 * PI / span;
    let count = (p_max / step).ceil() as usize;
    let mut sum = big_f(0.0);
    for k in 1..=count {
        let pm = k as f64 * step;
        sum += big_f(pm) + big_f(-pm);
    }
    Ok((sum * step / (2.0 * PI), direct))
}

fn decay_span<F: Fn(f64) -> Result<Complex64>>(f: &F, quad: &LineQuad) -> Result<f64> {
    let peak = f(0.0)?.norm();
    let mut r: f64 = 1.0;
    while r < quad.cutoff {
        if f(r)?.norm() < quad.tol * peak && f(-r)?.norm() < quad.tol * peak {
            return Ok(r);
        }
        r += 1.0;
    }
    Err(KernelError::NonDecayingIntegrand(format!("Q still above {:e} at |s| = {}", quad.tol, quad.cutoff)))
}

/// p = 0: trapezoid over ℝ against Gauss–Legendre on [0, ∞) of the even part.
pub fn reduced_even_split(kernel: &Kernel, u: &[Complex64], z: &[Complex64], lambda: Complex64, quad: &LineQuad) -> Result<(Complex64, Complex64)> {
    let full = reduced_kernel(kernel, u, z, Complex64::new(0.0, 0.0), lambda, quad)?;
    let (x, zz) = (embed(u), embed(z));
    let (c, _) = reduced_strip(kernel, lambda, &x, &zz).centre(0.25 * re_omega(kernel))?;
    let at = |s: f64| -> Result<Complex64> {
        let y = Complex64::new(s, c);
        let w: Vec<Complex64> = zz.iter().map(|v| v + y).collect();
        kernel.q(lambda, &x, &w)
    };
    let span = decay_span(&at, quad)?;
    let err = RefCell::new(None);
    let even = |s: f64| match (at(s), at(-s)) {
        (Ok(a), Ok(b)) => a + b,
        (Err(e), _) | (_, Err(e)) => {
            err.borrow_mut().get_or_insert(e);
            Complex64::new(0.0, 0.0)
        }
    };
    let half = GaussPanels::new(20).integrate(even, 0.0, span, (4.0 * span).ceil() as usize);
    if let Some(e) = err.into_inner() {
        return Err(e);
    }
    Ok((full, half))
}
