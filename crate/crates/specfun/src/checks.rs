//! Residuals of the functional identities, one sample point at a time.

use crate::dilog::rel_or_abs;
use crate::dsine::{sfun, DoubleSine, EvalMethod, Sheet};
use crate::error::Result;
use crate::modular::ModularPair;
use crate::theta::{quad_b, theta_pair};
use num_complex::Complex64;
use std::f64::consts::PI;

const I: Complex64 = Complex64::new(0.0, 1.0);
const ONE: Complex64 = Complex64::new(1.0, 0.0);

/// Both quasi-periodicity residuals at z:
/// 𝒮(z-iω₁)(1-e^{-2πz/ω₂})/𝒮(z) and the twin with ω₁ ↔ ω₂.
pub fn quasi_periodicity(z: Complex64, ds: &DoubleSine) -> Result<f64> {
    let (w1, w2) = (ds.pair().omega1(), ds.pair().omega2());
    let s = ds.eval(z)?;
    let a = ds.eval(z - I * w1)? * (ONE - (-2.0 * PI * z / w2).exp());
    let b = ds.eval(z - I * w2)? * (ONE - (-2.0 * PI * z / w1).exp());
    Ok(rel_or_abs(a, s).max(rel_or_abs(b, s)))
}

/// 𝒮(z)𝒮(-z-iΩ) against e^{iB(z)}.
pub fn reflection(z: Complex64, ds: &DoubleSine) -> Result<f64> {
    let lhs = ds.eval(z)? * ds.eval(-z - I * ds.pair().omega())?;
    Ok(rel_or_abs(lhs, (I * quad_b(z, ds.pair())).exp()))
}

/// θ(λ) against θ̃(λ)e^{iB(λ)}.
pub fn theta_modular(lambda: Complex64, p: &ModularPair, k: usize) -> Result<f64> {
    let (t, td) = theta_pair(lambda, p, k)?;
    Ok(rel_or_abs(t, td * (I * quad_b(lambda, p)).exp()))
}

/// S(q²x)/S(x) against 1/(1-x).
///
/// The caller picks x so that Log(q²x) = Log x + 2πiω₁/ω₂; otherwise the
/// principal sheet of S(q²x) is a different branch.
pub fn sfun_shift(x: Complex64, p: &ModularPair, m: &EvalMethod) -> Result<f64> {
    let q2 = p.q() * p.q();
    let r = sfun(q2 * x, p, m, Sheet::Principal)? / sfun(x, p, m, Sheet::Principal)?;
    Ok(rel_or_abs(r, ONE / (ONE - x)))
}

/// Range of arg x on which the principal logarithm does not wrap under x ↦ q²x.
pub fn sfun_safe_args(p: &ModularPair) -> (f64, f64) {
    let shift = 2.0 * PI * p.ratio().re;
    if shift >= 0.0 {
        (-PI, PI - shift)
    } else {
        (-PI - shift, PI)
    }
}

/// Product and integral routes at the same point.
pub fn representations(z: Complex64, product: &DoubleSine, integral: &DoubleSine) -> Result<f64> {
    Ok(rel_or_abs(integral.eval(z)?, product.eval(z)?))
}

/// Direction in the middle of the sector where 𝒮 → 1, and the decay rate of
/// the envelope along it.
pub fn asymptotic_ray(p: &ModularPair) -> (f64, f64) {
    let lo = p.omega1().arg() - 0.5 * PI;
    let hi = p.omega2().arg() + 0.5 * PI;
    let theta = 0.5 * (lo + hi);
    let dir = Complex64::from_polar(1.0, theta);
    let kappa = PI * (dir / p.omega1()).re.min((dir / p.omega2()).re);
    (theta, kappa)
}

/// |𝒮(re^{iθ}) - 1| at the given radii.
pub fn asymptotic_profile(ds: &DoubleSine, theta: f64, radii: &[f64]) -> Result<Vec<f64>> {
    radii
        .iter()
        .map(|&r| Ok(ds.eval_minus_one(Complex64::from_polar(r, theta))?.norm()))
        .collect()
}

/// Monotone decrease and the envelope |𝒮(λ₀)-1| e^{-κ(r-r₀)} anchored at the first radius.
pub fn asymptotics_hold(profile: &[f64], radii: &[f64], kappa: f64) -> bool {
    let base = profile[0];
    let monotone = profile.windows(2).all(|w| w[1] < w[0]);
    let enveloped = profile
        .iter()
        .zip(radii)
        .all(|(v, r)| *v <= base * (-kappa * (r - radii[0])).exp() * (1.0 + 1e-9));
    monotone && enveloped
}
