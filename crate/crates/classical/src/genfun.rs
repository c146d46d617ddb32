//! Generating function of the Bäcklund map.

use crate::state::{next, ClassicalParams};
use gauss_quad::GaussLegendre;

/// Adaptive Gauss–Legendre on [a, b].
pub fn adaptive(f: &dyn Fn(f64) -> f64, a: f64, b: f64, tol: f64) -> f64 {
    let rule = GaussLegendre::new(12.try_into().unwrap());
    fn rec(rule: &GaussLegendre, f: &dyn Fn(f64) -> f64, a: f64, b: f64, whole: f64, tol: f64, depth: u32) -> f64 {
        let m = 0.5 * (a + b);
        let l = rule.integrate(a, m, f);
        let r = rule.integrate(m, b, f);
        if (l + r - whole).abs() <= tol || depth > 40 {
            l + r
        } else {
            rec(rule, f, a, m, l, 0.5 * tol, depth + 1) + rec(rule, f, m, b, r, 0.5 * tol, depth + 1)
        }
    }
    let whole = rule.integrate(a, b, f);
    rec(&rule, f, a, b, whole, tol, 0)
}

/// F(x̂, ŷ) = Σ_n [∫ log(t+x)/x - ∫ log(1+d₂x)/x + ∫ log(1-d₁tx)/x - ∫ log(1+d₁x)/x]
/// with upper limits x̂_n/ŷ_n, ŷ_{n+1}/x̂_n, ŷ_{n+1}/x̂_n, x̂_{n+1}/x̂_n and
/// lower limit `anchor`.
pub fn generating_function(x: &[f64], y: &[f64], p: &ClassicalParams, anchor: f64) -> f64 {
    let ClassicalParams { d1, d2, t, .. } = *p;
    let len = x.len();
    let tol = 1e-15;
    let mut total = 0.0;
    for n in 0..len {
        let k = next(n, len);
        total += adaptive(&|v| (t + v).ln() / v, anchor, x[n] / y[n], tol);
        total -= adaptive(&|v| (d2 * v).ln_1p() / v, anchor, y[k] / x[n], tol);
        total += adaptive(&|v| (-d1 * t * v).ln_1p() / v, anchor, y[k] / x[n], tol);
        total -= adaptive(&|v| (d1 * v).ln_1p() / v, anchor, x[k] / x[n], tol);
    }
    total
}

/// Largest deviation of x̂∂F/∂x̂ from log X̂ and of -ŷ∂F/∂ŷ from log Ŷ,
/// differentiating in log coordinates with a five-point stencil.
pub fn generating_residual(x: &[f64], y: &[f64], big_x: &[f64], big_y: &[f64], p: &ClassicalParams, anchor: f64) -> f64 {
    let h = 1e-3;
    let len = x.len();
    let deriv = |which: usize, n: usize| {
        let eval = |e: f64| {
            let mut xs = x.to_vec();
            let mut ys = y.to_vec();
            if which == 0 {
                xs[n] *= e.exp();
            } else {
                ys[n] *= e.exp();
            }
            generating_function(&xs, &ys, p, anchor)
        };
        (-eval(2.0 * h) + 8.0 * eval(h) - 8.0 * eval(-h) + eval(-2.0 * h)) / (12.0 * h)
    };
    let mut worst: f64 = 0.0;
    for n in 0..len {
        worst = worst.max((deriv(0, n) - big_x[n].ln()).abs());
        worst = worst.max((-deriv(1, n) - big_y[n].ln()).abs());
    }
    worst
}
