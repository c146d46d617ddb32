//! Quadrature along horizontal lines for complex integrands.

use crate::error::{Result, SpecError};
use gauss_quad::GaussLegendre;
use num_complex::Complex64;

/// Trapezoid sum over the whole real line, marched outward from 0 until
/// `quiet` consecutive terms fall below `tol` relative to the running sum.
pub fn trapezoid_line<F>(f: F, step: f64, tol: f64, cutoff: f64) -> Result<Complex64>
where
    F: Fn(f64) -> Complex64,
{
    let mut sum = f(0.0);
    for dir in [1.0, -1.0] {
        let mut k = 1usize;
        let mut quiet = 0;
        loop {
            let s = dir * k as f64 * step;
            if s.abs() > cutoff {
                return Err(SpecError::QuadratureNotConverged(format!(
                    "integrand still above {tol:e} at |s| = {cutoff}"
                )));
            }
            let v = f(s);
            if !v.is_finite() {
                return Err(SpecError::QuadratureNotConverged(format!("non-finite integrand at s = {s}")));
            }
            sum += v;
            if v.norm() < tol * sum.norm().max(1.0) {
                quiet += 1;
                if quiet >= 4 {
                    break;
                }
            } else {
                quiet = 0;
            }
            k += 1;
        }
    }
    Ok(sum * step)
}

/// Trapezoid sum on a fixed uniform grid of `n` points over [a, b].
pub fn trapezoid_fixed<F>(f: F, a: f64, b: f64, n: usize) -> Complex64
where
    F: Fn(f64) -> Complex64,
{
    assert!(n >= 2);
    let h = (b - a) / (n - 1) as f64;
    let mut sum = 0.5 * (f(a) + f(b));
    for k in 1..n - 1 {
        sum += f(a + k as f64 * h);
    }
    sum * h
}

/// Composite Gauss–Legendre rule.
#[derive(Clone, Debug)]
pub struct GaussPanels {
    nodes: Vec<(f64, f64)>,
}

impl GaussPanels {
    pub fn new(degree: usize) -> Self {
        let rule = GaussLegendre::new(degree.max(1).try_into().unwrap());
        Self {
            nodes: rule.as_node_weight_pairs().to_vec(),
        }
    }

    /// Nodes and weights of the composite rule on [a, b].
    pub fn nodes_weights(&self, a: f64, b: f64, panels: usize) -> Vec<(f64, f64)> {
        let w = (b - a) / panels as f64;
        let mut out = Vec::with_capacity(panels * self.nodes.len());
        for j in 0..panels {
            let (c, r) = (a + (j as f64 + 0.5) * w, 0.5 * w);
            out.extend(self.nodes.iter().map(|&(x, wt)| (c + r * x, wt * r)));
        }
        out
    }

    /// ∫_a^b f over `panels` equal panels.
    pub fn integrate<F>(&self, f: F, a: f64, b: f64, panels: usize) -> Complex64
    where
        F: Fn(f64) -> Complex64,
    {
        let w = (b - a) / panels as f64;
        let mut sum = Complex64::new(0.0, 0.0);
        for j in 0..panels {
            let lo = a + j as f64 * w;
            let (c, r) = (lo + 0.5 * w, 0.5 * w);
            for &(x, wt) in &self.nodes {
                sum += f(c + r * x) * (wt * r);
            }
        }
        sum
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gaussian_integral() {
        let f = |x: f64| Complex64::new((-x * x).exp(), 0.0);
        let exact = std::f64::consts::PI.sqrt();
        let t = trapezoid_line(f, 0.25, 1e-18, 100.0).unwrap();
        assert!((t.re - exact).abs() < 1e-14);
        let g = GaussPanels::new(20).integrate(f, -8.0, 8.0, 16);
        assert!((g.re - exact).abs() < 1e-14);
    }

    #[test]
    fn non_decaying_reports_error() {
        let f = |_x: f64| Complex64::new(1.0, 0.0);
        assert!(trapezoid_line(f, 0.5, 1e-12, 10.0).is_err());
    }
}
