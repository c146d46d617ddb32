//! Transfer matrix t(λ) = Tr L_N(λ)⋯L_1(λ) and its coefficients H_j.

use crate::error::{OpError, Result};
use crate::model::ModelParams;
use crate::quantum::{lax, lax_dual, lax_with, QuantumMatrix};
use crate::testfn::TestFunction;
use crate::word::OpWord;
use nalgebra::{DMatrix, DVector};
use num_complex::Complex64;
use specfun::ModularPair;
use std::f64::consts::PI;

const I: Complex64 = Complex64::new(0.0, 1.0);

/// Which of the two commuting transfer matrices.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Side {
    Direct,
    Dual,
}

/// Periods in the frame of the chosen side: the dual side exchanges them.
fn frame(p: &ModularPair, side: Side) -> ModularPair {
    match side {
        Side::Direct => *p,
        Side::Dual => p.swap(),
    }
}

pub fn monodromy(lambda: Complex64, p: &ModularPair, m: &ModelParams, sites: usize, side: Side) -> QuantumMatrix {
    let site_matrix = |j| match side {
        Side::Direct => lax(lambda, p, m, j, sites),
        Side::Dual => lax_dual(lambda, p, m, j, sites),
    };
    let mut acc = site_matrix(0);
    for j in 1..sites {
        acc = site_matrix(j).mul(&acc);
    }
    acc
}

pub fn transfer_word(lambda: Complex64, p: &ModularPair, m: &ModelParams, sites: usize, side: Side) -> OpWord {
    monodromy(lambda, p, m, sites, side).trace()
}

/// (t(λ)F)(x).
pub fn transfer_apply(lambda: Complex64, f: &TestFunction, x: &[Complex64], p: &ModularPair, m: &ModelParams, side: Side) -> Complex64 {
    transfer_word(lambda, p, m, x.len(), side).apply(f, x)
}

/// Transfer word for explicit couplings (used for the dual frame and for tests).
pub fn transfer_word_with(lambda: Complex64, p: &ModularPair, d1: Complex64, d2: Complex64, sites: usize) -> OpWord {
    let one = Complex64::new(1.0, 0.0);
    let m = |j| QuantumMatrix {
        tag: crate::quantum::MatrixTag::LaxL,
        entries: lax_with(lambda, p, d1, d2, one, j, sites),
    };
    let mut acc = m(0);
    for j in 1..sites {
        acc = m(j).mul(&acc);
    }
    acc.trace()
}

/// Coefficients recovered from a Vandermonde solve, with its condition number.
#[derive(Clone, Debug, PartialEq)]
pub struct Coefficients {
    /// (H_j F)(x) for j = 0..=N.
    pub h: Vec<Complex64>,
    pub condition: f64,
}

/// Condition numbers above this are refused.
pub const MAX_CONDITION: f64 = 1e10;

/// Solve Σ_m c_m Λ_kᵐ = v_k; returns (c, condition number).
///
/// The nodes are scaled to unit maximal modulus first, and the condition
/// number refers to that scaled system.
pub fn vandermonde_solve(nodes: &[Complex64], values: &[Complex64]) -> Result<(Vec<Complex64>, f64)> {
    let n = nodes.len();
    let r = nodes.iter().map(|z| z.norm()).fold(0.0, f64::max);
    if !(r > 0.0) {
        return Err(OpError::IllConditioned(f64::INFINITY));
    }
    let v = DMatrix::from_fn(n, n, |k, m| (nodes[k] / r).powi(m as i32));
    let sv = v.clone().svd(false, false).singular_values;
    let (smax, smin) = (sv.max(), sv.min());
    let cond = if smin > 0.0 { smax / smin } else { f64::INFINITY };
    if !(cond <= MAX_CONDITION) {
        return Err(OpError::IllConditioned(cond));
    }
    let rhs = DVector::from_column_slice(values);
    let c = v.lu().solve(&rhs).ok_or(OpError::IllConditioned(f64::INFINITY))?;
    Ok((c.iter().enumerate().map(|(m, v)| v / r.powi(m as i32)).collect(), cond))
}

/// Λ_k = r e^{2πik/(N+1)}, k = 0..=N.
pub fn root_of_unity_nodes(sites: usize, radius: f64) -> Vec<Complex64> {
    (0..=sites)
        .map(|k| Complex64::from_polar(radius, 2.0 * PI * k as f64 / (sites + 1) as f64))
        .collect()
}

/// (H_j F)(x) from t at the given nodes in Λ = e^{-2πλ/w}, w the second
/// period of the side's frame.
pub fn hamiltonian_coeffs_at(nodes: &[Complex64], f: &TestFunction, x: &[Complex64], p: &ModularPair, m: &ModelParams, side: Side) -> Result<Coefficients> {
    let sites = x.len();
    if nodes.len() != sites + 1 {
        return Err(OpError::Invalid(format!("need {} nodes, got {}", sites + 1, nodes.len())));
    }
    let w = frame(p, side).omega2();
    let values: Vec<Complex64> = nodes
        .iter()
        .map(|lam_node| {
            let lambda = -w / (2.0 * PI) * lam_node.ln();
            transfer_apply(lambda, f, x, p, m, side)
        })
        .collect();
    let (c, condition) = vandermonde_solve(nodes, &values)?;
    // t = Σ_j (-1)^j H_j Λ^{N-j}
    let h = (0..=sites)
        .map(|j| c[sites - j] * if j % 2 == 0 { 1.0 } else { -1.0 })
        .collect();
    Ok(Coefficients { h, condition })
}

/// Coefficients with each H_j read off a circle on which its term is
/// dominant, the sizes being estimated by a first pass on the unit circle.
pub fn hamiltonian_coeffs(f: &TestFunction, x: &[Complex64], p: &ModularPair, m: &ModelParams, side: Side) -> Result<Coefficients> {
    let sites = x.len();
    let first = hamiltonian_coeffs_at(&root_of_unity_nodes(sites, 1.0), f, x, p, m, side)?;
    // Coefficient of Λ^k is ±H_{N-k}.
    let size: Vec<f64> = (0..=sites).map(|k| first.h[sites - k].norm()).collect();
    let mut out = first.clone();
    let mut memo: Vec<(i32, Coefficients)> = Vec::new();
    for k in 0..=sites {
        if size[k] == 0.0 {
            continue;
        }
        let best = (-40..=40)
            .max_by(|&a, &b| {
                let score = |e: i32| {
                    let r = 10f64.powf(e as f64 / 10.0);
                    let top = (0..=sites).map(|m| size[m] * r.powi(m as i32)).fold(0.0, f64::max);
                    size[k] * r.powi(k as i32) / top
                };
                score(a).total_cmp(&score(b)).then(b.abs().cmp(&a.abs()))
            })
            .unwrap();
        if best == 0 {
            continue;
        }
        if !memo.iter().any(|(e, _)| *e == best) {
            let r = 10f64.powf(best as f64 / 10.0);
            memo.push((best, hamiltonian_coeffs_at(&root_of_unity_nodes(sites, r), f, x, p, m, side)?));
        }
        let c = &memo.iter().find(|(e, _)| *e == best).unwrap().1;
        out.h[sites - k] = c.h[sites - k];
        out.condition = out.condition.max(c.condition);
    }
    Ok(out)
}

/// H₁ as printed, for N ≥ 2 (periodic x₀ = x_N):
/// Σ_n [(1 + q⁻¹d₁e^{-2π(x_n - x_{n-1})/ω₂})E_n + d₂e^{-2π(x_n - x_{n-1})/ω₂}].
/// For N = 1 the trace gives E + d₂.
pub fn h1_printed(p: &ModularPair, m: &ModelParams, sites: usize, side: Side) -> OpWord {
    let fp = frame(p, side);
    let (d1, d2) = match side {
        Side::Direct => m.couplings(p),
        Side::Dual => m.dual_couplings(p),
    };
    let (w1, w2) = (fp.omega1(), fp.omega2());
    let q = fp.q();
    let mut h = OpWord::zero(sites);
    if sites == 1 {
        return OpWord::shift(0, I * w1, 1).add(&OpWord::scalar(d2, 1));
    }
    for n in 0..sites {
        let prev = (n + sites - 1) % sites;
        let e = OpWord::shift(n, I * w1, sites);
        let diff = OpWord::mult(n, -2.0 * PI / w2, sites).compose(&OpWord::mult(prev, 2.0 * PI / w2, sites));
        let first = OpWord::identity(sites).add(&diff.scale(d1 / q)).compose(&e);
        h = h.add(&first).add(&diff.scale(d2));
    }
    h
}

/// H_N = ∏ E_n + d₂^N.
pub fn hn_printed(p: &ModularPair, m: &ModelParams, sites: usize, side: Side) -> OpWord {
    let fp = frame(p, side);
    let d2 = match side {
        Side::Direct => m.couplings(p).1,
        Side::Dual => m.dual_couplings(p).1,
    };
    let mut e = OpWord::identity(sites);
    for n in 0..sites {
        e = e.compose(&OpWord::shift(n, I * fp.omega1(), sites));
    }
    e.add(&OpWord::scalar(d2.powi(sites as i32), sites))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::ModelKind;

    #[test]
    fn single_site_trace() {
        // t = Λ - E - d₂ for N = 1.
        let p = ModularPair::default_pair();
        let m = ModelParams::new(ModelKind::Generic, 0.37, -0.21);
        let (_, d2) = m.couplings(&p);
        let l = Complex64::new(0.2, -0.3);
        let f = TestFunction::gaussian(vec![Complex64::new(0.3, 0.1)]);
        let x = [Complex64::new(0.4, -0.2)];
        let big_l = (-2.0 * PI * l / p.omega2()).exp();
        let expect = (big_l - d2) * f.eval(&x) - f.eval(&[x[0] + I * p.omega1()]);
        let got = transfer_apply(l, &f, &x, &p, &m, Side::Direct);
        assert!((got - expect).norm() < 1e-13);
    }

    #[test]
    fn ill_conditioned_nodes_rejected() {
        let nodes = [Complex64::new(1.0, 0.0), Complex64::new(1.0 + 1e-13, 0.0)];
        let r = vandermonde_solve(&nodes, &[Complex64::new(1.0, 0.0); 2]);
        assert!(matches!(r, Err(OpError::IllConditioned(_))));
    }
}
