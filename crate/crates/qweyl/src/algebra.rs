//! Generators, their commutation exponents and the degree grading.

use crate::coeff::Coeff;
use crate::error::{QweylError, Result};
use std::sync::Arc;

/// g_i g_j = q^{2θ_ij} g_j g_i, with a weighted degree Σ w_i a_i used for truncation.
#[derive(Clone, Debug, PartialEq)]
pub struct WeylAlgebra<C> {
    theta: Vec<Vec<i32>>,
    weights: Vec<i32>,
    q: C,
    order: i64,
}

/// The exponential e^{-m(2π/ω₂)x̂_s - nω₁X̂_s} at site s, with [x̂_s, X̂_s] = i.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Primitive {
    pub site: usize,
    pub m: i32,
    pub n: i32,
}

impl Primitive {
    pub const fn new(site: usize, m: i32, n: i32) -> Self {
        Self { site, m, n }
    }

    /// Exponent θ with self·other = q^{2θ} other·self.
    pub fn theta(&self, other: &Primitive) -> i32 {
        if self.site != other.site {
            0
        } else {
            self.m * other.n - self.n * other.m
        }
    }
}

impl<C: Coeff> WeylAlgebra<C> {
    pub fn new(theta: Vec<Vec<i32>>, weights: Vec<i32>, q: C, order: i64) -> Result<Arc<Self>> {
        let k = weights.len();
        if theta.len() != k || theta.iter().any(|r| r.len() != k) {
            return Err(QweylError::Invalid(format!("θ must be {k}×{k}")));
        }
        for i in 0..k {
            for j in 0..k {
                if theta[i][j] != -theta[j][i] {
                    return Err(QweylError::Invalid(format!("θ not antisymmetric at ({i},{j})")));
                }
            }
        }
        if q.is_zero() {
            return Err(QweylError::Invalid("q = 0".into()));
        }
        Ok(Arc::new(Self { theta, weights, q, order }))
    }

    /// θ read off from the canonical commutator of the underlying exponentials.
    pub fn from_primitives(gens: &[Primitive], weights: Vec<i32>, q: C, order: i64) -> Result<Arc<Self>> {
        let theta = gens.iter().map(|a| gens.iter().map(|b| a.theta(b)).collect()).collect();
        Self::new(theta, weights, q, order)
    }

    /// Two generators with g₁g₂ = q^{2θ}g₂g₁, both of degree 1.
    pub fn pair(theta: i32, q: C, order: i64) -> Result<Arc<Self>> {
        Self::new(vec![vec![0, theta], vec![-theta, 0]], vec![1, 1], q, order)
    }

    pub fn rank(&self) -> usize {
        self.weights.len()
    }

    pub fn theta(&self, i: usize, j: usize) -> i32 {
        self.theta[i][j]
    }

    pub fn weights(&self) -> &[i32] {
        &self.weights
    }

    pub fn q(&self) -> &C {
        &self.q
    }

    pub fn order(&self) -> i64 {
        self.order
    }

    pub fn degree(&self, e: &[i32]) -> i64 {
        e.iter().zip(&self.weights).map(|(&a, &w)| a as i64 * w as i64).sum()
    }

    /// Power of q picked up by g^a · g^b → normal order.
    pub fn phase(&self, a: &[i32], b: &[i32]) -> i64 {
        let mut p = 0i64;
        for i in 0..a.len() {
            if b[i] == 0 {
                continue;
            }
            for j in i + 1..a.len() {
                p += 2 * self.theta[j][i] as i64 * a[j] as i64 * b[i] as i64;
            }
        }
        p
    }

    pub fn qpow(&self, p: i64) -> C {
        let base = if p >= 0 { self.q.clone() } else { C::one() / self.q.clone() };
        let mut e = p.unsigned_abs();
        let mut acc = C::one();
        let mut b = base;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * b.clone();
            }
            b = b.clone() * b;
            e >>= 1;
        }
        acc
    }

    /// (q²;q²)_n.
    pub fn q2_pochhammer(&self, n: usize) -> C {
        let q2 = self.qpow(2);
        let mut qk = C::one();
        let mut acc = C::one();
        for _ in 0..n {
            qk = qk * q2.clone();
            acc = acc * (C::one() - qk.clone());
        }
        acc
    }
}
