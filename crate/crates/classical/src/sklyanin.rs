//! Sklyanin bracket on Laurent polynomials in a log-canonical pair.
//!
//! For {a, b} = ab one has {aᵐbⁿ, aᵏbˡ} = (ml - nk) aᵐ⁺ᵏ bⁿ⁺ˡ, which makes the
//! bracket of two Lax entries an exact finite computation.

use num_complex::Complex64;
use std::collections::BTreeMap;

/// Σ c · aᵐ bⁿ keyed by (m, n).
#[derive(Clone, Debug, Default, PartialEq)]
pub struct Laurent(pub BTreeMap<(i32, i32), Complex64>);

impl Laurent {
    pub fn term(c: Complex64, m: i32, n: i32) -> Self {
        let mut t = BTreeMap::new();
        if c != Complex64::new(0.0, 0.0) {
            t.insert((m, n), c);
        }
        Self(t)
    }

    pub fn constant(c: Complex64) -> Self {
        Self::term(c, 0, 0)
    }

    fn add_term(&mut self, key: (i32, i32), c: Complex64) {
        *self.0.entry(key).or_insert(Complex64::new(0.0, 0.0)) += c;
    }

    pub fn add(&self, o: &Self) -> Self {
        let mut r = self.clone();
        for (k, c) in &o.0 {
            r.add_term(*k, *c);
        }
        r
    }

    pub fn scale(&self, s: Complex64) -> Self {
        Self(self.0.iter().map(|(k, c)| (*k, c * s)).collect())
    }

    pub fn mul(&self, o: &Self) -> Self {
        let mut r = Self::default();
        for ((m, n), c) in &self.0 {
            for ((k, l), d) in &o.0 {
                r.add_term((m + k, n + l), c * d);
            }
        }
        r
    }

    pub fn bracket(&self, o: &Self) -> Self {
        let mut r = Self::default();
        for ((m, n), c) in &self.0 {
            for ((k, l), d) in &o.0 {
                let w = (m * l - n * k) as f64;
                if w != 0.0 {
                    r.add_term((m + k, n + l), c * d * w);
                }
            }
        }
        r
    }

    pub fn max_coeff(&self) -> f64 {
        self.0.values().map(|c| c.norm()).fold(0.0, f64::max)
    }

    pub fn eval(&self, a: f64, b: f64) -> Complex64 {
        self.0.iter().map(|((m, n), c)| c * a.powi(*m) * b.powi(*n)).sum()
    }
}

pub type LaxEntries = [[Laurent; 2]; 2];

fn cx(v: f64) -> Complex64 {
    Complex64::new(v, 0.0)
}

/// Constant matrix P = [[α, β], [γ, δ]] of the elementary solution.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct FactorMatrix {
    pub alpha: f64,
    pub beta: f64,
    pub gamma: f64,
    pub delta: f64,
}

impl FactorMatrix {
    pub fn new(alpha: f64, beta: f64, gamma: f64, delta: f64) -> Self {
        Self { alpha, beta, gamma, delta }
    }

    /// The reduction δ = 0.
    pub fn reduced(alpha: f64, beta: f64, gamma: f64) -> Self {
        Self::new(alpha, beta, gamma, 0.0)
    }

    /// [[α, βa], [γλ⁻¹a⁻¹b, δb]] in the pair (a, b).
    pub fn elementary(&self, lambda: Complex64) -> LaxEntries {
        [
            [Laurent::constant(cx(self.alpha)), Laurent::term(cx(self.beta), 1, 0)],
            [Laurent::term(cx(self.gamma) / lambda, -1, 1), Laurent::term(cx(self.delta), 0, 1)],
        ]
    }
}

/// Classical Lax matrix in the pair (x̂, X̂).
pub fn lax_entries(lambda: Complex64, d1: f64, d2: f64) -> LaxEntries {
    [
        [
            Laurent::constant(lambda).add(&Laurent::term(cx(-1.0), 0, 1)),
            Laurent::term(lambda * d2, 1, 0).add(&Laurent::term(lambda * d1, 1, 1)),
        ],
        [Laurent::term(cx(-1.0), -1, 0), Laurent::constant(cx(-d2))],
    ]
}

/// Bäcklund matrix M in the pair (û, Û).
pub fn backlund_entries(lambda: Complex64, t: f64) -> LaxEntries {
    [
        [
            Laurent::constant(lambda).add(&Laurent::term(cx(-t), 0, 1)),
            Laurent::term(-lambda, 1, 0).add(&Laurent::term(lambda, 1, 1)),
        ],
        [Laurent::term(cx(-1.0), -1, 0), Laurent::constant(cx(1.0))],
    ]
}

/// The classical r-matrix, index 2a + b.
pub fn r_matrix(l1: Complex64, l2: Complex64) -> [[Complex64; 4]; 4] {
    let z = Complex64::new(0.0, 0.0);
    let k = 1.0 / (l2 - l1);
    [
        [z, z, z, z],
        [z, l2 * k, -l1 * k, z],
        [z, -l2 * k, l1 * k, z],
        [z, z, z, z],
    ]
}

/// Largest coefficient of {N₁(λ₁), N₂(λ₂)} - [r₁₂, N₁N₂] over all 16 entries.
pub fn sklyanin_residual<F: Fn(Complex64) -> LaxEntries>(lax: F, l1: Complex64, l2: Complex64) -> f64 {
    let (n1, n2) = (lax(l1), lax(l2));
    let r = r_matrix(l1, l2);
    let mut prod: Vec<Vec<Laurent>> = vec![vec![Laurent::default(); 4]; 4];
    let mut br: Vec<Vec<Laurent>> = vec![vec![Laurent::default(); 4]; 4];
    for a in 0..2 {
        for b in 0..2 {
            for c in 0..2 {
                for d in 0..2 {
                    prod[2 * a + b][2 * c + d] = n1[a][c].mul(&n2[b][d]);
                    br[2 * a + b][2 * c + d] = n1[a][c].bracket(&n2[b][d]);
                }
            }
        }
    }
    let mut worst: f64 = 0.0;
    for i in 0..4 {
        for j in 0..4 {
            let mut comm = Laurent::default();
            for k in 0..4 {
                comm = comm.add(&prod[k][j].scale(r[i][k])).add(&prod[i][k].scale(-r[k][j]));
            }
            worst = worst.max(br[i][j].add(&comm.scale(cx(-1.0))).max_coeff());
        }
    }
    worst
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bracket_of_generators() {
        let a = Laurent::term(cx(1.0), 1, 0);
        let b = Laurent::term(cx(1.0), 0, 1);
        assert_eq!(a.bracket(&b), Laurent::term(cx(1.0), 1, 1));
        assert_eq!(b.bracket(&a), Laurent::term(cx(-1.0), 1, 1));
    }

    #[test]
    fn lax_entries_match_matrix() {
        let l = Complex64::new(0.3, -0.2);
        let e = lax_entries(l, 0.3, 0.45);
        let m = crate::lax::lax_l(l, 1.4, 0.8, 0.3, 0.45);
        for i in 0..2 {
            for j in 0..2 {
                assert!((e[i][j].eval(1.4, 0.8) - m[(i, j)]).norm() < 1e-14);
            }
        }
    }
}
