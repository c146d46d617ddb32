//! Words in multiplication and shift operators on functions of N variables.
//!
//! A term c·e^{a·x} S_σ acts as f ↦ c e^{a·x} f(x+σ). Composition picks up
//! e^{a₂·σ₁}: (c₁e^{a₁x}S_{σ₁})(c₂e^{a₂x}S_{σ₂}) = c₁c₂e^{a₂·σ₁} e^{(a₁+a₂)x} S_{σ₁+σ₂}.

use crate::testfn::TestFunction;
use num_complex::Complex64;

/// Exponents closer than this are merged when normalising.
const MERGE: f64 = 1e-9;

#[derive(Clone, Debug, PartialEq)]
pub struct Term {
    pub coeff: Complex64,
    pub mult: Vec<Complex64>,
    pub shift: Vec<Complex64>,
}

#[derive(Clone, Debug, PartialEq)]
pub struct OpWord {
    sites: usize,
    terms: Vec<Term>,
}

fn zero() -> Complex64 {
    Complex64::new(0.0, 0.0)
}

impl OpWord {
    pub fn zero(sites: usize) -> Self {
        Self { sites, terms: Vec::new() }
    }

    pub fn scalar(c: Complex64, sites: usize) -> Self {
        Self::zero(sites).with_term(c, vec![zero(); sites], vec![zero(); sites])
    }

    pub fn identity(sites: usize) -> Self {
        Self::scalar(Complex64::new(1.0, 0.0), sites)
    }

    /// e^{a x_site}.
    pub fn mult(site: usize, a: Complex64, sites: usize) -> Self {
        let mut m = vec![zero(); sites];
        m[site] = a;
        Self::zero(sites).with_term(Complex64::new(1.0, 0.0), m, vec![zero(); sites])
    }

    /// x_site ↦ x_site + σ.
    pub fn shift(site: usize, sigma: Complex64, sites: usize) -> Self {
        let mut s = vec![zero(); sites];
        s[site] = sigma;
        Self::zero(sites).with_term(Complex64::new(1.0, 0.0), vec![zero(); sites], s)
    }

    fn with_term(mut self, coeff: Complex64, mult: Vec<Complex64>, shift: Vec<Complex64>) -> Self {
        self.push(Term { coeff, mult, shift });
        self
    }

    pub fn sites(&self) -> usize {
        self.sites
    }

    pub fn terms(&self) -> &[Term] {
        &self.terms
    }

    fn push(&mut self, t: Term) {
        let close = |a: &[Complex64], b: &[Complex64]| a.iter().zip(b).all(|(u, v)| (u - v).norm() < MERGE);
        if let Some(e) = self.terms.iter_mut().find(|e| close(&e.mult, &t.mult) && close(&e.shift, &t.shift)) {
            e.coeff += t.coeff;
        } else {
            self.terms.push(t);
        }
    }

    pub fn add(&self, o: &Self) -> Self {
        assert_eq!(self.sites, o.sites);
        let mut r = self.clone();
        for t in &o.terms {
            r.push(t.clone());
        }
        r
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.add(&o.scale(Complex64::new(-1.0, 0.0)))
    }

    pub fn scale(&self, s: Complex64) -> Self {
        Self {
            sites: self.sites,
            terms: self
                .terms
                .iter()
                .map(|t| Term {
                    coeff: t.coeff * s,
                    ..t.clone()
                })
                .collect(),
        }
    }

    /// self ∘ o.
    pub fn compose(&self, o: &Self) -> Self {
        assert_eq!(self.sites, o.sites);
        let mut r = Self::zero(self.sites);
        for a in &self.terms {
            for b in &o.terms {
                let pickup: Complex64 = b.mult.iter().zip(&a.shift).map(|(m, s)| m * s).sum();
                r.push(Term {
                    coeff: a.coeff * b.coeff * pickup.exp(),
                    mult: a.mult.iter().zip(&b.mult).map(|(u, v)| u + v).collect(),
                    shift: a.shift.iter().zip(&b.shift).map(|(u, v)| u + v).collect(),
                });
            }
        }
        r
    }

    /// The same word without exactly vanishing terms.
    pub fn pruned(&self) -> Self {
        Self {
            sites: self.sites,
            terms: self.terms.iter().filter(|t| t.coeff != zero()).cloned().collect(),
        }
    }

    /// Largest coefficient modulus, the word-level size of an identity residual.
    pub fn coeff_norm(&self) -> f64 {
        self.terms.iter().map(|t| t.coeff.norm()).fold(0.0, f64::max)
    }

    /// (w f)(x).
    pub fn apply(&self, f: &TestFunction, x: &[Complex64]) -> Complex64 {
        self.apply_fn(|y| f.eval(y), x)
    }

    /// (w F)(x) for an arbitrary function F of N variables.
    pub fn apply_fn<F: FnMut(&[Complex64]) -> Complex64>(&self, mut f: F, x: &[Complex64]) -> Complex64 {
        assert_eq!(x.len(), self.sites);
        let mut arg = vec![zero(); self.sites];
        let mut sum = zero();
        for t in &self.terms {
            let mut lin = zero();
            for j in 0..self.sites {
                lin += t.mult[j] * x[j];
                arg[j] = x[j] + t.shift[j];
            }
            sum += t.coeff * lin.exp() * f(&arg);
        }
        sum
    }

    /// Like `apply_fn` for a fallible F; the first error is returned.
    pub fn try_apply<E, F: FnMut(&[Complex64]) -> Result<Complex64, E>>(&self, mut f: F, x: &[Complex64]) -> Result<Complex64, E> {
        let mut err = None;
        let v = self.apply_fn(
            |y| match f(y) {
                Ok(v) => v,
                Err(e) => {
                    err.get_or_insert(e);
                    zero()
                }
            },
            x,
        );
        match err {
            Some(e) => Err(e),
            None => Ok(v),
        }
    }

    /// Embed a single-site word at `site` of an N-site chain.
    pub fn embed(&self, site: usize, sites: usize) -> Self {
        assert_eq!(self.sites, 1);
        let lift = |v: &[Complex64]| {
            let mut r = vec![zero(); sites];
            r[site] = v[0];
            r
        };
        Self {
            sites,
            terms: self
                .terms
                .iter()
                .map(|t| Term {
                    coeff: t.coeff,
                    mult: lift(&t.mult),
                    shift: lift(&t.shift),
                })
                .collect(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn pickup_factor() {
        let s = OpWord::shift(0, c(0.0, 1.0), 1);
        let m = OpWord::mult(0, c(2.0, 0.0), 1);
        let w = s.compose(&m);
        assert_eq!(w.terms().len(), 1);
        assert!((w.terms()[0].coeff - c(0.0, 2.0).exp()).norm() < 1e-15);
    }

    #[test]
    fn like_terms_merge() {
        let a = OpWord::mult(0, c(1.0, 0.0), 2);
        let w = a.add(&a).sub(&a.scale(c(2.0, 0.0)));
        assert!(w.coeff_norm() < 1e-15);
    }

    #[test]
    fn identity_word_applies_as_identity() {
        let f = TestFunction::gaussian(vec![c(0.3, -0.2)]);
        let x = [c(0.4, 0.1)];
        assert_eq!(OpWord::identity(1).apply(&f, &x), f.eval(&x));
    }
}
