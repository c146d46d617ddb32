//! Normal-ordered series g₁^{a₁}…g_k^{a_k}, known exactly up to a degree.

use crate::algebra::WeylAlgebra;
use crate::coeff::Coeff;
use crate::error::{QweylError, Result};
use rayon::prelude::*;
use std::collections::{BTreeMap, HashMap};
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

pub type Exponents = Vec<i32>;

/// Terms of degree ≤ `order` are exact; nothing is known above it.
#[derive(Clone, Debug)]
pub struct WeylSeries<C> {
    alg: Arc<WeylAlgebra<C>>,
    terms: BTreeMap<Exponents, C>,
    order: i64,
}

impl<C: Coeff> PartialEq for WeylSeries<C> {
    fn eq(&self, other: &Self) -> bool {
        self.order == other.order && self.terms == other.terms
    }
}

impl<C: Coeff> WeylSeries<C> {
    fn build(alg: &Arc<WeylAlgebra<C>>, terms: BTreeMap<Exponents, C>, order: i64) -> Self {
        let order = order.min(alg.order());
        let terms = terms
            .into_iter()
            .filter(|(e, c)| !c.is_zero() && alg.degree(e) <= order)
            .collect();
        Self {
            alg: alg.clone(),
            terms,
            order,
        }
    }

    pub fn zero(alg: &Arc<WeylAlgebra<C>>) -> Self {
        Self::build(alg, BTreeMap::new(), alg.order())
    }

    pub fn constant(alg: &Arc<WeylAlgebra<C>>, c: C) -> Self {
        Self::build(alg, BTreeMap::from([(vec![0; alg.rank()], c)]), alg.order())
    }

    pub fn one(alg: &Arc<WeylAlgebra<C>>) -> Self {
        Self::constant(alg, C::one())
    }

    pub fn monomial(alg: &Arc<WeylAlgebra<C>>, e: Exponents, c: C) -> Result<Self> {
        if e.len() != alg.rank() {
            return Err(QweylError::Invalid(format!("exponent vector of length {}", e.len())));
        }
        let degree = alg.degree(&e);
        if degree > alg.order() {
            return Err(QweylError::TruncationOverflow {
                degree,
                order: alg.order(),
            });
        }
        Ok(Self::build(alg, BTreeMap::from([(e, c)]), alg.order()))
    }

    /// g_i^power.
    pub fn generator(alg: &Arc<WeylAlgebra<C>>, i: usize, power: i32) -> Result<Self> {
        if i >= alg.rank() {
            return Err(QweylError::Invalid(format!("no generator {i}")));
        }
        let mut e = vec![0; alg.rank()];
        e[i] = power;
        Self::monomial(alg, e, C::one())
    }

    pub fn algebra(&self) -> &Arc<WeylAlgebra<C>> {
        &self.alg
    }

    pub fn order(&self) -> i64 {
        self.order
    }

    pub fn terms(&self) -> &BTreeMap<Exponents, C> {
        &self.terms
    }

    pub fn coeff(&self, e: &[i32]) -> C {
        self.terms.get(e).cloned().unwrap_or_else(C::zero)
    }

    pub fn constant_term(&self) -> C {
        self.coeff(&vec![0; self.alg.rank()])
    }

    /// Lowest degree present, None for the zero series.
    pub fn low_degree(&self) -> Option<i64> {
        self.terms.keys().map(|e| self.alg.degree(e)).min()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Zero exactly, or within the float tolerance of the coefficient ring.
    pub fn vanishes(&self) -> bool {
        self.max_magnitude() <= C::tolerance()
    }

    pub fn max_magnitude(&self) -> f64 {
        self.terms.values().map(Coeff::magnitude).fold(0.0, f64::max)
    }

    /// Drops everything above degree k.
    pub fn truncate(&self, k: i64) -> Self {
        Self::build(&self.alg, self.terms.clone(), self.order.min(k))
    }

    pub fn scale(&self, c: &C) -> Self {
        let terms = self.terms.iter().map(|(e, v)| (e.clone(), v.clone() * c.clone())).collect();
        Self::build(&self.alg, terms, self.order)
    }

    /// Splits by the power of generator i.
    pub fn strata(&self, i: usize) -> BTreeMap<i32, Self> {
        let mut out: BTreeMap<i32, BTreeMap<Exponents, C>> = BTreeMap::new();
        for (e, c) in &self.terms {
            out.entry(e[i]).or_default().insert(e.clone(), c.clone());
        }
        out.into_iter().map(|(p, t)| (p, Self::build(&self.alg, t, self.order))).collect()
    }

    fn check_same(&self, other: &Self) {
        assert!(
            Arc::ptr_eq(&self.alg, &other.alg) || *self.alg == *other.alg,
            "series from different algebras"
        );
    }

    pub fn add_series(&self, other: &Self) -> Self {
        self.check_same(other);
        let mut terms = self.terms.clone();
        for (e, c) in &other.terms {
            let slot = terms.entry(e.clone()).or_insert_with(C::zero);
            *slot = slot.clone() + c.clone();
        }
        Self::build(&self.alg, terms, self.order.min(other.order))
    }

    pub fn neg_series(&self) -> Self {
        let terms = self.terms.iter().map(|(e, c)| (e.clone(), -c.clone())).collect();
        Self::build(&self.alg, terms, self.order)
    }

    /// Product, computed in parallel over the degree strata of the result.
    pub fn mul_series(&self, other: &Self) -> Self {
        self.check_same(other);
        let alg = &self.alg;
        let order = match (self.low_degree(), other.low_degree()) {
            (Some(la), Some(lb)) => (self.order + lb).min(other.order + la),
            (None, Some(la)) => self.order + la,
            (Some(lb), None) => other.order + lb,
            (None, None) => self.order.min(other.order),
        }
        .min(alg.order());
        let (ba, bb) = (self.by_degree(), other.by_degree());
        let mut targets: Vec<i64> = ba
            .keys()
            .flat_map(|da| bb.keys().map(move |db| da + db))
            .filter(|&d| d <= order)
            .collect();
        targets.sort_unstable();
        targets.dedup();
        let strata: Vec<BTreeMap<Exponents, C>> = targets
            .par_iter()
            .map(|&d| {
                let mut out: BTreeMap<Exponents, C> = BTreeMap::new();
                let mut powers: HashMap<i64, C> = HashMap::new();
                for (da, ta) in &ba {
                    let Some(tb) = bb.get(&(d - da)) else { continue };
                    for (ea, ca) in ta {
                        for (eb, cb) in tb {
                            let e: Exponents = ea.iter().zip(eb.iter()).map(|(x, y)| x + y).collect();
                            let p = alg.phase(ea, eb);
                            let qp = powers.entry(p).or_insert_with(|| alg.qpow(p)).clone();
                            let v = (*ca).clone() * (*cb).clone() * qp;
                            let slot = out.entry(e).or_insert_with(C::zero);
                            *slot = slot.clone() + v;
                        }
                    }
                }
                out
            })
            .collect();
        let mut terms = BTreeMap::new();
        for s in strata {
            terms.extend(s);
        }
        Self::build(alg, terms, order)
    }

    fn by_degree(&self) -> BTreeMap<i64, Vec<(&Exponents, &C)>> {
        let mut m: BTreeMap<i64, Vec<(&Exponents, &C)>> = BTreeMap::new();
        for (e, c) in &self.terms {
            m.entry(self.alg.degree(e)).or_default().push((e, c));
        }
        m
    }

    /// (c₀ + r)⁻¹ = c₀⁻¹ Σ (-r/c₀)ⁿ; r must have strictly positive degree.
    pub fn inverse(&self) -> Result<Self> {
        let c0 = self.constant_term();
        if c0.is_zero() {
            return Err(QweylError::NotInvertible("zero constant term".into()));
        }
        let rest = self.sub_series(&Self::constant(&self.alg, c0.clone()));
        let inv0 = C::one() / c0;
        let Some(low) = rest.low_degree() else {
            return Ok(Self::constant(&self.alg, inv0).truncate(self.order));
        };
        if low < 1 {
            return Err(QweylError::NotInvertible(format!(
                "non-constant part has degree {low} < 1"
            )));
        }
        let step = rest.scale(&(-inv0.clone()));
        let mut power = Self::one(&self.alg);
        let mut acc = Self::one(&self.alg);
        for _ in 0..self.order.min(self.alg.order()).max(0) / low {
            power = power.mul_series(&step);
            acc = acc.add_series(&power);
        }
        Ok(acc.scale(&inv0).truncate(self.order))
    }

    pub fn sub_series(&self, other: &Self) -> Self {
        self.add_series(&other.neg_series())
    }
}

macro_rules! binop {
    ($tr:ident, $m:ident, $f:ident) => {
        impl<C: Coeff> $tr<&WeylSeries<C>> for &WeylSeries<C> {
            type Output = WeylSeries<C>;
            fn $m(self, rhs: &WeylSeries<C>) -> WeylSeries<C> {
                self.$f(rhs)
            }
        }
        impl<C: Coeff> $tr<WeylSeries<C>> for WeylSeries<C> {
            type Output = WeylSeries<C>;
            fn $m(self, rhs: WeylSeries<C>) -> WeylSeries<C> {
                self.$f(&rhs)
            }
        }
        impl<C: Coeff> $tr<&WeylSeries<C>> for WeylSeries<C> {
            type Output = WeylSeries<C>;
            fn $m(self, rhs: &WeylSeries<C>) -> WeylSeries<C> {
                self.$f(rhs)
            }
        }
        impl<C: Coeff> $tr<WeylSeries<C>> for &WeylSeries<C> {
            type Output = WeylSeries<C>;
            fn $m(self, rhs: WeylSeries<C>) -> WeylSeries<C> {
                self.$f(&rhs)
            }
        }
    };
}

binop!(Add, add, add_series);
binop!(Sub, sub, sub_series);
binop!(Mul, mul, mul_series);

impl<C: Coeff> Neg for WeylSeries<C> {
    type Output = Self;
    fn neg(self) -> Self {
        self.neg_series()
    }
}

impl<C: Coeff> Neg for &WeylSeries<C> {
    type Output = WeylSeries<C>;
    fn neg(self) -> WeylSeries<C> {
        self.neg_series()
    }
}

/// Normal form of g_{i₁}^{p₁} g_{i₂}^{p₂} ⋯ from the θ-bilinear count.
pub fn normal_order<C: Coeff>(alg: &Arc<WeylAlgebra<C>>, word: &[(usize, i32)]) -> Result<WeylSeries<C>> {
    let mut e = vec![0; alg.rank()];
    let mut phase = 0i64;
    for &(i, p) in word {
        if i >= alg.rank() {
            return Err(QweylError::Invalid(format!("no generator {i}")));
        }
        let mut b = vec![0; alg.rank()];
        b[i] = p;
        phase += alg.phase(&e, &b);
        e[i] += p;
    }
    WeylSeries::monomial(alg, e, alg.qpow(phase))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coeff::{default_q, rat, Rational};

    #[test]
    fn empty_word_is_one() {
        let alg = WeylAlgebra::pair(1, default_q(), 4).unwrap();
        assert_eq!(normal_order(&alg, &[]).unwrap(), WeylSeries::one(&alg));
    }

    #[test]
    fn overflow_reported() {
        let alg = WeylAlgebra::pair(1, default_q(), 2).unwrap();
        let r = normal_order(&alg, &[(0, 2), (1, 1)]);
        assert_eq!(r, Err(QweylError::TruncationOverflow { degree: 3, order: 2 }));
    }

    #[test]
    fn inverse_of_one_minus_x() {
        let alg = WeylAlgebra::pair(1, default_q(), 6).unwrap();
        let x = WeylSeries::generator(&alg, 0, 1).unwrap();
        let u = WeylSeries::one(&alg) - &x;
        let inv = u.inverse().unwrap();
        for n in 0..=6 {
            assert_eq!(inv.coeff(&[n, 0]), rat(1, 1));
        }
        assert_eq!(&u * &inv, WeylSeries::one(&alg));
    }

    #[test]
    fn order_tracks_negative_degrees() {
        let alg = WeylAlgebra::<Rational>::new(vec![vec![0, 0], vec![0, 0]], vec![1, -1], default_q(), 5).unwrap();
        let a = WeylSeries::generator(&alg, 0, 1).unwrap();
        let b = WeylSeries::generator(&alg, 1, 1).unwrap();
        assert_eq!((&a * &b).order(), 4);
    }
}
