//! The q-exponential and the compact factor (x;q²)_∞ of S.

use crate::coeff::Coeff;
use crate::error::{QweylError, Result};
use crate::series::WeylSeries;

fn nilpotent_low<C: Coeff>(x: &WeylSeries<C>) -> Result<Option<i64>> {
    if !x.constant_term().is_zero() {
        return Err(QweylError::NonNilpotentConstantTerm(format!("constant term {:?}", x.constant_term())));
    }
    match x.low_degree() {
        Some(l) if l < 1 => Err(QweylError::NonNilpotentConstantTerm(format!("term of degree {l}"))),
        l => Ok(l),
    }
}

/// Σ_n c_n xⁿ up to degree k.
fn power_series<C: Coeff>(x: &WeylSeries<C>, k: i64, coeff: impl Fn(usize) -> C) -> Result<WeylSeries<C>> {
    let alg = x.algebra().clone();
    let k = k.min(x.order());
    let mut acc = WeylSeries::one(&alg);
    let Some(low) = nilpotent_low(x)? else {
        return Ok(acc.truncate(k));
    };
    let x = x.truncate(k);
    let mut power = WeylSeries::one(&alg);
    for n in 1..=(k.max(0) / low) as usize {
        power = (&power * &x).truncate(k);
        acc = acc + power.scale(&coeff(n));
    }
    Ok(acc.truncate(k))
}

/// Σ_{n} xⁿ/(q²;q²)_n = 1/(x;q²)_∞, truncated at degree k.
pub fn qexp<C: Coeff>(x: &WeylSeries<C>, k: i64) -> Result<WeylSeries<C>> {
    let alg = x.algebra().clone();
    power_series(x, k, |n| C::one() / alg.q2_pochhammer(n))
}

/// S(x) = (x;q²)_∞ as the inverse of the q-exponential.
pub fn compact_s<C: Coeff>(x: &WeylSeries<C>, k: i64) -> Result<WeylSeries<C>> {
    qexp(x, k)?.inverse()
}

/// S⁻¹(x) = qexp(x).
pub fn compact_s_inv<C: Coeff>(x: &WeylSeries<C>, k: i64) -> Result<WeylSeries<C>> {
    qexp(x, k)
}

/// (x;q²)_∞ from Euler's expansion Σ (-1)ⁿ q^{n(n-1)} xⁿ/(q²;q²)_n.
pub fn compact_s_euler<C: Coeff>(x: &WeylSeries<C>, k: i64) -> Result<WeylSeries<C>> {
    let alg = x.algebra().clone();
    power_series(x, k, |n| {
        let sign = if n % 2 == 0 { C::one() } else { -C::one() };
        sign * alg.qpow((n * (n - 1)) as i64) / alg.q2_pochhammer(n)
    })
}
