//! Coefficient rings.

use num_bigint::BigInt;
use num_complex::{Complex, Complex64};
use num_rational::BigRational;
use num_traits::{Num, ToPrimitive};
use std::fmt::Debug;
use std::ops::Neg;

pub type Rational = BigRational;
pub type GaussRational = Complex<BigRational>;

pub trait Coeff: Clone + PartialEq + Debug + Send + Sync + Num + Neg<Output = Self> {
    /// Absolute value as a float, for reporting.
    fn magnitude(&self) -> f64;

    /// Largest magnitude still read as zero: 0 for exact rings.
    fn tolerance() -> f64 {
        0.0
    }
}

impl Coeff for BigRational {
    fn magnitude(&self) -> f64 {
        self.to_f64().map_or(f64::INFINITY, f64::abs)
    }
}

impl Coeff for GaussRational {
    fn magnitude(&self) -> f64 {
        self.re.magnitude().hypot(self.im.magnitude())
    }
}

impl Coeff for Complex64 {
    fn magnitude(&self) -> f64 {
        self.norm()
    }

    fn tolerance() -> f64 {
        1e-12
    }
}

/// n/d as an exact rational.
pub fn rat(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

/// The default deformation parameter q = 1/3.
pub fn default_q() -> BigRational {
    rat(1, 3)
}
