//! Coefficient field abstraction.
//!
//! Every algorithm in the crate is written against [`Scalar`]. The exact
//! instance is [`BigRational`](num_rational::BigRational); `f64` is provided
//! for quick numeric experiments, where zero tests are literal and results
//! are only as good as the floating point arithmetic behind them.

use std::fmt::{Debug, Display};
use std::ops::Neg;

use num_bigint::{BigInt, Sign};
use num_rational::BigRational;
use num_traits::{Num, Signed, ToPrimitive, Zero};

pub trait Scalar:
    Clone + PartialEq + PartialOrd + Debug + Display + Num + Neg<Output = Self> + Send + Sync + 'static
{
    fn from_i64(n: i64) -> Self;

    /// Converts an exact rational; `None` if the value is not representable.
    fn from_rational(q: &BigRational) -> Option<Self>;

    /// A `k`-th root of `self` inside the field, if one exists.
    ///
    /// For even `k` and positive input the positive root is returned.
    fn nth_root(&self, k: u32) -> Option<Self>;

    /// Whether equality and zero tests are exact.
    fn is_exact() -> bool;

    fn pow_u(&self, k: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..k {
            acc = acc * self.clone();
        }
        acc
    }
}

fn exact_int_root(n: &BigInt, k: u32) -> Option<BigInt> {
    let neg = n.sign() == Sign::Minus;
    if neg && k.is_multiple_of(2) {
        return None;
    }
    let mag = n.abs();
    let r = mag.nth_root(k);
    if num_traits::pow(r.clone(), k as usize) == mag {
        Some(if neg { -r } else { r })
    } else {
        None
    }
}

impl Scalar for BigRational {
    fn from_i64(n: i64) -> Self {
        BigRational::from_integer(BigInt::from(n))
    }

    fn from_rational(q: &BigRational) -> Option<Self> {
        Some(q.clone())
    }

    fn nth_root(&self, k: u32) -> Option<Self> {
        if k == 0 {
            return None;
        }
        if self.is_zero() {
            return Some(Self::zero());
        }
        let num = exact_int_root(self.numer(), k)?;
        let den = exact_int_root(self.denom(), k)?;
        Some(BigRational::new(num, den))
    }

    fn is_exact() -> bool {
        true
    }
}

impl Scalar for f64 {
    fn from_i64(n: i64) -> Self {
        n as f64
    }

    fn from_rational(q: &BigRational) -> Option<Self> {
        q.to_f64()
    }

    fn nth_root(&self, k: u32) -> Option<Self> {
        if k == 0 {
            return None;
        }
        if *self < 0.0 {
            if k.is_multiple_of(2) {
                return None;
            }
            return Some(-(-self).powf(1.0 / k as f64));
        }
        Some(self.powf(1.0 / k as f64))
    }

    fn is_exact() -> bool {
        false
    }
}

/// Convenience constructor for exact rationals.
pub fn q(num: i64, den: i64) -> BigRational {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}
