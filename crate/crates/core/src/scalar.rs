use std::fmt;
use std::ops::Neg;

use num_bigint::BigInt;
use num_traits::{Num, Zero};

use crate::{Error, Rational, Result};

/// Coefficient field of the polynomial kernel.
///
/// Any commutative field implementing the `num-traits` arithmetic traits
/// qualifies. The verification code instantiates it with [`Rational`];
/// small tests also run with `Ratio<i64>`.
pub trait Field:
    Clone + PartialEq + fmt::Debug + fmt::Display + Num + Neg<Output = Self> + Send + Sync
{
    fn inv(&self) -> Self {
        Self::one() / self.clone()
    }
}

impl<T> Field for T where
    T: Clone + PartialEq + fmt::Debug + fmt::Display + Num + Neg<Output = T> + Send + Sync
{
}

/// Builds `num/den` in lowest terms with a positive denominator.
pub fn make_rational(num: impl Into<BigInt>, den: impl Into<BigInt>) -> Result<Rational> {
    let den = den.into();
    if den.is_zero() {
        return Err(Error::ZeroDenominator);
    }
    Ok(Rational::new(num.into(), den))
}

pub fn int(v: i64) -> Rational {
    Rational::from_integer(BigInt::from(v))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reduces_and_normalizes_sign() {
        assert_eq!(make_rational(2, 4).unwrap(), make_rational(1, 2).unwrap());
        let z = make_rational(0, 5).unwrap();
        assert_eq!(z.numer(), &BigInt::from(0));
        assert_eq!(z.denom(), &BigInt::from(1));
        let h = make_rational(-3, -6).unwrap();
        assert_eq!(h.numer(), &BigInt::from(1));
        assert_eq!(h.denom(), &BigInt::from(2));
        let neg = make_rational(3, -6).unwrap();
        assert_eq!(neg.numer(), &BigInt::from(-1));
        assert_eq!(neg.denom(), &BigInt::from(2));
    }

    #[test]
    fn zero_denominator_is_an_error() {
        assert_eq!(make_rational(1, 0), Err(Error::ZeroDenominator));
    }
}
