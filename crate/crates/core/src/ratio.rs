//! Checked 128-bit fractions for exact back-substitution.

use std::fmt;

use crate::error::{Error, Result};

/// A reduced fraction with positive denominator. Every operation is
/// overflow-checked and reports [`Error::Overflow`] instead of wrapping.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Ratio {
    num: i128,
    den: i128,
}

pub(crate) fn gcd_i128(mut a: i128, mut b: i128) -> i128 {
    a = a.abs();
    b = b.abs();
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

impl Ratio {
    pub const ZERO: Ratio = Ratio { num: 0, den: 1 };

    pub fn new(num: i128, den: i128) -> Result<Ratio> {
        if den == 0 {
            return Err(Error::Precondition("zero denominator".into()));
        }
        let g = gcd_i128(num, den).max(1);
        let sign = if den < 0 { -1 } else { 1 };
        Ok(Ratio {
            num: (num / g).checked_mul(sign).ok_or(Error::Overflow)?,
            den: (den / g).checked_mul(sign).ok_or(Error::Overflow)?,
        })
    }

    pub fn from_int(n: i128) -> Ratio {
        Ratio { num: n, den: 1 }
    }

    pub fn numer(&self) -> i128 {
        self.num
    }

    pub fn denom(&self) -> i128 {
        self.den
    }

    pub fn is_integer(&self) -> bool {
        self.den == 1
    }

    pub fn checked_sub(self, other: Ratio) -> Result<Ratio> {
        let g = gcd_i128(self.den, other.den);
        let l = other.den / g;
        let r = self.den / g;
        let num = self
            .num
            .checked_mul(l)
            .and_then(|a| other.num.checked_mul(r).and_then(|b| a.checked_sub(b)))
            .ok_or(Error::Overflow)?;
        let den = self.den.checked_mul(l).ok_or(Error::Overflow)?;
        Ratio::new(num, den)
    }

    pub fn checked_mul_int(self, k: i128) -> Result<Ratio> {
        let g = gcd_i128(k, self.den).max(1);
        let num = self.num.checked_mul(k / g).ok_or(Error::Overflow)?;
        Ratio::new(num, self.den / g)
    }

    pub fn checked_div_int(self, k: i128) -> Result<Ratio> {
        let g = gcd_i128(self.num, k).max(1);
        let den = self.den.checked_mul(k / g).ok_or(Error::Overflow)?;
        Ratio::new(self.num / g, den)
    }
}

impl fmt::Display for Ratio {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den == 1 {
            write!(f, "{}", self.num)
        } else {
            write!(f, "{}/{}", self.num, self.den)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn arithmetic() {
        let half = Ratio::new(2, -4).unwrap();
        assert_eq!((half.numer(), half.denom()), (-1, 2));
        let third = Ratio::new(1, 3).unwrap();
        assert_eq!(third.checked_sub(half).unwrap(), Ratio::new(5, 6).unwrap());
        assert_eq!(third.checked_mul_int(6).unwrap(), Ratio::from_int(2));
        assert_eq!(Ratio::from_int(3).checked_div_int(6).unwrap(), Ratio::new(1, 2).unwrap());
        assert!(Ratio::new(1, 0).is_err());
    }

    #[test]
    fn overflow_is_reported() {
        let big = Ratio::from_int(i128::MAX / 2);
        assert_eq!(big.checked_mul_int(3), Err(Error::Overflow));
        let tiny = Ratio::new(1, i128::MAX).unwrap();
        assert_eq!(tiny.checked_sub(Ratio::new(1, i128::MAX - 1).unwrap()), Err(Error::Overflow));
    }
}
