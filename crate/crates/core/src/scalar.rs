//! Rational scalars.
//!
//! `BigRational` keeps numerator and denominator coprime with a positive
//! denominator after every operation, so structural equality is value
//! equality.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

pub type Scalar = BigRational;

pub fn int(v: i64) -> Scalar {
    BigRational::from_integer(BigInt::from(v))
}

pub fn frac(n: i64, d: i64) -> Scalar {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

pub fn zero() -> Scalar {
    Scalar::zero()
}

pub fn one() -> Scalar {
    Scalar::one()
}

/// Parses `"n"` or `"n/d"`.
pub fn parse(s: &str) -> Option<Scalar> {
    let s = s.trim();
    if let Some((n, d)) = s.split_once('/') {
        let n: BigInt = n.trim().parse().ok()?;
        let d: BigInt = d.trim().parse().ok()?;
        if d.is_zero() {
            return None;
        }
        Some(BigRational::new(n, d))
    } else {
        let n: BigInt = s.parse().ok()?;
        Some(BigRational::from_integer(n))
    }
}

/// Integer value if the scalar is integral and fits in an `i64`.
pub fn to_i64(s: &Scalar) -> Option<i64> {
    if !s.is_integer() {
        return None;
    }
    i64::try_from(s.to_integer()).ok()
}

pub fn is_negative(s: &Scalar) -> bool {
    s.is_negative()
}

/// Number of decimal digits of numerator plus denominator; a rough size measure.
pub fn height(s: &Scalar) -> u64 {
    s.numer().bits() + s.denom().bits()
}

/// Binomial coefficient `C(n, k)` for integer `n` (possibly negative) and
/// `k >= 0`, as a rational.
pub fn binomial(n: i64, k: i64) -> Scalar {
    if k < 0 {
        return zero();
    }
    let mut acc = one();
    for i in 0..k {
        acc = acc * int(n - i) / int(i + 1);
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_form() {
        assert_eq!(frac(2, 4), frac(1, 2));
        assert_eq!(frac(3, -6), frac(-1, 2));
        assert_eq!(*frac(3, -6).denom(), BigInt::from(2));
    }

    #[test]
    fn parses_fractions() {
        assert_eq!(parse("-3/6"), Some(frac(-1, 2)));
        assert_eq!(parse("7"), Some(int(7)));
        assert_eq!(parse("1/0"), None);
        assert_eq!(parse("x"), None);
    }

    #[test]
    fn binomials() {
        assert_eq!(binomial(5, 2), int(10));
        assert_eq!(binomial(2, 3), int(0));
        assert_eq!(binomial(-1, 2), int(1));
    }
}
