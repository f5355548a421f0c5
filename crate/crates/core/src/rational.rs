//! Scalar type and small constructors.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

/// Exact fraction with an arbitrary-precision numerator and a positive,
/// coprime denominator.
pub type Rational = BigRational;

pub fn int(value: i64) -> Rational {
    Rational::from_integer(BigInt::from(value))
}

/// `num / den`, reduced. Panics when `den == 0`.
pub fn ratio(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

pub fn zero() -> Rational {
    Rational::zero()
}

pub fn one() -> Rational {
    Rational::one()
}

pub fn half() -> Rational {
    ratio(1, 2)
}

pub fn is_positive(value: &Rational) -> bool {
    value > &Rational::zero()
}

pub fn is_negative(value: &Rational) -> bool {
    value < &Rational::zero()
}

/// Exact text form: `p/q`, or `p` for integers.
pub fn to_text(value: &Rational) -> String {
    value.to_string()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn stored_reduced_with_positive_denominator() {
        let r = ratio(6, -4);
        assert_eq!(r.numer(), &BigInt::from(-3));
        assert_eq!(r.denom(), &BigInt::from(2));
    }

    #[test]
    fn text_form() {
        assert_eq!(to_text(&ratio(4, 2)), "2");
        assert_eq!(to_text(&ratio(3, 10)), "3/10");
        assert_eq!(to_text(&ratio(-1, 2)), "-1/2");
    }
}
