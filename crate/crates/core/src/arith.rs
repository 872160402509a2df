//! Overflow-checked `i64` helpers and exact integer division.
//!
//! Every rational quantity in the crate is an integer ceiling or floor of a
//! quotient; none of them ever pass through floating point.

use crate::error::{Error, Result};

#[inline]
pub(crate) fn add(a: i64, b: i64) -> Result<i64> {
    a.checked_add(b).ok_or(Error::Overflow("addition"))
}

#[inline]
pub(crate) fn sub(a: i64, b: i64) -> Result<i64> {
    a.checked_sub(b).ok_or(Error::Overflow("subtraction"))
}

#[inline]
pub(crate) fn mul(a: i64, b: i64) -> Result<i64> {
    a.checked_mul(b).ok_or(Error::Overflow("multiplication"))
}

#[inline]
pub(crate) fn neg(a: i64) -> Result<i64> {
    a.checked_neg().ok_or(Error::Overflow("negation"))
}

pub(crate) fn pow(base: i64, exp: u32) -> Result<i64> {
    base.checked_pow(exp).ok_or(Error::Overflow("power"))
}

pub(crate) fn sum<I: IntoIterator<Item = i64>>(it: I) -> Result<i64> {
    it.into_iter().try_fold(0i64, add)
}

/// The unique integer `j` with `a <= b*j < a + b`, i.e. the ceiling of `a/b`.
///
/// Exact for negative numerators; `b` must be positive.
pub fn ceil_div(a: i64, b: i64) -> Result<i64> {
    if b <= 0 {
        return Err(Error::NonPositiveDivisor(b));
    }
    let q = a.div_euclid(b);
    Ok(if a.rem_euclid(b) == 0 { q } else { q + 1 })
}

/// Floor of `a/b` for positive `b`.
pub fn floor_div(a: i64, b: i64) -> Result<i64> {
    if b <= 0 {
        return Err(Error::NonPositiveDivisor(b));
    }
    Ok(a.div_euclid(b))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn ceil_div_examples() {
        assert_eq!(ceil_div(0, 6).unwrap(), 0);
        assert_eq!(ceil_div(7, 6).unwrap(), 2);
        assert_eq!(ceil_div(-7, 6).unwrap(), -1);
        assert_eq!(ceil_div(-6, 6).unwrap(), -1);
        assert_eq!(ceil_div(6, 6).unwrap(), 1);
        assert_eq!(ceil_div(i64::MIN, 1).unwrap(), i64::MIN);
    }

    #[test]
    fn non_positive_divisor_rejected() {
        assert_eq!(ceil_div(3, 0), Err(Error::NonPositiveDivisor(0)));
        assert_eq!(ceil_div(3, -2), Err(Error::NonPositiveDivisor(-2)));
        assert!(floor_div(3, 0).is_err());
    }

    #[test]
    fn floor_div_negative() {
        assert_eq!(floor_div(-1, 3).unwrap(), -1);
        assert_eq!(floor_div(-3, 3).unwrap(), -1);
        assert_eq!(floor_div(-4, 3).unwrap(), -2);
        assert_eq!(floor_div(5, 3).unwrap(), 1);
    }

    #[test]
    fn overflow_is_reported() {
        assert!(add(i64::MAX, 1).is_err());
        assert!(mul(i64::MAX / 2 + 1, 2).is_err());
        assert!(pow(64, 11).is_err());
    }

    proptest! {
        #[test]
        fn ceil_div_window(a in -1_000_000i64..1_000_000, b in 1i64..5_000) {
            let j = ceil_div(a, b).unwrap();
            prop_assert!(a <= b * j && b * j < a + b);
        }
    }
}
