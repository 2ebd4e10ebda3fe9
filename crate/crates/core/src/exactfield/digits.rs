use std::cmp::Ordering;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive};

use super::element::{compare, FieldElement};
use super::FieldError;

/// Lower end of the window `(3/8, 5/8)` that targets must lie in.
pub fn window_lo() -> BigRational {
    BigRational::new(BigInt::from(3), BigInt::from(8))
}

pub fn window_hi() -> BigRational {
    BigRational::new(BigInt::from(5), BigInt::from(8))
}

pub(crate) fn pow4_neg(k: usize) -> BigRational {
    BigRational::new(BigInt::one(), BigInt::one() << (2 * k))
}

/// The first `n` base-4 digits of `c − 3/8`, together with the bracket
/// `[lo, hi)` they pin `c` to.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DigitPrefix {
    digits: Vec<u8>,
    lo: BigRational,
    hi: BigRational,
}

impl DigitPrefix {
    /// Builds a prefix from explicit digits. The leading digit must be 0, since
    /// every target in the window has `c − 3/8 < 1/4`.
    pub fn from_digits(digits: Vec<u8>) -> Result<Self, FieldError> {
        if digits.is_empty() {
            return Err(FieldError::ZeroCount);
        }
        if let Some((i, &d)) = digits.iter().enumerate().find(|(_, &d)| d > 3) {
            return Err(FieldError::InvalidPrefix(format!(
                "digit {} at position {} is not base 4",
                d,
                i + 1
            )));
        }
        if digits[0] != 0 {
            return Err(FieldError::InvalidPrefix("leading digit must be 0".into()));
        }
        let mut lo = window_lo();
        for (j, &d) in digits.iter().enumerate() {
            lo += pow4_neg(j + 1) * BigInt::from(d);
        }
        let hi = &lo + pow4_neg(digits.len());
        Ok(Self { digits, lo, hi })
    }

    pub fn digits(&self) -> &[u8] {
        &self.digits
    }

    pub fn len(&self) -> usize {
        self.digits.len()
    }

    pub fn is_empty(&self) -> bool {
        self.digits.is_empty()
    }

    /// The `k`-th digit, 1-based as in `c = 3/8 + Σ d_k 4^-k`.
    pub fn digit(&self, k: usize) -> Option<u8> {
        k.checked_sub(1).and_then(|i| self.digits.get(i)).copied()
    }

    pub fn lo(&self) -> &BigRational {
        &self.lo
    }

    pub fn hi(&self) -> &BigRational {
        &self.hi
    }

    /// Shortens the prefix to its first `n` digits.
    pub fn truncated(&self, n: usize) -> Result<Self, FieldError> {
        Self::from_digits(self.digits[..n.min(self.digits.len())].to_vec())
    }
}

/// Checks that `3/8 < c < 5/8`.
pub fn check_window(c: &FieldElement) -> Result<(), FieldError> {
    let lo = FieldElement::rational(window_lo());
    let hi = FieldElement::rational(window_hi());
    if compare(c, &lo)? != Ordering::Greater || compare(c, &hi)? != Ordering::Less {
        return Err(FieldError::OutOfWindow(c.to_string()));
    }
    Ok(())
}

/// Extracts `count` base-4 digits of `c − 3/8` by exact floor operations.
pub fn extract_digits(c: &FieldElement, count: usize) -> Result<DigitPrefix, FieldError> {
    if count == 0 {
        return Err(FieldError::ZeroCount);
    }
    check_window(c)?;
    let four = BigRational::from_integer(BigInt::from(4));
    let mut rest = c.add_rational(&-window_lo());
    let mut digits = Vec::with_capacity(count);
    for _ in 0..count {
        rest = rest.mul_rational(&four);
        let d = rest.floor();
        // 0 ≤ rest < 4 holds on entry, so d is a base-4 digit
        rest = rest.add_rational(&-BigRational::from_integer(d.clone()));
        digits.push(d.to_u8().expect("base-4 digit"));
    }
    debug_assert!(!rest.is_negative() && rest < FieldElement::one());
    DigitPrefix::from_digits(digits)
}

/// The bracket `(lo, hi)` with `hi − lo = 4^-n`.
pub fn digits_to_value(p: &DigitPrefix) -> (BigRational, BigRational) {
    (p.lo.clone(), p.hi.clone())
}

impl DigitPrefix {
    /// Whether `x` lies in `[lo, hi)`.
    pub fn brackets(&self, x: &FieldElement) -> bool {
        let lo = FieldElement::rational(self.lo.clone());
        let hi = FieldElement::rational(self.hi.clone());
        matches!(compare(&lo, x), Ok(Ordering::Less | Ordering::Equal))
            && matches!(compare(x, &hi), Ok(Ordering::Less))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactfield::parse_cspec;

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(BigInt::from(n), BigInt::from(d))
    }

    #[test]
    fn rational_target_terminates() {
        let p = extract_digits(&FieldElement::ratio(7, 16), 3).unwrap();
        assert_eq!(p.digits(), &[0, 1, 0]);
        assert_eq!(p.lo(), &q(7, 16));
        assert_eq!(p.hi(), &(q(7, 16) + q(1, 64)));
    }

    #[test]
    fn sqrt2_over_3_digits() {
        let c = parse_cspec("0+1/3*sqrt(2)").unwrap();
        let p = extract_digits(&c, 5).unwrap();
        assert_eq!(p.digits(), &[0, 1, 2, 0, 2]);
        assert!(p.brackets(&c));
    }

    #[test]
    fn out_of_window() {
        assert!(matches!(
            extract_digits(&FieldElement::ratio(3, 4), 4),
            Err(FieldError::OutOfWindow(_))
        ));
        assert!(matches!(
            extract_digits(&FieldElement::ratio(3, 8), 4),
            Err(FieldError::OutOfWindow(_))
        ));
        assert!(matches!(
            extract_digits(&FieldElement::ratio(5, 8), 4),
            Err(FieldError::OutOfWindow(_))
        ));
        assert_eq!(
            extract_digits(&FieldElement::ratio(1, 2), 0),
            Err(FieldError::ZeroCount)
        );
    }

    #[test]
    fn brackets_from_digits() {
        let p = DigitPrefix::from_digits(vec![0, 1]).unwrap();
        assert_eq!(digits_to_value(&p), (q(7, 16), q(1, 2)));
        let p = DigitPrefix::from_digits(vec![0, 1, 0, 2, 3]).unwrap();
        assert_eq!(digits_to_value(&p), (q(459, 1024), q(460, 1024)));
        // one digit pins c only to the whole window: width 4^-1
        let p = DigitPrefix::from_digits(vec![0]).unwrap();
        assert_eq!(digits_to_value(&p), (q(3, 8), q(5, 8)));
    }

    #[test]
    fn invalid_prefixes() {
        assert!(DigitPrefix::from_digits(vec![1, 0]).is_err());
        assert!(DigitPrefix::from_digits(vec![0, 4]).is_err());
        assert_eq!(DigitPrefix::from_digits(vec![]), Err(FieldError::ZeroCount));
    }

    #[test]
    fn one_based_digit_access() {
        let p = DigitPrefix::from_digits(vec![0, 1, 0, 2, 3]).unwrap();
        assert_eq!(p.digit(1), Some(0));
        assert_eq!(p.digit(5), Some(3));
        assert_eq!(p.digit(0), None);
        assert_eq!(p.digit(6), None);
    }
}
