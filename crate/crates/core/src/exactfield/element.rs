use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::{BigInt, Sign};
use num_integer::Roots;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::FieldError;

/// Radicand stored for elements with a zero surd coefficient.
pub const RATIONAL_SENTINEL: u64 = 2;

/// An exact element `a + b·√d` of a real quadratic field ℚ(√d), or of ℚ when `b = 0`.
///
/// The representation is canonical: rationals are reduced, the radicand is the
/// square-free part of whatever was supplied (with its square factor folded into
/// `b`), and rational values always carry [`RATIONAL_SENTINEL`]. Structural
/// equality is therefore value equality.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FieldElement {
    a: BigRational,
    b: BigRational,
    d: u64,
}

/// Binary field operation selector for [`field_arith`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Sub,
    Mul,
    Div,
}

/// Splits `d` into `(s, f)` with `d = s²·f` and `f` square-free.
pub(crate) fn square_free_split(d: u64) -> (u64, u64) {
    if d == 0 {
        return (0, 0);
    }
    let mut rest = d;
    let mut square = 1u64;
    let mut free = 1u64;
    let mut p = 2u64;
    // Every prime factor of the cofactor left after this loop exceeds cbrt(d),
    // so the cofactor is 1, p, p·q or p².
    while p.saturating_mul(p).saturating_mul(p) <= d && rest > 1 {
        if rest.is_multiple_of(p) {
            let mut e = 0u32;
            while rest.is_multiple_of(p) {
                rest /= p;
                e += 1;
            }
            square *= p.pow(e / 2);
            if e % 2 == 1 {
                free *= p;
            }
        }
        p += if p == 2 { 1 } else { 2 };
    }
    if rest > 1 {
        let r = rest.sqrt();
        if r * r == rest {
            square *= r;
        } else {
            free *= rest;
        }
    }
    (square, free)
}

impl FieldElement {
    /// Builds `a + b·√d`, folding square factors of `d` into `b`.
    ///
    /// Fails when `b ≠ 0` and `d` is a perfect square (including 0).
    pub fn new(a: BigRational, b: BigRational, d: u64) -> Result<Self, FieldError> {
        if b.is_zero() {
            return Ok(Self::rational(a));
        }
        let (square, free) = square_free_split(d);
        if free <= 1 {
            return Err(FieldError::PerfectSquare(d));
        }
        let b = b * BigRational::from_integer(BigInt::from(square));
        Ok(Self { a, b, d: free })
    }

    pub fn rational(a: BigRational) -> Self {
        Self {
            a,
            b: BigRational::zero(),
            d: RATIONAL_SENTINEL,
        }
    }

    pub fn integer(n: i64) -> Self {
        Self::rational(BigRational::from_integer(BigInt::from(n)))
    }

    /// `num/den` as a rational element. Panics when `den == 0`.
    pub fn ratio(num: i64, den: i64) -> Self {
        Self::rational(BigRational::new(BigInt::from(num), BigInt::from(den)))
    }

    /// `√d`.
    pub fn sqrt(d: u64) -> Result<Self, FieldError> {
        Self::new(BigRational::zero(), BigRational::one(), d)
    }

    /// `2^-k` as a rational element.
    pub fn pow2_neg(k: u32) -> Self {
        Self::rational(BigRational::new(BigInt::one(), BigInt::one() << k))
    }

    pub fn zero() -> Self {
        Self::integer(0)
    }

    pub fn one() -> Self {
        Self::integer(1)
    }

    pub fn a(&self) -> &BigRational {
        &self.a
    }

    pub fn b(&self) -> &BigRational {
        &self.b
    }

    /// The radicand, or `None` for rational values.
    pub fn radicand(&self) -> Option<u64> {
        if self.is_rational() {
            None
        } else {
            Some(self.d)
        }
    }

    /// The stored radicand, including the sentinel for rational values.
    pub fn raw_radicand(&self) -> u64 {
        self.d
    }

    pub fn is_rational(&self) -> bool {
        self.b.is_zero()
    }

    pub fn as_rational(&self) -> Option<&BigRational> {
        if self.is_rational() {
            Some(&self.a)
        } else {
            None
        }
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    /// The radicand shared by `self` and `other`, or `None` if both are rational.
    pub fn common_radicand(&self, other: &Self) -> Result<Option<u64>, FieldError> {
        match (self.radicand(), other.radicand()) {
            (Some(x), Some(y)) if x != y => Err(FieldError::RadicandMismatch(x, y)),
            (Some(x), _) | (_, Some(x)) => Ok(Some(x)),
            (None, None) => Ok(None),
        }
    }

    fn from_parts(a: BigRational, b: BigRational, d: u64) -> Self {
        if b.is_zero() {
            Self::rational(a)
        } else {
            Self { a, b, d }
        }
    }

    pub fn try_add(&self, other: &Self) -> Result<Self, FieldError> {
        let d = self.common_radicand(other)?.unwrap_or(RATIONAL_SENTINEL);
        Ok(Self::from_parts(&self.a + &other.a, &self.b + &other.b, d))
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self, FieldError> {
        let d = self.common_radicand(other)?.unwrap_or(RATIONAL_SENTINEL);
        Ok(Self::from_parts(&self.a - &other.a, &self.b - &other.b, d))
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self, FieldError> {
        let d = match self.common_radicand(other)? {
            None => return Ok(Self::rational(&self.a * &other.a)),
            Some(d) => d,
        };
        let dq = BigRational::from_integer(BigInt::from(d));
        let a = &self.a * &other.a + &self.b * &other.b * dq;
        let b = &self.a * &other.b + &self.b * &other.a;
        Ok(Self::from_parts(a, b, d))
    }

    /// Multiplicative inverse via the conjugate: `1/(a + b√d) = (a − b√d)/(a² − b²d)`.
    pub fn try_recip(&self) -> Result<Self, FieldError> {
        if self.is_zero() {
            return Err(FieldError::DivisionByZero);
        }
        if self.is_rational() {
            return Ok(Self::rational(self.a.recip()));
        }
        let dq = BigRational::from_integer(BigInt::from(self.d));
        let norm = &self.a * &self.a - &self.b * &self.b * dq;
        // norm ≠ 0 because d is not a square
        Ok(Self::from_parts(&self.a / &norm, -&self.b / &norm, self.d))
    }

    pub fn try_div(&self, other: &Self) -> Result<Self, FieldError> {
        self.common_radicand(other)?;
        self.try_mul(&other.try_recip()?)
    }

    /// Sign of the value, decided with rational arithmetic only.
    pub fn signum(&self) -> Ordering {
        let sa = rational_sign(&self.a);
        let sb = rational_sign(&self.b);
        match (sa, sb) {
            (s, Ordering::Equal) => s,
            (Ordering::Equal, s) => s,
            (x, y) if x == y => x,
            _ => {
                // opposite signs: the larger of a² and b²d wins (never equal, d non-square)
                let a2 = &self.a * &self.a;
                let b2d = &self.b * &self.b * BigRational::from_integer(BigInt::from(self.d));
                if a2 > b2d {
                    sa
                } else {
                    sb
                }
            }
        }
    }

    pub fn is_positive(&self) -> bool {
        self.signum() == Ordering::Greater
    }

    pub fn is_negative(&self) -> bool {
        self.signum() == Ordering::Less
    }

    pub fn abs(&self) -> Self {
        if self.is_negative() {
            -self
        } else {
            self.clone()
        }
    }

    /// Largest integer `m` with `m ≤ self`.
    pub fn floor(&self) -> BigInt {
        if self.is_rational() {
            return self.a.floor().to_integer();
        }
        let t = &self.b * &self.b * BigRational::from_integer(BigInt::from(self.d));
        // floor(√t) = isqrt(floor(t)) for t ≥ 0
        let s = t.floor().to_integer().sqrt();
        let surd_floor = if self.b.is_positive() { s } else { -s - 1 };
        let mut m = self.a.floor().to_integer() + surd_floor;
        while FieldElement::rational(BigRational::from_integer(m.clone())) > *self {
            m -= 1;
        }
        while FieldElement::rational(BigRational::from_integer(&m + 1)) <= *self {
            m += 1;
        }
        m
    }

    /// Decimal expansion truncated toward zero to exactly `places` fractional digits.
    pub fn to_decimal(&self, places: usize) -> String {
        let negative = self.is_negative();
        let scale = BigRational::from_integer(BigInt::from(10u32).pow(places as u32));
        let scaled = self.abs().mul_rational(&scale);
        let digits = scaled.floor().to_string();
        let mut out = String::new();
        if negative {
            out.push('-');
        }
        if places == 0 {
            out.push_str(&digits);
            return out;
        }
        let padded = format!("{:0>width$}", digits, width = places + 1);
        let (int_part, frac_part) = padded.split_at(padded.len() - places);
        out.push_str(int_part);
        out.push('.');
        out.push_str(frac_part);
        out
    }

    pub fn mul_rational(&self, q: &BigRational) -> Self {
        Self::from_parts(&self.a * q, &self.b * q, self.d)
    }

    pub fn add_rational(&self, q: &BigRational) -> Self {
        Self::from_parts(&self.a + q, self.b.clone(), self.d)
    }

    /// Rough `f64` value, for display-only purposes.
    pub fn approx_f64(&self) -> f64 {
        use num_traits::ToPrimitive;
        let a = self.a.to_f64().unwrap_or(f64::NAN);
        let b = self.b.to_f64().unwrap_or(f64::NAN);
        a + b * (self.d as f64).sqrt()
    }
}

fn rational_sign(q: &BigRational) -> Ordering {
    match q.numer().sign() {
        Sign::Minus => Ordering::Less,
        Sign::NoSign => Ordering::Equal,
        Sign::Plus => Ordering::Greater,
    }
}

/// Exact `x op y` within a shared quadratic field.
pub fn field_arith(
    x: &FieldElement,
    y: &FieldElement,
    op: ArithOp,
) -> Result<FieldElement, FieldError> {
    match op {
        ArithOp::Add => x.try_add(y),
        ArithOp::Sub => x.try_sub(y),
        ArithOp::Mul => x.try_mul(y),
        ArithOp::Div => x.try_div(y),
    }
}

/// Exact three-way comparison; fails only on mismatched radicands.
pub fn compare(x: &FieldElement, y: &FieldElement) -> Result<Ordering, FieldError> {
    Ok(x.try_sub(y)?.signum())
}

/// True iff `x` is rational. A `false` answer certifies irrationality because the
/// radicand of a normalized element is never a perfect square.
pub fn in_rationals(x: &FieldElement) -> bool {
    x.is_rational()
}

impl PartialOrd for FieldElement {
    /// `None` when the operands live in different quadratic fields.
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        compare(self, other).ok()
    }
}

impl From<BigRational> for FieldElement {
    fn from(q: BigRational) -> Self {
        Self::rational(q)
    }
}

impl From<i64> for FieldElement {
    fn from(n: i64) -> Self {
        Self::integer(n)
    }
}

impl Neg for FieldElement {
    type Output = FieldElement;
    fn neg(self) -> FieldElement {
        Self::from_parts(-self.a, -self.b, self.d)
    }
}

impl Neg for &FieldElement {
    type Output = FieldElement;
    fn neg(self) -> FieldElement {
        FieldElement::from_parts(-&self.a, -&self.b, self.d)
    }
}

// Operator sugar. These panic on mismatched radicands or division by zero, in the
// same way `Ratio` panics on a zero denominator; the `try_*` methods report errors.
macro_rules! forward_binop {
    ($imp:ident, $method:ident, $checked:ident) => {
        impl $imp<&FieldElement> for &FieldElement {
            type Output = FieldElement;
            fn $method(self, rhs: &FieldElement) -> FieldElement {
                match self.$checked(rhs) {
                    Ok(v) => v,
                    Err(e) => panic!("{}", e),
                }
            }
        }
        impl $imp<FieldElement> for FieldElement {
            type Output = FieldElement;
            fn $method(self, rhs: FieldElement) -> FieldElement {
                (&self).$method(&rhs)
            }
        }
        impl $imp<&FieldElement> for FieldElement {
            type Output = FieldElement;
            fn $method(self, rhs: &FieldElement) -> FieldElement {
                (&self).$method(rhs)
            }
        }
        impl $imp<FieldElement> for &FieldElement {
            type Output = FieldElement;
            fn $method(self, rhs: FieldElement) -> FieldElement {
                self.$method(&rhs)
            }
        }
    };
}

forward_binop!(Add, add, try_add);
forward_binop!(Sub, sub, try_sub);
forward_binop!(Mul, mul, try_mul);
forward_binop!(Div, div, try_div);

impl std::iter::Sum for FieldElement {
    fn sum<I: Iterator<Item = FieldElement>>(iter: I) -> Self {
        iter.fold(FieldElement::zero(), |acc, x| acc + x)
    }
}

/// Renders a rational as `p` or `p/q`.
pub fn format_rational(q: &BigRational) -> String {
    if q.denom().is_one() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

impl fmt::Display for FieldElement {
    /// Output follows the c-spec grammar, so it parses back to the same value.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_rational() {
            write!(f, "{}", format_rational(&self.a))
        } else {
            write!(
                f,
                "{}+{}*sqrt({})",
                format_rational(&self.a),
                format_rational(&self.b),
                self.d
            )
        }
    }
}
