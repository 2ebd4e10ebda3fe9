//! Parser for c-specs: `rat ( '+' rat '*sqrt(' uint ')' )?`, where
//! `rat = int | int '/' uint` and `int` may carry a leading `-`.
//! The shorthand `rat '*sqrt(' uint ')'` (zero rational part) is also accepted.
//! Whitespace is ignored everywhere.

use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::Zero;

use super::element::{square_free_split, FieldElement};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ParseErrorKind {
    Expected(&'static str),
    TrailingInput,
    ZeroDenominator,
    PerfectSquare(u64),
    RadicandTooLarge,
}

/// A c-spec parse failure at a byte offset of the input.
#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub struct ParseError {
    pub offset: usize,
    pub kind: ParseErrorKind,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "at byte {}: ", self.offset)?;
        match &self.kind {
            ParseErrorKind::Expected(what) => write!(f, "expected {}", what),
            ParseErrorKind::TrailingInput => write!(f, "unexpected trailing input"),
            ParseErrorKind::ZeroDenominator => write!(f, "zero denominator"),
            ParseErrorKind::PerfectSquare(d) => {
                write!(f, "radicand {} is a perfect square", d)
            }
            ParseErrorKind::RadicandTooLarge => write!(f, "radicand does not fit in 64 bits"),
        }
    }
}

struct Cursor<'a> {
    src: &'a [u8],
    pos: usize,
}

impl<'a> Cursor<'a> {
    fn new(text: &'a str) -> Self {
        Self {
            src: text.as_bytes(),
            pos: 0,
        }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn error(&self, kind: ParseErrorKind) -> ParseError {
        ParseError {
            offset: self.pos,
            kind,
        }
    }

    fn eat(&mut self, byte: u8) -> bool {
        if self.peek() == Some(byte) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect_word(&mut self, word: &'static str) -> Result<(), ParseError> {
        for &b in word.as_bytes() {
            if !self.eat(b) {
                return Err(self.error(ParseErrorKind::Expected(word)));
            }
        }
        Ok(())
    }

    fn uint(&mut self) -> Result<BigUint, ParseError> {
        self.skip_ws();
        let start = self.pos;
        let mut value = BigUint::zero();
        while let Some(&b) = self.src.get(self.pos) {
            if b.is_ascii_digit() {
                value = value * 10u32 + u32::from(b - b'0');
                self.pos += 1;
            } else if b.is_ascii_whitespace() {
                // digits may be separated by whitespace only if more digits follow
                let save = self.pos;
                self.skip_ws();
                if !matches!(self.src.get(self.pos), Some(c) if c.is_ascii_digit()) {
                    self.pos = save;
                    break;
                }
            } else {
                break;
            }
        }
        if self.pos == start {
            return Err(self.error(ParseErrorKind::Expected("digit")));
        }
        Ok(value)
    }

    fn int(&mut self) -> Result<BigInt, ParseError> {
        let negative = self.eat(b'-');
        let magnitude = BigInt::from(self.uint()?);
        Ok(if negative { -magnitude } else { magnitude })
    }

    fn rat(&mut self) -> Result<BigRational, ParseError> {
        let numer = self.int()?;
        if self.eat(b'/') {
            self.skip_ws();
            let at = self.pos;
            let denom = self.uint()?;
            if denom.is_zero() {
                return Err(ParseError {
                    offset: at,
                    kind: ParseErrorKind::ZeroDenominator,
                });
            }
            Ok(BigRational::new(numer, BigInt::from(denom)))
        } else {
            Ok(BigRational::from_integer(numer))
        }
    }

    fn finish(&mut self) -> Result<(), ParseError> {
        if self.peek().is_some() {
            Err(self.error(ParseErrorKind::TrailingInput))
        } else {
            Ok(())
        }
    }
}

/// Parses a bare rational `int` or `int/uint`.
pub fn parse_rational(text: &str) -> Result<BigRational, ParseError> {
    let mut cur = Cursor::new(text);
    let q = cur.rat()?;
    cur.finish()?;
    Ok(q)
}

/// Parses a c-spec into an exact, normalized [`FieldElement`].
pub fn parse_cspec(text: &str) -> Result<FieldElement, ParseError> {
    let mut cur = Cursor::new(text);
    let first = cur.rat()?;
    let (a, b) = if cur.peek() == Some(b'*') {
        (BigRational::zero(), first)
    } else if cur.eat(b'+') {
        (first, cur.rat()?)
    } else {
        cur.finish()?;
        return Ok(FieldElement::rational(first));
    };
    cur.expect_word("*sqrt(")?;
    cur.skip_ws();
    let at = cur.pos;
    let d = cur.uint()?;
    let d: u64 = d.try_into().map_err(|_| ParseError {
        offset: at,
        kind: ParseErrorKind::RadicandTooLarge,
    })?;
    cur.expect_word(")")?;
    cur.finish()?;
    if !b.is_zero() && square_free_split(d).1 <= 1 {
        return Err(ParseError {
            offset: at,
            kind: ParseErrorKind::PerfectSquare(d),
        });
    }
    // cannot fail: the perfect-square case was handled above
    Ok(FieldElement::new(a, b, d).expect("non-square radicand"))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn plain_rational() {
        assert_eq!(parse_cspec("3/8").unwrap(), FieldElement::ratio(3, 8));
        assert_eq!(parse_cspec(" -12 ").unwrap(), FieldElement::integer(-12));
    }

    #[test]
    fn surd_with_whitespace() {
        let x = parse_cspec("0 + 1/3 * sqrt( 2 )").unwrap();
        assert_eq!(
            x,
            FieldElement::sqrt(2)
                .unwrap()
                .mul_rational(&BigRational::new(1.into(), 3.into()))
        );
        assert_eq!(x.to_decimal(6), "0.471404");
    }

    #[test]
    fn perfect_square_rejected() {
        let err = parse_cspec("1/2*sqrt(4)").unwrap_err();
        assert_eq!(
            err,
            ParseError {
                offset: 9,
                kind: ParseErrorKind::PerfectSquare(4)
            }
        );
        assert_eq!(
            parse_cspec("1/3*sqrt(2)").unwrap(),
            parse_cspec("0+1/3*sqrt(2)").unwrap()
        );
        let err = parse_cspec("0+1/2*sqrt(4)").unwrap_err();
        assert_eq!(
            err,
            ParseError {
                offset: 11,
                kind: ParseErrorKind::PerfectSquare(4)
            }
        );
    }

    #[test]
    fn zero_coefficient_tolerates_square() {
        assert_eq!(parse_cspec("1+0*sqrt(4)").unwrap(), FieldElement::one());
    }

    #[test]
    fn error_offsets() {
        assert_eq!(
            parse_cspec("3/0").unwrap_err(),
            ParseError {
                offset: 2,
                kind: ParseErrorKind::ZeroDenominator
            }
        );
        assert_eq!(
            parse_cspec("3/8x").unwrap_err(),
            ParseError {
                offset: 3,
                kind: ParseErrorKind::TrailingInput
            }
        );
        assert_eq!(parse_cspec("").unwrap_err().offset, 0);
        assert_eq!(
            parse_cspec("1+2*sqrt(3").unwrap_err(),
            ParseError {
                offset: 10,
                kind: ParseErrorKind::Expected(")")
            }
        );
        assert_eq!(
            parse_cspec("1+2*sqr(3)").unwrap_err(),
            ParseError {
                offset: 7,
                kind: ParseErrorKind::Expected("*sqrt(")
            }
        );
    }

    #[test]
    fn display_round_trips() {
        for s in ["-3/8+1/3*sqrt(2)", "7/16", "0+-5*sqrt(10)"] {
            let x = parse_cspec(s).unwrap();
            assert_eq!(parse_cspec(&x.to_string()).unwrap(), x);
        }
    }
}
