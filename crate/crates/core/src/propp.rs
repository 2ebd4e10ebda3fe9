//! The digit-driven function `P` on `[0, 1]` whose integral is a prescribed
//! target `c ∈ (3/8, 5/8)`.
//!
//! On each dyadic square `[2^-(n+1), 2^-n]²`, `P` is the piecewise-linear path
//! through the square's lower-left corner, two anchors `Q_n` and `R_n` placed
//! by the digit `d_{n+2}` of `c − 3/8` in base 4, and the upper-right corner.
//! `P` itself is infinite; it is handled through its truncations `t_N`, which
//! agree with `P` on `[2^-(N+1), 1]`.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;

use crate::exactfield::{
    extract_digits, in_rationals, pow4_neg, window_lo, DigitPrefix, FieldElement, FieldError,
};
use crate::plcalc::{pl_integral, Piece, PiecewisePoly, PlError};

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum ProppError {
    #[error("digit {0} is not a base-4 digit")]
    DigitOutOfRange(u8),
    #[error("depth {depth} needs {need} digits, prefix has {have}")]
    InsufficientDigits {
        depth: u32,
        need: usize,
        have: usize,
    },
    #[error("target {0} is rational; the construction needs a certified irrational")]
    RationalTarget(String),
    #[error(transparent)]
    Field(#[from] FieldError),
    #[error(transparent)]
    Pl(#[from] PlError),
}

fn pow2_neg(k: u32) -> BigRational {
    BigRational::new(BigInt::one(), BigInt::one() << k)
}

fn rat(q: BigRational) -> FieldElement {
    FieldElement::rational(q)
}

/// A point with exact rational coordinates.
pub type Anchor = (BigRational, BigRational);

/// The data of the `n`-th square: its corners and the two digit anchors.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProppSegment {
    pub n: u32,
    pub digit: u8,
    pub lower: Anchor,
    pub q: Anchor,
    pub r: Anchor,
    pub upper: Anchor,
}

impl ProppSegment {
    pub fn new(n: u32, digit: u8) -> Result<Self, ProppError> {
        if digit > 3 {
            return Err(ProppError::DigitOutOfRange(digit));
        }
        let side = pow2_neg(n);
        let half = pow2_neg(n + 1);
        let eighth = |k: i64| BigRational::new(BigInt::from(k), BigInt::from(8));
        let d = i64::from(digit);
        let q_x = &side * (BigRational::one() - eighth(d + 1));
        let r_x = &side * (BigRational::one() - eighth(d));
        Ok(Self {
            n,
            digit,
            lower: (half.clone(), half.clone()),
            q: (q_x, half),
            r: (r_x, side.clone()),
            upper: (side.clone(), side),
        })
    }

    /// The anchors in path order with coincident points removed
    /// (`Q = lower` for digit 3, `R = upper` for digit 0).
    pub fn vertices(&self) -> Vec<Anchor> {
        let mut out: Vec<Anchor> = Vec::with_capacity(4);
        for p in [&self.lower, &self.q, &self.r, &self.upper] {
            if out.last().is_none_or(|last| last.0 != p.0) {
                out.push(p.clone());
            }
        }
        out
    }

    pub fn to_poly(&self) -> PiecewisePoly {
        let pts: Vec<(FieldElement, FieldElement)> = self
            .vertices()
            .into_iter()
            .map(|(x, y)| (rat(x), rat(y)))
            .collect();
        PiecewisePoly::through_points(&pts).expect("anchors have strictly increasing x")
    }

    /// `(digit + 1/2)·4^-(n+2) + 4^-(n+1)`.
    pub fn integral_closed_form(&self) -> BigRational {
        let n = self.n as usize;
        let d = BigRational::new(BigInt::from(2 * i64::from(self.digit) + 1), BigInt::from(2));
        d * pow4_neg(n + 2) + pow4_neg(n + 1)
    }
}

/// `P_n` on `[2^-(n+1), 2^-n]` for the digit `d_{n+2} = digit`.
pub fn segment(n: u32, digit: u8) -> Result<PiecewisePoly, ProppError> {
    Ok(ProppSegment::new(n, digit)?.to_poly())
}

/// `∫ P_n` by the closed form, checked against the exact piecewise integral.
pub fn segment_integral(n: u32, digit: u8) -> Result<BigRational, ProppError> {
    let seg = ProppSegment::new(n, digit)?;
    let closed = seg.integral_closed_form();
    let poly = seg.to_poly();
    let direct = pl_integral(&poly, poly.domain_start(), poly.domain_end())?;
    assert_eq!(direct, rat(closed.clone()), "segment integral closed form");
    Ok(closed)
}

/// What a truncation does on `[0, 2^-(N+1))`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Fill {
    /// Zero, with a jump of height `2^-(N+1)` at `2^-(N+1)`.
    #[default]
    Zero,
    /// The diagonal `y = x`, giving a continuous function.
    Diagonal,
}

fn check_depth(p: &DigitPrefix, depth: u32) -> Result<(), ProppError> {
    let need = depth as usize + 2;
    if p.len() < need {
        return Err(ProppError::InsufficientDigits {
            depth,
            need,
            have: p.len(),
        });
    }
    Ok(())
}

/// Segment pieces for `n = depth, …, 0`, i.e. `P` on `[2^-(depth+1), 1]`.
fn segment_pieces(p: &DigitPrefix, depth: u32) -> Vec<Piece> {
    (0..=depth)
        .rev()
        .flat_map(|n| {
            let digit = p.digit(n as usize + 2).expect("depth checked");
            segment(n, digit)
                .expect("prefix digits are base 4")
                .pieces()
                .to_vec()
        })
        .collect()
}

/// `P` restricted to `[2^-(depth+1), 1]`.
pub fn nonzero_part(p: &DigitPrefix, depth: u32) -> Result<PiecewisePoly, ProppError> {
    check_depth(p, depth)?;
    Ok(PiecewisePoly::new(segment_pieces(p, depth))?)
}

/// `t_N` on `[0, 1]`, using digits `d_2 … d_{N+2}`.
pub fn truncation(p: &DigitPrefix, depth: u32) -> Result<PiecewisePoly, ProppError> {
    truncation_with(p, depth, Fill::Zero)
}

pub fn truncation_with(
    p: &DigitPrefix,
    depth: u32,
    fill: Fill,
) -> Result<PiecewisePoly, ProppError> {
    check_depth(p, depth)?;
    let cut = rat(pow2_neg(depth + 1));
    let head = match fill {
        Fill::Zero => Piece::constant(FieldElement::zero(), cut, FieldElement::zero()),
        Fill::Diagonal => Piece::new(
            FieldElement::zero(),
            cut,
            [
                FieldElement::zero(),
                FieldElement::one(),
                FieldElement::zero(),
            ],
        ),
    };
    let mut pieces = vec![head];
    pieces.extend(segment_pieces(p, depth));
    Ok(PiecewisePoly::new(pieces)?)
}

/// `Σ_{k=2}^{N+2} d_k 4^-k + (3/8)(1 − 4^-(N+1))`.
fn partial_closed_form(p: &DigitPrefix, depth: u32) -> BigRational {
    let top = depth as usize + 2;
    let mut sum: BigRational = (2..=top)
        .map(|k| pow4_neg(k) * BigInt::from(p.digit(k).expect("depth checked")))
        .sum();
    sum += window_lo() * (BigRational::one() - pow4_neg(depth as usize + 1));
    sum
}

/// Exact `∫₀¹ t_N` by the closed form, checked against integrating the truncation.
pub fn integral_partial(p: &DigitPrefix, depth: u32) -> Result<FieldElement, ProppError> {
    check_depth(p, depth)?;
    let closed = rat(partial_closed_form(p, depth));
    let t = truncation(p, depth)?;
    let direct = pl_integral(&t, &FieldElement::zero(), &FieldElement::one())?;
    assert_eq!(direct, closed, "partial integral closed form");
    Ok(closed)
}

/// One row of a truncated-integral convergence table.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConvergenceRow {
    pub depth: u32,
    pub integral: FieldElement,
    /// `|∫t_N − c|`, exact.
    pub error: FieldElement,
    /// `4^-(N+1)`.
    pub error_bound: BigRational,
    pub decimal: String,
}

/// Decimal places used in report rows.
pub const REPORT_PLACES: usize = 20;

/// Fails unless `c` is a certified irrational inside `(3/8, 5/8)`.
pub fn check_target(c: &FieldElement) -> Result<(), ProppError> {
    crate::exactfield::check_window(c)?;
    if in_rationals(c) {
        return Err(ProppError::RationalTarget(c.to_string()));
    }
    Ok(())
}

/// `∫t_N` against `c` for `N = 0..=max_depth`.
pub fn convergence_report(
    c: &FieldElement,
    max_depth: u32,
) -> Result<Vec<ConvergenceRow>, ProppError> {
    check_target(c)?;
    let prefix = extract_digits(c, max_depth as usize + 2)?;
    let rows = (0..=max_depth)
        .map(|depth| {
            let integral = rat(partial_closed_form(&prefix, depth));
            let error = (&integral - c).abs();
            ConvergenceRow {
                depth,
                decimal: integral.to_decimal(REPORT_PLACES),
                integral,
                error,
                error_bound: pow4_neg(depth as usize + 1),
            }
        })
        .collect();
    Ok(rows)
}

impl ConvergenceRow {
    pub fn within_bound(&self) -> bool {
        self.error <= rat(self.error_bound.clone()) && !self.error.is_negative()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactfield::parse_cspec;
    use crate::plcalc::{pl_eval, pl_max_abs_slope, pl_sup_dist};

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(BigInt::from(n), BigInt::from(d))
    }

    fn breakpoints(f: &PiecewisePoly) -> Vec<(BigRational, BigRational)> {
        f.breakpoints()
            .iter()
            .map(|x| {
                let y = pl_eval(f, x).unwrap();
                (
                    x.as_rational().unwrap().clone(),
                    y.as_rational().unwrap().clone(),
                )
            })
            .collect()
    }

    #[test]
    fn segment_shapes() {
        assert_eq!(
            breakpoints(&segment(0, 1).unwrap()),
            vec![
                (q(1, 2), q(1, 2)),
                (q(3, 4), q(1, 2)),
                (q(7, 8), q(1, 1)),
                (q(1, 1), q(1, 1))
            ]
        );
        assert_eq!(
            breakpoints(&segment(0, 3).unwrap()),
            vec![(q(1, 2), q(1, 2)), (q(5, 8), q(1, 1)), (q(1, 1), q(1, 1))]
        );
        assert_eq!(
            breakpoints(&segment(2, 0).unwrap()),
            vec![(q(1, 8), q(1, 8)), (q(7, 32), q(1, 8)), (q(1, 4), q(1, 4))]
        );
        assert_eq!(segment(0, 4), Err(ProppError::DigitOutOfRange(4)));
    }

    #[test]
    fn segment_integrals() {
        assert_eq!(segment_integral(0, 1).unwrap(), q(11, 32));
        assert_eq!(segment_integral(0, 0).unwrap(), q(9, 32));
        assert_eq!(segment_integral(1, 0).unwrap(), q(9, 128));
    }

    #[test]
    fn first_truncation() {
        let p = DigitPrefix::from_digits(vec![0, 1]).unwrap();
        let t = truncation(&p, 0).unwrap();
        assert_eq!(
            t.pieces()[0],
            Piece::constant(FieldElement::zero(), rat(q(1, 2)), FieldElement::zero())
        );
        assert_eq!(&t.pieces()[1..], segment(0, 1).unwrap().pieces());
        assert!(!t.is_continuous());
        assert!(truncation_with(&p, 0, Fill::Diagonal)
            .unwrap()
            .is_continuous());
    }

    #[test]
    fn truncation_needs_digits() {
        let p = DigitPrefix::from_digits(vec![0, 1, 0]).unwrap();
        assert_eq!(
            truncation(&p, 2),
            Err(ProppError::InsufficientDigits {
                depth: 2,
                need: 4,
                have: 3
            })
        );
    }

    #[test]
    fn adjacent_truncations_differ_by_the_jump() {
        // the gap t_M − t_N (M > N) tops out at 2^-(N+1) on segment N+1; the top is
        // reached inside the segment unless its digit d_{N+3} is 0 (R = upper corner)
        let c = parse_cspec("0+1/3*sqrt(2)").unwrap();
        let p = extract_digits(&c, 12).unwrap();
        assert_eq!(p.digit(6), Some(2));
        let s = pl_sup_dist(&truncation(&p, 3).unwrap(), &truncation(&p, 4).unwrap()).unwrap();
        assert_eq!((s.value, s.attained), (rat(q(1, 16)), true));
        let s = pl_sup_dist(&truncation(&p, 5).unwrap(), &truncation(&p, 9).unwrap()).unwrap();
        assert_eq!((s.value, s.attained), (rat(q(1, 64)), true));

        let zeros = DigitPrefix::from_digits(vec![0; 12]).unwrap();
        let s = pl_sup_dist(
            &truncation(&zeros, 5).unwrap(),
            &truncation(&zeros, 9).unwrap(),
        )
        .unwrap();
        assert_eq!(
            (s.value, s.attained, s.at),
            (rat(q(1, 64)), false, rat(q(1, 64)))
        );
    }

    #[test]
    fn slope_of_nonzero_part() {
        let p = DigitPrefix::from_digits(vec![0, 1, 0, 2, 3]).unwrap();
        assert_eq!(
            pl_max_abs_slope(&nonzero_part(&p, 3).unwrap()).unwrap(),
            FieldElement::integer(4)
        );
    }

    #[test]
    fn partial_integrals() {
        let fig = DigitPrefix::from_digits(vec![0, 1, 0, 2, 3]).unwrap();
        assert_eq!(integral_partial(&fig, 3).unwrap(), rat(q(915, 2048)));
        let zeros2 = DigitPrefix::from_digits(vec![0, 0]).unwrap();
        assert_eq!(integral_partial(&zeros2, 0).unwrap(), rat(q(9, 32)));
        let zeros = DigitPrefix::from_digits(vec![0; 4]).unwrap();
        assert_eq!(integral_partial(&zeros, 2).unwrap(), rat(q(189, 512)));
    }

    #[test]
    fn report_rows_are_bounded() {
        let c = parse_cspec("0+1/3*sqrt(2)").unwrap();
        let rows = convergence_report(&c, 2).unwrap();
        assert_eq!(rows.len(), 3);
        assert!(rows.iter().all(ConvergenceRow::within_bound));
        assert!(matches!(
            convergence_report(&FieldElement::ratio(7, 16), 2),
            Err(ProppError::RationalTarget(_))
        ));
        assert!(matches!(
            convergence_report(&parse_cspec("0+1*sqrt(2)").unwrap(), 2),
            Err(ProppError::Field(_))
        ));
    }

    #[test]
    fn report_decimal_at_depth_30() {
        let c = parse_cspec("0+1/3*sqrt(2)").unwrap();
        let rows = convergence_report(&c, 30).unwrap();
        let last = rows.last().unwrap();
        assert_eq!(&last.decimal[..17], &c.to_decimal(15)[..]);
    }
}
