//! Differentiability probes and the counterexamples that separate an
//! incomplete subfield from ℝ.
//!
//! The step function jumps at an irrational `c`, and every probe point is
//! rational, so each "which side of `c`" question is an exact comparison.

use std::cmp::Ordering;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive};

use crate::exactfield::{extract_digits, FieldElement, FieldError};
use crate::plcalc::{
    pl_eval, pl_integral, pl_max_abs_slope, pq_derivative_at, Piece, PiecewisePoly, PlError,
};
use crate::propp::{check_target, ProppError};

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum ProbeError {
    #[error("difference quotient needs two distinct points")]
    SamePoint,
    #[error("grid must have at least 2 cells, got {0}")]
    GridTooSmall(usize),
    #[error("delta {0} is below the grid spacing; no pairs to scan")]
    GridTooCoarse(String),
    #[error("delta must be positive")]
    NonPositiveDelta,
    #[error("function must be continuous")]
    NotContinuous,
    #[error("step position {0} must lie strictly inside (0, 1)")]
    StepOutsideUnit(String),
    #[error(transparent)]
    Field(#[from] FieldError),
    #[error(transparent)]
    Pl(#[from] PlError),
    #[error(transparent)]
    Propp(#[from] ProppError),
}

/// `(f(x) − f(c))/(x − c)`.
pub fn difference_quotient(
    f: &PiecewisePoly,
    c: &FieldElement,
    x: &FieldElement,
) -> Result<FieldElement, ProbeError> {
    let fc = pl_eval(f, c)?;
    let fx = pl_eval(f, x)?;
    let dx = x.try_sub(c)?;
    if dx.is_zero() {
        return Err(ProbeError::SamePoint);
    }
    Ok(fx.try_sub(&fc)?.try_div(&dx)?)
}

/// The function on `[0, 1]` that is 0 below `c` and 1 from `c` on.
pub fn step_function(c: &FieldElement) -> Result<PiecewisePoly, ProbeError> {
    if !c.is_positive() || *c >= FieldElement::one() {
        return Err(ProbeError::StepOutsideUnit(c.to_string()));
    }
    Ok(PiecewisePoly::new(vec![
        Piece::constant(FieldElement::zero(), c.clone(), FieldElement::zero()),
        Piece::constant(c.clone(), FieldElement::one(), FieldElement::one()),
    ])?)
}

/// Difference quotient of the step across the `n`-digit bracket of `c`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BlowupRow {
    pub n: usize,
    pub x_minus: BigRational,
    pub x_plus: BigRational,
    pub quotient: BigRational,
}

/// For `n = 1..=max_n`, the step's difference quotient over `[lo_n, hi_n]`,
/// which straddles `c` and has width `4^-n`. The quotient is exactly `4^n`.
pub fn step_blowup(c: &FieldElement, max_n: usize) -> Result<Vec<BlowupRow>, ProbeError> {
    check_target(c)?;
    let step = step_function(c)?;
    let prefix = extract_digits(c, max_n.max(1))?;
    (1..=max_n)
        .map(|n| {
            let p = prefix.truncated(n)?;
            let lo = FieldElement::rational(p.lo().clone());
            let hi = FieldElement::rational(p.hi().clone());
            debug_assert!(lo < *c && *c < hi);
            let q = difference_quotient(&step, &lo, &hi)?;
            Ok(BlowupRow {
                n,
                x_minus: p.lo().clone(),
                x_plus: p.hi().clone(),
                quotient: q.as_rational().expect("rational endpoints").clone(),
            })
        })
        .collect()
}

/// `δ = |x − c|`: every difference quotient of the step at `x` over a window
/// shorter than `δ` stays on one side of `c` and is therefore 0.
pub fn pointwise_zero_derivative_witness(
    c: &FieldElement,
    x: &FieldElement,
) -> Result<FieldElement, ProbeError> {
    let d = x.try_sub(c)?;
    if d.is_zero() {
        return Err(ProbeError::SamePoint);
    }
    Ok(d.abs())
}

/// Both sides of `∫_a^b f = F(b) − F(a)`, evaluated exactly.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EvaluationCheck {
    pub holds: bool,
    /// `F(b) − F(a) − ∫_a^b f`.
    pub discrepancy: FieldElement,
    pub integral: FieldElement,
    pub increment: FieldElement,
}

pub fn evaluation_identity_check(
    big_f: &PiecewisePoly,
    f: &PiecewisePoly,
    a: &FieldElement,
    b: &FieldElement,
) -> Result<EvaluationCheck, ProbeError> {
    let integral = pl_integral(f, a, b)?;
    let increment = pl_eval(big_f, b)?.try_sub(&pl_eval(big_f, a)?)?;
    let discrepancy = increment.try_sub(&integral)?;
    Ok(EvaluationCheck {
        holds: discrepancy.is_zero(),
        discrepancy,
        integral,
        increment,
    })
}

/// Worst observed gap between a difference quotient and the derivative at its base point.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModulusReport {
    pub delta: BigRational,
    /// `(x, y)`: the quotient `D_y[F](x)` is taken at base point `y`.
    pub worst_pair: (FieldElement, FieldElement),
    pub worst_value: FieldElement,
    /// Lipschitz constant of `F'`.
    pub lipschitz: FieldElement,
    /// `lipschitz · delta`.
    pub bound: FieldElement,
    pub pairs_scanned: usize,
}

impl ModulusReport {
    pub fn within_bound(&self) -> bool {
        self.worst_value <= self.bound
    }
}

/// Scans all pairs of a uniform grid (`grid` cells, `grid + 1` points) with
/// `0 < |x − y| ≤ delta` and returns the largest `|D_y[F](x) − F'(y)|`.
///
/// Because `D_y[F](x)` is the mean of `F'` over `[y, x]`, the result never
/// exceeds `L·delta` for `L` the Lipschitz constant of `F'`.
pub fn modulus_scan(
    big_f: &PiecewisePoly,
    delta: &BigRational,
    grid: usize,
) -> Result<ModulusReport, ProbeError> {
    if grid < 2 {
        return Err(ProbeError::GridTooSmall(grid));
    }
    if !delta.is_positive() {
        return Err(ProbeError::NonPositiveDelta);
    }
    if !big_f.is_continuous() {
        return Err(ProbeError::NotContinuous);
    }
    let a = big_f.domain_start();
    let width = big_f.domain_end().try_sub(a)?;
    let spacing = width.mul_rational(&BigRational::new(BigInt::from(1), BigInt::from(grid)));
    // largest index offset k with k·spacing ≤ delta
    let reach = FieldElement::rational(delta.clone())
        .try_div(&spacing)?
        .floor();
    let reach = reach.to_usize().unwrap_or(usize::MAX).min(grid);
    if reach == 0 {
        return Err(ProbeError::GridTooCoarse(
            crate::exactfield::format_rational(delta),
        ));
    }

    let points: Vec<FieldElement> = (0..=grid)
        .map(|i| a + &spacing * FieldElement::integer(i as i64))
        .collect();
    let values: Vec<FieldElement> = points
        .iter()
        .map(|x| pl_eval(big_f, x))
        .collect::<Result<_, _>>()?;
    let slopes: Vec<FieldElement> = points
        .iter()
        .map(|x| pq_derivative_at(big_f, x))
        .collect::<Result<_, _>>()?;

    let lipschitz = pl_max_abs_slope(&big_f.derivative())?;
    let mut worst: Option<(usize, usize, FieldElement)> = None;
    let mut pairs = 0usize;
    for (j, (fy, slope_y)) in values.iter().zip(&slopes).enumerate() {
        let lo = j.saturating_sub(reach);
        let hi = (j + reach).min(grid);
        for i in (lo..=hi).filter(|&i| i != j) {
            pairs += 1;
            let steps = FieldElement::integer(i as i64 - j as i64);
            let quotient = (&values[i] - fy) / (&spacing * steps);
            let gap = (quotient - slope_y).abs();
            let better = match &worst {
                None => true,
                Some((_, _, w)) => gap.partial_cmp(w) == Some(Ordering::Greater),
            };
            if better {
                worst = Some((i, j, gap));
            }
        }
    }
    let (i, j, worst_value) = worst.expect("reach ≥ 1 gives at least one pair");
    let bound = lipschitz.mul_rational(delta);
    Ok(ModulusReport {
        delta: delta.clone(),
        worst_pair: (points[i].clone(), points[j].clone()),
        worst_value,
        lipschitz,
        bound,
        pairs_scanned: pairs,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactfield::parse_cspec;
    use crate::plcalc::pl_antiderivative;

    fn r(n: i64, d: i64) -> FieldElement {
        FieldElement::ratio(n, d)
    }

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    fn c() -> FieldElement {
        parse_cspec("0+1/3*sqrt(2)").unwrap()
    }

    #[test]
    fn quotients() {
        let sq = PiecewisePoly::polynomial(r(0, 1), r(4, 1), [r(0, 1), r(0, 1), r(1, 1)]).unwrap();
        assert_eq!(
            difference_quotient(&sq, &r(1, 1), &r(3, 1)).unwrap(),
            r(4, 1)
        );
        let k = PiecewisePoly::constant(r(0, 1), r(1, 1), r(7, 1)).unwrap();
        assert_eq!(
            difference_quotient(&k, &r(1, 5), &r(2, 3)).unwrap(),
            r(0, 1)
        );
        assert_eq!(
            difference_quotient(&k, &r(1, 5), &r(1, 5)),
            Err(ProbeError::SamePoint)
        );
        let step = step_function(&r(1, 2)).unwrap();
        assert_eq!(
            difference_quotient(&step, &r(7, 16), &r(9, 16)).unwrap(),
            r(8, 1)
        );
    }

    #[test]
    fn blowup_rows() {
        let rows = step_blowup(&c(), 3).unwrap();
        assert_eq!(
            rows.iter()
                .map(|row| row.quotient.clone())
                .collect::<Vec<_>>(),
            vec![q(4, 1), q(16, 1), q(64, 1)]
        );
        // digits [0, 1, 2]: lo_3 = 3/8 + 1/16 + 2/64
        assert_eq!(rows[2].x_minus, q(15, 32));
        assert_eq!(rows[2].x_plus, q(15, 32) + q(1, 64));
        assert!(matches!(
            step_blowup(&r(7, 16), 3),
            Err(ProbeError::Propp(ProppError::RationalTarget(_)))
        ));
    }

    #[test]
    fn witnesses() {
        assert_eq!(
            pointwise_zero_derivative_witness(&c(), &r(0, 1)).unwrap(),
            c()
        );
        let d = pointwise_zero_derivative_witness(&c(), &r(1, 2)).unwrap();
        assert_eq!(d, r(1, 2) - c());
        assert!(d.is_positive());
        let d = pointwise_zero_derivative_witness(&c(), &r(29, 64)).unwrap();
        assert_eq!(d, c() - r(29, 64));
        assert!(d.is_positive());
        assert_eq!(
            pointwise_zero_derivative_witness(&r(1, 2), &r(1, 2)),
            Err(ProbeError::SamePoint)
        );
    }

    #[test]
    fn evaluation_identity() {
        let f = PiecewisePoly::through_points(&[
            (r(0, 1), r(0, 1)),
            (r(1, 2), r(1, 1)),
            (r(1, 1), r(1, 4)),
        ])
        .unwrap();
        let big_f = pl_antiderivative(&f, &r(1, 3)).unwrap();
        let check = evaluation_identity_check(&big_f, &f, &r(1, 5), &r(7, 8)).unwrap();
        assert!(check.holds);
        assert!(check.discrepancy.is_zero());

        let zero = PiecewisePoly::constant(r(0, 1), r(1, 1), r(0, 1)).unwrap();
        let check =
            evaluation_identity_check(&step_function(&c()).unwrap(), &zero, &r(0, 1), &r(1, 1))
                .unwrap();
        assert!(!check.holds);
        assert_eq!(check.discrepancy, r(1, 1));
        let check = evaluation_identity_check(&zero, &zero, &r(0, 1), &r(1, 1)).unwrap();
        assert!(check.holds);
    }

    #[test]
    fn modulus_of_half_square() {
        let big_f =
            PiecewisePoly::polynomial(r(0, 1), r(1, 1), [r(0, 1), r(0, 1), r(1, 2)]).unwrap();
        let rep = modulus_scan(&big_f, &q(1, 4), 8).unwrap();
        assert_eq!(rep.worst_value, r(1, 8));
        assert_eq!(rep.bound, r(1, 4));
        assert!(rep.within_bound());
        let (x, y) = &rep.worst_pair;
        assert_eq!((x - y).abs(), r(1, 4));
    }

    #[test]
    fn modulus_of_linear_is_zero() {
        let big_f =
            PiecewisePoly::polynomial(r(0, 1), r(1, 1), [r(1, 3), r(2, 1), r(0, 1)]).unwrap();
        let rep = modulus_scan(&big_f, &q(1, 2), 10).unwrap();
        assert!(rep.worst_value.is_zero());
    }

    #[test]
    fn modulus_errors() {
        let big_f = PiecewisePoly::identity(r(0, 1), r(1, 1)).unwrap();
        assert_eq!(
            modulus_scan(&big_f, &q(1, 2), 1),
            Err(ProbeError::GridTooSmall(1))
        );
        assert_eq!(
            modulus_scan(&big_f, &q(0, 1), 4),
            Err(ProbeError::NonPositiveDelta)
        );
        assert!(matches!(
            modulus_scan(&big_f, &q(1, 8), 4),
            Err(ProbeError::GridTooCoarse(_))
        ));
        let step = step_function(&r(1, 2)).unwrap();
        assert_eq!(
            modulus_scan(&step, &q(1, 2), 4),
            Err(ProbeError::NotContinuous)
        );
        assert!(matches!(
            step_function(&r(3, 2)),
            Err(ProbeError::StepOutsideUnit(_))
        ));
    }
}
