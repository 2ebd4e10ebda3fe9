//! Exact Riemann sums. Sample points and partition cuts are rational or lie in
//! the function's own quadratic field, so every sum is an element of that field.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;

use crate::exactfield::{FieldElement, FieldError, IrrationalityCertificate};
use crate::plcalc::{PiecewisePoly, PlError};

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum RiemannError {
    #[error("number of sample points must be positive")]
    ZeroPoints,
    #[error("right sums are taken over [0, 1]; function lives on [{0}, {1}]")]
    NotUnitInterval(String, String),
    #[error("partition needs at least two cuts")]
    TooFewCuts,
    #[error("partition cuts must strictly increase (cut {0})")]
    CutsNotIncreasing(usize),
    #[error("partition has {cuts} cuts but {tags} tags")]
    TagCount { cuts: usize, tags: usize },
    #[error("tag {0} lies outside its cell")]
    TagOutsideCell(usize),
    #[error("partition does not span the function's domain")]
    PartitionSpan,
    #[error("schedule must be nonempty and strictly increasing")]
    BadSchedule,
    #[error("function data is not rational")]
    NotRational,
    #[error(transparent)]
    Field(#[from] FieldError),
    #[error(transparent)]
    Pl(#[from] PlError),
}

/// Which point of each cell is used as the tag in [`TaggedPartition::uniform`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TagRule {
    Left,
    Right,
    Midpoint,
}

/// Cuts `x_0 < … < x_m` and one tag per cell with `x_i ≤ tag_i ≤ x_{i+1}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TaggedPartition {
    cuts: Vec<FieldElement>,
    tags: Vec<FieldElement>,
}

impl TaggedPartition {
    pub fn new(cuts: Vec<FieldElement>, tags: Vec<FieldElement>) -> Result<Self, RiemannError> {
        if cuts.len() < 2 {
            return Err(RiemannError::TooFewCuts);
        }
        if tags.len() + 1 != cuts.len() {
            return Err(RiemannError::TagCount {
                cuts: cuts.len(),
                tags: tags.len(),
            });
        }
        for i in 1..cuts.len() {
            cuts[i].common_radicand(&cuts[i - 1])?;
            if cuts[i] <= cuts[i - 1] {
                return Err(RiemannError::CutsNotIncreasing(i));
            }
        }
        for (i, t) in tags.iter().enumerate() {
            t.common_radicand(&cuts[i])?;
            if *t < cuts[i] || *t > cuts[i + 1] {
                return Err(RiemannError::TagOutsideCell(i));
            }
        }
        Ok(Self { cuts, tags })
    }

    /// `cells` equal cells on `[a, b]`, tagged by `rule`.
    pub fn uniform(
        a: &FieldElement,
        b: &FieldElement,
        cells: usize,
        rule: TagRule,
    ) -> Result<Self, RiemannError> {
        if cells == 0 {
            return Err(RiemannError::ZeroPoints);
        }
        let width = b.try_sub(a)?;
        let cuts: Vec<FieldElement> = (0..=cells)
            .map(|i| a + &width * FieldElement::ratio(i as i64, cells as i64))
            .collect();
        let tags = cuts
            .windows(2)
            .map(|w| match rule {
                TagRule::Left => w[0].clone(),
                TagRule::Right => w[1].clone(),
                TagRule::Midpoint => (&w[0] + &w[1]) * FieldElement::ratio(1, 2),
            })
            .collect();
        Self::new(cuts, tags)
    }

    pub fn cuts(&self) -> &[FieldElement] {
        &self.cuts
    }

    pub fn tags(&self) -> &[FieldElement] {
        &self.tags
    }
}

fn check_unit(f: &PiecewisePoly) -> Result<(), RiemannError> {
    if *f.domain_start() != FieldElement::zero() || *f.domain_end() != FieldElement::one() {
        return Err(RiemannError::NotUnitInterval(
            f.domain_start().to_string(),
            f.domain_end().to_string(),
        ));
    }
    Ok(())
}

/// `(1/n)·Σ_{j=1..n} f(j/n)` for `f` on `[0, 1]`.
pub fn right_sum(f: &PiecewisePoly, n: usize) -> Result<FieldElement, RiemannError> {
    if n == 0 {
        return Err(RiemannError::ZeroPoints);
    }
    check_unit(f)?;
    let pieces = f.pieces();
    let last = pieces.len() - 1;
    let mut owner = 0;
    let mut total = FieldElement::zero();
    // sample points increase, so the owning piece only ever moves right
    for j in 1..=n {
        let x = FieldElement::ratio(j as i64, n as i64);
        while owner < last && pieces[owner].end <= x {
            owner += 1;
        }
        total = total + pieces[owner].poly_at(&x);
    }
    Ok(total * FieldElement::ratio(1, n as i64))
}

/// [`right_sum`] for functions with rational data, returned as a rational.
pub fn right_sum_rational(f: &PiecewisePoly, n: usize) -> Result<BigRational, RiemannError> {
    if f.radicand().is_some() {
        return Err(RiemannError::NotRational);
    }
    let s = right_sum(f, n)?;
    Ok(s.as_rational()
        .expect("rational data gives a rational sum")
        .clone())
}

/// `Σ f(tag_i)·(x_{i+1} − x_i)`.
pub fn tagged_sum(f: &PiecewisePoly, p: &TaggedPartition) -> Result<FieldElement, RiemannError> {
    let (first, last) = (&p.cuts[0], &p.cuts[p.cuts.len() - 1]);
    first.common_radicand(f.domain_start())?;
    if first != f.domain_start() || last != f.domain_end() {
        return Err(RiemannError::PartitionSpan);
    }
    let mut total = FieldElement::zero();
    for (i, tag) in p.tags.iter().enumerate() {
        let value = crate::plcalc::pl_eval(f, tag)?;
        total = total + value * (&p.cuts[i + 1] - &p.cuts[i]);
    }
    Ok(total)
}

/// One row of a right-sum convergence table.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SumReport {
    pub n: usize,
    pub value: FieldElement,
    /// `|value − target|`, exact.
    pub error: FieldElement,
    pub value_decimal: String,
    pub error_decimal: String,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SumTable {
    pub target: FieldElement,
    pub rows: Vec<SumReport>,
    /// Present when the target is certified irrational: the sums are rational
    /// for every `n`, yet their limit is not.
    pub certificate: Option<IrrationalityCertificate>,
}

pub const TABLE_PLACES: usize = 20;

/// Right sums of `f` at each `n` of `schedule`, compared exactly against `target`.
pub fn sum_convergence_table(
    f: &PiecewisePoly,
    target: &FieldElement,
    schedule: &[usize],
) -> Result<SumTable, RiemannError> {
    if schedule.is_empty() || schedule.windows(2).any(|w| w[0] >= w[1]) {
        return Err(RiemannError::BadSchedule);
    }
    if let Some(d) = f.radicand() {
        target.common_radicand(&FieldElement::sqrt(d)?)?;
    }
    let rows = schedule
        .iter()
        .map(|&n| {
            let value = right_sum(f, n)?;
            let error = (&value - target).abs();
            Ok(SumReport {
                n,
                value_decimal: value.to_decimal(TABLE_PLACES),
                error_decimal: error.to_decimal(TABLE_PLACES),
                value,
                error,
            })
        })
        .collect::<Result<Vec<_>, RiemannError>>()?;
    Ok(SumTable {
        target: target.clone(),
        rows,
        certificate: IrrationalityCertificate::for_value(target),
    })
}

/// Closed-form integrands with rational values at rational points.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RationalFn {
    /// `1/(1 + x²)`, whose integral over `[0, 1]` is `π/4`.
    RecipOnePlusXSquared,
}

/// Sum of `1/denominator(j)` for `j ∈ [lo, hi)`, as an unreduced fraction.
fn split_sum(lo: u64, hi: u64, denominator: &dyn Fn(u64) -> BigInt) -> (BigInt, BigInt) {
    if hi - lo == 1 {
        return (BigInt::one(), denominator(lo));
    }
    let mid = lo + (hi - lo) / 2;
    let (p1, q1) = split_sum(lo, mid, denominator);
    let (p2, q2) = split_sum(mid, hi, denominator);
    (&p1 * &q2 + &p2 * &q1, q1 * q2)
}

/// Exact `(1/n)·Σ_{j=1..n} g(j/n)`.
///
/// Terms are combined pairwise into one unreduced fraction and reduced once
/// at the end; reducing after every term costs a large gcd per step.
pub fn rational_fn_right_sum(kind: RationalFn, n: usize) -> Result<BigRational, RiemannError> {
    if n == 0 {
        return Err(RiemannError::ZeroPoints);
    }
    let n = n as u64;
    match kind {
        RationalFn::RecipOnePlusXSquared => {
            // (1/n)·Σ n²/(n² + j²) = n·Σ 1/(n² + j²)
            let n2 = BigInt::from(n) * BigInt::from(n);
            let (p, q) = split_sum(1, n + 1, &|j| &n2 + BigInt::from(j) * BigInt::from(j));
            Ok(BigRational::new(p * BigInt::from(n), q))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactfield::DigitPrefix;
    use crate::plcalc::{pl_eval, pl_integral};
    use crate::propp::truncation;

    fn r(n: i64, d: i64) -> FieldElement {
        FieldElement::ratio(n, d)
    }

    fn unit_identity() -> PiecewisePoly {
        PiecewisePoly::identity(r(0, 1), r(1, 1)).unwrap()
    }

    #[test]
    fn right_sum_examples() {
        let half = PiecewisePoly::constant(r(0, 1), r(1, 1), r(1, 2)).unwrap();
        assert_eq!(right_sum(&half, 7).unwrap(), r(1, 2));
        assert_eq!(right_sum(&unit_identity(), 4).unwrap(), r(5, 8));
        assert_eq!(
            right_sum(&unit_identity(), 0),
            Err(RiemannError::ZeroPoints)
        );
        let off = PiecewisePoly::identity(r(0, 1), r(2, 1)).unwrap();
        assert!(matches!(
            right_sum(&off, 3),
            Err(RiemannError::NotUnitInterval(..))
        ));
    }

    #[test]
    fn right_sum_of_truncation_matches_direct_sum() {
        let p = DigitPrefix::from_digits(vec![0, 1, 0, 2]).unwrap();
        let t = truncation(&p, 2).unwrap();
        // independent route: evaluate through pl_eval at each j/8
        let direct: FieldElement = (1..=8)
            .map(|j| pl_eval(&t, &r(j, 8)).unwrap())
            .sum::<FieldElement>()
            * r(1, 8);
        let s = right_sum(&t, 8).unwrap();
        assert_eq!(s, direct);
        // hand tally: t_2(j/8) = 1/8, 1/4, 1/4, 1/2, 1/2, 1/2, 1, 1
        assert_eq!(s, r(33, 64));
        assert_eq!(
            right_sum_rational(&t, 8).unwrap(),
            BigRational::new(33.into(), 64.into())
        );
    }

    #[test]
    fn tagged_sums() {
        let k = PiecewisePoly::constant(r(0, 1), r(1, 1), r(3, 1)).unwrap();
        let p =
            TaggedPartition::new(vec![r(0, 1), r(1, 3), r(1, 1)], vec![r(1, 4), r(1, 1)]).unwrap();
        assert_eq!(tagged_sum(&k, &p).unwrap(), r(3, 1));
        let mid = TaggedPartition::new(vec![r(0, 1), r(1, 1)], vec![r(1, 2)]).unwrap();
        assert_eq!(tagged_sum(&unit_identity(), &mid).unwrap(), r(1, 2));

        let t1 = truncation(&DigitPrefix::from_digits(vec![0, 1, 2]).unwrap(), 1).unwrap();
        let left = tagged_sum(
            &t1,
            &TaggedPartition::uniform(&r(0, 1), &r(1, 1), 4, TagRule::Left).unwrap(),
        )
        .unwrap();
        let right = tagged_sum(
            &t1,
            &TaggedPartition::uniform(&r(0, 1), &r(1, 1), 4, TagRule::Right).unwrap(),
        )
        .unwrap();
        let exact = pl_integral(&t1, &r(0, 1), &r(1, 1)).unwrap();
        assert!(left <= exact && exact <= right);
        assert!(left < right);
    }

    #[test]
    fn partition_validation() {
        assert_eq!(
            TaggedPartition::new(vec![r(0, 1)], vec![]),
            Err(RiemannError::TooFewCuts)
        );
        assert_eq!(
            TaggedPartition::new(vec![r(0, 1), r(0, 1)], vec![r(0, 1)]),
            Err(RiemannError::CutsNotIncreasing(1))
        );
        assert_eq!(
            TaggedPartition::new(vec![r(0, 1), r(1, 2)], vec![r(3, 4)]),
            Err(RiemannError::TagOutsideCell(0))
        );
        assert_eq!(
            TaggedPartition::new(vec![r(0, 1), r(1, 2)], vec![]),
            Err(RiemannError::TagCount { cuts: 2, tags: 0 })
        );
        let short = TaggedPartition::new(vec![r(0, 1), r(1, 2)], vec![r(0, 1)]).unwrap();
        assert_eq!(
            tagged_sum(&unit_identity(), &short),
            Err(RiemannError::PartitionSpan)
        );
    }

    #[test]
    fn tables() {
        let t = sum_convergence_table(&unit_identity(), &r(1, 2), &[2, 4, 8]).unwrap();
        let errs: Vec<_> = t.rows.iter().map(|row| row.error.clone()).collect();
        assert_eq!(errs, vec![r(1, 4), r(1, 8), r(1, 16)]);
        assert!(t.certificate.is_none());
        let zero = PiecewisePoly::constant(r(0, 1), r(1, 1), r(0, 1)).unwrap();
        let t = sum_convergence_table(&zero, &r(0, 1), &[1, 5]).unwrap();
        assert!(t
            .rows
            .iter()
            .all(|row| row.value.is_zero() && row.error.is_zero()));
        assert_eq!(
            sum_convergence_table(&zero, &r(0, 1), &[]),
            Err(RiemannError::BadSchedule)
        );
        assert_eq!(
            sum_convergence_table(&zero, &r(0, 1), &[4, 4]),
            Err(RiemannError::BadSchedule)
        );
    }

    #[test]
    fn arctan_small_cases() {
        let q = |a: i64, b: i64| BigRational::new(a.into(), b.into());
        assert_eq!(
            rational_fn_right_sum(RationalFn::RecipOnePlusXSquared, 1).unwrap(),
            q(1, 2)
        );
        assert_eq!(
            rational_fn_right_sum(RationalFn::RecipOnePlusXSquared, 2).unwrap(),
            q(13, 20)
        );
        // n = 3: (1/3)(9/10 + 9/13 + 1/2)
        assert_eq!(
            rational_fn_right_sum(RationalFn::RecipOnePlusXSquared, 3).unwrap(),
            (q(9, 10) + q(9, 13) + q(1, 2)) / q(3, 1)
        );
        assert_eq!(
            rational_fn_right_sum(RationalFn::RecipOnePlusXSquared, 0),
            Err(RiemannError::ZeroPoints)
        );
    }
}
