//! Exact calculus of piecewise polynomials of degree at most two.
//!
//! Pieces are left-closed and right-open, except the last, which is closed.
//! That makes evaluation total for functions with jumps.

mod json;

use std::cmp::Ordering;

use crate::exactfield::{compare, FieldElement, FieldError};

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum PlError {
    #[error("a piecewise polynomial needs at least one piece")]
    Empty,
    #[error("piece {0} is empty or reversed")]
    EmptyPiece(usize),
    #[error("piece {0} does not start where the previous piece ends")]
    Gap(usize),
    #[error("point {x} lies outside the domain [{a}, {b}]")]
    OutOfDomain { x: String, a: String, b: String },
    #[error("integration bounds are reversed")]
    ReversedBounds,
    #[error("domains differ")]
    DomainMismatch,
    #[error("operation requires a piecewise-linear function")]
    NotLinear,
    #[error("operation requires a continuous function; jump at {0}")]
    Discontinuous(String),
    #[error("derivative mismatch at {x}: left {left}, right {right}")]
    DerivativeMismatch {
        x: String,
        left: String,
        right: String,
    },
    #[error(transparent)]
    Field(#[from] FieldError),
}

/// `c0 + c1·x + c2·x²` on `[start, end)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Piece {
    pub start: FieldElement,
    pub end: FieldElement,
    pub coeffs: [FieldElement; 3],
}

impl Piece {
    pub fn new(start: FieldElement, end: FieldElement, coeffs: [FieldElement; 3]) -> Self {
        Self { start, end, coeffs }
    }

    /// The linear piece through `(x0, y0)` and `(x1, y1)`.
    pub fn linear_through(
        x0: &FieldElement,
        y0: &FieldElement,
        x1: &FieldElement,
        y1: &FieldElement,
    ) -> Self {
        let slope = (y1 - y0) / (x1 - x0);
        let intercept = y0 - &slope * x0;
        Self::new(
            x0.clone(),
            x1.clone(),
            [intercept, slope, FieldElement::zero()],
        )
    }

    pub fn constant(start: FieldElement, end: FieldElement, value: FieldElement) -> Self {
        Self::new(
            start,
            end,
            [value, FieldElement::zero(), FieldElement::zero()],
        )
    }

    pub fn poly_at(&self, x: &FieldElement) -> FieldElement {
        let [c0, c1, c2] = &self.coeffs;
        if c2.is_zero() {
            c0 + c1 * x
        } else {
            c0 + x * (c1 + c2 * x)
        }
    }

    pub fn slope_at(&self, x: &FieldElement) -> FieldElement {
        let [_, c1, c2] = &self.coeffs;
        if c2.is_zero() {
            c1.clone()
        } else {
            c1 + FieldElement::integer(2) * c2 * x
        }
    }

    /// `c0·x + c1·x²/2 + c2·x³/3`.
    fn primitive_at(&self, x: &FieldElement) -> FieldElement {
        let [c0, c1, c2] = &self.coeffs;
        let x2 = x * x;
        let mut v = c0 * x + c1 * &x2 / FieldElement::integer(2);
        if !c2.is_zero() {
            v = v + c2 * &x2 * x / FieldElement::integer(3);
        }
        v
    }

    fn integral_between(&self, lo: &FieldElement, hi: &FieldElement) -> FieldElement {
        self.primitive_at(hi) - self.primitive_at(lo)
    }

    fn is_linear(&self) -> bool {
        self.coeffs[2].is_zero()
    }
}

/// A function on `[a, b]` given by contiguous polynomial pieces.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PiecewisePoly {
    pieces: Vec<Piece>,
    linear: bool,
    continuous: bool,
    radicand: Option<u64>,
}

impl PiecewisePoly {
    /// Validates contiguity and computes the linearity and continuity flags.
    ///
    /// All endpoints and coefficients must share one quadratic field.
    pub fn new(pieces: Vec<Piece>) -> Result<Self, PlError> {
        if pieces.is_empty() {
            return Err(PlError::Empty);
        }
        let mut radicand: Option<u64> = None;
        for p in &pieces {
            for x in [&p.start, &p.end].into_iter().chain(p.coeffs.iter()) {
                if let Some(d) = x.radicand() {
                    match radicand {
                        Some(r) if r != d => return Err(FieldError::RadicandMismatch(r, d).into()),
                        _ => radicand = Some(d),
                    }
                }
            }
        }
        for (i, p) in pieces.iter().enumerate() {
            if p.start >= p.end {
                return Err(PlError::EmptyPiece(i));
            }
            if i > 0 && pieces[i - 1].end != p.start {
                return Err(PlError::Gap(i));
            }
        }
        let linear = pieces.iter().all(Piece::is_linear);
        let continuous = pieces
            .windows(2)
            .all(|w| w[0].poly_at(&w[0].end) == w[1].poly_at(&w[1].start));
        Ok(Self {
            pieces,
            linear,
            continuous,
            radicand,
        })
    }

    /// The identity function on `[a, b]`.
    pub fn identity(a: FieldElement, b: FieldElement) -> Result<Self, PlError> {
        Self::new(vec![Piece::new(
            a,
            b,
            [
                FieldElement::zero(),
                FieldElement::one(),
                FieldElement::zero(),
            ],
        )])
    }

    pub fn constant(
        a: FieldElement,
        b: FieldElement,
        value: FieldElement,
    ) -> Result<Self, PlError> {
        Self::new(vec![Piece::constant(a, b, value)])
    }

    /// A single polynomial `c0 + c1·x + c2·x²` on `[a, b]`.
    pub fn polynomial(
        a: FieldElement,
        b: FieldElement,
        coeffs: [FieldElement; 3],
    ) -> Result<Self, PlError> {
        Self::new(vec![Piece::new(a, b, coeffs)])
    }

    /// The continuous piecewise-linear interpolant of `points` (strictly increasing x).
    pub fn through_points(points: &[(FieldElement, FieldElement)]) -> Result<Self, PlError> {
        if points.len() < 2 {
            return Err(PlError::Empty);
        }
        let pieces = points
            .windows(2)
            .enumerate()
            .map(|(i, w)| {
                if w[0].0 >= w[1].0 {
                    return Err(PlError::EmptyPiece(i));
                }
                Ok(Piece::linear_through(&w[0].0, &w[0].1, &w[1].0, &w[1].1))
            })
            .collect::<Result<Vec<_>, _>>()?;
        Self::new(pieces)
    }

    pub fn pieces(&self) -> &[Piece] {
        &self.pieces
    }

    pub fn is_linear(&self) -> bool {
        self.linear
    }

    pub fn is_continuous(&self) -> bool {
        self.continuous
    }

    pub fn domain_start(&self) -> &FieldElement {
        &self.pieces[0].start
    }

    pub fn domain_end(&self) -> &FieldElement {
        &self.pieces[self.pieces.len() - 1].end
    }

    /// Interior breakpoints plus both domain ends, in increasing order.
    pub fn breakpoints(&self) -> Vec<FieldElement> {
        let mut xs: Vec<FieldElement> = self.pieces.iter().map(|p| p.start.clone()).collect();
        xs.push(self.domain_end().clone());
        xs
    }

    /// The quadratic field the function's data lives in, `None` for ℚ.
    pub fn radicand(&self) -> Option<u64> {
        self.radicand
    }

    /// Rejects points from a different quadratic field, so the operator
    /// arithmetic below cannot hit a radicand mismatch.
    fn check_field(&self, x: &FieldElement) -> Result<(), PlError> {
        match (self.radicand, x.radicand()) {
            (Some(r), Some(d)) if r != d => Err(FieldError::RadicandMismatch(r, d).into()),
            _ => Ok(()),
        }
    }

    fn check_in_domain(&self, x: &FieldElement) -> Result<(), PlError> {
        self.check_field(x)?;
        if x < self.domain_start() || x > self.domain_end() {
            return Err(PlError::OutOfDomain {
                x: x.to_string(),
                a: self.domain_start().to_string(),
                b: self.domain_end().to_string(),
            });
        }
        Ok(())
    }

    /// Index of the piece owning `x` under the left-closed convention.
    /// `x` must already be known to lie in the domain.
    fn owner(&self, x: &FieldElement) -> usize {
        // first piece whose end is > x; the last piece also owns its end point
        let idx = self.pieces.partition_point(|p| p.end <= *x);
        idx.min(self.pieces.len() - 1)
    }

    /// Index of the piece starting exactly at `x`, if `x` is an interior breakpoint.
    fn breakpoint_index(&self, x: &FieldElement) -> Option<usize> {
        let i = self.owner(x);
        (i > 0 && self.pieces[i].start == *x).then_some(i)
    }

    pub(crate) fn eval_unchecked(&self, x: &FieldElement) -> FieldElement {
        self.pieces[self.owner(x)].poly_at(x)
    }

    /// Left-hand limit at `x` (the value itself at the domain start).
    pub fn left_limit(&self, x: &FieldElement) -> Result<FieldElement, PlError> {
        self.check_in_domain(x)?;
        let i = match self.breakpoint_index(x) {
            Some(i) => i - 1,
            None => self.owner(x),
        };
        Ok(self.pieces[i].poly_at(x))
    }

    /// Derivative of this (at most quadratic) function as a piecewise-linear function.
    pub fn derivative(&self) -> PiecewisePoly {
        let two = FieldElement::integer(2);
        let pieces = self
            .pieces
            .iter()
            .map(|p| {
                Piece::new(
                    p.start.clone(),
                    p.end.clone(),
                    [
                        p.coeffs[1].clone(),
                        &two * &p.coeffs[2],
                        FieldElement::zero(),
                    ],
                )
            })
            .collect();
        PiecewisePoly::new(pieces).expect("same breakpoints as a valid function")
    }

    /// `self − other`, on identical domains.
    pub fn sub(&self, other: &PiecewisePoly) -> Result<PiecewisePoly, PlError> {
        if self.domain_start() != other.domain_start() || self.domain_end() != other.domain_end() {
            return Err(PlError::DomainMismatch);
        }
        if let (Some(x), Some(y)) = (self.radicand, other.radicand) {
            if x != y {
                return Err(FieldError::RadicandMismatch(x, y).into());
            }
        }
        let mut cuts = self.breakpoints();
        cuts.extend(other.breakpoints());
        cuts.sort_by(|x, y| x.partial_cmp(y).expect("shared field"));
        cuts.dedup();
        let pieces = cuts
            .windows(2)
            .map(|w| {
                let f = &self.pieces[self.owner(&w[0])];
                let g = &other.pieces[other.owner(&w[0])];
                let coeffs = [0, 1, 2].map(|k| &f.coeffs[k] - &g.coeffs[k]);
                Piece::new(w[0].clone(), w[1].clone(), coeffs)
            })
            .collect();
        PiecewisePoly::new(pieces)
    }
}

/// Value at `x`; at a breakpoint, the piece to the right decides.
pub fn pl_eval(f: &PiecewisePoly, x: &FieldElement) -> Result<FieldElement, PlError> {
    f.check_in_domain(x)?;
    Ok(f.eval_unchecked(x))
}

/// Exact `∫_a^b f`. Jumps carry no mass.
pub fn pl_integral(
    f: &PiecewisePoly,
    a: &FieldElement,
    b: &FieldElement,
) -> Result<FieldElement, PlError> {
    f.check_in_domain(a)?;
    f.check_in_domain(b)?;
    if a > b {
        return Err(PlError::ReversedBounds);
    }
    let mut total = FieldElement::zero();
    for p in &f.pieces {
        if p.end <= *a {
            continue;
        }
        if p.start >= *b {
            break;
        }
        let lo = if p.start > *a { &p.start } else { a };
        let hi = if p.end < *b { &p.end } else { b };
        total = total + p.integral_between(lo, hi);
    }
    Ok(total)
}

/// A supremum together with whether some point of the domain attains it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Supremum {
    pub value: FieldElement,
    pub attained: bool,
    /// The point attaining the value, or whose one-sided limit gives it.
    pub at: FieldElement,
}

/// `sup |f − g|` over the common domain.
///
/// Each merged subinterval `[u, v)` contributes `|h(u)|` (attained), the left
/// limit `|h(v⁻)|` (attained only at the closed domain end or when `h` is
/// continuous there) and the interior vertex of a quadratic difference.
pub fn pl_sup_dist(f: &PiecewisePoly, g: &PiecewisePoly) -> Result<Supremum, PlError> {
    let h = f.sub(g)?;
    let n = h.pieces.len();
    let mut best: Option<Supremum> = None;
    let mut offer = |value: FieldElement, attained: bool, at: FieldElement| {
        let replace = match &best {
            None => true,
            Some(cur) => match compare(&value, &cur.value).expect("shared field") {
                Ordering::Greater => true,
                Ordering::Equal => attained && !cur.attained,
                Ordering::Less => false,
            },
        };
        if replace {
            best = Some(Supremum {
                value,
                attained,
                at,
            });
        }
    };
    for (i, p) in h.pieces.iter().enumerate() {
        offer(p.poly_at(&p.start).abs(), true, p.start.clone());
        let left = p.poly_at(&p.end);
        let attained_at_end = if i + 1 == n {
            true
        } else {
            h.pieces[i + 1].poly_at(&p.end) == left
        };
        offer(left.abs(), attained_at_end, p.end.clone());
        let [_, c1, c2] = &p.coeffs;
        if !c2.is_zero() {
            let vertex = -(c1 / (FieldElement::integer(2) * c2));
            if vertex > p.start && vertex < p.end {
                offer(p.poly_at(&vertex).abs(), true, vertex);
            }
        }
    }
    Ok(best.expect("at least one piece"))
}

/// Largest `|slope|` over the pieces of a piecewise-linear function.
pub fn pl_max_abs_slope(f: &PiecewisePoly) -> Result<FieldElement, PlError> {
    if !f.linear {
        return Err(PlError::NotLinear);
    }
    let mut best = FieldElement::zero();
    for p in &f.pieces {
        let s = p.coeffs[1].abs();
        if s > best {
            best = s;
        }
    }
    Ok(best)
}

/// The continuous piecewise-quadratic `F` with `F(base) = 0` and `F' = f` on every piece.
pub fn pl_antiderivative(f: &PiecewisePoly, base: &FieldElement) -> Result<PiecewisePoly, PlError> {
    if !f.linear {
        return Err(PlError::NotLinear);
    }
    if let Some(w) = f
        .pieces
        .windows(2)
        .find(|w| w[0].poly_at(&w[0].end) != w[1].poly_at(&w[1].start))
    {
        return Err(PlError::Discontinuous(w[0].end.to_string()));
    }
    f.check_in_domain(base)?;
    let two = FieldElement::integer(2);
    // value of the antiderivative at each piece start, accumulated from the domain start
    let mut at_start = FieldElement::zero();
    let mut pieces = Vec::with_capacity(f.pieces.len());
    for p in &f.pieces {
        let [c0, c1, _] = &p.coeffs;
        let quad = Piece::new(
            p.start.clone(),
            p.end.clone(),
            [FieldElement::zero(), c0.clone(), c1 / &two],
        );
        // shift so the piece takes the accumulated value at its start
        let shift = &at_start - quad.poly_at(&p.start);
        let piece = Piece::new(
            p.start.clone(),
            p.end.clone(),
            [shift, c0.clone(), c1 / &two],
        );
        at_start = piece.poly_at(&p.end);
        pieces.push(piece);
    }
    let unshifted = PiecewisePoly::new(pieces)?;
    let offset = unshifted.eval_unchecked(base);
    let pieces = unshifted
        .pieces
        .into_iter()
        .map(|mut p| {
            p.coeffs[0] = &p.coeffs[0] - &offset;
            p
        })
        .collect();
    PiecewisePoly::new(pieces)
}

/// `F'(x)`. At an interior breakpoint both one-sided derivatives must agree.
pub fn pq_derivative_at(f: &PiecewisePoly, x: &FieldElement) -> Result<FieldElement, PlError> {
    f.check_in_domain(x)?;
    let i = f.owner(x);
    let right = f.pieces[i].slope_at(x);
    if let Some(i) = f.breakpoint_index(x) {
        let left = f.pieces[i - 1].slope_at(x);
        if left != right {
            return Err(PlError::DerivativeMismatch {
                x: x.to_string(),
                left: left.to_string(),
                right: right.to_string(),
            });
        }
    }
    Ok(right)
}

/// Samples `(x, f(x))` at `resolution + 1` equally spaced points of the domain.
pub fn sample(f: &PiecewisePoly, resolution: usize) -> Vec<(FieldElement, FieldElement)> {
    let a = f.domain_start();
    let width = f.domain_end() - a;
    let n = resolution.max(1);
    (0..=n)
        .map(|i| {
            let x = a + &width * FieldElement::ratio(i as i64, n as i64);
            let y = f.eval_unchecked(&x);
            (x, y)
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactfield::parse_cspec;

    fn r(n: i64, d: i64) -> FieldElement {
        FieldElement::ratio(n, d)
    }

    fn unit_identity() -> PiecewisePoly {
        PiecewisePoly::identity(r(0, 1), r(1, 1)).unwrap()
    }

    fn step_half() -> PiecewisePoly {
        PiecewisePoly::new(vec![
            Piece::constant(r(0, 1), r(1, 2), r(0, 1)),
            Piece::constant(r(1, 2), r(1, 1), r(1, 1)),
        ])
        .unwrap()
    }

    fn p0_digit1() -> PiecewisePoly {
        PiecewisePoly::through_points(&[
            (r(1, 2), r(1, 2)),
            (r(3, 4), r(1, 2)),
            (r(7, 8), r(1, 1)),
            (r(1, 1), r(1, 1)),
        ])
        .unwrap()
    }

    #[test]
    fn construction_errors() {
        assert_eq!(PiecewisePoly::new(vec![]), Err(PlError::Empty));
        assert_eq!(
            PiecewisePoly::constant(r(1, 1), r(1, 1), r(0, 1)),
            Err(PlError::EmptyPiece(0))
        );
        let gap = PiecewisePoly::new(vec![
            Piece::constant(r(0, 1), r(1, 3), r(0, 1)),
            Piece::constant(r(1, 2), r(1, 1), r(0, 1)),
        ]);
        assert_eq!(gap, Err(PlError::Gap(1)));
        assert!(!step_half().is_continuous());
        assert!(p0_digit1().is_continuous() && p0_digit1().is_linear());
    }

    #[test]
    fn eval_examples() {
        let c = parse_cspec("0+1/3*sqrt(2)").unwrap();
        assert_eq!(pl_eval(&unit_identity(), &c).unwrap(), c);
        assert_eq!(pl_eval(&step_half(), &r(1, 2)).unwrap(), r(1, 1));
        assert_eq!(pl_eval(&p0_digit1(), &r(7, 8)).unwrap(), r(1, 1));
        assert!(matches!(
            pl_eval(&unit_identity(), &r(3, 2)),
            Err(PlError::OutOfDomain { .. })
        ));
        assert_eq!(step_half().left_limit(&r(1, 2)).unwrap(), r(0, 1));
    }

    #[test]
    fn integral_examples() {
        assert_eq!(
            pl_integral(&unit_identity(), &r(0, 1), &r(1, 1)).unwrap(),
            r(1, 2)
        );
        let k = PiecewisePoly::constant(r(0, 1), r(2, 1), r(3, 1)).unwrap();
        assert_eq!(pl_integral(&k, &r(1, 3), &r(3, 2)).unwrap(), r(7, 2));
        assert_eq!(
            pl_integral(&p0_digit1(), &r(1, 2), &r(1, 1)).unwrap(),
            r(11, 32)
        );
        assert_eq!(
            pl_integral(&step_half(), &r(0, 1), &r(1, 1)).unwrap(),
            r(1, 2)
        );
        assert_eq!(
            pl_integral(&unit_identity(), &r(1, 2), &r(1, 4)),
            Err(PlError::ReversedBounds)
        );
        // a surd bound: ∫_0^{√2/3} x dx = 1/9
        let c = parse_cspec("0+1/3*sqrt(2)").unwrap();
        assert_eq!(
            pl_integral(&unit_identity(), &r(0, 1), &c).unwrap(),
            r(1, 9)
        );
    }

    #[test]
    fn sup_dist_examples() {
        let half =
            PiecewisePoly::polynomial(r(0, 1), r(1, 1), [r(0, 1), r(1, 2), r(0, 1)]).unwrap();
        let s = pl_sup_dist(&unit_identity(), &half).unwrap();
        assert_eq!((s.value, s.attained, s.at), (r(1, 2), true, r(1, 1)));
        let s = pl_sup_dist(&p0_digit1(), &p0_digit1()).unwrap();
        assert_eq!(s.value, r(0, 1));
        let other = PiecewisePoly::identity(r(0, 1), r(2, 1)).unwrap();
        assert_eq!(
            pl_sup_dist(&unit_identity(), &other),
            Err(PlError::DomainMismatch)
        );
    }

    #[test]
    fn sup_dist_quadratic_vertex() {
        // x − x² peaks at 1/2 with value 1/4
        let q = PiecewisePoly::polynomial(r(0, 1), r(1, 1), [r(0, 1), r(0, 1), r(1, 1)]).unwrap();
        let s = pl_sup_dist(&unit_identity(), &q).unwrap();
        assert_eq!((s.value, s.attained, s.at), (r(1, 4), true, r(1, 2)));
    }

    #[test]
    fn sup_dist_unattained_at_jump() {
        let zero = PiecewisePoly::constant(r(0, 1), r(1, 1), r(0, 1)).unwrap();
        let ramp = PiecewisePoly::new(vec![
            Piece::new(r(0, 1), r(1, 2), [r(0, 1), r(1, 1), r(0, 1)]),
            Piece::constant(r(1, 2), r(1, 1), r(0, 1)),
        ])
        .unwrap();
        let s = pl_sup_dist(&ramp, &zero).unwrap();
        assert_eq!((s.value, s.attained, s.at), (r(1, 2), false, r(1, 2)));
    }

    #[test]
    fn slopes() {
        assert_eq!(pl_max_abs_slope(&unit_identity()).unwrap(), r(1, 1));
        assert_eq!(
            pl_max_abs_slope(&PiecewisePoly::constant(r(0, 1), r(1, 1), r(5, 1)).unwrap()).unwrap(),
            r(0, 1)
        );
        assert_eq!(pl_max_abs_slope(&p0_digit1()).unwrap(), r(4, 1));
        let q = PiecewisePoly::polynomial(r(0, 1), r(1, 1), [r(0, 1), r(0, 1), r(1, 1)]).unwrap();
        assert_eq!(pl_max_abs_slope(&q), Err(PlError::NotLinear));
    }

    #[test]
    fn antiderivatives() {
        let one = PiecewisePoly::constant(r(0, 1), r(1, 1), r(1, 1)).unwrap();
        let f = pl_antiderivative(&one, &r(0, 1)).unwrap();
        assert_eq!(f.pieces()[0].coeffs, [r(0, 1), r(1, 1), r(0, 1)]);
        let f = pl_antiderivative(&unit_identity(), &r(0, 1)).unwrap();
        assert_eq!(pl_eval(&f, &r(1, 1)).unwrap(), r(1, 2));
        let g = pl_antiderivative(&p0_digit1(), &r(3, 4)).unwrap();
        assert_eq!(pl_eval(&g, &r(3, 4)).unwrap(), r(0, 1));
        assert!(g.is_continuous());
        assert_eq!(
            pl_eval(&g, &r(1, 1)).unwrap() - pl_eval(&g, &r(1, 2)).unwrap(),
            r(11, 32)
        );
        assert!(matches!(
            pl_antiderivative(&step_half(), &r(0, 1)),
            Err(PlError::Discontinuous(_))
        ));
    }

    #[test]
    fn derivatives() {
        let half_sq =
            PiecewisePoly::polynomial(r(0, 1), r(1, 1), [r(0, 1), r(0, 1), r(1, 2)]).unwrap();
        assert_eq!(pq_derivative_at(&half_sq, &r(1, 3)).unwrap(), r(1, 3));
        let vee = PiecewisePoly::through_points(&[
            (r(0, 1), r(1, 2)),
            (r(1, 2), r(0, 1)),
            (r(1, 1), r(1, 2)),
        ])
        .unwrap();
        match pq_derivative_at(&vee, &r(1, 2)) {
            Err(PlError::DerivativeMismatch { left, right, .. }) => {
                assert_eq!((left.as_str(), right.as_str()), ("-1", "1"))
            }
            other => panic!("expected mismatch, got {:?}", other),
        }
        let f = pl_antiderivative(&p0_digit1(), &r(1, 2)).unwrap();
        for x in [r(5, 8), r(3, 4), r(13, 16), r(7, 8), r(15, 16)] {
            assert_eq!(
                pq_derivative_at(&f, &x).unwrap(),
                pl_eval(&p0_digit1(), &x).unwrap()
            );
        }
    }

    #[test]
    fn mixed_fields_rejected() {
        let c2 = parse_cspec("0+1/3*sqrt(2)").unwrap();
        let c3 = parse_cspec("0+1/3*sqrt(3)").unwrap();
        let f = PiecewisePoly::constant(r(0, 1), r(1, 1), c2).unwrap();
        assert!(matches!(
            pl_eval(&f, &c3),
            Err(PlError::Field(FieldError::RadicandMismatch(2, 3)))
        ));
    }

    #[test]
    fn samples() {
        let s = sample(&unit_identity(), 4);
        assert_eq!(s.len(), 5);
        assert_eq!(s[3], (r(3, 4), r(3, 4)));
    }
}
