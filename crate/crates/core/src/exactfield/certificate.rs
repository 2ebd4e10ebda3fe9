use std::fmt;

use num_rational::BigRational;

use super::element::{format_rational, FieldElement};

/// Symbolic proof that a value is not rational: it is `a + b√d` with `b ≠ 0`
/// and `d` square-free, so `√d` (hence the value) is irrational.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IrrationalityCertificate {
    pub value: FieldElement,
    pub surd_coefficient: BigRational,
    pub radicand: u64,
}

impl IrrationalityCertificate {
    pub fn for_value(x: &FieldElement) -> Option<Self> {
        x.radicand().map(|d| Self {
            value: x.clone(),
            surd_coefficient: x.b().clone(),
            radicand: d,
        })
    }
}

impl fmt::Display for IrrationalityCertificate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} is not in Q: surd coefficient {} is nonzero and radicand {} is square-free",
            self.value,
            format_rational(&self.surd_coefficient),
            self.radicand
        )
    }
}
