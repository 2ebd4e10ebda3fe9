//! Uniform differentiability of the antiderivative of the filled t_10:
//! the worst quotient gap on a grid stays below L·δ.

use num_rational::BigRational;
use subfield_calc::exactfield::{extract_digits, parse_cspec, FieldElement};
use subfield_calc::plcalc::pl_antiderivative;
use subfield_calc::probes::modulus_scan;
use subfield_calc::propp::{truncation_with, Fill};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let c = parse_cspec("1/3*sqrt(2)")?;
    let t = truncation_with(&extract_digits(&c, 12)?, 10, Fill::Diagonal)?;
    let big_f = pl_antiderivative(&t, &FieldElement::zero())?;
    for k in 1..=8u32 {
        let delta = BigRational::new(1.into(), (1u64 << k).into());
        let rep = modulus_scan(&big_f, &delta, 1 << (k + 1))?;
        println!(
            "δ=2^-{k:<2} worst={:<12} bound={:<8} ok={}",
            rep.worst_value.to_string(),
            rep.bound.to_string(),
            rep.within_bound()
        );
    }
    Ok(())
}
