//! The evaluation identity ∫f = F(b) − F(a) holds for true antiderivatives
//! and fails for the step at c, whose derivative is zero everywhere in the field.

use subfield_calc::exactfield::{extract_digits, parse_cspec, FieldElement};
use subfield_calc::plcalc::{pl_antiderivative, PiecewisePoly};
use subfield_calc::probes::{evaluation_identity_check, step_function};
use subfield_calc::propp::{truncation_with, Fill};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let c = parse_cspec("1/3*sqrt(2)")?;
    let (zero, one) = (FieldElement::zero(), FieldElement::one());

    let t = truncation_with(&extract_digits(&c, 8)?, 6, Fill::Diagonal)?;
    let big_t = pl_antiderivative(&t, &zero)?;
    let ok = evaluation_identity_check(&big_t, &t, &zero, &one)?;
    println!(
        "filled t_6 with its antiderivative: holds={} discrepancy={}",
        ok.holds, ok.discrepancy
    );

    let step = step_function(&c)?;
    let flat = PiecewisePoly::constant(zero.clone(), one.clone(), zero.clone())?;
    let bad = evaluation_identity_check(&step, &flat, &zero, &one)?;
    println!(
        "step with zero derivative: ∫f = {}, F(1)−F(0) = {}, holds={}",
        bad.integral, bad.increment, bad.holds
    );
    Ok(())
}
