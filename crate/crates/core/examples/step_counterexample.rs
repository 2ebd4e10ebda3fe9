//! A step at an irrational c: zero derivative at every field point, yet
//! difference quotients across c grow like 4^n.

use subfield_calc::exactfield::{parse_cspec, FieldElement};
use subfield_calc::probes::{pointwise_zero_derivative_witness, step_blowup};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let c = parse_cspec("1/3*sqrt(2)")?;
    for row in step_blowup(&c, 12)? {
        println!("n={:>2}  quotient over bracket = {}", row.n, row.quotient);
    }
    for x in [FieldElement::ratio(1, 2), FieldElement::ratio(471, 1000)] {
        let delta = pointwise_zero_derivative_witness(&c, &x)?;
        println!(
            "at x={x}: quotients vanish within δ ≈ {}",
            delta.to_decimal(10)
        );
    }
    Ok(())
}
