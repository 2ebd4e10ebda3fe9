//! Exact right sums of 1/(1+x²) on [0,1] against π/4.

use subfield_calc::cli::pi_over_4;
use subfield_calc::exactfield::FieldElement;
use subfield_calc::riemann::{rational_fn_right_sum, RationalFn};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let reference = pi_over_4();
    for n in [1usize, 10, 100, 1000, 10000] {
        let s = rational_fn_right_sum(RationalFn::RecipOnePlusXSquared, n)?;
        let err = FieldElement::rational(&reference - &s).abs();
        println!(
            "n={n:>5}  denominator has {:>5} digits  π/4 − S_n ≈ {}",
            s.denom().to_string().len(),
            err.to_decimal(12)
        );
    }
    Ok(())
}
