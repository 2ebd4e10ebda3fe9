//! The exact integrals of t_N close in on an irrational target at rate 4^-(N+1).

use subfield_calc::exactfield::parse_cspec;
use subfield_calc::propp::convergence_report;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let c = parse_cspec("1/3*sqrt(2)")?;
    println!("target {} ≈ {}", c, c.to_decimal(20));
    for row in convergence_report(&c, 30)? {
        println!(
            "N={:>2}  ∫t_N = {:<40}  error ≈ {}  within 4^-(N+1): {}",
            row.depth,
            row.integral.to_string(),
            row.error.to_decimal(12),
            row.within_bound()
        );
    }
    Ok(())
}
