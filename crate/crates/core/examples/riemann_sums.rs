//! Right Riemann sums of t_20 are rational at every n, yet approach an irrational.

use subfield_calc::exactfield::{extract_digits, parse_cspec};
use subfield_calc::propp::truncation;
use subfield_calc::riemann::sum_convergence_table;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let c = parse_cspec("1/3*sqrt(2)")?;
    let depth = 20;
    let t = truncation(&extract_digits(&c, depth as usize + 2)?, depth)?;
    let table = sum_convergence_table(&t, &c, &[10, 100, 1000, 10000])?;
    for row in &table.rows {
        println!(
            "n={:>6}  S_n ≈ {}  |S_n − c| ≈ {}",
            row.n, row.value_decimal, row.error_decimal
        );
    }
    if let Some(cert) = table.certificate {
        println!("{cert}");
    }
    Ok(())
}
