//! Base-4 digits of c − 3/8 and the shrinking brackets they define.
//!
//! cargo run --example digits -- "0+1/3*sqrt(2)" 12

use subfield_calc::exactfield::{extract_digits, format_rational, parse_cspec};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let mut args = std::env::args().skip(1);
    let c = parse_cspec(&args.next().unwrap_or_else(|| "0+1/3*sqrt(2)".into()))?;
    let count: usize = args.next().map(|s| s.parse()).transpose()?.unwrap_or(12);

    let prefix = extract_digits(&c, count)?;
    println!("c = {} ≈ {}", c, c.to_decimal(20));
    for n in 1..=count {
        let p = prefix.truncated(n)?;
        println!(
            "n={:>2} digit={} bracket=[{}, {}]",
            n,
            p.digits()[n - 1],
            format_rational(p.lo()),
            format_rational(p.hi())
        );
    }
    Ok(())
}
