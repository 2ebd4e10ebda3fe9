//! Renders t_N for a surd target as SVG, with and without the diagonal fill.
//!
//! cargo run --example construct_svg -- 4 > t4.svg

use subfield_calc::cli::{render_svg, RenderOptions};
use subfield_calc::exactfield::{extract_digits, parse_cspec};
use subfield_calc::propp::{truncation_with, Fill};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let depth: u32 = std::env::args()
        .nth(1)
        .map(|s| s.parse())
        .transpose()?
        .unwrap_or(4);
    let c = parse_cspec("1/3*sqrt(2)")?;
    let prefix = extract_digits(&c, depth as usize + 2)?;

    let jumpy = truncation_with(&prefix, depth, Fill::Zero)?;
    let filled = truncation_with(&prefix, depth, Fill::Diagonal)?;
    eprintln!(
        "t_{depth}: {} pieces, continuous={}; filled: {} pieces, continuous={}",
        jumpy.pieces().len(),
        jumpy.is_continuous(),
        filled.pieces().len(),
        filled.is_continuous()
    );
    print!("{}", render_svg(&jumpy, &RenderOptions::default())?);
    Ok(())
}
