//! Command-line front end.
//!
//! Every exact value is printed as a string (`p/q` or `a+b*sqrt(d)`, both
//! readable by the c-spec parser); decimals appear only in columns whose
//! names end in `_decimal`. Output is deterministic byte for byte.

mod svg;

use std::fmt::Write as _;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use num_rational::BigRational;

pub use svg::{
    polyline_vertices, render_svg, viewport_point, RenderOptions, SvgError, PIXEL_PLACES,
};

use crate::exactfield::{
    extract_digits, format_rational, parse_cspec, parse_rational, FieldElement,
    IrrationalityCertificate,
};
use crate::plcalc::{pl_antiderivative, sample, PiecewisePoly};
use crate::probes::{evaluation_identity_check, modulus_scan, step_blowup, step_function};
use crate::propp::{check_target, convergence_report, truncation_with, Fill};
use crate::riemann::{rational_fn_right_sum, sum_convergence_table, RationalFn};

/// Environment variable capping every depth argument.
pub const MAX_DEPTH_VAR: &str = "SUBFIELD_CALC_MAX_DEPTH";
pub const DEFAULT_MAX_DEPTH: u32 = 200;

/// Decimal places in `_decimal` columns.
pub const DECIMAL_PLACES: usize = 20;

/// π/4 to 30 places, truncated.
pub const PI_OVER_4: &str = "0.785398163397448309615660845819";

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{0}")]
    Domain(String),
    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => 2,
            CliError::Domain(_) | CliError::Io(_) => 1,
        }
    }
}

fn domain<E: std::fmt::Display>(e: E) -> CliError {
    CliError::Domain(e.to_string())
}

#[derive(Parser, Debug)]
#[command(
    name = "subfield-calc",
    version,
    about = "Exact calculus over ordered subfields of the reals"
)]
struct Cli {
    /// Write output to this file instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug)]
struct Target {
    /// Target value, e.g. "0+1/3*sqrt(2)".
    #[arg(long = "c")]
    c: String,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Base-4 digits of c − 3/8 and the bracket they pin c to.
    Digits {
        #[command(flatten)]
        target: Target,
        #[arg(long)]
        count: usize,
    },
    /// Build the truncation t_N and emit it as SVG, CSV samples or JSON.
    Construct {
        #[command(flatten)]
        target: Target,
        #[arg(long)]
        depth: u32,
        /// Use y = x below 2^-(N+1) instead of zero, giving a continuous function.
        #[arg(long)]
        continuous_fill: bool,
        #[arg(long, value_enum)]
        format: Format,
        /// CSV sample count per unit interval.
        #[arg(long, default_value_t = 64)]
        resolution: usize,
        #[arg(long, default_value_t = 640)]
        width: u32,
        #[arg(long, default_value_t = 640)]
        height: u32,
        #[arg(long, default_value_t = 16)]
        samples: usize,
        #[arg(long, default_value_t = 2)]
        stroke: u32,
    },
    /// Exact integral of t_N against c.
    Integrate {
        #[command(flatten)]
        target: Target,
        #[arg(long)]
        depth: u32,
        /// Emit the whole table for N = 0..=depth as CSV.
        #[arg(long)]
        table: bool,
    },
    /// Right sums of t_N at the given point counts, compared with c.
    Riemann {
        #[command(flatten)]
        target: Target,
        #[arg(long)]
        depth: u32,
        #[arg(long, value_delimiter = ',', required = true)]
        points: Vec<usize>,
    },
    /// Counterexamples built on a step at c.
    Counterexample {
        #[arg(value_enum)]
        kind: CounterexampleKind,
        #[command(flatten)]
        target: Target,
        /// Number of bracket rows for `step`.
        #[arg(long, default_value_t = 10)]
        n: usize,
    },
    /// Differentiability probes.
    Probe {
        #[arg(value_enum)]
        kind: ProbeKind,
        #[command(flatten)]
        target: Target,
        #[arg(long)]
        depth: u32,
        /// Pair distance bound, as a rational p/q.
        #[arg(long)]
        delta: String,
        /// Number of grid cells.
        #[arg(long)]
        grid: usize,
    },
    /// Stand-alone demonstrations.
    Demo {
        #[arg(value_enum)]
        kind: DemoKind,
        #[arg(long)]
        points: usize,
    },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Format {
    Svg,
    Csv,
    Json,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum CounterexampleKind {
    Step,
    Et,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum ProbeKind {
    Modulus,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum DemoKind {
    Arctan,
}

/// Runs the CLI on `argv` (program name first) and returns the exit code.
/// Normal output goes to `out` unless `--out` names a file; diagnostics go to `err`.
pub fn run<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{}", e);
                    return 0;
                }
                _ => 2,
            };
            let _ = write!(err, "{}", e);
            return code;
        }
    };
    let max_depth = match max_depth_from_env() {
        Ok(d) => d,
        Err(e) => {
            let _ = writeln!(err, "error: {}", e);
            return e.exit_code();
        }
    };
    let result = execute(&cli.command, max_depth, err).and_then(|text| match &cli.out {
        Some(path) => std::fs::write(path, text).map_err(CliError::from),
        None => out.write_all(text.as_bytes()).map_err(CliError::from),
    });
    match result {
        Ok(()) => 0,
        Err(e) => {
            let _ = writeln!(err, "error: {}", e);
            e.exit_code()
        }
    }
}

fn max_depth_from_env() -> Result<u32, CliError> {
    match std::env::var(MAX_DEPTH_VAR) {
        Ok(v) => v.trim().parse().map_err(|_| {
            CliError::Usage(format!(
                "{} must be a non-negative integer, got {:?}",
                MAX_DEPTH_VAR, v
            ))
        }),
        Err(_) => Ok(DEFAULT_MAX_DEPTH),
    }
}

fn parse_target(t: &Target) -> Result<FieldElement, CliError> {
    parse_cspec(&t.c).map_err(|e| CliError::Usage(format!("invalid --c {:?}: {}", t.c, e)))
}

fn check_depth(depth: u64, max: u32) -> Result<(), CliError> {
    if depth > u64::from(max) {
        return Err(CliError::Domain(format!(
            "depth {} exceeds the cap {} (set {} to raise it)",
            depth, max, MAX_DEPTH_VAR
        )));
    }
    Ok(())
}

fn rat(q: &BigRational) -> String {
    format_rational(q)
}

fn dec(x: &FieldElement) -> String {
    x.to_decimal(DECIMAL_PLACES)
}

fn csv_line(fields: &[String]) -> String {
    debug_assert!(fields.iter().all(|f| !f.contains(',')));
    let mut line = fields.join(",");
    line.push('\n');
    line
}

fn execute(cmd: &Command, max_depth: u32, err: &mut dyn Write) -> Result<String, CliError> {
    match cmd {
        Command::Digits { target, count } => {
            let c = parse_target(target)?;
            check_depth(*count as u64, max_depth.saturating_add(2))?;
            let p = extract_digits(&c, *count).map_err(domain)?;
            let digits: Vec<String> = p.digits().iter().map(|d| d.to_string()).collect();
            let lo = FieldElement::rational(p.lo().clone());
            let hi = FieldElement::rational(p.hi().clone());
            let mut s = String::new();
            let _ = writeln!(s, "c = {}", c);
            let _ = writeln!(s, "digits = {}", digits.join(","));
            let _ = writeln!(s, "lo = {}", rat(p.lo()));
            let _ = writeln!(s, "hi = {}", rat(p.hi()));
            let _ = writeln!(s, "lo_decimal = {}", dec(&lo));
            let _ = writeln!(s, "hi_decimal = {}", dec(&hi));
            Ok(s)
        }
        Command::Construct {
            target,
            depth,
            continuous_fill,
            format,
            resolution,
            width,
            height,
            samples,
            stroke,
        } => {
            let c = parse_target(target)?;
            check_depth(u64::from(*depth), max_depth)?;
            let prefix = extract_digits(&c, *depth as usize + 2).map_err(domain)?;
            let fill = if *continuous_fill {
                Fill::Diagonal
            } else {
                Fill::Zero
            };
            let t = truncation_with(&prefix, *depth, fill).map_err(domain)?;
            match format {
                Format::Json => {
                    let mut s = serde_json::to_string(&t).map_err(domain)?;
                    s.push('\n');
                    Ok(s)
                }
                Format::Csv => {
                    if *resolution == 0 {
                        return Err(CliError::Usage("--resolution must be positive".into()));
                    }
                    Ok(samples_csv(&t, *resolution))
                }
                Format::Svg => {
                    let opts = RenderOptions {
                        width: *width,
                        height: *height,
                        samples_per_piece: *samples,
                        stroke_width: *stroke,
                    };
                    render_svg(&t, &opts).map_err(|e| CliError::Usage(e.to_string()))
                }
            }
        }
        Command::Integrate {
            target,
            depth,
            table,
        } => {
            let c = parse_target(target)?;
            check_depth(u64::from(*depth), max_depth)?;
            let rows = convergence_report(&c, *depth).map_err(domain)?;
            let mut s = String::new();
            if *table {
                s.push_str(&csv_line(
                    &[
                        "N",
                        "integral_num",
                        "integral_den",
                        "integral_decimal",
                        "error",
                        "error_decimal",
                        "bound",
                        "bound_decimal",
                    ]
                    .map(String::from),
                ));
                for row in &rows {
                    let q = row
                        .integral
                        .as_rational()
                        .expect("partial integrals are rational");
                    let bound = FieldElement::rational(row.error_bound.clone());
                    s.push_str(&csv_line(&[
                        row.depth.to_string(),
                        q.numer().to_string(),
                        q.denom().to_string(),
                        row.decimal.clone(),
                        row.error.to_string(),
                        dec(&row.error),
                        rat(&row.error_bound),
                        dec(&bound),
                    ]));
                }
            } else {
                let row = rows.last().expect("depth 0 gives one row");
                let bound = FieldElement::rational(row.error_bound.clone());
                let _ = writeln!(s, "c = {}", c);
                let _ = writeln!(s, "depth = {}", row.depth);
                let _ = writeln!(s, "integral = {}", row.integral);
                let _ = writeln!(s, "integral_decimal = {}", row.decimal);
                let _ = writeln!(s, "error = {}", row.error);
                let _ = writeln!(s, "error_decimal = {}", dec(&row.error));
                let _ = writeln!(s, "bound = {}", rat(&row.error_bound));
                let _ = writeln!(s, "bound_decimal = {}", dec(&bound));
                let _ = writeln!(s, "within_bound = {}", row.within_bound());
            }
            Ok(s)
        }
        Command::Riemann {
            target,
            depth,
            points,
        } => {
            let c = parse_target(target)?;
            check_depth(u64::from(*depth), max_depth)?;
            check_target(&c).map_err(domain)?;
            let prefix = extract_digits(&c, *depth as usize + 2).map_err(domain)?;
            let t = truncation_with(&prefix, *depth, Fill::Zero).map_err(domain)?;
            let table = sum_convergence_table(&t, &c, points).map_err(domain)?;
            if let Some(cert) = &table.certificate {
                let _ = writeln!(err, "note: {}", cert);
            }
            let irrational = table.certificate.is_some().to_string();
            let mut s = csv_line(
                &[
                    "n",
                    "value",
                    "value_decimal",
                    "error",
                    "error_decimal",
                    "target_irrational",
                ]
                .map(String::from),
            );
            for row in &table.rows {
                s.push_str(&csv_line(&[
                    row.n.to_string(),
                    row.value.to_string(),
                    row.value_decimal.clone(),
                    row.error.to_string(),
                    row.error_decimal.clone(),
                    irrational.clone(),
                ]));
            }
            Ok(s)
        }
        Command::Counterexample { kind, target, n } => {
            let c = parse_target(target)?;
            match kind {
                CounterexampleKind::Step => {
                    check_depth(*n as u64, max_depth)?;
                    let rows = step_blowup(&c, *n).map_err(domain)?;
                    let mut s = csv_line(
                        &[
                            "n",
                            "x_minus",
                            "x_plus",
                            "x_minus_decimal",
                            "x_plus_decimal",
                            "quotient",
                        ]
                        .map(String::from),
                    );
                    for row in rows {
                        s.push_str(&csv_line(&[
                            row.n.to_string(),
                            rat(&row.x_minus),
                            rat(&row.x_plus),
                            dec(&FieldElement::rational(row.x_minus.clone())),
                            dec(&FieldElement::rational(row.x_plus.clone())),
                            rat(&row.quotient),
                        ]));
                    }
                    Ok(s)
                }
                CounterexampleKind::Et => {
                    check_target(&c).map_err(domain)?;
                    let big_f = step_function(&c).map_err(domain)?;
                    let zero = PiecewisePoly::constant(
                        FieldElement::zero(),
                        FieldElement::one(),
                        FieldElement::zero(),
                    )
                    .map_err(domain)?;
                    let check = evaluation_identity_check(
                        &big_f,
                        &zero,
                        &FieldElement::zero(),
                        &FieldElement::one(),
                    )
                    .map_err(domain)?;
                    let verdict = if check.holds {
                        "FTC2 holds"
                    } else {
                        "FTC2 violated"
                    };
                    let mut s = String::new();
                    let _ = writeln!(
                        s,
                        "∫f = {}, F(1)−F(0) = {}, {}",
                        check.integral, check.increment, verdict
                    );
                    let _ = writeln!(s, "discrepancy = {}", check.discrepancy);
                    if let Some(cert) = IrrationalityCertificate::for_value(&c) {
                        let _ = writeln!(s, "certificate = {}", cert);
                    }
                    Ok(s)
                }
            }
        }
        Command::Probe {
            kind: ProbeKind::Modulus,
            target,
            depth,
            delta,
            grid,
        } => {
            let c = parse_target(target)?;
            check_depth(u64::from(*depth), max_depth)?;
            let delta = parse_rational(delta)
                .map_err(|e| CliError::Usage(format!("invalid --delta: {}", e)))?;
            let prefix = extract_digits(&c, *depth as usize + 2).map_err(domain)?;
            let t = truncation_with(&prefix, *depth, Fill::Diagonal).map_err(domain)?;
            let big_f = pl_antiderivative(&t, &FieldElement::zero()).map_err(domain)?;
            let rep = modulus_scan(&big_f, &delta, *grid).map_err(domain)?;
            let mut s = csv_line(
                &[
                    "delta",
                    "grid",
                    "pairs",
                    "x",
                    "y",
                    "worst_value",
                    "worst_value_decimal",
                    "lipschitz",
                    "bound",
                    "within_bound",
                ]
                .map(String::from),
            );
            s.push_str(&csv_line(&[
                rat(&rep.delta),
                grid.to_string(),
                rep.pairs_scanned.to_string(),
                rep.worst_pair.0.to_string(),
                rep.worst_pair.1.to_string(),
                rep.worst_value.to_string(),
                dec(&rep.worst_value),
                rep.lipschitz.to_string(),
                rep.bound.to_string(),
                rep.within_bound().to_string(),
            ]));
            Ok(s)
        }
        Command::Demo {
            kind: DemoKind::Arctan,
            points,
        } => {
            let sum =
                rational_fn_right_sum(RationalFn::RecipOnePlusXSquared, *points).map_err(domain)?;
            let reference = pi_over_4();
            let value = FieldElement::rational(sum.clone());
            let diff = FieldElement::rational(&sum - &reference).abs();
            let mut s = String::new();
            let _ = writeln!(s, "{}", rat(&sum));
            let _ = writeln!(s, "decimal = {}", dec(&value));
            let _ = writeln!(s, "pi_over_4 = {}", &PI_OVER_4[..DECIMAL_PLACES + 2]);
            let _ = writeln!(s, "abs_error_decimal = {}", dec(&diff));
            Ok(s)
        }
    }
}

/// [`PI_OVER_4`] as an exact rational.
pub fn pi_over_4() -> BigRational {
    parse_decimal(PI_OVER_4)
}

fn parse_decimal(text: &str) -> BigRational {
    let (int, frac) = text.split_once('.').unwrap_or((text, ""));
    let digits: BigInt = format!("{}{}", int, frac).parse().expect("decimal literal");
    BigRational::new(digits, BigInt::from(10u32).pow(frac.len() as u32))
}

/// Samples of `f` as CSV, for callers outside the CLI.
pub fn samples_csv(f: &PiecewisePoly, resolution: usize) -> String {
    let mut s = csv_line(&[
        "x".into(),
        "y".into(),
        "x_decimal".into(),
        "y_decimal".into(),
    ]);
    for (x, y) in sample(f, resolution) {
        s.push_str(&csv_line(&[x.to_string(), y.to_string(), dec(&x), dec(&y)]));
    }
    s
}
