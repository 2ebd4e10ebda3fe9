//! Exact calculus over ordered subfields of ℝ.
//!
//! Scalars are rationals or quadratic surds ([`exactfield`]); functions are
//! piecewise polynomials of degree at most two ([`plcalc`]). On top of that sit
//! the base-4 digit function whose integral is a prescribed irrational
//! ([`propp`]), exact Riemann sums ([`riemann`]), differentiability probes and
//! counterexamples ([`probes`]), and the command-line front end ([`cli`]).

pub mod cli;
pub mod exactfield;
pub mod plcalc;
pub mod probes;
pub mod propp;
pub mod riemann;
