//! Parsing of the textual argument formats shared by every subcommand.

use flagcy_core::rational::parse_rational;
use flagcy_core::{InvariantClass, LineBundleClass, ParabolicFlag, Rational};
use num_bigint::BigInt;

/// Comma-separated 1-based simple-root indices; empty means the full flag.
pub fn parse_index_list(text: &str) -> Result<Vec<usize>, String> {
    let text = text.trim();
    if text.is_empty() {
        return Ok(Vec::new());
    }
    text.split(',')
        .map(|s| {
            let s = s.trim();
            match s.parse::<usize>() {
                Ok(0) | Err(_) => Err(format!("`{s}` is not a 1-based simple-root index")),
                Ok(i) => Ok(i - 1),
            }
        })
        .collect()
}

pub fn parse_rational_arg(text: &str) -> Result<Rational, String> {
    parse_rational(text.trim()).ok_or_else(|| format!("`{}` is not a rational number", text.trim()))
}

fn parse_rationals(text: &str) -> Result<Vec<Rational>, String> {
    text.split(',').map(parse_rational_arg).collect()
}

/// A class over `Δ∖I`: either `anticanonical` or comma-separated rationals.
pub fn parse_class(text: &str, flag: &ParabolicFlag) -> Result<InvariantClass, String> {
    if text.trim().eq_ignore_ascii_case("anticanonical") {
        return Ok(flag.anticanonical_class());
    }
    let coeffs = parse_rationals(text)?;
    if coeffs.len() != flag.picard_rank() {
        return Err(format!(
            "expected {} coefficients over the complement of the parabolic set, got {}",
            flag.picard_rank(),
            coeffs.len()
        ));
    }
    Ok(InvariantClass::new(coeffs, 0))
}

/// Semicolon-separated line bundles, each a comma-separated integer vector.
pub fn parse_bundles(text: &str, flag: &ParabolicFlag) -> Result<Vec<LineBundleClass>, String> {
    let text = text.trim();
    if text.is_empty() {
        return Ok(Vec::new());
    }
    text.split(';')
        .map(|chunk| {
            let coeffs = chunk
                .split(',')
                .map(|s| {
                    s.trim()
                        .parse::<BigInt>()
                        .map_err(|_| format!("`{}` is not an integer", s.trim()))
                })
                .collect::<Result<Vec<_>, _>>()?;
            if coeffs.len() != flag.picard_rank() {
                return Err(format!(
                    "bundle `{}` has {} coefficients, expected {}",
                    chunk.trim(),
                    coeffs.len(),
                    flag.picard_rank()
                ));
            }
            Ok(LineBundleClass::new(coeffs))
        })
        .collect()
}
