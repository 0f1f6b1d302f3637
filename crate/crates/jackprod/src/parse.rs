//! Text forms accepted on the command line: exact rationals, partitions and
//! coordinate lists.

use std::fmt;

use jackprod_core::partition::Partition;
use jackprod_core::scalar::{Rational, Scalar};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParseError(pub String);

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::error::Error for ParseError {}

fn err(what: &str, input: &str) -> ParseError {
    ParseError(format!("invalid {what}: {input:?}"))
}

/// Parses "p/q", an integer, or a decimal with optional exponent, exactly.
/// "0.8" becomes 4/5, "1e-3" becomes 1/1000.
pub fn parse_rational(input: &str) -> Result<Rational, ParseError> {
    let s = input.trim();
    if s.contains('/') {
        let q: Rational = s.parse().map_err(|_| err("rational", input))?;
        return Ok(q);
    }
    let (mantissa, exponent) = match s.find(['e', 'E']) {
        Some(pos) => {
            let e: i32 = s[pos + 1..].parse().map_err(|_| err("number", input))?;
            (&s[..pos], e)
        }
        None => (s, 0),
    };
    let (sign, digits) = match mantissa.strip_prefix('-') {
        Some(rest) => ("-", rest),
        None => ("", mantissa.strip_prefix('+').unwrap_or(mantissa)),
    };
    let (int_part, frac_part) = digits.split_once('.').unwrap_or((digits, ""));
    let all_digits = |t: &str| t.bytes().all(|b| b.is_ascii_digit());
    if int_part.len() + frac_part.len() == 0 || !all_digits(int_part) || !all_digits(frac_part) {
        return Err(err("number", input));
    }
    let shift = exponent - frac_part.len() as i32;
    if shift.unsigned_abs() > 400 {
        return Err(err("number (exponent out of range)", input));
    }
    let zeros = "0".repeat(shift.unsigned_abs() as usize);
    let text = if shift >= 0 {
        format!("{sign}{int_part}{frac_part}{zeros}")
    } else {
        format!("{sign}{int_part}{frac_part}/1{zeros}")
    };
    text.parse().map_err(|_| err("number", input))
}

/// Comma-separated rationals.
pub fn parse_rational_list(input: &str) -> Result<Vec<Rational>, ParseError> {
    input.split(',').map(parse_rational).collect()
}

/// Comma-separated rationals converted to floats.
pub fn parse_f64_list(input: &str) -> Result<Vec<f64>, ParseError> {
    Ok(parse_rational_list(input)?.iter().map(Scalar::to_f64).collect())
}

/// Exactly two comma-separated values.
pub fn parse_f64_pair(input: &str) -> Result<[f64; 2], ParseError> {
    match parse_f64_list(input)?[..] {
        [a, b] => Ok([a, b]),
        _ => Err(err("pair (expected two comma-separated values)", input)),
    }
}

pub fn parse_rational_pair(input: &str) -> Result<[Rational; 2], ParseError> {
    let v = parse_rational_list(input)?;
    match <[Rational; 2]>::try_from(v) {
        Ok(pair) => Ok(pair),
        Err(_) => Err(err("pair (expected two comma-separated values)", input)),
    }
}

/// "3,1" or "3 1" or "(3,1)"; "" and "0" give the empty partition.
pub fn parse_partition(input: &str) -> Result<Partition, ParseError> {
    let s = input.trim().trim_start_matches('(').trim_end_matches(')');
    let parts = s
        .split([',', ' '])
        .filter(|t| !t.is_empty())
        .map(|t| t.parse::<u32>().map_err(|_| err("partition", input)))
        .collect::<Result<Vec<_>, _>>()?;
    Partition::new(parts).map_err(|_| err("partition (parts must be weakly decreasing)", input))
}

#[cfg(test)]
mod tests {
    use super::*;
    use jackprod_core::scalar::rational;

    #[test]
    fn rationals() {
        assert_eq!(parse_rational("1/2").unwrap(), rational(1, 2));
        assert_eq!(parse_rational(" -6/4 ").unwrap(), rational(-3, 2));
        assert_eq!(parse_rational("3").unwrap(), rational(3, 1));
        assert_eq!(parse_rational("0.8").unwrap(), rational(4, 5));
        assert_eq!(parse_rational("-2.75").unwrap(), rational(-11, 4));
        assert_eq!(parse_rational(".5").unwrap(), rational(1, 2));
        assert_eq!(parse_rational("1e-3").unwrap(), rational(1, 1000));
        assert_eq!(parse_rational("2.5E2").unwrap(), rational(250, 1));
        for bad in ["", "abc", "1/0x", "1..2", "e5", "1e", "--1"] {
            assert!(parse_rational(bad).is_err(), "{bad}");
        }
    }

    #[test]
    fn lists_and_pairs() {
        assert_eq!(parse_f64_pair("0.6,0.2").unwrap(), [0.6, 0.2]);
        assert_eq!(parse_f64_pair("1/2,3").unwrap(), [0.5, 3.0]);
        assert!(parse_f64_pair("1,2,3").is_err());
        assert_eq!(parse_rational_pair("4/5,13/10").unwrap(), [rational(4, 5), rational(13, 10)]);
    }

    #[test]
    fn partitions() {
        assert_eq!(parse_partition("3,1").unwrap().parts(), &[3, 1]);
        assert_eq!(parse_partition("(2,2,0)").unwrap().parts(), &[2, 2]);
        assert_eq!(parse_partition("2 1").unwrap().parts(), &[2, 1]);
        assert!(parse_partition("0").unwrap().is_empty());
        assert!(parse_partition("").unwrap().is_empty());
        assert!(parse_partition("1,3").is_err());
        assert!(parse_partition("a").is_err());
    }
}
