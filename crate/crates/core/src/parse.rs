//! Text grammar shared by the library and the CLI.
//!
//! A semigroup is written by generators, `<5,6,7>` or `5,6,7`; `N` is
//! accepted for the naturals. Element sets are plain comma lists, optionally
//! braced (`{4,6}`), and may be empty.

use std::str::FromStr;

use crate::error::{Error, Result};
use crate::semigroup::NumericalSemigroup;

/// Largest integer accepted from text.
pub const MAX_INPUT: u64 = i64::MAX as u64;

fn parse_integer(token: &str) -> Result<u64> {
    let token = token.trim();
    if token.is_empty() {
        return Err(Error::parse(token, "expected an integer"));
    }
    if token.starts_with('-') {
        return Err(Error::parse(token, "negative integers are not allowed"));
    }
    let value: u64 = token
        .parse()
        .map_err(|_| Error::parse(token, "not a nonnegative integer"))?;
    if value > MAX_INPUT {
        return Err(Error::parse(token, "integer exceeds 2^63-1"));
    }
    Ok(value)
}

fn strip_delims(text: &str, open: char, close: char) -> Result<&str> {
    let text = text.trim();
    match (text.starts_with(open), text.ends_with(close)) {
        (true, true) if text.len() >= 2 => {
            Ok(&text[open.len_utf8()..text.len() - close.len_utf8()])
        }
        (false, false) => Ok(text),
        _ => Err(Error::parse(text, format!("unbalanced `{open}{close}`"))),
    }
}

fn parse_list(body: &str) -> Result<Vec<u64>> {
    if body.trim().is_empty() {
        return Ok(Vec::new());
    }
    body.split(',').map(parse_integer).collect()
}

/// Parses a generator list such as `<4,6,7>`.
pub fn parse_generators(text: &str) -> Result<Vec<u64>> {
    let body = strip_delims(text, '<', '>')?;
    let gens = parse_list(body)?;
    if gens.is_empty() {
        return Err(Error::parse(text.trim(), "empty generator list"));
    }
    if let Some(pos) = gens.iter().position(|&g| g == 0) {
        let token = body.split(',').nth(pos).unwrap_or("0").trim();
        return Err(Error::parse(token, "generators must be positive"));
    }
    Ok(gens)
}

pub fn parse_semigroup(text: &str) -> Result<NumericalSemigroup> {
    let trimmed = text.trim();
    if trimmed == "N" || trimmed == "ℕ" {
        return Ok(NumericalSemigroup::natural());
    }
    NumericalSemigroup::from_generators(&parse_generators(trimmed)?)
}

/// Parses a possibly empty element set such as `4,6` or `{4,6}`.
pub fn parse_elements(text: &str) -> Result<Vec<u64>> {
    let mut values = parse_list(strip_delims(text, '{', '}')?)?;
    values.sort_unstable();
    values.dedup();
    Ok(values)
}

/// Parses `S1;S2;...`.
pub fn parse_family(text: &str) -> Result<Vec<NumericalSemigroup>> {
    text.split(';')
        .filter(|part| !part.trim().is_empty())
        .map(parse_semigroup)
        .collect()
}

/// Splits `LEFT:RIGHT` at the last colon.
pub fn split_bound(text: &str) -> Result<(&str, &str)> {
    text.rsplit_once(':')
        .ok_or_else(|| Error::parse(text, "expected `...:MAXIMUM`"))
}

impl FromStr for NumericalSemigroup {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse_semigroup(s)
    }
}
