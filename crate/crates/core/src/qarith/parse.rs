//! Parser for the coefficient text forms written by `Display`.

use num_bigint::BigInt;

use super::{LaurentInt, RatFn};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("cannot parse coefficient {input:?}: {reason}")]
pub struct ParseCoeffError {
    pub input: String,
    pub reason: &'static str,
}

fn err(input: &str, reason: &'static str) -> ParseCoeffError {
    ParseCoeffError { input: input.to_string(), reason }
}

pub(super) fn parse_laurent(s: &str) -> Result<LaurentInt, ParseCoeffError> {
    let t: String = s.chars().filter(|c| !c.is_whitespace()).collect();
    if t.is_empty() {
        return Err(err(s, "empty"));
    }
    let bytes = t.as_bytes();
    let mut terms = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let mut sign = 1i64;
        if bytes[i] == b'+' || bytes[i] == b'-' {
            if bytes[i] == b'-' {
                sign = -1;
            }
            i += 1;
        } else if i != 0 {
            return Err(err(s, "expected sign between terms"));
        }
        let start = i;
        while i < bytes.len() && bytes[i].is_ascii_digit() {
            i += 1;
        }
        let mut coeff: BigInt = if i > start {
            t[start..i].parse().map_err(|_| err(s, "bad integer"))?
        } else {
            BigInt::from(1)
        };
        let mut exp = 0i64;
        if i < bytes.len() && bytes[i] == b'q' {
            i += 1;
            exp = 1;
            if i < bytes.len() && bytes[i] == b'^' {
                i += 1;
                let es = i;
                if i < bytes.len() && bytes[i] == b'-' {
                    i += 1;
                }
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                exp = t[es..i].parse().map_err(|_| err(s, "bad exponent"))?;
            }
        } else if i == start {
            return Err(err(s, "expected integer or q"));
        }
        if sign < 0 {
            coeff = -coeff;
        }
        terms.push((exp, coeff));
    }
    Ok(LaurentInt::from_terms(terms))
}

pub(super) fn parse_ratfn(s: &str) -> Result<RatFn, ParseCoeffError> {
    let t = s.trim();
    if let Some(rest) = t.strip_prefix('(') {
        if let Some(pos) = rest.find(")/(") {
            let num = &rest[..pos];
            let den = rest[pos + 3..]
                .strip_suffix(')')
                .ok_or_else(|| err(s, "unbalanced parentheses"))?;
            let den = parse_laurent(den)?;
            if den.is_zero() {
                return Err(err(s, "zero denominator"));
            }
            return Ok(RatFn::new(parse_laurent(num)?, den));
        }
        let inner = rest.strip_suffix(')').ok_or_else(|| err(s, "unbalanced parentheses"))?;
        return parse_ratfn(inner);
    }
    Ok(RatFn::from(parse_laurent(t)?))
}
