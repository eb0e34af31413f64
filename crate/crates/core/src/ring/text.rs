// Parser for the canonical polynomial text format:
//
//   poly   := "0" | term (" + " term | " - " term)*
//   term   := [coeff "*"] factor ("*" factor)* | coeff
//   factor := var ["^" exp]
//   var    := "x" idx | "y" idx | "a" idx | "t"
//
// The parser ignores whitespace and accepts non-canonical input (unsorted
// terms, repeated factors, "^1"), so it is a left inverse of Display.

use std::str::FromStr;

use num_bigint::BigInt;

use super::{Family, Monomial, Polynomial, Variable};
use crate::error::Error;

impl FromStr for Polynomial {
    type Err = Error;

    fn from_str(input: &str) -> Result<Self, Self::Err> {
        let err = |reason: &str| Error::Parse {
            input: input.to_string(),
            reason: reason.to_string(),
        };
        let compact: String = input.chars().filter(|c| !c.is_whitespace()).collect();
        if compact.is_empty() {
            return Err(err("empty input"));
        }

        let mut terms = Vec::new();
        let mut rest = compact.as_str();
        let mut first = true;
        while !rest.is_empty() {
            // every term after the first starts at a sign
            let (negative, body) = match rest.as_bytes()[0] {
                b'-' => (true, &rest[1..]),
                b'+' if !first => (false, &rest[1..]),
                b'+' => return Err(err("leading '+'")),
                _ => (false, rest),
            };
            let end = body.find(['+', '-']).unwrap_or(body.len());
            terms.push(parse_term(&body[..end], negative).map_err(|r| err(&r))?);
            rest = &body[end..];
            first = false;
        }
        Ok(Polynomial::from_terms(terms))
    }
}

fn parse_term(text: &str, negative: bool) -> Result<(Monomial, BigInt), String> {
    if text.is_empty() {
        return Err("empty term".into());
    }
    let mut coeff = BigInt::from(1);
    let mut powers = Vec::new();
    for (k, factor) in text.split('*').enumerate() {
        if factor.is_empty() {
            return Err("empty factor".into());
        }
        if factor.as_bytes()[0].is_ascii_digit() {
            if k != 0 {
                return Err(format!("coefficient {factor:?} must lead its term"));
            }
            coeff = factor
                .parse::<BigInt>()
                .map_err(|_| format!("bad coefficient {factor:?}"))?;
            continue;
        }
        powers.push(parse_factor(factor)?);
    }
    if negative {
        coeff = -coeff;
    }
    Ok((Monomial::from_powers(powers), coeff))
}

fn parse_factor(factor: &str) -> Result<(Variable, u32), String> {
    let (base, exp) = match factor.split_once('^') {
        Some((b, e)) => (
            b,
            e.parse::<u32>()
                .map_err(|_| format!("bad exponent in {factor:?}"))?,
        ),
        None => (factor, 1),
    };
    let mut chars = base.chars();
    let family = match chars.next() {
        Some('x') => Family::X,
        Some('y') => Family::Y,
        Some('a') => Family::A,
        Some('t') if base.len() == 1 => return Ok((Variable::t(), exp)),
        _ => return Err(format!("unknown variable {base:?}")),
    };
    let index: u32 = chars
        .as_str()
        .parse()
        .map_err(|_| format!("bad variable index in {base:?}"))?;
    if index == 0 {
        return Err(format!("variable indices start at 1, got {base:?}"));
    }
    Ok((Variable::new(family, index), exp))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn parse(s: &str) -> Polynomial {
        s.parse().unwrap()
    }

    #[test]
    fn parses_canonical_forms() {
        for s in [
            "0",
            "x1 + x2",
            "x1 - x2",
            "-x1",
            "t^2",
            "2*x1*y1 + 1",
            "t*a2 - 3*x1^2 - 4",
            "-7",
        ] {
            assert_eq!(parse(s).to_string(), s, "round trip of {s}");
        }
    }

    #[test]
    fn parses_non_canonical_input() {
        assert_eq!(parse("x2 + x1").to_string(), "x1 + x2");
        assert_eq!(parse("x1*x1^1").to_string(), "x1^2");
        assert_eq!(parse("x1 - x1"), Polynomial::zero());
        assert_eq!(parse("-2*x1 + 3").to_string(), "-2*x1 + 3");
    }

    #[test]
    fn rejects_garbage() {
        for s in [
            "", "x0", "z1", "x1 +", "x1 * 2", "2x1", "x1^", "x1 ++ x2", "t1",
        ] {
            assert!(s.parse::<Polynomial>().is_err(), "{s:?} should not parse");
        }
    }
}
