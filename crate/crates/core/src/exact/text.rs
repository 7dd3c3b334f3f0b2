//! Text forms: `p/q` for rationals, `p/q+r/s*sqrt(m)` for quadratic scalars,
//! `c1*q^(e1) + c2*q^(e2)` (descending exponents) for Laurent polynomials.
//! Quadratic coefficients inside a polynomial are parenthesized. Matrices
//! serialize as row-major JSON arrays of these strings.

use std::fmt;
use std::str::FromStr;

use num_rational::BigRational;
use num_traits::{Signed, Zero};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

use super::{ExactScalar, Exponent, Matrix, QPoly, Ring};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("cannot parse {input:?}: {reason}")]
pub struct ParseExactError {
    pub input: String,
    pub reason: String,
}

fn perr(input: &str, reason: impl Into<String>) -> ParseExactError {
    ParseExactError { input: input.to_string(), reason: reason.into() }
}

fn parse_rational(s: &str) -> Result<BigRational, ParseExactError> {
    let s = s.trim();
    if let Some((n, d)) = s.split_once('/') {
        let n = n.trim().parse().map_err(|_| perr(s, "bad numerator"))?;
        let d: num_bigint::BigInt = d.trim().parse().map_err(|_| perr(s, "bad denominator"))?;
        if d.is_zero() {
            return Err(perr(s, "zero denominator"));
        }
        Ok(BigRational::new(n, d))
    } else {
        let n = s.parse().map_err(|_| perr(s, "bad integer"))?;
        Ok(BigRational::from_integer(n))
    }
}

pub fn parse_exponent(s: &str) -> Result<Exponent, ParseExactError> {
    let s = s.trim();
    let (n, d) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s, "1"),
    };
    let n: i64 = n.parse().map_err(|_| perr(s, "bad exponent numerator"))?;
    let d: i64 = d.parse().map_err(|_| perr(s, "bad exponent denominator"))?;
    if d == 0 {
        return Err(perr(s, "zero denominator"));
    }
    Ok(Exponent::new(n, d))
}

impl fmt::Display for ExactScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let a = self.rational_part();
        let b = self.radical_part();
        match self.radicand() {
            None => write!(f, "{a}"),
            Some(m) if a.is_zero() => write!(f, "{b}*sqrt({m})"),
            Some(m) if b.is_negative() => write!(f, "{a}-{}*sqrt({m})", -b),
            Some(m) => write!(f, "{a}+{b}*sqrt({m})"),
        }
    }
}

impl FromStr for ExactScalar {
    type Err = ParseExactError;

    fn from_str(input: &str) -> Result<Self, Self::Err> {
        let s = input.trim();
        let Some(root_at) = s.find("sqrt(") else {
            return Ok(ExactScalar::from_rational(parse_rational(s)?));
        };
        // the radical term starts at the last sign before `sqrt(` that is not a leading sign
        let split = s[..root_at].rfind(['+', '-']).filter(|&k| k > 0);
        let (a, radical) = match split {
            Some(k) => (parse_rational(&s[..k])?, &s[k..]),
            None => (BigRational::zero(), s),
        };
        let inner = radical[radical.find("sqrt(").unwrap_or(0)..]
            .strip_prefix("sqrt(")
            .and_then(|r| r.strip_suffix(')'))
            .ok_or_else(|| perr(input, "malformed sqrt(...) term"))?;
        let m: u64 = inner.trim().parse().map_err(|_| perr(input, "radicand is not an integer"))?;
        let coeff = &radical[..radical.find("sqrt(").unwrap_or(0)];
        let b = match coeff.trim() {
            "" | "+" => BigRational::from_integer(1.into()),
            "-" => BigRational::from_integer((-1).into()),
            c => {
                let c = c.strip_suffix('*').ok_or_else(|| perr(input, "expected '*' before sqrt"))?;
                parse_rational(c.trim_start_matches('+'))?
            }
        };
        ExactScalar::quadratic(a, b, m).map_err(|e| perr(input, e.to_string()))
    }
}

impl fmt::Display for QPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (e, c)) in self.terms().rev().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            if c.is_rational() {
                write!(f, "{c}*q^({e})")?;
            } else {
                write!(f, "({c})*q^({e})")?;
            }
        }
        Ok(())
    }
}

/// Split on `sep` outside parentheses.
fn split_top_level<'a>(s: &'a str, sep: &str) -> Vec<&'a str> {
    let mut parts = Vec::new();
    let mut depth = 0i32;
    let mut start = 0;
    let bytes = s.as_bytes();
    let mut i = 0;
    while i < bytes.len() {
        match bytes[i] {
            b'(' => depth += 1,
            b')' => depth -= 1,
            _ => {}
        }
        if depth == 0 && s[i..].starts_with(sep) {
            parts.push(&s[start..i]);
            i += sep.len();
            start = i;
            continue;
        }
        i += 1;
    }
    parts.push(&s[start..]);
    parts
}

impl FromStr for QPoly {
    type Err = ParseExactError;

    fn from_str(input: &str) -> Result<Self, Self::Err> {
        let s = input.trim();
        if s == "0" {
            return Ok(QPoly::zero());
        }
        let mut terms = Vec::new();
        for term in split_top_level(s, " + ") {
            let term = term.trim();
            let (coeff, exp) = match term.rfind("*q^(") {
                Some(k) => {
                    let e = term[k + 4..].strip_suffix(')').ok_or_else(|| perr(input, "unclosed exponent"))?;
                    (&term[..k], parse_exponent(e)?)
                }
                None if term == "q" => ("1", Exponent::from_integer(1)),
                None => (term, Exponent::zero()),
            };
            let coeff = coeff.trim();
            let coeff = coeff.strip_prefix('(').and_then(|c| c.strip_suffix(')')).unwrap_or(coeff);
            terms.push((exp, coeff.parse::<ExactScalar>()?));
        }
        Ok(QPoly::from_terms(terms))
    }
}

macro_rules! serde_via_string {
    ($t:ty) => {
        impl Serialize for $t {
            fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
                s.collect_str(self)
            }
        }
        impl<'de> Deserialize<'de> for $t {
            fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
                let s = String::deserialize(d)?;
                s.parse().map_err(D::Error::custom)
            }
        }
    };
}

serde_via_string!(ExactScalar);
serde_via_string!(QPoly);

impl<T: Ring + Serialize> Serialize for Matrix<T> {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        self.rows().serialize(s)
    }
}

impl<'de, T: Ring + Deserialize<'de>> Deserialize<'de> for Matrix<T> {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let rows = Vec::<Vec<T>>::deserialize(d)?;
        Matrix::from_rows(rows).map_err(D::Error::custom)
    }
}
