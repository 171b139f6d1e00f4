use alloc::string::{String, ToString};
use core::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

/// The base field: exact rationals, always normalized (lowest terms,
/// positive denominator).
pub type Scalar = BigRational;

pub fn int(n: i64) -> Scalar {
    Scalar::from_integer(BigInt::from(n))
}

/// `p/q`, normalized. Panics when `q == 0`.
pub fn ratio(p: i64, q: i64) -> Scalar {
    Scalar::new(BigInt::from(p), BigInt::from(q))
}

/// Canonical text form: `p/q` in lowest terms, or `p` when `q = 1`.
pub fn format_scalar(x: &Scalar) -> String {
    x.to_string()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParseScalarError {
    pub input: String,
    pub reason: &'static str,
}

impl fmt::Display for ParseScalarError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "invalid rational {:?}: {}", self.input, self.reason)
    }
}

impl core::error::Error for ParseScalarError {}

fn parse_digits(s: &str) -> Option<BigInt> {
    if s.is_empty() || !s.bytes().all(|b| b.is_ascii_digit()) {
        return None;
    }
    if s.len() > 1 && s.starts_with('0') {
        return None;
    }
    s.parse().ok()
}

/// Parses the canonical rational form. Only `-?p` and `-?p/q` with `q > 1`,
/// `gcd(p, q) = 1` and no leading zeros are accepted, so that every value
/// has exactly one spelling.
pub fn parse_scalar(s: &str) -> Result<Scalar, ParseScalarError> {
    let err = |reason| ParseScalarError {
        input: s.to_string(),
        reason,
    };
    let (negative, body) = match s.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, s),
    };
    let (num, den) = match body.split_once('/') {
        Some((p, q)) => {
            let p = parse_digits(p).ok_or_else(|| err("numerator is not a plain integer"))?;
            let q = parse_digits(q).ok_or_else(|| err("denominator is not a plain integer"))?;
            if q.is_zero() {
                return Err(err("zero denominator"));
            }
            if q.is_one() {
                return Err(err("denominator 1 must be omitted"));
            }
            if !p.gcd(&q).is_one() {
                return Err(err("not in lowest terms"));
            }
            (p, q)
        }
        None => {
            let p = parse_digits(body).ok_or_else(|| err("expected p or p/q"))?;
            (p, BigInt::one())
        }
    };
    if negative && num.is_zero() {
        return Err(err("negative zero"));
    }
    let num = if negative { -num } else { num };
    Ok(Scalar::new_raw(num, den))
}
