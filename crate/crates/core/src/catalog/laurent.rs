use alloc::collections::BTreeMap;
use alloc::string::{String, ToString};
use core::fmt;

use num_traits::{One, Signed, Zero};

use crate::linalg::{parse_scalar, Scalar};

/// Laurent polynomial in `t` with rational coefficients. Zero coefficients
/// are never stored.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct LaurentPoly {
    terms: BTreeMap<i64, Scalar>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParseLaurentError {
    pub input: String,
    pub reason: String,
}

impl fmt::Display for ParseLaurentError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "invalid Laurent polynomial {:?}: {}",
            self.input, self.reason
        )
    }
}

impl core::error::Error for ParseLaurentError {}

impl LaurentPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(Scalar::one(), 0)
    }

    pub fn monomial(c: Scalar, degree: i64) -> Self {
        let mut p = Self::zero();
        p.add_term(degree, c);
        p
    }

    pub fn add_term(&mut self, degree: i64, c: Scalar) {
        let entry = self.terms.entry(degree).or_insert_with(Scalar::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&degree);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (i64, &Scalar)> {
        self.terms.iter().map(|(&d, c)| (d, c))
    }

    pub fn coefficient(&self, degree: i64) -> Scalar {
        self.terms
            .get(&degree)
            .cloned()
            .unwrap_or_else(Scalar::zero)
    }

    /// Largest `|degree|` among the terms; 0 for the zero polynomial.
    pub fn max_abs_degree(&self) -> u32 {
        self.terms
            .keys()
            .map(|d| d.unsigned_abs() as u32)
            .max()
            .unwrap_or(0)
    }

    /// Multiplication by `t^n`.
    pub fn shift(&self, n: i64) -> Self {
        Self {
            terms: self
                .terms
                .iter()
                .map(|(&d, c)| (d + n, c.clone()))
                .collect(),
        }
    }

    pub fn scale(&self, c: &Scalar) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self {
            terms: self.terms.iter().map(|(&d, x)| (d, x * c)).collect(),
        }
    }

    /// Parses sums of terms `c`, `c t`, `c t^k`, `t^k` with rational `c`
    /// written as `p` or `p/q`, an optional `*` before `t`, and integer `k`
    /// (possibly negative). Whitespace is ignored.
    pub fn parse(s: &str) -> Result<Self, ParseLaurentError> {
        let err = |reason: &str| ParseLaurentError {
            input: s.to_string(),
            reason: reason.to_string(),
        };
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if compact.is_empty() {
            return Err(err("empty input"));
        }
        let mut poly = Self::zero();
        let mut start = 0;
        let bytes = compact.as_bytes();
        for idx in 1..=bytes.len() {
            let at_boundary = idx == bytes.len()
                || ((bytes[idx] == b'+' || bytes[idx] == b'-') && bytes[idx - 1] != b'^');
            if at_boundary {
                let (degree, c) = parse_term(&compact[start..idx]).map_err(&err)?;
                poly.add_term(degree, c);
                start = idx;
            }
        }
        Ok(poly)
    }
}

fn parse_term(term: &str) -> Result<(i64, Scalar), &'static str> {
    let (negative, body) = match term.as_bytes().first() {
        Some(b'+') => (false, &term[1..]),
        Some(b'-') => (true, &term[1..]),
        _ => (false, term),
    };
    if body.is_empty() {
        return Err("dangling sign");
    }
    let (coefficient, degree) = match body.find('t') {
        None => (body, 0),
        Some(pos) => {
            let coefficient = body[..pos].strip_suffix('*').unwrap_or(&body[..pos]);
            let rest = &body[pos + 1..];
            let degree = if rest.is_empty() {
                1
            } else {
                let exponent = rest.strip_prefix('^').ok_or("expected ^ after t")?;
                exponent
                    .parse::<i64>()
                    .map_err(|_| "exponent is not an integer")?
            };
            if body[..pos].ends_with('*') && coefficient.is_empty() {
                return Err("missing coefficient before *");
            }
            (coefficient, degree)
        }
    };
    let c = if coefficient.is_empty() {
        Scalar::one()
    } else {
        let c = parse_scalar(coefficient).map_err(|e| e.reason)?;
        if c.is_negative() {
            return Err("repeated sign");
        }
        c
    };
    Ok((degree, if negative { -c } else { c }))
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (k, (&d, c)) in self.terms.iter().enumerate() {
            let magnitude = c.abs();
            match (k, c.is_negative()) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            if d == 0 {
                write!(f, "{magnitude}")?;
                continue;
            }
            if !magnitude.is_one() {
                write!(f, "{magnitude}")?;
            }
            if d == 1 {
                f.write_str("t")?;
            } else {
                write!(f, "t^{d}")?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::{int, ratio};

    #[test]
    fn parses_examples() {
        let p = LaurentPoly::parse("1 + 2t^2 - t^-3").unwrap();
        assert_eq!(p.coefficient(0), int(1));
        assert_eq!(p.coefficient(2), int(2));
        assert_eq!(p.coefficient(-3), int(-1));
        assert_eq!(p.max_abs_degree(), 3);
        assert_eq!(
            LaurentPoly::parse("t").unwrap(),
            LaurentPoly::monomial(int(1), 1)
        );
        let q = LaurentPoly::parse("t^-1 - 2").unwrap();
        assert_eq!(q.coefficient(-1), int(1));
        assert_eq!(q.coefficient(0), int(-2));
        assert_eq!(
            LaurentPoly::parse("1/2*t - 3/4t^2").unwrap().coefficient(2),
            ratio(-3, 4)
        );
        assert!(LaurentPoly::parse("t - t").unwrap().is_zero());
    }

    #[test]
    fn rejects_malformed() {
        for bad in ["", "+", "1 +", "t^", "t^x", "2x", "0.5t", "--t", "*t", "t2"] {
            assert!(LaurentPoly::parse(bad).is_err(), "{bad:?}");
        }
    }

    #[test]
    fn display_round_trips() {
        for s in ["1 + 2t^2 - t^-3", "t", "-t^-1 + 1/2", "0", "t^2 + 1"] {
            let p = LaurentPoly::parse(s).unwrap();
            assert_eq!(LaurentPoly::parse(&p.to_string()).unwrap(), p);
        }
        assert_eq!(
            LaurentPoly::parse("1 + t^2").unwrap().to_string(),
            "1 + t^2"
        );
        assert_eq!(
            LaurentPoly::parse("-t^-3 - 1").unwrap().to_string(),
            "-t^-3 - 1"
        );
    }

    #[test]
    fn shifting() {
        let p = LaurentPoly::parse("t^-1 - 2").unwrap().shift(2);
        assert_eq!(p, LaurentPoly::parse("t - 2t^2").unwrap());
    }
}
