//! Algebra and module file formats.
//!
//! Every rational is a canonical `"p/q"` or `"p"` string; anything else,
//! unknown fields, and out-of-range indices are rejected with the JSON path
//! of the offending value.

use std::sync::Arc;

use homlie_core::linalg::{format_scalar, parse_scalar};
use homlie_core::{HomLieAlgebra, Matrix, Representation, Scalar, Vector};
use serde::{Deserialize, Serialize};

/// A positioned input error.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("{path}: {message}")]
pub struct InputError {
    pub path: String,
    pub message: String,
}

impl InputError {
    fn at(path: impl Into<String>, message: impl Into<String>) -> Self {
        Self {
            path: path.into(),
            message: message.into(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AlgebraFile {
    pub dim: usize,
    pub basis: Vec<String>,
    pub brackets: Vec<BracketEntry>,
    pub alpha: Vec<Vec<String>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BracketEntry {
    pub i: usize,
    pub j: usize,
    pub value: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ModuleFile {
    pub dim_v: usize,
    pub rho: Vec<Vec<Vec<String>>>,
    pub beta: Vec<Vec<String>>,
}

fn from_json<T: for<'de> Deserialize<'de>>(text: &str) -> Result<T, InputError> {
    let mut de = serde_json::Deserializer::from_str(text);
    let value: T = serde_path_to_error::deserialize(&mut de).map_err(|e| {
        let path = e.path().to_string();
        InputError::at(path, e.into_inner().to_string())
    })?;
    de.end().map_err(|e| InputError::at(".", e.to_string()))?;
    Ok(value)
}

fn scalar(path: &str, s: &str) -> Result<Scalar, InputError> {
    parse_scalar(s).map_err(|e| InputError::at(path, e.to_string()))
}

fn vector(path: &str, xs: &[String], len: usize) -> Result<Vector, InputError> {
    if xs.len() != len {
        return Err(InputError::at(
            path,
            format!("expected {len} entries, found {}", xs.len()),
        ));
    }
    xs.iter()
        .enumerate()
        .map(|(a, s)| scalar(&format!("{path}[{a}]"), s))
        .collect()
}

fn matrix(path: &str, rows: &[Vec<String>], n: usize, m: usize) -> Result<Matrix, InputError> {
    if rows.len() != n {
        return Err(InputError::at(
            path,
            format!("expected {n} rows, found {}", rows.len()),
        ));
    }
    let rows = rows
        .iter()
        .enumerate()
        .map(|(r, row)| vector(&format!("{path}[{r}]"), row, m))
        .collect::<Result<Vec<_>, _>>()?;
    Matrix::from_rows(m, rows).map_err(|e| InputError::at(path, e.to_string()))
}

fn emit_vector(v: &[Scalar]) -> Vec<String> {
    v.iter().map(format_scalar).collect()
}

pub fn emit_matrix(m: &Matrix) -> Vec<Vec<String>> {
    m.row_vectors().iter().map(|r| emit_vector(r)).collect()
}

impl AlgebraFile {
    pub fn from_algebra(l: &HomLieAlgebra) -> Self {
        Self {
            dim: l.dim(),
            basis: l.basis_names().to_vec(),
            brackets: l
                .nonzero_brackets()
                .map(|(i, j, v)| BracketEntry {
                    i: i + 1,
                    j: j + 1,
                    value: emit_vector(v),
                })
                .collect(),
            alpha: emit_matrix(l.alpha()),
        }
    }

    pub fn to_algebra(&self) -> Result<HomLieAlgebra, InputError> {
        let n = self.dim;
        if self.basis.len() != n {
            return Err(InputError::at(
                "basis",
                format!("expected {n} names, found {}", self.basis.len()),
            ));
        }
        let mut seen = std::collections::BTreeSet::new();
        let mut brackets = Vec::with_capacity(self.brackets.len());
        for (idx, b) in self.brackets.iter().enumerate() {
            let path = format!("brackets[{idx}]");
            if b.i < 1 || b.i > n {
                return Err(InputError::at(
                    format!("{path}.i"),
                    format!("index {} out of range 1..={n}", b.i),
                ));
            }
            if b.j < 1 || b.j > n {
                return Err(InputError::at(
                    format!("{path}.j"),
                    format!("index {} out of range 1..={n}", b.j),
                ));
            }
            if b.i >= b.j {
                return Err(InputError::at(
                    path,
                    format!("bracket entries need i < j, got ({}, {})", b.i, b.j),
                ));
            }
            if !seen.insert((b.i, b.j)) {
                return Err(InputError::at(
                    path,
                    format!("pair ({}, {}) given twice", b.i, b.j),
                ));
            }
            let value = vector(&format!("{path}.value"), &b.value, n)?;
            brackets.push((b.i - 1, b.j - 1, value));
        }
        let alpha = matrix("alpha", &self.alpha, n, n)?;
        HomLieAlgebra::new(self.basis.clone(), brackets, alpha)
            .map_err(|e| InputError::at(".", e.to_string()))
    }
}

impl ModuleFile {
    pub fn from_module(v: &Representation) -> Self {
        Self {
            dim_v: v.dim(),
            rho: v.rho().iter().map(emit_matrix).collect(),
            beta: emit_matrix(v.beta()),
        }
    }

    pub fn to_module(&self, algebra: Arc<HomLieAlgebra>) -> Result<Representation, InputError> {
        let (n, d) = (algebra.dim(), self.dim_v);
        if self.rho.len() != n {
            return Err(InputError::at(
                "rho",
                format!(
                    "expected {n} matrices (one per basis element), found {}",
                    self.rho.len()
                ),
            ));
        }
        let rho = self
            .rho
            .iter()
            .enumerate()
            .map(|(i, m)| matrix(&format!("rho[{i}]"), m, d, d))
            .collect::<Result<Vec<_>, _>>()?;
        let beta = matrix("beta", &self.beta, d, d)?;
        Representation::new(algebra, rho, beta).map_err(|e| InputError::at(".", e.to_string()))
    }
}

/// Parses an algebra file without checking the Hom-Lie axioms.
pub fn parse_algebra(text: &str) -> Result<HomLieAlgebra, InputError> {
    from_json::<AlgebraFile>(text)?.to_algebra()
}

/// Parses a module file over `algebra` without checking the module laws.
pub fn parse_module(text: &str, algebra: Arc<HomLieAlgebra>) -> Result<Representation, InputError> {
    from_json::<ModuleFile>(text)?.to_module(algebra)
}

fn pretty<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("file structs serialize");
    s.push('\n');
    s
}

/// Canonical algebra file: nonzero brackets in `(i, j)` order.
pub fn emit_algebra(l: &HomLieAlgebra) -> String {
    pretty(&AlgebraFile::from_algebra(l))
}

pub fn emit_module(v: &Representation) -> String {
    pretty(&ModuleFile::from_module(v))
}

#[cfg(test)]
mod tests {
    use super::*;
    use homlie_core::catalog;
    use homlie_core::linalg::{int, ratio};

    #[test]
    fn algebra_round_trips() {
        for l in [
            catalog::heisenberg(ratio(-2, 3)).unwrap(),
            catalog::aff1_center(int(1), int(2), int(3), int(5)).unwrap(),
            catalog::sl2_involution(),
            catalog::abelian(2).unwrap(),
        ] {
            let text = emit_algebra(&l);
            let back = parse_algebra(&text).unwrap();
            assert_eq!(back, l);
            assert_eq!(emit_algebra(&back), text);
        }
    }

    #[test]
    fn module_round_trips() {
        let l = Arc::new(catalog::heisenberg(int(2)).unwrap());
        let v = Representation::adjoint(l.clone(), 1).unwrap();
        let text = emit_module(&v);
        assert_eq!(parse_module(&text, l).unwrap(), v);
    }

    const HEIS: &str = r#"{"dim": 3, "basis": ["e1","e2","e3"],
        "brackets": [{"i": 1, "j": 2, "value": ["0","0","1"]}],
        "alpha": [["1","0","0"],["1","1","0"],["0","0","1"]]}"#;

    #[test]
    fn rejections_carry_paths() {
        assert!(parse_algebra(HEIS).is_ok());
        let swapped = HEIS.replace(r#""i": 1, "j": 2"#, r#""i": 2, "j": 1"#);
        assert_eq!(parse_algebra(&swapped).unwrap_err().path, "brackets[0]");
        let equal = HEIS.replace(r#""i": 1, "j": 2"#, r#""i": 2, "j": 2"#);
        assert_eq!(parse_algebra(&equal).unwrap_err().path, "brackets[0]");
        let decimal = HEIS.replace(r#"["0","0","1"]"#, r#"["0","0.5","1"]"#);
        assert_eq!(
            parse_algebra(&decimal).unwrap_err().path,
            "brackets[0].value[1]"
        );
        let range = HEIS.replace(r#""j": 2"#, r#""j": 4"#);
        assert_eq!(parse_algebra(&range).unwrap_err().path, "brackets[0].j");
        let unknown = HEIS.replace(r#""dim": 3"#, r#""dim": 3, "name": "h""#);
        assert!(parse_algebra(&unknown)
            .unwrap_err()
            .message
            .contains("unknown field"));
        let short = HEIS.replace(r#"["0","0","1"]]"#, r#"["0","1"]]"#);
        assert_eq!(parse_algebra(&short).unwrap_err().path, "alpha[2]");
        let number = HEIS.replace(r#"["0","0","1"]}"#, r#"["0","0",1]}"#);
        assert_eq!(
            parse_algebra(&number).unwrap_err().path,
            "brackets[0].value[2]"
        );
    }

    #[test]
    fn module_shape_errors() {
        let l = Arc::new(catalog::abelian(1).unwrap());
        let bad = r#"{"dim_v": 2, "rho": [[["0","0"],["0","0"]]], "beta": [["1","0"]]}"#;
        assert_eq!(parse_module(bad, l.clone()).unwrap_err().path, "beta");
        let missing = r#"{"dim_v": 1, "rho": [], "beta": [["1"]]}"#;
        assert_eq!(parse_module(missing, l).unwrap_err().path, "rho");
    }
}
