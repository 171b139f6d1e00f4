//! Built-in algebras and the loop-algebra window check.

mod laurent;
mod loop_algebra;

pub use laurent::{LaurentPoly, ParseLaurentError};
pub use loop_algebra::{
    loop_bracket, verify_loop_centroid, verify_loop_centroid_with_twist, LoopElement, LoopFailure,
    LoopVerdict, Sl2Basis,
};

use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;

use num_traits::{ToPrimitive, Zero};

use crate::algebra::HomLieAlgebra;
use crate::error::{Error, Result};
use crate::linalg::{int, Matrix, Scalar};

fn names(labels: &[&str]) -> Vec<String> {
    labels.iter().map(|s| s.to_string()).collect()
}

fn vector(xs: &[i64]) -> Vec<Scalar> {
    xs.iter().map(|&x| int(x)).collect()
}

/// `[e1, e2] = e3` with `α(e1) = λe1 + e2`, `α(e2) = λe2`, `α(e3) = λ²e3`.
pub fn heisenberg(lambda: Scalar) -> Result<HomLieAlgebra> {
    if lambda.is_zero() {
        return Err(Error::InvalidParameter("lambda must be nonzero".into()));
    }
    let z = Scalar::zero();
    let alpha = Matrix::from_rows(
        3,
        alloc::vec![
            alloc::vec![lambda.clone(), z.clone(), z.clone()],
            alloc::vec![int(1), lambda.clone(), z.clone()],
            alloc::vec![z.clone(), z, &lambda * &lambda],
        ],
    )?;
    HomLieAlgebra::new(
        names(&["e1", "e2", "e3"]),
        [(0, 1, vector(&[0, 0, 1]))],
        alpha,
    )
}

/// `[x, y] = y`, `z` central, with `α(x) = x + ay + bz`, `α(y) = λy`,
/// `α(z) = μz`.
pub fn aff1_center(a: Scalar, b: Scalar, lambda: Scalar, mu: Scalar) -> Result<HomLieAlgebra> {
    if lambda.is_zero() || mu.is_zero() {
        return Err(Error::InvalidParameter(
            "lambda and mu must be nonzero".into(),
        ));
    }
    let z = Scalar::zero();
    let alpha = Matrix::from_rows(
        3,
        alloc::vec![
            alloc::vec![int(1), z.clone(), z.clone()],
            alloc::vec![a, lambda, z.clone()],
            alloc::vec![b, z, mu],
        ],
    )?;
    HomLieAlgebra::new(names(&["x", "y", "z"]), [(0, 1, vector(&[0, 1, 0]))], alpha)
}

/// Zero bracket with identity twist.
pub fn abelian(n: usize) -> Result<HomLieAlgebra> {
    if n == 0 {
        return Err(Error::InvalidParameter(
            "dimension must be at least 1".into(),
        ));
    }
    HomLieAlgebra::new(HomLieAlgebra::default_names(n), [], Matrix::identity(n))
}

fn sl2_with(alpha: Matrix) -> HomLieAlgebra {
    HomLieAlgebra::new(
        names(&["e", "f", "h"]),
        [
            (0, 1, vector(&[0, 0, 1])),
            (0, 2, vector(&[-2, 0, 0])),
            (1, 2, vector(&[0, 2, 0])),
        ],
        alpha,
    )
    .expect("sl2 structure constants are well-formed")
}

/// `sl2` on `(e, f, h)` with identity twist.
pub fn sl2() -> HomLieAlgebra {
    sl2_with(Matrix::identity(3))
}

/// `sl2` twisted by the involution `e ↦ -e`, `f ↦ -f`, `h ↦ h`.
pub fn sl2_involution() -> HomLieAlgebra {
    sl2_with(Matrix::from_i64(3, 3, &[-1, 0, 0, 0, -1, 0, 0, 0, 1]))
}

/// A named constructor with its parameter names.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CatalogEntry {
    pub name: &'static str,
    pub params: &'static [&'static str],
    pub summary: &'static str,
}

pub const ENTRIES: &[CatalogEntry] = &[
    CatalogEntry {
        name: "heisenberg",
        params: &["lambda"],
        summary: "3-dim Heisenberg, [e1,e2]=e3, twisted by a Jordan block",
    },
    CatalogEntry {
        name: "aff1-center",
        params: &["a", "b", "lambda", "mu"],
        summary: "[x,y]=y with central z, lower-triangular twist",
    },
    CatalogEntry {
        name: "abelian",
        params: &["n"],
        summary: "n-dim abelian, identity twist",
    },
    CatalogEntry {
        name: "sl2",
        params: &[],
        summary: "sl2 on (e,f,h), identity twist",
    },
    CatalogEntry {
        name: "sl2-involution",
        params: &[],
        summary: "sl2 on (e,f,h), twist diag(-1,-1,1)",
    },
];

/// Builds a catalog algebra by name from positional parameters.
pub fn build(name: &str, params: &[Scalar]) -> Result<HomLieAlgebra> {
    let entry = ENTRIES
        .iter()
        .find(|e| e.name == name)
        .ok_or_else(|| Error::InvalidParameter(format!("unknown catalog algebra {name:?}")))?;
    if params.len() != entry.params.len() {
        return Err(Error::InvalidParameter(format!(
            "{name} takes {} parameter(s) ({}), got {}",
            entry.params.len(),
            entry.params.join(", "),
            params.len()
        )));
    }
    let p = |i: usize| params[i].clone();
    match name {
        "heisenberg" => heisenberg(p(0)),
        "aff1-center" => aff1_center(p(0), p(1), p(2), p(3)),
        "abelian" => {
            let n = params[0]
                .to_integer()
                .to_usize()
                .filter(|_| params[0].is_integer())
                .ok_or_else(|| Error::InvalidParameter("n must be a nonnegative integer".into()))?;
            abelian(n)
        }
        "sl2" => Ok(sl2()),
        _ => Ok(sl2_involution()),
    }
}
