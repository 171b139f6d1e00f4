//! Exact rational scalars, dense matrices and canonical subspaces.

mod echelon;
mod matrix;
mod scalar;
mod subspace;

pub use echelon::{nullspace, rank, rref, solve};
pub use matrix::Matrix;
pub use scalar::{format_scalar, int, parse_scalar, ratio, ParseScalarError, Scalar};
pub use subspace::Subspace;

use alloc::vec::Vec;
use num_traits::Zero;

/// Coordinate vector.
pub type Vector = Vec<Scalar>;

pub fn zero_vector(n: usize) -> Vector {
    alloc::vec![Scalar::zero(); n]
}

pub fn unit_vector(n: usize, i: usize) -> Vector {
    let mut v = zero_vector(n);
    v[i] = int(1);
    v
}

pub fn is_zero_vector(v: &[Scalar]) -> bool {
    v.iter().all(Zero::is_zero)
}

/// `acc += c * v`
pub fn axpy(acc: &mut [Scalar], c: &Scalar, v: &[Scalar]) {
    debug_assert_eq!(acc.len(), v.len());
    if c.is_zero() {
        return;
    }
    for (a, x) in acc.iter_mut().zip(v) {
        if !x.is_zero() {
            *a += c * x;
        }
    }
}

pub fn add_vectors(a: &[Scalar], b: &[Scalar]) -> Vector {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

pub fn sub_vectors(a: &[Scalar], b: &[Scalar]) -> Vector {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

pub fn scale_vector(c: &Scalar, v: &[Scalar]) -> Vector {
    v.iter().map(|x| c * x).collect()
}

/// Kernel of a linear map `F^unknowns -> F^m` given only by evaluation.
pub fn kernel_of(unknowns: usize, map: impl FnMut(&[Scalar]) -> Vector) -> Subspace {
    nullspace(&matrix_of(unknowns, map))
}

/// Matrix of a linear map given by evaluation, probed on unit vectors.
pub fn matrix_of(unknowns: usize, mut map: impl FnMut(&[Scalar]) -> Vector) -> Matrix {
    let columns: Vec<Vector> = (0..unknowns)
        .map(|u| map(&unit_vector(unknowns, u)))
        .collect();
    let rows = columns.first().map_or(0, Vec::len);
    Matrix::from_columns(rows, &columns).expect("linear map has a fixed codomain")
}
