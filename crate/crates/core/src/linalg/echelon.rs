use alloc::vec::Vec;

use num_traits::{One, Zero};

use super::{Matrix, Scalar, Subspace, Vector};
use crate::error::{Error, Result};

/// Reduced row-echelon form on a row list, in place. Returns pivot columns.
/// Zero rows are dropped.
pub(crate) fn rref_rows(rows: &mut Vec<Vector>, cols: usize) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows.len() {
            break;
        }
        let Some(found) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(r, found);
        let inv = rows[r][c].recip();
        if !inv.is_one() {
            for x in rows[r][c..].iter_mut() {
                *x *= &inv;
            }
        }
        let pivot_row = core::mem::take(&mut rows[r]);
        for (i, row) in rows.iter_mut().enumerate() {
            if i == r || row[c].is_zero() {
                continue;
            }
            let factor = row[c].clone();
            for (x, p) in row[c..].iter_mut().zip(&pivot_row[c..]) {
                if !p.is_zero() {
                    *x -= &factor * p;
                }
            }
        }
        rows[r] = pivot_row;
        pivots.push(c);
        r += 1;
    }
    rows.truncate(r);
    pivots
}

/// Reduced row-echelon form and its pivot columns. Zero rows are kept at the
/// bottom so the shape is preserved.
pub fn rref(m: &Matrix) -> (Matrix, Vec<usize>) {
    let mut rows = m.row_vectors();
    let pivots = rref_rows(&mut rows, m.cols());
    rows.resize_with(m.rows(), || super::zero_vector(m.cols()));
    let reduced = Matrix::from_rows(m.cols(), rows).expect("row lengths preserved");
    (reduced, pivots)
}

pub fn rank(m: &Matrix) -> usize {
    let mut rows = m.row_vectors();
    rref_rows(&mut rows, m.cols()).len()
}

/// Canonical basis of `{v : m v = 0}`.
pub fn nullspace(m: &Matrix) -> Subspace {
    let cols = m.cols();
    let mut rows = m.row_vectors();
    let pivots = rref_rows(&mut rows, cols);
    let mut is_pivot = alloc::vec![false; cols];
    for &p in &pivots {
        is_pivot[p] = true;
    }
    let basis: Vec<Vector> = (0..cols)
        .filter(|&f| !is_pivot[f])
        .map(|f| {
            let mut v = super::zero_vector(cols);
            v[f] = Scalar::one();
            for (row, &p) in rows.iter().zip(&pivots) {
                if !row[f].is_zero() {
                    v[p] = -row[f].clone();
                }
            }
            v
        })
        .collect();
    Subspace::from_spanning(cols, basis)
}

/// One particular solution of `m x = b` with every free variable set to zero,
/// or `None` when the system is inconsistent.
pub fn solve(m: &Matrix, b: &[Scalar]) -> Result<Option<Vector>> {
    if b.len() != m.rows() {
        return Err(Error::DimensionMismatch {
            expected: m.rows(),
            found: b.len(),
        });
    }
    let cols = m.cols();
    let mut rows: Vec<Vector> = (0..m.rows())
        .map(|r| {
            let mut row = m.row(r).to_vec();
            row.push(b[r].clone());
            row
        })
        .collect();
    let pivots = rref_rows(&mut rows, cols + 1);
    if pivots.last() == Some(&cols) {
        return Ok(None);
    }
    let mut x = super::zero_vector(cols);
    for (row, &p) in rows.iter().zip(&pivots) {
        x[p] = row[cols].clone();
    }
    Ok(Some(x))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::{int, ratio};
    use alloc::vec;

    #[test]
    fn rref_examples() {
        let id = Matrix::identity(2);
        assert_eq!(rref(&id), (id.clone(), vec![0, 1]));

        let m = Matrix::from_i64(2, 2, &[2, 4, 1, 2]);
        assert_eq!(rref(&m), (Matrix::from_i64(2, 2, &[1, 2, 0, 0]), vec![0]));

        let p = Matrix::from_i64(2, 2, &[0, 1, 1, 0]);
        assert_eq!(rref(&p), (Matrix::identity(2), vec![0, 1]));
    }

    #[test]
    fn nullspace_examples() {
        assert_eq!(nullspace(&Matrix::identity(4)).dim(), 0);
        let z = nullspace(&Matrix::zeros(2, 3));
        assert_eq!(z, Subspace::full(3));
        let one = nullspace(&Matrix::from_i64(1, 3, &[1, 1, 0]));
        assert_eq!(one.dim(), 2);
        assert!(one.contains(&[int(1), int(-1), int(0)]).unwrap());
        assert!(one.contains(&[int(0), int(0), int(1)]).unwrap());
    }

    #[test]
    fn solve_examples() {
        let b = vec![int(3), ratio(1, 2)];
        assert_eq!(solve(&Matrix::identity(2), &b).unwrap(), Some(b.clone()));
        assert_eq!(solve(&Matrix::zeros(2, 2), &b).unwrap(), None);
        let m = Matrix::from_i64(1, 2, &[1, 1]);
        assert_eq!(solve(&m, &[int(2)]).unwrap(), Some(vec![int(2), int(0)]));
        assert!(solve(&m, &b).is_err());
    }

    #[test]
    fn zero_rows_kept() {
        let m = Matrix::from_i64(3, 2, &[1, 1, 2, 2, 3, 3]);
        let (r, p) = rref(&m);
        assert_eq!(r.rows(), 3);
        assert_eq!(p, vec![0]);
        assert!(r.row(1).iter().all(Zero::is_zero));
    }
}
