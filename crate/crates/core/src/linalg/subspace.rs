use alloc::vec::Vec;

use num_traits::{One, Zero};

use super::echelon::{nullspace, rref_rows};
use super::{Matrix, Scalar, Vector};
use crate::error::{Error, Result};

/// A subspace of `F^n` stored by its reduced row-echelon basis. Two equal
/// subspaces always have identical representations.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Subspace {
    ambient: usize,
    basis: Vec<Vector>,
}

impl Subspace {
    pub fn zero(ambient: usize) -> Self {
        Self {
            ambient,
            basis: Vec::new(),
        }
    }

    pub fn full(ambient: usize) -> Self {
        Self {
            ambient,
            basis: (0..ambient)
                .map(|i| super::unit_vector(ambient, i))
                .collect(),
        }
    }

    /// Span of arbitrary vectors, canonicalized.
    pub fn span(ambient: usize, vectors: impl IntoIterator<Item = Vector>) -> Result<Self> {
        let vectors: Vec<Vector> = vectors.into_iter().collect();
        if let Some(bad) = vectors.iter().find(|v| v.len() != ambient) {
            return Err(Error::DimensionMismatch {
                expected: ambient,
                found: bad.len(),
            });
        }
        Ok(Self::from_spanning(ambient, vectors))
    }

    pub(crate) fn from_spanning(ambient: usize, mut vectors: Vec<Vector>) -> Self {
        rref_rows(&mut vectors, ambient);
        Self {
            ambient,
            basis: vectors,
        }
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn is_zero(&self) -> bool {
        self.basis.is_empty()
    }

    pub fn is_full(&self) -> bool {
        self.basis.len() == self.ambient
    }

    /// Canonical basis vectors (rows of the reduced echelon form).
    pub fn basis(&self) -> &[Vector] {
        &self.basis
    }

    pub fn pivots(&self) -> Vec<usize> {
        self.basis
            .iter()
            .map(|v| {
                v.iter()
                    .position(|x| !x.is_zero())
                    .expect("basis rows are nonzero")
            })
            .collect()
    }

    /// Basis vectors as the rows of a matrix.
    pub fn to_matrix(&self) -> Matrix {
        Matrix::from_rows(self.ambient, self.basis.clone()).expect("basis rows have ambient length")
    }

    fn check_len(&self, len: usize) -> Result<()> {
        if len != self.ambient {
            return Err(Error::DimensionMismatch {
                expected: self.ambient,
                found: len,
            });
        }
        Ok(())
    }

    /// Remainder of `v` after clearing every pivot coordinate with the basis.
    /// Zero exactly when `v` lies in the span.
    pub fn reduce(&self, v: &[Scalar]) -> Result<Vector> {
        self.check_len(v.len())?;
        let mut r = v.to_vec();
        for (row, p) in self.basis.iter().zip(self.pivots()) {
            if r[p].is_zero() {
                continue;
            }
            let c = r[p].clone();
            for (x, b) in r.iter_mut().zip(row) {
                if !b.is_zero() {
                    *x -= &c * b;
                }
            }
        }
        Ok(r)
    }

    pub fn contains(&self, v: &[Scalar]) -> Result<bool> {
        Ok(super::is_zero_vector(&self.reduce(v)?))
    }

    /// Coordinates of `v` in the canonical basis, if `v` lies in the span.
    /// Because the basis is reduced, these are the pivot entries of `v`.
    pub fn coordinates(&self, v: &[Scalar]) -> Result<Option<Vector>> {
        if !self.contains(v)? {
            return Ok(None);
        }
        Ok(Some(
            self.pivots().into_iter().map(|p| v[p].clone()).collect(),
        ))
    }

    pub fn is_subspace_of(&self, other: &Subspace) -> Result<bool> {
        other.check_len(self.ambient)?;
        for v in &self.basis {
            if !other.contains(v)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    pub fn sum(&self, other: &Subspace) -> Result<Subspace> {
        self.check_len(other.ambient)?;
        Ok(Self::from_spanning(
            self.ambient,
            self.basis.iter().chain(&other.basis).cloned().collect(),
        ))
    }

    /// Rows `E` with `x ∈ self  <=>  E x = 0`.
    pub fn defining_equations(&self) -> Matrix {
        nullspace(&self.to_matrix()).to_matrix()
    }

    pub fn intersect(&self, other: &Subspace) -> Result<Subspace> {
        self.check_len(other.ambient)?;
        if self.is_zero() || other.is_full() {
            return Ok(self.clone());
        }
        // x = A^T c lies in `other` iff E A^T c = 0.
        let equations = other.defining_equations();
        let a_t = self.to_matrix().transpose();
        let coefficients = nullspace(&(&equations * &a_t));
        let vectors = coefficients.basis.iter().map(|c| a_t.mul_vec(c)).collect();
        Ok(Self::from_spanning(self.ambient, vectors))
    }

    /// Projection onto the quotient `F^n / self` and a section of it.
    ///
    /// The quotient basis is given by the non-pivot coordinates of the
    /// echelonized subspace, in increasing order. Returns `(projection,
    /// section, complement)` where `projection` is `(n - dim) x n`,
    /// `section` is `n x (n - dim)` and `complement` lists the coordinates
    /// that survive.
    pub fn quotient_maps(&self) -> (Matrix, Matrix, Vec<usize>) {
        let n = self.ambient;
        let pivots = self.pivots();
        let mut is_pivot = alloc::vec![false; n];
        for &p in &pivots {
            is_pivot[p] = true;
        }
        let complement: Vec<usize> = (0..n).filter(|&c| !is_pivot[c]).collect();
        let m = complement.len();
        let mut projection = Matrix::zeros(m, n);
        for (k, &c) in complement.iter().enumerate() {
            projection.set(k, c, Scalar::one());
        }
        for (row, &p) in self.basis.iter().zip(&pivots) {
            // e_p = row - (row - e_p), and row maps to zero.
            for (k, &c) in complement.iter().enumerate() {
                if !row[c].is_zero() {
                    projection.set(k, p, -row[c].clone());
                }
            }
        }
        let mut section = Matrix::zeros(n, m);
        for (k, &c) in complement.iter().enumerate() {
            section.set(c, k, Scalar::one());
        }
        (projection, section, complement)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::{int, nullspace, rref};
    use alloc::vec;
    use proptest::prelude::*;

    fn v(xs: &[i64]) -> Vector {
        xs.iter().map(|&x| int(x)).collect()
    }

    #[test]
    fn intersection_examples() {
        let b = Subspace::span(3, [v(&[1, 2, 0]), v(&[0, 1, 1])]).unwrap();
        assert_eq!(Subspace::full(3).intersect(&b).unwrap(), b);
        let x = Subspace::span(2, [v(&[1, 0])]).unwrap();
        let y = Subspace::span(2, [v(&[0, 1])]).unwrap();
        assert!(x.intersect(&y).unwrap().is_zero());
        assert_eq!(b.intersect(&b).unwrap(), b);
        assert!(x.intersect(&Subspace::full(3)).is_err());
    }

    #[test]
    fn membership_examples() {
        let a = Subspace::span(2, [v(&[1, 1])]).unwrap();
        assert!(a.contains(&v(&[0, 0])).unwrap());
        assert!(!Subspace::zero(2).contains(&v(&[1, 0])).unwrap());
        assert!(a.contains(&v(&[2, 2])).unwrap());
        assert!(a.contains(&v(&[1])).is_err());
    }

    #[test]
    fn quotient_maps_split() {
        let s = Subspace::span(3, [v(&[0, 1, 2])]).unwrap();
        let (p, sec, comp) = s.quotient_maps();
        assert_eq!(comp, vec![0, 2]);
        assert_eq!(&p * &sec, Matrix::identity(2));
        assert!(crate::linalg::is_zero_vector(&p.mul_vec(&s.basis()[0])));
        assert_eq!(p.get(1, 1), &int(-2));
    }

    #[test]
    fn coordinates_are_pivot_entries() {
        let s = Subspace::span(3, [v(&[2, 0, 1]), v(&[0, 3, 3])]).unwrap();
        let x = v(&[4, 6, 8]);
        assert_eq!(s.coordinates(&x).unwrap(), Some(v(&[4, 6])));
        assert_eq!(s.coordinates(&v(&[1, 0, 0])).unwrap(), None);
    }

    fn small_matrix() -> impl Strategy<Value = Matrix> {
        (1usize..5, 1usize..6).prop_flat_map(|(r, c)| {
            proptest::collection::vec(-3i64..=3, r * c)
                .prop_map(move |vals| Matrix::from_i64(r, c, &vals))
        })
    }

    fn subspace_in(n: usize) -> impl Strategy<Value = Subspace> {
        proptest::collection::vec(proptest::collection::vec(-2i64..=2, n), 0..4)
            .prop_map(move |rows| Subspace::span(n, rows.iter().map(|r| v(r))).unwrap())
    }

    proptest! {
        #[test]
        fn rank_nullity(m in small_matrix()) {
            let ns = nullspace(&m);
            prop_assert_eq!(m.rank() + ns.dim(), m.cols());
            for b in ns.basis() {
                prop_assert!(crate::linalg::is_zero_vector(&m.mul_vec(b)));
            }
            let (r, _) = rref(&ns.to_matrix());
            prop_assert_eq!(r, ns.to_matrix());
        }

        #[test]
        fn rref_idempotent(m in small_matrix()) {
            let (r, p) = rref(&m);
            prop_assert_eq!(rref(&r), (r.clone(), p));
        }

        #[test]
        fn intersection_laws(a in subspace_in(4), b in subspace_in(4), c in subspace_in(4)) {
            let ab = a.intersect(&b).unwrap();
            prop_assert_eq!(&ab, &b.intersect(&a).unwrap());
            prop_assert_eq!(
                ab.intersect(&c).unwrap(),
                a.intersect(&b.intersect(&c).unwrap()).unwrap()
            );
            let sum = a.sum(&b).unwrap();
            prop_assert_eq!(ab.dim() + sum.dim(), a.dim() + b.dim());
            prop_assert!(ab.is_subspace_of(&a).unwrap() && ab.is_subspace_of(&b).unwrap());
        }
    }
}
