//! Spaces of biderivations, centroid elements and commuting maps.
//!
//! A bilinear map `δ : L x L -> V` is stored by its values on basis pairs. A
//! linear map `f : L -> V` is a `d x n` matrix whose column `i` is `f(e_i)`.
//! Solution spaces are canonical subspaces of a flat coordinate space:
//!
//! * skew bilinear maps: `δ(e_i, e_j)_a` for `i < j` at `pair_index(i, j) * d + a`
//! * arbitrary bilinear maps: `δ(e_i, e_j)_a` at `(i * n + j) * d + a`
//! * linear maps: `f(e_i)_a` at `i * d + a`

pub(crate) mod construct;
pub(crate) mod laws;
mod solve;
mod verify;

pub use construct::{
    centroid_from_biderivation, commuting_biderivation, decompose_commuting, induced_biderivation,
    special_from_form, FormOutcome,
};
pub use laws::{bilinear_defects, linear_defects, quadratic_commuting_failure, Defect, Law};
pub use solve::{
    central_subspace, solve, solve_bider, solve_bider_s, solve_cent, solve_com, special_subspace,
};
pub use verify::{
    verify_adjoint_biderivations, verify_cent_equals_com, verify_centroid_induced,
    verify_commuting_decomposition, TheoremReport,
};

use alloc::vec::Vec;
use core::fmt;

use crate::algebra::{pair_count, pair_index, pairs};
use crate::error::{Error, Hypothesis, Result};
use crate::linalg::{self, Matrix, Scalar, Subspace, Vector};
use crate::rep::Representation;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum MapKind {
    Bider,
    BiderS,
    Cent,
    Com,
    CBiderS,
    SBiderS,
    CCom,
    SCom,
}

impl MapKind {
    pub const ALL: [MapKind; 8] = [
        MapKind::Bider,
        MapKind::BiderS,
        MapKind::Cent,
        MapKind::Com,
        MapKind::CBiderS,
        MapKind::SBiderS,
        MapKind::CCom,
        MapKind::SCom,
    ];

    pub fn name(self) -> &'static str {
        match self {
            MapKind::Bider => "bider",
            MapKind::BiderS => "bider-s",
            MapKind::Cent => "cent",
            MapKind::Com => "com",
            MapKind::CBiderS => "cbider-s",
            MapKind::SBiderS => "sbider-s",
            MapKind::CCom => "ccom",
            MapKind::SCom => "scom",
        }
    }

    pub fn from_name(name: &str) -> Option<MapKind> {
        MapKind::ALL.into_iter().find(|k| k.name() == name)
    }

    pub fn is_bilinear(self) -> bool {
        matches!(
            self,
            MapKind::Bider | MapKind::BiderS | MapKind::CBiderS | MapKind::SBiderS
        )
    }

    /// Skew bilinear kinds use the `i < j` coordinates.
    pub fn is_skew(self) -> bool {
        matches!(self, MapKind::BiderS | MapKind::CBiderS | MapKind::SBiderS)
    }

    /// Number of flat coordinates for `n`-dimensional `L` and `d`-dimensional `V`.
    pub fn coordinate_count(self, n: usize, d: usize) -> usize {
        if self.is_skew() {
            pair_count(n) * d
        } else if self.is_bilinear() {
            n * n * d
        } else {
            n * d
        }
    }
}

impl fmt::Display for MapKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Three-valued outcome of a theorem check. Theorems are never reported
/// false: a contradiction under verified hypotheses is an internal error.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Verdict {
    Confirmed,
    HypothesesFailed(Vec<Hypothesis>),
    /// The statement needs an algebraically closed field and the rational
    /// computation neither confirms nor refutes it.
    InconclusiveOverQ,
}

impl Verdict {
    pub fn is_confirmed(&self) -> bool {
        matches!(self, Verdict::Confirmed)
    }
}

/// `δ : L x L -> V` by its values on basis pairs.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BilinearMap {
    n: usize,
    d: usize,
    values: Vec<Vector>,
}

impl BilinearMap {
    pub fn zero(n: usize, d: usize) -> Self {
        Self {
            n,
            d,
            values: alloc::vec![linalg::zero_vector(d); n * n],
        }
    }

    /// Values from `f(i, j) = δ(e_i, e_j)`. Panics if a value has the wrong
    /// length.
    pub fn from_fn(n: usize, d: usize, mut f: impl FnMut(usize, usize) -> Vector) -> Self {
        let mut values = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                let v = f(i, j);
                assert_eq!(v.len(), d, "bilinear map value length");
                values.push(v);
            }
        }
        Self { n, d, values }
    }

    /// The skew map with `δ(e_i, e_j) = -δ(e_j, e_i) = f(i, j)` for `i < j`.
    pub fn skew_from_fn(n: usize, d: usize, mut f: impl FnMut(usize, usize) -> Vector) -> Self {
        let mut map = Self::zero(n, d);
        for (i, j) in pairs(n) {
            let v = f(i, j);
            assert_eq!(v.len(), d, "bilinear map value length");
            map.values[j * n + i] = v.iter().map(|x| -x).collect();
            map.values[i * n + j] = v;
        }
        map
    }

    pub fn from_skew_coords(n: usize, d: usize, c: &[Scalar]) -> Self {
        assert_eq!(c.len(), pair_count(n) * d, "skew coordinate count");
        Self::skew_from_fn(n, d, |i, j| {
            let p = pair_index(n, i, j);
            c[p * d..(p + 1) * d].to_vec()
        })
    }

    pub fn from_full_coords(n: usize, d: usize, c: &[Scalar]) -> Self {
        assert_eq!(c.len(), n * n * d, "coordinate count");
        Self::from_fn(n, d, |i, j| {
            c[(i * n + j) * d..(i * n + j + 1) * d].to_vec()
        })
    }

    /// Coefficient tensor `t[a][i][j]` with `δ(e_i, e_j) = Σ_a t[a][i][j] v_a`.
    pub fn from_tensor(t: &[Vec<Vec<Scalar>>]) -> Result<Self> {
        let d = t.len();
        let n = t.first().map_or(0, Vec::len);
        for slice in t {
            if slice.len() != n {
                return Err(Error::DimensionMismatch {
                    expected: n,
                    found: slice.len(),
                });
            }
            for row in slice {
                if row.len() != n {
                    return Err(Error::DimensionMismatch {
                        expected: n,
                        found: row.len(),
                    });
                }
            }
        }
        Ok(Self::from_fn(n, d, |i, j| {
            (0..d).map(|a| t[a][i][j].clone()).collect()
        }))
    }

    pub fn tensor(&self) -> Vec<Vec<Vec<Scalar>>> {
        (0..self.d)
            .map(|a| {
                (0..self.n)
                    .map(|i| (0..self.n).map(|j| self.value(i, j)[a].clone()).collect())
                    .collect()
            })
            .collect()
    }

    pub fn algebra_dim(&self) -> usize {
        self.n
    }

    pub fn module_dim(&self) -> usize {
        self.d
    }

    /// `δ(e_i, e_j)`.
    pub fn value(&self, i: usize, j: usize) -> &Vector {
        &self.values[i * self.n + j]
    }

    pub fn eval(&self, x: &[Scalar], y: &[Scalar]) -> Vector {
        let mut out = linalg::zero_vector(self.d);
        for (i, xi) in x.iter().enumerate() {
            if num_traits::Zero::is_zero(xi) {
                continue;
            }
            for (j, yj) in y.iter().enumerate() {
                if !num_traits::Zero::is_zero(yj) {
                    linalg::axpy(&mut out, &(xi * yj), self.value(i, j));
                }
            }
        }
        out
    }

    pub fn is_skew(&self) -> bool {
        (0..self.n).all(|i| {
            linalg::is_zero_vector(self.value(i, i))
                && (i + 1..self.n).all(|j| {
                    linalg::is_zero_vector(&linalg::add_vectors(self.value(i, j), self.value(j, i)))
                })
        })
    }

    pub fn is_zero(&self) -> bool {
        self.values.iter().all(|v| linalg::is_zero_vector(v))
    }

    /// `i < j` coordinates; only meaningful for skew maps.
    pub fn skew_coords(&self) -> Vector {
        let mut out = Vec::with_capacity(pair_count(self.n) * self.d);
        for (i, j) in pairs(self.n) {
            out.extend(self.value(i, j).iter().cloned());
        }
        out
    }

    pub fn full_coords(&self) -> Vector {
        self.values.iter().flatten().cloned().collect()
    }

    /// Post-composition with a linear map `V -> W`.
    pub fn compose_left(&self, m: &Matrix) -> BilinearMap {
        assert_eq!(m.cols(), self.d, "composition shape");
        BilinearMap {
            n: self.n,
            d: m.rows(),
            values: self.values.iter().map(|v| m.mul_vec(v)).collect(),
        }
    }

    pub fn scale(&self, c: &Scalar) -> BilinearMap {
        BilinearMap {
            n: self.n,
            d: self.d,
            values: self
                .values
                .iter()
                .map(|v| linalg::scale_vector(c, v))
                .collect(),
        }
    }

    pub fn sub(&self, other: &BilinearMap) -> BilinearMap {
        assert_eq!((self.n, self.d), (other.n, other.d), "bilinear map shapes");
        BilinearMap {
            n: self.n,
            d: self.d,
            values: self
                .values
                .iter()
                .zip(&other.values)
                .map(|(a, b)| linalg::sub_vectors(a, b))
                .collect(),
        }
    }
}

/// Linear map `L -> V` from flat coordinates `i * d + a`.
pub fn linear_from_coords(n: usize, d: usize, c: &[Scalar]) -> Matrix {
    assert_eq!(c.len(), n * d, "coordinate count");
    Matrix::from_fn(d, n, |a, i| c[i * d + a].clone())
}

pub fn linear_to_coords(f: &Matrix) -> Vector {
    let (d, n) = (f.rows(), f.cols());
    let mut out = Vec::with_capacity(n * d);
    for i in 0..n {
        for a in 0..d {
            out.push(f.get(a, i).clone());
        }
    }
    out
}

/// A canonical solution space of maps into `module`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MapSpace {
    kind: MapKind,
    module: Representation,
    coords: Subspace,
}

impl MapSpace {
    pub fn from_coords(kind: MapKind, module: Representation, coords: Subspace) -> Result<Self> {
        let expected = kind.coordinate_count(module.algebra().dim(), module.dim());
        if coords.ambient_dim() != expected {
            return Err(Error::DimensionMismatch {
                expected,
                found: coords.ambient_dim(),
            });
        }
        Ok(Self {
            kind,
            module,
            coords,
        })
    }

    pub fn kind(&self) -> MapKind {
        self.kind
    }

    pub fn module(&self) -> &Representation {
        &self.module
    }

    pub fn dim(&self) -> usize {
        self.coords.dim()
    }

    pub fn coords(&self) -> &Subspace {
        &self.coords
    }

    fn shape(&self) -> (usize, usize) {
        (self.module.algebra().dim(), self.module.dim())
    }

    fn decode_bilinear(&self, c: &[Scalar]) -> BilinearMap {
        let (n, d) = self.shape();
        if self.kind.is_skew() {
            BilinearMap::from_skew_coords(n, d, c)
        } else {
            BilinearMap::from_full_coords(n, d, c)
        }
    }

    /// Basis of a bilinear space; empty for linear kinds.
    pub fn bilinear_basis(&self) -> Vec<BilinearMap> {
        if !self.kind.is_bilinear() {
            return Vec::new();
        }
        self.coords
            .basis()
            .iter()
            .map(|c| self.decode_bilinear(c))
            .collect()
    }

    /// Basis of a linear space; empty for bilinear kinds.
    pub fn linear_basis(&self) -> Vec<Matrix> {
        if self.kind.is_bilinear() {
            return Vec::new();
        }
        let (n, d) = self.shape();
        self.coords
            .basis()
            .iter()
            .map(|c| linear_from_coords(n, d, c))
            .collect()
    }

    fn kind_error(&self, expected: &'static str) -> Error {
        Error::KindMismatch {
            expected,
            found: self.kind.name(),
        }
    }

    /// Flat coordinates of `δ` in this space's convention.
    pub fn bilinear_coords(&self, delta: &BilinearMap) -> Result<Vector> {
        if !self.kind.is_bilinear() {
            return Err(self.kind_error("bilinear"));
        }
        let (n, d) = self.shape();
        if (delta.algebra_dim(), delta.module_dim()) != (n, d) {
            return Err(Error::DimensionMismatch {
                expected: n * n * d,
                found: delta.algebra_dim() * delta.algebra_dim() * delta.module_dim(),
            });
        }
        Ok(if self.kind.is_skew() {
            delta.skew_coords()
        } else {
            delta.full_coords()
        })
    }

    pub fn contains_bilinear(&self, delta: &BilinearMap) -> Result<bool> {
        if self.kind.is_skew() && !delta.is_skew() {
            return Ok(false);
        }
        let c = self.bilinear_coords(delta)?;
        self.coords.contains(&c)
    }

    pub fn contains_linear(&self, f: &Matrix) -> Result<bool> {
        if self.kind.is_bilinear() {
            return Err(self.kind_error("linear"));
        }
        let (n, d) = self.shape();
        if (f.rows(), f.cols()) != (d, n) {
            return Err(Error::DimensionMismatch {
                expected: n * d,
                found: f.rows() * f.cols(),
            });
        }
        self.coords.contains(&linear_to_coords(f))
    }

    /// Coordinate containment, regardless of kind. Both spaces must use the
    /// same coordinates.
    pub fn is_subspace_of(&self, other: &MapSpace) -> Result<bool> {
        self.coords.is_subspace_of(&other.coords)
    }

    /// Same span, regardless of kind.
    pub fn same_span(&self, other: &MapSpace) -> bool {
        self.coords == other.coords
    }

    /// Sum of two spaces with the same coordinates, labelled `kind`.
    pub fn sum(&self, other: &MapSpace, kind: MapKind) -> Result<MapSpace> {
        if self.module != other.module {
            return Err(Error::AlgebraMismatch);
        }
        MapSpace::from_coords(kind, self.module.clone(), self.coords.sum(&other.coords)?)
    }
}
