//! Finite-dimensional multiplicative Hom-Lie algebras given by structure
//! constants and a twist matrix.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use num_traits::{One, Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::linalg::{self, int, Matrix, Scalar, Subspace, Vector};

/// Number of pairs `i < j` among `n` indices.
pub fn pair_count(n: usize) -> usize {
    n * n.saturating_sub(1) / 2
}

/// Position of the pair `(i, j)`, `i < j`, in lexicographic order.
pub fn pair_index(n: usize, i: usize, j: usize) -> usize {
    debug_assert!(i < j && j < n);
    i * n - i * (i + 1) / 2 + (j - i - 1)
}

/// All pairs `i < j` in lexicographic order.
pub fn pairs(n: usize) -> impl Iterator<Item = (usize, usize)> {
    (0..n).flat_map(move |i| (i + 1..n).map(move |j| (i, j)))
}

/// Renders `v` as a linear combination of named basis vectors, e.g.
/// `2·e1 - 1/2·e3`.
pub fn format_combination(names: &[String], v: &[Scalar]) -> String {
    let mut out = String::new();
    for (name, c) in names.iter().zip(v) {
        if c.is_zero() {
            continue;
        }
        let magnitude = c.abs();
        if out.is_empty() {
            if c.is_negative() {
                out.push('-');
            }
        } else if c.is_negative() {
            out.push_str(" - ");
        } else {
            out.push_str(" + ");
        }
        if !magnitude.is_one() {
            out.push_str(&format!("{magnitude}·"));
        }
        out.push_str(name);
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

/// A Hom-Lie algebra `(L, [-,-], α)` on the basis `e_1..e_n`.
///
/// Brackets are stored only for `i < j`; `[e_j, e_i] = -[e_i, e_j]` and
/// `[e_i, e_i] = 0` are definitional, so skew-symmetry cannot fail. Column `j`
/// of `alpha` holds the coordinates of `α(e_j)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct HomLieAlgebra {
    basis_names: Vec<String>,
    brackets: Vec<Vector>,
    alpha: Matrix,
}

/// Outcome of checking the Hom-Jacobi identity and multiplicativity on basis
/// elements.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ValidationReport {
    pub skew_ok: bool,
    pub hom_jacobi_failures: Vec<((usize, usize, usize), Vector)>,
    pub multiplicativity_failures: Vec<((usize, usize), Vector)>,
    pub alpha_invertible: bool,
    pub alpha_surjective: bool,
}

impl ValidationReport {
    pub fn is_accepted(&self) -> bool {
        self.hom_jacobi_failures.is_empty() && self.multiplicativity_failures.is_empty()
    }
}

/// `L / I` with its projection and a right inverse of the projection.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuotientData {
    pub quotient: HomLieAlgebra,
    pub projection: Matrix,
    pub section: Matrix,
}

/// Result of [`HomLieAlgebra::simplicity_falsifier`]. The second variant is
/// not a proof of simplicity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SimplicityVerdict {
    Abelian,
    ProperIdeal(Subspace),
    NoCounterexample,
}

impl SimplicityVerdict {
    pub fn is_counterexample(&self) -> bool {
        !matches!(self, SimplicityVerdict::NoCounterexample)
    }
}

impl HomLieAlgebra {
    /// Builds an algebra from its nonzero brackets `(i, j, [e_i, e_j])` with
    /// 0-based `i < j`. Pairs that are not listed are zero. Nothing is
    /// validated beyond shapes; see [`HomLieAlgebra::validate`].
    pub fn new(
        basis_names: Vec<String>,
        brackets: impl IntoIterator<Item = (usize, usize, Vector)>,
        alpha: Matrix,
    ) -> Result<Self> {
        let n = basis_names.len();
        if alpha.rows() != n || alpha.cols() != n {
            return Err(Error::DimensionMismatch {
                expected: n,
                found: if alpha.rows() != n {
                    alpha.rows()
                } else {
                    alpha.cols()
                },
            });
        }
        let mut table: Vec<Option<Vector>> = alloc::vec![None; pair_count(n)];
        for (i, j, value) in brackets {
            if i >= j || j >= n {
                return Err(Error::InvalidStructure(format!(
                    "bracket index pair ({}, {}) must satisfy 1 <= i < j <= {n}",
                    i + 1,
                    j + 1
                )));
            }
            if value.len() != n {
                return Err(Error::DimensionMismatch {
                    expected: n,
                    found: value.len(),
                });
            }
            let slot = &mut table[pair_index(n, i, j)];
            if slot.is_some() {
                return Err(Error::InvalidStructure(format!(
                    "bracket ({}, {}) given twice",
                    i + 1,
                    j + 1
                )));
            }
            *slot = Some(value);
        }
        let brackets = table
            .into_iter()
            .map(|v| v.unwrap_or_else(|| linalg::zero_vector(n)))
            .collect();
        Ok(Self {
            basis_names,
            brackets,
            alpha,
        })
    }

    /// Names `e1..en`.
    pub fn default_names(n: usize) -> Vec<String> {
        (1..=n).map(|i| format!("e{i}")).collect()
    }

    pub fn dim(&self) -> usize {
        self.basis_names.len()
    }

    pub fn basis_names(&self) -> &[String] {
        &self.basis_names
    }

    pub fn alpha(&self) -> &Matrix {
        &self.alpha
    }

    /// Nonzero structure constants `(i, j, [e_i, e_j])`, `i < j`.
    pub fn nonzero_brackets(&self) -> impl Iterator<Item = (usize, usize, &Vector)> {
        let n = self.dim();
        pairs(n)
            .zip(&self.brackets)
            .filter(|(_, v)| !linalg::is_zero_vector(v))
            .map(|((i, j), v)| (i, j, v))
    }

    /// `[e_i, e_j]` for any `i, j`.
    pub fn basis_bracket(&self, i: usize, j: usize) -> Vector {
        let n = self.dim();
        match i.cmp(&j) {
            core::cmp::Ordering::Less => self.brackets[pair_index(n, i, j)].clone(),
            core::cmp::Ordering::Greater => self.brackets[pair_index(n, j, i)]
                .iter()
                .map(|x| -x)
                .collect(),
            core::cmp::Ordering::Equal => linalg::zero_vector(n),
        }
    }

    fn check_vector(&self, v: &[Scalar]) -> Result<()> {
        if v.len() != self.dim() {
            return Err(Error::DimensionMismatch {
                expected: self.dim(),
                found: v.len(),
            });
        }
        Ok(())
    }

    fn check_subspace(&self, s: &Subspace) -> Result<()> {
        if s.ambient_dim() != self.dim() {
            return Err(Error::DimensionMismatch {
                expected: self.dim(),
                found: s.ambient_dim(),
            });
        }
        Ok(())
    }

    /// Bilinear, skew extension of the structure constants.
    pub fn bracket(&self, x: &[Scalar], y: &[Scalar]) -> Result<Vector> {
        self.check_vector(x)?;
        self.check_vector(y)?;
        Ok(self.bracket_unchecked(x, y))
    }

    pub(crate) fn bracket_unchecked(&self, x: &[Scalar], y: &[Scalar]) -> Vector {
        let n = self.dim();
        let mut out = linalg::zero_vector(n);
        for (i, j) in pairs(n) {
            let c = &x[i] * &y[j] - &x[j] * &y[i];
            if !c.is_zero() {
                linalg::axpy(&mut out, &c, &self.brackets[pair_index(n, i, j)]);
            }
        }
        out
    }

    /// Matrix of `y ↦ [x, y]`.
    pub fn ad(&self, x: &[Scalar]) -> Result<Matrix> {
        self.check_vector(x)?;
        Ok(self.ad_unchecked(x))
    }

    pub(crate) fn ad_unchecked(&self, x: &[Scalar]) -> Matrix {
        let n = self.dim();
        let columns: Vec<Vector> = (0..n)
            .map(|j| {
                let mut col = linalg::zero_vector(n);
                for (i, xi) in x.iter().enumerate() {
                    if !xi.is_zero() && i != j {
                        linalg::axpy(&mut col, xi, &self.basis_bracket(i, j));
                    }
                }
                col
            })
            .collect();
        Matrix::from_columns(n, &columns).expect("columns have length n")
    }

    pub fn apply_alpha(&self, x: &[Scalar]) -> Result<Vector> {
        self.check_vector(x)?;
        Ok(self.alpha.mul_vec(x))
    }

    /// `α^k`; negative `k` needs an invertible twist.
    pub fn alpha_power(&self, k: i64) -> Result<Matrix> {
        self.alpha.signed_pow(k).ok_or(Error::SingularAlpha)
    }

    pub fn alpha_invertible(&self) -> bool {
        self.alpha.is_invertible()
    }

    /// For a square twist surjectivity and invertibility coincide.
    pub fn alpha_surjective(&self) -> bool {
        self.alpha_invertible()
    }

    pub fn validate(&self) -> ValidationReport {
        let n = self.dim();
        let alpha_cols: Vec<Vector> = (0..n).map(|i| self.alpha.column(i)).collect();
        let mut hom_jacobi_failures = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                for k in j + 1..n {
                    let mut r = self.bracket_unchecked(&alpha_cols[i], &self.basis_bracket(j, k));
                    let t2 = self.bracket_unchecked(&alpha_cols[j], &self.basis_bracket(k, i));
                    let t3 = self.bracket_unchecked(&alpha_cols[k], &self.basis_bracket(i, j));
                    linalg::axpy(&mut r, &Scalar::one(), &t2);
                    linalg::axpy(&mut r, &Scalar::one(), &t3);
                    if !linalg::is_zero_vector(&r) {
                        hom_jacobi_failures.push(((i, j, k), r));
                    }
                }
            }
        }
        let mut multiplicativity_failures = Vec::new();
        for (i, j) in pairs(n) {
            let lhs = self.alpha.mul_vec(&self.basis_bracket(i, j));
            let rhs = self.bracket_unchecked(&alpha_cols[i], &alpha_cols[j]);
            let r = linalg::sub_vectors(&lhs, &rhs);
            if !linalg::is_zero_vector(&r) {
                multiplicativity_failures.push(((i, j), r));
            }
        }
        let invertible = self.alpha_invertible();
        ValidationReport {
            skew_ok: true,
            hom_jacobi_failures,
            multiplicativity_failures,
            alpha_invertible: invertible,
            alpha_surjective: invertible,
        }
    }

    /// Fails unless the algebra satisfies Hom-Jacobi and is multiplicative.
    pub fn ensure_accepted(&self) -> Result<()> {
        let report = self.validate();
        if let Some(((i, j, k), _)) = report.hom_jacobi_failures.first() {
            return Err(Error::AlgebraRejected(format!(
                "Hom-Jacobi fails on ({}, {}, {})",
                self.basis_names[*i], self.basis_names[*j], self.basis_names[*k]
            )));
        }
        if let Some(((i, j), _)) = report.multiplicativity_failures.first() {
            return Err(Error::AlgebraRejected(format!(
                "alpha is not multiplicative on ({}, {})",
                self.basis_names[*i], self.basis_names[*j]
            )));
        }
        Ok(())
    }

    /// `{x ∈ L : [s, x] = 0 for all s ∈ S}`.
    pub fn annihilator(&self, s: &Subspace) -> Result<Subspace> {
        self.check_subspace(s)?;
        let n = self.dim();
        let blocks: Vec<Matrix> = s.basis().iter().map(|v| self.ad_unchecked(v)).collect();
        Ok(linalg::nullspace(&Matrix::vstack(n, &blocks)))
    }

    pub fn center(&self) -> Subspace {
        self.annihilator(&Subspace::full(self.dim()))
            .expect("full space has the right ambient dimension")
    }

    /// `L' = [L, L]`.
    pub fn derived(&self) -> Subspace {
        Subspace::from_spanning(self.dim(), self.brackets.clone())
    }

    pub fn is_abelian(&self) -> bool {
        self.brackets.iter().all(|v| linalg::is_zero_vector(v))
    }

    pub fn is_perfect(&self) -> bool {
        self.derived().is_full()
    }

    pub fn is_centerless(&self) -> bool {
        self.center().is_zero()
    }

    /// Closed under bracketing with `L` and under `α`.
    pub fn is_ideal(&self, s: &Subspace) -> Result<bool> {
        Ok(self.ideal_defect(s)?.is_none())
    }

    fn ideal_defect(&self, s: &Subspace) -> Result<Option<Error>> {
        self.check_subspace(s)?;
        let n = self.dim();
        for v in s.basis() {
            for i in 0..n {
                let w = self.bracket_unchecked(&linalg::unit_vector(n, i), v);
                if !s.contains(&w)? {
                    return Ok(Some(Error::NotAnIdeal));
                }
            }
        }
        for v in s.basis() {
            if !s.contains(&self.alpha.mul_vec(v))? {
                return Ok(Some(Error::AlphaDoesNotPreserve));
            }
        }
        Ok(None)
    }

    /// `L / I` in coordinates given by the non-pivot coordinates of the
    /// echelonized ideal.
    pub fn quotient(&self, ideal: &Subspace) -> Result<QuotientData> {
        if let Some(e) = self.ideal_defect(ideal)? {
            return Err(e);
        }
        let (projection, section, complement) = ideal.quotient_maps();
        let m = complement.len();
        let names: Vec<String> = complement
            .iter()
            .map(|&c| self.basis_names[c].clone())
            .collect();
        let lifts: Vec<Vector> = (0..m).map(|a| section.column(a)).collect();
        let brackets: Vec<(usize, usize, Vector)> = pairs(m)
            .map(|(a, b)| {
                let v = projection.mul_vec(&self.bracket_unchecked(&lifts[a], &lifts[b]));
                (a, b, v)
            })
            .collect();
        let alpha = &(&projection * &self.alpha) * &section;
        let quotient = HomLieAlgebra::new(names, brackets, alpha)?;
        Ok(QuotientData {
            quotient,
            projection,
            section,
        })
    }

    /// The subalgebra on a bracket- and `α`-closed subspace, in the
    /// coordinates of its canonical basis, with the inclusion matrix
    /// (`n x dim S`).
    pub fn subalgebra(&self, s: &Subspace) -> Result<(HomLieAlgebra, Matrix)> {
        self.check_subspace(s)?;
        let m = s.dim();
        let inclusion = s.to_matrix().transpose();
        let coords = |v: &Vector| -> Result<Vector> { s.coordinates(v)?.ok_or(Error::NotAnIdeal) };
        let mut brackets = Vec::new();
        for (a, b) in pairs(m) {
            let v = self.bracket_unchecked(&s.basis()[a], &s.basis()[b]);
            brackets.push((a, b, coords(&v)?));
        }
        let mut alpha_cols = Vec::with_capacity(m);
        for v in s.basis() {
            alpha_cols.push(
                s.coordinates(&self.alpha.mul_vec(v))?
                    .ok_or(Error::AlphaDoesNotPreserve)?,
            );
        }
        let names = s
            .basis()
            .iter()
            .map(|v| {
                let text = format_combination(&self.basis_names, v);
                if text.contains(' ') || text.contains('·') {
                    format!("({text})")
                } else {
                    text
                }
            })
            .collect();
        let alpha = Matrix::from_columns(m, &alpha_cols)?;
        Ok((HomLieAlgebra::new(names, brackets, alpha)?, inclusion))
    }

    /// Smallest `α`-stable ideal containing `x`.
    pub fn generated_ideal(&self, x: &[Scalar]) -> Result<Subspace> {
        self.check_vector(x)?;
        let n = self.dim();
        let mut current = Subspace::span(n, [x.to_vec()])?;
        loop {
            let mut vectors: Vec<Vector> = current.basis().to_vec();
            for v in current.basis() {
                vectors.push(self.alpha.mul_vec(v));
                for i in 0..n {
                    vectors.push(self.bracket_unchecked(&linalg::unit_vector(n, i), v));
                }
            }
            let next = Subspace::from_spanning(n, vectors);
            if next.dim() == current.dim() {
                return Ok(next);
            }
            current = next;
        }
    }

    /// Searches for a reason the algebra is not simple: abelian, or a proper
    /// nonzero ideal generated by a basis vector, by `[L, L]`, by the center,
    /// or by one of `trials` seeded random vectors.
    pub fn simplicity_falsifier(&self, trials: usize, seed: u64) -> SimplicityVerdict {
        let n = self.dim();
        if self.is_abelian() {
            return SimplicityVerdict::Abelian;
        }
        let proper = |s: &Subspace| !s.is_zero() && !s.is_full();
        for i in 0..n {
            let ideal = self
                .generated_ideal(&linalg::unit_vector(n, i))
                .expect("unit vector has length n");
            if proper(&ideal) {
                return SimplicityVerdict::ProperIdeal(ideal);
            }
        }
        for s in [self.derived(), self.center()] {
            if proper(&s) && self.is_ideal(&s).unwrap_or(false) {
                return SimplicityVerdict::ProperIdeal(s);
            }
        }
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        for _ in 0..trials {
            let v: Vector = (0..n).map(|_| int(rng.gen_range(-3..=3))).collect();
            if linalg::is_zero_vector(&v) {
                continue;
            }
            let ideal = self.generated_ideal(&v).expect("length n");
            if proper(&ideal) {
                return SimplicityVerdict::ProperIdeal(ideal);
            }
        }
        SimplicityVerdict::NoCounterexample
    }
}
