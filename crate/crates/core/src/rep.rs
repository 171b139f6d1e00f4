//! Modules `(V, ρ, β)` over a Hom-Lie algebra.

use alloc::format;
use alloc::sync::Arc;
use alloc::vec::Vec;

use crate::algebra::{pairs, HomLieAlgebra, SimplicityVerdict};
use crate::error::{Error, Hypothesis, Result};
use crate::linalg::{self, Matrix, Scalar, Subspace, Vector};
use crate::maps::Verdict;

/// A module over `algebra`: `rho[i]` is the action of `e_i`, `beta` the
/// module twist.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Representation {
    algebra: Arc<HomLieAlgebra>,
    rho: Vec<Matrix>,
    beta: Matrix,
}

/// Failures of the two module laws, with residual matrices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RepValidationReport {
    /// `β ρ(e_i) - ρ(α e_i) β ≠ 0`
    pub twist_failures: Vec<(usize, Matrix)>,
    /// `ρ([e_i, e_j]) β - ρ(α e_i) ρ(e_j) + ρ(α e_j) ρ(e_i) ≠ 0`
    pub bracket_failures: Vec<((usize, usize), Matrix)>,
}

impl RepValidationReport {
    pub fn is_accepted(&self) -> bool {
        self.twist_failures.is_empty() && self.bracket_failures.is_empty()
    }
}

/// `V / W` with its projection and a section.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuotientModule {
    pub module: Representation,
    pub projection: Matrix,
    pub section: Matrix,
}

/// Module homomorphisms `V1 -> V2`, as `d2 x d1` matrices. Coordinates of a
/// map `f` are its entries in row-major order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModuleHomSpace {
    pub domain: Representation,
    pub codomain: Representation,
    pub coords: Subspace,
}

impl ModuleHomSpace {
    pub fn dim(&self) -> usize {
        self.coords.dim()
    }

    pub fn basis(&self) -> Vec<Matrix> {
        let (d2, d1) = (self.codomain.dim(), self.domain.dim());
        self.coords
            .basis()
            .iter()
            .map(|c| Matrix::from_fn(d2, d1, |r, s| c[r * d1 + s].clone()))
            .collect()
    }

    pub fn contains(&self, f: &Matrix) -> Result<bool> {
        if f.rows() != self.codomain.dim() || f.cols() != self.domain.dim() {
            return Err(Error::DimensionMismatch {
                expected: self.coords.ambient_dim(),
                found: f.rows() * f.cols(),
            });
        }
        self.coords.contains(f.entries())
    }
}

/// Outcome of comparing module homomorphisms `ad_k -> ad_{k+s}` with the
/// line spanned by `α^{s+1}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SchurReport {
    pub verdict: Verdict,
    pub space: Option<ModuleHomSpace>,
    pub falsifier: SimplicityVerdict,
}

impl Representation {
    pub fn new(algebra: Arc<HomLieAlgebra>, rho: Vec<Matrix>, beta: Matrix) -> Result<Self> {
        let n = algebra.dim();
        if rho.len() != n {
            return Err(Error::DimensionMismatch {
                expected: n,
                found: rho.len(),
            });
        }
        let d = beta.rows();
        if !beta.is_square() {
            return Err(Error::DimensionMismatch {
                expected: d,
                found: beta.cols(),
            });
        }
        for m in &rho {
            if m.rows() != d || m.cols() != d {
                return Err(Error::DimensionMismatch {
                    expected: d,
                    found: if m.rows() != d { m.rows() } else { m.cols() },
                });
            }
        }
        Ok(Self { algebra, rho, beta })
    }

    /// `ad_k`: `V = L`, `ρ(x) = ad(α^k x)`, `β = α`.
    pub fn adjoint(algebra: Arc<HomLieAlgebra>, k: i64) -> Result<Self> {
        let ak = algebra.alpha_power(k)?;
        let n = algebra.dim();
        let rho = (0..n)
            .map(|i| algebra.ad_unchecked(&ak.column(i)))
            .collect();
        let beta = algebra.alpha().clone();
        Self::new(algebra, rho, beta)
    }

    pub fn algebra(&self) -> &Arc<HomLieAlgebra> {
        &self.algebra
    }

    pub fn dim(&self) -> usize {
        self.beta.rows()
    }

    pub fn rho(&self) -> &[Matrix] {
        &self.rho
    }

    pub fn beta(&self) -> &Matrix {
        &self.beta
    }

    /// `ρ(x)` for an arbitrary element.
    pub fn action(&self, x: &[Scalar]) -> Result<Matrix> {
        if x.len() != self.algebra.dim() {
            return Err(Error::DimensionMismatch {
                expected: self.algebra.dim(),
                found: x.len(),
            });
        }
        Ok(self.action_unchecked(x))
    }

    pub(crate) fn action_unchecked(&self, x: &[Scalar]) -> Matrix {
        let d = self.dim();
        let mut out = Matrix::zeros(d, d);
        for (c, m) in x.iter().zip(&self.rho) {
            if !num_traits::Zero::is_zero(c) {
                out = &out + &m.scale(c);
            }
        }
        out
    }

    /// `ρ(α(e_i))` for every basis index.
    pub(crate) fn twisted_actions(&self) -> Vec<Matrix> {
        let alpha = self.algebra.alpha();
        (0..self.algebra.dim())
            .map(|i| self.action_unchecked(&alpha.column(i)))
            .collect()
    }

    pub fn validate(&self) -> RepValidationReport {
        let n = self.algebra.dim();
        let twisted = self.twisted_actions();
        let mut twist_failures = Vec::new();
        for (i, (rho, tw)) in self.rho.iter().zip(&twisted).enumerate() {
            let r = &(&self.beta * rho) - &(tw * &self.beta);
            if !r.is_zero() {
                twist_failures.push((i, r));
            }
        }
        let mut bracket_failures = Vec::new();
        for (i, j) in pairs(n) {
            let lhs = &self.action_unchecked(&self.algebra.basis_bracket(i, j)) * &self.beta;
            let rhs = &(&twisted[i] * &self.rho[j]) - &(&twisted[j] * &self.rho[i]);
            let r = &lhs - &rhs;
            if !r.is_zero() {
                bracket_failures.push(((i, j), r));
            }
        }
        RepValidationReport {
            twist_failures,
            bracket_failures,
        }
    }

    pub fn ensure_accepted(&self) -> Result<()> {
        let report = self.validate();
        let names = self.algebra.basis_names();
        if let Some((i, _)) = report.twist_failures.first() {
            return Err(Error::ModuleRejected(format!(
                "beta does not intertwine the action of {}",
                names[*i]
            )));
        }
        if let Some(((i, j), _)) = report.bracket_failures.first() {
            return Err(Error::ModuleRejected(format!(
                "bracket law fails on ({}, {})",
                names[*i], names[*j]
            )));
        }
        Ok(())
    }

    /// `(V, ρ ∘ α^k, β)`.
    pub fn twist(&self, k: u32) -> Representation {
        let ak = self.algebra.alpha().pow(k);
        let rho = (0..self.algebra.dim())
            .map(|i| self.action_unchecked(&ak.column(i)))
            .collect();
        Self {
            algebra: self.algebra.clone(),
            rho,
            beta: self.beta.clone(),
        }
    }

    /// `Z_V(S)`: vectors killed by every element of `S`.
    pub fn annihilated(&self, s: &Subspace) -> Result<Subspace> {
        if s.ambient_dim() != self.algebra.dim() {
            return Err(Error::DimensionMismatch {
                expected: self.algebra.dim(),
                found: s.ambient_dim(),
            });
        }
        let blocks: Vec<Matrix> = s.basis().iter().map(|x| self.action_unchecked(x)).collect();
        Ok(linalg::nullspace(&Matrix::vstack(self.dim(), &blocks)))
    }

    fn check_module_subspace(&self, w: &Subspace) -> Result<()> {
        if w.ambient_dim() != self.dim() {
            return Err(Error::DimensionMismatch {
                expected: self.dim(),
                found: w.ambient_dim(),
            });
        }
        Ok(())
    }

    pub fn is_submodule(&self, w: &Subspace) -> Result<bool> {
        self.check_module_subspace(w)?;
        for v in w.basis() {
            if !w.contains(&self.beta.mul_vec(v))? {
                return Ok(false);
            }
            for m in &self.rho {
                if !w.contains(&m.mul_vec(v))? {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    /// `V / W` in the non-pivot coordinates of the echelonized `W`.
    pub fn quotient(&self, w: &Subspace) -> Result<QuotientModule> {
        if !self.is_submodule(w)? {
            return Err(Error::NotASubmodule);
        }
        let (projection, section, _) = w.quotient_maps();
        let reduce = |m: &Matrix| &(&projection * m) * &section;
        let rho = self.rho.iter().map(reduce).collect();
        let beta = reduce(&self.beta);
        Ok(QuotientModule {
            module: Representation::new(self.algebra.clone(), rho, beta)?,
            projection,
            section,
        })
    }

    /// All module homomorphisms `v1 -> v2`.
    pub fn hom_space(v1: &Representation, v2: &Representation) -> Result<ModuleHomSpace> {
        if v1.algebra != v2.algebra {
            return Err(Error::AlgebraMismatch);
        }
        let (d1, d2) = (v1.dim(), v2.dim());
        let twisted2 = v2.twisted_actions();
        let coords = linalg::kernel_of(d1 * d2, |c| {
            let f = Matrix::from_fn(d2, d1, |r, s| c[r * d1 + s].clone());
            let mut residual: Vector = (&(&v2.beta * &f) - &(&f * &v1.beta)).entries().to_vec();
            for (rho1, rho2a) in v1.rho.iter().zip(&twisted2) {
                residual.extend((&(&f * rho1) - &(rho2a * &f)).entries().iter().cloned());
            }
            residual
        });
        Ok(ModuleHomSpace {
            domain: v1.clone(),
            codomain: v2.clone(),
            coords,
        })
    }

    /// Checks whether every homomorphism `ad_k -> ad_{k+s}` is a multiple of
    /// `α^{s+1}`. Needs invertible `α`; simplicity is taken from the caller
    /// and must survive the falsifier.
    pub fn schur_check(
        algebra: Arc<HomLieAlgebra>,
        k: i64,
        s: i64,
        asserted_simple: bool,
        trials: usize,
        seed: u64,
    ) -> Result<SchurReport> {
        if !algebra.alpha_invertible() {
            return Err(Error::SingularAlpha);
        }
        let falsifier = algebra.simplicity_falsifier(trials, seed);
        if !asserted_simple || falsifier.is_counterexample() {
            return Ok(SchurReport {
                verdict: Verdict::HypothesesFailed(alloc::vec![Hypothesis::Simple]),
                space: None,
                falsifier,
            });
        }
        let v1 = Representation::adjoint(algebra.clone(), k)?;
        let v2 = Representation::adjoint(algebra.clone(), k + s)?;
        let space = Representation::hom_space(&v1, &v2)?;
        let expected = algebra.alpha_power(s + 1)?;
        let verdict = if space.dim() == 1 && space.contains(&expected)? {
            Verdict::Confirmed
        } else if space.dim() > 1 || space.dim() == 0 {
            Verdict::InconclusiveOverQ
        } else {
            return Err(Error::Internal(format!(
                "alpha^{} is a module homomorphism but not in the computed space",
                s + 1
            )));
        };
        Ok(SchurReport {
            verdict,
            space: Some(space),
            falsifier,
        })
    }
}
