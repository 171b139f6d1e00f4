use alloc::vec::Vec;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{BilinearMap, MapKind};
use crate::algebra::pairs;
use crate::error::{Error, Result};
use crate::linalg::{self, int, Matrix, Subspace, Vector};
use crate::rep::Representation;

/// A single defining equation of a map space.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Law {
    /// `δ(x, y) = -δ(y, x)`
    Skew,
    /// `β δ(x, y) = δ(α x, α y)`
    TwistEquivariance,
    /// `δ(α z, [x, y]) = α(x) δ(z, y) - α(y) δ(z, x)`
    LeftDerivation,
    /// `δ([x, y], α z) = α(x) δ(y, z) - α(y) δ(x, z)`
    RightDerivation,
    /// `γ([x, y]) = α(x) γ(y)`
    CentroidBracket,
    /// `β γ = γ α`, also used for commuting maps
    Twist,
    /// `α(x) f(y) + α(y) f(x) = 0`
    CommutingPolarized,
    /// Values lie in `Z_V(L)`.
    CentralValues,
    /// Values lie in `Z_V(L')`.
    SpecialValues,
    /// The map vanishes on arguments from `L'`.
    VanishesOnDerived,
}

/// A violated equation: the law, the basis indices it was evaluated at and
/// the nonzero residual.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Defect {
    pub law: Law,
    pub args: Vec<usize>,
    pub residual: Vector,
}

/// Precomputed data shared by every equation on one module.
pub(crate) struct Context<'a> {
    pub module: &'a Representation,
    pub n: usize,
    pub d: usize,
    pub alpha_cols: Vec<Vector>,
    /// `ρ(α e_i)`
    pub twisted: Vec<Matrix>,
    /// `[e_i, e_j]` for all ordered pairs, at `i * n + j`.
    pub brackets: Vec<Vector>,
}

impl<'a> Context<'a> {
    pub fn new(module: &'a Representation) -> Self {
        let l = module.algebra();
        let n = l.dim();
        let mut brackets = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                brackets.push(l.basis_bracket(i, j));
            }
        }
        Self {
            module,
            n,
            d: module.dim(),
            alpha_cols: (0..n).map(|i| l.alpha().column(i)).collect(),
            twisted: module.twisted_actions(),
            brackets,
        }
    }

    pub fn bracket(&self, i: usize, j: usize) -> &Vector {
        &self.brackets[i * self.n + j]
    }

    /// Base equations of a bilinear kind: `(3.1)` and `(3.3)` for skew maps,
    /// `(3.1)`-`(3.3)` otherwise. Arguments of the derivation laws run over
    /// `i < j` since both sides are antisymmetric in `x, y`.
    pub fn bilinear_laws(
        &self,
        delta: &BilinearMap,
        skew: bool,
        sink: &mut impl FnMut(Law, &[usize], Vector),
    ) {
        let (n, beta) = (self.n, self.module.beta());
        for i in 0..n {
            for j in 0..n {
                if skew && i >= j {
                    continue;
                }
                let lhs = beta.mul_vec(delta.value(i, j));
                let rhs = delta.eval(&self.alpha_cols[i], &self.alpha_cols[j]);
                sink(
                    Law::TwistEquivariance,
                    &[i, j],
                    linalg::sub_vectors(&lhs, &rhs),
                );
            }
        }
        for (i, j) in pairs(n) {
            for k in 0..n {
                if !skew {
                    let mut r = delta.eval(&self.alpha_cols[k], self.bracket(i, j));
                    let a = self.twisted[i].mul_vec(delta.value(k, j));
                    let b = self.twisted[j].mul_vec(delta.value(k, i));
                    r = linalg::add_vectors(&linalg::sub_vectors(&r, &a), &b);
                    sink(Law::LeftDerivation, &[i, j, k], r);
                }
                let mut r = delta.eval(self.bracket(i, j), &self.alpha_cols[k]);
                let a = self.twisted[i].mul_vec(delta.value(j, k));
                let b = self.twisted[j].mul_vec(delta.value(i, k));
                r = linalg::add_vectors(&linalg::sub_vectors(&r, &a), &b);
                sink(Law::RightDerivation, &[i, j, k], r);
            }
        }
    }

    pub fn centroid_laws(&self, f: &Matrix, sink: &mut impl FnMut(Law, &[usize], Vector)) {
        let n = self.n;
        let columns: Vec<Vector> = (0..n).map(|i| f.column(i)).collect();
        for i in 0..n {
            for (j, column) in columns.iter().enumerate() {
                let lhs = f.mul_vec(self.bracket(i, j));
                let rhs = self.twisted[i].mul_vec(column);
                sink(
                    Law::CentroidBracket,
                    &[i, j],
                    linalg::sub_vectors(&lhs, &rhs),
                );
            }
        }
        self.twist_law(f, &columns, sink);
    }

    pub fn commuting_laws(&self, f: &Matrix, sink: &mut impl FnMut(Law, &[usize], Vector)) {
        let n = self.n;
        let columns: Vec<Vector> = (0..n).map(|i| f.column(i)).collect();
        for i in 0..n {
            for j in i..n {
                let a = self.twisted[i].mul_vec(&columns[j]);
                let b = self.twisted[j].mul_vec(&columns[i]);
                sink(
                    Law::CommutingPolarized,
                    &[i, j],
                    linalg::add_vectors(&a, &b),
                );
            }
        }
        self.twist_law(f, &columns, sink);
    }

    fn twist_law(
        &self,
        f: &Matrix,
        columns: &[Vector],
        sink: &mut impl FnMut(Law, &[usize], Vector),
    ) {
        let beta = self.module.beta();
        for (i, col) in columns.iter().enumerate() {
            let lhs = beta.mul_vec(col);
            let rhs = f.mul_vec(&self.alpha_cols[i]);
            sink(Law::Twist, &[i], linalg::sub_vectors(&lhs, &rhs));
        }
    }
}

/// Extra conditions cutting a central or special subspace out of its parent.
pub(crate) struct Filter {
    pub values_in: Subspace,
    pub law: Law,
    /// Basis of `L'` when the map must vanish on it.
    pub derived: Option<Vec<Vector>>,
}

impl Filter {
    pub fn central(module: &Representation) -> Self {
        let n = module.algebra().dim();
        Filter {
            values_in: module
                .annihilated(&Subspace::full(n))
                .expect("full subspace of L"),
            law: Law::CentralValues,
            derived: None,
        }
    }

    pub fn special(module: &Representation) -> Self {
        let derived = module.algebra().derived();
        Filter {
            values_in: module.annihilated(&derived).expect("derived subspace of L"),
            law: Law::SpecialValues,
            derived: Some(derived.basis().to_vec()),
        }
    }

    fn value_residual(&self, v: &[crate::linalg::Scalar]) -> Vector {
        self.values_in.reduce(v).expect("value has module length")
    }

    pub fn bilinear(&self, delta: &BilinearMap, sink: &mut impl FnMut(Law, &[usize], Vector)) {
        let n = delta.algebra_dim();
        for (i, j) in pairs(n) {
            sink(self.law, &[i, j], self.value_residual(delta.value(i, j)));
        }
        if let Some(derived) = &self.derived {
            for (a, u) in derived.iter().enumerate() {
                for (b, w) in derived.iter().enumerate().skip(a + 1) {
                    sink(Law::VanishesOnDerived, &[a, b], delta.eval(u, w));
                }
            }
        }
    }

    pub fn linear(&self, f: &Matrix, sink: &mut impl FnMut(Law, &[usize], Vector)) {
        for i in 0..f.cols() {
            sink(self.law, &[i], self.value_residual(&f.column(i)));
        }
        if let Some(derived) = &self.derived {
            for (a, u) in derived.iter().enumerate() {
                sink(Law::VanishesOnDerived, &[a], f.mul_vec(u));
            }
        }
    }
}

fn collect_defects(run: impl FnOnce(&mut dyn FnMut(Law, &[usize], Vector))) -> Vec<Defect> {
    let mut defects = Vec::new();
    run(&mut |law, args: &[usize], residual: Vector| {
        if !linalg::is_zero_vector(&residual) {
            defects.push(Defect {
                law,
                args: args.to_vec(),
                residual,
            });
        }
    });
    defects
}

fn filter_for(kind: MapKind, module: &Representation) -> Option<Filter> {
    match kind {
        MapKind::CBiderS | MapKind::CCom => Some(Filter::central(module)),
        MapKind::SBiderS | MapKind::SCom => Some(Filter::special(module)),
        _ => None,
    }
}

/// Every defining equation of a bilinear `kind` that `delta` violates.
pub fn bilinear_defects(
    module: &Representation,
    delta: &BilinearMap,
    kind: MapKind,
) -> Result<Vec<Defect>> {
    if !kind.is_bilinear() {
        return Err(Error::KindMismatch {
            expected: "bilinear",
            found: kind.name(),
        });
    }
    let (n, d) = (module.algebra().dim(), module.dim());
    if (delta.algebra_dim(), delta.module_dim()) != (n, d) {
        return Err(Error::DimensionMismatch {
            expected: n * n * d,
            found: delta.algebra_dim() * delta.algebra_dim() * delta.module_dim(),
        });
    }
    let ctx = Context::new(module);
    let filter = filter_for(kind, module);
    Ok(collect_defects(|sink| {
        let mut sink = |law, args: &[usize], r| sink(law, args, r);
        if kind.is_skew() {
            for i in 0..n {
                for j in i..n {
                    let r = linalg::add_vectors(delta.value(i, j), delta.value(j, i));
                    sink(Law::Skew, &[i, j], r);
                }
            }
        }
        ctx.bilinear_laws(delta, kind.is_skew(), &mut sink);
        if let Some(filter) = &filter {
            filter.bilinear(delta, &mut sink);
        }
    }))
}

/// Every defining equation of a linear `kind` that `f` violates.
pub fn linear_defects(module: &Representation, f: &Matrix, kind: MapKind) -> Result<Vec<Defect>> {
    if kind.is_bilinear() {
        return Err(Error::KindMismatch {
            expected: "linear",
            found: kind.name(),
        });
    }
    let (n, d) = (module.algebra().dim(), module.dim());
    if (f.rows(), f.cols()) != (d, n) {
        return Err(Error::DimensionMismatch {
            expected: n * d,
            found: f.rows() * f.cols(),
        });
    }
    let ctx = Context::new(module);
    let filter = filter_for(kind, module);
    Ok(collect_defects(|sink| {
        let mut sink = |law, args: &[usize], r| sink(law, args, r);
        if kind == MapKind::Cent {
            ctx.centroid_laws(f, &mut sink);
        } else {
            ctx.commuting_laws(f, &mut sink);
        }
        if let Some(filter) = &filter {
            filter.linear(f, &mut sink);
        }
    }))
}

/// Evaluates the unpolarized condition `α(x) f(x) = 0` at `samples` seeded
/// random vectors and returns the first `x` where it fails.
pub fn quadratic_commuting_failure(
    module: &Representation,
    f: &Matrix,
    samples: usize,
    seed: u64,
) -> Option<Vector> {
    let l = module.algebra();
    let n = l.dim();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..samples {
        let x: Vector = (0..n).map(|_| int(rng.gen_range(-5..=5))).collect();
        let ax = l.alpha().mul_vec(&x);
        let r = module.action_unchecked(&ax).mul_vec(&f.mul_vec(&x));
        if !linalg::is_zero_vector(&r) {
            return Some(x);
        }
    }
    None
}
