//! Staged computation of `Bider_s(L, ad_k)` and `Com(L, V)` through quotient
//! and restriction steps, cross-checked against the direct solvers.

use alloc::sync::Arc;
use alloc::vec::Vec;
use core::fmt;

use num_traits::Zero;

use crate::algebra::{pair_count, pairs, HomLieAlgebra, QuotientData};
use crate::error::{Error, Hypothesis, Result};
use crate::linalg::{self, Matrix, Scalar, Subspace, Vector};
use crate::maps::construct::centroid_hypotheses;
use crate::maps::laws::Context;
use crate::maps::{
    bilinear_defects, central_subspace, induced_biderivation, linear_from_coords, linear_to_coords,
    solve_bider_s, solve_cent, solve_com, special_subspace, BilinearMap, MapKind, MapSpace,
};
use crate::rep::{QuotientModule, Representation};

/// `L = L⁽⁰⁾, L⁽¹⁾ = L⁽⁰⁾/Z(L⁽⁰⁾), ...`; `steps[r]` maps level `r` onto
/// level `r + 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CenterSequence {
    pub levels: Vec<HomLieAlgebra>,
    pub steps: Vec<QuotientData>,
    /// The last level has zero center.
    pub terminated: bool,
}

/// `V = V⁽⁰⁾, V⁽ʳ⁺¹⁾ = V⁽ʳ⁾ / Z_{V⁽ʳ⁾}(L')`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModuleSequence {
    pub levels: Vec<Representation>,
    pub steps: Vec<QuotientModule>,
    /// The last level has `Z_V(L') = 0`.
    pub terminated: bool,
}

/// Iterates the quotient by the center until it vanishes or `max_levels`
/// quotients have been taken.
pub fn center_sequence(l: &HomLieAlgebra, max_levels: usize) -> Result<CenterSequence> {
    l.ensure_accepted()?;
    let mut levels = alloc::vec![l.clone()];
    let mut steps = Vec::new();
    loop {
        let current = levels.last().expect("sequence starts with L");
        let center = current.center();
        if center.is_zero() {
            return Ok(CenterSequence {
                levels,
                steps,
                terminated: true,
            });
        }
        if steps.len() == max_levels {
            return Ok(CenterSequence {
                levels,
                steps,
                terminated: false,
            });
        }
        if !current.alpha_surjective() {
            return Err(Error::Hypotheses(alloc::vec![Hypothesis::AlphaSurjective]));
        }
        let q = current.quotient(&center)?;
        levels.push(q.quotient.clone());
        steps.push(q);
    }
}

/// Iterates the quotient by `Z_V(L')` until it vanishes or `max_levels`
/// quotients have been taken.
pub fn com_sequence(module: &Representation, max_levels: usize) -> Result<ModuleSequence> {
    let l = module.algebra();
    l.ensure_accepted()?;
    module.ensure_accepted()?;
    if !l.alpha_surjective() {
        return Err(Error::Hypotheses(alloc::vec![Hypothesis::AlphaSurjective]));
    }
    let derived = l.derived();
    let mut levels = alloc::vec![module.clone()];
    let mut steps = Vec::new();
    loop {
        let current = levels.last().expect("sequence starts with V");
        let z = current.annihilated(&derived)?;
        if z.is_zero() {
            return Ok(ModuleSequence {
                levels,
                steps,
                terminated: true,
            });
        }
        if steps.len() == max_levels {
            return Ok(ModuleSequence {
                levels,
                steps,
                terminated: false,
            });
        }
        let q = current.quotient(&z)?;
        levels.push(q.module.clone());
        steps.push(q);
    }
}

fn pushdown_unchecked(delta: &BilinearMap, q: &QuotientData) -> BilinearMap {
    let m = q.quotient.dim();
    let lifts: Vec<Vector> = (0..m).map(|a| q.section.column(a)).collect();
    BilinearMap::skew_from_fn(m, m, |a, b| {
        q.projection.mul_vec(&delta.eval(&lifts[a], &lifts[b]))
    })
}

fn adjoint(l: &Arc<HomLieAlgebra>, k: i64) -> Result<Representation> {
    Representation::adjoint(l.clone(), k)
}

fn require_bider_s(module: &Representation, delta: &BilinearMap) -> Result<()> {
    if bilinear_defects(module, delta, MapKind::BiderS)?.is_empty() {
        Ok(())
    } else {
        Err(Error::NotInSpace("bider-s"))
    }
}

/// `δ̄(x̄, ȳ) = δ(x, y)‾` on `L / I`, for `δ ∈ Bider_s(L, ad_k)`.
pub fn pushdown_bider(
    l: &Arc<HomLieAlgebra>,
    k: i64,
    delta: &BilinearMap,
    q: &QuotientData,
) -> Result<BilinearMap> {
    if q.projection.cols() != l.dim() {
        return Err(Error::DimensionMismatch {
            expected: l.dim(),
            found: q.projection.cols(),
        });
    }
    require_bider_s(&adjoint(l, k)?, delta)?;
    let bar = pushdown_unchecked(delta, q);
    let target = adjoint(&Arc::new(q.quotient.clone()), k)?;
    if !bilinear_defects(&target, &bar, MapKind::BiderS)?.is_empty() {
        return Err(Error::Internal(
            "pushed-down biderivation fails the quotient laws".into(),
        ));
    }
    Ok(bar)
}

/// Solutions of `δ ∈ Bider_s(L, ad_k)` with `pushdown(δ) = δ̄`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Lift {
    /// Reduced modulo `kernel`; `None` when `δ̄` has no preimage.
    pub particular: Option<BilinearMap>,
    /// Biderivations pushing down to zero.
    pub kernel: MapSpace,
}

/// Preimages of `targets` under `image`, restricted to `laws(c) = 0`.
struct Preimage {
    /// All `c` whose image lies in the span of the targets.
    total: Subspace,
    /// `c` with zero image.
    kernel: Subspace,
    /// Coefficient vectors of the targets that are reached.
    reached: Subspace,
}

fn preimage(
    unknowns: usize,
    targets: &[Vector],
    mut laws: impl FnMut(&[Scalar]) -> Vector,
    mut image: impl FnMut(&[Scalar]) -> Vector,
) -> Result<Preimage> {
    let m = targets.len();
    let joint = linalg::kernel_of(unknowns + m, |x| {
        let (c, t) = x.split_at(unknowns);
        let mut residual = laws(c);
        let mut value = image(c);
        for (ti, target) in t.iter().zip(targets) {
            linalg::axpy(&mut value, &-ti.clone(), target);
        }
        residual.extend(value);
        residual
    });
    let total = Subspace::span(
        unknowns,
        joint.basis().iter().map(|v| v[..unknowns].to_vec()),
    )?;
    let reached = Subspace::span(m, joint.basis().iter().map(|v| v[unknowns..].to_vec()))?;
    let kernel = linalg::kernel_of(unknowns, |c| {
        let mut residual = laws(c);
        residual.extend(image(c));
        residual
    });
    Ok(Preimage {
        total,
        kernel,
        reached,
    })
}

fn bider_s_laws<'c>(ctx: &'c Context<'_>) -> impl FnMut(&[Scalar]) -> Vector + 'c {
    move |c| {
        let delta = BilinearMap::from_skew_coords(ctx.n, ctx.d, c);
        let mut residual = Vector::new();
        ctx.bilinear_laws(&delta, true, &mut |_, _, r| residual.extend(r));
        residual
    }
}

fn com_laws<'c>(ctx: &'c Context<'_>) -> impl FnMut(&[Scalar]) -> Vector + 'c {
    move |c| {
        let f = linear_from_coords(ctx.n, ctx.d, c);
        let mut residual = Vector::new();
        ctx.commuting_laws(&f, &mut |_, _, r| residual.extend(r));
        residual
    }
}

/// Solves for every lift of `δ̄ ∈ Bider_s(L/I, ad_k)` back to `L`.
pub fn lift_bider(
    l: &Arc<HomLieAlgebra>,
    k: i64,
    q: &QuotientData,
    bar: &BilinearMap,
) -> Result<Lift> {
    let module = adjoint(l, k)?;
    module.algebra().ensure_accepted()?;
    require_bider_s(&adjoint(&Arc::new(q.quotient.clone()), k)?, bar)?;
    let n = l.dim();
    let ctx = Context::new(&module);
    let solved = preimage(
        MapKind::BiderS.coordinate_count(n, n),
        &[bar.skew_coords()],
        bider_s_laws(&ctx),
        |c| pushdown_unchecked(&BilinearMap::from_skew_coords(n, n, c), q).skew_coords(),
    )?;
    let particular = if solved.reached.is_zero() {
        None
    } else {
        let lifted = linalg::kernel_of(MapKind::BiderS.coordinate_count(n, n) + 1, |x| {
            let (c, t) = x.split_at(x.len() - 1);
            let mut residual = bider_s_laws(&ctx)(c);
            let mut value =
                pushdown_unchecked(&BilinearMap::from_skew_coords(n, n, c), q).skew_coords();
            linalg::axpy(&mut value, &-t[0].clone(), &bar.skew_coords());
            residual.extend(value);
            residual
        });
        let v = lifted
            .basis()
            .iter()
            .find(|v| !v.last().expect("extra unknown").is_zero())
            .expect("reached target has a lift");
        let t = v.last().expect("extra unknown").clone();
        let c = linalg::scale_vector(&t.recip(), &v[..v.len() - 1]);
        Some(BilinearMap::from_skew_coords(
            n,
            n,
            &solved.kernel.reduce(&c)?,
        ))
    };
    Ok(Lift {
        particular,
        kernel: MapSpace::from_coords(MapKind::CBiderS, module, solved.kernel)?,
    })
}

fn restriction_hypotheses(l: &HomLieAlgebra) -> Vec<Hypothesis> {
    let mut failed = Vec::new();
    if !l.is_centerless() {
        failed.push(Hypothesis::Centerless);
    }
    if !l.alpha_invertible() {
        failed.push(Hypothesis::AlphaInvertible);
    }
    failed
}

/// Restriction of `δ ∈ Bider_s(L, ad_k)` to `L' × L'`, as a skew biderivation
/// of `(L', ad_k)` in the canonical basis of `L'`.
pub fn restrict_bider(
    l: &Arc<HomLieAlgebra>,
    k: i64,
    delta: &BilinearMap,
) -> Result<(HomLieAlgebra, BilinearMap)> {
    let failed = restriction_hypotheses(l);
    if !failed.is_empty() {
        return Err(Error::Hypotheses(failed));
    }
    require_bider_s(&adjoint(l, k)?, delta)?;
    let derived = l.derived();
    let (sub, _) = l.subalgebra(&derived)?;
    let basis = derived.basis();
    let m = basis.len();
    let mut values = Vec::with_capacity(m * m);
    for a in 0..m {
        for b in 0..m {
            let v = delta.eval(&basis[a], &basis[b]);
            values.push(derived.coordinates(&v)?.ok_or_else(|| {
                Error::Internal("biderivation leaves the derived subalgebra".into())
            })?);
        }
    }
    let restricted = BilinearMap::from_fn(m, m, |a, b| values[a * m + b].clone());
    let sub = Arc::new(sub);
    if !bilinear_defects(&adjoint(&sub, k)?, &restricted, MapKind::BiderS)?.is_empty() {
        return Err(Error::Internal(
            "restriction is not a skew biderivation of the derived subalgebra".into(),
        ));
    }
    Ok((Arc::unwrap_or_clone(sub), restricted))
}

/// `f̄ = π ∘ f` on the quotient module.
pub fn pushdown_com(f: &Matrix, q: &QuotientModule) -> Result<Matrix> {
    if f.rows() != q.projection.cols() {
        return Err(Error::DimensionMismatch {
            expected: q.projection.cols(),
            found: f.rows(),
        });
    }
    Ok(&q.projection * f)
}

/// One stage of a reduction.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Move {
    QuotientCenter,
    RestrictDerived,
    QuotientAnnihilator,
    /// `Bider_s` from the centroid, or `Com = Cent`.
    CentroidBase,
    /// Hypotheses of every move failed; solved directly at this level.
    Direct,
}

impl Move {
    pub fn name(self) -> &'static str {
        match self {
            Move::QuotientCenter => "quotient-center",
            Move::RestrictDerived => "restrict-derived",
            Move::QuotientAnnihilator => "quotient-annihilator",
            Move::CentroidBase => "centroid-base",
            Move::Direct => "direct",
        }
    }
}

impl fmt::Display for Move {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Stall {
    Hypotheses(Vec<Hypothesis>),
    LevelLimit,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TraceStep {
    pub level: usize,
    pub step: Move,
    pub algebra_dim: usize,
    pub module_dim: usize,
    /// Dimension of the next algebra or module; equal to the current one for
    /// terminal moves.
    pub reduced_dim: usize,
    /// Dimension of the space assembled at this level.
    pub space_dim: usize,
    pub kernel_dim: usize,
    pub lifted_dim: usize,
    /// The kernel equals `CBider_s`, `SBider_s` or `CCom + SCom` as
    /// appropriate; always true for terminal moves.
    pub kernel_matches: bool,
    pub stall: Option<Stall>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReductionReport {
    /// Ordered by level.
    pub trace: Vec<TraceStep>,
    pub space: MapSpace,
    pub direct: MapSpace,
    pub agrees_with_direct: bool,
}

impl ReductionReport {
    /// No level fell back to the direct solver.
    pub fn is_complete(&self) -> bool {
        self.trace.iter().all(|s| s.stall.is_none())
    }

    fn finish(mut trace: Vec<TraceStep>, space: MapSpace, direct: MapSpace) -> Self {
        trace.sort_by_key(|s| s.level);
        let agrees_with_direct = space == direct;
        Self {
            trace,
            space,
            direct,
            agrees_with_direct,
        }
    }
}

struct Run<'t> {
    k: i64,
    max_levels: usize,
    trace: &'t mut Vec<TraceStep>,
}

impl Run<'_> {
    fn terminal(
        &mut self,
        level: usize,
        step: Move,
        module: &Representation,
        space: MapSpace,
        stall: Option<Stall>,
    ) -> MapSpace {
        let n = module.algebra().dim();
        self.trace.push(TraceStep {
            level,
            step,
            algebra_dim: n,
            module_dim: module.dim(),
            reduced_dim: if module.dim() == n { n } else { module.dim() },
            space_dim: space.dim(),
            kernel_dim: 0,
            lifted_dim: space.dim(),
            kernel_matches: true,
            stall,
        });
        space
    }

    fn bider(&mut self, l: &Arc<HomLieAlgebra>, level: usize) -> Result<MapSpace> {
        let module = adjoint(l, self.k)?;
        let n = l.dim();
        let center = l.center();
        let stall = |failed: Vec<Hypothesis>| {
            if failed.is_empty() {
                Stall::LevelLimit
            } else {
                Stall::Hypotheses(failed)
            }
        };
        if !center.is_zero() {
            let mut failed = Vec::new();
            if !l.alpha_surjective() {
                failed.push(Hypothesis::AlphaSurjective);
            }
            if !failed.is_empty() || level >= self.max_levels {
                let direct = solve_bider_s(&module)?;
                return Ok(self.terminal(
                    level,
                    Move::Direct,
                    &module,
                    direct,
                    Some(stall(failed)),
                ));
            }
            let q = l.quotient(&center)?;
            let below = self.bider(&Arc::new(q.quotient.clone()), level + 1)?;
            let targets: Vec<Vector> = below
                .bilinear_basis()
                .iter()
                .map(|d| d.skew_coords())
                .collect();
            let ctx = Context::new(&module);
            let solved = preimage(
                MapKind::BiderS.coordinate_count(n, n),
                &targets,
                bider_s_laws(&ctx),
                |c| pushdown_unchecked(&BilinearMap::from_skew_coords(n, n, c), &q).skew_coords(),
            )?;
            let space = MapSpace::from_coords(MapKind::BiderS, module.clone(), solved.total)?;
            let kernel_matches = central_subspace(&space)?.coords() == &solved.kernel;
            self.trace.push(TraceStep {
                level,
                step: Move::QuotientCenter,
                algebra_dim: n,
                module_dim: n,
                reduced_dim: q.quotient.dim(),
                space_dim: space.dim(),
                kernel_dim: solved.kernel.dim(),
                lifted_dim: solved.reached.dim(),
                kernel_matches,
                stall: None,
            });
            return Ok(space);
        }
        if !l.is_perfect() {
            let failed = restriction_hypotheses(l);
            if !failed.is_empty() || level >= self.max_levels {
                let direct = solve_bider_s(&module)?;
                return Ok(self.terminal(
                    level,
                    Move::Direct,
                    &module,
                    direct,
                    Some(stall(failed)),
                ));
            }
            let derived = l.derived();
            let (sub, inclusion) = l.subalgebra(&derived)?;
            let m = sub.dim();
            let below = self.bider(&Arc::new(sub), level + 1)?;
            let basis = derived.basis().to_vec();
            let targets: Vec<Vector> = below
                .bilinear_basis()
                .iter()
                .map(|d| {
                    pairs(m)
                        .flat_map(|(a, b)| inclusion.mul_vec(d.value(a, b)))
                        .collect()
                })
                .collect();
            let ctx = Context::new(&module);
            let solved = preimage(
                MapKind::BiderS.coordinate_count(n, n),
                &targets,
                bider_s_laws(&ctx),
                |c| {
                    let delta = BilinearMap::from_skew_coords(n, n, c);
                    pairs(m)
                        .flat_map(|(a, b)| delta.eval(&basis[a], &basis[b]))
                        .collect()
                },
            )?;
            debug_assert_eq!(
                targets.first().map_or(pair_count(m) * n, Vec::len),
                pair_count(m) * n
            );
            let space = MapSpace::from_coords(MapKind::BiderS, module.clone(), solved.total)?;
            let kernel_matches = special_subspace(&space)?.coords() == &solved.kernel;
            self.trace.push(TraceStep {
                level,
                step: Move::RestrictDerived,
                algebra_dim: n,
                module_dim: n,
                reduced_dim: m,
                space_dim: space.dim(),
                kernel_dim: solved.kernel.dim(),
                lifted_dim: solved.reached.dim(),
                kernel_matches,
                stall: None,
            });
            return Ok(space);
        }
        let failed = centroid_hypotheses(&module);
        if !failed.is_empty() {
            let direct = solve_bider_s(&module)?;
            return Ok(self.terminal(level, Move::Direct, &module, direct, Some(stall(failed))));
        }
        let mut induced = Vec::new();
        for gamma in solve_cent(&module)?.linear_basis() {
            induced.push(induced_biderivation(&gamma, &module)?.skew_coords());
        }
        let coords = Subspace::span(MapKind::BiderS.coordinate_count(n, n), induced)?;
        let space = MapSpace::from_coords(MapKind::BiderS, module.clone(), coords)?;
        Ok(self.terminal(level, Move::CentroidBase, &module, space, None))
    }

    fn com(&mut self, module: &Representation, level: usize) -> Result<MapSpace> {
        let l = module.algebra();
        let (n, d) = (l.dim(), module.dim());
        let z = module.annihilated(&l.derived())?;
        let stall = |failed: Vec<Hypothesis>| {
            if failed.is_empty() {
                Stall::LevelLimit
            } else {
                Stall::Hypotheses(failed)
            }
        };
        if !z.is_zero() {
            let mut failed = Vec::new();
            if !l.alpha_surjective() {
                failed.push(Hypothesis::AlphaSurjective);
            }
            if !failed.is_empty() || level >= self.max_levels {
                let direct = solve_com(module)?;
                return Ok(self.terminal(level, Move::Direct, module, direct, Some(stall(failed))));
            }
            let q = module.quotient(&z)?;
            let below = self.com(&q.module, level + 1)?;
            let targets: Vec<Vector> = below.linear_basis().iter().map(linear_to_coords).collect();
            let ctx = Context::new(module);
            let solved = preimage(n * d, &targets, com_laws(&ctx), |c| {
                linear_to_coords(&(&q.projection * &linear_from_coords(n, d, c)))
            })?;
            let space = MapSpace::from_coords(MapKind::Com, module.clone(), solved.total)?;
            let expected = central_subspace(&space)?
                .coords()
                .sum(special_subspace(&space)?.coords())?;
            self.trace.push(TraceStep {
                level,
                step: Move::QuotientAnnihilator,
                algebra_dim: n,
                module_dim: d,
                reduced_dim: q.module.dim(),
                space_dim: space.dim(),
                kernel_dim: solved.kernel.dim(),
                lifted_dim: solved.reached.dim(),
                kernel_matches: expected == solved.kernel,
                stall: None,
            });
            return Ok(space);
        }
        let mut failed = Vec::new();
        if !l.alpha_surjective() {
            failed.push(Hypothesis::AlphaSurjective);
        }
        if !module.beta().is_invertible() {
            failed.push(Hypothesis::BetaInvertible);
        }
        if !failed.is_empty() {
            let direct = solve_com(module)?;
            return Ok(self.terminal(level, Move::Direct, module, direct, Some(stall(failed))));
        }
        let cent = solve_cent(module)?;
        let space = MapSpace::from_coords(MapKind::Com, module.clone(), cent.coords().clone())?;
        Ok(self.terminal(level, Move::CentroidBase, module, space, None))
    }
}

/// `Bider_s(L, ad_k)` by alternating quotients by the center and
/// restrictions to `L'`, ending in the centroid of a perfect centerless
/// algebra. A level whose hypotheses fail is solved directly and marked in
/// the trace.
pub fn reduce_bider_s(
    l: &Arc<HomLieAlgebra>,
    k: i64,
    max_levels: usize,
) -> Result<ReductionReport> {
    l.ensure_accepted()?;
    let direct = solve_bider_s(&adjoint(l, k)?)?;
    let mut trace = Vec::new();
    let space = Run {
        k,
        max_levels,
        trace: &mut trace,
    }
    .bider(l, 0)?;
    Ok(ReductionReport::finish(trace, space, direct))
}

/// `Com(L, V)` through the quotients by `Z_V(L')`, ending in `Cent(L, V)`
/// once `Z_V(L') = 0`.
pub fn reduce_com(module: &Representation, max_levels: usize) -> Result<ReductionReport> {
    let direct = solve_com(module)?;
    let mut trace = Vec::new();
    let space = Run {
        k: 0,
        max_levels,
        trace: &mut trace,
    }
    .com(module, 0)?;
    Ok(ReductionReport::finish(trace, space, direct))
}
