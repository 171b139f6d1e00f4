use super::laws::{Context, Filter};
use super::{bilinear_defects, linear_from_coords, quadratic_commuting_failure, BilinearMap};
use super::{MapKind, MapSpace};
use crate::error::{Error, Result};
use crate::linalg::{self, Vector};
use crate::rep::Representation;

fn ensure_inputs(module: &Representation) -> Result<()> {
    module.algebra().ensure_accepted()?;
    module.ensure_accepted()
}

fn space(kind: MapKind, module: &Representation, coords: linalg::Subspace) -> MapSpace {
    MapSpace::from_coords(kind, module.clone(), coords).expect("solver coordinates match kind")
}

/// Skew-symmetric biderivations `L x L -> V`: skew maps satisfying `(3.1)`
/// and `(3.3)`.
pub fn solve_bider_s(module: &Representation) -> Result<MapSpace> {
    ensure_inputs(module)?;
    let ctx = Context::new(module);
    let (n, d) = (ctx.n, ctx.d);
    let coords = linalg::kernel_of(MapKind::BiderS.coordinate_count(n, d), |c| {
        let delta = BilinearMap::from_skew_coords(n, d, c);
        let mut residual = Vector::new();
        ctx.bilinear_laws(&delta, true, &mut |_, _, r| residual.extend(r));
        residual
    });
    let result = space(MapKind::BiderS, module, coords);
    if cfg!(debug_assertions) {
        for delta in result.bilinear_basis() {
            debug_assert!(
                bilinear_defects(module, &delta, MapKind::Bider)?.is_empty(),
                "skew biderivation violates the left derivation law"
            );
        }
    }
    Ok(result)
}

/// All biderivations, skew or not.
pub fn solve_bider(module: &Representation) -> Result<MapSpace> {
    ensure_inputs(module)?;
    let ctx = Context::new(module);
    let (n, d) = (ctx.n, ctx.d);
    let coords = linalg::kernel_of(MapKind::Bider.coordinate_count(n, d), |c| {
        let delta = BilinearMap::from_full_coords(n, d, c);
        let mut residual = Vector::new();
        ctx.bilinear_laws(&delta, false, &mut |_, _, r| residual.extend(r));
        residual
    });
    Ok(space(MapKind::Bider, module, coords))
}

/// `Cent(L, V)`.
pub fn solve_cent(module: &Representation) -> Result<MapSpace> {
    ensure_inputs(module)?;
    let ctx = Context::new(module);
    let (n, d) = (ctx.n, ctx.d);
    let coords = linalg::kernel_of(n * d, |c| {
        let f = linear_from_coords(n, d, c);
        let mut residual = Vector::new();
        ctx.centroid_laws(&f, &mut |_, _, r| residual.extend(r));
        residual
    });
    Ok(space(MapKind::Cent, module, coords))
}

/// `Com(L, V)`, via the polarized form of `α(x) f(x) = 0`.
pub fn solve_com(module: &Representation) -> Result<MapSpace> {
    ensure_inputs(module)?;
    let ctx = Context::new(module);
    let (n, d) = (ctx.n, ctx.d);
    let coords = linalg::kernel_of(n * d, |c| {
        let f = linear_from_coords(n, d, c);
        let mut residual = Vector::new();
        ctx.commuting_laws(&f, &mut |_, _, r| residual.extend(r));
        residual
    });
    let result = space(MapKind::Com, module, coords);
    if cfg!(debug_assertions) {
        for f in result.linear_basis() {
            debug_assert!(
                quadratic_commuting_failure(module, &f, 20, 0x5eed).is_none(),
                "commuting map fails the quadratic condition"
            );
        }
    }
    Ok(result)
}

fn filtered(space: &MapSpace, filter: Filter, kind: MapKind) -> Result<MapSpace> {
    let module = space.module();
    let (n, d) = (module.algebra().dim(), module.dim());
    let unknowns = space.coords().ambient_dim();
    let conditions = if space.kind().is_bilinear() {
        linalg::kernel_of(unknowns, |c| {
            let delta = BilinearMap::from_skew_coords(n, d, c);
            let mut residual = Vector::new();
            filter.bilinear(&delta, &mut |_, _, r| residual.extend(r));
            residual
        })
    } else {
        linalg::kernel_of(unknowns, |c| {
            let f = linear_from_coords(n, d, c);
            let mut residual = Vector::new();
            filter.linear(&f, &mut |_, _, r| residual.extend(r));
            residual
        })
    };
    MapSpace::from_coords(kind, module.clone(), space.coords().intersect(&conditions)?)
}

/// Members of a `bider-s` or `com` space whose values lie in `Z_V(L)`.
pub fn central_subspace(space: &MapSpace) -> Result<MapSpace> {
    let kind = match space.kind() {
        MapKind::BiderS => MapKind::CBiderS,
        MapKind::Com => MapKind::CCom,
        other => {
            return Err(Error::KindMismatch {
                expected: "bider-s or com",
                found: other.name(),
            })
        }
    };
    filtered(space, Filter::central(space.module()), kind)
}

/// Members of a `bider-s` or `com` space with values in `Z_V(L')` that
/// vanish on `L'`.
pub fn special_subspace(space: &MapSpace) -> Result<MapSpace> {
    let kind = match space.kind() {
        MapKind::BiderS => MapKind::SBiderS,
        MapKind::Com => MapKind::SCom,
        other => {
            return Err(Error::KindMismatch {
                expected: "bider-s or com",
                found: other.name(),
            })
        }
    };
    filtered(space, Filter::special(space.module()), kind)
}

/// Solves for any kind, applying the central/special filters after the base
/// solve.
pub fn solve(kind: MapKind, module: &Representation) -> Result<MapSpace> {
    match kind {
        MapKind::Bider => solve_bider(module),
        MapKind::BiderS => solve_bider_s(module),
        MapKind::Cent => solve_cent(module),
        MapKind::Com => solve_com(module),
        MapKind::CBiderS => central_subspace(&solve_bider_s(module)?),
        MapKind::SBiderS => special_subspace(&solve_bider_s(module)?),
        MapKind::CCom => central_subspace(&solve_com(module)?),
        MapKind::SCom => special_subspace(&solve_com(module)?),
    }
}

/// Skew part `(δ(x,y) - δ(y,x)) / 2` of every basis element.
#[cfg(test)]
pub(crate) fn skew_parts(space: &MapSpace) -> alloc::vec::Vec<BilinearMap> {
    let half = crate::linalg::ratio(1, 2);
    space
        .bilinear_basis()
        .iter()
        .map(|delta| {
            let n = delta.algebra_dim();
            BilinearMap::skew_from_fn(n, delta.module_dim(), |i, j| {
                linalg::scale_vector(
                    &half,
                    &linalg::sub_vectors(delta.value(i, j), delta.value(j, i)),
                )
            })
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;
    use crate::linalg::{int, Matrix};
    use crate::maps::{linear_defects, linear_to_coords};
    use crate::HomLieAlgebra;
    use alloc::sync::Arc;
    use alloc::vec;

    fn adjoint(l: HomLieAlgebra, k: i64) -> Representation {
        Representation::adjoint(Arc::new(l), k).unwrap()
    }

    fn e(n: usize, i: usize) -> Vector {
        linalg::unit_vector(n, i)
    }

    fn single_pair(n: usize, entries: &[(usize, usize, Vector)]) -> BilinearMap {
        BilinearMap::skew_from_fn(n, n, |i, j| {
            entries
                .iter()
                .find(|(a, b, _)| (*a, *b) == (i, j))
                .map_or_else(|| linalg::zero_vector(n), |(_, _, v)| v.clone())
        })
    }

    #[test]
    fn heisenberg_skew_biderivations() {
        let s = solve_bider_s(&adjoint(catalog::heisenberg(int(1)).unwrap(), 0)).unwrap();
        assert_eq!(s.dim(), 2);
        assert!(s
            .contains_bilinear(&single_pair(3, &[(0, 1, e(3, 2))]))
            .unwrap());
        assert!(s
            .contains_bilinear(&single_pair(3, &[(0, 1, e(3, 1)), (0, 2, e(3, 2))]))
            .unwrap());
        let s2 = solve_bider_s(&adjoint(catalog::heisenberg(int(2)).unwrap(), 0)).unwrap();
        assert_eq!(s2.dim(), 1);
        assert!(s2
            .contains_bilinear(&single_pair(3, &[(0, 1, e(3, 2))]))
            .unwrap());
    }

    #[test]
    fn aff1_skew_biderivations() {
        let a = catalog::aff1_center(int(1), int(2), int(3), int(5)).unwrap();
        for k in 0..3 {
            let s = solve_bider_s(&adjoint(a.clone(), k)).unwrap();
            assert_eq!(s.dim(), 2);
            assert!(s
                .contains_bilinear(&single_pair(3, &[(0, 1, e(3, 1))]))
                .unwrap());
            assert!(s
                .contains_bilinear(&single_pair(3, &[(0, 2, e(3, 2))]))
                .unwrap());
        }
    }

    #[test]
    fn abelian_spaces() {
        for n in 1..=3 {
            let m = adjoint(catalog::abelian(n).unwrap(), 0);
            assert_eq!(solve_bider_s(&m).unwrap().dim(), n * n * (n - 1) / 2);
            assert_eq!(solve_bider(&m).unwrap().dim(), n * n * n);
            assert_eq!(solve_com(&m).unwrap().dim(), n * n);
            assert_eq!(solve_cent(&m).unwrap().dim(), n * n);
        }
    }

    #[test]
    fn bider_contains_bider_s() {
        for l in [
            catalog::heisenberg(int(2)).unwrap(),
            catalog::aff1_center(int(1), int(2), int(3), int(5)).unwrap(),
            catalog::sl2_involution(),
        ] {
            let m = adjoint(l, 0);
            let full = solve_bider(&m).unwrap();
            let skew = solve_bider_s(&m).unwrap();
            assert!(full.dim() >= skew.dim());
            for delta in skew.bilinear_basis() {
                assert!(full.contains_bilinear(&delta).unwrap());
            }
            // Skew parts of full biderivations are skew biderivations.
            for delta in skew_parts(&full) {
                assert!(skew.contains_bilinear(&delta).unwrap());
            }
        }
    }

    #[test]
    fn sl2_centroids() {
        let m = adjoint(catalog::sl2(), 0);
        let c = solve_cent(&m).unwrap();
        assert_eq!(c.dim(), 1);
        assert!(c.contains_linear(&Matrix::identity(3)).unwrap());
        let inv = catalog::sl2_involution();
        for k in 0..3 {
            let c = solve_cent(&adjoint(inv.clone(), k)).unwrap();
            assert_eq!(c.dim(), 1);
            assert!(c.contains_linear(&inv.alpha_power(k + 1).unwrap()).unwrap());
        }
    }

    #[test]
    fn cent_inside_com_on_heisenberg() {
        let m = adjoint(catalog::heisenberg(int(2)).unwrap(), 0);
        let cent = solve_cent(&m).unwrap();
        let com = solve_com(&m).unwrap();
        assert!(cent.is_subspace_of(&com).unwrap());
        assert!(cent.linear_basis().iter().any(|g| g.get(2, 2) != &int(0)));
    }

    #[test]
    fn commuting_maps_of_diagonal_aff1() {
        // Coordinates i * 3 + a; f(x) = a1 x + a3 z, f(y) = λ a1 y + b3 z,
        // f(z) = c z with a3 (μ - 1) = b3 (λ - μ) = 0.
        for ((lambda, mu), dim) in [((3, 5), 2), ((3, 1), 3), ((3, 3), 3), ((1, 1), 4)] {
            let a = catalog::aff1_center(int(0), int(0), int(lambda), int(mu)).unwrap();
            let com = solve_com(&adjoint(a, 0)).unwrap();
            assert_eq!(com.dim(), dim, "(λ, μ) = ({lambda}, {mu})");
        }
        let a = catalog::aff1_center(int(0), int(0), int(3), int(5)).unwrap();
        let com = solve_com(&adjoint(a, 0)).unwrap();
        let f = Matrix::from_i64(3, 3, &[1, 0, 0, 0, 3, 0, 0, 0, 0]);
        assert!(com.contains_linear(&f).unwrap());
        let g = Matrix::from_i64(3, 3, &[0, 0, 0, 0, 0, 0, 0, 0, 1]);
        assert!(com.contains_linear(&g).unwrap());
    }

    #[test]
    fn central_and_special_examples() {
        let heis = adjoint(catalog::heisenberg(int(2)).unwrap(), 0);
        let c = central_subspace(&solve_bider_s(&heis).unwrap()).unwrap();
        assert_eq!(c.kind(), MapKind::CBiderS);
        assert_eq!(c.dim(), 1);
        assert!(c
            .contains_bilinear(&single_pair(3, &[(0, 1, e(3, 2))]))
            .unwrap());

        let a = adjoint(
            catalog::aff1_center(int(1), int(2), int(3), int(5)).unwrap(),
            0,
        );
        let c = central_subspace(&solve_bider_s(&a).unwrap()).unwrap();
        assert_eq!(c.dim(), 1);
        assert!(c
            .contains_bilinear(&single_pair(3, &[(0, 2, e(3, 2))]))
            .unwrap());

        let sl2 = adjoint(catalog::sl2(), 0);
        assert_eq!(
            central_subspace(&solve_com(&sl2).unwrap()).unwrap().dim(),
            0
        );
        assert!(central_subspace(&solve_cent(&sl2).unwrap()).is_err());
    }

    #[test]
    fn special_on_aff1_quotient() {
        let a = catalog::aff1_center(int(1), int(2), int(3), int(5)).unwrap();
        let q = a.quotient(&a.center()).unwrap().quotient;
        for k in 0..3 {
            let s = special_subspace(&solve_bider_s(&adjoint(q.clone(), k)).unwrap()).unwrap();
            assert_eq!(s.dim(), 1);
            assert!(s
                .contains_bilinear(&single_pair(2, &[(0, 1, e(2, 1))]))
                .unwrap());
        }
    }

    #[test]
    fn special_commuting_on_diagonal_aff1() {
        // Values in span{y, z}, vanishing on y, polarized constraints force
        // the x-coefficient into z only when μ = 1.
        let a = catalog::aff1_center(int(0), int(0), int(3), int(5)).unwrap();
        let m = adjoint(a, 0);
        let s = special_subspace(&solve_com(&m).unwrap()).unwrap();
        assert_eq!(s.dim(), 1);
        for f in s.linear_basis() {
            assert!(f.column(0).iter().all(|x| x == &int(0)));
            assert!(f.column(1).iter().all(|x| x == &int(0)));
        }
        let a1 = catalog::aff1_center(int(0), int(0), int(3), int(1)).unwrap();
        let s1 = special_subspace(&solve_com(&adjoint(a1, 0)).unwrap()).unwrap();
        assert_eq!(s1.dim(), 2);
    }

    #[test]
    fn containments() {
        for l in [
            catalog::heisenberg(int(1)).unwrap(),
            catalog::heisenberg(int(2)).unwrap(),
            catalog::aff1_center(int(1), int(2), int(3), int(5)).unwrap(),
            catalog::aff1_center(int(0), int(0), int(1), int(1)).unwrap(),
            catalog::sl2(),
            catalog::abelian(3).unwrap(),
        ] {
            let m = adjoint(l, 0);
            let bs = solve_bider_s(&m).unwrap();
            let cb = central_subspace(&bs).unwrap();
            let sb = special_subspace(&bs).unwrap();
            assert!(cb.is_subspace_of(&sb).unwrap());
            assert!(sb.is_subspace_of(&bs).unwrap());
            let com = solve_com(&m).unwrap();
            assert!(solve_cent(&m).unwrap().is_subspace_of(&com).unwrap());
            assert!(central_subspace(&com)
                .unwrap()
                .is_subspace_of(&com)
                .unwrap());
            assert!(special_subspace(&com)
                .unwrap()
                .is_subspace_of(&com)
                .unwrap());
        }
    }

    #[test]
    fn basis_elements_have_no_defects() {
        let m = adjoint(
            catalog::aff1_center(int(1), int(2), int(3), int(5)).unwrap(),
            1,
        );
        for kind in MapKind::ALL {
            let s = solve(kind, &m).unwrap();
            for delta in s.bilinear_basis() {
                assert_eq!(bilinear_defects(&m, &delta, kind).unwrap(), vec![]);
            }
            for f in s.linear_basis() {
                assert_eq!(linear_defects(&m, &f, kind).unwrap(), vec![]);
                assert_eq!(linear_to_coords(&f).len(), 9);
            }
        }
    }

    #[test]
    fn rejected_algebra_is_refused() {
        let alpha = Matrix::from_i64(3, 3, &[2, 0, 0, 1, 2, 0, 0, 0, 4]);
        let l = HomLieAlgebra::new(
            HomLieAlgebra::default_names(3),
            [(0, 1, vec![int(1), int(0), int(1)])],
            alpha,
        )
        .unwrap();
        let m = adjoint(l, 0);
        assert!(matches!(solve_bider_s(&m), Err(Error::AlgebraRejected(_))));
    }
}
