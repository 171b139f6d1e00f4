use alloc::format;
use alloc::vec::Vec;

use super::{bilinear_defects, linear_defects, solve_bider_s, solve_cent, solve_com};
use super::{BilinearMap, Defect, MapKind};
use crate::algebra::{pair_count, pairs, HomLieAlgebra};
use crate::error::{Error, Hypothesis, Result};
use crate::linalg::{self, Matrix, Subspace, Vector};
use crate::rep::Representation;

fn beta_inverse(module: &Representation) -> Result<Matrix> {
    module.beta().inverse().ok_or(Error::SingularBeta)
}

/// `δ(x, y) = β⁻¹ γ([x, y])` for a centroid element `γ`.
pub fn induced_biderivation(gamma: &Matrix, module: &Representation) -> Result<BilinearMap> {
    let beta_inv = beta_inverse(module)?;
    if !linear_defects(module, gamma, MapKind::Cent)?.is_empty() {
        return Err(Error::NotInSpace("cent"));
    }
    let l = module.algebra();
    let n = l.dim();
    let delta = BilinearMap::skew_from_fn(n, module.dim(), |i, j| {
        beta_inv.mul_vec(&gamma.mul_vec(&l.basis_bracket(i, j)))
    });
    if !bilinear_defects(module, &delta, MapKind::BiderS)?.is_empty() {
        return Err(Error::Internal(
            "map induced by a centroid element is not a skew biderivation".into(),
        ));
    }
    Ok(delta)
}

/// The unmet hypotheses for writing every skew biderivation through a
/// centroid element.
pub(crate) fn centroid_hypotheses(module: &Representation) -> Vec<Hypothesis> {
    let l = module.algebra();
    let mut failed = Vec::new();
    if !l.is_perfect() {
        failed.push(Hypothesis::Perfect);
    }
    if !l.alpha_surjective() {
        failed.push(Hypothesis::AlphaSurjective);
    }
    if !module.beta().is_invertible() {
        failed.push(Hypothesis::BetaInvertible);
    }
    let faithful = module
        .annihilated(&Subspace::full(l.dim()))
        .expect("full subspace of L")
        .is_zero();
    if !faithful {
        failed.push(Hypothesis::FaithfulOnAlgebra);
    }
    failed
}

/// Builds `γ` with `γ(Σ [u_p, w_p]) = Σ β δ(u_p, w_p)` on a perfect algebra
/// and checks that `γ` is a centroid element inducing `δ`.
pub fn centroid_from_biderivation(delta: &BilinearMap, module: &Representation) -> Result<Matrix> {
    let failed = centroid_hypotheses(module);
    if !failed.is_empty() {
        return Err(Error::Hypotheses(failed));
    }
    if !bilinear_defects(module, delta, MapKind::BiderS)?.is_empty() {
        return Err(Error::NotInSpace("bider-s"));
    }
    let l = module.algebra();
    let n = l.dim();
    let bracket_columns: Vec<Vector> = pairs(n).map(|(i, j)| l.basis_bracket(i, j)).collect();
    let brackets = Matrix::from_columns(n, &bracket_columns)?;
    let images: Vec<Vector> = pairs(n)
        .map(|(i, j)| module.beta().mul_vec(delta.value(i, j)))
        .collect();
    let mut columns = Vec::with_capacity(n);
    for k in 0..n {
        let c = linalg::solve(&brackets, &linalg::unit_vector(n, k))?
            .ok_or_else(|| Error::Internal(format!("basis vector {k} is not a sum of brackets")))?;
        let mut value = linalg::zero_vector(module.dim());
        for (p, coefficient) in c.iter().enumerate().take(pair_count(n)) {
            linalg::axpy(&mut value, coefficient, &images[p]);
        }
        columns.push(value);
    }
    let gamma = Matrix::from_columns(module.dim(), &columns)?;
    if !linear_defects(module, &gamma, MapKind::Cent)?.is_empty() {
        return Err(Error::Internal(
            "constructed map is not a centroid element".into(),
        ));
    }
    let beta_inv = beta_inverse(module)?;
    for (i, j) in pairs(n) {
        let induced = beta_inv.mul_vec(&gamma.mul_vec(&l.basis_bracket(i, j)));
        if &induced != delta.value(i, j) {
            return Err(Error::Internal(format!(
                "constructed centroid element does not induce the biderivation at ({i}, {j})"
            )));
        }
    }
    Ok(gamma)
}

/// `δ(x, y) = β⁻¹(α(x) f(y))` for a commuting map `f`.
pub fn commuting_biderivation(f: &Matrix, module: &Representation) -> Result<BilinearMap> {
    let beta_inv = beta_inverse(module)?;
    let twisted = module.twisted_actions();
    let n = module.algebra().dim();
    Ok(BilinearMap::from_fn(n, module.dim(), |i, j| {
        beta_inv.mul_vec(&twisted[i].mul_vec(&f.column(j)))
    }))
}

/// Whether every skew biderivation of `module` is `β⁻¹ γ([-, -])` for some
/// centroid element `γ`.
pub(crate) fn biderivations_centroid_induced(module: &Representation) -> Result<bool> {
    let bider = solve_bider_s(module)?;
    let cent = solve_cent(module)?;
    let induced: Vec<Vector> = cent
        .linear_basis()
        .iter()
        .map(|g| induced_biderivation(g, module).map(|d| d.skew_coords()))
        .collect::<Result<_>>()?;
    let image = Subspace::span(bider.coords().ambient_dim(), induced)?;
    bider.coords().is_subspace_of(&image)
}

/// Splits a commuting map of `ad_k` as `f = γ + μ` with `γ` a centroid
/// element satisfying `γ([x, y]) = [α^{k+1}(x), f(y)]` and `μ` central.
pub fn decompose_commuting(
    f: &Matrix,
    algebra: &alloc::sync::Arc<HomLieAlgebra>,
    k: i64,
) -> Result<(Matrix, Matrix)> {
    if !algebra.alpha_invertible() {
        return Err(Error::Hypotheses(alloc::vec![Hypothesis::AlphaInvertible]));
    }
    let module = Representation::adjoint(algebra.clone(), k)?;
    let com = solve_com(&module)?;
    if !com.contains_linear(f)? {
        return Err(Error::NotInSpace("com"));
    }
    if !biderivations_centroid_induced(&module)? {
        return Err(Error::Hypotheses(alloc::vec![
            Hypothesis::BiderivationsCentroidInduced
        ]));
    }
    let n = algebra.dim();
    let ak1 = algebra.alpha_power(k + 1)?;
    let cent = solve_cent(&module)?;
    // Unknown γ in the centroid's own coordinates: γ = Σ c_b basis_b.
    let cent_basis = cent.linear_basis();
    let mut targets = Vector::new();
    for i in 0..n {
        let x = ak1.column(i);
        for j in 0..n {
            targets.extend(algebra.bracket_unchecked(&x, &f.column(j)));
        }
    }
    let system = linalg::matrix_of(cent_basis.len(), |c| {
        let mut g = Matrix::zeros(n, n);
        for (coefficient, b) in c.iter().zip(&cent_basis) {
            g = &g + &b.scale(coefficient);
        }
        let mut out = Vector::new();
        for i in 0..n {
            for j in 0..n {
                out.extend(g.mul_vec(&algebra.basis_bracket(i, j)));
            }
        }
        out
    });
    let c = if cent_basis.is_empty() {
        if !linalg::is_zero_vector(&targets) {
            return Err(Error::Internal(
                "no centroid element matches a nonzero commuting map".into(),
            ));
        }
        Vector::new()
    } else {
        linalg::solve(&system, &targets)?
            .ok_or_else(|| Error::Internal("commuting map has no centroid part".into()))?
    };
    let mut gamma = Matrix::zeros(n, n);
    for (coefficient, b) in c.iter().zip(&cent_basis) {
        gamma = &gamma + &b.scale(coefficient);
    }
    let mu = f - &gamma;
    if !linear_defects(&module, &mu, MapKind::CCom)?.is_empty() {
        return Err(Error::Internal(
            "remainder of a commuting map is not central".into(),
        ));
    }
    Ok((gamma, mu))
}

/// Result of [`special_from_form`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FormOutcome {
    Member(BilinearMap),
    NotMember {
        delta: BilinearMap,
        failures: Vec<Defect>,
    },
}

/// `δ(x, y) = ω(x, y) z0` for a skew form `ω` vanishing on `L'` and a
/// central `z0`, checked against the skew biderivations of `ad_k`.
pub fn special_from_form(
    algebra: &alloc::sync::Arc<HomLieAlgebra>,
    omega: &Matrix,
    z0: &[crate::Scalar],
    k: i64,
) -> Result<FormOutcome> {
    let n = algebra.dim();
    let center = algebra.center();
    let derived = algebra.derived();
    let mut failed = Vec::new();
    if center.is_zero() {
        failed.push(Hypothesis::NonzeroCenter);
    }
    if n - derived.dim() < 2 {
        failed.push(Hypothesis::DerivedCodimAtLeastTwo);
    }
    if !failed.is_empty() {
        return Err(Error::Hypotheses(failed));
    }
    if omega.rows() != n || omega.cols() != n {
        return Err(Error::DimensionMismatch {
            expected: n,
            found: omega.rows(),
        });
    }
    if omega.is_zero() {
        return Err(Error::InvalidParameter("form must be nonzero".into()));
    }
    if omega != &-&omega.transpose() {
        return Err(Error::InvalidParameter("form must be skew".into()));
    }
    for u in derived.basis() {
        if !linalg::is_zero_vector(&omega.transpose().mul_vec(u)) {
            return Err(Error::InvalidParameter(
                "form must vanish on the derived subalgebra".into(),
            ));
        }
    }
    if z0.len() != n {
        return Err(Error::DimensionMismatch {
            expected: n,
            found: z0.len(),
        });
    }
    if linalg::is_zero_vector(z0) || !center.contains(z0)? {
        return Err(Error::InvalidParameter(
            "z0 must be a nonzero central element".into(),
        ));
    }
    let module = Representation::adjoint(algebra.clone(), k)?;
    let delta = BilinearMap::skew_from_fn(n, n, |i, j| linalg::scale_vector(omega.get(i, j), z0));
    let failures = bilinear_defects(&module, &delta, MapKind::BiderS)?;
    Ok(if failures.is_empty() {
        FormOutcome::Member(delta)
    } else {
        FormOutcome::NotMember { delta, failures }
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;
    use crate::linalg::{int, ratio};
    use crate::maps::{central_subspace, Law};
    use alloc::sync::Arc;

    fn adjoint(l: &Arc<HomLieAlgebra>, k: i64) -> Representation {
        Representation::adjoint(l.clone(), k).unwrap()
    }

    fn bracket_map(l: &HomLieAlgebra, twist: &Matrix) -> BilinearMap {
        BilinearMap::skew_from_fn(l.dim(), l.dim(), |i, j| {
            twist.mul_vec(&l.basis_bracket(i, j))
        })
    }

    #[test]
    fn identity_centroid_induces_bracket() {
        let sl2 = Arc::new(catalog::sl2());
        let m = adjoint(&sl2, 0);
        let delta = induced_biderivation(&Matrix::identity(3), &m).unwrap();
        assert_eq!(delta, bracket_map(&sl2, &Matrix::identity(3)));
        let zero = induced_biderivation(&Matrix::zeros(3, 3), &m).unwrap();
        assert!(zero.is_zero());
    }

    #[test]
    fn involution_centroid_induces_bracket() {
        let inv = Arc::new(catalog::sl2_involution());
        let m = adjoint(&inv, 0);
        let delta = induced_biderivation(inv.alpha(), &m).unwrap();
        assert_eq!(delta, bracket_map(&inv, &Matrix::identity(3)));
    }

    #[test]
    fn induced_needs_centroid_and_invertible_beta() {
        let sl2 = Arc::new(catalog::sl2());
        let mut not_cent = Matrix::identity(3);
        not_cent.set(0, 1, int(1));
        assert_eq!(
            induced_biderivation(&not_cent, &adjoint(&sl2, 0)).unwrap_err(),
            Error::NotInSpace("cent")
        );
        let alpha = Matrix::from_i64(2, 2, &[1, 0, 0, 0]);
        let l = Arc::new(HomLieAlgebra::new(HomLieAlgebra::default_names(2), [], alpha).unwrap());
        assert_eq!(
            induced_biderivation(&Matrix::zeros(2, 2), &adjoint(&l, 0)).unwrap_err(),
            Error::SingularBeta
        );
    }

    #[test]
    fn centroid_from_bracket() {
        let sl2 = Arc::new(catalog::sl2());
        let gamma =
            centroid_from_biderivation(&bracket_map(&sl2, &Matrix::identity(3)), &adjoint(&sl2, 0))
                .unwrap();
        assert_eq!(gamma, Matrix::identity(3));
        let inv = Arc::new(catalog::sl2_involution());
        for k in 0..3 {
            let delta = bracket_map(&inv, &inv.alpha_power(k).unwrap());
            let gamma = centroid_from_biderivation(&delta, &adjoint(&inv, k)).unwrap();
            assert_eq!(gamma, inv.alpha_power(k + 1).unwrap());
        }
    }

    #[test]
    fn centroid_from_biderivation_needs_perfect() {
        let heis = Arc::new(catalog::heisenberg(int(1)).unwrap());
        let delta = BilinearMap::zero(3, 3);
        match centroid_from_biderivation(&delta, &adjoint(&heis, 0)).unwrap_err() {
            Error::Hypotheses(hs) => {
                assert!(hs.contains(&Hypothesis::Perfect));
                assert!(hs.contains(&Hypothesis::FaithfulOnAlgebra));
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn commuting_decompositions() {
        let sl2 = Arc::new(catalog::sl2());
        let (g, mu) = decompose_commuting(&Matrix::identity(3), &sl2, 0).unwrap();
        assert_eq!(g, Matrix::identity(3));
        assert!(mu.is_zero());
        let inv = Arc::new(catalog::sl2_involution());
        for k in 0..3 {
            let f = inv.alpha_power(k + 1).unwrap().scale(&ratio(-3, 2));
            let (g, mu) = decompose_commuting(&f, &inv, k).unwrap();
            assert_eq!(g, f);
            assert!(mu.is_zero());
        }
    }

    #[test]
    fn commuting_decomposition_with_center() {
        // α itself is a centroid element of ad_0, so the one skew
        // biderivation δ(e1, e2) = e3 is induced and the split exists.
        let heis = Arc::new(catalog::heisenberg(int(2)).unwrap());
        let module = adjoint(&heis, 0);
        let com = solve_com(&module).unwrap();
        let ccom = central_subspace(&com).unwrap();
        for f in com.linear_basis() {
            let (g, mu) = decompose_commuting(&f, &heis, 0).unwrap();
            assert_eq!(&g + &mu, f);
            assert!(solve_cent(&module).unwrap().contains_linear(&g).unwrap());
            assert!(ccom.contains_linear(&mu).unwrap());
        }
    }

    #[test]
    fn commuting_biderivation_is_skew_biderivation() {
        let inv = Arc::new(catalog::sl2_involution());
        let m = adjoint(&inv, 1);
        for f in solve_com(&m).unwrap().linear_basis() {
            let delta = commuting_biderivation(&f, &m).unwrap();
            assert!(bilinear_defects(&m, &delta, MapKind::BiderS)
                .unwrap()
                .is_empty());
        }
    }

    fn heisenberg_form() -> Matrix {
        Matrix::from_i64(3, 3, &[0, 1, 0, -1, 0, 0, 0, 0, 0])
    }

    #[test]
    fn form_biderivations_on_heisenberg() {
        for lambda in [1, 2] {
            let heis = Arc::new(catalog::heisenberg(int(lambda)).unwrap());
            let z0 = linalg::unit_vector(3, 2);
            match special_from_form(&heis, &heisenberg_form(), &z0, 0).unwrap() {
                FormOutcome::Member(delta) => {
                    assert_eq!(delta.value(0, 1), &z0);
                    let space = solve_bider_s(&adjoint(&heis, 0)).unwrap();
                    assert!(space.contains_bilinear(&delta).unwrap());
                }
                other => panic!("λ = {lambda}: {other:?}"),
            }
        }
    }

    #[test]
    fn form_twist_mismatch_is_reported() {
        // ω(e1, e2) = 1 with z0 = e3 on the abelian algebra with α = diag(1, 1, 2):
        // β δ(e1, e2) = 2 e3 but δ(α e1, α e2) = e3.
        let alpha = Matrix::from_i64(3, 3, &[1, 0, 0, 0, 1, 0, 0, 0, 2]);
        let l = Arc::new(HomLieAlgebra::new(HomLieAlgebra::default_names(3), [], alpha).unwrap());
        let z0 = linalg::unit_vector(3, 2);
        match special_from_form(&l, &heisenberg_form(), &z0, 0).unwrap() {
            FormOutcome::NotMember { failures, .. } => {
                assert_eq!(failures[0].law, Law::TwistEquivariance);
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn form_preconditions() {
        let heis = Arc::new(catalog::heisenberg(int(1)).unwrap());
        let z0 = linalg::unit_vector(3, 2);
        assert!(matches!(
            special_from_form(&heis, &Matrix::zeros(3, 3), &z0, 0),
            Err(Error::InvalidParameter(_))
        ));
        assert!(matches!(
            special_from_form(&heis, &heisenberg_form(), &linalg::unit_vector(3, 0), 0),
            Err(Error::InvalidParameter(_))
        ));
        let sl2 = Arc::new(catalog::sl2());
        assert_eq!(
            special_from_form(&sl2, &heisenberg_form(), &z0, 0).unwrap_err(),
            Error::Hypotheses(alloc::vec![
                Hypothesis::NonzeroCenter,
                Hypothesis::DerivedCodimAtLeastTwo
            ])
        );
    }
}
