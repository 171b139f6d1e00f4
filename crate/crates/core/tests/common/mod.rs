#![allow(dead_code)]

use std::sync::Arc;

use homlie_core::catalog;
use homlie_core::linalg::{int, kernel_of, Scalar, Subspace, Vector};
use homlie_core::maps::{linear_from_coords, BilinearMap};
use homlie_core::{HomLieAlgebra, MapKind, Representation};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn arc(l: HomLieAlgebra) -> Arc<HomLieAlgebra> {
    Arc::new(l)
}

pub fn aff1_sample() -> HomLieAlgebra {
    catalog::aff1_center(int(1), int(2), int(3), int(5)).unwrap()
}

pub fn diagonal_aff1(lambda: i64, mu: i64) -> HomLieAlgebra {
    catalog::aff1_center(int(0), int(0), int(lambda), int(mu)).unwrap()
}

/// Every catalog instance named by the reduction and kernel-law checks.
pub fn catalog_set() -> Vec<(String, Arc<HomLieAlgebra>)> {
    let mut out = vec![
        (
            "heisenberg(1)".to_string(),
            catalog::heisenberg(int(1)).unwrap(),
        ),
        (
            "heisenberg(2)".to_string(),
            catalog::heisenberg(int(2)).unwrap(),
        ),
        ("aff1-center(1,2,3,5)".to_string(), aff1_sample()),
    ];
    for (lambda, mu) in [(3, 5), (3, 1), (3, 3), (1, 1)] {
        out.push((
            format!("aff1-center(0,0,{lambda},{mu})"),
            diagonal_aff1(lambda, mu),
        ));
    }
    out.push(("sl2".to_string(), catalog::sl2()));
    out.push(("sl2-involution".to_string(), catalog::sl2_involution()));
    for n in 1..=4 {
        out.push((format!("abelian({n})"), catalog::abelian(n).unwrap()));
    }
    out.into_iter().map(|(name, l)| (name, arc(l))).collect()
}

pub fn adjoint(l: &Arc<HomLieAlgebra>, k: i64) -> Representation {
    Representation::adjoint(l.clone(), k).unwrap()
}

pub fn random_vector(rng: &mut ChaCha8Rng, n: usize) -> Vector {
    (0..n).map(|_| int(rng.gen_range(-4..=4))).collect()
}

fn sub(a: &[Scalar], b: &[Scalar]) -> Vector {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

fn add(a: &[Scalar], b: &[Scalar]) -> Vector {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

/// `δ(x, y)` from full coordinates `(i * n + j) * d + a`, without going
/// through `BilinearMap`.
fn eval_full(c: &[Scalar], n: usize, d: usize, x: &[Scalar], y: &[Scalar]) -> Vector {
    let mut out = vec![int(0); d];
    for i in 0..n {
        for j in 0..n {
            let w = &x[i] * &y[j];
            for (a, slot) in out.iter_mut().enumerate() {
                *slot += &w * &c[(i * n + j) * d + a];
            }
        }
    }
    out
}

fn samples(unknowns: usize, d: usize) -> usize {
    2 * unknowns / d.max(1) + 8
}

/// Skew biderivations recomputed from the raw laws at seeded random
/// arguments: full coordinates with skew-symmetry, twist-equivariance and
/// both derivation laws imposed on sampled vectors only.
pub fn sampled_bider_s(module: &Representation, seed: u64) -> Subspace {
    let l = module.algebra();
    let (n, d) = (l.dim(), module.dim());
    let unknowns = n * n * d;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let tuples: Vec<[Vector; 3]> = (0..samples(unknowns, d))
        .map(|_| {
            [
                random_vector(&mut rng, n),
                random_vector(&mut rng, n),
                random_vector(&mut rng, n),
            ]
        })
        .collect();
    let alpha = l.alpha();
    let prepared: Vec<_> = tuples
        .iter()
        .map(|[x, y, z]| {
            let (ax, ay) = (alpha.mul_vec(x), alpha.mul_vec(y));
            let (rx, ry) = (module.action(&ax).unwrap(), module.action(&ay).unwrap());
            let az = alpha.mul_vec(z);
            (x, y, z, ax, ay, az, rx, ry, l.bracket(x, y).unwrap())
        })
        .collect();
    let full = kernel_of(unknowns, |c| {
        let delta = |x: &[Scalar], y: &[Scalar]| eval_full(c, n, d, x, y);
        let mut residual = Vec::new();
        for (x, y, z, ax, ay, az, rx, ry, xy) in &prepared {
            residual.extend(add(&delta(x, y), &delta(y, x)));
            residual.extend(sub(&module.beta().mul_vec(&delta(x, y)), &delta(ax, ay)));
            let left = sub(
                &delta(az, xy),
                &sub(&rx.mul_vec(&delta(z, y)), &ry.mul_vec(&delta(z, x))),
            );
            let right = sub(
                &delta(xy, az),
                &sub(&rx.mul_vec(&delta(y, z)), &ry.mul_vec(&delta(x, z))),
            );
            residual.extend(left);
            residual.extend(right);
        }
        residual
    });
    to_skew(&full, n, d)
}

fn to_skew(full: &Subspace, n: usize, d: usize) -> Subspace {
    let vectors = full
        .basis()
        .iter()
        .map(|c| BilinearMap::from_full_coords(n, d, c).skew_coords());
    Subspace::span(MapKind::BiderS.coordinate_count(n, d), vectors).unwrap()
}

/// Commuting maps from the unpolarized condition `ρ(α(v)) f(v) = 0` at
/// seeded random `v`, plus `βf = fα`.
pub fn sampled_com(module: &Representation, seed: u64) -> Subspace {
    let l = module.algebra();
    let (n, d) = (l.dim(), module.dim());
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let vs: Vec<Vector> = (0..samples(n * d, d) + n * n)
        .map(|_| random_vector(&mut rng, n))
        .collect();
    let actions: Vec<_> = vs
        .iter()
        .map(|v| module.action(&l.alpha().mul_vec(v)).unwrap())
        .collect();
    kernel_of(n * d, |c| {
        let f = linear_from_coords(n, d, c);
        let mut residual = (&(module.beta() * &f) - &(&f * l.alpha()))
            .entries()
            .to_vec();
        for (v, act) in vs.iter().zip(&actions) {
            residual.extend(act.mul_vec(&f.mul_vec(v)));
        }
        residual
    })
}

/// Centroid from `γ([x, y]) = ρ(α(x)) γ(y)` at seeded random `x, y`.
pub fn sampled_cent(module: &Representation, seed: u64) -> Subspace {
    let l = module.algebra();
    let (n, d) = (l.dim(), module.dim());
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let pairs: Vec<(Vector, Vector)> = (0..samples(n * d, d))
        .map(|_| (random_vector(&mut rng, n), random_vector(&mut rng, n)))
        .collect();
    kernel_of(n * d, |c| {
        let f = linear_from_coords(n, d, c);
        let mut residual = (&(module.beta() * &f) - &(&f * l.alpha()))
            .entries()
            .to_vec();
        for (x, y) in &pairs {
            let lhs = f.mul_vec(&l.bracket(x, y).unwrap());
            let rhs = module
                .action(&l.alpha().mul_vec(x))
                .unwrap()
                .mul_vec(&f.mul_vec(y));
            residual.extend(sub(&lhs, &rhs));
        }
        residual
    })
}

fn kernel_in_span(basis: &[Vector], images: &[Vector], ambient: usize) -> Subspace {
    let t = kernel_of(basis.len(), |c| {
        let width = images.first().map_or(0, Vec::len);
        let mut out = vec![int(0); width];
        for (ci, image) in c.iter().zip(images) {
            for (slot, x) in out.iter_mut().zip(image) {
                *slot += ci * x;
            }
        }
        out
    });
    let vectors = t.basis().iter().map(|c| {
        let mut out = vec![int(0); ambient];
        for (ci, b) in c.iter().zip(basis) {
            for (slot, x) in out.iter_mut().zip(b) {
                *slot += ci * x;
            }
        }
        out
    });
    Subspace::span(ambient, vectors).unwrap()
}

/// Kernel of the pushdown `Bider_s(L) -> Bider_s(L / Z(L))` and `CBider_s`.
pub fn bider_pushdown_kernel(l: &Arc<HomLieAlgebra>, k: i64) -> (Subspace, Subspace) {
    use homlie_core::maps::{central_subspace, solve_bider_s};
    use homlie_core::reduction::pushdown_bider;
    let space = solve_bider_s(&adjoint(l, k)).unwrap();
    let q = l.quotient(&l.center()).unwrap();
    let deltas = space.bilinear_basis();
    let images: Vec<Vector> = deltas
        .iter()
        .map(|d| pushdown_bider(l, k, d, &q).unwrap().skew_coords())
        .collect();
    let basis: Vec<Vector> = deltas.iter().map(BilinearMap::skew_coords).collect();
    let kernel = kernel_in_span(&basis, &images, space.coords().ambient_dim());
    (kernel, central_subspace(&space).unwrap().coords().clone())
}

/// Kernel of the restriction `Bider_s(L) -> Bider_s(L')` and `SBider_s`,
/// for centerless `L` with invertible `α`.
pub fn bider_restriction_kernel(l: &Arc<HomLieAlgebra>, k: i64) -> Option<(Subspace, Subspace)> {
    use homlie_core::maps::{solve_bider_s, special_subspace};
    use homlie_core::reduction::restrict_bider;
    if !(l.is_centerless() && l.alpha_invertible()) {
        return None;
    }
    let space = solve_bider_s(&adjoint(l, k)).unwrap();
    let deltas = space.bilinear_basis();
    let images: Vec<Vector> = deltas
        .iter()
        .map(|d| restrict_bider(l, k, d).unwrap().1.skew_coords())
        .collect();
    let basis: Vec<Vector> = deltas.iter().map(BilinearMap::skew_coords).collect();
    let kernel = kernel_in_span(&basis, &images, space.coords().ambient_dim());
    Some((kernel, special_subspace(&space).unwrap().coords().clone()))
}

/// Kernel of `Com(L, V) -> Com(L, V / Z_V(L'))` and `CCom + SCom`.
pub fn com_pushdown_kernel(module: &Representation) -> (Subspace, Subspace) {
    use homlie_core::maps::{central_subspace, linear_to_coords, solve_com, special_subspace};
    use homlie_core::reduction::pushdown_com;
    let space = solve_com(module).unwrap();
    let z = module.annihilated(&module.algebra().derived()).unwrap();
    let q = module.quotient(&z).unwrap();
    let fs = space.linear_basis();
    let images: Vec<Vector> = fs
        .iter()
        .map(|f| linear_to_coords(&pushdown_com(f, &q).unwrap()))
        .collect();
    let basis: Vec<Vector> = fs.iter().map(linear_to_coords).collect();
    let kernel = kernel_in_span(&basis, &images, space.coords().ambient_dim());
    let expected = central_subspace(&space)
        .unwrap()
        .coords()
        .sum(special_subspace(&space).unwrap().coords())
        .unwrap();
    (kernel, expected)
}
