use alloc::collections::BTreeMap;
use core::fmt;

use num_traits::{One, Signed, Zero};

use super::LaurentPoly;
use crate::error::{Error, Result};
use crate::linalg::{int, Scalar};

/// Basis of `sl2`, ordered as in [`super::sl2`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Sl2Basis {
    E,
    F,
    H,
}

impl Sl2Basis {
    pub const ALL: [Sl2Basis; 3] = [Sl2Basis::E, Sl2Basis::F, Sl2Basis::H];

    fn symbol(self) -> &'static str {
        match self {
            Sl2Basis::E => "e",
            Sl2Basis::F => "f",
            Sl2Basis::H => "h",
        }
    }

    /// Eigenvalue of the involution `e ↦ -e, f ↦ -f, h ↦ h`.
    fn involution_sign(self) -> i64 {
        match self {
            Sl2Basis::H => 1,
            _ => -1,
        }
    }

    /// `[a, b]` as a coefficient and basis element, or `None` when zero.
    fn bracket(a: Sl2Basis, b: Sl2Basis) -> Option<(i64, Sl2Basis)> {
        use Sl2Basis::*;
        match (a, b) {
            (E, F) => Some((1, H)),
            (F, E) => Some((-1, H)),
            (H, E) => Some((2, E)),
            (E, H) => Some((-2, E)),
            (H, F) => Some((-2, F)),
            (F, H) => Some((2, F)),
            _ => None,
        }
    }
}

/// Finite sum of terms `c · b ⊗ t^m` in `sl2 ⊗ F[t, t⁻¹]`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct LoopElement {
    terms: BTreeMap<(Sl2Basis, i64), Scalar>,
}

impl LoopElement {
    pub fn zero() -> Self {
        Self::default()
    }

    /// `b ⊗ t^m`.
    pub fn basis(b: Sl2Basis, m: i64) -> Self {
        let mut x = Self::zero();
        x.add_term(b, m, Scalar::one());
        x
    }

    /// `b ⊗ p(t)`.
    pub fn tensor(b: Sl2Basis, p: &LaurentPoly) -> Self {
        let mut x = Self::zero();
        for (m, c) in p.terms() {
            x.add_term(b, m, c.clone());
        }
        x
    }

    pub fn add_term(&mut self, b: Sl2Basis, m: i64, c: Scalar) {
        let entry = self.terms.entry((b, m)).or_insert_with(Scalar::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&(b, m));
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (Sl2Basis, i64, &Scalar)> {
        self.terms.iter().map(|(&(b, m), c)| (b, m, c))
    }

    pub fn sub(&self, other: &LoopElement) -> LoopElement {
        let mut out = self.clone();
        for (b, m, c) in other.terms() {
            out.add_term(b, m, -c);
        }
        out
    }

    /// `(α̌^p ⊗ id)(self)`.
    pub fn twist(&self, p: u32) -> LoopElement {
        let mut out = LoopElement::zero();
        for (b, m, c) in self.terms() {
            let sign = b.involution_sign().pow(p);
            out.add_term(b, m, c * int(sign));
        }
        out
    }

    /// Largest `|m|` in the support.
    pub fn max_abs_degree(&self) -> u32 {
        self.terms
            .keys()
            .map(|(_, m)| m.unsigned_abs() as u32)
            .max()
            .unwrap_or(0)
    }
}

impl fmt::Display for LoopElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (k, (b, m, c)) in self.terms().enumerate() {
            let magnitude = c.abs();
            match (k, c.is_negative()) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            if !magnitude.is_one() {
                write!(f, "{magnitude}·")?;
            }
            write!(f, "{}⊗t^{m}", b.symbol())?;
        }
        Ok(())
    }
}

/// `[x ⊗ t^m, y ⊗ t^n] = [x, y] ⊗ t^{m+n}`, extended bilinearly.
pub fn loop_bracket(u: &LoopElement, v: &LoopElement) -> LoopElement {
    let mut out = LoopElement::zero();
    for (a, m, c) in u.terms() {
        for (b, n, d) in v.terms() {
            if let Some((k, basis)) = Sl2Basis::bracket(a, b) {
                out.add_term(basis, m + n, c * d * int(k));
            }
        }
    }
    out
}

/// The first equation that failed in the window.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LoopFailure {
    /// `γ([u, v]) ≠ [α^{k+1}(u), γ(v)]`
    Bracket {
        u: LoopElement,
        v: LoopElement,
        residual: LoopElement,
    },
    /// `γ(α(u)) ≠ α(γ(u))`
    Twist {
        u: LoopElement,
        residual: LoopElement,
    },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LoopVerdict {
    Confirmed { equations: usize },
    Rejected(LoopFailure),
}

impl LoopVerdict {
    pub fn is_confirmed(&self) -> bool {
        matches!(self, LoopVerdict::Confirmed { .. })
    }
}

/// Checks that `γ(b ⊗ t^n) = α̌^{k+1}(b) ⊗ Φ(t) t^n` is a centroid element of
/// `ad_k` on every equation whose terms stay within degree `window`.
pub fn verify_loop_centroid(k: u32, phi: &LaurentPoly, window: u32) -> Result<LoopVerdict> {
    verify_loop_centroid_with_twist(k, k + 1, phi, window)
}

/// As [`verify_loop_centroid`] with `γ` built from `α̌^power` instead of
/// `α̌^{k+1}`.
pub fn verify_loop_centroid_with_twist(
    k: u32,
    power: u32,
    phi: &LaurentPoly,
    window: u32,
) -> Result<LoopVerdict> {
    let span = phi.max_abs_degree();
    if window < span + 1 {
        return Err(Error::WindowTooSmall {
            needed: span + 1,
            got: window,
        });
    }
    let gamma = |x: &LoopElement| -> LoopElement {
        let mut out = LoopElement::zero();
        for (b, m, c) in x.twist(power).terms() {
            for (d, p) in phi.terms() {
                out.add_term(b, m + d, c * p);
            }
        }
        out
    };
    let alpha = |x: &LoopElement| x.twist(1);
    let reach = (window - span) as i64;
    let mut equations = 0;
    for a in Sl2Basis::ALL {
        for b in Sl2Basis::ALL {
            for m in -reach..=reach {
                let rest = reach - m.abs();
                for n in -rest..=rest {
                    let u = LoopElement::basis(a, m);
                    let v = LoopElement::basis(b, n);
                    let lhs = gamma(&loop_bracket(&u, &v));
                    let rhs = loop_bracket(&u.twist(k + 1), &gamma(&v));
                    let residual = lhs.sub(&rhs);
                    equations += 1;
                    if !residual.is_zero() {
                        return Ok(LoopVerdict::Rejected(LoopFailure::Bracket {
                            u,
                            v,
                            residual,
                        }));
                    }
                }
            }
        }
    }
    for b in Sl2Basis::ALL {
        for n in -reach..=reach {
            let u = LoopElement::basis(b, n);
            let residual = gamma(&alpha(&u)).sub(&alpha(&gamma(&u)));
            equations += 1;
            if !residual.is_zero() {
                return Ok(LoopVerdict::Rejected(LoopFailure::Twist { u, residual }));
            }
        }
    }
    Ok(LoopVerdict::Confirmed { equations })
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;

    fn phi(s: &str) -> LaurentPoly {
        LaurentPoly::parse(s).unwrap()
    }

    #[test]
    fn bracket_examples() {
        use Sl2Basis::*;
        let r = loop_bracket(&LoopElement::basis(H, 0), &LoopElement::basis(E, 4));
        let mut expected = LoopElement::zero();
        expected.add_term(E, 4, int(2));
        assert_eq!(r, expected);
        assert!(loop_bracket(&LoopElement::basis(E, 1), &LoopElement::basis(E, 2)).is_zero());
        assert_eq!(
            loop_bracket(&LoopElement::basis(E, -3), &LoopElement::basis(F, 5)),
            LoopElement::basis(H, 2)
        );
    }

    #[test]
    fn bracket_matches_finite_sl2() {
        let sl2 = super::super::sl2();
        for (i, a) in Sl2Basis::ALL.into_iter().enumerate() {
            for (j, b) in Sl2Basis::ALL.into_iter().enumerate() {
                let finite = sl2.basis_bracket(i, j);
                let looped = loop_bracket(&LoopElement::basis(a, 0), &LoopElement::basis(b, 0));
                for (idx, c) in Sl2Basis::ALL.into_iter().zip(&finite) {
                    let got = looped
                        .terms()
                        .find(|(x, _, _)| *x == idx)
                        .map_or_else(Scalar::zero, |(_, _, v)| v.clone());
                    assert_eq!(&got, c);
                }
            }
        }
    }

    #[test]
    fn confirmed_examples() {
        assert!(verify_loop_centroid(0, &phi("1"), 3)
            .unwrap()
            .is_confirmed());
        assert!(verify_loop_centroid(1, &phi("t^2 + 1"), 5)
            .unwrap()
            .is_confirmed());
    }

    #[test]
    fn window_enlargement_keeps_confirmation() {
        for p in ["1", "t", "t^2 + 1", "t^-1 - 2"] {
            for k in 0..2 {
                let base = phi(p).max_abs_degree() + 1;
                for w in [base, base + 2] {
                    assert!(verify_loop_centroid(k, &phi(p), w).unwrap().is_confirmed());
                }
            }
        }
    }

    #[test]
    fn window_too_small() {
        assert_eq!(
            verify_loop_centroid(0, &phi("t^3"), 3).unwrap_err(),
            Error::WindowTooSmall { needed: 4, got: 3 }
        );
    }

    #[test]
    fn wrong_twist_rejected_at_e_f() {
        for k in [0, 2] {
            match verify_loop_centroid_with_twist(k, k, &phi("1"), 4).unwrap() {
                LoopVerdict::Rejected(LoopFailure::Bracket { u, v, residual }) => {
                    assert_eq!(u.terms().next().unwrap().0, Sl2Basis::E);
                    assert_eq!(v.terms().next().unwrap().0, Sl2Basis::F);
                    assert_eq!(residual.terms().next().unwrap().0, Sl2Basis::H);
                }
                other => panic!("{other:?}"),
            }
        }
        // The pair (h ⊗ 1, e ⊗ t^n) balances: both sides use the same power.
        let u = LoopElement::basis(Sl2Basis::H, 0);
        let v = LoopElement::basis(Sl2Basis::E, 2);
        assert_eq!(loop_bracket(&u.twist(1), &v), loop_bracket(&u, &v));
    }

    #[test]
    fn display() {
        let mut x = LoopElement::basis(Sl2Basis::E, -1);
        x.add_term(Sl2Basis::H, 2, int(-2));
        assert_eq!(x.to_string(), "e⊗t^-1 - 2·h⊗t^2");
    }
}
