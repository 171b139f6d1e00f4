use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

pub type Result<T, E = Error> = core::result::Result<T, E>;

/// A mathematical precondition that an operation or verifier needs.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Hypothesis {
    Perfect,
    Centerless,
    AlphaSurjective,
    AlphaInvertible,
    BetaInvertible,
    /// No nonzero vector of the module is killed by all of `L`.
    FaithfulOnAlgebra,
    /// No nonzero vector of the module is killed by the derived subalgebra.
    FaithfulOnDerived,
    /// Asserted simple and the falsifier found no proper ideal.
    Simple,
    /// Every skew biderivation into the adjoint module comes from the centroid.
    BiderivationsCentroidInduced,
    NonzeroCenter,
    DerivedCodimAtLeastTwo,
}

impl fmt::Display for Hypothesis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Hypothesis::Perfect => "algebra is perfect ([L,L] = L)",
            Hypothesis::Centerless => "algebra is centerless",
            Hypothesis::AlphaSurjective => "twist alpha is surjective",
            Hypothesis::AlphaInvertible => "twist alpha is invertible",
            Hypothesis::BetaInvertible => "module twist beta is invertible",
            Hypothesis::FaithfulOnAlgebra => "Z_V(L) = 0",
            Hypothesis::FaithfulOnDerived => "Z_V(L') = 0",
            Hypothesis::Simple => "asserted simple and no proper ideal found",
            Hypothesis::BiderivationsCentroidInduced => {
                "every skew biderivation is centroid-induced"
            }
            Hypothesis::NonzeroCenter => "center is nonzero",
            Hypothesis::DerivedCodimAtLeastTwo => "codimension of [L,L] is at least 2",
        };
        f.write_str(s)
    }
}

#[derive(Debug, thiserror::Error, PartialEq, Eq)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("invalid structure: {0}")]
    InvalidStructure(String),
    #[error("algebra is not an accepted multiplicative Hom-Lie algebra: {0}")]
    AlgebraRejected(String),
    #[error("module fails the representation laws: {0}")]
    ModuleRejected(String),
    #[error("subspace is not closed under the bracket")]
    NotAnIdeal,
    #[error("alpha does not preserve the subspace")]
    AlphaDoesNotPreserve,
    #[error("subspace is not a submodule")]
    NotASubmodule,
    #[error("alpha is singular")]
    SingularAlpha,
    #[error("beta is singular")]
    SingularBeta,
    #[error("modules belong to different algebras")]
    AlgebraMismatch,
    #[error("operation needs a {expected} space, got {found}")]
    KindMismatch {
        expected: &'static str,
        found: &'static str,
    },
    #[error("map is not in the required space: {0}")]
    NotInSpace(&'static str),
    #[error("unmet hypotheses: {}", join_hypotheses(.0))]
    Hypotheses(Vec<Hypothesis>),
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("window {got} too small, need at least {needed}")]
    WindowTooSmall { needed: u32, got: u32 },
    /// A computed fact contradicts a statement that holds under the checked
    /// hypotheses; always a bug.
    #[error("internal consistency failure: {0}")]
    Internal(String),
}

fn join_hypotheses(hs: &[Hypothesis]) -> String {
    let mut out = String::new();
    for (i, h) in hs.iter().enumerate() {
        if i > 0 {
            out.push_str("; ");
        }
        out.push_str(&alloc::format!("{h}"));
    }
    out
}
