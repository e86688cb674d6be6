//! Error type shared by all modules.

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("division by zero in number field")]
    DivisionByZero,
    #[error("series has non-invertible constant term")]
    NonInvertibleSeries,
    #[error("truncation order must be at least 1")]
    BadOrder,
    #[error("truncation orders do not match: {0} vs {1}")]
    OrderMismatch(usize, usize),
    #[error("variable `{0}` has no assigned series")]
    UnassignedVariable(String),
    #[error("non-invertible series assigned to variable `{0}` with negative exponent")]
    NonInvertibleSubstitution(String),
    #[error("form not integral: Coxeter matrix is not small")]
    NonSmall,
    #[error("Coxeter matrix is not triangle-free")]
    NonTriangleFree,
    #[error("Coxeter system is not of finite type")]
    InfiniteType,
    #[error("rule excludes the simple root of s")]
    DepthStepOnOwnSimpleRoot,
    #[error("root {0:?} not found in the enumerated positive system")]
    UnknownRoot(Vec<i64>),
    #[error("generator index {0} out of range (rank {1})")]
    GeneratorOutOfRange(usize, usize),
    #[error("matrix is not invertible")]
    NotInvertible,
    #[error("matrix inverse has an entry outside the Laurent ring; this signals a bug")]
    NotLaurent,
    #[error("not in GL⁰: constant term differs from the identity")]
    NotInGl0,
    #[error("element not in P; filtration argument applies to pure subgroup")]
    NotPure,
    #[error(
        "strand count {0} exceeds the exact-equality bound {1}; \
         raise the bound explicitly or compare specializations at a finite truncation order instead"
    )]
    StrandBound(usize, usize),
    #[error("invalid word: {0}")]
    BadWord(String),
    #[error("invalid parameters: {0}")]
    BadParams(String),
    #[error("invalid Coxeter matrix: {0}")]
    BadMatrix(String),
}

pub type Result<T> = std::result::Result<T, Error>;
