use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PolyError {
    #[error("ring mismatch: {left} vs {right}")]
    RingMismatch { left: String, right: String },
    #[error("arity mismatch: expected {expected}, found {found}")]
    Arity { expected: usize, found: usize },
    #[error("invalid ring: {0}")]
    InvalidRing(String),
    #[error("unknown variable {0:?}")]
    UnknownVariable(String),
    #[error("no image given for variable {0:?}")]
    MissingImage(String),
    #[error("division by the zero polynomial")]
    DivisionByZero,
    #[error("polynomial is not divisible")]
    NotDivisible,
    #[error("parse error at byte {position}: {message}")]
    Parse { position: usize, message: String },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GradingError {
    #[error("weight system must be nonempty")]
    Empty,
    #[error("weights must be positive, got {0}")]
    NonPositive(i64),
    #[error("arity mismatch: {weights} weights for {vars} variables")]
    Arity { weights: usize, vars: usize },
    #[error("weights {0:?} are not well-formed")]
    NotWellFormed(Vec<u32>),
    #[error("mixed weighted degrees: {0} and {1}")]
    MixedDegrees(u64, u64),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BundleError {
    #[error("split bundle needs at least one summand")]
    Empty,
    #[error("classes live on different Hirzebruch surfaces (e = {0} vs e = {1})")]
    MismatchedSurface(u32, u32),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SystemError {
    #[error(transparent)]
    Poly(#[from] PolyError),
    #[error(transparent)]
    Grading(#[from] GradingError),
    #[error("invalid pencil cubic: {0}")]
    InvalidCubic(String),
    #[error("generator {generator} is not homogeneous of degree {degree}")]
    NotHomogeneous { generator: String, degree: u32 },
    #[error("multiplicity of the zero polynomial is undefined")]
    ZeroMultiplicity,
    #[error("component {index} ({component}) has degree {found:?}, expected {expected}")]
    DegreeMismatch {
        index: usize,
        component: String,
        found: Option<u32>,
        expected: u32,
    },
}
