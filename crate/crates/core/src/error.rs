use thiserror::Error;

/// Coarse classification used by front ends to pick exit codes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ErrorKind {
    /// Malformed input: bad syntax, unknown names, inconsistent shapes.
    Input,
    /// Well-formed input that violates a mathematical precondition.
    Precondition,
    /// Two independent routes disagreed or an invariant broke.
    Internal,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("syntax error at byte {pos}: {message}")]
    Syntax { pos: usize, message: String },
    #[error("unknown variable `{name}`")]
    UnknownVariable { name: String },
    #[error("negative exponent at byte {pos}")]
    NegativeExponent { pos: usize },
    #[error("variable contexts differ: [{left}] vs [{right}]")]
    ContextMismatch { left: String, right: String },
    #[error("index {index} out of range for {len} variables")]
    IndexOutOfRange { index: usize, len: usize },
    #[error("polynomial is not homogeneous of positive degree: {0}")]
    NotHomogeneous(String),
    #[error("dimension mismatch: {left} vs {right}")]
    DimensionMismatch { left: usize, right: usize },
    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("class with constant term {0} is not a unit in the Chow ring")]
    NonUnit(String),
    #[error("{0} divisor degrees given; at most two are supported here")]
    UnsupportedDivisorCount(usize),
    #[error("operation needs a {expected} monomial order, got {got}")]
    WrongOrderKind { expected: &'static str, got: &'static str },
    #[error("ideal is not zero-dimensional")]
    NotZeroDimensional,
    #[error("point is not a singular point: {0}")]
    NotSingular(String),
    #[error("singularity is not isolated: {0}")]
    NonIsolated(String),
    #[error("critical locus is not isolated in the chosen chart: {0}")]
    NonIsolatedCriticalLocus(String),
    #[error("singularities at infinity for chart {chart}; pick another chart or a linear chart form")]
    SingularitiesAtInfinity { chart: String },
    #[error("no coordinate chart avoids singularities at infinity; supply a linear chart form (a random one such as [1, 2, 3, 5] usually works)")]
    NoAffineChart,
    #[error("not a regular sequence near the point: {0}")]
    NotRegularSequence(String),
    #[error("vector field is degenerate: {0}")]
    DegenerateField(String),
    #[error("point is not a zero of the vector field: {0}")]
    NotAZero(String),
    #[error("vector field is not logarithmic along {0}")]
    NotLogarithmic(String),
    #[error("zero set of the vector field is not completely rational; {found} of {expected} zeros found")]
    IncompleteZeros { found: usize, expected: usize },
    #[error("point lies on the singular locus: {0}")]
    PointOnSingularLocus(String),
    #[error("point is not on the divisor: {0}")]
    NotOnDivisor(String),
    #[error("zero is degenerate: {0}")]
    DegenerateZero(String),
    #[error("missing data: {0}")]
    MissingData(String),
    #[error("not a smooth normal crossings arrangement: {0}")]
    NotNormalCrossings(String),

    #[error("routes disagree for {quantity}: {left} vs {right}")]
    RouteDisagreement {
        quantity: String,
        left: String,
        right: String,
    },
    #[error("expected an integer for {what}, got {value}")]
    NonIntegral { what: String, value: String },
}

impl Error {
    pub fn kind(&self) -> ErrorKind {
        use Error::*;
        match self {
            Syntax { .. }
            | UnknownVariable { .. }
            | NegativeExponent { .. }
            | ContextMismatch { .. }
            | IndexOutOfRange { .. }
            | NotHomogeneous(_)
            | DimensionMismatch { .. }
            | InvalidInput(_)
            | UnsupportedDivisorCount(_)
            | MissingData(_) => ErrorKind::Input,
            RouteDisagreement { .. } | NonIntegral { .. } => ErrorKind::Internal,
            _ => ErrorKind::Precondition,
        }
    }

    /// Stable machine-readable identifier.
    pub fn code(&self) -> &'static str {
        use Error::*;
        match self {
            Syntax { .. } => "syntax",
            UnknownVariable { .. } => "unknown-variable",
            NegativeExponent { .. } => "negative-exponent",
            ContextMismatch { .. } => "context-mismatch",
            IndexOutOfRange { .. } => "index-out-of-range",
            NotHomogeneous(_) => "not-homogeneous",
            DimensionMismatch { .. } => "dimension-mismatch",
            InvalidInput(_) => "invalid-input",
            NonUnit(_) => "non-unit",
            UnsupportedDivisorCount(_) => "unsupported-divisor-count",
            WrongOrderKind { .. } => "wrong-order-kind",
            NotZeroDimensional => "not-zero-dimensional",
            NotSingular(_) => "not-singular",
            NonIsolated(_) => "non-isolated",
            NonIsolatedCriticalLocus(_) => "non-isolated-critical-locus",
            SingularitiesAtInfinity { .. } => "singularities-at-infinity",
            NoAffineChart => "no-affine-chart",
            NotRegularSequence(_) => "not-regular-sequence",
            DegenerateField(_) => "degenerate-field",
            NotAZero(_) => "not-a-zero",
            NotLogarithmic(_) => "not-logarithmic",
            IncompleteZeros { .. } => "incomplete-zeros",
            PointOnSingularLocus(_) => "point-on-singular-locus",
            NotOnDivisor(_) => "not-on-divisor",
            DegenerateZero(_) => "degenerate-zero",
            MissingData(_) => "missing-data",
            NotNormalCrossings(_) => "not-normal-crossings",
            RouteDisagreement { .. } => "route-disagreement",
            NonIntegral { .. } => "non-integral",
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
