use thiserror::Error;

/// Crate-wide error type.
///
/// Variants are grouped by the module that raises them; the CLI maps them to
/// exit codes (numeric-tolerance failures vs data-format failures).
#[derive(Debug, Error)]
pub enum Error {
    // --- group / character-table errors ---
    #[error("unsupported group kind: {0}")]
    UnsupportedGroupKind(String),
    #[error("inconsistent explicit multiplication table: {0}")]
    InconsistentTable(String),
    #[error("class function and character live on different groups")]
    GroupMismatch,
    #[error("zero class function where a non-zero one is required")]
    ZeroClassFunction,
    #[error("zero denominator in S_t (empty or null filtered spectrum)")]
    ZeroDenominator,
    #[error("inconsistent subgroup embedding: {0}")]
    InconsistentEmbedding(String),
    #[error("Frobenius-Schur residual {residual:e} exceeds tolerance (broken table?)")]
    FrobeniusSchurResidual { residual: f64 },

    // --- conductor errors ---
    #[error("conductor exponent {value} is not within {tol:e} of an integer (inconsistent filtration?)")]
    NonIntegralExponent { value: f64, tol: f64 },
    #[error("missing ramification data for prime {0}")]
    MissingRamifiedPrime(String),

    // --- zero-finder / zero-sum errors ---
    #[error("zero completeness check failed for {label}: counted {counted}, main term {main:.3} (missed zero suspected)")]
    CompletenessCheck { label: String, counted: usize, main: f64 },
    #[error("bisection failed to reach precision target {0:e}")]
    PrecisionNotReached(f64),
    #[error("tail bound {bound:e} exceeds tolerance {tol:e}; increase certified height")]
    TailBound { bound: f64, tol: f64 },
    #[error("no zero set supplied for supported character {0}")]
    MissingZeroSet(String),
    #[error("zero variance (w4 undefined)")]
    ZeroVariance,
    #[error("window (T, T+eps] exceeds certified height {0}")]
    WindowBeyondHeight(f64),

    // --- weight errors ---
    #[error("unknown weight name: {0}")]
    UnknownWeight(String),
    #[error("weight failed grid validation: {0}")]
    WeightValidation(String),

    // --- prime-sum / moment errors ---
    #[error("prime range {needed} exceeds configured sieve ceiling {ceiling}")]
    SieveCeiling { needed: u64, ceiling: u64 },
    #[error("quadrature failed to converge (estimated error {0:e})")]
    QuadratureNonConvergence(f64),
    #[error("cost guard exceeded: {0}")]
    CostGuard(String),

    // --- verification errors ---
    #[error("check failed: {0}")]
    CheckFailed(String),

    // --- i/o and format errors ---
    #[error("parse error: {0}")]
    Parse(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    /// CLI exit code class: 3 numeric-tolerance failure, 4 data-format failure.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Parse(_) | Error::Io(_) | Error::InconsistentTable(_) => 4,
            _ => 3,
        }
    }
}
