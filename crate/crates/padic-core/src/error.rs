use thiserror::Error;

/// Error taxonomy shared by every crate in the workspace.
///
/// The CLI maps these onto exit codes: `Parse` is 1, the domain-style
/// variants (`Domain`, `Convergence`, `Hypothesis`, `Singular`) are 2,
/// `Uncovered` is 3, `Invariant` and `Oracle` are 4, and the resource
/// variants (`Precision`, `Resource`) are 5.
#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum PadicError {
    #[error("parse error: {0}")]
    Parse(String),

    #[error("domain error: {0}")]
    Domain(String),

    /// Input outside the convergence region of a series.
    #[error("convergence domain error: {0}")]
    Convergence(String),

    /// A precondition of the algorithm (not of the user input) failed.
    #[error("hypothesis not satisfied: {0}")]
    Hypothesis(String),

    /// Denominator indistinguishable from zero at working precision.
    #[error("singular denominator: {0}")]
    Singular(String),

    /// Requested regime or case is valid input but not decided by the engine.
    #[error("uncovered: {0}")]
    Uncovered(String),

    /// An internal cross-check failed. Always a bug or a wrong table entry.
    #[error("invariant violation: {0}")]
    Invariant(String),

    /// Two independent computations of the same quantity disagree.
    #[error("oracle disagreement: {0}")]
    Oracle(String),

    /// All tracked digits cancelled; the result cannot be represented.
    #[error("precision exhausted: {0}")]
    Precision(String),

    #[error("resource limit exceeded: {0}")]
    Resource(String),
}

impl PadicError {
    /// Process exit code the CLI uses for this error class.
    pub fn exit_code(&self) -> i32 {
        match self {
            PadicError::Parse(_) => 1,
            PadicError::Domain(_)
            | PadicError::Convergence(_)
            | PadicError::Hypothesis(_)
            | PadicError::Singular(_) => 2,
            PadicError::Uncovered(_) => 3,
            PadicError::Invariant(_) | PadicError::Oracle(_) => 4,
            PadicError::Precision(_) | PadicError::Resource(_) => 5,
        }
    }
}

pub type Result<T> = std::result::Result<T, PadicError>;
