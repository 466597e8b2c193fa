use thiserror::Error;

/// Every failure the library can report.
///
/// Variants are grouped by the stage that raises them; [`Error::kind`]
/// collapses them into the coarse classes used for CLI exit codes and the
/// C error codes.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("parse error: {0}")]
    Parse(String),

    // exact-poly
    #[error("scale factor must be nonzero")]
    ZeroScale,
    #[error("resultant of the zero polynomial is undefined")]
    ZeroInput,
    #[error("prime {prime} is bad for this polynomial: {reason}")]
    BadPrime { prime: u64, reason: String },
    #[error("degree {degree} exceeds the configured cap {cap}")]
    DegreeCapExceeded { degree: usize, cap: usize },
    #[error("{0} is not prime")]
    NotPrime(u64),

    // padic-newton
    #[error("the Newton polygon of the zero polynomial is undefined")]
    ZeroPolynomial,

    // perm-groups
    #[error("bad evidence: {0}")]
    BadEvidence(String),

    // curve-family
    #[error("invalid curve: {0}")]
    InvalidCurve(String),
    #[error("invalid family shape: {0}")]
    InvalidShape(String),
    #[error("family member has degree {actual}, expected {expected}")]
    DegreeDrop { expected: usize, actual: isize },
    #[error("h shares a factor with F; the point map is undefined")]
    NonCoprimeH,
    #[error("inadmissible prime {prime}: {condition}")]
    InadmissiblePrime { prime: u64, condition: String },
    #[error("witness failed: {0}")]
    WitnessFailed(String),
    #[error("search exhausted: {0}")]
    SearchExhausted(String),

    // census
    #[error("box has {cardinality} members, above the cap {cap}")]
    BoxTooLarge { cardinality: String, cap: u64 },
    #[error("polynomial is not monic")]
    NonMonic,
    #[error("hypothesis violated: {0}")]
    HypothesisViolated(String),
    #[error("search window {0} exceeded without stabilization")]
    SearchWindowExceeded(u64),

    #[error("input is reducible: found factor {0}")]
    Reducible(String),
    #[error("config error: {0}")]
    Config(String),
    #[error("i/o error: {0}")]
    Io(String),
}

/// Coarse error class, stable across releases.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ErrorKind {
    Parse,
    Inadmissible,
    Hypothesis,
    ResourceCap,
    Other,
}

impl Error {
    pub fn kind(&self) -> ErrorKind {
        use Error::*;
        match self {
            Parse(_) | Config(_) => ErrorKind::Parse,
            InadmissiblePrime { .. } | BadPrime { .. } | NotPrime(_) | ZeroScale | ZeroInput
            | ZeroPolynomial | BadEvidence(_) | InvalidCurve(_) | InvalidShape(_)
            | NonCoprimeH | NonMonic | Reducible(_) | WitnessFailed(_) => ErrorKind::Inadmissible,
            HypothesisViolated(_) | DegreeDrop { .. } => ErrorKind::Hypothesis,
            DegreeCapExceeded { .. } | BoxTooLarge { .. } | SearchExhausted(_)
            | SearchWindowExceeded(_) => ErrorKind::ResourceCap,
            Io(_) => ErrorKind::Other,
        }
    }

    /// Process exit code: 2 parse, 3 inadmissible input, 4 hypothesis
    /// violation, 5 resource cap.
    pub fn exit_code(&self) -> i32 {
        match self.kind() {
            ErrorKind::Parse => 2,
            ErrorKind::Inadmissible => 3,
            ErrorKind::Hypothesis => 4,
            ErrorKind::ResourceCap => 5,
            ErrorKind::Other => 1,
        }
    }
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
