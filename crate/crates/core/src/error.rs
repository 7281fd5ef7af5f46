use thiserror::Error;

/// Errors raised by the engine.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("syntax error at position {pos}: {msg}")]
    Parse { pos: usize, msg: String },
    #[error("variable x{index} out of range for a ring in x0..x{max}")]
    VariableOutOfRange { index: usize, max: usize },
    #[error("the zero polynomial has no leading term")]
    ZeroPolynomial,
    #[error("ring mismatch: {0} vs {1} variables")]
    RingMismatch(usize, usize),
    #[error("generator is not homogeneous: {0}")]
    NotHomogeneous(String),
    #[error("ideal is not monomial")]
    NotMonomial,
    #[error("ideal is not Borel-fixed")]
    NotBorelFixed,
    #[error("{0} is not a minimal generator")]
    NotMinimalGenerator(String),
    #[error("expansion of {0} does not give a Borel-fixed ideal")]
    NotExpandable(String),
    #[error("inadmissible Hilbert polynomial: {0}")]
    Inadmissible(String),
    #[error("unit ideal has no Krull dimension")]
    UnitIdeal,
    #[error("gin draws disagree after {0} attempts")]
    GinDisagreement(usize),
    #[error("nonconstant deficit {deficit} at stage {stage}")]
    NonconstantDeficit { stage: usize, deficit: String },
    #[error("negative deficit {deficit} at stage {stage}")]
    NegativeDeficit { stage: usize, deficit: String },
    #[error("out of range: {0}")]
    OutOfRange(String),
    #[error("singular linear system")]
    Singular,
    #[error("generators are not linearly independent")]
    NotSimplicial,
    #[error("inconsistent with held-out column {0}")]
    Inconsistent(String),
    #[error("unknown {kind}: {name}")]
    Unknown { kind: &'static str, name: String },
    #[error("shape mismatch: {0}")]
    Shape(String),
    #[error("exact division failed")]
    NotDivisible,
}

pub type Result<T> = std::result::Result<T, Error>;
