use thiserror::Error;

/// Errors raised by the orbit, linear-algebra and classification routines.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid block structure: {0}")]
    InvalidBlocks(String),
    #[error("capacity constraint violated at block {block}: {used} incidences exceed block size {size}")]
    ConstraintViolation { block: usize, used: usize, size: usize },
    #[error("size mismatch: expected {expected}, found {found}")]
    SizeMismatch { expected: usize, found: usize },
    #[error("invalid pattern: {0}")]
    InvalidPattern(String),
    #[error("arrow labels must be nonzero")]
    ZeroLabel,
    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),
    #[error("subspaces live in different ambient spaces ({left} vs {right})")]
    AmbientMismatch { left: usize, right: usize },
    #[error("vectors are linearly dependent")]
    LinearlyDependent,
    #[error("matrix space is not closed under multiplication")]
    NotClosedUnderMultiplication,
    #[error("block structures differ")]
    BlockMismatch,
    #[error("matrix is not an oriented link pattern normal form: {0}")]
    NotNormalForm(String),
    #[error("matrix does not square to zero")]
    NotTwoNilpotent,
    #[error("invariant table does not match the reconstructed pattern")]
    ReconstructionMismatch,
    #[error("not a cover relation: {0}")]
    NotACover(String),
    #[error("unknown catalog id: {0}")]
    UnknownId(String),
    #[error("dimension vector mismatch: {0}")]
    DimensionMismatch(String),
    #[error("parameter must be nonzero: {0}")]
    ZeroParameter(&'static str),
    #[error("parameter out of range: {0}")]
    OutOfRange(String),
    #[error("unsupported setting: {0}")]
    Unsupported(String),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    /// Stable snake_case name of the variant.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::InvalidBlocks(_) => "invalid_blocks",
            Error::ConstraintViolation { .. } => "constraint_violation",
            Error::SizeMismatch { .. } => "size_mismatch",
            Error::InvalidPattern(_) => "invalid_pattern",
            Error::ZeroLabel => "zero_label",
            Error::ShapeMismatch(_) => "shape_mismatch",
            Error::AmbientMismatch { .. } => "ambient_mismatch",
            Error::LinearlyDependent => "linearly_dependent",
            Error::NotClosedUnderMultiplication => "not_closed_under_multiplication",
            Error::BlockMismatch => "block_mismatch",
            Error::NotNormalForm(_) => "not_normal_form",
            Error::NotTwoNilpotent => "not_two_nilpotent",
            Error::ReconstructionMismatch => "reconstruction_mismatch",
            Error::NotACover(_) => "not_a_cover",
            Error::UnknownId(_) => "unknown_id",
            Error::DimensionMismatch(_) => "dimension_mismatch",
            Error::ZeroParameter(_) => "zero_parameter",
            Error::OutOfRange(_) => "out_of_range",
            Error::Unsupported(_) => "unsupported",
            Error::Parse(_) => "parse",
        }
    }
}
