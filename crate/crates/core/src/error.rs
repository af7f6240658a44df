use std::path::PathBuf;

/// Crate-wide error type.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    /// Argument outside the mathematical domain of the operation.
    #[error("domain error: {0}")]
    Domain(String),

    /// Vector or matrix sizes do not line up.
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    /// Structurally invalid argument (bad sizes, out-of-range index, ...).
    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    /// Ground-truth label required but not supplied.
    #[error("prior requires a ground-truth label")]
    MissingLabel,

    /// A batch operation received no examples.
    #[error("empty batch")]
    EmptyBatch,

    /// Metric evaluation needs at least one record from each origin.
    #[error("score set has no {0} records")]
    EmptyScoreSide(&'static str),

    /// Malformed text input; `line` is 1-based.
    #[error("parse error at line {line}: {message}")]
    Parse { line: usize, message: String },

    /// File does not start with the checkpoint magic bytes.
    #[error("not a checkpoint file: bad magic")]
    BadMagic,

    /// Checkpoint format version not understood by this build.
    #[error("unsupported checkpoint version {0}")]
    UnsupportedVersion(u32),

    /// Checkpoint payload checksum does not match the stored value.
    #[error("checkpoint checksum mismatch")]
    ChecksumMismatch,

    /// Checkpoint ended before the declared payload was read.
    #[error("truncated checkpoint")]
    Truncated,

    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
}

impl Error {
    pub(crate) fn io(path: impl Into<PathBuf>, source: std::io::Error) -> Self {
        Error::Io { path: path.into(), source }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
