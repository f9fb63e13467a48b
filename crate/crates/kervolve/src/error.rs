//! Crate-wide error type.

use crate::train::TrainReport;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, thiserror::Error)]
pub enum Error {
    /// Tensor or layer shapes do not line up.
    #[error("shape mismatch: {0}")]
    Shape(String),

    /// A hyperparameter or layer configuration is invalid.
    #[error("invalid configuration: {0}")]
    Config(String),

    /// A value is outside the operation's domain.
    #[error("domain error: {0}")]
    Domain(String),

    /// An API contract was violated (stale cache, unfitted transform, ...).
    #[error("contract violation: {0}")]
    Contract(String),

    /// A layer produced a non-finite activation.
    #[error("numeric divergence in layer `{layer}`: {detail}")]
    Divergence { layer: String, detail: String },

    /// Training aborted on a non-finite loss. Carries the partial report.
    #[error("training diverged at epoch {epoch}")]
    TrainingDiverged { epoch: usize, report: Box<TrainReport> },

    /// A data file is missing, malformed, or inconsistent.
    #[error("data error: {0}")]
    Data(String),

    /// Checkpoint file does not start with the expected magic bytes.
    #[error("not a checkpoint file (bad magic)")]
    BadMagic,

    /// Checkpoint format version is not supported by this build.
    #[error("unsupported checkpoint version {0}")]
    UnsupportedVersion(u32),

    /// Checkpoint file ends before the declared payload.
    #[error("truncated checkpoint file")]
    Truncated,

    /// Checkpoint payload does not match its checksum.
    #[error("checkpoint checksum mismatch (expected {expected:#018x}, got {actual:#018x})")]
    ChecksumMismatch { expected: u64, actual: u64 },

    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),

    #[error("config parse error: {0}")]
    TomlParse(#[from] toml::de::Error),

    #[error("serialization error: {0}")]
    Json(#[from] serde_json::Error),
}
