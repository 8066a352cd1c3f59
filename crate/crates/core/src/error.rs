//! Crate-wide error type.

/// Errors produced anywhere in the crate.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("{op}: shape mismatch between {lhs:?} and {rhs:?}")]
    ShapeMismatch {
        op: &'static str,
        lhs: Vec<usize>,
        rhs: Vec<usize>,
    },
    #[error("{op}: produced a non-finite value")]
    NonFinite { op: &'static str },
    #[error("backward requires a scalar loss, got shape {shape:?}")]
    NotScalar { shape: Vec<usize> },
    #[error("{op}: {msg}")]
    Invalid { op: &'static str, msg: String },
    #[error("empty corpus")]
    EmptyCorpus,
    #[error("{path}:{line}: malformed jsonl record: {msg}")]
    MalformedJsonl {
        path: String,
        line: usize,
        msg: String,
    },
    #[error("token id {id} out of range for vocab of {vocab}")]
    IdOutOfRange { id: usize, vocab: usize },
    #[error("diffusion step {t} outside 1..={t_max}")]
    StepOutOfRange { t: usize, t_max: usize },
    #[error("loss mask excludes every position")]
    AllMasked,
    #[error("non-finite loss at step {step} (lr {lr:.3e})")]
    NonFiniteLoss { step: usize, lr: f64 },
    #[error("checkpoint buffer {name}: expected shape {expected:?}, found length {found}")]
    CheckpointBuffer {
        name: String,
        expected: Vec<usize>,
        found: usize,
    },
    #[error("checkpoint: {msg}")]
    Checkpoint { msg: String },
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub(crate) fn invalid(op: &'static str, msg: impl Into<String>) -> Self {
        Error::Invalid {
            op,
            msg: msg.into(),
        }
    }
}
