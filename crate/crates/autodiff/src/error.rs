use thiserror::Error;

#[derive(Debug, Error)]
pub enum AutodiffError {
    #[error("{op}: shape mismatch: {detail}")]
    ShapeMismatch { op: &'static str, detail: String },
    #[error("{op}: channel mismatch: {detail}")]
    ChannelMismatch { op: &'static str, detail: String },
    #[error("backward requires a scalar loss, got shape {shape:?}")]
    NonScalarLoss { shape: Vec<usize> },
    #[error("node {0} is not on this tape")]
    InvalidNode(usize),
    #[error("maxpool2x2 requires even spatial dims, got {h}x{w}")]
    OddSpatial { h: usize, w: usize },
    #[error("batchnorm training mode needs at least 2 values per channel, got {0}")]
    EmptyBatch(usize),
    #[error("optimizer state/parameter mismatch: {0}")]
    OptimizerMismatch(String),
    #[error("checkpoint: {0}")]
    Checkpoint(String),
}

pub type Result<T> = std::result::Result<T, AutodiffError>;
