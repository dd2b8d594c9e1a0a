use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("parse error: {0}")]
    Parse(String),

    #[error("vertex {0} out of range 1..={1}")]
    VertexOutOfRange(usize, usize),

    #[error("edge {0} out of range 1..={1}")]
    EdgeOutOfRange(usize, usize),

    #[error("cannot contract loop edge {0}")]
    ContractLoop(usize),

    #[error("graph must be connected")]
    Disconnected,

    #[error("graph must be loop-free")]
    HasLoop,

    #[error("orientation word has {got} symbols, graph has {want} edges")]
    WordLength { got: usize, want: usize },

    #[error("orientation is not in the map's domain: {0}")]
    NotInDomain(String),

    #[error("invalid stage: {0}")]
    InvalidStage(String),

    #[error("set partition error: {0}")]
    Partition(String),

    #[error("degree mismatch: {0} vs {1}")]
    DegreeMismatch(usize, usize),

    #[error("basis mismatch: expected {0}, got {1}")]
    BasisMismatch(&'static str, &'static str),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}
