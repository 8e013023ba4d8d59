use thiserror::Error;

/// Errors produced by simulation, construction and parsing routines.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("dimension mismatch in {context}: expected {expected}, got {actual}")]
    DimensionMismatch {
        context: &'static str,
        expected: usize,
        actual: usize,
    },

    #[error("slot index {slot} out of range for layout with {len} slots")]
    SlotOutOfRange { slot: usize, len: usize },

    #[error("duplicate slot index {slot}")]
    DuplicateSlot { slot: usize },

    #[error("operator is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },

    #[error("basis index {index} out of range for dimension {dim}")]
    IndexOutOfRange { index: usize, dim: usize },

    #[error("state is not normalized: |<v|v>| = {norm_sqr}")]
    NotNormalized { norm_sqr: f64 },

    #[error("layout does not cover the full space: slot dims product {product}, vector dim {dim}")]
    InconsistentLayout { product: usize, dim: usize },

    #[error("partial map is not injective: outputs collide at {output}")]
    NonInjective { output: usize },

    #[error("permutation lacks a line layout; build it with reversibilize_table")]
    LayoutMissing,

    #[error("unknown symbol `{symbol}`")]
    UnknownSymbol { symbol: String },

    #[error("symbol index {index} out of range for alphabet of size {size}")]
    SymbolOutOfRange { index: usize, size: usize },

    #[error("not a valid density operator: {reason}")]
    InvalidDensity { reason: String },

    #[error("post-state is entangled between the internal space and the current cell (purity {purity})")]
    Factorization { purity: f64 },

    #[error("simulation needs {required} amplitudes, above the cap of {cap}")]
    ResourceCap { required: usize, cap: usize },

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("alphabets differ: {left} vs {right}")]
    AlphabetMismatch { left: String, right: String },

    #[error("invalid model: {0}")]
    InvalidModel(String),

    #[error("io error: {0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
