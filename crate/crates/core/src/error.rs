use thiserror::Error;

/// Errors produced by the combinatorial and affine operations.
///
/// Variants in the first block are input validation failures. The rest
/// mark a morphism or move that is undefined at the given point, which
/// is an ordinary outcome for a groupoid action.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid shape {n}x{m}: both sides must be positive")]
    InvalidShape { n: usize, m: usize },
    #[error("invalid diagram: {0}")]
    InvalidDiagram(String),
    #[error("invalid word: {0}")]
    InvalidWord(String),
    #[error("invalid shuffle: {0}")]
    InvalidShuffle(String),
    #[error("invalid root: {0}")]
    InvalidRoot(String),
    #[error("parse error: {0}")]
    Parse(String),

    #[error("{root} is not a corner of {diagram}")]
    NotACorner { diagram: String, root: String },
    #[error("{root} is not a simple root of {shuffle}")]
    NotSimple { shuffle: String, root: String },
    #[error("{op} is not defined at {at}")]
    NotEligible { op: String, at: String },
    #[error("shape {n}x{m} is not coprime")]
    NonCoprimeShape { n: usize, m: usize },
    #[error("shape {n}x{m} is not supported: {reason}")]
    ShapeUnsupported { n: usize, m: usize, reason: &'static str },
    #[error("{root} acts on no representative of {class}")]
    Undefined { class: String, root: String },
    #[error("node {0} is not isotropic")]
    NotIsotropic(usize),
    #[error("node {0} is the deleted node")]
    DeletedNode(usize),
    #[error("node {node} out of range for {len} nodes")]
    NodeOutOfRange { node: usize, len: usize },
    #[error("not a diagram of type A~(n-1|m-1): {0}")]
    NotTypeA(String),
    #[error("no Borel subalgebra recorded for {0}")]
    UnknownBorel(String),
}

impl Error {
    /// True for the partial-morphism and shape-restriction failures,
    /// false for malformed input.
    pub fn is_domain(&self) -> bool {
        !matches!(
            self,
            Error::InvalidShape { .. }
                | Error::InvalidDiagram(_)
                | Error::InvalidWord(_)
                | Error::InvalidShuffle(_)
                | Error::InvalidRoot(_)
                | Error::Parse(_)
        )
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
