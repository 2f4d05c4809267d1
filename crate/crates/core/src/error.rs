use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid composition: {0}")]
    InvalidComposition(String),

    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),

    #[error("the empty composition is not allowed here")]
    EmptyComposition,

    #[error("degree must be at least 1")]
    ZeroDegree,

    #[error("index {index} is out of range 0..={max}")]
    OutOfRange { index: usize, max: usize },

    #[error("degree {degree} exceeds the configured bound {bound}")]
    DegreeBound { degree: usize, bound: usize },

    #[error("matrix is not invertible over the integers")]
    NotInvertible,

    #[error("matrix labels do not match: {0}")]
    LabelMismatch(String),

    #[error("invalid forest: {0}")]
    InvalidForest(String),

    #[error("forest labels must be exactly 1..={0}")]
    LabelsNotStandard(usize),

    #[error("half-product with an empty argument")]
    EmptyHalfProduct,

    #[error("element is not homogeneous")]
    Inhomogeneous,

    #[error("no integral expansion exists: {0}")]
    NotIntegral(String),

    #[error("linear solve failed: {0}")]
    Solve(String),

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
