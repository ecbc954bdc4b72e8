use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid algebra: {0}")]
    InvalidAlgebra(String),

    #[error("operands belong to different algebras")]
    AlgebraMismatch,

    #[error("shape mismatch: {0}")]
    Shape(String),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("matrix is not invertible (not unitary)")]
    NotInvertible,

    #[error("unknown atom `{0}`")]
    UnknownAtom(String),

    #[error("{line}:{column}: {message}")]
    Syntax {
        line: usize,
        column: usize,
        message: String,
    },

    #[error("enumeration needs {required} objects, budget is {budget}")]
    BudgetExceeded { required: u128, budget: u128 },

    #[error("unknown theorem `{0}`")]
    UnknownTheorem(String),

    #[error("{0}")]
    Unsupported(String),
}

impl Error {
    pub(crate) fn precondition(msg: impl Into<String>) -> Self {
        Error::Precondition(msg.into())
    }

    pub(crate) fn shape(msg: impl Into<String>) -> Self {
        Error::Shape(msg.into())
    }
}
