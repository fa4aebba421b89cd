use alloc::string::String;

/// Coarse classification used by callers that map failures to exit codes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ErrorKind {
    /// Caller asked for something outside an operation's contract.
    Precondition,
    /// The computation ran but could not produce a trustworthy number.
    Numerical,
}

/// Every variant carries the `module::operation` that raised it.
#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum Error {
    #[error("{op}: point outside the domain: {detail}")]
    Domain { op: &'static str, detail: String },

    #[error("{op}: degenerate input: {detail}")]
    Degenerate { op: &'static str, detail: String },

    #[error("{op}: precondition violated: {detail}")]
    Precondition { op: &'static str, detail: String },

    #[error("{op}: general position violated: {detail}")]
    GeneralPosition { op: &'static str, detail: String },

    #[error("{op}: construction error: {detail}")]
    Construction { op: &'static str, detail: String },

    #[error("{op}: numerical failure: {detail}")]
    Numerical { op: &'static str, detail: String },
}

impl Error {
    pub fn kind(&self) -> ErrorKind {
        match self {
            Error::Numerical { .. } => ErrorKind::Numerical,
            _ => ErrorKind::Precondition,
        }
    }

    /// The `module::operation` tag.
    pub fn op(&self) -> &'static str {
        match self {
            Error::Domain { op, .. }
            | Error::Degenerate { op, .. }
            | Error::Precondition { op, .. }
            | Error::GeneralPosition { op, .. }
            | Error::Construction { op, .. }
            | Error::Numerical { op, .. } => op,
        }
    }
}

pub type Result<T> = core::result::Result<T, Error>;

macro_rules! err {
    ($variant:ident, $op:expr, $($fmt:tt)+) => {
        $crate::error::Error::$variant {
            op: $op,
            detail: alloc::format!($($fmt)+),
        }
    };
}
pub(crate) use err;
