use std::io;

use brody_core::ErrorKind;

/// Exit statuses of the `brody-lab` binary.
pub const EXIT_OK: i32 = 0;
pub const EXIT_PRECONDITION: i32 = 2;
pub const EXIT_NUMERICAL: i32 = 3;
pub const EXIT_INVARIANT: i32 = 4;

#[derive(Debug, thiserror::Error)]
pub enum LabError {
    #[error(transparent)]
    Core(#[from] brody_core::Error),

    #[error("config: {0}")]
    Config(String),

    #[error("{op}: invariant violated: {detail}")]
    Invariant { op: &'static str, detail: String },

    #[error("io: {0}")]
    Io(#[from] io::Error),

    #[error("csv: {0}")]
    Csv(#[from] csv::Error),
}

impl LabError {
    pub fn config(msg: impl Into<String>) -> Self {
        LabError::Config(msg.into())
    }

    pub fn invariant(op: &'static str, detail: impl Into<String>) -> Self {
        LabError::Invariant {
            op,
            detail: detail.into(),
        }
    }

    pub fn exit_code(&self) -> i32 {
        match self {
            LabError::Core(e) => match e.kind() {
                ErrorKind::Precondition => EXIT_PRECONDITION,
                ErrorKind::Numerical => EXIT_NUMERICAL,
            },
            LabError::Config(_) => EXIT_PRECONDITION,
            LabError::Invariant { .. } => EXIT_INVARIANT,
            LabError::Io(_) | LabError::Csv(_) => EXIT_PRECONDITION,
        }
    }
}

pub type LabResult<T> = Result<T, LabError>;
