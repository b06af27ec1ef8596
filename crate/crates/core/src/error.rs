use thiserror::Error;

/// Errors raised by the engine and its input formats.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("unknown label `{0}`")]
    UnknownLabel(String),

    #[error("unknown axis `{0}`")]
    UnknownAxis(String),

    #[error("duplicate identifier `{0}`")]
    Duplicate(String),

    #[error("at most {max} labels are supported, got {got}")]
    TooManyLabels { max: usize, got: usize },

    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("ordering on axis `{0}` is not linear")]
    NotLinear(String),

    #[error("ordering on axis `{axis}` contains a cycle through `{label}`")]
    Cycle { axis: String, label: String },

    #[error("no value for label `{label}` on axis `{axis}`")]
    MissingValue { label: String, axis: String },

    #[error("line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },

    #[error("{what} out of supported range: {detail}")]
    OutOfRange { what: &'static str, detail: String },

    #[error("invalid certificate: {0}")]
    InvalidCertificate(String),

    #[error("cross-check disagreement: {0}")]
    CrosscheckMismatch(String),

    #[error("internal error: {0}")]
    Internal(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

impl Error {
    pub(crate) fn parse(line: usize, column: usize, message: impl Into<String>) -> Self {
        Error::Parse {
            line,
            column,
            message: message.into(),
        }
    }

    /// True for errors caused by malformed input text rather than by a
    /// request the engine cannot serve.
    pub fn is_input_format(&self) -> bool {
        matches!(
            self,
            Error::Parse { .. }
                | Error::Cycle { .. }
                | Error::Duplicate(_)
                | Error::UnknownLabel(_)
                | Error::UnknownAxis(_)
                | Error::MissingValue { .. }
                | Error::TooManyLabels { .. }
        )
    }
}
