use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    /// Input could not be parsed as the expected file layout.
    #[error("format error: {0}")]
    Format(String),

    /// A single data row was rejected. `line` is 1-based and counts the header.
    #[error("line {line}: {message}")]
    Row { line: u64, message: String },

    #[error("empty network: no records survive filtering")]
    EmptyNetwork,

    /// A caller violated an operation precondition.
    #[error("contract violation: {0}")]
    Contract(String),

    #[error("hierarchy strength is undefined: every edge is a self-loop")]
    UndefinedRho,

    #[error("network has {n} nodes; exhaustive search is limited to {max}")]
    SizeLimit { n: usize, max: usize },

    #[error("gini coefficient is undefined for an all-zero production vector")]
    UndefinedGini,

    #[error("degenerate test: both samples have zero variance and equal means")]
    DegenerateTest,

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl Error {
    pub(crate) fn contract(msg: impl Into<String>) -> Self {
        Error::Contract(msg.into())
    }

    /// True for errors caused by malformed input files rather than by the computation.
    pub fn is_input_error(&self) -> bool {
        matches!(self, Error::Format(_) | Error::Row { .. } | Error::Io(_))
    }
}

impl From<csv::Error> for Error {
    fn from(err: csv::Error) -> Self {
        if err.is_io_error() {
            match err.into_kind() {
                csv::ErrorKind::Io(io) => return Error::Io(io),
                _ => unreachable!(),
            }
        }
        let line = err.position().map(|p| p.line());
        match line {
            Some(line) => Error::Row {
                line,
                message: err.to_string(),
            },
            None => Error::Format(err.to_string()),
        }
    }
}
