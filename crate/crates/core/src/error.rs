use thiserror::Error;

/// Errors raised by the library.
///
/// The variants map onto the four failure classes callers care about:
/// bad parameters, malformed input data, failed constructions and
/// exhausted resource budgets.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid parameter: {0}")]
    Parameter(String),

    #[error("malformed data: {0}")]
    Data(String),

    #[error("construction failed: {0}")]
    Construction(String),

    #[error("resource limit exceeded: {what} (after {nodes} search nodes)")]
    Resource { what: String, nodes: u64 },

    #[error("solution sink aborted: {0}")]
    SinkAborted(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

pub(crate) fn param<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::Parameter(msg.into()))
}

pub(crate) fn data<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::Data(msg.into()))
}
