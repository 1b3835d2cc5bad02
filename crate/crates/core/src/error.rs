use alloc::string::String;

pub type Result<T, E = Error> = core::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum Error {
    /// An argument lies outside the documented parameter range.
    #[error("domain error: {0}")]
    Domain(String),
    #[error("point {point} lies outside the domain {domain}")]
    OutsideDomain { point: String, domain: String },
    #[error("derivative undefined at the pole of the Möbius map")]
    Pole,
    #[error("point {0} lies on the branch cut [-2, 2]")]
    BranchCut(String),
    #[error("syntax error at byte {position}: {message}")]
    Syntax { position: usize, message: String },
    #[error("invalid domain at byte {position}: {message}")]
    Semantic { position: usize, message: String },
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error("numerical failure: {0}")]
    Numerical(String),
}

impl Error {
    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }

    pub(crate) fn precondition(msg: impl Into<String>) -> Self {
        Error::Precondition(msg.into())
    }

    pub(crate) fn unsupported(msg: impl Into<String>) -> Self {
        Error::Unsupported(msg.into())
    }
}
