use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("domain error: {0}")]
    Domain(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("invalid rule: {0}")]
    InvalidRule(String),
    #[error("possibly infinite standard set: {0}")]
    SafetyBound(String),
    #[error("scale guard exceeded: {0}")]
    ScaleGuard(String),
    #[error("completion: {0}")]
    Completion(String),
    #[error("internal consistency failure: {0}")]
    Inconsistent(String),
}
