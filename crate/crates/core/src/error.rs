use thiserror::Error;

/// Crate-wide error type. The three variants map onto the CLI exit codes:
/// parse errors exit 2, guard violations exit 3, domain errors exit 2.
#[derive(Debug, Clone, Error)]
pub enum Error {
    #[error("parse error: {0}")]
    Parse(String),

    #[error("guard `{name}` exceeded: limit {limit}, needed {needed} (override with GPL_GUARD_OVERRIDE={name}=<value>)")]
    Guard {
        name: &'static str,
        limit: u64,
        needed: u64,
    },

    #[error("{0}")]
    Domain(String),
}

impl Error {
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Parse(_) => 2,
            Error::Guard { .. } => 3,
            Error::Domain(_) => 2,
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
