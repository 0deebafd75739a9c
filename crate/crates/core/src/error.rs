use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    /// A dense simulation would exceed one of the configured size guards.
    #[error("simulation size guard exceeded: {what} = {requested} (limit {limit})")]
    SimulationSize {
        what: &'static str,
        requested: u64,
        limit: u64,
    },

    #[error("layout mismatch: {0}")]
    Layout(String),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("invalid parameter `{field}`: {reason}")]
    Parameter { field: String, reason: String },

    #[error("invalid key: {0}")]
    Key(String),

    #[error("invalid key family: {0}")]
    FamilyInvalid(String),

    #[error("corrupted ciphertext: part {part} matches neither encryption of its key")]
    CorruptedCiphertext { part: usize },

    #[error("unsupported mode: {0}")]
    UnsupportedMode(String),

    #[error("eigensolver did not converge after {sweeps} sweeps")]
    NoConvergence { sweeps: usize },

    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),

    #[error("malformed json: {0}")]
    Json(#[from] serde_json::Error),

    #[error("csv error: {0}")]
    Csv(#[from] csv::Error),
}

impl Error {
    pub(crate) fn param(field: impl Into<String>, reason: impl Into<String>) -> Self {
        Error::Parameter {
            field: field.into(),
            reason: reason.into(),
        }
    }

    pub(crate) fn guard(what: &'static str, requested: u64, limit: u64) -> Self {
        Error::SimulationSize {
            what,
            requested,
            limit,
        }
    }

    /// True for errors caused by a size guard rather than bad input.
    pub fn is_resource(&self) -> bool {
        matches!(self, Error::SimulationSize { .. } | Error::NoConvergence { .. })
    }

    pub fn is_io(&self) -> bool {
        matches!(self, Error::Io(_) | Error::Csv(_))
    }
}
