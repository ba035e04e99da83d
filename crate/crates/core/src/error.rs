use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    /// Invalid parameters or an inconsistent configuration.
    #[error("configuration error: {0}")]
    Config(String),

    /// A sequence term (1-based index `index`) does not fit the 63-bit term range.
    #[error("sequence overflow at term k = {index}")]
    Overflow { index: u64 },

    /// A finite (explicit) sequence ran out of terms.
    #[error("sequence exhausted: requested term k = {index} but only {available} terms exist")]
    Exhausted { index: u64, available: u64 },

    /// A point or coordinate outside the phase space of a system.
    #[error("domain error: {0}")]
    Domain(String),

    /// The scrambled-family constructor could not build a schedule.
    #[error("construction error: {0}")]
    Construction(String),

    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),

    #[error("json error: {0}")]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn config<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::Config(msg.into()))
}

pub(crate) fn domain<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::Domain(msg.into()))
}
