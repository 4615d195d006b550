//! Error type shared by every module of the crate.

use thiserror::Error;

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    /// An input violated a physical or mathematical precondition.
    #[error("domain error: {0}")]
    Domain(String),

    /// A quantity string had an unrecognized unit suffix.
    #[error("unknown unit in {0:?}")]
    Unit(String),

    /// A quantity string had a malformed numeric part.
    #[error("malformed number in {0:?}")]
    Parse(String),

    /// A reciprocal or division hit a vanishing denominator.
    #[error("singularity: {0}")]
    Singularity(String),

    /// The complex root finder did not reach its residual target.
    #[error("no convergence after {iterations} iterations (residual {residual:.3e})")]
    Convergence { iterations: usize, residual: f64 },

    /// A returned surface wave violated the bound-mode conditions.
    #[error("mode not bound: {0}")]
    ModeNotBound(String),

    /// No half-wave resonance inside the search bracket.
    #[error("no resonance in ({lo_hz:.3e}, {hi_hz:.3e}) Hz for length {length_m:.3e} m")]
    NoResonance {
        lo_hz: f64,
        hi_hz: f64,
        length_m: f64,
    },

    /// Adaptive quadrature failed to meet its error target.
    #[error("integration failure: {0}")]
    Integration(String),

    /// A gate stack was built from capacitance only and has no thickness.
    #[error("oxide geometry unknown: {0}")]
    MissingGeometry(String),

    /// A frequency fell outside the absorption table's range.
    #[error("frequency {f_hz:.6e} Hz outside table range [{lo_hz:.6e}, {hi_hz:.6e}] Hz")]
    OutOfRange { f_hz: f64, lo_hz: f64, hi_hz: f64 },

    /// Slab wavevector vanished (grazing propagation inside the slab).
    #[error("grazing incidence: normal wavevector vanished")]
    Grazing,

    /// Configuration file problem (syntax, unknown key, bad value).
    #[error("config error: {0}")]
    Config(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl Error {
    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }
}
