use num_complex::Complex64;
use thiserror::Error;

/// Failure modes shared by every module of the crate.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("domain error: {0}")]
    Domain(String),

    #[error("causality violated: end time {end} s does not follow start time {start} s")]
    Causality { start: f64, end: f64 },

    #[error("geometry error: {0}")]
    Geometry(String),

    #[error("no diffraction order {order}: |order * wavelength / separation| = {ratio} exceeds 1")]
    NoSuchOrder { order: i32, ratio: f64 },

    #[error("usage error: {0}")]
    Usage(String),

    #[error("approximation not valid: {0}")]
    Validity(String),

    #[error("result out of floating-point range: {0}")]
    Range(String),

    #[error("integration window reaches an endpoint singularity: {0}")]
    Singularity(String),

    #[error(
        "node budget exceeded: {needed} nodes required, {budget} allowed \
         (partial estimate {estimate}, error bound {error_bound:e})"
    )]
    BudgetExceeded {
        budget: usize,
        needed: usize,
        estimate: Complex64,
        error_bound: f64,
    },

    #[error("at screen point y = {y:e} m: {source}")]
    AtScreenPoint { y: f64, source: Box<Error> },
}

impl Error {
    /// True for failures of the numerics rather than of the inputs.
    pub fn is_numeric(&self) -> bool {
        match self {
            Error::Range(_) | Error::BudgetExceeded { .. } => true,
            Error::AtScreenPoint { source, .. } => source.is_numeric(),
            _ => false,
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn require_positive(value: f64, what: &str) -> Result<()> {
    if value.is_finite() && value > 0.0 {
        Ok(())
    } else {
        Err(Error::Domain(format!("{what} must be positive and finite, got {value}")))
    }
}

pub(crate) fn require_non_negative(value: f64, what: &str) -> Result<()> {
    if value.is_finite() && value >= 0.0 {
        Ok(())
    } else {
        Err(Error::Domain(format!("{what} must be non-negative and finite, got {value}")))
    }
}
