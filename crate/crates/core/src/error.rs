use thiserror::Error;

/// Errors produced by the distribution, risk and fitting routines.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("invalid parameter `{name}` = {value}: {reason}")]
    InvalidParameter {
        name: &'static str,
        value: f64,
        reason: &'static str,
    },

    #[error("{what} = {value} is outside the domain {domain}")]
    Domain {
        what: &'static str,
        value: f64,
        domain: &'static str,
    },

    #[error("invalid data: {0}")]
    Data(String),

    #[error("not enough observations: {what} requires at least {required}, got {got}")]
    InsufficientData {
        what: &'static str,
        required: usize,
        got: usize,
    },

    #[error("quadrature did not converge: estimated error {error_estimate:e} exceeds tolerance {tolerance:e} after {intervals} subintervals")]
    Quadrature {
        error_estimate: f64,
        tolerance: f64,
        intervals: usize,
    },

    #[error("optimizer failed to converge: {0}")]
    NoConvergence(String),

    #[error("numerical failure: {0}")]
    Numerical(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn check_not_nan(what: &'static str, value: f64) -> Result<()> {
    if value.is_nan() {
        Err(Error::Domain {
            what,
            value,
            domain: "non-NaN reals",
        })
    } else {
        Ok(())
    }
}

pub(crate) fn check_probability_open(what: &'static str, p: f64) -> Result<()> {
    if p > 0.0 && p < 1.0 {
        Ok(())
    } else {
        Err(Error::Domain {
            what,
            value: p,
            domain: "(0, 1)",
        })
    }
}
