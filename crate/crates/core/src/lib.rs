//! Arctan Gaussian–Rayleigh loss modelling.
//!
//! The crate provides the Arctan-X transform, the Arctan-GR distribution and
//! its baselines, actuarial tail risk measures (VaR, TVaR, tail variance),
//! maximum-likelihood fitting with information-criterion model comparison,
//! and the data plumbing behind the `arctan-gr` command-line tool.

// quadrature nodes and test oracles are written at full available precision
#![allow(clippy::excessive_precision)]

pub mod arctanx;
pub mod cli;
pub mod dataset;
pub mod distributions;
pub mod error;
pub mod fit;
pub mod format;
pub mod optim;
pub mod plot;
pub mod quadrature;
pub mod risk;
pub mod rng;

pub use arctanx::{arctan_cdf, arctan_pdf, ArctanX, BaseDistribution, Support};
pub use dataset::LossDataset;
pub use distributions::{ArctanGRParams, GaussianParams, LaplaceParams, RayleighParams, P_STAR};
pub use error::{Error, Result};
