//! The Gaussian scale mixture with Rayleigh-distributed standard deviation.
//!
//! Integrating `N(x; ω, η²)` against a Rayleigh(ψ) density for `η` collapses
//! to the Laplace density `exp(−|x−ω|/ψ)/(2ψ)`. Both routes are provided so
//! the closed form can be checked against direct quadrature.

use std::f64::consts::PI;

use crate::arctanx::{BaseDistribution, Support};
use crate::error::{check_not_nan, check_probability_open, Error, Result};
use crate::quadrature::{integrate_upper, Tolerance};

use super::ArctanGRParams;

/// Laplace distribution with location `omega` and scale `psi`.
#[derive(Debug, Clone, Copy, PartialEq, serde::Serialize, serde::Deserialize)]
pub struct LaplaceParams {
    omega: f64,
    psi: f64,
}

impl LaplaceParams {
    pub fn new(omega: f64, psi: f64) -> Result<Self> {
        // same domain as the arctan model
        let p = ArctanGRParams::new(omega, psi)?;
        Ok(Self {
            omega: p.omega(),
            psi: p.psi(),
        })
    }

    pub fn omega(&self) -> f64 {
        self.omega
    }

    pub fn psi(&self) -> f64 {
        self.psi
    }

    pub fn pdf(&self, x: f64) -> f64 {
        (-(x - self.omega).abs() / self.psi).exp() / (2.0 * self.psi)
    }

    pub fn ln_pdf(&self, x: f64) -> f64 {
        -(x - self.omega).abs() / self.psi - (2.0 * self.psi).ln()
    }

    pub fn cdf(&self, x: f64) -> f64 {
        if x < self.omega {
            0.5 * ((x - self.omega) / self.psi).exp()
        } else {
            1.0 - 0.5 * (-(x - self.omega) / self.psi).exp()
        }
    }

    pub fn quantile(&self, p: f64) -> Result<f64> {
        check_not_nan("p", p)?;
        check_probability_open("p", p)?;
        Ok(if p < 0.5 {
            self.omega + self.psi * (2.0 * p).ln()
        } else {
            self.omega - self.psi * (2.0 * (1.0 - p)).ln()
        })
    }
}

impl From<ArctanGRParams> for LaplaceParams {
    fn from(p: ArctanGRParams) -> Self {
        Self {
            omega: p.omega(),
            psi: p.psi(),
        }
    }
}

impl BaseDistribution for LaplaceParams {
    fn cdf(&self, x: f64) -> f64 {
        LaplaceParams::cdf(self, x)
    }
    fn pdf(&self, x: f64) -> f64 {
        LaplaceParams::pdf(self, x)
    }
    fn support(&self) -> Support {
        Support::REAL_LINE
    }
    fn param_count(&self) -> usize {
        2
    }
}

/// Closed-form mixture density `exp(−|x−ω|/ψ)/(2ψ)`.
pub fn mixture_kernel_pdf(params: &ArctanGRParams, x: f64) -> f64 {
    LaplaceParams::from(*params).pdf(x)
}

/// Mixture density by numerically integrating the conditional normal density
/// against the Rayleigh density of its standard deviation.
pub fn mixture_kernel_pdf_by_integration(params: &ArctanGRParams, x: f64) -> Result<f64> {
    check_not_nan("x", x)?;
    if x.is_infinite() {
        return Err(Error::Domain {
            what: "x",
            value: x,
            domain: "finite reals",
        });
    }
    let (omega, psi) = (params.omega(), params.psi());
    let d2 = (x - omega) * (x - omega);
    let integrand = |eta: f64| {
        if eta <= 0.0 {
            return 0.0;
        }
        let normal = (-d2 / (2.0 * eta * eta)).exp() / (eta * (2.0 * PI).sqrt());
        let rayleigh = eta / (psi * psi) * (-eta * eta / (2.0 * psi * psi)).exp();
        normal * rayleigh
    };
    let est = integrate_upper(integrand, 0.0, psi, Tolerance::new(1e-13 / psi, 1e-11))?;
    Ok(est.value)
}
