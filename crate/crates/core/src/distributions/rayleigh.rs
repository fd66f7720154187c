use crate::arctanx::{BaseDistribution, Support};
use crate::error::{check_not_nan, check_probability_open, Error, Result};

/// Rayleigh distribution with scale `psi`, density `(x/ψ²)·exp(−x²/(2ψ²))` on `x ≥ 0`.
#[derive(Debug, Clone, Copy, PartialEq, serde::Serialize, serde::Deserialize)]
pub struct RayleighParams {
    psi: f64,
}

impl RayleighParams {
    pub fn new(psi: f64) -> Result<Self> {
        if !(psi > 0.0 && psi.is_finite()) {
            return Err(Error::InvalidParameter {
                name: "psi",
                value: psi,
                reason: "scale must be positive and finite",
            });
        }
        Ok(Self { psi })
    }

    pub fn psi(&self) -> f64 {
        self.psi
    }

    pub fn pdf(&self, x: f64) -> f64 {
        if x <= 0.0 {
            return 0.0;
        }
        let s2 = self.psi * self.psi;
        x / s2 * (-x * x / (2.0 * s2)).exp()
    }

    pub fn ln_pdf(&self, x: f64) -> f64 {
        if x <= 0.0 {
            return f64::NEG_INFINITY;
        }
        let s2 = self.psi * self.psi;
        x.ln() - s2.ln() - x * x / (2.0 * s2)
    }

    pub fn cdf(&self, x: f64) -> f64 {
        if x <= 0.0 {
            return 0.0;
        }
        -(-x * x / (2.0 * self.psi * self.psi)).exp_m1()
    }

    pub fn quantile(&self, p: f64) -> Result<f64> {
        check_not_nan("p", p)?;
        check_probability_open("p", p)?;
        Ok(self.psi * (-2.0 * (-p).ln_1p()).sqrt())
    }
}

impl BaseDistribution for RayleighParams {
    fn cdf(&self, x: f64) -> f64 {
        RayleighParams::cdf(self, x)
    }
    fn pdf(&self, x: f64) -> f64 {
        RayleighParams::pdf(self, x)
    }
    fn support(&self) -> Support {
        Support::POSITIVE
    }
    fn param_count(&self) -> usize {
        1
    }
}
