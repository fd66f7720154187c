use std::f64::consts::{PI, SQRT_2};

use rand::distr::{Distribution, Open01};

use crate::arctanx::{BaseDistribution, Support};
use crate::error::{check_not_nan, check_probability_open, Error, Result};

/// Normal distribution `N(omega, eta²)`.
#[derive(Debug, Clone, Copy, PartialEq, serde::Serialize, serde::Deserialize)]
pub struct GaussianParams {
    omega: f64,
    eta: f64,
}

impl GaussianParams {
    pub fn new(omega: f64, eta: f64) -> Result<Self> {
        if !omega.is_finite() {
            return Err(Error::InvalidParameter {
                name: "omega",
                value: omega,
                reason: "location must be finite",
            });
        }
        if !(eta > 0.0 && eta.is_finite()) {
            return Err(Error::InvalidParameter {
                name: "eta",
                value: eta,
                reason: "standard deviation must be positive and finite",
            });
        }
        Ok(Self { omega, eta })
    }

    pub fn omega(&self) -> f64 {
        self.omega
    }

    pub fn eta(&self) -> f64 {
        self.eta
    }

    pub fn pdf(&self, x: f64) -> f64 {
        self.ln_pdf(x).exp()
    }

    pub fn ln_pdf(&self, x: f64) -> f64 {
        let z = (x - self.omega) / self.eta;
        -0.5 * z * z - self.eta.ln() - 0.5 * (2.0 * PI).ln()
    }

    pub fn cdf(&self, x: f64) -> f64 {
        let z = (x - self.omega) / self.eta;
        0.5 * libm::erfc(-z / SQRT_2)
    }

    pub fn survival(&self, x: f64) -> f64 {
        let z = (x - self.omega) / self.eta;
        0.5 * libm::erfc(z / SQRT_2)
    }

    pub fn quantile(&self, p: f64) -> Result<f64> {
        check_not_nan("p", p)?;
        check_probability_open("p", p)?;
        Ok(self.omega + self.eta * standard_normal_quantile(p))
    }

    /// `n` inverse-transform draws from the seeded substreams of [`crate::rng`].
    pub fn sample(&self, n: usize, seed: u64) -> Result<Vec<f64>> {
        if n == 0 {
            return Err(Error::InsufficientData {
                what: "sampling",
                required: 1,
                got: 0,
            });
        }
        let chunks = crate::rng::map_chunks(n, seed, |stream, len| {
            (0..len)
                .map(|_| self.omega + self.eta * standard_normal_quantile(Open01.sample(stream)))
                .collect::<Vec<f64>>()
        });
        Ok(chunks.concat())
    }
}

impl BaseDistribution for GaussianParams {
    fn cdf(&self, x: f64) -> f64 {
        GaussianParams::cdf(self, x)
    }
    fn pdf(&self, x: f64) -> f64 {
        GaussianParams::pdf(self, x)
    }
    fn support(&self) -> Support {
        Support::REAL_LINE
    }
    fn param_count(&self) -> usize {
        2
    }
}

/// Acklam's rational approximation followed by one Halley step against `erfc`.
pub(crate) fn standard_normal_quantile(p: f64) -> f64 {
    const A: [f64; 6] = [
        -3.969_683_028_665_376e1,
        2.209_460_984_245_205e2,
        -2.759_285_104_469_687e2,
        1.383_577_518_672_69e2,
        -3.066_479_806_614_716e1,
        2.506_628_277_459_239,
    ];
    const B: [f64; 5] = [
        -5.447_609_879_822_406e1,
        1.615_858_368_580_409e2,
        -1.556_989_798_598_866e2,
        6.680_131_188_771_972e1,
        -1.328_068_155_288_572e1,
    ];
    const C: [f64; 6] = [
        -7.784_894_002_430_293e-3,
        -3.223_964_580_411_365e-1,
        -2.400_758_277_161_838,
        -2.549_732_539_343_734,
        4.374_664_141_464_968,
        2.938_163_982_698_783,
    ];
    const D: [f64; 4] = [
        7.784_695_709_041_462e-3,
        3.224_671_290_700_398e-1,
        2.445_134_137_142_996,
        3.754_408_661_907_416,
    ];
    const P_LOW: f64 = 0.024_25;

    let x = if p < P_LOW {
        let q = (-2.0 * p.ln()).sqrt();
        (((((C[0] * q + C[1]) * q + C[2]) * q + C[3]) * q + C[4]) * q + C[5])
            / ((((D[0] * q + D[1]) * q + D[2]) * q + D[3]) * q + 1.0)
    } else if p <= 1.0 - P_LOW {
        let q = p - 0.5;
        let r = q * q;
        (((((A[0] * r + A[1]) * r + A[2]) * r + A[3]) * r + A[4]) * r + A[5]) * q
            / (((((B[0] * r + B[1]) * r + B[2]) * r + B[3]) * r + B[4]) * r + 1.0)
    } else {
        let q = (-2.0 * (1.0 - p).ln()).sqrt();
        -(((((C[0] * q + C[1]) * q + C[2]) * q + C[3]) * q + C[4]) * q + C[5])
            / ((((D[0] * q + D[1]) * q + D[2]) * q + D[3]) * q + 1.0)
    };

    let e = 0.5 * libm::erfc(-x / SQRT_2) - p;
    let u = e * (2.0 * PI).sqrt() * (0.5 * x * x).exp();
    x - u / (1.0 + 0.5 * x * u)
}
