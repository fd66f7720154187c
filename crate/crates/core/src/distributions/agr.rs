//! The Arctan Gaussian–Rayleigh (Arctan-GR) distribution: the Arctan-X
//! transform of the Laplace mixture kernel.
//!
//! With `z = |x − ω|/ψ` and `t = e^{−z}`:
//!
//! | | `x ≥ ω` | `x < ω` |
//! |---|---|---|
//! | CDF | `(4/π)·atan(1 − t/2)` | `(4/π)·atan(t/2)` |
//! | PDF | `2t / (πψ(1 + (1 − t/2)²))` | `8t / (πψ(4 + t²))` |
//!
//! The CDF at `ω` is [`P_STAR`] `= (4/π)·atan(1/2)`, which is where the two
//! quantile branches meet.

use std::f64::consts::{FRAC_PI_4, LN_2, PI};

use rand::distr::{Distribution, Open01};

use crate::arctanx::{BaseDistribution, Support};
use crate::error::{check_not_nan, check_probability_open, Error, Result};
use crate::quadrature::{integrate_lower, integrate_upper, Tolerance};
use crate::rng;

/// CDF value at the location parameter, `(4/π)·atan(1/2)`.
pub const P_STAR: f64 = 0.590_334_470_601_733_1;

/// Branch point of the quantile function.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuantileBranchPoint {
    pub p_star: f64,
}

impl Default for QuantileBranchPoint {
    fn default() -> Self {
        Self { p_star: P_STAR }
    }
}

/// Location `omega` and scale `psi > 0` of the Arctan-GR distribution.
#[derive(Debug, Clone, Copy, PartialEq, serde::Serialize, serde::Deserialize)]
pub struct ArctanGRParams {
    omega: f64,
    psi: f64,
}

/// Quadrature settings used for moments.
pub const MOMENT_TOLERANCE: Tolerance = Tolerance::new(1e-14, 1e-9);

impl ArctanGRParams {
    pub fn new(omega: f64, psi: f64) -> Result<Self> {
        if !omega.is_finite() {
            return Err(Error::InvalidParameter {
                name: "omega",
                value: omega,
                reason: "location must be finite",
            });
        }
        if !(psi > 0.0 && psi.is_finite()) {
            return Err(Error::InvalidParameter {
                name: "psi",
                value: psi,
                reason: "scale must be positive and finite",
            });
        }
        Ok(Self { omega, psi })
    }

    pub fn omega(&self) -> f64 {
        self.omega
    }

    pub fn psi(&self) -> f64 {
        self.psi
    }

    pub fn cdf(&self, x: f64) -> f64 {
        if x >= self.omega {
            let t = (-(x - self.omega) / self.psi).exp();
            (1.0 - 0.5 * t).atan() / FRAC_PI_4
        } else {
            let t = (-(self.omega - x) / self.psi).exp();
            (0.5 * t).atan() / FRAC_PI_4
        }
    }

    /// `1 − G(x)`, evaluated without cancellation in the right tail
    /// through `π/4 − atan(y) = atan((1 − y)/(1 + y))`.
    pub fn survival(&self, x: f64) -> f64 {
        if x >= self.omega {
            let t = (-(x - self.omega) / self.psi).exp();
            let eps = 0.5 * t;
            (eps / (2.0 - eps)).atan() / FRAC_PI_4
        } else {
            let t = (-(self.omega - x) / self.psi).exp();
            ((2.0 - t) / (2.0 + t)).atan() / FRAC_PI_4
        }
    }

    pub fn pdf(&self, x: f64) -> f64 {
        if x.is_infinite() {
            return 0.0;
        }
        if x >= self.omega {
            let t = (-(x - self.omega) / self.psi).exp();
            let h = 1.0 - 0.5 * t;
            2.0 * t / (PI * self.psi * (1.0 + h * h))
        } else {
            let t = (-(self.omega - x) / self.psi).exp();
            8.0 * t / (PI * self.psi * (4.0 + t * t))
        }
    }

    /// Log-density; stays finite far into both tails where `pdf` underflows.
    pub fn ln_pdf(&self, x: f64) -> f64 {
        if x.is_infinite() {
            return f64::NEG_INFINITY;
        }
        let base = -PI.ln() - self.psi.ln();
        if x >= self.omega {
            let z = (x - self.omega) / self.psi;
            let h = 1.0 - 0.5 * (-z).exp();
            LN_2 - z + base - (1.0 + h * h).ln()
        } else {
            let z = (self.omega - x) / self.psi;
            let t = (-z).exp();
            3.0 * LN_2 - z + base - (4.0 + t * t).ln()
        }
    }

    pub fn quantile(&self, p: f64) -> Result<f64> {
        check_not_nan("p", p)?;
        check_probability_open("p", p)?;
        Ok(self.quantile_unchecked(p))
    }

    pub(crate) fn quantile_unchecked(&self, p: f64) -> f64 {
        if p < P_STAR {
            self.omega + self.psi * (2.0 * (PI * p / 4.0).tan()).ln()
        } else {
            self.upper_quantile_from_tail(1.0 - p)
        }
    }

    /// Upper-branch quantile at `p = 1 − q`, for `q ∈ (0, 1 − P_STAR]`.
    ///
    /// Uses `1 − tan(π/4 − ε) = 2·tan ε / (1 + tan ε)` with `ε = πq/4`, so
    /// precision holds as `q → 0`.
    pub(crate) fn upper_quantile_from_tail(&self, q: f64) -> f64 {
        let te = (FRAC_PI_4 * q).tan();
        self.omega - self.psi * (4.0 * te / (1.0 + te)).ln()
    }

    /// `n` draws by inverse transform from the seeded substreams of [`rng`].
    pub fn sample(&self, n: usize, seed: u64) -> Result<Vec<f64>> {
        if n == 0 {
            return Err(Error::InsufficientData {
                what: "sampling",
                required: 1,
                got: 0,
            });
        }
        let chunks = rng::map_chunks(n, seed, |stream, len| {
            (0..len)
                .map(|_| self.quantile_unchecked(Open01.sample(stream)))
                .collect::<Vec<f64>>()
        });
        Ok(chunks.concat())
    }

    /// `E[X^r]` by quadrature on each side of `ω`.
    pub fn moment(&self, r: u32) -> Result<f64> {
        if r == 0 {
            return Err(Error::Domain {
                what: "r",
                value: 0.0,
                domain: "positive integers",
            });
        }
        let integrand = |x: f64| x.powi(r as i32) * self.pdf(x);
        let upper = integrate_upper(integrand, self.omega, self.psi, MOMENT_TOLERANCE)?;
        let lower = integrate_lower(integrand, self.omega, self.psi, MOMENT_TOLERANCE)?;
        Ok(upper.value + lower.value)
    }

    /// Bowley (quartile) skewness.
    pub fn skewness(&self) -> f64 {
        let u = |p| self.quantile_unchecked(p);
        (u(0.25) + u(0.75) - 2.0 * u(0.5)) / (u(0.75) - u(0.25))
    }

    /// Moors (octile) kurtosis.
    pub fn kurtosis(&self) -> f64 {
        let u = |p| self.quantile_unchecked(p);
        (u(0.875) + u(0.375) - u(0.625) - u(0.125)) / (u(0.75) - u(0.25))
    }

    pub fn cum_hazard(&self, x: f64) -> f64 {
        -self.survival(x).ln()
    }

    pub fn hazard(&self, x: f64) -> f64 {
        if x >= self.omega {
            // survival = (4/π)·atan(u) with u = t/(4 − t); cancelling the
            // common factor t keeps the ratio finite once t underflows
            let t = (-(x - self.omega) / self.psi).exp();
            let h = 1.0 - 0.5 * t;
            let u = t / (4.0 - t);
            let u_over_atan = if u == 0.0 { 1.0 } else { u / u.atan() };
            (4.0 - t) / (2.0 * self.psi * (1.0 + h * h)) * u_over_atan
        } else {
            self.pdf(x) / self.survival(x)
        }
    }
}

impl BaseDistribution for ArctanGRParams {
    fn cdf(&self, x: f64) -> f64 {
        ArctanGRParams::cdf(self, x)
    }
    fn pdf(&self, x: f64) -> f64 {
        ArctanGRParams::pdf(self, x)
    }
    fn support(&self) -> Support {
        Support::REAL_LINE
    }
    fn param_count(&self) -> usize {
        2
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arctanx::ArctanX;
    use crate::distributions::LaplaceParams;
    use proptest::prelude::*;

    fn unit() -> ArctanGRParams {
        ArctanGRParams::new(0.0, 1.0).unwrap()
    }

    #[test]
    fn construction_guards() {
        assert!(ArctanGRParams::new(0.0, 0.0).is_err());
        assert!(ArctanGRParams::new(0.0, -2.0).is_err());
        assert!(ArctanGRParams::new(f64::NAN, 1.0).is_err());
        assert!(ArctanGRParams::new(0.0, f64::NAN).is_err());
    }

    #[test]
    fn p_star_matches_closed_form() {
        assert_eq!(P_STAR, 0.5f64.atan() / FRAC_PI_4);
        assert_eq!(QuantileBranchPoint::default().p_star, P_STAR);
    }

    #[test]
    fn cdf_examples() {
        let p = ArctanGRParams::new(1.5, 0.3).unwrap();
        assert!((p.cdf(1.5) - P_STAR).abs() < 1e-16);
        assert_eq!(p.cdf(f64::NEG_INFINITY), 0.0);
        assert_eq!(p.cdf(f64::INFINITY), 1.0);
        let t1 = ArctanGRParams::new(0.02, 0.005).unwrap();
        assert!((t1.cdf(0.020187) - 0.609).abs() < 5e-4);
    }

    #[test]
    fn pdf_examples() {
        let p = unit();
        assert!((p.pdf(0.0) - 8.0 / (5.0 * PI)).abs() < 1e-15);
        assert!((p.pdf(-1.0) - 0.226_534_788_651_018_7).abs() < 1e-15);
        assert!((p.pdf(1.0) - 0.140_579_675_506_004_6).abs() < 1e-15);
        assert_eq!(p.pdf(f64::INFINITY), 0.0);
        assert_eq!(p.pdf(f64::NEG_INFINITY), 0.0);
        assert!(p.pdf(800.0) == 0.0 && p.pdf(-800.0) == 0.0);
    }

    #[test]
    fn left_and_right_limits_at_location() {
        let p = ArctanGRParams::new(2.0, 0.7).unwrap();
        let right = p.pdf(2.0);
        let left = p.pdf(2.0 - 1e-15);
        let expected = 8.0 / (5.0 * PI * 0.7);
        assert!((right - expected).abs() < 1e-12);
        assert!((left - expected).abs() < 1e-12);
    }

    #[test]
    fn equals_generic_transform_of_laplace() {
        let p = ArctanGRParams::new(-0.4, 2.5).unwrap();
        let generic = ArctanX::new(LaplaceParams::from(p));
        for i in -40..=40 {
            let x = -0.4 + i as f64 * 0.5;
            assert!((generic.cdf(x) - p.cdf(x)).abs() < 1e-15);
            assert!((generic.pdf(x) - p.pdf(x)).abs() < 1e-15 * p.pdf(x).max(1e-300) + 1e-300);
        }
    }

    #[test]
    fn quantile_examples() {
        let p = ArctanGRParams::new(3.0, 2.0).unwrap();
        assert!((p.quantile(P_STAR).unwrap() - 3.0).abs() < 1e-14);
        let t1 = ArctanGRParams::new(0.02, 0.005).unwrap();
        assert!((t1.quantile(0.990).unwrap() - 0.037341).abs() < 1e-6);
        assert!((t1.quantile(0.609).unwrap() - 0.020187).abs() < 2e-6);
        assert!((unit().quantile(0.5).unwrap() + 0.188_226_406_459_597_7).abs() < 1e-14);
        for bad in [0.0, 1.0, -0.1, 1.5, f64::NAN] {
            assert!(unit().quantile(bad).is_err());
        }
    }

    #[test]
    fn quantile_round_trip_near_both_ends() {
        let p = ArctanGRParams::new(0.02, 0.005).unwrap();
        let mut probs: Vec<f64> = (1..=60).map(|k| k as f64 / 61.0).collect();
        for e in 1..=6 {
            let tiny = 10f64.powi(-e);
            probs.push(tiny);
            probs.push(1.0 - tiny);
            probs.push(3.0 * tiny);
            probs.push(1.0 - 3.0 * tiny);
        }
        probs.extend([P_STAR, 0.5, 0.59, 0.591]);
        for u in probs {
            let x = p.quantile(u).unwrap();
            assert!((p.cdf(x) - u).abs() < 1e-10, "p={u}");
        }
    }

    #[test]
    fn shape_measures() {
        let a = unit();
        let b = ArctanGRParams::new(7.0, 3.0).unwrap();
        assert!((a.skewness() - b.skewness()).abs() < 1e-12);
        assert!((a.kurtosis() - b.kurtosis()).abs() < 1e-12);
        assert!((a.skewness() + 0.101_579_926_218_990_0).abs() < 1e-12);
        assert!((a.kurtosis() - 1.560_960_120_982_929_5).abs() < 1e-12);
        for omega in [-5.0, 0.0, 0.02, 100.0] {
            for psi in [1e-3, 0.005, 1.0, 50.0] {
                let p = ArctanGRParams::new(omega, psi).unwrap();
                assert!(p.kurtosis() > 0.0);
                assert!(p.quantile(0.75).unwrap() > p.quantile(0.25).unwrap());
            }
        }
    }

    #[test]
    fn survival_and_hazards() {
        let p = unit();
        assert!((p.survival(0.0) - (1.0 - P_STAR)).abs() < 1e-15);
        assert!((p.survival(0.0) - 0.409_665_5).abs() < 1e-7);
        assert_eq!(p.survival(f64::INFINITY), 0.0);
        assert!((p.cum_hazard(0.0) - 0.892_414_234_170_408).abs() < 1e-14);
        assert_eq!(p.cum_hazard(f64::NEG_INFINITY), 0.0);
        assert!((p.hazard(0.0) - 1.243_199_101_086_535_4).abs() < 1e-14);
        assert!((p.hazard(0.0) - p.pdf(0.0) / p.survival(0.0)).abs() < 1e-14);
        assert!(p.hazard(-1e3) < 1e-300);
        let t1 = ArctanGRParams::new(0.02, 0.005).unwrap();
        assert!((t1.survival(0.037341) - 0.010).abs() < 5e-4);
    }

    #[test]
    fn right_tail_hazard_tends_to_inverse_scale() {
        let p = ArctanGRParams::new(1.0, 0.25).unwrap();
        let h = p.hazard(1.0 + 40.0 * 0.25);
        assert!((h * 0.25 - 1.0).abs() < 0.05, "{h}");
        assert!(p.hazard(1e6).is_finite());
        // the stable survival agrees with 1 - cdf where the latter is accurate
        for x in [1.0, 1.3, 2.0, 3.0] {
            assert!((p.survival(x) - (1.0 - p.cdf(x))).abs() < 1e-15);
        }
    }

    #[test]
    fn moments_scale_limit() {
        let m = ArctanGRParams::new(5.0, 0.001).unwrap().moment(1).unwrap();
        assert!((m - 5.0).abs() < 0.01);
        assert!(unit().moment(0).is_err());
    }

    #[test]
    fn sample_contract() {
        let p = unit();
        assert!(p.sample(0, 1).is_err());
        let a = p.sample(1000, 42).unwrap();
        let b = p.sample(1000, 42).unwrap();
        assert_eq!(a, b);
        assert_ne!(a, p.sample(1000, 43).unwrap());
        // prefix property across chunk boundaries
        let long = p.sample(crate::rng::CHUNK + 10, 42).unwrap();
        assert_eq!(&long[..1000], &a[..]);
    }

    #[test]
    fn cdf_derivative_matches_pdf() {
        let p = ArctanGRParams::new(0.4, 1.7).unwrap();
        for i in 0..400 {
            let x = 0.4 + (i as f64 - 200.0) * 0.0731 + 1e-3;
            if (x - 0.4).abs() < 1e-4 {
                continue;
            }
            let h = 1e-5 * 1.7;
            let d = (p.cdf(x + h) - p.cdf(x - h)) / (2.0 * h);
            let f = p.pdf(x);
            if f > 1e-12 {
                assert!(((d - f) / f).abs() < 1e-6, "x={x}: {d} vs {f}");
            }
        }
    }

    proptest! {
        #[test]
        fn location_scale_equivariance(
            omega in -100.0f64..100.0,
            log_psi in -6.0f64..6.0,
            u in 0.001f64..0.999,
        ) {
            let psi = log_psi.exp();
            let p = ArctanGRParams::new(omega, psi).unwrap();
            let x = p.quantile(u).unwrap();
            let z = unit().quantile(u).unwrap();
            prop_assert!((x - (omega + psi * z)).abs() <= 1e-9 * (omega.abs() + psi * (1.0 + z.abs())));
            prop_assert!((p.cdf(x) - u).abs() < 1e-10);
        }

        #[test]
        fn cdf_monotone_and_bounded(
            omega in -10.0f64..10.0,
            psi in 0.01f64..10.0,
            a in -50.0f64..50.0,
            b in -50.0f64..50.0,
        ) {
            let p = ArctanGRParams::new(omega, psi).unwrap();
            let (lo, hi) = if a <= b { (a, b) } else { (b, a) };
            prop_assert!(p.cdf(lo) <= p.cdf(hi));
            prop_assert!((0.0..=1.0).contains(&p.cdf(a)));
            prop_assert!(p.cum_hazard(lo) <= p.cum_hazard(hi));
            prop_assert!(p.pdf(a) >= 0.0);
            prop_assert!((p.ln_pdf(a) - p.pdf(a).ln()).abs() < 1e-9 || p.pdf(a) < 1e-250);
        }

        #[test]
        fn density_ratio_to_kernel(omega in -5.0f64..5.0, psi in 0.05f64..5.0, x in -20.0f64..20.0) {
            let p = ArctanGRParams::new(omega, psi).unwrap();
            let k = LaplaceParams::from(p).pdf(x);
            prop_assume!(k > 1e-280);
            let ratio = p.pdf(x) / k;
            prop_assert!((2.0 / PI - 1e-12..=4.0 / PI + 1e-12).contains(&ratio));
        }
    }
}
