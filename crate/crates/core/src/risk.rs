//! Actuarial tail risk measures: VaR, TVaR and tail variance (TV).
//!
//! VaR is the quantile. TVaR and TV are integrated in probability space,
//! `TVaR = (1/(1−α))·∫_α^1 Q(p) dp`, which keeps the domain bounded. The
//! logarithmic endpoint singularity of `Q` at `p → 1` is removed with
//! `1 − p = (1 − α)·e^{−u}`, turning both integrals into
//! `∫_0^∞ (·)·e^{−u} du`.

use rand::distr::{Distribution, Open01};
use serde::Serialize;

use crate::dataset::LossDataset;
use crate::distributions::{ArctanGRParams, P_STAR};
use crate::error::{check_not_nan, check_probability_open, Error, Result};
use crate::format::{csv_string, fixed_width_table, sig6};
use crate::quadrature::{integrate, integrate_upper, Tolerance};
use crate::rng;

/// Tail-moment quadrature tolerance, in units of `ψ`.
pub const TAIL_TOLERANCE: Tolerance = Tolerance::new(1e-14, 1e-10);

/// Negative tail variances above this are treated as round-off and clamped.
pub const TV_CLAMP: f64 = 1e-12;

/// A confidence level `α ∈ (1/2, 1)`.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd, Serialize)]
#[serde(transparent)]
pub struct ConfidenceLevel(f64);

impl ConfidenceLevel {
    pub fn new(alpha: f64) -> Result<Self> {
        check_not_nan("alpha", alpha)?;
        if alpha > 0.5 && alpha < 1.0 {
            Ok(Self(alpha))
        } else {
            Err(Error::Domain {
                what: "alpha",
                value: alpha,
                domain: "(0.5, 1)",
            })
        }
    }

    pub fn value(self) -> f64 {
        self.0
    }
}

/// Value at risk: the `α`-quantile.
///
/// For `α ≥ P_STAR` this is `ω − ψ·ln(2 − 2·tan(πα/4))`; below `P_STAR` the
/// lower quantile branch applies.
pub fn var(params: &ArctanGRParams, alpha: ConfidenceLevel) -> f64 {
    params.quantile_unchecked(alpha.value())
}

/// `(VaR, TVaR, TV)` for one confidence level.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct RiskRow {
    pub alpha: f64,
    pub var: f64,
    pub tvar: f64,
    pub tv: f64,
}

/// First and second moments of `(Q(p) − VaR)/ψ` over the tail `p > α`.
fn tail_moments(params: &ArctanGRParams, alpha: ConfidenceLevel) -> Result<(f64, f64, f64)> {
    let a = alpha.value();
    let tail = 1.0 - a;
    let var = var(params, alpha);
    let psi = params.psi();
    let excess = move |u: f64| {
        let q = tail * (-u).exp();
        let x = if q <= 1.0 - P_STAR {
            params.upper_quantile_from_tail(q)
        } else {
            params.quantile_unchecked(1.0 - q)
        };
        (x - var) / psi
    };

    let first = |u: f64| excess(u) * (-u).exp();
    let second = |u: f64| excess(u).powi(2) * (-u).exp();

    // the quantile changes branch at p = P_STAR
    let kink = if a < P_STAR {
        (tail / (1.0 - P_STAR)).ln()
    } else {
        0.0
    };
    let mut m1 = integrate_upper(first, kink, 1.0, TAIL_TOLERANCE)?.value;
    let mut m2 = integrate_upper(second, kink, 1.0, TAIL_TOLERANCE)?.value;
    if kink > 0.0 {
        m1 += integrate(first, 0.0, kink, TAIL_TOLERANCE)?.value;
        m2 += integrate(second, 0.0, kink, TAIL_TOLERANCE)?.value;
    }
    Ok((var, m1, m2))
}

/// Computes VaR, TVaR and TV at `alpha` by quadrature.
pub fn risk_row(params: &ArctanGRParams, alpha: ConfidenceLevel) -> Result<RiskRow> {
    let (var, m1, m2) = tail_moments(params, alpha)?;
    let psi = params.psi();
    let tvar = var + psi * m1;
    let mut tv = psi * psi * (m2 - m1 * m1);
    if tv < 0.0 {
        if tv < -TV_CLAMP {
            return Err(Error::Numerical(format!(
                "tail variance {tv:e} is negative beyond round-off at alpha={}",
                alpha.value()
            )));
        }
        tv = 0.0;
    }
    Ok(RiskRow {
        alpha: alpha.value(),
        var,
        tvar,
        tv,
    })
}

/// Tail value at risk `E[X | X > VaR_α]`.
pub fn tvar(params: &ArctanGRParams, alpha: ConfidenceLevel) -> Result<f64> {
    Ok(risk_row(params, alpha)?.tvar)
}

/// Tail variance `Var[X | X > VaR_α]`.
pub fn tv(params: &ArctanGRParams, alpha: ConfidenceLevel) -> Result<f64> {
    Ok(risk_row(params, alpha)?.tv)
}

/// What a report was computed from.
#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum RiskSubject {
    Model { omega: f64, psi: f64 },
    Empirical { dataset: String, n: usize },
}

/// How a report was computed.
#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum RiskMethod {
    Quadrature { rel_tol: f64 },
    MonteCarlo { samples: usize, seed: u64 },
    Empirical { estimator: String },
}

/// Rows of `(alpha, var, tvar, tv)`, sorted by `alpha`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct RiskReport {
    pub subject: RiskSubject,
    pub method: RiskMethod,
    pub rows: Vec<RiskRow>,
}

pub const RISK_COLUMNS: [&str; 4] = ["alpha", "var", "tvar", "tv"];

impl RiskReport {
    pub fn new(subject: RiskSubject, method: RiskMethod, mut rows: Vec<RiskRow>) -> Self {
        rows.sort_by(|a, b| a.alpha.total_cmp(&b.alpha));
        Self {
            subject,
            method,
            rows,
        }
    }

    fn cells(&self) -> Vec<Vec<String>> {
        self.rows
            .iter()
            .map(|r| vec![sig6(r.alpha), sig6(r.var), sig6(r.tvar), sig6(r.tv)])
            .collect()
    }

    pub fn to_csv(&self) -> Result<String> {
        csv_string(&RISK_COLUMNS, &self.cells())
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes") + "\n"
    }

    pub fn to_table(&self) -> String {
        fixed_width_table(&["alpha", "VaR", "TVaR", "TV"], &self.cells())
    }
}

/// Quadrature risk report over a set of confidence levels.
pub fn risk_curve(params: &ArctanGRParams, alphas: &[ConfidenceLevel]) -> Result<RiskReport> {
    let rows = alphas
        .iter()
        .map(|&a| risk_row(params, a))
        .collect::<Result<Vec<_>>>()?;
    Ok(RiskReport::new(
        RiskSubject::Model {
            omega: params.omega(),
            psi: params.psi(),
        },
        RiskMethod::Quadrature {
            rel_tol: TAIL_TOLERANCE.rel,
        },
        rows,
    ))
}

/// Estimator description attached to empirical reports.
pub const EMPIRICAL_ESTIMATOR: &str =
    "VaR: linear interpolation of order statistics at h = (n-1)*alpha + 1; \
TVaR: mean of observations strictly above VaR; TV: population variance of those observations";

/// Empirical VaR, TVaR and TV of a sample at any level `alpha ∈ (0, 1)`.
pub fn empirical_risk(data: &LossDataset, alpha: f64) -> Result<RiskRow> {
    check_not_nan("alpha", alpha)?;
    check_probability_open("alpha", alpha)?;
    if data.len() < 2 {
        return Err(Error::InsufficientData {
            what: "empirical risk",
            required: 2,
            got: data.len(),
        });
    }
    let var = data.quantile(alpha);
    let tail: Vec<f64> = data.sorted().iter().copied().filter(|&x| x > var).collect();
    if tail.len() < 2 {
        return Err(Error::InsufficientData {
            what: "tail variance (observations strictly above VaR)",
            required: 2,
            got: tail.len(),
        });
    }
    let k = tail.len() as f64;
    let tvar = tail.iter().sum::<f64>() / k;
    let tv = tail.iter().map(|x| (x - tvar).powi(2)).sum::<f64>() / k;
    Ok(RiskRow {
        alpha,
        var,
        tvar,
        tv,
    })
}

/// Monte Carlo estimates of the tail mean and variance beyond VaR.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct McEstimate {
    pub samples: usize,
    pub exceedances: usize,
    pub var: f64,
    pub tvar: f64,
    pub tv: f64,
    pub tvar_se: f64,
    pub tv_se: f64,
    /// Binomial standard error of the exceedance fraction around `1 − α`.
    pub exceedance_se: f64,
}

impl McEstimate {
    pub fn exceedance_fraction(&self) -> f64 {
        self.exceedances as f64 / self.samples as f64
    }
}

#[derive(Debug, Clone, Copy, Default)]
struct PowerSums {
    count: usize,
    s: [f64; 4],
}

/// Draws `n` variates with the seeded sampler and estimates TVaR and TV from
/// the draws exceeding the closed-form VaR.
pub fn mc_oracle(
    params: &ArctanGRParams,
    alpha: ConfidenceLevel,
    n: usize,
    seed: u64,
) -> Result<McEstimate> {
    if n == 0 {
        return Err(Error::InsufficientData {
            what: "Monte Carlo",
            required: 1,
            got: 0,
        });
    }
    let var = var(params, alpha);
    let psi = params.psi();
    let partials = rng::map_chunks(n, seed, |stream, len| {
        let mut acc = PowerSums::default();
        for _ in 0..len {
            let x = params.quantile_unchecked(Open01.sample(stream));
            if x > var {
                let d = (x - var) / psi;
                acc.count += 1;
                acc.s[0] += d;
                acc.s[1] += d * d;
                acc.s[2] += d * d * d;
                acc.s[3] += d * d * d * d;
            }
        }
        acc
    });
    // fixed reduction order
    let total = partials.iter().fold(PowerSums::default(), |mut t, p| {
        t.count += p.count;
        for i in 0..4 {
            t.s[i] += p.s[i];
        }
        t
    });
    if total.count < 2 {
        return Err(Error::InsufficientData {
            what: "Monte Carlo exceedances",
            required: 2,
            got: total.count,
        });
    }
    let k = total.count as f64;
    let [e1, e2, e3, e4] = total.s.map(|s| s / k);
    let var_d = (e2 - e1 * e1).max(0.0);
    let mu4 = e4 - 4.0 * e1 * e3 + 6.0 * e1 * e1 * e2 - 3.0 * e1.powi(4);
    let alpha_tail = 1.0 - alpha.value();
    Ok(McEstimate {
        samples: n,
        exceedances: total.count,
        var,
        tvar: var + psi * e1,
        tv: psi * psi * var_d,
        tvar_se: psi * (var_d / k).sqrt(),
        tv_se: psi * psi * ((mu4 - var_d * var_d).max(0.0) / k).sqrt(),
        exceedance_se: (alpha_tail * (1.0 - alpha_tail) / n as f64).sqrt(),
    })
}

/// Risk report whose TVaR/TV columns come from [`mc_oracle`].
pub fn mc_risk_curve(
    params: &ArctanGRParams,
    alphas: &[ConfidenceLevel],
    n: usize,
    seed: u64,
) -> Result<RiskReport> {
    let rows = alphas
        .iter()
        .map(|&a| {
            let est = mc_oracle(params, a, n, seed)?;
            Ok(RiskRow {
                alpha: a.value(),
                var: est.var,
                tvar: est.tvar,
                tv: est.tv,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(RiskReport::new(
        RiskSubject::Model {
            omega: params.omega(),
            psi: params.psi(),
        },
        RiskMethod::MonteCarlo { samples: n, seed },
        rows,
    ))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn table1() -> ArctanGRParams {
        ArctanGRParams::new(0.02, 0.005).unwrap()
    }

    fn level(a: f64) -> ConfidenceLevel {
        ConfidenceLevel::new(a).unwrap()
    }

    #[test]
    fn confidence_level_domain() {
        assert!(ConfidenceLevel::new(0.5).is_err());
        assert!(ConfidenceLevel::new(1.0).is_err());
        assert!(ConfidenceLevel::new(f64::NAN).is_err());
        assert!(ConfidenceLevel::new(0.51).is_ok());
    }

    #[test]
    fn var_closed_form_and_branch_point() {
        let p = table1();
        let closed =
            |a: f64| 0.02 - 0.005 * (2.0 - 2.0 * (std::f64::consts::PI * a / 4.0).tan()).ln();
        for &a in &[0.609, 0.75, 0.936, 0.99] {
            assert!((var(&p, level(a)) - closed(a)).abs() < 1e-15);
        }
        assert!((var(&p, level(P_STAR)) - 0.02).abs() < 1e-15);
        assert!((var(&p, level(0.990)) - 0.037341).abs() < 1e-6);
        // below P_STAR the lower branch applies, VaR < omega
        assert!(var(&p, level(0.55)) < 0.02);
    }

    #[test]
    fn tvar_tv_table_endpoints() {
        let p = table1();
        let lo = risk_row(&p, level(0.609)).unwrap();
        assert!((lo.tvar - 0.024627).abs() < 1e-4);
        assert!((lo.tv - 0.000022).abs() < 2e-6);
        let hi = risk_row(&p, level(0.990)).unwrap();
        assert!((hi.tvar - 0.042322).abs() < 1e-4);
        assert!((hi.tv - 0.000025).abs() < 2e-6);
    }

    #[test]
    fn curve_sorts_rows() {
        let p = table1();
        let report = risk_curve(&p, &[level(0.9), level(0.6), level(0.75)]).unwrap();
        let alphas: Vec<f64> = report.rows.iter().map(|r| r.alpha).collect();
        assert_eq!(alphas, vec![0.6, 0.75, 0.9]);
        assert_eq!(risk_curve(&p, &[level(0.7)]).unwrap().rows.len(), 1);
    }

    #[test]
    fn empirical_small_sample() {
        let d = LossDataset::new("t", vec![4.0, 1.0, 3.0, 2.0]).unwrap();
        let r = empirical_risk(&d, 0.5).unwrap();
        assert_eq!(r.var, 2.5);
        assert_eq!(r.tvar, 3.5);
        assert_eq!(r.tv, 0.25);
    }

    #[test]
    fn empirical_errors() {
        let flat = LossDataset::new("c", vec![2.0; 10]).unwrap();
        let err = empirical_risk(&flat, 0.9).unwrap_err();
        assert!(matches!(
            err,
            Error::InsufficientData {
                required: 2,
                got: 0,
                ..
            }
        ));
        let one = LossDataset::new("one", vec![1.0]).unwrap();
        assert!(empirical_risk(&one, 0.9).is_err());
    }

    #[test]
    fn mc_is_deterministic() {
        let p = table1();
        let a = mc_oracle(&p, level(0.9), 100_000, 9).unwrap();
        let b = mc_oracle(&p, level(0.9), 100_000, 9).unwrap();
        assert_eq!(a, b);
        let c = mc_oracle(&p, level(0.9), 100_000, 10).unwrap();
        assert_ne!(a.tvar, c.tvar);
    }

    #[test]
    fn report_serialization() {
        let p = table1();
        let report = risk_curve(&p, &[level(0.99)]).unwrap();
        let csv = report.to_csv().unwrap();
        assert!(
            csv.starts_with("alpha,var,tvar,tv\r\n0.990000,0.0373412,"),
            "{csv}"
        );
        let json: serde_json::Value = serde_json::from_str(&report.to_json()).unwrap();
        assert_eq!(json["rows"][0]["alpha"], 0.99);
        assert_eq!(json["subject"]["kind"], "model");
    }
}
