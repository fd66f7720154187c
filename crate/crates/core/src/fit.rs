//! Maximum-likelihood fitting, information criteria and model comparison.
//!
//! The Gaussian, Rayleigh and Laplace baselines have closed-form MLEs. The
//! Arctan-GR log-likelihood is kinked in `ω` at every observation, so it is
//! maximized with a multi-start Nelder–Mead search.
//!
//! For reference, the log-likelihood is sometimes written in expanded form
//!
//! ```text
//! ℓ(ω, ψ) = n₁ ln 2 + n₂ ln 8 − (1/ψ)·Σ|xᵢ − ω| − n ln π − n ln ψ
//!           − Σ_{xᵢ ≥ ω} ln[1 + (1 − ½e^{−(xᵢ−ω)/ψ})²]
//!           − Σ_{xᵢ < ω} ln(4 + e^{−2(ω−xᵢ)/ψ})
//! ```
//!
//! with `n₁`, `n₂` the counts at or above and below `ω`. Note that the last
//! term uses `e^{−2(ω−xᵢ)/ψ}` inside a single logarithm; a squared
//! `(4 + e^{−(ω−xᵢ)/ψ})²` there would not correspond to the derivative of the
//! CDF.

use std::collections::BTreeMap;
use std::fmt;

use rayon::prelude::*;
use serde::Serialize;

use crate::dataset::LossDataset;
use crate::distributions::{ArctanGRParams, GaussianParams, LaplaceParams, RayleighParams};
use crate::error::{Error, Result};
use crate::format::{csv_string, fixed_width_table, sig};
use crate::optim::{nelder_mead, Minimum, NelderMead};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ModelKind {
    #[serde(rename = "agr")]
    ArctanGR,
    Gaussian,
    Rayleigh,
    Laplace,
}

impl ModelKind {
    pub const ALL: [ModelKind; 4] = [
        ModelKind::ArctanGR,
        ModelKind::Gaussian,
        ModelKind::Rayleigh,
        ModelKind::Laplace,
    ];

    /// Short identifier used on the command line.
    pub fn id(self) -> &'static str {
        match self {
            ModelKind::ArctanGR => "agr",
            ModelKind::Gaussian => "gaussian",
            ModelKind::Rayleigh => "rayleigh",
            ModelKind::Laplace => "laplace",
        }
    }

    /// Display name used in comparison tables.
    pub fn label(self) -> &'static str {
        match self {
            ModelKind::ArctanGR => "Arctan-GR",
            ModelKind::Gaussian => "Gaussian",
            ModelKind::Rayleigh => "Rayleigh",
            ModelKind::Laplace => "Gaussian-Rayleigh (NR)",
        }
    }

    pub fn param_count(self) -> usize {
        match self {
            ModelKind::Rayleigh => 1,
            _ => 2,
        }
    }

    pub fn parse(s: &str) -> Option<Self> {
        Self::ALL.into_iter().find(|m| m.id() == s)
    }
}

impl fmt::Display for ModelKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

/// Fitted parameters of one of the supported models.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
#[serde(tag = "model", rename_all = "snake_case")]
pub enum ModelParams {
    #[serde(rename = "agr")]
    ArctanGR(ArctanGRParams),
    Gaussian(GaussianParams),
    Rayleigh(RayleighParams),
    Laplace(LaplaceParams),
}

impl ModelParams {
    pub fn kind(&self) -> ModelKind {
        match self {
            ModelParams::ArctanGR(_) => ModelKind::ArctanGR,
            ModelParams::Gaussian(_) => ModelKind::Gaussian,
            ModelParams::Rayleigh(_) => ModelKind::Rayleigh,
            ModelParams::Laplace(_) => ModelKind::Laplace,
        }
    }

    pub fn ln_pdf(&self, x: f64) -> f64 {
        match self {
            ModelParams::ArctanGR(p) => p.ln_pdf(x),
            ModelParams::Gaussian(p) => p.ln_pdf(x),
            ModelParams::Rayleigh(p) => p.ln_pdf(x),
            ModelParams::Laplace(p) => p.ln_pdf(x),
        }
    }

    pub fn pdf(&self, x: f64) -> f64 {
        match self {
            ModelParams::ArctanGR(p) => p.pdf(x),
            ModelParams::Gaussian(p) => p.pdf(x),
            ModelParams::Rayleigh(p) => p.pdf(x),
            ModelParams::Laplace(p) => p.pdf(x),
        }
    }

    pub fn loglik(&self, data: &LossDataset) -> f64 {
        data.values().iter().map(|&x| self.ln_pdf(x)).sum()
    }

    /// Parameter summary in the style `omega=0.0707, eta=0.0324`.
    pub fn describe(&self, digits: usize) -> String {
        match self {
            ModelParams::ArctanGR(p) => {
                format!(
                    "omega={}, psi={}",
                    sig(p.omega(), digits),
                    sig(p.psi(), digits)
                )
            }
            ModelParams::Gaussian(p) => {
                format!(
                    "omega={}, eta={}",
                    sig(p.omega(), digits),
                    sig(p.eta(), digits)
                )
            }
            ModelParams::Rayleigh(p) => format!("psi={}", sig(p.psi(), digits)),
            ModelParams::Laplace(p) => {
                format!(
                    "omega={}, psi={}",
                    sig(p.omega(), digits),
                    sig(p.psi(), digits)
                )
            }
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct InformationCriteria {
    pub aic: f64,
    pub bic: f64,
    pub caic: f64,
    pub hqic: f64,
}

/// AIC, BIC, CAIC and HQIC for log-likelihood `loglik`, sample size `n` and
/// `r` free parameters:
///
/// ```text
/// AIC  = −2ℓ + 2r
/// BIC  = −2ℓ + r·ln n
/// CAIC = −2ℓ + 2nr/(n − r − 1)
/// HQIC = −2ℓ + 2r·ln(ln n)
/// ```
pub fn information_criteria(loglik: f64, n: usize, r: usize) -> Result<InformationCriteria> {
    if n < 3 {
        return Err(Error::InsufficientData {
            what: "information criteria",
            required: 3,
            got: n,
        });
    }
    if n <= r + 1 {
        return Err(Error::InsufficientData {
            what: "CAIC (needs n > r + 1)",
            required: r + 2,
            got: n,
        });
    }
    let (nf, rf) = (n as f64, r as f64);
    let deviance = -2.0 * loglik;
    Ok(InformationCriteria {
        aic: deviance + 2.0 * rf,
        bic: deviance + rf * nf.ln(),
        caic: deviance + 2.0 * nf * rf / (nf - rf - 1.0),
        hqic: deviance + 2.0 * rf * nf.ln().ln(),
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Diagnostics {
    pub iterations: usize,
    pub evaluations: usize,
    pub restarts: usize,
    pub converged: bool,
}

impl Diagnostics {
    fn closed_form() -> Self {
        Self {
            iterations: 0,
            evaluations: 0,
            restarts: 0,
            converged: true,
        }
    }
}

/// One fitted model.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct FitResult {
    pub model: ModelKind,
    pub params: ModelParams,
    pub loglik: f64,
    pub n: usize,
    pub r: usize,
    #[serde(flatten)]
    pub criteria: InformationCriteria,
    pub diagnostics: Diagnostics,
}

impl FitResult {
    fn new(params: ModelParams, data: &LossDataset, diagnostics: Diagnostics) -> Result<Self> {
        let model = params.kind();
        let loglik = params.loglik(data);
        if !loglik.is_finite() {
            return Err(Error::Numerical(format!(
                "{model} log-likelihood is not finite"
            )));
        }
        let r = model.param_count();
        Ok(Self {
            model,
            params,
            loglik,
            n: data.len(),
            r,
            criteria: information_criteria(loglik, data.len(), r)?,
            diagnostics,
        })
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("fit serializes") + "\n"
    }
}

/// Sum of Arctan-GR log-densities over the data.
pub fn agr_loglik(params: &ArctanGRParams, data: &LossDataset) -> f64 {
    data.values().iter().map(|&x| params.ln_pdf(x)).sum()
}

fn mean_abs_deviation(data: &LossDataset, center: f64) -> f64 {
    data.values()
        .iter()
        .map(|x| (x - center).abs())
        .sum::<f64>()
        / data.len() as f64
}

pub fn fit_gaussian(data: &LossDataset) -> Result<FitResult> {
    let s = data.describe();
    if s.sd == 0.0 {
        return Err(Error::Data("Gaussian fit needs non-zero variance".into()));
    }
    let params = GaussianParams::new(s.mean, s.sd)?;
    FitResult::new(
        ModelParams::Gaussian(params),
        data,
        Diagnostics::closed_form(),
    )
}

pub fn fit_rayleigh(data: &LossDataset) -> Result<FitResult> {
    if let Some(&bad) = data.values().iter().find(|&&x| x <= 0.0) {
        return Err(Error::Data(format!(
            "Rayleigh support is x > 0 but the data contain {bad}"
        )));
    }
    let sum_sq: f64 = data.values().iter().map(|x| x * x).sum();
    let params = RayleighParams::new((sum_sq / (2.0 * data.len() as f64)).sqrt())?;
    FitResult::new(
        ModelParams::Rayleigh(params),
        data,
        Diagnostics::closed_form(),
    )
}

pub fn fit_laplace(data: &LossDataset) -> Result<FitResult> {
    let median = data.quantile(0.5);
    let mad = mean_abs_deviation(data, median);
    if mad == 0.0 {
        return Err(Error::Data(
            "Laplace fit needs non-zero absolute deviation".into(),
        ));
    }
    let params = LaplaceParams::new(median, mad)?;
    FitResult::new(
        ModelParams::Laplace(params),
        data,
        Diagnostics::closed_form(),
    )
}

/// Multipliers of the data scale used for the starting `ψ` values.
pub const PSI_START_MULTIPLIERS: [f64; 3] = [0.5, 1.0, 2.0];
/// Number of best coarse starts that are refined to full precision.
pub const POLISHED_STARTS: usize = 3;
/// Simplex diameter at which the fit is declared converged, relative to the data scale.
pub const FIT_X_TOL: f64 = 1e-10;
const COARSE_X_TOL: f64 = 1e-6;

/// Maximum-likelihood Arctan-GR fit.
///
/// The search runs in `(ω/s, ln ψ/s)` coordinates with `s` the mean absolute
/// deviation of the data. Starts are every decile for `ω` crossed with
/// [`PSI_START_MULTIPLIERS`]`·s` for `ψ`. Every start gets a coarse simplex
/// search; the best [`POLISHED_STARTS`] are refined until the simplex
/// diameter is below [`FIT_X_TOL`].
pub fn fit_agr(data: &LossDataset) -> Result<FitResult> {
    let n = data.len();
    if n < 3 {
        return Err(Error::InsufficientData {
            what: "Arctan-GR fit",
            required: 3,
            got: n,
        });
    }
    let scale = mean_abs_deviation(data, data.mean());
    if scale == 0.0 {
        return Err(Error::Data(
            "Arctan-GR fit needs non-zero dispersion".into(),
        ));
    }

    let decode = |z: &[f64]| (z[0] * scale, z[1].exp() * scale);
    let objective = |z: &[f64]| {
        let (omega, psi) = decode(z);
        match ArctanGRParams::new(omega, psi) {
            Ok(p) => -agr_loglik(&p, data) / n as f64,
            Err(_) => f64::INFINITY,
        }
    };

    let starts: Vec<[f64; 2]> = (1..=9)
        .flat_map(|d| {
            let omega = data.quantile(d as f64 / 10.0);
            PSI_START_MULTIPLIERS.map(|m| [omega / scale, m.ln()])
        })
        .collect();

    let coarse: Vec<Minimum> = starts
        .par_iter()
        .map(|z0| {
            nelder_mead(
                objective,
                z0,
                NelderMead {
                    x_tol: COARSE_X_TOL,
                    max_iter: 2000,
                    initial_step: 0.1,
                },
            )
        })
        .collect();

    let mut ranked: Vec<usize> = (0..coarse.len()).collect();
    // ties resolved by lowest start index (sort is stable)
    ranked.sort_by(|&a, &b| coarse[a].value.total_cmp(&coarse[b].value));

    let polished: Vec<(usize, Minimum)> = ranked[..POLISHED_STARTS.min(ranked.len())]
        .par_iter()
        .map(|&i| {
            let m = nelder_mead(
                objective,
                &coarse[i].x,
                NelderMead {
                    x_tol: FIT_X_TOL,
                    max_iter: 10_000,
                    initial_step: 1e-3,
                },
            );
            (i, m)
        })
        .collect();

    let iterations = coarse.iter().map(|m| m.iterations).sum::<usize>()
        + polished.iter().map(|(_, m)| m.iterations).sum::<usize>();
    let evaluations = coarse.iter().map(|m| m.evaluations).sum::<usize>()
        + polished.iter().map(|(_, m)| m.evaluations).sum::<usize>();

    let best = polished
        .iter()
        .filter(|(_, m)| m.converged && m.value.is_finite())
        .min_by(|a, b| a.1.value.total_cmp(&b.1.value).then(a.0.cmp(&b.0)));
    let Some((_, best)) = best else {
        let diam = polished
            .iter()
            .map(|(_, m)| m.diameter)
            .fold(f64::INFINITY, f64::min);
        return Err(Error::NoConvergence(format!(
            "none of {} refined starts reached simplex diameter {FIT_X_TOL:e} \
             (smallest {diam:e}) after {iterations} iterations",
            polished.len()
        )));
    };
    // the reported optimum must not be beaten by any restart
    let no_worse = coarse
        .iter()
        .chain(polished.iter().map(|(_, m)| m))
        .all(|m| best.value <= m.value);

    let (omega, psi) = decode(&best.x);
    let params = ArctanGRParams::new(omega, psi)?;
    FitResult::new(
        ModelParams::ArctanGR(params),
        data,
        Diagnostics {
            iterations,
            evaluations,
            restarts: starts.len(),
            converged: no_worse,
        },
    )
}

pub fn fit_model(kind: ModelKind, data: &LossDataset) -> Result<FitResult> {
    match kind {
        ModelKind::ArctanGR => fit_agr(data),
        ModelKind::Gaussian => fit_gaussian(data),
        ModelKind::Rayleigh => fit_rayleigh(data),
        ModelKind::Laplace => fit_laplace(data),
    }
}

pub const CRITERIA: [&str; 5] = ["loglik", "aic", "bic", "caic", "hqic"];

/// Fits of several models on one dataset, with the winner per criterion.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ComparisonTable {
    pub dataset: String,
    pub n: usize,
    pub rows: Vec<FitResult>,
    /// Models that could not be fitted, with the reason.
    pub skipped: Vec<(ModelKind, String)>,
    /// Criterion → winning model; highest log-likelihood, lowest criteria.
    pub best_by: BTreeMap<String, ModelKind>,
}

impl ComparisonTable {
    pub fn new(dataset: impl Into<String>, n: usize, rows: Vec<FitResult>) -> Self {
        let mut best_by = BTreeMap::new();
        if !rows.is_empty() {
            for name in CRITERIA {
                let score = |f: &FitResult| match name {
                    "loglik" => -f.loglik,
                    "aic" => f.criteria.aic,
                    "bic" => f.criteria.bic,
                    "caic" => f.criteria.caic,
                    _ => f.criteria.hqic,
                };
                let winner = rows
                    .iter()
                    .enumerate()
                    .min_by(|a, b| score(a.1).total_cmp(&score(b.1)).then(a.0.cmp(&b.0)))
                    .map(|(_, f)| f.model)
                    .expect("non-empty");
                best_by.insert(name.to_string(), winner);
            }
        }
        Self {
            dataset: dataset.into(),
            n,
            rows,
            skipped: Vec::new(),
            best_by,
        }
    }

    pub fn row(&self, model: ModelKind) -> Option<&FitResult> {
        self.rows.iter().find(|r| r.model == model)
    }

    fn cells(&self, digits: usize) -> Vec<Vec<String>> {
        self.rows
            .iter()
            .map(|f| {
                vec![
                    f.model.label().to_string(),
                    f.params.describe(digits),
                    f.r.to_string(),
                    sig(f.loglik, digits),
                    sig(f.criteria.aic, digits),
                    sig(f.criteria.bic, digits),
                    sig(f.criteria.caic, digits),
                    sig(f.criteria.hqic, digits),
                ]
            })
            .collect()
    }

    pub fn to_csv(&self) -> Result<String> {
        csv_string(
            &[
                "model", "params", "r", "loglik", "aic", "bic", "caic", "hqic",
            ],
            &self.cells(crate::format::SIG_DIGITS),
        )
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("table serializes") + "\n"
    }

    pub fn to_table(&self) -> String {
        let mut out = fixed_width_table(
            &["Model", "Par.", "r", "LL", "AIC", "BIC", "CAIC", "HQIC"],
            &self.cells(crate::format::SIG_DIGITS),
        );
        for (criterion, model) in &self.best_by {
            out.push_str(&format!("best {criterion}: {}\n", model.label()));
        }
        for (model, reason) in &self.skipped {
            out.push_str(&format!("skipped {}: {reason}\n", model.label()));
        }
        out
    }
}

/// Fits all four models in a fixed order. A model whose support excludes the
/// data (Rayleigh with non-positive values) is listed under `skipped`; any
/// other failure is returned.
pub fn compare_models(data: &LossDataset) -> Result<ComparisonTable> {
    if data.is_empty() {
        return Err(Error::Data("dataset is empty".into()));
    }
    let mut rows = Vec::new();
    let mut skipped = Vec::new();
    for kind in ModelKind::ALL {
        match fit_model(kind, data) {
            Ok(f) => rows.push(f),
            Err(Error::Data(reason)) if kind == ModelKind::Rayleigh => skipped.push((kind, reason)),
            Err(e) => return Err(e),
        }
    }
    let mut table = ComparisonTable::new(data.name(), data.len(), rows);
    table.skipped = skipped;
    Ok(table)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn insurance() -> LossDataset {
        LossDataset::insurance()
    }

    #[test]
    fn criteria_from_table_rows() {
        let c = information_criteria(116.6856, 58, 2).unwrap();
        assert!((c.aic + 229.3712).abs() < 1e-4);
        assert!((c.caic + 229.1530).abs() < 1e-4);
        assert!((c.hqic + 227.7660).abs() < 1e-4);
        assert!((c.bic + 225.2504).abs() < 1e-4);
        let r = information_criteria(-54.5752, 58, 1).unwrap();
        assert!((r.aic - 111.1504).abs() < 1e-9);
        let z = information_criteria(0.0, 58, 0).unwrap();
        assert_eq!((z.aic, z.bic, z.caic, z.hqic), (0.0, 0.0, 0.0, 0.0));
    }

    #[test]
    fn criteria_preconditions() {
        assert!(information_criteria(1.0, 3, 2).is_err());
        assert!(information_criteria(1.0, 2, 0).is_err());
        assert!(information_criteria(1.0, 4, 2).is_ok());
    }

    #[test]
    fn loglik_single_point_and_translation() {
        let p = ArctanGRParams::new(0.3, 1.0).unwrap();
        let d = LossDataset::new("one", vec![0.3]).unwrap();
        assert!((agr_loglik(&p, &d) + 0.674_726_256_603_664_6).abs() < 1e-14);

        let data = LossDataset::new("d", vec![0.1, 0.5, -0.2, 1.3]).unwrap();
        let shifted =
            LossDataset::new("s", data.values().iter().map(|x| x + 2.0).collect()).unwrap();
        let p2 = ArctanGRParams::new(0.3 + 2.0, 1.0).unwrap();
        assert!((agr_loglik(&p, &data) - agr_loglik(&p2, &shifted)).abs() < 1e-12);
    }

    #[test]
    fn loglik_asymmetric_pair() {
        let p = ArctanGRParams::new(0.0, 1.0).unwrap();
        let lo = agr_loglik(&p, &LossDataset::new("l", vec![-1.0]).unwrap());
        let hi = agr_loglik(&p, &LossDataset::new("h", vec![1.0]).unwrap());
        assert!((lo + 1.484_856_753_574_906_5).abs() < 1e-13);
        assert!((hi + 1.961_980_865_488_538_2).abs() < 1e-13);
        let both = agr_loglik(&p, &LossDataset::new("b", vec![-1.0, 1.0]).unwrap());
        assert!((both + 3.446_837_619_063_444_7).abs() < 1e-13);
    }

    #[test]
    fn loglik_matches_expanded_form_above_location() {
        // all points at or above omega: only the first branch contributes
        let p = ArctanGRParams::new(0.05, 0.02).unwrap();
        let data = insurance();
        let (omega, psi) = (p.omega(), p.psi());
        let subset: Vec<f64> = data
            .values()
            .iter()
            .copied()
            .filter(|&x| x >= omega)
            .collect();
        let n = subset.len() as f64;
        let expanded = n * 2f64.ln()
            - subset.iter().map(|x| x - omega).sum::<f64>() / psi
            - n * std::f64::consts::PI.ln()
            - n * psi.ln()
            - subset
                .iter()
                .map(|x| (1.0 + (1.0 - 0.5 * (-(x - omega) / psi).exp()).powi(2)).ln())
                .sum::<f64>();
        let ours = agr_loglik(&p, &LossDataset::new("s", subset).unwrap());
        assert!((ours - expanded).abs() < 1e-9);
    }

    #[test]
    fn gaussian_row_of_insurance_table() {
        let f = fit_gaussian(&insurance()).unwrap();
        let ModelParams::Gaussian(g) = f.params else {
            panic!()
        };
        assert!((g.omega() - 0.0707).abs() < 1e-4);
        assert!((g.eta() - 0.0324).abs() < 1e-4);
        assert!((f.loglik - 116.6856).abs() < 1e-3);
        assert!((f.criteria.aic + 229.3711).abs() < 1e-3);
        assert!((f.criteria.bic + 225.2502).abs() < 1e-3);
        assert!((f.criteria.caic + 229.1529).abs() < 1e-3);
        assert!((f.criteria.hqic + 227.7660).abs() < 1e-3);
    }

    #[test]
    fn degenerate_data_errors() {
        let flat = LossDataset::new("flat", vec![1.0; 4]).unwrap();
        assert!(matches!(fit_gaussian(&flat), Err(Error::Data(_))));
        assert!(fit_laplace(&flat).is_err());
        assert!(fit_agr(&flat).is_err());
        let neg = LossDataset::new("neg", vec![-1.0, 2.0, 3.0, 4.0]).unwrap();
        assert!(matches!(fit_rayleigh(&neg), Err(Error::Data(_))));
        let two = LossDataset::new("two", vec![1.0, 2.0]).unwrap();
        assert!(matches!(
            fit_agr(&two),
            Err(Error::InsufficientData { required: 3, .. })
        ));
    }

    #[test]
    fn closed_form_baselines() {
        let d = LossDataset::new("d", vec![1.0, 2.0, 3.0, 4.0, 10.0]).unwrap();
        let ModelParams::Rayleigh(r) = fit_rayleigh(&d).unwrap().params else {
            panic!()
        };
        assert!((r.psi() - (130.0f64 / 10.0).sqrt()).abs() < 1e-14);
        let ModelParams::Laplace(l) = fit_laplace(&d).unwrap().params else {
            panic!()
        };
        assert_eq!(l.omega(), 3.0);
        assert!((l.psi() - 2.2).abs() < 1e-14);
    }

    #[test]
    fn comparison_on_insurance() {
        let table = compare_models(&insurance()).unwrap();
        assert_eq!(table.rows.len(), 4);
        assert_eq!(table.rows[0].model, ModelKind::ArctanGR);
        for f in &table.rows {
            assert!((f.params.loglik(&insurance()) - f.loglik).abs() < 1e-9);
        }
        assert_eq!(table.best_by.len(), 5);
        let agr = table.row(ModelKind::ArctanGR).unwrap();
        assert!(agr.diagnostics.converged);
        assert_eq!(agr.diagnostics.restarts, 27);
    }

    #[test]
    fn comparison_skips_rayleigh_for_negative_data() {
        let d = LossDataset::new("d", vec![-1.0, 0.5, 2.0, 3.5, 0.1, 1.2]).unwrap();
        let table = compare_models(&d).unwrap();
        assert_eq!(table.rows.len(), 3);
        assert_eq!(table.skipped.len(), 1);
        assert_eq!(table.skipped[0].0, ModelKind::Rayleigh);
    }

    #[test]
    fn model_ids_round_trip() {
        for m in ModelKind::ALL {
            assert_eq!(ModelKind::parse(m.id()), Some(m));
        }
        assert_eq!(ModelKind::parse("weibull"), None);
    }
}
