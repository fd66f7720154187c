//! Plot data export: histogram, box plot, fitted densities and risk curves
//! as plain tables any plotting tool can read.

use serde::Serialize;

use crate::dataset::LossDataset;
use crate::distributions::ArctanGRParams;
use crate::error::{Error, Result};
use crate::fit::{ComparisonTable, ModelKind, ModelParams};
use crate::format::{csv_string, sig6};
use crate::risk::{risk_curve, ConfidenceLevel, RiskReport};

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Histogram {
    /// `counts.len() + 1` strictly increasing edges.
    pub edges: Vec<f64>,
    pub counts: Vec<usize>,
}

impl Histogram {
    /// Equal-width bins over `[min, max]`; the last bin is closed on the right.
    pub fn new(data: &LossDataset, bins: usize) -> Result<Self> {
        if bins == 0 {
            return Err(Error::Domain {
                what: "bins",
                value: 0.0,
                domain: "positive integers",
            });
        }
        let s = data.sorted();
        let (lo, mut hi) = (s[0], s[s.len() - 1]);
        if hi <= lo {
            hi = lo + 1.0;
        }
        let width = (hi - lo) / bins as f64;
        let edges: Vec<f64> = (0..=bins)
            .map(|i| if i == bins { hi } else { lo + i as f64 * width })
            .collect();
        let mut counts = vec![0; bins];
        for &x in s {
            let i = (((x - lo) / width).floor() as usize).min(bins - 1);
            counts[i] += 1;
        }
        Ok(Self { edges, counts })
    }

    /// Freedman–Diaconis bin count `⌈range / (2·IQR·n^{−1/3})⌉`, at least 1.
    pub fn freedman_diaconis_bins(data: &LossDataset) -> usize {
        let iqr = data.quantile(0.75) - data.quantile(0.25);
        let s = data.sorted();
        let range = s[s.len() - 1] - s[0];
        if iqr <= 0.0 || range <= 0.0 {
            return 1;
        }
        let width = 2.0 * iqr / (data.len() as f64).cbrt();
        ((range / width).ceil() as usize).max(1)
    }
}

/// Five-number summary with Tukey fences at 1.5·IQR.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BoxPlot {
    pub min: f64,
    pub q1: f64,
    pub median: f64,
    pub q3: f64,
    pub max: f64,
    pub lower_whisker: f64,
    pub upper_whisker: f64,
    pub outliers: Vec<f64>,
}

impl BoxPlot {
    pub fn new(data: &LossDataset) -> Self {
        let s = data.sorted();
        let (q1, q3) = (data.quantile(0.25), data.quantile(0.75));
        let iqr = q3 - q1;
        let (lo_fence, hi_fence) = (q1 - 1.5 * iqr, q3 + 1.5 * iqr);
        let inside = s
            .iter()
            .copied()
            .filter(|&x| x >= lo_fence && x <= hi_fence);
        Self {
            min: s[0],
            q1,
            median: data.quantile(0.5),
            q3,
            max: s[s.len() - 1],
            lower_whisker: inside.clone().fold(f64::INFINITY, f64::min),
            upper_whisker: inside.fold(f64::NEG_INFINITY, f64::max),
            outliers: s
                .iter()
                .copied()
                .filter(|&x| x < lo_fence || x > hi_fence)
                .collect(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct DensityCurves {
    pub x: Vec<f64>,
    /// One column per model, aligned with `x`.
    pub columns: Vec<(ModelKind, Vec<f64>)>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct PlotBundle {
    pub dataset: String,
    pub histogram: Histogram,
    pub boxplot: BoxPlot,
    pub densities: DensityCurves,
    pub risk: RiskReport,
}

/// Number of points in the density grid.
pub const DENSITY_POINTS: usize = 401;

/// `α` grid of the exported risk curve: 0.51, 0.52, …, 0.99.
pub fn risk_alpha_grid() -> Vec<ConfidenceLevel> {
    (51..=99)
        .map(|k| ConfidenceLevel::new(k as f64 / 100.0).expect("grid inside (0.5, 1)"))
        .collect()
}

impl PlotBundle {
    /// Builds the bundle from a dataset and its fitted models. The risk curve
    /// uses the fitted Arctan-GR parameters.
    pub fn new(data: &LossDataset, fits: &ComparisonTable, bins: Option<usize>) -> Result<Self> {
        let bins = bins.unwrap_or_else(|| Histogram::freedman_diaconis_bins(data));
        let histogram = Histogram::new(data, bins)?;
        let boxplot = BoxPlot::new(data);

        let s = data.sorted();
        let (lo, hi) = (s[0], s[s.len() - 1]);
        let pad = 0.25 * (hi - lo).max(f64::EPSILON * lo.abs().max(1.0));
        let (x0, x1) = (lo - pad, hi + pad);
        let step = (x1 - x0) / (DENSITY_POINTS - 1) as f64;
        let x: Vec<f64> = (0..DENSITY_POINTS).map(|i| x0 + i as f64 * step).collect();
        let columns = fits
            .rows
            .iter()
            .map(|f| (f.model, x.iter().map(|&t| f.params.pdf(t)).collect()))
            .collect();

        let agr: ArctanGRParams = match fits.row(ModelKind::ArctanGR).map(|f| f.params) {
            Some(ModelParams::ArctanGR(p)) => p,
            _ => return Err(Error::Data("plot data needs an Arctan-GR fit".into())),
        };
        let risk = risk_curve(&agr, &risk_alpha_grid())?;

        Ok(Self {
            dataset: data.name().to_string(),
            histogram,
            boxplot,
            densities: DensityCurves { x, columns },
            risk,
        })
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("bundle serializes") + "\n"
    }

    /// CSV files of the bundle as `(file name, contents)` pairs.
    pub fn to_csv_files(&self) -> Result<Vec<(&'static str, String)>> {
        let h = &self.histogram;
        let hist_rows: Vec<Vec<String>> = (0..h.counts.len())
            .map(|i| {
                vec![
                    sig6(h.edges[i]),
                    sig6(h.edges[i + 1]),
                    h.counts[i].to_string(),
                ]
            })
            .collect();
        let hist = csv_string(&["lower", "upper", "count"], &hist_rows)?;

        let b = &self.boxplot;
        let mut box_rows: Vec<Vec<String>> = [
            ("min", b.min),
            ("lower_whisker", b.lower_whisker),
            ("q1", b.q1),
            ("median", b.median),
            ("q3", b.q3),
            ("upper_whisker", b.upper_whisker),
            ("max", b.max),
        ]
        .iter()
        .map(|(k, v)| vec![k.to_string(), sig6(*v)])
        .collect();
        box_rows.extend(b.outliers.iter().map(|v| vec!["outlier".into(), sig6(*v)]));
        let boxplot = csv_string(&["stat", "value"], &box_rows)?;

        let d = &self.densities;
        let mut header = vec!["x"];
        header.extend(d.columns.iter().map(|(m, _)| m.id()));
        let dens_rows: Vec<Vec<String>> = (0..d.x.len())
            .map(|i| {
                let mut row = vec![sig6(d.x[i])];
                row.extend(d.columns.iter().map(|(_, c)| format!("{:e}", c[i])));
                row
            })
            .collect();
        let densities = csv_string(&header, &dens_rows)?;

        Ok(vec![
            ("histogram.csv", hist),
            ("boxplot.csv", boxplot),
            ("density.csv", densities),
            ("risk.csv", self.risk.to_csv()?),
        ])
    }
}
