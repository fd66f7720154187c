//! Loss samples: ingestion, the embedded insurance fixture and descriptive
//! statistics.

use std::fmt;
use std::path::{Path, PathBuf};

use serde::Serialize;

use crate::error::{Error, Result};

/// Monthly first unemployment-insurance checks issued to former federal
/// employees, Maryland, July 2008 – April 2013, in reporting order.
pub const INSURANCE: [f64; 58] = [
    0.052, 0.033, 0.039, 0.050, 0.029, 0.052, 0.060, 0.032, 0.057, 0.064, //
    0.061, 0.064, 0.041, 0.036, 0.050, 0.053, 0.061, 0.068, 0.060, 0.050, //
    0.064, 0.057, 0.061, 0.059, 0.069, 0.070, 0.137, 0.170, 0.100, 0.090, //
    0.222, 0.109, 0.068, 0.063, 0.056, 0.090, 0.074, 0.095, 0.114, 0.133, //
    0.066, 0.075, 0.072, 0.054, 0.057, 0.052, 0.066, 0.069, 0.083, 0.044, //
    0.060, 0.080, 0.058, 0.080, 0.080, 0.052, 0.065, 0.073,
];

pub const EMBEDDED_INSURANCE: &str = "embedded:insurance";

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Source {
    Embedded(String),
    File(PathBuf),
    Memory,
}

impl fmt::Display for Source {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Source::Embedded(name) => write!(f, "embedded:{name}"),
            Source::File(path) => write!(f, "{}", path.display()),
            Source::Memory => f.write_str("memory"),
        }
    }
}

/// An ordered sample of finite losses.
#[derive(Debug, Clone, PartialEq)]
pub struct LossDataset {
    name: String,
    source: Source,
    values: Vec<f64>,
    sorted: Vec<f64>,
}

impl LossDataset {
    pub fn new(name: impl Into<String>, values: Vec<f64>) -> Result<Self> {
        Self::with_source(name, Source::Memory, values)
    }

    fn with_source(name: impl Into<String>, source: Source, values: Vec<f64>) -> Result<Self> {
        if values.is_empty() {
            return Err(Error::Data("dataset is empty".into()));
        }
        if let Some(i) = values.iter().position(|v| !v.is_finite()) {
            return Err(Error::Data(format!(
                "value {} at index {i} is not finite",
                values[i]
            )));
        }
        let mut sorted = values.clone();
        sorted.sort_by(f64::total_cmp);
        Ok(Self {
            name: name.into(),
            source,
            values,
            sorted,
        })
    }

    pub fn insurance() -> Self {
        Self::with_source(
            "insurance",
            Source::Embedded("insurance".into()),
            INSURANCE.to_vec(),
        )
        .expect("fixture is valid")
    }

    /// Loads `embedded:<name>` or a file path.
    pub fn load(spec: &str) -> Result<Self> {
        match spec.strip_prefix("embedded:") {
            Some("insurance") => Ok(Self::insurance()),
            Some(other) => Err(Error::Data(format!("unknown embedded dataset `{other}`"))),
            None => Self::from_path(spec),
        }
    }

    pub fn from_path(path: impl AsRef<Path>) -> Result<Self> {
        let path = path.as_ref();
        let text = std::fs::read_to_string(path)
            .map_err(|e| Error::Data(format!("cannot read {}: {e}", path.display())))?;
        let name = path
            .file_stem()
            .map(|s| s.to_string_lossy().into_owned())
            .unwrap_or_else(|| "data".into());
        let values = parse_column(&text)?;
        Self::with_source(name, Source::File(path.to_path_buf()), values)
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn source(&self) -> &Source {
        &self.source
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn sorted(&self) -> &[f64] {
        &self.sorted
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn mean(&self) -> f64 {
        self.values.iter().sum::<f64>() / self.len() as f64
    }

    /// Linear-interpolation order-statistic quantile: with 1-based
    /// `h = (n − 1)·p + 1`, returns `x₍⌊h⌋₎ + (h − ⌊h⌋)·(x₍⌊h⌋+1₎ − x₍⌊h⌋₎)`.
    pub fn quantile(&self, p: f64) -> f64 {
        sorted_quantile(&self.sorted, p)
    }

    pub fn describe(&self) -> Summary {
        let s = &self.sorted;
        let n = s.len();
        let mean = self.mean();
        let var = self.values.iter().map(|x| (x - mean).powi(2)).sum::<f64>() / n as f64;
        let q = |p| sorted_quantile(s, p);
        let iqr = q(0.75) - q(0.25);
        let (bowley, moors) = if iqr > 0.0 {
            (
                Some((q(0.25) + q(0.75) - 2.0 * q(0.5)) / iqr),
                Some((q(0.875) + q(0.375) - q(0.625) - q(0.125)) / iqr),
            )
        } else {
            (None, None)
        };
        Summary {
            n,
            mean,
            median: q(0.5),
            sd: var.sqrt(),
            min: s[0],
            max: s[n - 1],
            q1: q(0.25),
            q3: q(0.75),
            bowley_skewness: bowley,
            moors_kurtosis: moors,
        }
    }
}

pub(crate) fn sorted_quantile(sorted: &[f64], p: f64) -> f64 {
    let n = sorted.len();
    if n == 1 {
        return sorted[0];
    }
    let h = (n - 1) as f64 * p.clamp(0.0, 1.0);
    let lo = h.floor() as usize;
    if lo + 1 >= n {
        return sorted[n - 1];
    }
    sorted[lo] + (h - lo as f64) * (sorted[lo + 1] - sorted[lo])
}

fn parse_column(text: &str) -> Result<Vec<f64>> {
    let mut values = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line_no = i + 1;
        let line = raw.trim_end_matches('\r').trim();
        if line.is_empty() {
            continue;
        }
        let field = line
            .strip_prefix('"')
            .and_then(|l| l.strip_suffix('"'))
            .unwrap_or(line)
            .trim();
        match field.parse::<f64>() {
            Ok(v) if v.is_finite() => values.push(v),
            Ok(v) => {
                return Err(Error::Data(format!(
                    "line {line_no}: value {v} is not finite"
                )))
            }
            // a non-numeric first line is a header
            Err(_) if values.is_empty() && line_no == 1 => {}
            Err(_) => {
                return Err(Error::Data(format!(
                    "line {line_no}: cannot parse `{line}` as a number"
                )))
            }
        }
    }
    if values.is_empty() {
        return Err(Error::Data("no numeric values found".into()));
    }
    Ok(values)
}

/// Descriptive statistics of a sample; quartiles use [`LossDataset::quantile`].
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Summary {
    pub n: usize,
    pub mean: f64,
    pub median: f64,
    /// Population standard deviation.
    pub sd: f64,
    pub min: f64,
    pub max: f64,
    pub q1: f64,
    pub q3: f64,
    /// `None` when the interquartile range is zero.
    pub bowley_skewness: Option<f64>,
    pub moors_kurtosis: Option<f64>,
}
