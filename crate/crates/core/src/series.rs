//! Series container, CSV ingestion, log returns, descriptive statistics and
//! the sample correlogram.

use std::path::Path;

use chrono::NaiveDate;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SeriesKind {
    Price,
    LogReturn,
    Residual,
    Other,
}

/// An ordered, finite, non-empty sequence of observations.
///
/// Labels, when present, are ISO `yyyy-mm-dd` date strings and must be
/// strictly increasing.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Series {
    name: String,
    kind: SeriesKind,
    values: Vec<f64>,
    labels: Option<Vec<String>>,
}

impl Series {
    pub fn new(name: impl Into<String>, kind: SeriesKind, values: Vec<f64>) -> Result<Self> {
        if values.is_empty() {
            return Err(Error::invalid("series is empty"));
        }
        if let Some(i) = values.iter().position(|v| !v.is_finite()) {
            return Err(Error::invalid(format!("non-finite value at index {i}")));
        }
        Ok(Self { name: name.into(), kind, values, labels: None })
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Result<Self> {
        if labels.len() != self.values.len() {
            return Err(Error::invalid(format!(
                "{} labels for {} values",
                labels.len(),
                self.values.len()
            )));
        }
        if let Some(w) = labels.windows(2).find(|w| w[0] >= w[1]) {
            return Err(Error::invalid(format!("labels not strictly increasing at `{}`", w[1])));
        }
        self.labels = Some(labels);
        Ok(self)
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn kind(&self) -> SeriesKind {
        self.kind
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    /// Same labels and name, new values and kind.
    pub(crate) fn derived(&self, name: impl Into<String>, kind: SeriesKind, values: Vec<f64>) -> Result<Series> {
        let n = values.len();
        let s = Series::new(name, kind, values)?;
        match &self.labels {
            Some(l) if l.len() >= n => s.with_labels(l[l.len() - n..].to_vec()),
            _ => Ok(s),
        }
    }

    pub fn mean(&self) -> f64 {
        mean(&self.values)
    }
}

pub(crate) fn mean(x: &[f64]) -> f64 {
    x.iter().sum::<f64>() / x.len() as f64
}

/// Header names of the columns to read. `date` is required; at least one
/// price column must be mapped.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ColumnMap {
    pub date: String,
    pub close: Option<String>,
    pub open: Option<String>,
    pub high: Option<String>,
    pub low: Option<String>,
}

impl Default for ColumnMap {
    fn default() -> Self {
        Self {
            date: "Date".into(),
            close: Some("Close".into()),
            open: None,
            high: None,
            low: None,
        }
    }
}

impl ColumnMap {
    pub fn ohlc() -> Self {
        Self {
            date: "Date".into(),
            close: Some("Close".into()),
            open: Some("Open".into()),
            high: Some("High".into()),
            low: Some("Low".into()),
        }
    }

    /// Mapped price columns in Close, Open, High, Low order.
    pub fn price_columns(&self) -> Vec<&str> {
        [&self.close, &self.open, &self.high, &self.low]
            .into_iter()
            .filter_map(|c| c.as_deref())
            .collect()
    }
}

/// Result of [`load_csv`]: one price series per mapped column, all sharing
/// the same ascending date labels.
#[derive(Debug, Clone)]
pub struct PriceTable {
    pub series: Vec<Series>,
    pub dropped_rows: usize,
}

impl PriceTable {
    pub fn get(&self, name: &str) -> Option<&Series> {
        self.series.iter().find(|s| s.name() == name)
    }
}

pub const DEFAULT_DATE_FORMAT: &str = "%Y-%m-%d";

/// Parses a number, stripping thousands separators, surrounding whitespace
/// and a leading currency sign.
pub fn parse_number(cell: &str) -> Option<f64> {
    let cleaned: String = cell.trim().trim_start_matches('$').chars().filter(|c| *c != ',').collect();
    let v: f64 = cleaned.trim().parse().ok()?;
    v.is_finite().then_some(v)
}

/// Loads mapped price columns from a headered CSV file. `date_format` is a
/// `strftime`-style pattern (default [`DEFAULT_DATE_FORMAT`]).
pub fn load_csv(path: impl AsRef<Path>, columns: &ColumnMap, date_format: &str) -> Result<PriceTable> {
    let path = path.as_ref();
    let file = std::fs::File::open(path).map_err(|source| Error::Io { path: path.to_path_buf(), source })?;
    read_csv(file, columns, date_format)
}

/// As [`load_csv`], reading from any byte source.
pub fn read_csv<R: std::io::Read>(reader: R, columns: &ColumnMap, date_format: &str) -> Result<PriceTable> {
    let mut rdr = csv::ReaderBuilder::new().has_headers(true).trim(csv::Trim::All).from_reader(reader);
    let headers = rdr.headers()?.clone();
    let find = |name: &str| {
        headers
            .iter()
            .position(|h| h == name)
            .ok_or_else(|| Error::MissingColumn(name.to_string()))
    };
    let date_idx = find(&columns.date)?;
    let names = columns.price_columns();
    if names.is_empty() {
        return Err(Error::invalid("no price column mapped"));
    }
    let price_idx: Vec<usize> = names.iter().map(|n| find(n)).collect::<Result<_>>()?;

    let mut rows: Vec<(NaiveDate, Vec<f64>)> = Vec::new();
    let mut dropped = 0;
    for record in rdr.records() {
        let record = record?;
        let date = record.get(date_idx).and_then(|d| NaiveDate::parse_from_str(d, date_format).ok());
        let prices: Option<Vec<f64>> =
            price_idx.iter().map(|&i| record.get(i).and_then(parse_number)).collect();
        match (date, prices) {
            (Some(d), Some(p)) => rows.push((d, p)),
            _ => dropped += 1,
        }
    }
    if rows.is_empty() {
        return Err(Error::NoRows);
    }
    rows.sort_by_key(|(d, _)| *d);
    if let Some(w) = rows.windows(2).find(|w| w[0].0 == w[1].0) {
        return Err(Error::DuplicateDate(w[0].0.format(DEFAULT_DATE_FORMAT).to_string()));
    }
    let labels: Vec<String> = rows.iter().map(|(d, _)| d.format(DEFAULT_DATE_FORMAT).to_string()).collect();
    let series = names
        .iter()
        .enumerate()
        .map(|(j, name)| {
            let values = rows.iter().map(|(_, p)| p[j]).collect();
            Series::new(*name, SeriesKind::Price, values)?.with_labels(labels.clone())
        })
        .collect::<Result<_>>()?;
    Ok(PriceTable { series, dropped_rows: dropped })
}

/// `r_t = ln(P_t / P_{t-1})`; the first label is dropped.
pub fn log_returns(prices: &Series) -> Result<Series> {
    if prices.kind() != SeriesKind::Price {
        return Err(Error::invalid("log returns need a price series"));
    }
    if prices.len() < 2 {
        return Err(Error::TooShort { required: 2, actual: prices.len() });
    }
    if let Some(i) = prices.values().iter().position(|p| *p <= 0.0) {
        return Err(Error::invalid(format!("non-positive price at index {i}")));
    }
    let r: Vec<f64> = prices.values().windows(2).map(|w| (w[1] / w[0]).ln()).collect();
    prices.derived(prices.name(), SeriesKind::LogReturn, r)
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SummaryStats {
    pub n: usize,
    pub mean: f64,
    /// Sample standard deviation (divisor n − 1).
    pub std_dev: f64,
    pub min: f64,
    pub max: f64,
    /// Moment skewness `m3 / m2^1.5`; `None` when the variance is zero.
    pub skewness: Option<f64>,
    /// Moment excess kurtosis `m4 / m2² − 3`; `None` when the variance is zero.
    pub excess_kurtosis: Option<f64>,
}

impl SummaryStats {
    pub fn skewness(&self) -> Result<f64> {
        self.skewness.ok_or_else(|| Error::ZeroVariance("skewness undefined".into()))
    }

    pub fn excess_kurtosis(&self) -> Result<f64> {
        self.excess_kurtosis.ok_or_else(|| Error::ZeroVariance("kurtosis undefined".into()))
    }
}

pub fn summary_stats(s: &Series) -> Result<SummaryStats> {
    moments(s.values())
}

pub(crate) fn moments(x: &[f64]) -> Result<SummaryStats> {
    let n = x.len();
    if n < 2 {
        return Err(Error::TooShort { required: 2, actual: n });
    }
    let nf = n as f64;
    let m = mean(x);
    let (mut m2, mut m3, mut m4) = (0.0, 0.0, 0.0);
    for v in x {
        let d = v - m;
        let d2 = d * d;
        m2 += d2;
        m3 += d2 * d;
        m4 += d2 * d2;
    }
    let ss = m2;
    m2 /= nf;
    m3 /= nf;
    m4 /= nf;
    let (skewness, excess_kurtosis) = if m2 > 0.0 {
        (Some(m3 / m2.powf(1.5)), Some(m4 / (m2 * m2) - 3.0))
    } else {
        (None, None)
    };
    let (min, max) = x.iter().fold((f64::INFINITY, f64::NEG_INFINITY), |(lo, hi), v| (lo.min(*v), hi.max(*v)));
    Ok(SummaryStats {
        n,
        // rounding can push the mean a hair outside [min, max] for constant input
        mean: m.clamp(min, max),
        std_dev: (ss / (nf - 1.0)).sqrt(),
        min,
        max,
        skewness,
        excess_kurtosis,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct CorrelogramRow {
    pub lag: usize,
    pub acf: f64,
    pub pacf: f64,
    pub conf_band: f64,
}

/// Biased sample autocorrelations `r_1..r_max_lag` (denominator n, full-sample mean).
pub fn acf(x: &[f64], max_lag: usize) -> Result<Vec<f64>> {
    let n = x.len();
    if max_lag >= n {
        return Err(Error::invalid(format!("max_lag {max_lag} must be below the length {n}")));
    }
    let m = mean(x);
    let dev: Vec<f64> = x.iter().map(|v| v - m).collect();
    let c0: f64 = dev.iter().map(|d| d * d).sum();
    if c0 <= 0.0 {
        return Err(Error::ZeroVariance("autocorrelation of a constant series".into()));
    }
    Ok((1..=max_lag)
        .map(|k| {
            let ck: f64 = dev[..n - k].iter().zip(&dev[k..]).map(|(a, b)| a * b).sum();
            ck / c0
        })
        .collect())
}

/// Partial autocorrelations from autocorrelations `r_1..r_m` by the
/// Durbin-Levinson recursion.
pub fn pacf_from_acf(r: &[f64]) -> Vec<f64> {
    let m = r.len();
    let mut out = Vec::with_capacity(m);
    let mut phi: Vec<f64> = Vec::with_capacity(m);
    for k in 0..m {
        let num = r[k] - phi.iter().enumerate().map(|(j, p)| p * r[k - 1 - j]).sum::<f64>();
        let den = 1.0 - phi.iter().enumerate().map(|(j, p)| p * r[j]).sum::<f64>();
        let kk = if den.abs() > 0.0 { num / den } else { 0.0 };
        let prev = phi.clone();
        for j in 0..k {
            phi[j] = prev[j] - kk * prev[k - 1 - j];
        }
        phi.push(kk);
        out.push(kk);
    }
    out
}

pub fn correlogram(s: &Series, max_lag: usize) -> Result<Vec<CorrelogramRow>> {
    let n = s.len();
    if max_lag == 0 || 2 * max_lag >= n {
        return Err(Error::invalid(format!("max_lag must be in 1..{}", n.div_ceil(2))));
    }
    let r = acf(s.values(), max_lag)?;
    let p = pacf_from_acf(&r);
    let band = 1.96 / (n as f64).sqrt();
    Ok(r.iter()
        .zip(&p)
        .enumerate()
        .map(|(i, (a, pa))| CorrelogramRow { lag: i + 1, acf: *a, pacf: *pa, conf_band: band })
        .collect())
}
