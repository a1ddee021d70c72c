//! ARMA(p, q) estimation by exact Gaussian maximum likelihood.
//!
//! The model is written around the process mean μ:
//!
//! ```text
//! (X_t − μ) = Σ φ_i (X_{t−i} − μ) + ε_t + Σ θ_j ε_{t−j},   ε_t ~ N(0, σ²)
//! ```
//!
//! The likelihood comes from the prediction-error decomposition of a Kalman
//! filter on the Harvey state-space form, started from the exact stationary
//! state covariance, so every order has a well-defined likelihood (no
//! conditioning on pre-sample values). σ² is concentrated out.
//!
//! During optimization the AR and MA polynomials are parameterized by their
//! partial autocorrelations mapped through `tanh`, which keeps the AR part
//! stationary and the MA part invertible for every real parameter vector.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::{lag_polynomial_roots, Matrix};
use crate::optim::{delta_method_std_errors, minimize, OptimOptions};
use crate::series::{mean, Series, SeriesKind};

pub const MAX_ORDER: usize = 24;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ArmaSpec {
    pub p: usize,
    pub q: usize,
    pub include_mean: bool,
    /// `false` entries pin the matching AR coefficient to zero.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub ar_mask: Option<Vec<bool>>,
    /// `false` entries pin the matching MA coefficient to zero.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub ma_mask: Option<Vec<bool>>,
}

impl ArmaSpec {
    pub fn new(p: usize, q: usize, include_mean: bool) -> Result<Self> {
        if p > MAX_ORDER || q > MAX_ORDER {
            return Err(Error::invalid(format!("ARMA orders are limited to {MAX_ORDER}")));
        }
        Ok(Self { p, q, include_mean, ar_mask: None, ma_mask: None })
    }

    /// Keeps only the listed AR lags (1-based) free.
    pub fn with_ar_lags(mut self, lags: &[usize]) -> Result<Self> {
        self.ar_mask = Some(lag_mask(self.p, lags)?);
        Ok(self)
    }

    /// Keeps only the listed MA lags (1-based) free.
    pub fn with_ma_lags(mut self, lags: &[usize]) -> Result<Self> {
        self.ma_mask = Some(lag_mask(self.q, lags)?);
        Ok(self)
    }

    fn is_subset(&self) -> bool {
        let partial = |m: &Option<Vec<bool>>| m.as_ref().is_some_and(|m| m.iter().any(|f| !f));
        partial(&self.ar_mask) || partial(&self.ma_mask)
    }

    fn ar_free(&self, i: usize) -> bool {
        self.ar_mask.as_ref().is_none_or(|m| m[i])
    }

    fn ma_free(&self, j: usize) -> bool {
        self.ma_mask.as_ref().is_none_or(|m| m[j])
    }

    /// Number of estimated parameters including σ².
    pub fn n_params(&self) -> usize {
        let ar = (0..self.p).filter(|&i| self.ar_free(i)).count();
        let ma = (0..self.q).filter(|&j| self.ma_free(j)).count();
        ar + ma + usize::from(self.include_mean) + 1
    }
}

impl fmt::Display for ArmaSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ARMA({},{})", self.p, self.q)
    }
}

fn lag_mask(order: usize, lags: &[usize]) -> Result<Vec<bool>> {
    let mut mask = vec![false; order];
    for &l in lags {
        if l == 0 || l > order {
            return Err(Error::invalid(format!("lag {l} outside 1..={order}")));
        }
        mask[l - 1] = true;
    }
    Ok(mask)
}

/// A fully specified ARMA process.
#[derive(Debug, Clone, PartialEq)]
pub struct ArmaModel {
    pub mean: f64,
    pub ar: Vec<f64>,
    pub ma: Vec<f64>,
    pub sigma2: f64,
}

impl ArmaModel {
    pub fn new(mean: f64, ar: Vec<f64>, ma: Vec<f64>, sigma2: f64) -> Self {
        Self { mean, ar, ma, sigma2 }
    }

    pub fn is_stationary(&self) -> bool {
        roots_outside_unit_circle(&self.ar, 0.0)
    }

    pub fn is_invertible(&self) -> bool {
        let neg: Vec<f64> = self.ma.iter().map(|t| -t).collect();
        roots_outside_unit_circle(&neg, 0.0)
    }

    /// ψ-weights `ψ_0 .. ψ_{h−1}` of the MA(∞) representation.
    pub fn psi_weights(&self, h: usize) -> Vec<f64> {
        let mut psi = Vec::with_capacity(h);
        for j in 0..h {
            if j == 0 {
                psi.push(1.0);
                continue;
            }
            let mut v = self.ma.get(j - 1).copied().unwrap_or(0.0);
            for (i, phi) in self.ar.iter().enumerate().take(j) {
                v += phi * psi[j - 1 - i];
            }
            psi.push(v);
        }
        psi
    }

    fn state_dim(&self) -> usize {
        self.ar.len().max(self.ma.len() + 1)
    }

    /// Kalman filter with unit innovation variance. Returns innovations `v_t`
    /// and their scaled variances `F_t` (true variance is `σ²·F_t`).
    pub(crate) fn filter(&self, data: &[f64]) -> Result<(Vec<f64>, Vec<f64>)> {
        let r = self.state_dim();
        let mut phi = vec![0.0; r];
        phi[..self.ar.len()].copy_from_slice(&self.ar);
        let mut rvec = vec![0.0; r];
        rvec[0] = 1.0;
        rvec[1..=self.ma.len()].copy_from_slice(&self.ma);

        let mut p = stationary_state_cov(&phi, &rvec)?;
        let mut a = vec![0.0; r];
        let mut innov = Vec::with_capacity(data.len());
        let mut fvar = Vec::with_capacity(data.len());
        let mut steady = false;
        let mut tp = Matrix::zeros(r, r);
        for &x in data {
            let f = p[(0, 0)];
            if !(f > 0.0) || !f.is_finite() {
                return Err(Error::Singular("non-positive prediction variance".into()));
            }
            let v = x - self.mean - a[0];
            innov.push(v);
            fvar.push(f);
            // (T·P)_{ij} = φ_i P_{0j} + P_{i+1,j}
            for i in 0..r {
                for j in 0..r {
                    let below = if i + 1 < r { p[(i + 1, j)] } else { 0.0 };
                    tp[(i, j)] = phi[i] * p[(0, j)] + below;
                }
            }
            let k: Vec<f64> = (0..r).map(|i| tp[(i, 0)] / f).collect();
            let a0 = a[0];
            for i in 0..r {
                let below = if i + 1 < r { a[i + 1] } else { 0.0 };
                a[i] = phi[i] * a0 + below + k[i] * v;
            }
            if !steady {
                let mut next = Matrix::zeros(r, r);
                let mut change = 0.0f64;
                for i in 0..r {
                    for j in 0..r {
                        let right = if j + 1 < r { tp[(i, j + 1)] } else { 0.0 };
                        let val = tp[(i, 0)] * phi[j] + right + rvec[i] * rvec[j] - k[i] * k[j] * f;
                        change = change.max((val - p[(i, j)]).abs());
                        next[(i, j)] = val;
                    }
                }
                p = next;
                steady = change < 1e-15;
            }
        }
        Ok((innov, fvar))
    }

    /// One-step-ahead prediction errors of `data` under this model.
    pub fn prediction_errors(&self, data: &[f64]) -> Result<Vec<f64>> {
        Ok(self.filter(data)?.0)
    }

    /// Exact Gaussian log-likelihood of `data` under this model.
    pub fn log_likelihood(&self, data: &[f64]) -> Result<f64> {
        let (v, f) = self.filter(data)?;
        let s2 = self.sigma2;
        Ok(-0.5
            * v.iter()
                .zip(&f)
                .map(|(vi, fi)| (2.0 * std::f64::consts::PI * s2 * fi).ln() + vi * vi / (s2 * fi))
                .sum::<f64>())
    }

    /// Point forecasts from the ARMA recursion with future innovations set to
    /// zero, plus ψ-weight standard errors. `history` are observed values and
    /// `innovations` the matching one-step residuals (most recent last).
    pub fn forecast(&self, history: &[f64], innovations: &[f64], h: usize) -> ForecastPath {
        let p = self.ar.len();
        let q = self.ma.len();
        let mut dev: Vec<f64> = history.iter().rev().take(p).rev().map(|x| x - self.mean).collect();
        let past_e: Vec<f64> = innovations.iter().rev().take(q).rev().copied().collect();
        let mut point = Vec::with_capacity(h);
        for step in 1..=h {
            let mut v = 0.0;
            for (i, phi) in self.ar.iter().enumerate() {
                let idx = dev.len() as isize - 1 - i as isize;
                if idx >= 0 {
                    v += phi * dev[idx as usize];
                }
            }
            for j in step..=q {
                // θ_j multiplies ε_{T+step−j}, which is observed when j ≥ step
                let idx = past_e.len() as isize - 1 - (j - step) as isize;
                if idx >= 0 {
                    v += self.ma[j - 1] * past_e[idx as usize];
                }
            }
            dev.push(v);
            point.push(self.mean + v);
        }
        let psi = self.psi_weights(h);
        let mut acc = 0.0;
        let std_err = psi
            .iter()
            .map(|w| {
                acc += w * w;
                (self.sigma2 * acc).sqrt()
            })
            .collect();
        ForecastPath { horizon: h, point, std_err, psi }
    }
}

fn roots_outside_unit_circle(coefs: &[f64], margin: f64) -> bool {
    match lag_polynomial_roots(coefs) {
        Ok(roots) => roots.iter().all(|z| z.norm() > 1.0 + margin),
        Err(_) => false,
    }
}

/// Solves `P = T P Tᵀ + R Rᵀ` for the companion transition `T` by doubling.
fn stationary_state_cov(phi: &[f64], rvec: &[f64]) -> Result<Matrix> {
    let r = phi.len();
    let mut t = Matrix::zeros(r, r);
    for i in 0..r {
        t[(i, 0)] = phi[i];
        if i + 1 < r {
            t[(i, i + 1)] = 1.0;
        }
    }
    let mut p = Matrix::zeros(r, r);
    for i in 0..r {
        for j in 0..r {
            p[(i, j)] = rvec[i] * rvec[j];
        }
    }
    let mut a = t;
    for _ in 0..64 {
        let apa = a.matmul(&p).matmul(&a.transpose());
        p = p.add(&apa);
        a = a.matmul(&a);
        let norm = a.max_abs();
        if !norm.is_finite() {
            return Err(Error::invalid("AR part is not stationary"));
        }
        if norm < 1e-17 {
            return Ok(p);
        }
    }
    Err(Error::invalid("AR part is not stationary"))
}

/// Maps unconstrained values to coefficients of a stationary AR polynomial
/// through partial autocorrelations `tanh(u_k)`.
pub fn pacf_to_coefs(u: &[f64]) -> Vec<f64> {
    let mut phi: Vec<f64> = Vec::with_capacity(u.len());
    for (k, uk) in u.iter().enumerate() {
        let r = uk.tanh();
        let prev = phi.clone();
        for j in 0..k {
            phi[j] = prev[j] - r * prev[k - 1 - j];
        }
        phi.push(r);
    }
    phi
}

/// Inverse of [`pacf_to_coefs`]; `None` if the polynomial is not stationary.
pub fn coefs_to_pacf(phi: &[f64]) -> Option<Vec<f64>> {
    let mut cur = phi.to_vec();
    let mut out = vec![0.0; phi.len()];
    for k in (0..phi.len()).rev() {
        let r = cur[k];
        if r.abs() >= 1.0 {
            return None;
        }
        out[k] = r.atanh();
        let denom = 1.0 - r * r;
        let prev: Vec<f64> = (0..k).map(|j| (cur[j] + r * cur[k - 1 - j]) / denom).collect();
        cur = prev;
    }
    Some(out)
}

/// Multi-step forecast with ψ-weight standard errors.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ForecastPath {
    pub horizon: usize,
    pub point: Vec<f64>,
    pub std_err: Vec<f64>,
    pub psi: Vec<f64>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Coefficient {
    pub name: String,
    pub value: f64,
    pub std_error: Option<f64>,
}

#[derive(Debug, Clone)]
pub struct ArmaFit {
    pub spec: ArmaSpec,
    pub mean_c: f64,
    pub ar: Vec<f64>,
    pub ma: Vec<f64>,
    pub sigma2: f64,
    /// Estimated coefficients (mean, then free AR, then free MA) with
    /// standard errors from the inverse numerical Hessian.
    pub coefficients: Vec<Coefficient>,
    pub log_lik: f64,
    pub aic: f64,
    pub bic: f64,
    pub residuals: Series,
    pub n: usize,
    pub converged: bool,
    data: Vec<f64>,
}

impl ArmaFit {
    pub fn model(&self) -> ArmaModel {
        ArmaModel::new(self.mean_c, self.ar.clone(), self.ma.clone(), self.sigma2)
    }

    pub fn n_params(&self) -> usize {
        self.spec.n_params()
    }

    pub fn forecast(&self, h: usize) -> Result<ForecastPath> {
        forecast(self, h)
    }

    pub fn to_record(&self) -> ArmaFitRecord {
        ArmaFitRecord {
            p: self.spec.p,
            q: self.spec.q,
            include_mean: self.spec.include_mean,
            coefficients: self.coefficients.clone(),
            sigma2: self.sigma2,
            log_lik: self.log_lik,
            aic: self.aic,
            bic: self.bic,
            n: self.n,
        }
    }
}

/// Serialized form of an [`ArmaFit`].
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ArmaFitRecord {
    pub p: usize,
    pub q: usize,
    pub include_mean: bool,
    pub coefficients: Vec<Coefficient>,
    pub sigma2: f64,
    pub log_lik: f64,
    pub aic: f64,
    pub bic: f64,
    pub n: usize,
}

impl ArmaFitRecord {
    pub fn coefficient(&self, name: &str) -> Option<f64> {
        self.coefficients.iter().find(|c| c.name == name).map(|c| c.value)
    }
}

#[derive(Debug, Clone)]
pub struct ArmaOptions {
    pub optim: OptimOptions,
}

impl Default for ArmaOptions {
    fn default() -> Self {
        Self { optim: OptimOptions::default() }
    }
}

impl ArmaOptions {
    pub fn with_seed(seed: u64) -> Self {
        Self { optim: OptimOptions { seed, ..OptimOptions::default() } }
    }
}

struct Layout<'a> {
    spec: &'a ArmaSpec,
    free_ar: Vec<usize>,
    free_ma: Vec<usize>,
}

impl<'a> Layout<'a> {
    fn new(spec: &'a ArmaSpec) -> Self {
        Self {
            spec,
            free_ar: (0..spec.p).filter(|&i| spec.ar_free(i)).collect(),
            free_ma: (0..spec.q).filter(|&j| spec.ma_free(j)).collect(),
        }
    }

    fn len(&self) -> usize {
        usize::from(self.spec.include_mean) + self.free_ar.len() + self.free_ma.len()
    }

    /// Unconstrained vector → (mean, ar, ma). Returns `None` for subset
    /// models outside the stationary/invertible region.
    fn natural(&self, u: &[f64]) -> Option<(f64, Vec<f64>, Vec<f64>)> {
        let mut i = 0;
        let mean = if self.spec.include_mean {
            i = 1;
            u[0]
        } else {
            0.0
        };
        let ua = &u[i..i + self.free_ar.len()];
        let um = &u[i + self.free_ar.len()..];
        if self.spec.is_subset() {
            let mut ar = vec![0.0; self.spec.p];
            for (k, &idx) in self.free_ar.iter().enumerate() {
                ar[idx] = ua[k];
            }
            let mut ma = vec![0.0; self.spec.q];
            for (k, &idx) in self.free_ma.iter().enumerate() {
                ma[idx] = um[k];
            }
            let neg: Vec<f64> = ma.iter().map(|t| -t).collect();
            if !roots_outside_unit_circle(&ar, 1e-6) || !roots_outside_unit_circle(&neg, 1e-6) {
                return None;
            }
            Some((mean, ar, ma))
        } else {
            let ar = pacf_to_coefs(ua);
            let ma = pacf_to_coefs(um).into_iter().map(|v| -v).collect();
            Some((mean, ar, ma))
        }
    }

    fn flat(&self, u: &[f64]) -> Option<Vec<f64>> {
        let (m, ar, ma) = self.natural(u)?;
        let mut out = Vec::with_capacity(self.len());
        if self.spec.include_mean {
            out.push(m);
        }
        out.extend(self.free_ar.iter().map(|&i| ar[i]));
        out.extend(self.free_ma.iter().map(|&j| ma[j]));
        Some(out)
    }

    fn names(&self) -> Vec<String> {
        let mut names = Vec::new();
        if self.spec.include_mean {
            names.push("intercept".to_string());
        }
        names.extend(self.free_ar.iter().map(|i| format!("ar{}", i + 1)));
        names.extend(self.free_ma.iter().map(|j| format!("ma{}", j + 1)));
        names
    }
}

/// Concentrated log-likelihood (σ² profiled out) and the matching σ̂².
fn concentrated(mean: f64, ar: &[f64], ma: &[f64], data: &[f64]) -> Option<(f64, f64)> {
    let model = ArmaModel::new(mean, ar.to_vec(), ma.to_vec(), 1.0);
    let (v, f) = model.filter(data).ok()?;
    let n = data.len() as f64;
    let s2 = v.iter().zip(&f).map(|(vi, fi)| vi * vi / fi).sum::<f64>() / n;
    if !(s2 > 0.0) || !s2.is_finite() {
        return None;
    }
    let sum_ln_f: f64 = f.iter().map(|fi| fi.ln()).sum();
    let ll = -0.5 * n * ((2.0 * std::f64::consts::PI).ln() + 1.0 + s2.ln()) - 0.5 * sum_ln_f;
    Some((ll, s2))
}

pub fn fit_arma(s: &Series, spec: &ArmaSpec) -> Result<ArmaFit> {
    fit_arma_with(s, spec, &ArmaOptions::default())
}

pub fn fit_arma_with(s: &Series, spec: &ArmaSpec, opts: &ArmaOptions) -> Result<ArmaFit> {
    if spec.p > MAX_ORDER || spec.q > MAX_ORDER {
        return Err(Error::invalid(format!("ARMA orders are limited to {MAX_ORDER}")));
    }
    let n = s.len();
    let need = 10 * (spec.p + spec.q + 1) + 1;
    if n < need {
        return Err(Error::TooShort { required: need, actual: n });
    }
    let raw = s.values();
    let center = mean(raw);
    let scale = (raw.iter().map(|v| (v - center).powi(2)).sum::<f64>() / n as f64).sqrt();
    if scale <= 0.0 {
        return Err(Error::ZeroVariance("cannot fit ARMA to a constant series".into()));
    }
    // fit on the standardized series; mean and σ² are mapped back afterwards
    let z: Vec<f64> = raw.iter().map(|v| (v - center) / scale).collect();
    let layout = Layout::new(spec);
    let objective = |u: &[f64]| -> f64 {
        match layout.natural(u).and_then(|(m, ar, ma)| concentrated(m, &ar, &ma, &z)) {
            Some((ll, _)) => -ll,
            None => f64::INFINITY,
        }
    };
    let u0 = vec![0.0; layout.len()];
    let res = minimize(objective, &u0, &opts.optim);
    if !res.f.is_finite() {
        return Err(Error::NonConvergence(format!("{spec}: no finite likelihood found")));
    }
    if !res.converged {
        return Err(Error::NonConvergence(format!("{spec}: optimizer did not settle after restarts")));
    }
    if !spec.is_subset() {
        let start = usize::from(spec.include_mean);
        if res.x[start..start + layout.free_ar.len()].iter().any(|u| u.tanh().abs() > 1.0 - 1e-7) {
            return Err(Error::AtBoundary(format!("{spec}: AR part on the stationarity boundary")));
        }
    }
    let (m_std, ar, ma) = layout.natural(&res.x).expect("optimum is admissible");
    let (_, s2_std) = concentrated(m_std, &ar, &ma, &z).expect("optimum is admissible");

    let se_std = delta_method_std_errors(
        objective,
        |u| layout.flat(u).unwrap_or_else(|| vec![f64::NAN; layout.len()]),
        &res.x,
    );
    let mean_c = if spec.include_mean { center + scale * m_std } else { 0.0 };
    let sigma2 = s2_std * scale * scale;
    let model = ArmaModel::new(mean_c, ar.clone(), ma.clone(), sigma2);
    let (innov, _) = model.filter(raw)?;
    let log_lik = model.log_likelihood(raw)?;

    let flat = layout.flat(&res.x).expect("optimum is admissible");
    let coefficients = layout
        .names()
        .into_iter()
        .enumerate()
        .map(|(i, name)| {
            let se = se_std.as_ref().map(|v| v[i]).filter(|v| v.is_finite());
            let (value, std_error) = if spec.include_mean && i == 0 {
                (mean_c, se.map(|v| v * scale))
            } else {
                (flat[i], se)
            };
            Coefficient { name, value, std_error }
        })
        .collect();
    let k = spec.n_params() as f64;
    let residuals = s.derived(format!("{} residuals", s.name()), SeriesKind::Residual, innov)?;
    Ok(ArmaFit {
        spec: spec.clone(),
        mean_c,
        ar,
        ma,
        sigma2,
        coefficients,
        log_lik,
        aic: -2.0 * log_lik + 2.0 * k,
        bic: -2.0 * log_lik + k * (n as f64).ln(),
        residuals,
        n,
        converged: res.converged,
        data: raw.to_vec(),
    })
}

/// One-step-ahead prediction errors of a fitted model.
pub fn residuals(fit: &ArmaFit) -> Series {
    fit.residuals.clone()
}

pub fn forecast(fit: &ArmaFit, h: usize) -> Result<ForecastPath> {
    if h == 0 || h > 500 {
        return Err(Error::invalid("forecast horizon must be in 1..=500"));
    }
    Ok(fit.model().forecast(&fit.data, fit.residuals.values(), h))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Criterion {
    Aic,
    Bic,
}

impl std::str::FromStr for Criterion {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "aic" => Ok(Criterion::Aic),
            "bic" => Ok(Criterion::Bic),
            other => Err(Error::invalid(format!("unknown criterion `{other}`"))),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct OrderScore {
    pub p: usize,
    pub q: usize,
    pub aic: Option<f64>,
    pub bic: Option<f64>,
    pub log_lik: Option<f64>,
    /// Why the cell was excluded, if it was.
    pub failure: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct OrderSelection {
    pub best: ArmaSpec,
    pub criterion: Criterion,
    pub table: Vec<OrderScore>,
}

pub fn select_order(s: &Series, p_max: usize, q_max: usize, criterion: Criterion) -> Result<OrderSelection> {
    select_order_with(s, p_max, q_max, criterion, true, &ArmaOptions::default())
}

pub fn select_order_with(
    s: &Series,
    p_max: usize,
    q_max: usize,
    criterion: Criterion,
    include_mean: bool,
    opts: &ArmaOptions,
) -> Result<OrderSelection> {
    let mut table = Vec::new();
    for p in 0..=p_max {
        for q in 0..=q_max {
            let spec = ArmaSpec::new(p, q, include_mean)?;
            let score = match fit_arma_with(s, &spec, opts) {
                Ok(fit) => OrderScore {
                    p,
                    q,
                    aic: Some(fit.aic),
                    bic: Some(fit.bic),
                    log_lik: Some(fit.log_lik),
                    failure: None,
                },
                Err(e) => OrderScore { p, q, aic: None, bic: None, log_lik: None, failure: Some(e.to_string()) },
            };
            table.push(score);
        }
    }
    let score_of = |c: &OrderScore| match criterion {
        Criterion::Aic => c.aic,
        Criterion::Bic => c.bic,
    };
    let best = table
        .iter()
        .filter_map(|c| score_of(c).map(|v| (v, c.p + c.q, c.p)))
        .min_by(|a, b| a.0.total_cmp(&b.0).then(a.1.cmp(&b.1)).then(a.2.cmp(&b.2)))
        .ok_or_else(|| Error::NonConvergence("every order in the grid failed to fit".into()))?;
    let q = best.1 - best.2;
    Ok(OrderSelection { best: ArmaSpec::new(best.2, q, include_mean)?, criterion, table })
}
