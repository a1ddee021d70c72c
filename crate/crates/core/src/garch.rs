//! GARCH(p, q) and eGARCH(1, 1) fitted by Gaussian maximum likelihood on a
//! mean-free residual series (typically ARMA residuals).
//!
//! GARCH: `σ²_t = α₀ + Σ α_i u²_{t−i} + Σ β_j σ²_{t−j}`.
//! eGARCH: `ln h_t = ω + β ln h_{t−1} + α(|z_{t−1}| − √(2/π)) + γ z_{t−1}`.
//!
//! Both fits run on residuals rescaled to unit mean square and map the
//! parameters back, so the optimizer always works with O(1) numbers.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, StandardNormal};
use serde::{Deserialize, Serialize};

use crate::arma::Coefficient;
use crate::error::{Error, Result};
use crate::optim::{delta_method_std_errors, minimize, OptimOptions};
use crate::series::{Series, SeriesKind};
use crate::stattests::{arch_lm, jarque_bera, ljung_box, pearson_gof, sign_bias, TestResult};

const LN_2PI: f64 = 1.837_877_066_409_345_3;
const MIN_LENGTH: usize = 250;
/// Upper bound on Σα + Σβ. Without it, data with no ARCH effect drift to
/// β → 1 where the intercept is no longer pinned down.
pub const MAX_PERSISTENCE: f64 = 0.9999;
const E_ABS_Z: f64 = 0.797_884_560_802_865_4; // √(2/π)

fn mean_square(u: &[f64]) -> f64 {
    u.iter().map(|v| v * v).sum::<f64>() / u.len() as f64
}

/// GARCH parameters.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GarchModel {
    pub alpha0: f64,
    pub alpha: Vec<f64>,
    pub beta: Vec<f64>,
}

impl GarchModel {
    pub fn new(alpha0: f64, alpha: Vec<f64>, beta: Vec<f64>) -> Self {
        Self { alpha0, alpha, beta }
    }

    pub fn persistence(&self) -> f64 {
        self.alpha.iter().sum::<f64>() + self.beta.iter().sum::<f64>()
    }

    pub fn unconditional_variance(&self) -> Option<f64> {
        let p = self.persistence();
        (p < 1.0).then(|| self.alpha0 / (1.0 - p))
    }

    /// Conditional variances `σ²_1..σ²_n`, pre-sample `u²` and `σ²` set to `init`.
    pub fn variance_path(&self, u: &[f64], init: f64) -> Vec<f64> {
        let mut s2 = Vec::with_capacity(u.len());
        for t in 0..u.len() {
            s2.push(self.step(u, &s2, t, init));
        }
        s2
    }

    /// σ² at index `t` given residuals and variances before `t`.
    fn step(&self, u: &[f64], s2: &[f64], t: usize, init: f64) -> f64 {
        let mut v = self.alpha0;
        for (i, a) in self.alpha.iter().enumerate() {
            v += a * if t > i { u[t - 1 - i] * u[t - 1 - i] } else { init };
        }
        for (j, b) in self.beta.iter().enumerate() {
            v += b * if t > j { s2[t - 1 - j] } else { init };
        }
        v
    }

    fn log_likelihood_path(&self, u: &[f64], s2: &[f64]) -> f64 {
        -0.5 * u.iter().zip(s2).map(|(ui, si)| LN_2PI + si.ln() + ui * ui / si).sum::<f64>()
    }

    /// Variance forecasts `σ²_{T+1}..σ²_{T+h}` given the observed residuals and
    /// their fitted conditional variances.
    pub fn forecast(&self, u: &[f64], s2: &[f64], init: f64, h: usize) -> Vec<f64> {
        let n = u.len();
        let mut uu: Vec<f64> = u.iter().map(|v| v * v).collect();
        let mut ss = s2.to_vec();
        let mut out = Vec::with_capacity(h);
        for k in 0..h {
            let t = n + k;
            let mut v = self.alpha0;
            for (i, a) in self.alpha.iter().enumerate() {
                v += a * if t > i { uu[t - 1 - i] } else { init };
            }
            for (j, b) in self.beta.iter().enumerate() {
                v += b * if t > j { ss[t - 1 - j] } else { init };
            }
            // E[u²_{T+k}] = σ²_{T+k} for future steps
            uu.push(v);
            ss.push(v);
            out.push(v);
        }
        out
    }
}

/// Common surface of fitted volatility models.
pub trait VolatilityFit {
    fn model_name(&self) -> String;
    fn cond_var(&self) -> &[f64];
    fn std_residuals(&self) -> &Series;
    fn log_lik(&self) -> f64;
    fn coefficients(&self) -> &[Coefficient];
    /// ARCH plus GARCH lag terms, used as `fitdf` for portmanteau tests on z².
    fn n_dynamic_params(&self) -> usize;
    fn forecast_variance(&self, h: usize, opts: &VolForecastOptions) -> Result<VolForecast>;
}

#[derive(Debug, Clone)]
pub struct GarchFit {
    pub alpha0: f64,
    pub alpha: Vec<f64>,
    pub beta: Vec<f64>,
    pub coefficients: Vec<Coefficient>,
    pub log_lik: f64,
    pub cond_var: Vec<f64>,
    pub std_residuals: Series,
    pub persistence: f64,
    pub converged: bool,
    pub warnings: Vec<String>,
    residuals: Vec<f64>,
    init_var: f64,
}

impl GarchFit {
    pub fn model(&self) -> GarchModel {
        GarchModel::new(self.alpha0, self.alpha.clone(), self.beta.clone())
    }

    /// Evaluates a given parameter vector on `residuals` without estimation.
    pub fn from_parameters(model: &GarchModel, residuals: &Series) -> Result<GarchFit> {
        if model.alpha0 <= 0.0 || model.alpha.iter().chain(&model.beta).any(|c| *c < 0.0) {
            return Err(Error::invalid("GARCH coefficients violate α₀ > 0, α ≥ 0, β ≥ 0"));
        }
        let u = residuals.values();
        let init = mean_square(u);
        let cond_var = model.variance_path(u, init);
        let log_lik = model.log_likelihood_path(u, &cond_var);
        let z: Vec<f64> = u.iter().zip(&cond_var).map(|(a, s)| a / s.sqrt()).collect();
        let names = garch_names(model.alpha.len(), model.beta.len());
        let values: Vec<f64> = std::iter::once(model.alpha0).chain(model.alpha.iter().copied()).chain(model.beta.iter().copied()).collect();
        Ok(GarchFit {
            alpha0: model.alpha0,
            alpha: model.alpha.clone(),
            beta: model.beta.clone(),
            coefficients: names
                .into_iter()
                .zip(values)
                .map(|(name, value)| Coefficient { name, value, std_error: None })
                .collect(),
            log_lik,
            cond_var,
            std_residuals: residuals.derived("standardized residuals", SeriesKind::Residual, z)?,
            persistence: model.persistence(),
            converged: true,
            warnings: Vec::new(),
            residuals: u.to_vec(),
            init_var: init,
        })
    }

    pub fn residuals(&self) -> &[f64] {
        &self.residuals
    }

    pub fn init_var(&self) -> f64 {
        self.init_var
    }

    pub fn to_record(&self) -> VolFitRecord {
        VolFitRecord {
            model: self.model_name(),
            coefficients: self.coefficients.clone(),
            log_lik: self.log_lik,
            n: self.residuals.len(),
            persistence: Some(self.persistence),
        }
    }
}

fn garch_names(q: usize, p: usize) -> Vec<String> {
    std::iter::once("alpha0".to_string())
        .chain((1..=q).map(|i| format!("alpha{i}")))
        .chain((1..=p).map(|j| format!("beta{j}")))
        .collect()
}

impl VolatilityFit for GarchFit {
    fn model_name(&self) -> String {
        format!("GARCH({},{})", self.beta.len(), self.alpha.len())
    }
    fn cond_var(&self) -> &[f64] {
        &self.cond_var
    }
    fn std_residuals(&self) -> &Series {
        &self.std_residuals
    }
    fn log_lik(&self) -> f64 {
        self.log_lik
    }
    fn coefficients(&self) -> &[Coefficient] {
        &self.coefficients
    }
    fn n_dynamic_params(&self) -> usize {
        self.alpha.len() + self.beta.len()
    }
    fn forecast_variance(&self, h: usize, _opts: &VolForecastOptions) -> Result<VolForecast> {
        check_horizon(h)?;
        let s2 = self.model().forecast(&self.residuals, &self.cond_var, self.init_var, h);
        Ok(VolForecast::new(s2))
    }
}

/// Serialized form of a fitted volatility model.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct VolFitRecord {
    pub model: String,
    pub coefficients: Vec<Coefficient>,
    pub log_lik: f64,
    pub n: usize,
    pub persistence: Option<f64>,
}

#[derive(Debug, Clone)]
pub struct GarchOptions {
    pub optim: OptimOptions,
}

impl Default for GarchOptions {
    fn default() -> Self {
        Self { optim: OptimOptions::default() }
    }
}

impl GarchOptions {
    pub fn with_seed(seed: u64) -> Self {
        Self { optim: OptimOptions { seed, ..OptimOptions::default() } }
    }
}

struct GarchTransform {
    q: usize,
    p: usize,
}

impl GarchTransform {
    /// `u₀ = ln α₀`; the lag weights `w = eᵘ` become `c·w/(1 + Σw)` with
    /// `c = MAX_PERSISTENCE`, so each is positive and their sum stays below it.
    fn natural(&self, u: &[f64]) -> GarchModel {
        let w: Vec<f64> = u[1..].iter().map(|v| v.exp()).collect();
        let denom = 1.0 + w.iter().sum::<f64>();
        let coefs: Vec<f64> = w.iter().map(|wi| MAX_PERSISTENCE * wi / denom).collect();
        GarchModel::new(u[0].exp(), coefs[..self.q].to_vec(), coefs[self.q..].to_vec())
    }

    fn flat(&self, u: &[f64]) -> Vec<f64> {
        let m = self.natural(u);
        std::iter::once(m.alpha0).chain(m.alpha).chain(m.beta).collect()
    }

    /// Starting points spread over low and high persistence; GARCH
    /// likelihoods often have a second mode near β → 1.
    fn starts(&self) -> Vec<Vec<f64>> {
        let mixes: &[(f64, f64)] = if self.p > 0 { &[(0.1, 0.8), (0.05, 0.5), (0.1, 0.02)] } else { &[(0.1, 0.0), (0.4, 0.0)] };
        let mixes = if self.q == 0 { &mixes[..1] } else { mixes };
        mixes.iter().map(|&(a, b)| self.start_at(a, b)).collect()
    }

    fn start_at(&self, alpha_total: f64, beta_total: f64) -> Vec<f64> {
        let alpha = vec![alpha_total / self.q.max(1) as f64; self.q];
        let beta = vec![beta_total / self.p.max(1) as f64; self.p];
        let rest = 1.0 - alpha.iter().chain(&beta).sum::<f64>();
        let mut u = vec![rest.ln()];
        u.extend(alpha.iter().chain(&beta).map(|c| (c / rest).ln()));
        u
    }
}

fn check_residuals(residuals: &Series) -> Result<f64> {
    let n = residuals.len();
    if n < MIN_LENGTH {
        return Err(Error::TooShort { required: MIN_LENGTH, actual: n });
    }
    let ms = mean_square(residuals.values());
    if ms <= 0.0 {
        return Err(Error::ZeroVariance("residuals are identically zero".into()));
    }
    Ok(ms)
}

pub fn fit_garch(residuals: &Series, q_arch: usize, p_garch: usize) -> Result<GarchFit> {
    fit_garch_with(residuals, q_arch, p_garch, &GarchOptions::default())
}

pub fn fit_garch_with(residuals: &Series, q_arch: usize, p_garch: usize, opts: &GarchOptions) -> Result<GarchFit> {
    if q_arch == 0 && p_garch > 0 {
        return Err(Error::invalid("GARCH terms without ARCH terms are not identified"));
    }
    let ms = check_residuals(residuals)?;
    let scale2 = ms;
    let z: Vec<f64> = residuals.values().iter().map(|v| v / scale2.sqrt()).collect();
    let tr = GarchTransform { q: q_arch, p: p_garch };
    let objective = |u: &[f64]| -> f64 {
        if u.iter().any(|v| v.abs() > 50.0) {
            return f64::INFINITY;
        }
        let m = tr.natural(u);
        let s2 = m.variance_path(&z, 1.0);
        if s2.iter().any(|v| !(*v > 0.0)) {
            return f64::INFINITY;
        }
        -m.log_likelihood_path(&z, &s2)
    };
    let res = tr
        .starts()
        .iter()
        .map(|x0| minimize(objective, x0, &opts.optim))
        .reduce(|best, r| if r.f < best.f { r } else { best })
        .expect("at least one start");
    if !res.f.is_finite() {
        return Err(Error::NonConvergence("GARCH likelihood is not finite anywhere visited".into()));
    }
    let se = delta_method_std_errors(objective, |u| tr.flat(u), &res.x);
    let fitted = tr.natural(&res.x);
    let model = GarchModel::new(fitted.alpha0 * scale2, fitted.alpha, fitted.beta);
    let mut fit = GarchFit::from_parameters(&model, residuals)?;
    for (i, c) in fit.coefficients.iter_mut().enumerate() {
        let s = se.as_ref().map(|v| v[i]).filter(|v| v.is_finite());
        c.std_error = if i == 0 { s.map(|v| v * scale2) } else { s };
    }
    fit.converged = res.converged;
    if !res.converged {
        fit.warnings.push("optimizer did not settle after restarts".into());
    }
    if fit.persistence > MAX_PERSISTENCE - 1e-6 {
        fit.warnings.push(format!("persistence {:.8} is at the stationarity boundary", fit.persistence));
    }
    Ok(fit)
}

/// eGARCH(1,1) parameters.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct EgarchModel {
    pub omega: f64,
    pub beta: f64,
    pub alpha: f64,
    pub gamma: f64,
}

impl EgarchModel {
    /// `ln h_t` path with `ln h_1 = ln(init)`. `None` if it overflows.
    pub fn log_variance_path(&self, u: &[f64], init: f64) -> Option<Vec<f64>> {
        let mut lnh: Vec<f64> = Vec::with_capacity(u.len());
        let mut cur = init.ln();
        for t in 0..u.len() {
            if t > 0 {
                let z = u[t - 1] / (0.5 * lnh[t - 1]).exp();
                cur = self.omega + self.beta * lnh[t - 1] + self.alpha * (z.abs() - E_ABS_Z) + self.gamma * z;
            }
            if !cur.is_finite() || cur.abs() > 700.0 {
                return None;
            }
            lnh.push(cur);
        }
        Some(lnh)
    }

    fn log_likelihood_path(u: &[f64], lnh: &[f64]) -> f64 {
        -0.5 * u.iter().zip(lnh).map(|(ui, l)| LN_2PI + l + ui * ui * (-l).exp()).sum::<f64>()
    }

    fn next(&self, lnh: f64, z: f64) -> f64 {
        self.omega + self.beta * lnh + self.alpha * (z.abs() - E_ABS_Z) + self.gamma * z
    }
}

#[derive(Debug, Clone)]
pub struct EgarchFit {
    pub omega: f64,
    pub beta_lnh: f64,
    pub alpha_mag: f64,
    pub gamma_sign: f64,
    pub coefficients: Vec<Coefficient>,
    pub log_lik: f64,
    pub cond_var: Vec<f64>,
    pub std_residuals: Series,
    pub converged: bool,
    pub warnings: Vec<String>,
    residuals: Vec<f64>,
}

impl EgarchFit {
    pub fn model(&self) -> EgarchModel {
        EgarchModel { omega: self.omega, beta: self.beta_lnh, alpha: self.alpha_mag, gamma: self.gamma_sign }
    }

    pub fn from_parameters(model: &EgarchModel, residuals: &Series) -> Result<EgarchFit> {
        let u = residuals.values();
        let init = mean_square(u);
        let lnh = model
            .log_variance_path(u, init)
            .ok_or_else(|| Error::invalid("eGARCH log-variance diverges for these parameters"))?;
        let log_lik = EgarchModel::log_likelihood_path(u, &lnh);
        let cond_var: Vec<f64> = lnh.iter().map(|l| l.exp()).collect();
        let z: Vec<f64> = u.iter().zip(&cond_var).map(|(a, s)| a / s.sqrt()).collect();
        let values = [model.omega, model.beta, model.alpha, model.gamma];
        Ok(EgarchFit {
            omega: model.omega,
            beta_lnh: model.beta,
            alpha_mag: model.alpha,
            gamma_sign: model.gamma,
            coefficients: ["omega", "beta1", "alpha1", "gamma1"]
                .iter()
                .zip(values)
                .map(|(n, v)| Coefficient { name: n.to_string(), value: v, std_error: None })
                .collect(),
            log_lik,
            cond_var,
            std_residuals: residuals.derived("standardized residuals", SeriesKind::Residual, z)?,
            converged: true,
            warnings: Vec::new(),
            residuals: u.to_vec(),
        })
    }

    pub fn residuals(&self) -> &[f64] {
        &self.residuals
    }

    pub fn to_record(&self) -> VolFitRecord {
        VolFitRecord {
            model: self.model_name(),
            coefficients: self.coefficients.clone(),
            log_lik: self.log_lik,
            n: self.residuals.len(),
            persistence: None,
        }
    }
}

impl VolatilityFit for EgarchFit {
    fn model_name(&self) -> String {
        "eGARCH(1,1)".into()
    }
    fn cond_var(&self) -> &[f64] {
        &self.cond_var
    }
    fn std_residuals(&self) -> &Series {
        &self.std_residuals
    }
    fn log_lik(&self) -> f64 {
        self.log_lik
    }
    fn coefficients(&self) -> &[Coefficient] {
        &self.coefficients
    }
    fn n_dynamic_params(&self) -> usize {
        2
    }

    /// Step 1 is deterministic; later steps average `h` over simulated
    /// log-variance paths driven by standard normal shocks.
    fn forecast_variance(&self, h: usize, opts: &VolForecastOptions) -> Result<VolForecast> {
        check_horizon(h)?;
        if opts.paths == 0 {
            return Err(Error::invalid("need at least one simulation path"));
        }
        let m = self.model();
        let n = self.residuals.len();
        let ln_last = self.cond_var[n - 1].ln();
        let z_last = self.residuals[n - 1] / self.cond_var[n - 1].sqrt();
        let ln_next = m.next(ln_last, z_last);
        let mut sums = vec![0.0; h];
        let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
        for _ in 0..opts.paths {
            let mut lnh = ln_next;
            for slot in sums.iter_mut() {
                *slot += lnh.exp();
                let z: f64 = StandardNormal.sample(&mut rng);
                lnh = m.next(lnh, z);
            }
        }
        let paths = opts.paths as f64;
        let mut s2: Vec<f64> = sums.into_iter().map(|s| s / paths).collect();
        s2[0] = ln_next.exp();
        Ok(VolForecast::new(s2))
    }
}

#[derive(Debug, Clone)]
struct EgarchTransform;

impl EgarchTransform {
    fn natural(u: &[f64]) -> EgarchModel {
        EgarchModel { omega: u[0], beta: u[1].tanh(), alpha: u[2], gamma: u[3] }
    }

    fn flat(u: &[f64]) -> Vec<f64> {
        let m = Self::natural(u);
        vec![m.omega, m.beta, m.alpha, m.gamma]
    }
}

pub fn fit_egarch(residuals: &Series) -> Result<EgarchFit> {
    fit_egarch_with(residuals, &GarchOptions::default())
}

pub fn fit_egarch_with(residuals: &Series, opts: &GarchOptions) -> Result<EgarchFit> {
    let ms = check_residuals(residuals)?;
    let z: Vec<f64> = residuals.values().iter().map(|v| v / ms.sqrt()).collect();
    let objective = |u: &[f64]| -> f64 {
        let m = EgarchTransform::natural(u);
        match m.log_variance_path(&z, 1.0) {
            Some(lnh) => -EgarchModel::log_likelihood_path(&z, &lnh),
            None => f64::INFINITY,
        }
    };
    let start = [0.0, 0.9f64.atanh(), 0.1, 0.0];
    let res = minimize(objective, &start, &opts.optim);
    if !res.f.is_finite() {
        return Err(Error::NonConvergence("eGARCH likelihood is not finite anywhere visited".into()));
    }
    let se = delta_method_std_errors(objective, EgarchTransform::flat, &res.x);
    let std_model = EgarchTransform::natural(&res.x);
    // ln h scales by ln(ms); only the intercept absorbs it
    let model = EgarchModel { omega: std_model.omega + (1.0 - std_model.beta) * ms.ln(), ..std_model };
    let mut fit = EgarchFit::from_parameters(&model, residuals)?;
    for (i, c) in fit.coefficients.iter_mut().enumerate() {
        c.std_error = se.as_ref().map(|v| v[i]).filter(|v| v.is_finite());
    }
    fit.converged = res.converged;
    if !res.converged {
        fit.warnings.push("optimizer did not settle after restarts".into());
    }
    if model.beta.abs() > 1.0 - 1e-6 {
        fit.warnings.push(format!("|beta| = {:.8} is at the stationarity boundary", model.beta.abs()));
    }
    Ok(fit)
}

#[derive(Debug, Clone)]
pub struct VolForecastOptions {
    pub paths: usize,
    pub seed: u64,
}

impl Default for VolForecastOptions {
    fn default() -> Self {
        Self { paths: 10_000, seed: 42 }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct VolForecast {
    pub horizon: usize,
    pub sigma2: Vec<f64>,
    pub sigma: Vec<f64>,
}

impl VolForecast {
    fn new(sigma2: Vec<f64>) -> Self {
        let sigma = sigma2.iter().map(|v| v.sqrt()).collect();
        Self { horizon: sigma2.len(), sigma2, sigma }
    }

    /// `step,sigma2,sigma` rows.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("step,sigma2,sigma\n");
        for (i, (s2, s)) in self.sigma2.iter().zip(&self.sigma).enumerate() {
            out.push_str(&format!("{},{:e},{:e}\n", i + 1, s2, s));
        }
        out
    }
}

fn check_horizon(h: usize) -> Result<()> {
    if h == 0 || h > 500 {
        return Err(Error::invalid("forecast horizon must be in 1..=500"));
    }
    Ok(())
}

/// Residual diagnostics of a fitted volatility model.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GarchDiagnostics {
    pub jarque_bera: TestResult,
    pub ljung_box_z: Vec<TestResult>,
    pub ljung_box_z2: Vec<TestResult>,
    pub arch_lm: TestResult,
    pub sign_bias: Vec<TestResult>,
    pub pearson_gof: TestResult,
}

impl GarchDiagnostics {
    pub fn all(&self) -> Vec<&TestResult> {
        let mut v = vec![&self.jarque_bera];
        v.extend(&self.ljung_box_z);
        v.extend(&self.ljung_box_z2);
        v.push(&self.arch_lm);
        v.extend(&self.sign_bias);
        v.push(&self.pearson_gof);
        v
    }
}

pub const DIAGNOSTIC_LAGS: [usize; 3] = [6, 12, 18];

/// Ljung-Box on `z` and `z²` at several lags; the squared series uses
/// `fitdf` = number of ARCH and GARCH lag terms.
pub fn multi_lag_box(fit: &dyn VolatilityFit, lags: &[usize]) -> Result<(Vec<TestResult>, Vec<TestResult>)> {
    let z = fit.std_residuals();
    let z2 = z.derived("squared standardized residuals", SeriesKind::Other, z.values().iter().map(|v| v * v).collect())?;
    let fitdf = fit.n_dynamic_params();
    let mut plain = Vec::new();
    let mut squared = Vec::new();
    for &lag in lags {
        let mut r = ljung_box(z, lag, 0)?;
        r.name = "Ljung-Box (z)".into();
        plain.push(r);
        let mut r = ljung_box(&z2, lag, fitdf.min(lag - 1))?;
        r.name = "Ljung-Box (z^2)".into();
        squared.push(r);
    }
    Ok((plain, squared))
}

pub fn garch_diagnostics(fit: &dyn VolatilityFit) -> Result<GarchDiagnostics> {
    let z = fit.std_residuals();
    let (ljung_box_z, ljung_box_z2) = multi_lag_box(fit, &DIAGNOSTIC_LAGS)?;
    Ok(GarchDiagnostics {
        jarque_bera: jarque_bera(z)?,
        ljung_box_z,
        ljung_box_z2,
        arch_lm: arch_lm(z, 12)?,
        sign_bias: sign_bias(z)?,
        pearson_gof: pearson_gof(z, 20)?,
    })
}

/// Convenience wrapper returning the standardized residuals of a fit.
pub fn standardized_residuals(fit: &dyn VolatilityFit) -> Series {
    fit.std_residuals().clone()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn forecast_fixed_point() {
        let m = GarchModel::new(0.1, vec![0.2], vec![0.7]);
        let f = m.forecast(&[1.0], &[1.0], 1.0, 10);
        assert!(f.iter().all(|v| (v - 1.0).abs() < 1e-15));
    }

    #[test]
    fn transform_respects_constraints() {
        let tr = GarchTransform { q: 2, p: 1 };
        for u in [[0.0, 5.0, 5.0, 5.0], [-3.0, -20.0, 1.0, 30.0]] {
            let m = tr.natural(&u);
            assert!(m.alpha0 > 0.0);
            assert!(m.alpha.iter().chain(&m.beta).all(|c| *c >= 0.0));
            assert!(m.persistence() < 1.0);
        }
        let s = &tr.starts()[0];
        let m = tr.natural(s);
        assert!((m.persistence() - 0.9 * MAX_PERSISTENCE).abs() < 1e-12);
        assert!((m.alpha0 - 0.1).abs() < 1e-12);
        assert_eq!(GarchTransform { q: 0, p: 0 }.starts().len(), 1);
    }

    #[test]
    fn rejects_bad_orders_and_short_input() {
        let s = Series::new("u", SeriesKind::Residual, vec![0.1; 100]).unwrap();
        assert!(fit_garch(&s, 0, 1).is_err());
        assert!(matches!(fit_garch(&s, 1, 1), Err(Error::TooShort { .. })));
        assert!(matches!(fit_egarch(&s), Err(Error::TooShort { .. })));
    }

    #[test]
    fn from_parameters_rejects_negative_coefficients() {
        let s = Series::new("u", SeriesKind::Residual, vec![0.1, -0.2, 0.3]).unwrap();
        assert!(GarchFit::from_parameters(&GarchModel::new(0.0, vec![0.1], vec![0.8]), &s).is_err());
        assert!(GarchFit::from_parameters(&GarchModel::new(0.1, vec![-0.1], vec![0.8]), &s).is_err());
    }

    #[test]
    fn vol_forecast_csv_layout() {
        let f = VolForecast::new(vec![4.0, 1.0]);
        assert_eq!(f.sigma, vec![2.0, 1.0]);
        assert_eq!(f.to_csv(), "step,sigma2,sigma\n1,4e0,2e0\n2,1e0,1e0\n");
    }
}
