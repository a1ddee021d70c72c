//! Vector autoregression: OLS estimation, Granger causality, stability roots,
//! orthogonalized impulse responses, variance decomposition and forecasts.

use std::fmt;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::{least_squares, Matrix};
use crate::series::{PriceTable, Series};
use crate::special::f_sf;
use crate::stattests::TestResult;

pub const MAX_HORIZON: usize = 500;

/// `k ≥ 2` aligned series of equal length.
#[derive(Debug, Clone, PartialEq)]
pub struct MultiSeries {
    series: Vec<Series>,
}

impl MultiSeries {
    pub fn new(series: Vec<Series>) -> Result<Self> {
        if series.len() < 2 {
            return Err(Error::invalid("a VAR needs at least two series"));
        }
        let n = series[0].len();
        if let Some(s) = series.iter().find(|s| s.len() != n) {
            return Err(Error::invalid(format!("series `{}` has {} values, expected {n}", s.name(), s.len())));
        }
        for (i, s) in series.iter().enumerate() {
            if series[..i].iter().any(|t| t.name() == s.name()) {
                return Err(Error::invalid(format!("duplicate series name `{}`", s.name())));
            }
        }
        Ok(Self { series })
    }

    pub fn from_table(table: &PriceTable) -> Result<Self> {
        Self::new(table.series.clone())
    }

    pub fn k(&self) -> usize {
        self.series.len()
    }

    pub fn len(&self) -> usize {
        self.series[0].len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn names(&self) -> Vec<String> {
        self.series.iter().map(|s| s.name().to_string()).collect()
    }

    pub fn series(&self) -> &[Series] {
        &self.series
    }

    pub fn index_of(&self, name: &str) -> Result<usize> {
        self.series
            .iter()
            .position(|s| s.name() == name)
            .ok_or_else(|| Error::MissingColumn(name.to_string()))
    }

    fn value(&self, var: usize, t: usize) -> f64 {
        self.series[var].values()[t]
    }
}

/// Design with an intercept column followed by lags 1..p of each listed variable.
fn lagged_design(m: &MultiSeries, vars: &[usize], p: usize) -> Matrix {
    let n_eff = m.len() - p;
    let cols = 1 + vars.len() * p;
    let mut x = Matrix::zeros(n_eff, cols);
    for r in 0..n_eff {
        let t = r + p;
        x[(r, 0)] = 1.0;
        for lag in 1..=p {
            for (j, &v) in vars.iter().enumerate() {
                x[(r, 1 + (lag - 1) * vars.len() + j)] = m.value(v, t - lag);
            }
        }
    }
    x
}

#[derive(Debug, Clone, PartialEq)]
pub struct VarFit {
    pub variables: Vec<String>,
    pub lag_order: usize,
    pub intercepts: Vec<f64>,
    /// `coef[i]` is the k×k matrix `A_{i+1}`; row = equation, column = regressor.
    pub coef: Vec<Matrix>,
    pub resid_cov: Matrix,
    pub companion: Matrix,
    pub n_effective: usize,
    pub residuals: Vec<Vec<f64>>,
    last_obs: Vec<Vec<f64>>,
}

impl VarFit {
    pub fn k(&self) -> usize {
        self.variables.len()
    }

    /// Builds a fit directly from parameters; `history` holds the last `p`
    /// observations (oldest first) used as forecast origin.
    pub fn from_parameters(
        variables: Vec<String>,
        intercepts: Vec<f64>,
        coef: Vec<Matrix>,
        resid_cov: Matrix,
        history: Vec<Vec<f64>>,
    ) -> Result<VarFit> {
        let k = variables.len();
        let p = coef.len();
        if p == 0 || intercepts.len() != k || coef.iter().any(|a| a.rows() != k || a.cols() != k) {
            return Err(Error::invalid("coefficient shapes do not match the number of variables"));
        }
        if resid_cov.rows() != k || resid_cov.cols() != k {
            return Err(Error::invalid("covariance shape does not match the number of variables"));
        }
        if history.len() < p || history.iter().any(|h| h.len() != k) {
            return Err(Error::invalid("history must hold at least p observations of k values"));
        }
        let companion = companion_matrix(&coef);
        let last_obs = history[history.len() - p..].to_vec();
        Ok(VarFit { variables, lag_order: p, intercepts, coef, resid_cov, companion, n_effective: 0, residuals: Vec::new(), last_obs })
    }

    pub fn to_record(&self) -> VarFitRecord {
        VarFitRecord {
            variables: self.variables.clone(),
            lag_order: self.lag_order,
            intercepts: self.intercepts.clone(),
            coef: self.coef.iter().map(Matrix::to_rows).collect(),
            resid_cov: self.resid_cov.to_rows(),
            n_effective: self.n_effective,
        }
    }

    /// `name_t = c + Σ coef·name_{t−lag}` for one equation.
    pub fn equation(&self, effect: &str) -> Result<String> {
        let i = self
            .variables
            .iter()
            .position(|v| v == effect)
            .ok_or_else(|| Error::MissingColumn(effect.to_string()))?;
        let mut s = format!("{effect}_t =");
        for (lag, a) in self.coef.iter().enumerate() {
            for (j, name) in self.variables.iter().enumerate() {
                let c = a[(i, j)];
                let sign = match (c < 0.0, lag == 0 && j == 0) {
                    (true, _) => " - ",
                    (false, true) => " ",
                    (false, false) => " + ",
                };
                s.push_str(&format!("{sign}{:.6} * {name}_{{t-{}}}", c.abs(), lag + 1));
            }
        }
        let c = self.intercepts[i];
        s.push_str(&format!(" {} {:.6}", if c < 0.0 { "-" } else { "+" }, c.abs()));
        Ok(s)
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct VarFitRecord {
    pub variables: Vec<String>,
    pub lag_order: usize,
    pub intercepts: Vec<f64>,
    pub coef: Vec<Vec<Vec<f64>>>,
    pub resid_cov: Vec<Vec<f64>>,
    pub n_effective: usize,
}

/// Standard block companion form: first block row `[A_1 … A_p]`, identity
/// blocks on the sub-diagonal.
pub fn companion_matrix(coef: &[Matrix]) -> Matrix {
    let p = coef.len();
    let k = coef[0].rows();
    let mut c = Matrix::zeros(k * p, k * p);
    for (l, a) in coef.iter().enumerate() {
        for i in 0..k {
            for j in 0..k {
                c[(i, l * k + j)] = a[(i, j)];
            }
        }
    }
    for i in k..k * p {
        c[(i, i - k)] = 1.0;
    }
    c
}

pub fn fit_var(m: &MultiSeries, p: usize) -> Result<VarFit> {
    let k = m.k();
    let n = m.len();
    if p == 0 {
        return Err(Error::invalid("lag order must be positive"));
    }
    if n <= k * p + 10 {
        return Err(Error::TooShort { required: k * p + 11, actual: n });
    }
    let vars: Vec<usize> = (0..k).collect();
    let x = lagged_design(m, &vars, p);
    let n_eff = n - p;
    let mut intercepts = vec![0.0; k];
    let mut coef = vec![Matrix::zeros(k, k); p];
    let mut residuals = Vec::with_capacity(k);
    for i in 0..k {
        let y: Vec<f64> = (p..n).map(|t| m.value(i, t)).collect();
        let ls = least_squares(&x, &y)?;
        intercepts[i] = ls.coef[0];
        for (lag, a) in coef.iter_mut().enumerate() {
            for j in 0..k {
                a[(i, j)] = ls.coef[1 + lag * k + j];
            }
        }
        residuals.push(ls.residuals);
    }
    let denom = (n_eff - (k * p + 1)) as f64;
    let mut resid_cov = Matrix::zeros(k, k);
    for i in 0..k {
        for j in 0..=i {
            let s: f64 = residuals[i].iter().zip(&residuals[j]).map(|(a, b)| a * b).sum::<f64>() / denom;
            resid_cov[(i, j)] = s;
            resid_cov[(j, i)] = s;
        }
    }
    let companion = companion_matrix(&coef);
    let last_obs = (n - p..n).map(|t| (0..k).map(|i| m.value(i, t)).collect()).collect();
    Ok(VarFit {
        variables: m.names(),
        lag_order: p,
        intercepts,
        coef,
        resid_cov,
        companion,
        n_effective: n_eff,
        residuals,
        last_obs,
    })
}

/// F test that `cause` lags add nothing to an autoregression of `effect`.
pub fn granger_test(m: &MultiSeries, cause: &str, effect: &str, p: usize) -> Result<TestResult> {
    let c = m.index_of(cause)?;
    let e = m.index_of(effect)?;
    if c == e {
        return Err(Error::invalid("cause and effect must differ"));
    }
    if p == 0 {
        return Err(Error::invalid("lag order must be positive"));
    }
    let n = m.len();
    if n <= 2 * p + 10 {
        return Err(Error::TooShort { required: 2 * p + 11, actual: n });
    }
    let y: Vec<f64> = (p..n).map(|t| m.value(e, t)).collect();
    let restricted = least_squares(&lagged_design(m, &[e], p), &y)?;
    let full = least_squares(&lagged_design(m, &[e, c], p), &y)?;
    let d2 = (n - p - 2 * p - 1) as f64;
    let f = ((restricted.rss - full.rss) / p as f64) / (full.rss / d2);
    let f = f.max(0.0);
    let mut r = TestResult::new("Granger causality", f, Some(vec![p as f64, d2]), f_sf(f, p as f64, d2));
    r.lag = Some(p);
    r.detail.insert("cause".into(), cause.into());
    r.detail.insert("effect".into(), effect.into());
    Ok(r)
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GrangerRow {
    pub cause: String,
    pub effect: String,
    pub f: f64,
    pub p_value: f64,
}

impl GrangerRow {
    /// `***`, `**`, `*` at the 1%, 5% and 10% levels.
    pub fn stars(&self) -> &'static str {
        if self.p_value < 0.01 {
            "***"
        } else if self.p_value < 0.05 {
            "**"
        } else if self.p_value < 0.1 {
            "*"
        } else {
            ""
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GrangerTable {
    pub lag: usize,
    pub rows: Vec<GrangerRow>,
}

/// Both directions for every pair, pairs taken in variable order and the
/// later variable listed first as cause.
pub fn granger_table(m: &MultiSeries, p: usize) -> Result<GrangerTable> {
    let names = m.names();
    let mut rows = Vec::new();
    for i in 0..names.len() {
        for j in i + 1..names.len() {
            for (cause, effect) in [(&names[j], &names[i]), (&names[i], &names[j])] {
                let t = granger_test(m, cause, effect, p)?;
                rows.push(GrangerRow { cause: cause.clone(), effect: effect.clone(), f: t.statistic, p_value: t.p_value });
            }
        }
    }
    Ok(GrangerTable { lag: p, rows })
}

impl GrangerTable {
    pub fn to_csv(&self) -> String {
        let mut out = String::from("cause,effect,F,p,significance\n");
        for r in &self.rows {
            out.push_str(&format!("{},{},{:.6},{:.6},{}\n", r.cause, r.effect, r.f, r.p_value, r.stars()));
        }
        out
    }
}

impl fmt::Display for GrangerTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let w = self.rows.iter().flat_map(|r| [r.cause.len(), r.effect.len()]).max().unwrap_or(0).max(6) + 2;
        writeln!(f, "{:<w2$}{:>10}{:>10}", "Pair samples", "F", "P", w2 = 2 * w)?;
        for r in &self.rows {
            writeln!(
                f,
                "{:<w$}{:<w$}{:>10.3}{:>7.3}{}",
                r.cause,
                r.effect,
                r.f,
                r.p_value,
                r.stars()
            )?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct StabilityReport {
    pub eigenvalues: Vec<Complex64>,
    /// Descending.
    pub moduli: Vec<f64>,
    pub stable: bool,
}

#[derive(Serialize)]
struct RootRecord {
    re: f64,
    im: f64,
    modulus: f64,
}

impl Serialize for StabilityReport {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Out {
            roots: Vec<RootRecord>,
            stable: bool,
        }
        Out {
            roots: self.eigenvalues.iter().map(|z| RootRecord { re: z.re, im: z.im, modulus: z.norm() }).collect(),
            stable: self.stable,
        }
        .serialize(s)
    }
}

pub fn stability_roots(fit: &VarFit) -> Result<StabilityReport> {
    let mut eig = fit.companion.eigenvalues()?;
    eig.sort_by(|a, b| {
        b.norm()
            .total_cmp(&a.norm())
            .then(b.re.total_cmp(&a.re))
            .then(b.im.total_cmp(&a.im))
    });
    let moduli: Vec<f64> = eig.iter().map(|z| z.norm()).collect();
    let stable = moduli.iter().all(|m| *m < 1.0);
    Ok(StabilityReport { eigenvalues: eig, moduli, stable })
}

impl fmt::Display for StabilityReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{:>14}{:>14}{:>12}", "real", "imag", "modulus")?;
        for z in &self.eigenvalues {
            writeln!(f, "{:>14.6}{:>14.6}{:>12.6}", z.re, z.im, z.norm())?;
        }
        if self.stable {
            writeln!(f, "all roots inside unit circle")
        } else {
            writeln!(f, "at least one root on or outside unit circle")
        }
    }
}

/// Resolves an ordering of variable names into indices; empty means the
/// fit's own order.
fn resolve_ordering(fit: &VarFit, ordering: &[String]) -> Result<Vec<usize>> {
    if ordering.is_empty() {
        return Ok((0..fit.k()).collect());
    }
    if ordering.len() != fit.k() {
        return Err(Error::invalid(format!("ordering lists {} variables, the fit has {}", ordering.len(), fit.k())));
    }
    let mut idx = Vec::with_capacity(ordering.len());
    for name in ordering {
        let i = fit
            .variables
            .iter()
            .position(|v| v == name)
            .ok_or_else(|| Error::MissingColumn(name.clone()))?;
        if idx.contains(&i) {
            return Err(Error::invalid(format!("`{name}` appears twice in the ordering")));
        }
        idx.push(i);
    }
    Ok(idx)
}

fn permute(a: &Matrix, order: &[usize]) -> Matrix {
    let k = order.len();
    let mut out = Matrix::zeros(k, k);
    for (r, &i) in order.iter().enumerate() {
        for (c, &j) in order.iter().enumerate() {
            out[(r, c)] = a[(i, j)];
        }
    }
    out
}

/// Moving-average matrices `Φ_0 = I, Φ_h = Σ_{i=1}^{min(h,p)} A_i Φ_{h−i}`.
pub fn ma_matrices(coef: &[Matrix], horizon: usize) -> Vec<Matrix> {
    let k = coef[0].rows();
    let mut phi = vec![Matrix::identity(k)];
    for h in 1..=horizon {
        let mut acc = Matrix::zeros(k, k);
        for (i, a) in coef.iter().enumerate().take(h) {
            acc = acc.add(&a.matmul(&phi[h - 1 - i]));
        }
        phi.push(acc);
    }
    phi
}

#[derive(Debug, Clone, PartialEq)]
pub struct ImpulseResponse {
    /// Variables in the ordering used for orthogonalization.
    pub variables: Vec<String>,
    pub horizon: usize,
    /// `responses[h][(i, j)]`: response of variable i at horizon h to a
    /// one-standard-deviation shock in variable j.
    pub responses: Vec<Matrix>,
}

impl ImpulseResponse {
    /// Long-format rows `horizon,response,impulse,value`.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("horizon,response,impulse,value\n");
        for (h, m) in self.responses.iter().enumerate() {
            for (i, ri) in self.variables.iter().enumerate() {
                for (j, sj) in self.variables.iter().enumerate() {
                    out.push_str(&format!("{h},{ri},{sj},{:e}\n", m[(i, j)]));
                }
            }
        }
        out
    }

    pub fn path(&self, response: usize, impulse: usize) -> Vec<f64> {
        self.responses.iter().map(|m| m[(response, impulse)]).collect()
    }
}

impl Serialize for ImpulseResponse {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Out<'a> {
            variables: &'a [String],
            horizon: usize,
            responses: Vec<Vec<Vec<f64>>>,
        }
        Out { variables: &self.variables, horizon: self.horizon, responses: self.responses.iter().map(Matrix::to_rows).collect() }
            .serialize(s)
    }
}

fn check_var_horizon(h: usize) -> Result<()> {
    if h > MAX_HORIZON {
        return Err(Error::invalid(format!("horizon must be at most {MAX_HORIZON}")));
    }
    Ok(())
}

/// `Θ_h = Φ_h L` with `L` the lower Cholesky factor of the reordered residual covariance.
pub fn irf(fit: &VarFit, horizon: usize, ordering: &[String]) -> Result<ImpulseResponse> {
    check_var_horizon(horizon)?;
    let order = resolve_ordering(fit, ordering)?;
    let coef: Vec<Matrix> = fit.coef.iter().map(|a| permute(a, &order)).collect();
    let l = permute(&fit.resid_cov, &order).cholesky().map_err(|_| Error::NotPositiveDefinite)?;
    let responses = ma_matrices(&coef, horizon).iter().map(|phi| phi.matmul(&l)).collect();
    Ok(ImpulseResponse { variables: order.iter().map(|&i| fit.variables[i].clone()).collect(), horizon, responses })
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct FevdRow {
    pub horizon: usize,
    pub std_dev: f64,
    /// Percent shares by shock, summing to 100.
    pub shares: Vec<f64>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct FevdTable {
    pub variables: Vec<String>,
    /// `rows[i]` holds horizons 1..=H for variable `variables[i]`.
    pub rows: Vec<Vec<FevdRow>>,
}

pub fn fevd(fit: &VarFit, horizon: usize, ordering: &[String]) -> Result<FevdTable> {
    if horizon == 0 {
        return Err(Error::invalid("variance decomposition horizon must be positive"));
    }
    let ir = irf(fit, horizon - 1, ordering)?;
    let k = fit.k();
    let mut rows = Vec::with_capacity(k);
    for i in 0..k {
        let mut cum = vec![0.0; k];
        let mut var_rows = Vec::with_capacity(horizon);
        for h in 0..horizon {
            for (j, c) in cum.iter_mut().enumerate() {
                let v = ir.responses[h][(i, j)];
                *c += v * v;
            }
            let total: f64 = cum.iter().sum();
            let shares = if total > 0.0 {
                cum.iter().map(|c| 100.0 * c / total).collect()
            } else {
                (0..k).map(|j| if j == i { 100.0 } else { 0.0 }).collect()
            };
            var_rows.push(FevdRow { horizon: h + 1, std_dev: total.sqrt(), shares });
        }
        rows.push(var_rows);
    }
    Ok(FevdTable { variables: ir.variables, rows })
}

impl FevdTable {
    pub fn variable(&self, name: &str) -> Option<&[FevdRow]> {
        self.variables.iter().position(|v| v == name).map(|i| self.rows[i].as_slice())
    }

    /// One block per variable: `variable,horizon,std_dev,<shock>%...`.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("variable,horizon,std_dev");
        for v in &self.variables {
            out.push_str(&format!(",{v}%"));
        }
        out.push('\n');
        for (name, rows) in self.variables.iter().zip(&self.rows) {
            for r in rows {
                out.push_str(&format!("{name},{},{:.6}", r.horizon, r.std_dev));
                for s in &r.shares {
                    out.push_str(&format!(",{s:.6}"));
                }
                out.push('\n');
            }
        }
        out
    }

    /// Aligned table for one variable with the horizon, standard deviation and shock shares.
    pub fn render(&self, name: &str) -> Option<String> {
        let rows = self.variable(name)?;
        let mut out = format!("{:<7}{:>20}", "Order", "Standard deviation");
        for v in &self.variables {
            out.push_str(&format!("{:>12}", format!("{v}%")));
        }
        out.push('\n');
        for r in rows {
            out.push_str(&format!("{:<7}{:>20.3}", r.horizon, r.std_dev));
            for s in &r.shares {
                out.push_str(&format!("{s:>12.3}"));
            }
            out.push('\n');
        }
        Some(out)
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct VarForecast {
    pub variables: Vec<String>,
    /// `steps[s]` is the k-vector forecast for step s + 1.
    pub steps: Vec<Vec<f64>>,
}

impl VarForecast {
    pub fn path(&self, name: &str) -> Option<Vec<f64>> {
        let i = self.variables.iter().position(|v| v == name)?;
        Some(self.steps.iter().map(|x| x[i]).collect())
    }

    pub fn to_csv(&self) -> String {
        let mut out = String::from("step");
        for v in &self.variables {
            out.push_str(&format!(",{v}"));
        }
        out.push('\n');
        for (s, x) in self.steps.iter().enumerate() {
            out.push_str(&(s + 1).to_string());
            for v in x {
                out.push_str(&format!(",{v:.6}"));
            }
            out.push('\n');
        }
        out
    }
}

/// Iterated forecasts `x̂_{t+s} = c + Σ A_i x̂_{t+s−i}`.
pub fn var_forecast(fit: &VarFit, h: usize) -> Result<VarForecast> {
    check_var_horizon(h)?;
    let k = fit.k();
    let p = fit.lag_order;
    let mut hist = fit.last_obs.clone();
    let mut steps = Vec::with_capacity(h);
    for _ in 0..h {
        let mut x = fit.intercepts.clone();
        for (lag, a) in fit.coef.iter().enumerate() {
            let prev = &hist[hist.len() - 1 - lag];
            for (i, xi) in x.iter_mut().enumerate() {
                *xi += (0..k).map(|j| a[(i, j)] * prev[j]).sum::<f64>();
            }
        }
        hist.push(x.clone());
        if hist.len() > p {
            hist.remove(0);
        }
        steps.push(x);
    }
    Ok(VarForecast { variables: fit.variables.clone(), steps })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::series::SeriesKind;

    fn ms(cols: Vec<Vec<f64>>) -> MultiSeries {
        MultiSeries::new(
            cols.into_iter()
                .enumerate()
                .map(|(i, v)| Series::new(format!("x{i}"), SeriesKind::Other, v).unwrap())
                .collect(),
        )
        .unwrap()
    }

    fn diag_fit(a: &[f64]) -> VarFit {
        let k = a.len();
        VarFit::from_parameters(
            (0..k).map(|i| format!("x{i}")).collect(),
            vec![0.0; k],
            vec![Matrix::from_diag(a)],
            Matrix::identity(k),
            vec![vec![1.0; k]],
        )
        .unwrap()
    }

    #[test]
    fn companion_block_form() {
        let a1 = Matrix::from_rows(&[vec![1.0, 2.0], vec![3.0, 4.0]]);
        let a2 = Matrix::from_rows(&[vec![5.0, 6.0], vec![7.0, 8.0]]);
        let c = companion_matrix(&[a1, a2]);
        assert_eq!(c.row(0), &[1.0, 2.0, 5.0, 6.0]);
        assert_eq!(c.row(1), &[3.0, 4.0, 7.0, 8.0]);
        assert_eq!(c.row(2), &[1.0, 0.0, 0.0, 0.0]);
        assert_eq!(c.row(3), &[0.0, 1.0, 0.0, 0.0]);
    }

    #[test]
    fn diagonal_stability() {
        let r = stability_roots(&diag_fit(&[0.5, 0.5])).unwrap();
        assert!(r.stable);
        assert!(r.moduli.iter().all(|m| (m - 0.5).abs() < 1e-12));
        let r = stability_roots(&diag_fit(&[1.1, 0.3])).unwrap();
        assert!(!r.stable);
        assert!((r.moduli[0] - 1.1).abs() < 1e-12);
    }

    #[test]
    fn diagonal_irf_and_fevd() {
        let fit = diag_fit(&[0.5, 0.5]);
        let ir = irf(&fit, 6, &[]).unwrap();
        for (h, m) in ir.responses.iter().enumerate() {
            assert!((m[(0, 0)] - 0.5f64.powi(h as i32)).abs() < 1e-14);
            assert_eq!(m[(0, 1)], 0.0);
            assert_eq!(m[(1, 0)], 0.0);
        }
        let fe = fevd(&fit, 5, &[]).unwrap();
        for rows in &fe.rows {
            assert_eq!(rows.len(), 5);
        }
        assert!(fe.rows[1].iter().all(|r| r.shares == vec![0.0, 100.0]));
    }

    #[test]
    fn ordering_is_validated() {
        let fit = diag_fit(&[0.5, 0.5]);
        assert!(irf(&fit, 2, &["x1".into(), "x0".into()]).is_ok());
        assert!(irf(&fit, 2, &["x1".into()]).is_err());
        assert!(irf(&fit, 2, &["x1".into(), "x1".into()]).is_err());
        assert!(irf(&fit, 2, &["x1".into(), "zz".into()]).is_err());
    }

    #[test]
    fn zero_coefficients_forecast_intercept() {
        let fit = VarFit::from_parameters(
            vec!["a".into(), "b".into()],
            vec![2.0, -1.0],
            vec![Matrix::zeros(2, 2)],
            Matrix::identity(2),
            vec![vec![10.0, 10.0]],
        )
        .unwrap();
        let f = var_forecast(&fit, 4).unwrap();
        assert!(f.steps.iter().all(|x| x == &vec![2.0, -1.0]));
    }

    #[test]
    fn collinear_series_rejected() {
        let x: Vec<f64> = (0..50).map(|i| ((i * 37) % 11) as f64).collect();
        let m = ms(vec![x.clone(), x]);
        assert!(matches!(fit_var(&m, 1), Err(Error::Singular(_))));
    }

    #[test]
    fn short_series_rejected() {
        let m = ms(vec![vec![1.0, 2.0, 3.0], vec![3.0, 1.0, 2.0]]);
        assert!(matches!(fit_var(&m, 1), Err(Error::TooShort { .. })));
    }

    #[test]
    fn stars() {
        let row = |p| GrangerRow { cause: "a".into(), effect: "b".into(), f: 1.0, p_value: p };
        assert_eq!(row(0.001).stars(), "***");
        assert_eq!(row(0.04).stars(), "**");
        assert_eq!(row(0.07).stars(), "*");
        assert_eq!(row(0.2).stars(), "");
    }
}
