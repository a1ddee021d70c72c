//! Univariate hypothesis tests: unit root, portmanteau, normality, ARCH
//! effects, extended autocorrelation, sign bias and goodness of fit.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::linalg::{least_squares, Matrix};
use crate::series::{acf, mean, moments, Series};
use crate::special::{chi2_sf, f_sf, normal_cdf, normal_quantile, normal_sf, t_two_sided};

/// Uniform record for every hypothesis test.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TestResult {
    pub name: String,
    pub statistic: f64,
    pub dof: Option<Vec<f64>>,
    pub p_value: f64,
    pub lag: Option<usize>,
    #[serde(default)]
    pub detail: BTreeMap<String, Value>,
}

impl TestResult {
    pub(crate) fn new(name: &str, statistic: f64, dof: Option<Vec<f64>>, p_value: f64) -> Self {
        Self {
            name: name.to_string(),
            statistic,
            dof,
            p_value: p_value.clamp(0.0, 1.0),
            lag: None,
            detail: BTreeMap::new(),
        }
    }

    fn with_lag(mut self, lag: usize) -> Self {
        self.lag = Some(lag);
        self
    }

    fn note(mut self, key: &str, value: Value) -> Self {
        self.detail.insert(key.to_string(), value);
        self
    }

    pub fn rejects_at(&self, alpha: f64) -> bool {
        self.p_value < alpha
    }
}

impl fmt::Display for TestResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:<24} stat = {:>12.6}", self.name, self.statistic)?;
        if let Some(lag) = self.lag {
            write!(f, "  lag = {lag:>3}")?;
        }
        if let Some(dof) = &self.dof {
            let d: Vec<String> = dof.iter().map(|v| format!("{v}")).collect();
            write!(f, "  df = {:<9}", d.join(","))?;
        }
        write!(f, "  p = {:.6}", self.p_value)
    }
}

// Dickey-Fuller critical values for the regression with a constant and no
// trend. Rows: sample sizes; columns: left-tail probabilities below.
const DF_SIZES: [f64; 6] = [25.0, 50.0, 100.0, 250.0, 500.0, 100_000.0];
const DF_PROBS: [f64; 8] = [0.01, 0.025, 0.05, 0.10, 0.90, 0.95, 0.975, 0.99];
const DF_CONST: [[f64; 8]; 6] = [
    [-3.75, -3.33, -3.00, -2.62, -0.37, 0.00, 0.34, 0.72],
    [-3.58, -3.22, -2.93, -2.60, -0.40, -0.03, 0.29, 0.66],
    [-3.51, -3.17, -2.89, -2.58, -0.42, -0.05, 0.26, 0.63],
    [-3.46, -3.14, -2.88, -2.57, -0.42, -0.06, 0.24, 0.62],
    [-3.44, -3.13, -2.87, -2.57, -0.43, -0.07, 0.24, 0.61],
    [-3.43, -3.12, -2.86, -2.57, -0.44, -0.07, 0.23, 0.60],
];

fn interp(xs: &[f64], ys: &[f64], x: f64) -> f64 {
    if x <= xs[0] {
        return ys[0];
    }
    let last = xs.len() - 1;
    if x >= xs[last] {
        return ys[last];
    }
    let i = xs.windows(2).position(|w| x >= w[0] && x <= w[1]).unwrap_or(last - 1);
    let t = (x - xs[i]) / (xs[i + 1] - xs[i]);
    ys[i] + t * (ys[i + 1] - ys[i])
}

/// Dickey-Fuller left-tail probability for a constant-only regression,
/// interpolated in both sample size and statistic, clipped to `[0.01, 0.99]`.
pub fn dickey_fuller_p_value(statistic: f64, n: usize) -> f64 {
    let crit: Vec<f64> =
        (0..DF_PROBS.len()).map(|j| interp(&DF_SIZES, &DF_CONST.map(|row| row[j]), n as f64)).collect();
    interp(&crit, &DF_PROBS, statistic)
}

/// Augmented Dickey-Fuller test with a constant and `lag_p` lagged differences.
pub fn adf_test(s: &Series, lag_p: usize) -> Result<TestResult> {
    let x = s.values();
    let n = x.len();
    if n <= lag_p + 10 {
        return Err(Error::TooShort { required: lag_p + 11, actual: n });
    }
    let dx: Vec<f64> = x.windows(2).map(|w| w[1] - w[0]).collect();
    let rows = dx.len() - lag_p;
    let cols = 2 + lag_p;
    let mut design = Matrix::zeros(rows, cols);
    let mut y = Vec::with_capacity(rows);
    for (r, i) in (lag_p..dx.len()).enumerate() {
        y.push(dx[i]);
        design[(r, 0)] = 1.0;
        design[(r, 1)] = x[i];
        for l in 1..=lag_p {
            design[(r, 1 + l)] = dx[i - l];
        }
    }
    let fit = least_squares(&design, &y).map_err(|e| match e {
        Error::Singular(_) => Error::Singular("ADF regressors are collinear (constant series?)".into()),
        other => other,
    })?;
    if fit.rss <= 0.0 {
        return Err(Error::Singular("ADF regression fits exactly".into()));
    }
    let se = fit.std_errors();
    let stat = fit.coef[1] / se[1];
    let raw = dickey_fuller_p_value(stat, rows);
    let mut res = TestResult::new("ADF", stat, None, raw).with_lag(lag_p).note("n_obs", json!(rows));
    if raw <= DF_PROBS[0] {
        res = res.note("p_value_clipped", json!("p-value smaller than printed"));
    } else if raw >= DF_PROBS[DF_PROBS.len() - 1] {
        res = res.note("p_value_clipped", json!("p-value greater than printed"));
    }
    Ok(res)
}

fn portmanteau_checks(s: &Series, lag: usize, fitdf: usize) -> Result<Vec<f64>> {
    if lag <= fitdf {
        return Err(Error::invalid(format!("lag {lag} must exceed fitdf {fitdf}")));
    }
    if lag == 0 || 2 * lag >= s.len() {
        return Err(Error::invalid(format!("lag {lag} must be below n/2 = {}", s.len() / 2)));
    }
    acf(s.values(), lag)
}

/// Ljung-Box `Q = n(n+2) Σ r_k²/(n−k)` against χ²(lag − fitdf).
pub fn ljung_box(s: &Series, lag: usize, fitdf: usize) -> Result<TestResult> {
    let r = portmanteau_checks(s, lag, fitdf)?;
    let n = s.len() as f64;
    let q = n * (n + 2.0) * r.iter().enumerate().map(|(i, rk)| rk * rk / (n - (i + 1) as f64)).sum::<f64>();
    let dof = (lag - fitdf) as f64;
    Ok(TestResult::new("Ljung-Box", q, Some(vec![dof]), chi2_sf(q, dof)).with_lag(lag))
}

/// Box-Pierce `Q = n Σ r_k²` against χ²(lag − fitdf).
pub fn box_pierce(s: &Series, lag: usize, fitdf: usize) -> Result<TestResult> {
    let r = portmanteau_checks(s, lag, fitdf)?;
    let n = s.len() as f64;
    let q = n * r.iter().map(|rk| rk * rk).sum::<f64>();
    let dof = (lag - fitdf) as f64;
    Ok(TestResult::new("Box-Pierce", q, Some(vec![dof]), chi2_sf(q, dof)).with_lag(lag))
}

/// Jarque-Bera `n/6 (S² + (K−3)²/4)` against χ²(2).
pub fn jarque_bera(s: &Series) -> Result<TestResult> {
    let n = s.len();
    if n < 8 {
        return Err(Error::TooShort { required: 8, actual: n });
    }
    let m = moments(s.values())?;
    let skew = m.skewness()?;
    let exk = m.excess_kurtosis()?;
    let jb = n as f64 / 6.0 * (skew * skew + exk * exk / 4.0);
    Ok(TestResult::new("Jarque-Bera", jb, Some(vec![2.0]), chi2_sf(jb, 2.0))
        .note("skewness", json!(skew))
        .note("kurtosis", json!(exk + 3.0)))
}

fn poly(c: &[f64], x: f64) -> f64 {
    c.iter().rev().fold(0.0, |acc, ci| acc * x + ci)
}

/// Shapiro-Wilk W with Royston's (1995) approximations for the coefficients
/// and the p-value. Valid for `3 <= n <= 5000`.
pub fn shapiro_wilk(s: &Series) -> Result<TestResult> {
    const C1: [f64; 6] = [0.0, 0.221157, -0.147981, -2.07119, 4.434685, -2.706056];
    const C2: [f64; 6] = [0.0, 0.042981, -0.293762, -1.752461, 5.682633, -3.582633];
    const C3: [f64; 4] = [0.544, -0.39978, 0.025054, -6.714e-4];
    const C4: [f64; 4] = [1.3822, -0.77857, 0.062767, -0.0020322];
    const C5: [f64; 4] = [-1.5861, -0.31082, -0.083751, 0.0038915];
    const C6: [f64; 3] = [-0.4803, -0.082676, 0.0030302];
    const G: [f64; 2] = [-2.273, 0.459];

    let n = s.len();
    if !(3..=5000).contains(&n) {
        return Err(Error::invalid(format!("Shapiro-Wilk needs 3 <= n <= 5000, got {n}")));
    }
    let mut x = s.values().to_vec();
    x.sort_by(f64::total_cmp);
    let range = x[n - 1] - x[0];
    if range <= 1e-10 * x[n - 1].abs().max(x[0].abs()).max(f64::MIN_POSITIVE) {
        return Err(Error::ZeroVariance("all values identical".into()));
    }
    let nn2 = n / 2;
    let an = n as f64;
    // half-vector of coefficients for the upper order statistics, largest first
    let mut a = vec![0.0; nn2];
    if n == 3 {
        a[0] = 0.5f64.sqrt();
    } else {
        let m: Vec<f64> = (1..=nn2).map(|i| normal_quantile((i as f64 - 0.375) / (an + 0.25))).collect();
        let summ2 = 2.0 * m.iter().map(|v| v * v).sum::<f64>();
        let ssumm2 = summ2.sqrt();
        let rsn = 1.0 / an.sqrt();
        let a1 = poly(&C1, rsn) - m[0] / ssumm2;
        let (i1, fac) = if n > 5 {
            let a2 = -m[1] / ssumm2 + poly(&C2, rsn);
            let fac = ((summ2 - 2.0 * m[0] * m[0] - 2.0 * m[1] * m[1]) / (1.0 - 2.0 * a1 * a1 - 2.0 * a2 * a2)).sqrt();
            a[1] = a2;
            (2, fac)
        } else {
            (1, ((summ2 - 2.0 * m[0] * m[0]) / (1.0 - 2.0 * a1 * a1)).sqrt())
        };
        a[0] = a1;
        for i in i1..nn2 {
            a[i] = -m[i] / fac;
        }
    }
    // full antisymmetric coefficient vector aligned with ascending x
    let mut coef = vec![0.0; n];
    for i in 0..nn2 {
        coef[i] = -a[i];
        coef[n - 1 - i] = a[i];
    }
    let xs: Vec<f64> = x.iter().map(|v| v / range).collect();
    let xm = mean(&xs);
    let am = mean(&coef);
    let (mut ssa, mut ssx, mut sax) = (0.0, 0.0, 0.0);
    for (c, v) in coef.iter().zip(&xs) {
        let da = c - am;
        let dx = v - xm;
        ssa += da * da;
        ssx += dx * dx;
        sax += da * dx;
    }
    let ssassx = (ssa * ssx).sqrt();
    let w1 = (ssassx - sax) * (ssassx + sax) / (ssa * ssx);
    let w = 1.0 - w1;

    let p = if n == 3 {
        let pi6 = 6.0 / std::f64::consts::PI;
        let stqr = std::f64::consts::FRAC_PI_3;
        (pi6 * (w.sqrt().asin() - stqr)).max(0.0)
    } else {
        let mut y = w1.ln();
        let lnn = an.ln();
        let (mu, sigma) = if n <= 11 {
            let gamma = poly(&G, an);
            if y >= gamma {
                return Ok(TestResult::new("Shapiro-Wilk", w, None, 1e-99));
            }
            y = -(gamma - y).ln();
            (poly(&C3, an), poly(&C4, an).exp())
        } else {
            (poly(&C5, lnn), poly(&C6, lnn).exp())
        };
        normal_sf((y - mu) / sigma)
    };
    Ok(TestResult::new("Shapiro-Wilk", w, None, p))
}

/// Engle's LM test: regress `e_t²` on a constant and `lag` lagged squares,
/// `LM = n_eff · R²` against χ²(lag).
pub fn arch_lm(residuals: &Series, lag: usize) -> Result<TestResult> {
    let n = residuals.len();
    if lag == 0 {
        return Err(Error::invalid("ARCH-LM lag must be positive"));
    }
    if n <= 2 * lag {
        return Err(Error::TooShort { required: 2 * lag + 1, actual: n });
    }
    let e2: Vec<f64> = residuals.values().iter().map(|e| e * e).collect();
    let rows = n - lag;
    let mut design = Matrix::zeros(rows, lag + 1);
    let mut y = Vec::with_capacity(rows);
    for (r, t) in (lag..n).enumerate() {
        y.push(e2[t]);
        design[(r, 0)] = 1.0;
        for l in 1..=lag {
            design[(r, l)] = e2[t - l];
        }
    }
    let ym = mean(&y);
    let tss: f64 = y.iter().map(|v| (v - ym).powi(2)).sum();
    if tss <= 0.0 {
        return Err(Error::Singular("squared residuals are constant".into()));
    }
    let fit = least_squares(&design, &y)
        .map_err(|_| Error::Singular("ARCH-LM regressors are degenerate".into()))?;
    let r2 = 1.0 - fit.rss / tss;
    let lm = rows as f64 * r2;
    Ok(TestResult::new("ARCH-LM", lm, Some(vec![lag as f64]), chi2_sf(lm, lag as f64))
        .with_lag(lag)
        .note("r_squared", json!(r2)))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum EacfSymbol {
    #[serde(rename = "x")]
    Significant,
    #[serde(rename = "o")]
    Insignificant,
}

impl EacfSymbol {
    pub fn as_char(self) -> char {
        match self {
            EacfSymbol::Significant => 'x',
            EacfSymbol::Insignificant => 'o',
        }
    }
}

/// Extended sample autocorrelation table. Row `k` is the AR order, column
/// `j` the MA order.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct EacfTable {
    pub symbols: Vec<Vec<EacfSymbol>>,
    pub values: Vec<Vec<f64>>,
    pub threshold: f64,
    pub sample_size: usize,
}

impl fmt::Display for EacfTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let q = self.symbols.first().map_or(0, Vec::len);
        write!(f, "AR/MA")?;
        for j in 0..q {
            write!(f, " {j:>2}")?;
        }
        writeln!(f)?;
        for (k, row) in self.symbols.iter().enumerate() {
            write!(f, "{k:<5}")?;
            for s in row {
                write!(f, "  {}", s.as_char())?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

/// Tsay-Tiao extended autocorrelation function. Cell `(k, j)` holds the
/// lag-`j+1` autocorrelation of `z_t − Σ φ_i z_{t−i}`, where `φ` comes from
/// the `j`-th iterated AR(`k`) regression; it is marked significant when its
/// magnitude exceeds `2/√n`.
pub fn eacf(s: &Series, p_max: usize, q_max: usize) -> Result<EacfTable> {
    let n = s.len();
    if n <= 4 * (p_max + q_max) || n < p_max + q_max + 10 {
        return Err(Error::TooShort { required: (4 * (p_max + q_max) + 1).max(p_max + q_max + 10), actual: n });
    }
    let m = s.mean();
    let z: Vec<f64> = s.values().iter().map(|v| v - m).collect();
    let threshold = 2.0 / (n as f64).sqrt();
    let mut values = vec![vec![0.0; q_max + 1]; p_max + 1];

    let base = acf(&z, q_max + 1)?;
    values[0].copy_from_slice(&base[..=q_max]);

    for k in 1..=p_max {
        // resid[l][t] = residual of the l-th iterated AR(k) regression (NaN where undefined)
        let mut resid: Vec<Vec<f64>> = Vec::with_capacity(q_max + 1);
        for j in 0..=q_max {
            let start = k + j;
            let rows = n - start;
            let mut design = Matrix::zeros(rows, k + j);
            let mut y = Vec::with_capacity(rows);
            for (r, t) in (start..n).enumerate() {
                y.push(z[t]);
                for i in 1..=k {
                    design[(r, i - 1)] = z[t - i];
                }
                for i in 1..=j {
                    design[(r, k + i - 1)] = resid[j - i][t - i];
                }
            }
            let fit = least_squares(&design, &y)?;
            let phi = &fit.coef[..k];
            let w: Vec<f64> = (k..n).map(|t| z[t] - (1..=k).map(|i| phi[i - 1] * z[t - i]).sum::<f64>()).collect();
            values[k][j] = acf(&w, j + 1)?[j];
            let mut e = vec![f64::NAN; n];
            for (r, t) in (start..n).enumerate() {
                e[t] = fit.residuals[r];
            }
            resid.push(e);
        }
    }
    let symbols = values
        .iter()
        .map(|row| {
            row.iter()
                .map(|v| if v.abs() > threshold { EacfSymbol::Significant } else { EacfSymbol::Insignificant })
                .collect()
        })
        .collect();
    Ok(EacfTable { symbols, values, threshold, sample_size: n })
}

/// Engle-Ng sign-bias regression of `z_t²` on a constant, `S⁻_{t−1}`,
/// `S⁻_{t−1} z_{t−1}` and `S⁺_{t−1} z_{t−1}`. Returns the three individual
/// t-tests followed by the joint F-test.
pub fn sign_bias(std_residuals: &Series) -> Result<Vec<TestResult>> {
    let z = std_residuals.values();
    let n = z.len();
    if n < 50 {
        return Err(Error::TooShort { required: 50, actual: n });
    }
    let rows = n - 1;
    let mut design = Matrix::zeros(rows, 4);
    let mut y = Vec::with_capacity(rows);
    for t in 1..n {
        let prev = z[t - 1];
        let neg = if prev < 0.0 { 1.0 } else { 0.0 };
        y.push(z[t] * z[t]);
        design[(t - 1, 0)] = 1.0;
        design[(t - 1, 1)] = neg;
        design[(t - 1, 2)] = neg * prev;
        design[(t - 1, 3)] = (1.0 - neg) * prev;
    }
    let fit = least_squares(&design, &y)
        .map_err(|_| Error::Singular("sign-bias regressors are degenerate".into()))?;
    let se = fit.std_errors();
    let dof = (rows - 4) as f64;
    let mut out: Vec<TestResult> = ["Sign Bias", "Negative Sign Bias", "Positive Sign Bias"]
        .iter()
        .enumerate()
        .map(|(i, name)| {
            let t = fit.coef[i + 1] / se[i + 1];
            TestResult::new(name, t, Some(vec![dof]), t_two_sided(t, dof)).note("coefficient", json!(fit.coef[i + 1]))
        })
        .collect();
    let ym = mean(&y);
    let tss: f64 = y.iter().map(|v| (v - ym).powi(2)).sum();
    let f = ((tss - fit.rss) / 3.0) / (fit.rss / dof);
    out.push(TestResult::new("Joint Effect", f, Some(vec![3.0, dof]), f_sf(f, 3.0, dof)));
    Ok(out)
}

/// Pearson goodness of fit against the standard normal with `n_bins`
/// equiprobable bins, χ² with `n_bins − 1` degrees of freedom.
pub fn pearson_gof(std_residuals: &Series, n_bins: usize) -> Result<TestResult> {
    let n = std_residuals.len();
    if n_bins < 4 {
        return Err(Error::invalid("need at least 4 bins"));
    }
    if n < 5 * n_bins {
        return Err(Error::invalid(format!("{n} observations are too few for {n_bins} bins")));
    }
    let mut observed = vec![0usize; n_bins];
    for z in std_residuals.values() {
        let u = normal_cdf(*z);
        let b = ((u * n_bins as f64).floor() as usize).min(n_bins - 1);
        observed[b] += 1;
    }
    let expected = n as f64 / n_bins as f64;
    let stat: f64 = observed.iter().map(|&o| (o as f64 - expected).powi(2) / expected).sum();
    let dof = (n_bins - 1) as f64;
    Ok(TestResult::new("Pearson GoF", stat, Some(vec![dof]), chi2_sf(stat, dof))
        .with_lag(n_bins)
        .note("observed", json!(observed))
        .note("expected", json!(expected)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::series::SeriesKind;

    fn series(v: Vec<f64>) -> Series {
        Series::new("x", SeriesKind::Other, v).unwrap()
    }

    #[test]
    fn df_p_value_clips_and_interpolates() {
        assert_eq!(dickey_fuller_p_value(-10.0, 1000), 0.01);
        assert_eq!(dickey_fuller_p_value(5.0, 1000), 0.99);
        let p = dickey_fuller_p_value(-2.86, 100_000);
        assert!((p - 0.05).abs() < 1e-12);
    }

    #[test]
    fn adf_rejects_constant_series() {
        assert!(adf_test(&series(vec![1.0; 50]), 2).is_err());
        assert!(matches!(adf_test(&series(vec![1.0, 2.0, 3.0]), 0), Err(Error::TooShort { .. })));
    }

    #[test]
    fn portmanteau_argument_checks() {
        let s = series((0..40).map(|i| (i as f64).sin()).collect());
        assert!(ljung_box(&s, 3, 3).is_err());
        assert!(box_pierce(&s, 20, 0).is_err());
        assert!(ljung_box(&series(vec![2.0; 40]), 3, 0).is_err());
    }

    #[test]
    fn jarque_bera_needs_eight_points_and_variance() {
        assert!(jarque_bera(&series(vec![1.0, 2.0, 3.0])).is_err());
        assert!(jarque_bera(&series(vec![1.0; 10])).is_err());
    }

    #[test]
    fn shapiro_wilk_n3_exact() {
        // equally spaced triple gives W = 1, p = 1
        let r = shapiro_wilk(&series(vec![1.0, 2.0, 3.0])).unwrap();
        assert!((r.statistic - 1.0).abs() < 1e-12);
        assert!((r.p_value - 1.0).abs() < 1e-9);
        assert!(shapiro_wilk(&series(vec![1.0, 1.0, 1.0])).is_err());
        assert!(shapiro_wilk(&series(vec![1.0, 2.0])).is_err());
    }

    #[test]
    fn arch_lm_constant_is_error() {
        assert!(arch_lm(&series(vec![0.5; 100]), 3).is_err());
        assert!(arch_lm(&series(vec![0.5, -0.5, 0.5, -0.5, 0.5, -0.5]), 3).is_err());
    }

    #[test]
    fn sign_bias_all_nonnegative_is_error() {
        let s = series((0..100).map(|i| (i as f64 * 0.37).sin().abs()).collect());
        assert!(matches!(sign_bias(&s), Err(Error::Singular(_))));
    }

    #[test]
    fn pearson_perfect_grid() {
        let n = 400;
        let z: Vec<f64> = (0..n).map(|i| normal_quantile((i as f64 + 0.5) / n as f64)).collect();
        let r = pearson_gof(&series(z), 20).unwrap();
        assert_eq!(r.statistic, 0.0);
        assert_eq!(r.p_value, 1.0);
        assert!(pearson_gof(&series(vec![0.0; 30]), 10).is_err());
        assert!(pearson_gof(&series(vec![0.0; 30]), 3).is_err());
    }

    #[test]
    fn eacf_shape_and_length_check() {
        let s = series((0..200).map(|i| ((i * 7919) % 101) as f64).collect());
        let t = eacf(&s, 3, 5).unwrap();
        assert_eq!(t.symbols.len(), 4);
        assert!(t.symbols.iter().all(|r| r.len() == 6));
        assert!(eacf(&series(vec![1.0; 20]), 3, 3).is_err());
        let text = t.to_string();
        assert_eq!(text.lines().count(), 5);
    }

    #[test]
    fn test_result_json_shape() {
        let r = TestResult::new("Box-Pierce", 1.5, Some(vec![6.0]), 0.3).with_lag(6);
        let v: Value = serde_json::to_value(&r).unwrap();
        for key in ["name", "statistic", "dof", "p_value", "lag", "detail"] {
            assert!(v.get(key).is_some(), "{key}");
        }
    }
}
