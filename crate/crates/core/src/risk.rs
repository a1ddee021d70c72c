//! Normal Value-at-Risk and Expected Shortfall.
//!
//! Values are upper-tail return quantiles: `VaR = μ + z(p)·σ` and
//! `ES = μ + σ·φ(z(p))/(1 − p)`.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::special::{normal_pdf, normal_quantile};

pub const DEFAULT_PROBS: [f64; 4] = [0.95, 0.99, 0.999, 0.9999];

fn check(sigma: f64, prob: f64) -> Result<()> {
    if !(prob > 0.5 && prob < 1.0) {
        return Err(Error::invalid(format!("probability {prob} must lie in (0.5, 1)")));
    }
    if !(sigma >= 0.0) || !sigma.is_finite() {
        return Err(Error::invalid(format!("sigma {sigma} must be a finite non-negative number")));
    }
    Ok(())
}

pub fn var_normal(mu: f64, sigma: f64, prob: f64) -> Result<f64> {
    check(sigma, prob)?;
    if sigma == 0.0 {
        return Ok(mu);
    }
    Ok(mu + normal_quantile(prob) * sigma)
}

pub fn es_normal(mu: f64, sigma: f64, prob: f64) -> Result<f64> {
    check(sigma, prob)?;
    if sigma == 0.0 {
        return Ok(mu);
    }
    Ok(mu + sigma * normal_pdf(normal_quantile(prob)) / (1.0 - prob))
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct RiskRow {
    pub prob: f64,
    pub var_value: f64,
    pub es_value: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RiskTable {
    pub mu: f64,
    pub sigma: f64,
    pub rows: Vec<RiskRow>,
}

pub fn risk_table(mu: f64, sigma: f64, probs: &[f64]) -> Result<RiskTable> {
    let rows = probs
        .iter()
        .map(|&prob| {
            Ok(RiskRow { prob, var_value: var_normal(mu, sigma, prob)?, es_value: es_normal(mu, sigma, prob)? })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(RiskTable { mu, sigma, rows })
}

impl RiskTable {
    pub fn to_csv(&self) -> String {
        let mut out = String::from("prob,VaR,ES\n");
        for r in &self.rows {
            out.push_str(&format!("{},{:.6},{:.6}\n", r.prob, r.var_value, r.es_value));
        }
        out
    }
}

impl fmt::Display for RiskTable {
    /// Numbered rows with four-decimal values.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{:<4}{:>8}{:>10}{:>10}", "", "prob", "VaR", "ES")?;
        for (i, r) in self.rows.iter().enumerate() {
            writeln!(f, "{:<4}{:>8}{:>10.4}{:>10.4}", i + 1, r.prob, r.var_value, r.es_value)?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn zero_sigma_is_degenerate() {
        let t = risk_table(0.002, 0.0, &[0.95]).unwrap();
        assert_eq!(t.rows, vec![RiskRow { prob: 0.95, var_value: 0.002, es_value: 0.002 }]);
    }

    #[test]
    fn rejects_bad_inputs() {
        assert!(var_normal(0.0, 1.0, 0.5).is_err());
        assert!(var_normal(0.0, 1.0, 1.0).is_err());
        assert!(es_normal(0.0, -1.0, 0.9).is_err());
        assert!(es_normal(0.0, f64::NAN, 0.9).is_err());
    }

    #[test]
    fn text_layout() {
        let t = risk_table(0.0011, 0.0125, &[0.95]).unwrap();
        let s = t.to_string();
        assert!(s.lines().nth(1).unwrap().starts_with("1       0.95    0.0217    0.0269"));
    }
}
