pub mod arma;
pub mod describe;
pub mod garch;
pub mod risk;
pub mod var;

use quantset::arma::{fit_arma_with, select_order_with, ArmaFit, ArmaOptions, ArmaSpec, OrderSelection};
use quantset::series::{load_csv, log_returns, PriceTable};
use quantset::stattests::TestResult;
use quantset::Series;
use serde::{Deserialize, Serialize};

use crate::args::{DataArgs, OrderArgs};
use crate::error::{CliError, Result};
use crate::output::{num, opt_num, Sink};

pub struct Loaded {
    pub table: PriceTable,
    pub prices: Series,
    pub returns: Series,
}

pub fn load(data: &DataArgs) -> Result<Loaded> {
    let table = load_csv(&data.input, &data.columns(), &data.date_format)?;
    let prices = table
        .get(&data.close_col)
        .cloned()
        .ok_or_else(|| quantset::Error::MissingColumn(data.close_col.clone()))?;
    let returns = log_returns(&prices)?;
    Ok(Loaded { table, prices, returns })
}

pub fn input_line(sink: &mut Sink, data: &DataArgs, loaded: &Loaded) {
    let labels = loaded.prices.labels().unwrap_or_default();
    let span = match (labels.first(), labels.last()) {
        (Some(a), Some(b)) => format!(", {a} to {b}"),
        _ => String::new(),
    };
    sink.line(format!(
        "input: {} ({} rows{span}, {} dropped)",
        data.input.display(),
        loaded.prices.len(),
        loaded.table.dropped_rows
    ));
}

pub fn first_last(s: &Series) -> (String, String) {
    let labels = s.labels().unwrap_or_default();
    match (labels.first(), labels.last()) {
        (Some(a), Some(b)) => (a.clone(), b.clone()),
        _ => ("0".into(), (s.len().saturating_sub(1)).to_string()),
    }
}

/// Fits the requested ARMA order, or runs the order grid first.
pub fn mean_model(
    returns: &Series,
    order: &OrderArgs,
    opts: &ArmaOptions,
) -> Result<(Option<OrderSelection>, ArmaFit)> {
    let (selection, mut spec) = match (order.p, order.q) {
        (Some(p), Some(q)) => (None, ArmaSpec::new(p, q, true)?),
        (None, None) => {
            if order.ar_lags.is_some() || order.ma_lags.is_some() {
                return Err(CliError::Usage("--ar-lags/--ma-lags need explicit --p and --q".into()));
            }
            let sel = select_order_with(returns, order.pmax, order.qmax, order.criterion, true, opts)?;
            let spec = sel.best.clone();
            (Some(sel), spec)
        }
        _ => return Err(CliError::Usage("give both --p and --q, or neither to search the grid".into())),
    };
    if let Some(lags) = &order.ar_lags {
        spec = spec.with_ar_lags(lags)?;
    }
    if let Some(lags) = &order.ma_lags {
        spec = spec.with_ma_lags(lags)?;
    }
    let fit = fit_arma_with(returns, &spec, opts)?;
    if !fit.converged {
        return Err(quantset::Error::NonConvergence(format!("ARMA{spec} did not converge")).into());
    }
    Ok((selection, fit))
}

/// Criterion grid with `p` down and `q` across; `*` marks the chosen cell.
pub fn selection_grid(sink: &mut Sink, sel: &OrderSelection) {
    let pmax = sel.table.iter().map(|c| c.p).max().unwrap_or(0);
    let qmax = sel.table.iter().map(|c| c.q).max().unwrap_or(0);
    let mut head = format!("{:<5}", "p\\q");
    for q in 0..=qmax {
        head.push_str(&format!("{q:>14}"));
    }
    sink.line(head);
    for p in 0..=pmax {
        let mut row = format!("{p:<5}");
        for q in 0..=qmax {
            let cell = sel.table.iter().find(|c| c.p == p && c.q == q);
            let v = cell.and_then(|c| match sel.criterion {
                quantset::arma::Criterion::Aic => c.aic,
                quantset::arma::Criterion::Bic => c.bic,
            });
            let mark = if p == sel.best.p && q == sel.best.q { "*" } else { " " };
            row.push_str(&format!("{}{mark}", opt_num(v, 13, 3)));
        }
        sink.line(row);
    }
}

pub fn selection_csv(sel: &OrderSelection) -> String {
    let mut out = String::from("p,q,aic,bic,log_lik,failure\n");
    let f = |v: Option<f64>| v.map_or_else(String::new, |x| format!("{x:e}"));
    for c in &sel.table {
        let failure = c.failure.as_deref().unwrap_or("").replace(['"', ','], " ");
        out.push_str(&format!("{},{},{},{},{},{failure}\n", c.p, c.q, f(c.aic), f(c.bic), f(c.log_lik)));
    }
    out
}

pub fn coefficient_table(sink: &mut Sink, coefs: &[quantset::arma::Coefficient]) {
    sink.line(format!("{:<12}{:>14}{:>14}{:>10}", "", "estimate", "std. error", "t"));
    for c in coefs {
        let t = c.std_error.filter(|s| *s > 0.0).map(|s| c.value / s);
        sink.line(format!(
            "{:<12}{}{}{}",
            c.name,
            num(c.value, 14, 6),
            opt_num(c.std_error, 14, 6),
            opt_num(t, 10, 3)
        ));
    }
}

pub fn test_lines(sink: &mut Sink, tests: &[TestResult]) {
    for t in tests {
        sink.line(t.to_string());
    }
}

/// One row of a residual portmanteau table.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PortmanteauRow {
    pub lag: usize,
    pub box_pierce: TestResult,
    pub ljung_box: TestResult,
}

pub fn portmanteau_table(sink: &mut Sink, rows: &[PortmanteauRow]) {
    sink.line(format!(
        "{:<5}{:>12}{:>6}{:>10}{:>12}{:>6}{:>10}",
        "lag", "Box-Pierce", "df", "p", "Ljung-Box", "df", "p"
    ));
    let df = |t: &TestResult| t.dof.as_ref().and_then(|d| d.first()).map_or(0.0, |d| *d);
    for r in rows {
        sink.line(format!(
            "{:<5}{}{:>6}{}{}{:>6}{}",
            r.lag,
            num(r.box_pierce.statistic, 12, 4),
            df(&r.box_pierce),
            num(r.box_pierce.p_value, 10, 4),
            num(r.ljung_box.statistic, 12, 4),
            df(&r.ljung_box),
            num(r.ljung_box.p_value, 10, 4)
        ));
    }
}
