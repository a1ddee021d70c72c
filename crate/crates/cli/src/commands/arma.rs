use quantset::arma::{ArmaFitRecord, ArmaOptions, ForecastPath, OrderSelection};
use quantset::stattests::{adf_test, box_pierce, ljung_box, TestResult};
use serde::{Deserialize, Serialize};

use super::{
    coefficient_table, first_last, input_line, load, mean_model, portmanteau_table, selection_csv, selection_grid,
    PortmanteauRow,
};
use crate::args::ArmaArgs;
use crate::error::Result;
use crate::output::{num, Sink};
use crate::svg::{Chart, Style};

pub const RESIDUAL_LAGS: [usize; 3] = [6, 12, 18];

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ArmaReport {
    pub adf: TestResult,
    pub selection: Option<OrderSelection>,
    pub fit: ArmaFitRecord,
    pub residual_tests: Vec<PortmanteauRow>,
    pub forecast: ForecastPath,
}

/// Lag order `⌊(n − 1)^{1/3}⌋` for the augmented Dickey-Fuller regression.
pub fn adf_lag(n: usize) -> usize {
    ((n.saturating_sub(1)) as f64).cbrt().floor() as usize
}

pub fn run(args: &ArmaArgs) -> Result<()> {
    let mut sink = Sink::new(&args.run, "arma")?;
    let loaded = load(&args.data)?;
    let r = &loaded.returns;
    input_line(&mut sink, &args.data, &loaded);

    let adf = adf_test(r, adf_lag(r.len()))?;
    sink.heading("Unit root test on log returns");
    sink.line(adf.to_string());

    let opts = ArmaOptions::with_seed(args.run.seed);
    let (selection, fit) = mean_model(r, &args.order, &opts)?;
    if let Some(sel) = &selection {
        sink.heading(&format!("Order selection ({})", format!("{:?}", sel.criterion).to_uppercase()));
        selection_grid(&mut sink, sel);
    }

    sink.heading(&format!("{} fit", fit.spec));
    coefficient_table(&mut sink, &fit.coefficients);
    sink.line(format!(
        "sigma^2 = {:.6e}   log likelihood = {:.4}   AIC = {:.4}   BIC = {:.4}   n = {}",
        fit.sigma2, fit.log_lik, fit.aic, fit.bic, fit.n
    ));

    let fitdf = fit.spec.p + fit.spec.q - masked(&fit.spec.ar_mask) - masked(&fit.spec.ma_mask);
    let residual_tests = RESIDUAL_LAGS
        .iter()
        .filter(|&&lag| lag < fit.residuals.len())
        .map(|&lag| {
            let df = fitdf.min(lag - 1);
            Ok(PortmanteauRow {
                lag,
                box_pierce: box_pierce(&fit.residuals, lag, df)?,
                ljung_box: ljung_box(&fit.residuals, lag, df)?,
            })
        })
        .collect::<quantset::Result<Vec<_>>>()?;
    sink.heading("Residual autocorrelation");
    portmanteau_table(&mut sink, &residual_tests);

    let forecast = fit.forecast(args.horizon)?;
    sink.heading("Forecast of log returns");
    sink.line(format!("{:<6}{:>14}{:>14}", "step", "forecast", "std. error"));
    for (i, (f, se)) in forecast.point.iter().zip(&forecast.std_err).enumerate() {
        sink.line(format!("{:<6}{}{}", i + 1, num(*f, 14, 6), num(*se, 14, 6)));
    }

    let report = ArmaReport { adf, selection, fit: fit.to_record(), residual_tests, forecast };
    sink.json("arma_fit.json", &report.fit)?;
    sink.json("arma.json", &report)?;
    if let Some(sel) = &report.selection {
        sink.csv("arma_selection.csv", &selection_csv(sel))?;
    }
    sink.csv("arma_forecast.csv", &forecast_csv(&report.forecast))?;
    sink.csv("arma_residuals.csv", &residuals_csv(&fit.residuals))?;

    let (a, b) = first_last(&fit.residuals);
    sink.svg(
        "arma_residuals.svg",
        &Chart::new(format!("{} residuals", fit.spec), "date", "residual")
            .indexed("residual", Style::Line, fit.residuals.values())
            .x_ends(&a, &b),
    )?;
    sink.svg("arma_forecast.svg", &forecast_chart(r.values(), &report.forecast, &fit.spec.to_string()))?;
    sink.finish()
}

fn masked(mask: &Option<Vec<bool>>) -> usize {
    mask.as_ref().map_or(0, |m| m.iter().filter(|free| !**free).count())
}

fn forecast_csv(f: &ForecastPath) -> String {
    let mut out = String::from("step,forecast,std_error\n");
    for (i, (p, se)) in f.point.iter().zip(&f.std_err).enumerate() {
        out.push_str(&format!("{},{p:e},{se:e}\n", i + 1));
    }
    out
}

fn residuals_csv(res: &quantset::Series) -> String {
    let labels = res.labels().unwrap_or_default();
    let mut out = String::from("date,residual\n");
    for (i, v) in res.values().iter().enumerate() {
        let date = labels.get(i).map_or_else(|| i.to_string(), Clone::clone);
        out.push_str(&format!("{date},{v:e}\n"));
    }
    out
}

/// Last 60 observations followed by the forecast and a ±2 s.e. band.
fn forecast_chart(history: &[f64], f: &ForecastPath, name: &str) -> Chart {
    let n = history.len();
    let start = n.saturating_sub(60);
    let hist: Vec<(f64, f64)> = (start..n).map(|i| (i as f64, history[i])).collect();
    let at = |i: usize| (n + i) as f64;
    let point: Vec<(f64, f64)> = f.point.iter().enumerate().map(|(i, v)| (at(i), *v)).collect();
    let upper = f.point.iter().zip(&f.std_err).enumerate().map(|(i, (v, s))| (at(i), v + 2.0 * s)).collect();
    let lower = f.point.iter().zip(&f.std_err).enumerate().map(|(i, (v, s))| (at(i), v - 2.0 * s)).collect();
    Chart::new(format!("{name} forecast"), "observation", "log return")
        .layer("observed", Style::Line, hist)
        .layer("forecast", Style::Line, point)
        .layer("+2 s.e.", Style::Dashed, upper)
        .layer("-2 s.e.", Style::Dashed, lower)
}
