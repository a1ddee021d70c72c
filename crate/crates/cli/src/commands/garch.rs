use quantset::arma::{ArmaFitRecord, ArmaOptions};
use quantset::garch::{
    fit_egarch_with, fit_garch_with, garch_diagnostics, GarchDiagnostics, GarchOptions, VolFitRecord, VolForecast,
    VolForecastOptions, VolatilityFit,
};
use quantset::stattests::{arch_lm, eacf, jarque_bera, shapiro_wilk, EacfTable, TestResult};
use quantset::Series;
use quantset::SeriesKind;
use serde::{Deserialize, Serialize};

use super::{coefficient_table, first_last, input_line, load, mean_model, selection_grid, test_lines};
use crate::args::{GarchArgs, MeanModel, VolModel};
use crate::error::Result;
use crate::output::{num, Sink};
use crate::svg::{Chart, Style};

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GarchReport {
    /// `None` when the returns were only demeaned.
    pub mean_model: Option<ArmaFitRecord>,
    pub residual_tests: Vec<TestResult>,
    pub eacf_squared: Option<EacfTable>,
    pub fit: VolFitRecord,
    pub warnings: Vec<String>,
    pub diagnostics: GarchDiagnostics,
    pub forecast: VolForecast,
}

pub fn run(args: &GarchArgs) -> Result<()> {
    let mut sink = Sink::new(&args.run, "garch")?;
    let loaded = load(&args.data)?;
    let r = &loaded.returns;
    input_line(&mut sink, &args.data, &loaded);

    let (mean_record, resid) = match args.mean_model {
        MeanModel::Arma => {
            let (selection, fit) = mean_model(r, &args.order, &ArmaOptions::with_seed(args.run.seed))?;
            if let Some(sel) = &selection {
                sink.heading(&format!("Mean model selection ({})", format!("{:?}", sel.criterion).to_uppercase()));
                selection_grid(&mut sink, sel);
            }
            sink.heading(&format!("Mean model: {}", fit.spec));
            coefficient_table(&mut sink, &fit.coefficients);
            sink.line(format!("sigma^2 = {:.6e}   log likelihood = {:.4}", fit.sigma2, fit.log_lik));
            (Some(fit.to_record()), fit.residuals.clone())
        }
        MeanModel::None => {
            let m = r.mean();
            let u: Vec<f64> = r.values().iter().map(|v| v - m).collect();
            let mut s = Series::new("demeaned returns", SeriesKind::Residual, u)?;
            if let Some(l) = r.labels() {
                s = s.with_labels(l.to_vec())?;
            }
            sink.heading("Mean model: sample mean");
            sink.line(format!("mean = {m:.6e}"));
            (None, s)
        }
    };

    let mut residual_tests = vec![jarque_bera(&resid)?];
    if (3..=5000).contains(&resid.len()) {
        residual_tests.push(shapiro_wilk(&resid)?);
    }
    residual_tests.push(arch_lm(&resid, args.lags)?);
    sink.heading("Mean-model residuals");
    test_lines(&mut sink, &residual_tests);

    let squared = Series::new("squared residuals", SeriesKind::Other, resid.values().iter().map(|v| v * v).collect())?;
    let eacf_squared = eacf(&squared, 6, 12).ok();
    if let Some(t) = &eacf_squared {
        sink.heading("EACF of squared residuals (x significant, o not)");
        sink.block(t.to_string());
    }

    let opts = GarchOptions::with_seed(args.run.seed);
    let (fit, record, warnings, converged): (Box<dyn VolatilityFit>, _, _, _) = match args.model {
        VolModel::Garch => {
            let f = fit_garch_with(&resid, 1, 1, &opts)?;
            let (rec, w, c) = (f.to_record(), f.warnings.clone(), f.converged);
            (Box::new(f), rec, w, c)
        }
        VolModel::Egarch => {
            let f = fit_egarch_with(&resid, &opts)?;
            let (rec, w, c) = (f.to_record(), f.warnings.clone(), f.converged);
            (Box::new(f), rec, w, c)
        }
    };
    if !converged {
        return Err(quantset::Error::NonConvergence(format!("{} did not converge", fit.model_name())).into());
    }
    sink.heading(&fit.model_name());
    coefficient_table(&mut sink, fit.coefficients());
    let mut summary = format!("log likelihood = {:.4}", fit.log_lik());
    if let Some(p) = record.persistence {
        summary.push_str(&format!("   persistence = {p:.6}"));
    }
    sink.line(summary);
    for w in &warnings {
        sink.line(format!("warning: {w}"));
        eprintln!("warning: {w}");
    }

    let diagnostics = garch_diagnostics(fit.as_ref())?;
    sink.heading("Standardized residual diagnostics");
    test_lines(&mut sink, &diagnostics.all().into_iter().cloned().collect::<Vec<_>>());

    let forecast = fit.forecast_variance(args.horizon, &VolForecastOptions { seed: args.run.seed, ..Default::default() })?;
    sink.heading("Volatility forecast");
    sink.line(format!("{:<6}{:>16}{:>14}", "step", "variance", "volatility"));
    for (i, (v, s)) in forecast.sigma2.iter().zip(&forecast.sigma).enumerate() {
        sink.line(format!("{:<6}{:>16.6e}{}", i + 1, v, num(*s, 14, 6)));
    }

    let report = GarchReport {
        mean_model: mean_record,
        residual_tests,
        eacf_squared,
        fit: record,
        warnings,
        diagnostics,
        forecast,
    };
    sink.json("garch_fit.json", &report.fit)?;
    sink.json("garch.json", &report)?;
    sink.csv("garch_volatility.csv", &volatility_csv(&resid, fit.cond_var()))?;
    sink.csv("garch_forecast.csv", &report.forecast.to_csv())?;

    let (a, b) = first_last(&resid);
    let sigma: Vec<f64> = fit.cond_var().iter().map(|v| v.sqrt()).collect();
    let abs_u: Vec<f64> = resid.values().iter().map(|v| v.abs()).collect();
    sink.svg(
        "garch_volatility.svg",
        &Chart::new(format!("{} conditional volatility", fit.model_name()), "date", "volatility")
            .indexed("|residual|", Style::Line, &abs_u)
            .indexed("sigma_t", Style::Line, &sigma)
            .x_ends(&a, &b),
    )?;
    sink.svg(
        "garch_forecast.svg",
        &Chart::new(format!("{} volatility forecast", fit.model_name()), "step", "volatility").layer(
            "sigma",
            Style::Line,
            report.forecast.sigma.iter().enumerate().map(|(i, s)| ((i + 1) as f64, *s)).collect(),
        ),
    )?;
    sink.finish()
}

fn volatility_csv(resid: &Series, cond_var: &[f64]) -> String {
    let labels = resid.labels().unwrap_or_default();
    let mut out = String::from("date,residual,cond_var,std_residual\n");
    for (i, (u, h)) in resid.values().iter().zip(cond_var).enumerate() {
        let date = labels.get(i).map_or_else(|| i.to_string(), Clone::clone);
        out.push_str(&format!("{date},{u:e},{h:e},{:e}\n", u / h.sqrt()));
    }
    out
}
