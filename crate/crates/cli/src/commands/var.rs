use quantset::series::load_csv;
use quantset::var_system::{
    fevd, fit_var, granger_table, irf, stability_roots, var_forecast, FevdTable, GrangerTable, MultiSeries,
    VarFitRecord, VarForecast,
};
use serde::{Deserialize, Serialize};

use crate::args::VarArgs;
use crate::error::Result;
use crate::output::{num, Sink};
use crate::svg::{Chart, Style};

pub const LEVELS_WARNING: &str =
    "warning: the VAR is fitted to price levels; trending prices can put roots near the unit circle";

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Root {
    pub re: f64,
    pub im: f64,
    pub modulus: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct IrfRecord {
    pub variables: Vec<String>,
    pub horizon: usize,
    /// `responses[h][i][j]`: response of variable i to a shock in j.
    pub responses: Vec<Vec<Vec<f64>>>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct VarReport {
    pub fit: VarFitRecord,
    pub granger: GrangerTable,
    pub roots: Vec<Root>,
    pub stable: bool,
    pub irf: IrfRecord,
    pub fevd: FevdTable,
    pub forecast: VarForecast,
}

pub fn run(args: &VarArgs) -> Result<()> {
    let mut sink = Sink::new(&args.run, "var")?;
    let mut cols = args.data.columns();
    cols.open.get_or_insert_with(|| "Open".into());
    cols.high.get_or_insert_with(|| "High".into());
    cols.low.get_or_insert_with(|| "Low".into());
    let table = load_csv(&args.data.input, &cols, &args.data.date_format)?;
    let m = MultiSeries::from_table(&table)?;
    let names = m.names();
    sink.line(format!(
        "input: {} ({} rows, {} dropped)",
        args.data.input.display(),
        m.len(),
        table.dropped_rows
    ));
    sink.line(LEVELS_WARNING);
    eprintln!("{LEVELS_WARNING}");

    let fit = fit_var(&m, args.var_lag)?;
    sink.heading(&format!("VAR({}) on {} (effective n = {})", fit.lag_order, names.join(", "), fit.n_effective));
    for v in &names {
        sink.line(fit.equation(v)?);
    }

    let granger = granger_table(&m, args.var_lag)?;
    sink.heading(&format!("Granger causality (lag {})", granger.lag));
    sink.block(granger.to_string());

    let stability = stability_roots(&fit)?;
    sink.heading("Companion matrix eigenvalues");
    sink.block(stability.to_string());

    let ordering = args.ordering.clone().unwrap_or_else(|| names.clone());
    let ir = irf(&fit, args.irf_horizon, &ordering)?;
    sink.heading(&format!("Orthogonalized impulse responses (ordering {})", ir.variables.join(", ")));
    for (i, resp) in ir.variables.iter().enumerate() {
        sink.line(format!("response of {resp}"));
        let mut head = format!("{:<6}", "h");
        for shock in &ir.variables {
            head.push_str(&format!("{shock:>14}"));
        }
        sink.line(head);
        for (h, mat) in ir.responses.iter().enumerate() {
            let mut row = format!("{h:<6}");
            for j in 0..ir.variables.len() {
                row.push_str(&num(mat[(i, j)], 14, 6));
            }
            sink.line(row);
        }
        sink.blank();
    }

    let fe = fevd(&fit, args.irf_horizon, &ordering)?;
    sink.heading("Forecast error variance decomposition (%)");
    for v in &fe.variables {
        sink.line(format!("{v}"));
        sink.block(fe.render(v).unwrap_or_default());
        sink.blank();
    }

    let fc = var_forecast(&fit, args.horizon)?;
    sink.heading("Forecast");
    let mut head = format!("{:<6}", "step");
    for v in &fc.variables {
        head.push_str(&format!("{v:>14}"));
    }
    sink.line(head);
    for (s, x) in fc.steps.iter().enumerate() {
        let mut row = format!("{:<6}", s + 1);
        for v in x {
            row.push_str(&num(*v, 14, 4));
        }
        sink.line(row);
    }

    let report = VarReport {
        fit: fit.to_record(),
        granger,
        roots: stability.eigenvalues.iter().map(|z| Root { re: z.re, im: z.im, modulus: z.norm() }).collect(),
        stable: stability.stable,
        irf: IrfRecord {
            variables: ir.variables.clone(),
            horizon: ir.horizon,
            responses: ir.responses.iter().map(|mat| mat.to_rows()).collect(),
        },
        fevd: fe,
        forecast: fc,
    };
    sink.json("var_fit.json", &report.fit)?;
    sink.json("var.json", &report)?;
    sink.csv("var_granger.csv", &report.granger.to_csv())?;
    sink.csv("var_roots.csv", &roots_csv(&report.roots))?;
    sink.csv("var_irf.csv", &ir.to_csv())?;
    sink.csv("var_fevd.csv", &report.fevd.to_csv())?;
    sink.csv("var_forecast.csv", &report.forecast.to_csv())?;

    let first = &ir.variables[0];
    let mut chart = Chart::new(format!("Response of {first}"), "horizon", "response");
    for (j, shock) in ir.variables.iter().enumerate() {
        let pts = ir.path(0, j).into_iter().enumerate().map(|(h, v)| (h as f64, v)).collect();
        chart = chart.layer(format!("shock {shock}"), Style::Line, pts);
    }
    sink.svg("var_irf.svg", &chart)?;
    let circle = (0..=72).map(|i| (i as f64 * 5.0).to_radians()).map(|t| (t.cos(), t.sin())).collect();
    sink.svg(
        "var_roots.svg",
        &Chart::new("Companion eigenvalues", "real", "imaginary")
            .layer("unit circle", Style::Dashed, circle)
            .layer("eigenvalues", Style::Points, report.roots.iter().map(|r| (r.re, r.im)).collect()),
    )?;
    sink.finish()
}

fn roots_csv(roots: &[Root]) -> String {
    let mut out = String::from("re,im,modulus\n");
    for r in roots {
        out.push_str(&format!("{:e},{:e},{:e}\n", r.re, r.im, r.modulus));
    }
    out
}
