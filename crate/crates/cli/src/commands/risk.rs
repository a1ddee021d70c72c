use std::fs;

use quantset::arma::ArmaFitRecord;
use quantset::risk::risk_table;

use crate::args::RiskArgs;
use crate::error::{CliError, Result};
use crate::output::Sink;

/// μ and σ from flags, falling back to an ARMA fit file for whichever is missing.
pub fn parameters(args: &RiskArgs) -> Result<(f64, f64)> {
    let record = match &args.fit {
        Some(path) => {
            let text = fs::read_to_string(path).map_err(|source| CliError::Read { path: path.clone(), source })?;
            let rec: ArmaFitRecord =
                serde_json::from_str(&text).map_err(|source| CliError::FitFile { path: path.clone(), source })?;
            Some(rec)
        }
        None => None,
    };
    let mu = args.mu.or_else(|| record.as_ref().map(|r| r.coefficient("intercept").unwrap_or(0.0)));
    let sigma = args.sigma.or_else(|| record.as_ref().map(|r| r.sigma2.sqrt()));
    match (mu, sigma) {
        (Some(m), Some(s)) => Ok((m, s)),
        _ => Err(CliError::Usage("risk needs --mu and --sigma, or --fit with an ARMA fit file".into())),
    }
}

pub fn run(args: &RiskArgs) -> Result<()> {
    let mut sink = Sink::new(&args.run, "risk")?;
    let (mu, sigma) = parameters(args)?;
    let table = risk_table(mu, sigma, &args.probs)?;
    sink.line(format!("Normal VaR and ES for mu = {mu}, sigma = {sigma}"));
    sink.blank();
    sink.block(table.to_string());
    sink.json("risk.json", &table)?;
    sink.csv("risk.csv", &table.to_csv())?;
    sink.finish()
}
