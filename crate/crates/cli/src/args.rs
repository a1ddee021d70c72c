use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use quantset::arma::Criterion;
use quantset::risk::DEFAULT_PROBS;
use quantset::series::{ColumnMap, DEFAULT_DATE_FORMAT};

#[derive(Debug, Parser)]
#[command(name = "quantset", version, about = "Econometrics for daily price series: ARMA, GARCH, VaR/ES and VAR")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Summary statistics, correlogram, Q-Q pairs and histogram of log returns.
    Describe(DescribeArgs),
    /// Unit-root test, order selection, ARMA fit, residual checks and forecasts.
    Arma(ArmaArgs),
    /// Volatility model on ARMA residuals with diagnostics and forecasts.
    Garch(GarchArgs),
    /// Normal VaR and ES table.
    Risk(RiskArgs),
    /// VAR on price levels: Granger tests, roots, impulse responses, FEVD, forecasts.
    Var(VarArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Csv,
    Svg,
}

#[derive(Debug, Args)]
pub struct DataArgs {
    /// CSV file with a date column and price columns.
    #[arg(long)]
    pub input: PathBuf,
    #[arg(long, default_value = "Date")]
    pub date_col: String,
    #[arg(long, default_value = "Close")]
    pub close_col: String,
    #[arg(long)]
    pub open_col: Option<String>,
    #[arg(long)]
    pub high_col: Option<String>,
    #[arg(long)]
    pub low_col: Option<String>,
    /// strftime-style pattern for the date column.
    #[arg(long, default_value = DEFAULT_DATE_FORMAT)]
    pub date_format: String,
}

impl DataArgs {
    pub fn columns(&self) -> ColumnMap {
        ColumnMap {
            date: self.date_col.clone(),
            close: Some(self.close_col.clone()),
            open: self.open_col.clone(),
            high: self.high_col.clone(),
            low: self.low_col.clone(),
        }
    }
}

#[derive(Debug, Args)]
pub struct RunArgs {
    /// Seed for optimizer restarts and Monte Carlo forecasts.
    #[arg(long, env = "QUANTSET_SEED", default_value_t = 42)]
    pub seed: u64,
    /// Directory for json/csv/svg files (and a copy of the text report).
    #[arg(long)]
    pub out: Option<PathBuf>,
    #[arg(long, value_enum, value_delimiter = ',', default_value = "text")]
    pub format: Vec<Format>,
}

#[derive(Debug, Args)]
pub struct OrderArgs {
    /// AR order; together with --q skips order selection.
    #[arg(long)]
    pub p: Option<usize>,
    /// MA order; together with --p skips order selection.
    #[arg(long)]
    pub q: Option<usize>,
    #[arg(long, default_value_t = 6)]
    pub pmax: usize,
    #[arg(long, default_value_t = 6)]
    pub qmax: usize,
    #[arg(long, default_value = "aic", value_parser = parse_criterion)]
    pub criterion: Criterion,
    /// Keep only these AR lags free (requires --p).
    #[arg(long, value_delimiter = ',')]
    pub ar_lags: Option<Vec<usize>>,
    /// Keep only these MA lags free (requires --q).
    #[arg(long, value_delimiter = ',')]
    pub ma_lags: Option<Vec<usize>>,
}

fn parse_criterion(s: &str) -> Result<Criterion, String> {
    s.parse().map_err(|e: quantset::Error| e.to_string())
}

#[derive(Debug, Args)]
pub struct DescribeArgs {
    #[command(flatten)]
    pub data: DataArgs,
    /// Largest correlogram lag.
    #[arg(long, default_value_t = 20)]
    pub lags: usize,
    #[command(flatten)]
    pub run: RunArgs,
}

#[derive(Debug, Args)]
pub struct ArmaArgs {
    #[command(flatten)]
    pub data: DataArgs,
    #[command(flatten)]
    pub order: OrderArgs,
    #[arg(long, default_value_t = 7)]
    pub horizon: usize,
    #[command(flatten)]
    pub run: RunArgs,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum VolModel {
    Garch,
    Egarch,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum MeanModel {
    /// Residuals of an ARMA fit.
    Arma,
    /// Demeaned log returns.
    None,
}

#[derive(Debug, Args)]
pub struct GarchArgs {
    #[command(flatten)]
    pub data: DataArgs,
    #[command(flatten)]
    pub order: OrderArgs,
    #[arg(long, value_enum, default_value = "garch")]
    pub model: VolModel,
    #[arg(long, value_enum, default_value = "arma")]
    pub mean_model: MeanModel,
    /// ARCH-LM lag.
    #[arg(long, default_value_t = 12)]
    pub lags: usize,
    #[arg(long, default_value_t = 7)]
    pub horizon: usize,
    #[command(flatten)]
    pub run: RunArgs,
}

#[derive(Debug, Args)]
pub struct RiskArgs {
    #[arg(long, allow_hyphen_values = true)]
    pub mu: Option<f64>,
    #[arg(long)]
    pub sigma: Option<f64>,
    /// ARMA fit JSON written by `arma`; supplies μ (intercept) and σ (√sigma2).
    #[arg(long)]
    pub fit: Option<PathBuf>,
    #[arg(long, value_delimiter = ',', default_values_t = DEFAULT_PROBS)]
    pub probs: Vec<f64>,
    #[command(flatten)]
    pub run: RunArgs,
}

#[derive(Debug, Args)]
pub struct VarArgs {
    #[command(flatten)]
    pub data: DataArgs,
    #[arg(long, default_value_t = 1)]
    pub var_lag: usize,
    /// Cholesky ordering, e.g. Close,Open,High,Low. Defaults to column order.
    #[arg(long, value_delimiter = ',')]
    pub ordering: Option<Vec<String>>,
    /// Forecast steps.
    #[arg(long, default_value_t = 5)]
    pub horizon: usize,
    /// Impulse-response and variance-decomposition horizon.
    #[arg(long, default_value_t = 10)]
    pub irf_horizon: usize,
    #[command(flatten)]
    pub run: RunArgs,
}
