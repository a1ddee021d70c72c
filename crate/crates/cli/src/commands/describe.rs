use quantset::series::{correlogram, summary_stats, CorrelogramRow, SummaryStats};
use quantset::special::normal_quantile;
use quantset::stattests::{jarque_bera, ljung_box, shapiro_wilk, TestResult};
use quantset::Series;
use serde::{Deserialize, Serialize};

use super::{first_last, input_line, load, test_lines};
use crate::args::DescribeArgs;
use crate::error::Result;
use crate::output::{num, opt_num, Sink};
use crate::svg::{Chart, Style};

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct DescribeReport {
    pub rows: usize,
    pub dropped_rows: usize,
    pub prices: SummaryStats,
    pub returns: SummaryStats,
    pub correlogram: Vec<CorrelogramRow>,
    /// Ljung-Box on the returns at each correlogram lag.
    pub ljung_box: Vec<TestResult>,
    pub normality: Vec<TestResult>,
}

pub fn run(args: &DescribeArgs) -> Result<()> {
    let mut sink = Sink::new(&args.run, "describe")?;
    let loaded = load(&args.data)?;
    let r = &loaded.returns;
    input_line(&mut sink, &args.data, &loaded);

    let prices = summary_stats(&loaded.prices)?;
    let returns = summary_stats(r)?;
    sink.heading("Summary statistics");
    sink.line(format!(
        "{:<12}{:>7}{:>14}{:>14}{:>14}{:>14}{:>11}{:>11}",
        "", "n", "mean", "std. dev.", "min", "max", "skewness", "ex. kurt."
    ));
    for (name, s) in [("price", &prices), ("log return", &returns)] {
        sink.line(format!(
            "{name:<12}{:>7}{}{}{}{}{}{}",
            s.n,
            num(s.mean, 14, 6),
            num(s.std_dev, 14, 6),
            num(s.min, 14, 6),
            num(s.max, 14, 6),
            opt_num(s.skewness, 11, 4),
            opt_num(s.excess_kurtosis, 11, 4)
        ));
    }

    // sample autocorrelations need lag < n/2
    let max_lag = args.lags.min(r.len().saturating_sub(1) / 2);
    let (corr, lb) = if max_lag >= 1 && returns.skewness.is_some() {
        let corr = correlogram(r, max_lag)?;
        let lb = (1..=max_lag).map(|k| ljung_box(r, k, 0)).collect::<quantset::Result<Vec<_>>>()?;
        (corr, lb)
    } else {
        (Vec::new(), Vec::new())
    };
    sink.heading("Correlogram of log returns");
    if corr.is_empty() {
        sink.line("not enough variation or observations for a correlogram");
    } else {
        sink.line(format!("{:<5}{:>10}{:>10}{:>10}{:>12}{:>10}", "lag", "AC", "PAC", "band", "Q-stat", "p"));
        for (row, q) in corr.iter().zip(&lb) {
            sink.line(format!(
                "{:<5}{}{}{}{}{}",
                row.lag,
                num(row.acf, 10, 4),
                num(row.pacf, 10, 4),
                num(row.conf_band, 10, 4),
                num(q.statistic, 12, 4),
                num(q.p_value, 10, 4)
            ));
        }
    }

    let mut normality = Vec::new();
    if returns.skewness.is_some() {
        normality.push(jarque_bera(r)?);
        if (3..=5000).contains(&r.len()) {
            normality.push(shapiro_wilk(r)?);
        }
    }
    sink.heading("Normality of log returns");
    if normality.is_empty() {
        sink.line("returns have zero variance");
    }
    test_lines(&mut sink, &normality);

    let report = DescribeReport {
        rows: loaded.prices.len(),
        dropped_rows: loaded.table.dropped_rows,
        prices,
        returns,
        correlogram: corr,
        ljung_box: lb,
        normality,
    };
    sink.json("describe.json", &report)?;

    let qq = qq_pairs(r.values());
    let hist = histogram(r.values());
    sink.csv("returns.csv", &returns_csv(&loaded.prices))?;
    sink.csv("correlogram.csv", &correlogram_csv(&report.correlogram, &report.ljung_box))?;
    sink.csv("qq.csv", &pairs_csv("theoretical,sample", &qq))?;
    sink.csv("histogram.csv", &histogram_csv(&hist))?;

    let (a, b) = first_last(&loaded.prices);
    let close = loaded.prices.name().to_string();
    sink.svg(
        "prices.svg",
        &Chart::new(format!("{close} price"), "date", "price")
            .indexed(&close, Style::Line, loaded.prices.values())
            .x_ends(&a, &b),
    )?;
    let (ra, rb) = first_last(r);
    sink.svg(
        "returns.svg",
        &Chart::new(format!("{close} log returns"), "date", "log return")
            .indexed("log return", Style::Line, r.values())
            .x_ends(&ra, &rb),
    )?;
    let acf_pts: Vec<(f64, f64)> = report.correlogram.iter().map(|c| (c.lag as f64, c.acf)).collect();
    let pacf_pts: Vec<(f64, f64)> = report.correlogram.iter().map(|c| (c.lag as f64 + 0.25, c.pacf)).collect();
    let mut chart = Chart::new("Correlogram of log returns", "lag", "correlation")
        .layer("ACF", Style::Sticks, acf_pts)
        .layer("PACF", Style::Sticks, pacf_pts);
    if let Some(c) = report.correlogram.first() {
        let last = report.correlogram.len() as f64 + 0.25;
        chart = chart
            .layer("95% band", Style::Dashed, vec![(1.0, c.conf_band), (last, c.conf_band)])
            .layer("", Style::Dashed, vec![(1.0, -c.conf_band), (last, -c.conf_band)]);
    }
    sink.svg("correlogram.svg", &chart)?;
    let line = qq_line(&qq, report.returns.mean, report.returns.std_dev);
    sink.svg(
        "qq.svg",
        &Chart::new("Normal Q-Q plot of log returns", "theoretical quantile", "sample quantile")
            .layer("returns", Style::Points, qq.clone())
            .layer("normal", Style::Line, line),
    )?;
    let bars: Vec<(f64, f64)> = hist.iter().map(|(lo, hi, c)| ((lo + hi) / 2.0, *c as f64)).collect();
    sink.svg("histogram.svg", &Chart::new("Histogram of log returns", "log return", "count").layer("count", Style::Sticks, bars))?;

    sink.finish()
}

/// Normal quantiles at plotting positions `(i − a)/(n + 1 − 2a)`, `a = 3/8`
/// for n ≤ 10 and `1/2` otherwise, paired with the sorted sample.
pub fn qq_pairs(x: &[f64]) -> Vec<(f64, f64)> {
    let n = x.len();
    let mut sorted = x.to_vec();
    sorted.sort_by(f64::total_cmp);
    let a = if n <= 10 { 0.375 } else { 0.5 };
    sorted
        .into_iter()
        .enumerate()
        .map(|(i, v)| (normal_quantile((i as f64 + 1.0 - a) / (n as f64 + 1.0 - 2.0 * a)), v))
        .collect()
}

fn qq_line(qq: &[(f64, f64)], mean: f64, sd: f64) -> Vec<(f64, f64)> {
    match (qq.first(), qq.last()) {
        (Some(lo), Some(hi)) => vec![(lo.0, mean + sd * lo.0), (hi.0, mean + sd * hi.0)],
        _ => Vec::new(),
    }
}

/// Sturges bins `⌈log2 n⌉ + 1` of equal width over the sample range.
pub fn histogram(x: &[f64]) -> Vec<(f64, f64, usize)> {
    if x.is_empty() {
        return Vec::new();
    }
    let bins = (x.len() as f64).log2().ceil() as usize + 1;
    let lo = x.iter().copied().fold(f64::INFINITY, f64::min);
    let hi = x.iter().copied().fold(f64::NEG_INFINITY, f64::max);
    if hi <= lo {
        return vec![(lo, hi, x.len())];
    }
    let w = (hi - lo) / bins as f64;
    let mut counts = vec![0usize; bins];
    for v in x {
        let i = (((v - lo) / w) as usize).min(bins - 1);
        counts[i] += 1;
    }
    counts.into_iter().enumerate().map(|(i, c)| (lo + w * i as f64, lo + w * (i + 1) as f64, c)).collect()
}

fn returns_csv(prices: &Series) -> String {
    let labels = prices.labels().unwrap_or_default();
    let v = prices.values();
    let mut out = String::from("date,price,log_return\n");
    for i in 0..v.len() {
        let date = labels.get(i).map_or_else(|| i.to_string(), Clone::clone);
        let ret = if i == 0 { String::new() } else { format!("{:e}", (v[i] / v[i - 1]).ln()) };
        out.push_str(&format!("{date},{},{ret}\n", v[i]));
    }
    out
}

fn correlogram_csv(rows: &[CorrelogramRow], lb: &[TestResult]) -> String {
    let mut out = String::from("lag,acf,pacf,conf_band,q_stat,p_value\n");
    for (r, q) in rows.iter().zip(lb) {
        out.push_str(&format!("{},{:e},{:e},{:e},{:e},{:e}\n", r.lag, r.acf, r.pacf, r.conf_band, q.statistic, q.p_value));
    }
    out
}

fn pairs_csv(header: &str, pts: &[(f64, f64)]) -> String {
    let mut out = format!("{header}\n");
    for (a, b) in pts {
        out.push_str(&format!("{a:e},{b:e}\n"));
    }
    out
}

fn histogram_csv(bins: &[(f64, f64, usize)]) -> String {
    let mut out = String::from("lower,upper,count\n");
    for (lo, hi, c) in bins {
        out.push_str(&format!("{lo:e},{hi:e},{c}\n"));
    }
    out
}
