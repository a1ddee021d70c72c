#![allow(dead_code)]

use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use quantset::linalg::Matrix;
use quantset::arma::ArmaModel;
use quantset::sim::{simulate_arma, simulate_var, standard_normals};

pub fn bin() -> Command {
    let mut c = Command::new(env!("CARGO_BIN_EXE_quantset"));
    c.env_remove("QUANTSET_SEED");
    c
}

pub fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

pub fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

/// Distinct ISO dates, one per index.
pub fn date(i: usize) -> String {
    format!("{}-{:02}-{:02}", 2000 + i / 336, 1 + (i / 28) % 12, 1 + i % 28)
}

pub fn prices_from_returns(r: &[f64]) -> Vec<f64> {
    let mut p = vec![100.0];
    for x in r {
        p.push(p.last().unwrap() * x.exp());
    }
    p
}

pub fn write_closes(dir: &Path, name: &str, closes: &[f64]) -> PathBuf {
    let mut s = String::from("Date,Close\n");
    for (i, c) in closes.iter().enumerate() {
        s.push_str(&format!("{},{c}\n", date(i)));
    }
    let path = dir.join(name);
    std::fs::write(&path, s).unwrap();
    path
}

/// Rows are `[close, open, high, low]`.
pub fn write_ohlc(dir: &Path, name: &str, rows: &[[f64; 4]]) -> PathBuf {
    let mut s = String::from("Date,Open,High,Low,Close\n");
    for (i, r) in rows.iter().enumerate() {
        s.push_str(&format!("{},{},{},{},{}\n", date(i), r[1], r[2], r[3], r[0]));
    }
    let path = dir.join(name);
    std::fs::write(&path, s).unwrap();
    path
}

/// Log returns following a GARCH-free AR(1) with the given coefficient.
pub fn ar1_returns(phi: f64, n: usize, seed: u64) -> Vec<f64> {
    simulate_arma(&ArmaModel::new(0.0005, vec![phi], vec![], 1e-4), n, seed)
}

pub fn white_returns(n: usize, seed: u64) -> Vec<f64> {
    standard_normals(n, seed).into_iter().map(|z| 0.0004 + 0.01 * z).collect()
}

/// Stationary four-variable system around 100 where only Close feeds Open.
pub fn planted_ohlc(n: usize, seed: u64) -> Vec<[f64; 4]> {
    let mut a = Matrix::zeros(4, 4);
    for i in 0..4 {
        a[(i, i)] = 0.5;
    }
    a[(1, 0)] = 0.6;
    let cov = Matrix::identity(4);
    let x = simulate_var(&[50.0, 20.0, 50.0, 50.0], &[a], &cov, n, seed).unwrap();
    (0..n).map(|t| [x[0][t], x[1][t], x[2][t], x[3][t]]).collect()
}
