mod common;

use proptest::prelude::*;
use quantset::risk::*;

use common::{bisect, normal_cdf_quadrature, phi, simpson, Xorshift};

const CSI: [(f64, f64, f64); 4] =
    [(0.95, 0.0217, 0.0269), (0.99, 0.0302, 0.0344), (0.999, 0.0397, 0.0432), (0.9999, 0.0476, 0.0506)];
const SPX: [(f64, f64, f64); 4] =
    [(0.95, 0.0192, 0.0233), (0.99, 0.0258, 0.0291), (0.999, 0.0332, 0.0359), (0.9999, 0.0393, 0.0416)];

fn check_table(mu: f64, sigma: f64, expected: &[(f64, f64, f64)]) {
    let t = risk_table(mu, sigma, &DEFAULT_PROBS).unwrap();
    assert_eq!(t.rows.len(), expected.len());
    for (row, (p, v, e)) in t.rows.iter().zip(expected) {
        assert_eq!(row.prob, *p);
        assert!((row.var_value - v).abs() <= 1e-4, "VaR {p}: {}", row.var_value);
        assert!((row.es_value - e).abs() <= 1e-4, "ES {p}: {}", row.es_value);
    }
}

#[test]
fn published_csi_table() {
    check_table(0.0011, 0.0125, &CSI);
}

#[test]
fn published_spx_table() {
    check_table(0.0033, 0.0097, &SPX);
}

#[test]
fn quantiles_match_bisection_on_integrated_density() {
    for (p, z) in [(0.95, 1.644_854), (0.99, 2.326_348)] {
        let root = bisect(|x| normal_cdf_quadrature(x) - p, 0.0, 6.0);
        let v = var_normal(0.0, 1.0, p).unwrap();
        assert!((v - root).abs() < 1e-5);
        assert!((v - z).abs() < 1e-5);
    }
}

fn tail_mean(mu: f64, sigma: f64, p: f64) -> f64 {
    let var = var_normal(mu, sigma, p).unwrap();
    let density = |x: f64| x * phi((x - mu) / sigma) / sigma;
    simpson(density, var, mu + 12.0 * sigma, 20_000) / (1.0 - p)
}

#[test]
fn shortfall_matches_tail_integral_on_grid() {
    let mut rng = Xorshift(99);
    for _ in 0..100 {
        let mu = rng.uniform(-0.01, 0.01);
        let sigma = rng.uniform(0.001, 0.05);
        let p = rng.uniform(0.9, 0.9999);
        let es = es_normal(mu, sigma, p).unwrap();
        assert!((es - tail_mean(mu, sigma, p)).abs() < 1e-8, "{mu} {sigma} {p}");
    }
}

#[test]
fn degenerate_volatility() {
    for p in DEFAULT_PROBS {
        assert_eq!(var_normal(0.004, 0.0, p).unwrap(), 0.004);
        assert_eq!(es_normal(0.004, 0.0, p).unwrap(), 0.004);
    }
}

#[test]
fn input_errors() {
    for p in [0.5, 0.2, 1.0, 1.5, f64::NAN] {
        assert!(var_normal(0.0, 1.0, p).is_err());
        assert!(es_normal(0.0, 1.0, p).is_err());
    }
    assert!(var_normal(0.0, -0.1, 0.95).is_err());
    assert!(risk_table(0.0, 0.01, &[0.95, 1.0]).is_err());
}

#[test]
fn exports() {
    let t = risk_table(0.0011, 0.0125, &DEFAULT_PROBS).unwrap();
    let csv = t.to_csv();
    let lines: Vec<&str> = csv.lines().collect();
    assert_eq!(lines[0], "prob,VaR,ES");
    assert_eq!(lines.len(), 5);
    assert!(lines[1].starts_with("0.95,0.021661,"));
    let text = t.to_string();
    assert_eq!(text.lines().count(), 5);
    assert!(text.lines().nth(4).unwrap().starts_with("4     0.9999"));
    let json = serde_json::to_string(&t).unwrap();
    let back: RiskTable = serde_json::from_str(&json).unwrap();
    assert_eq!(back, t);
}

proptest! {
    #[test]
    fn monotone_in_probability(mu in -0.05f64..0.05, sigma in 1e-4f64..0.1, p1 in 0.51f64..0.999, dp in 1e-4f64..0.0009) {
        let p2 = p1 + dp;
        prop_assert!(var_normal(mu, sigma, p2).unwrap() > var_normal(mu, sigma, p1).unwrap());
        prop_assert!(es_normal(mu, sigma, p2).unwrap() > es_normal(mu, sigma, p1).unwrap());
    }

    #[test]
    fn affine_in_mean_and_increasing_in_sigma(mu in -0.05f64..0.05, shift in -0.05f64..0.05, sigma in 1e-4f64..0.1, p in 0.51f64..0.9999) {
        let v = var_normal(mu, sigma, p).unwrap();
        let e = es_normal(mu, sigma, p).unwrap();
        prop_assert!((var_normal(mu + shift, sigma, p).unwrap() - v - shift).abs() < 1e-12);
        prop_assert!((es_normal(mu + shift, sigma, p).unwrap() - e - shift).abs() < 1e-12);
        prop_assert!(var_normal(mu, sigma * 1.1, p).unwrap() > v);
        prop_assert!(es_normal(mu, sigma * 1.1, p).unwrap() > e);
        prop_assert!(e > v);
    }
}
