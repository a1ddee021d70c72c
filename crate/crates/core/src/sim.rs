//! Seeded simulators for the models in this crate. Every function takes a
//! `u64` seed and is deterministic for it.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, StandardNormal};

use crate::arma::ArmaModel;
use crate::error::Result;
use crate::garch::{EgarchModel, GarchModel};
use crate::linalg::Matrix;

const BURN_IN: usize = 500;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn standard_normals(n: usize, seed: u64) -> Vec<f64> {
    let mut r = rng(seed);
    (0..n).map(|_| StandardNormal.sample(&mut r)).collect()
}

/// Gaussian ARMA path of length `n` after a burn-in.
pub fn simulate_arma(model: &ArmaModel, n: usize, seed: u64) -> Vec<f64> {
    let sd = model.sigma2.sqrt();
    let e: Vec<f64> = standard_normals(n + BURN_IN, seed).into_iter().map(|z| z * sd).collect();
    let mut w = vec![0.0; n + BURN_IN];
    for t in 0..w.len() {
        let mut v = e[t];
        for (i, a) in model.ar.iter().enumerate() {
            if t > i {
                v += a * w[t - 1 - i];
            }
        }
        for (j, b) in model.ma.iter().enumerate() {
            if t > j {
                v += b * e[t - 1 - j];
            }
        }
        w[t] = v;
    }
    w[BURN_IN..].iter().map(|v| v + model.mean).collect()
}

/// GARCH residuals `u_t = σ_t z_t`, started at the unconditional variance
/// (or `α₀` when the model is not covariance stationary).
pub fn simulate_garch(model: &GarchModel, n: usize, seed: u64) -> Vec<f64> {
    let z = standard_normals(n + BURN_IN, seed);
    let init = model.unconditional_variance().unwrap_or(model.alpha0);
    let mut u = Vec::with_capacity(z.len());
    let mut s2: Vec<f64> = Vec::with_capacity(z.len());
    for (t, zt) in z.iter().enumerate() {
        let mut v = model.alpha0;
        for (i, a) in model.alpha.iter().enumerate() {
            v += a * if t > i { u[t - 1 - i] * u[t - 1 - i] } else { init };
        }
        for (j, b) in model.beta.iter().enumerate() {
            v += b * if t > j { s2[t - 1 - j] } else { init };
        }
        s2.push(v);
        u.push(v.sqrt() * zt);
    }
    u.split_off(BURN_IN)
}

/// eGARCH(1,1) residuals started at the unconditional log-variance `ω/(1−β)`.
pub fn simulate_egarch(model: &EgarchModel, n: usize, seed: u64) -> Vec<f64> {
    let z = standard_normals(n + BURN_IN, seed);
    let e_abs = (2.0 / std::f64::consts::PI).sqrt();
    let mut lnh = model.omega / (1.0 - model.beta);
    let mut u = Vec::with_capacity(z.len());
    for zt in &z {
        u.push((0.5 * lnh).exp() * zt);
        lnh = model.omega + model.beta * lnh + model.alpha * (zt.abs() - e_abs) + model.gamma * zt;
    }
    u.split_off(BURN_IN)
}

/// VAR(p) path with Gaussian innovations of covariance `cov`. Returns one
/// vector per variable.
pub fn simulate_var(intercepts: &[f64], coef: &[Matrix], cov: &Matrix, n: usize, seed: u64) -> Result<Vec<Vec<f64>>> {
    let k = intercepts.len();
    let l = cov.cholesky()?;
    let mut r = rng(seed);
    let total = n + BURN_IN;
    let mut x: Vec<Vec<f64>> = Vec::with_capacity(total);
    for t in 0..total {
        let z: Vec<f64> = (0..k).map(|_| StandardNormal.sample(&mut r)).collect();
        let mut v: Vec<f64> = intercepts.iter().zip(l.matvec(&z)).map(|(c, e)| c + e).collect();
        for (lag, a) in coef.iter().enumerate() {
            if t > lag {
                let prev = a.matvec(&x[t - 1 - lag]);
                v.iter_mut().zip(prev).for_each(|(vi, pi)| *vi += pi);
            }
        }
        x.push(v);
    }
    Ok((0..k).map(|i| x[BURN_IN..].iter().map(|row| row[i]).collect()).collect())
}
