//! Independent oracles shared by the integration tests. Nothing here calls
//! into the library's numerics.
#![allow(dead_code)]

use std::f64::consts::PI;

/// Approximately normal draws (sum of twelve uniforms minus six) from a
/// xorshift64 stream. The same integers are easy to reproduce elsewhere,
/// which is how the frozen reference values were obtained.
pub fn xorshift_normals(seed: u64, n: usize) -> Vec<f64> {
    let mut s = seed;
    (0..n)
        .map(|_| {
            let mut acc = 0.0;
            for _ in 0..12 {
                s ^= s << 13;
                s ^= s >> 7;
                s ^= s << 17;
                acc += (s >> 11) as f64 * 2f64.powi(-53);
            }
            acc - 6.0
        })
        .collect()
}

pub fn brute_acf(x: &[f64], k: usize) -> f64 {
    let n = x.len();
    let m = x.iter().sum::<f64>() / n as f64;
    let mut num = 0.0;
    for t in 0..n - k {
        num += (x[t] - m) * (x[t + k] - m);
    }
    let mut den = 0.0;
    for v in x {
        den += (v - m) * (v - m);
    }
    num / den
}

pub fn brute_ljung_box(x: &[f64], m: usize) -> f64 {
    let n = x.len() as f64;
    let mut q = 0.0;
    for k in 1..=m {
        let r = brute_acf(x, k);
        q += r * r / (n - k as f64);
    }
    n * (n + 2.0) * q
}

pub fn brute_box_pierce(x: &[f64], m: usize) -> f64 {
    let mut q = 0.0;
    for k in 1..=m {
        let r = brute_acf(x, k);
        q += r * r;
    }
    x.len() as f64 * q
}

/// Composite Simpson rule with `n` (even) intervals.
pub fn simpson(f: impl Fn(f64) -> f64, a: f64, b: f64, n: usize) -> f64 {
    let n = n + n % 2;
    let h = (b - a) / n as f64;
    let mut s = f(a) + f(b);
    for i in 1..n {
        let w = if i % 2 == 1 { 4.0 } else { 2.0 };
        s += w * f(a + i as f64 * h);
    }
    s * h / 3.0
}

pub fn phi(x: f64) -> f64 {
    (-0.5 * x * x).exp() / (2.0 * PI).sqrt()
}

/// Φ(x) = ½ + ∫₀ˣ φ, by Simpson quadrature.
pub fn normal_cdf_quadrature(x: f64) -> f64 {
    0.5 + simpson(phi, 0.0, x, 20_000)
}

pub fn bisect(f: impl Fn(f64) -> f64, mut lo: f64, mut hi: f64) -> f64 {
    let flo = f(lo);
    for _ in 0..200 {
        let mid = 0.5 * (lo + hi);
        if (f(mid) > 0.0) == (flo > 0.0) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    0.5 * (lo + hi)
}

fn ln_gamma_stirling(x: f64) -> f64 {
    // shift up, then Stirling series
    let mut x = x;
    let mut acc = 0.0;
    while x < 20.0 {
        acc -= x.ln();
        x += 1.0;
    }
    let inv = 1.0 / x;
    let inv2 = inv * inv;
    acc + (x - 0.5) * x.ln() - x + 0.5 * (2.0 * PI).ln()
        + inv * (1.0 / 12.0 - inv2 * (1.0 / 360.0 - inv2 * (1.0 / 1260.0 - inv2 / 1680.0)))
}

/// Chi-square CDF by quadrature after `y = t²`, which removes the
/// singularity at zero for one degree of freedom.
pub fn chi2_cdf_quadrature(x: f64, k: f64) -> f64 {
    if x <= 0.0 {
        return 0.0;
    }
    let c = -(0.5 * k) * 2f64.ln() - ln_gamma_stirling(0.5 * k);
    let g = |t: f64| {
        if t == 0.0 {
            return if k == 1.0 { 2.0 * c.exp() } else { 0.0 };
        }
        let y = t * t;
        2.0 * t * (c + (0.5 * k - 1.0) * y.ln() - 0.5 * y).exp()
    };
    simpson(g, 0.0, x.sqrt(), 40_000)
}

pub fn f_cdf_quadrature(x: f64, d1: f64, d2: f64) -> f64 {
    if x <= 0.0 {
        return 0.0;
    }
    let ln_b = ln_gamma_stirling(0.5 * d1) + ln_gamma_stirling(0.5 * d2) - ln_gamma_stirling(0.5 * (d1 + d2));
    let c = 0.5 * d1 * (d1 / d2).ln() - ln_b;
    let g = |t: f64| {
        if t == 0.0 {
            return if d1 == 1.0 { 2.0 * c.exp() } else { 0.0 };
        }
        let y = t * t;
        let ln_f = c + (0.5 * d1 - 1.0) * y.ln() - 0.5 * (d1 + d2) * (1.0 + d1 * y / d2).ln();
        2.0 * t * ln_f.exp()
    };
    simpson(g, 0.0, x.sqrt(), 40_000)
}

/// ψ-weights of an ARMA model by the direct recursion
/// `ψ_j = θ_j + Σ φ_i ψ_{j−i}`.
pub fn psi(ar: &[f64], ma: &[f64], n: usize) -> Vec<f64> {
    let mut out = vec![0.0; n];
    out[0] = 1.0;
    for j in 1..n {
        let mut v = if j <= ma.len() { ma[j - 1] } else { 0.0 };
        for (i, a) in ar.iter().enumerate() {
            if j > i {
                v += a * out[j - 1 - i];
            }
        }
        out[j] = v;
    }
    out
}

pub fn autocovariances(ar: &[f64], ma: &[f64], sigma2: f64, max_lag: usize, terms: usize) -> Vec<f64> {
    let w = psi(ar, ma, terms + max_lag);
    (0..=max_lag)
        .map(|k| sigma2 * (0..terms).map(|j| w[j] * w[j + k]).sum::<f64>())
        .collect()
}

/// Lower Cholesky factor of a dense symmetric matrix stored as rows.
pub fn cholesky(a: &[Vec<f64>]) -> Vec<Vec<f64>> {
    let n = a.len();
    let mut l = vec![vec![0.0; n]; n];
    for i in 0..n {
        for j in 0..=i {
            let mut s = a[i][j];
            for k in 0..j {
                s -= l[i][k] * l[j][k];
            }
            if i == j {
                assert!(s > 0.0, "matrix not positive definite");
                l[i][i] = s.sqrt();
            } else {
                l[i][j] = s / l[j][j];
            }
        }
    }
    l
}

/// Gaussian log density of `x − mean` under the Toeplitz covariance built
/// from `gamma`.
pub fn mvn_log_density(x: &[f64], mean: f64, gamma: &[f64]) -> f64 {
    let n = x.len();
    let cov: Vec<Vec<f64>> = (0..n).map(|i| (0..n).map(|j| gamma[i.abs_diff(j)]).collect()).collect();
    let l = cholesky(&cov);
    let mut z = vec![0.0; n];
    for i in 0..n {
        let mut s = x[i] - mean;
        for k in 0..i {
            s -= l[i][k] * z[k];
        }
        z[i] = s / l[i][i];
    }
    let log_det: f64 = 2.0 * l.iter().enumerate().map(|(i, r)| r[i].ln()).sum::<f64>();
    -0.5 * (n as f64 * (2.0 * PI).ln() + log_det + z.iter().map(|v| v * v).sum::<f64>())
}

/// Roots of a real polynomial `c[0] + c[1] z + … + c[d] z^d` by
/// Durand–Kerner iteration, refined with Newton steps.
pub fn poly_roots(c: &[f64]) -> Vec<num_complex::Complex64> {
    use num_complex::Complex64;
    let d = c.len() - 1;
    let lead = c[d];
    let a: Vec<Complex64> = c.iter().map(|v| Complex64::new(v / lead, 0.0)).collect();
    let eval = |z: Complex64| a.iter().rev().fold(Complex64::new(0.0, 0.0), |acc, ci| acc * z + ci);
    let deriv = |z: Complex64| {
        (1..=d).rev().fold(Complex64::new(0.0, 0.0), |acc, i| acc * z + a[i] * i as f64)
    };
    let mut roots: Vec<Complex64> = (0..d).map(|i| Complex64::new(0.4, 0.9).powu(i as u32)).collect();
    for _ in 0..2000 {
        let prev = roots.clone();
        for i in 0..d {
            let mut denom = Complex64::new(1.0, 0.0);
            for j in 0..d {
                if i != j {
                    denom *= roots[i] - roots[j];
                }
            }
            let step = eval(roots[i]) / denom;
            roots[i] -= step;
        }
        let change = roots.iter().zip(&prev).map(|(a, b)| (a - b).norm()).fold(0.0, f64::max);
        if change < 1e-15 {
            break;
        }
    }
    for r in roots.iter_mut() {
        for _ in 0..5 {
            let dv = deriv(*r);
            if dv.norm() > 0.0 {
                *r -= eval(*r) / dv;
            }
        }
    }
    roots
}

/// Draws a uniform in `[0, 1)` from a xorshift state.
pub struct Xorshift(pub u64);

impl Xorshift {
    pub fn next_f64(&mut self) -> f64 {
        self.0 ^= self.0 << 13;
        self.0 ^= self.0 >> 7;
        self.0 ^= self.0 << 17;
        (self.0 >> 11) as f64 * 2f64.powi(-53)
    }

    pub fn uniform(&mut self, lo: f64, hi: f64) -> f64 {
        lo + (hi - lo) * self.next_f64()
    }
}
