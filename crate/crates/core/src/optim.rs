//! Unconstrained minimization for the likelihood fits.
//!
//! Models map their admissible parameter region onto ℝⁿ, so the optimizer
//! never sees a constraint. The objective may return `+∞` (or NaN) to reject a
//! point; both algorithms treat that as "worse than anything finite".
//!
//! The driver runs a Nelder-Mead simplex to get into the basin, refines with
//! BFGS on central-difference gradients, and then restarts from jittered
//! copies of the best point until a restart stops improving.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;

use crate::linalg::Matrix;

#[derive(Debug, Clone)]
pub struct OptimOptions {
    /// Relative change in the objective below which a run counts as converged.
    pub f_tol: f64,
    pub max_iter: usize,
    pub restarts: usize,
    pub jitter: f64,
    pub seed: u64,
}

impl Default for OptimOptions {
    fn default() -> Self {
        Self { f_tol: 1e-10, max_iter: 500, restarts: 3, jitter: 0.1, seed: 42 }
    }
}

#[derive(Debug, Clone)]
pub struct OptimResult {
    pub x: Vec<f64>,
    pub f: f64,
    pub converged: bool,
    pub iterations: usize,
    pub evaluations: usize,
}

struct Counted<F> {
    f: F,
    evals: usize,
}

impl<F: FnMut(&[f64]) -> f64> Counted<F> {
    fn call(&mut self, x: &[f64]) -> f64 {
        self.evals += 1;
        let v = (self.f)(x);
        if v.is_nan() {
            f64::INFINITY
        } else {
            v
        }
    }
}

/// Minimizes `f` starting from `x0`.
pub fn minimize<F>(f: F, x0: &[f64], opts: &OptimOptions) -> OptimResult
where
    F: FnMut(&[f64]) -> f64,
{
    let mut obj = Counted { f, evals: 0 };
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
    let mut iterations = 0;

    let (x, f) = nelder_mead(&mut obj, x0, opts.max_iter * x0.len().max(1), opts.f_tol);
    let (mut best_x, mut best_f, mut converged, its) = bfgs(&mut obj, &x, f, opts);
    iterations += its;

    for _ in 0..opts.restarts {
        let start: Vec<f64> = best_x
            .iter()
            .map(|v| v + opts.jitter * rng.sample::<f64, _>(StandardNormal) * (1.0 + v.abs()))
            .collect();
        let f_start = obj.call(&start);
        if !f_start.is_finite() {
            continue;
        }
        let (x, f) = nelder_mead(&mut obj, &start, opts.max_iter * x0.len().max(1), opts.f_tol);
        let (x, f, _, its) = bfgs(&mut obj, &x, f, opts);
        iterations += its;
        let improved = best_f - f > 1e-7 * (1.0 + best_f.abs());
        if f < best_f {
            best_x = x;
            best_f = f;
        }
        if !improved {
            // a jittered restart fell back into the same optimum
            converged = true;
            break;
        }
        converged = false;
    }

    OptimResult { x: best_x, f: best_f, converged, iterations, evaluations: obj.evals }
}

fn nelder_mead<F: FnMut(&[f64]) -> f64>(
    obj: &mut Counted<F>,
    x0: &[f64],
    max_iter: usize,
    f_tol: f64,
) -> (Vec<f64>, f64) {
    let n = x0.len();
    if n == 0 {
        let f = obj.call(x0);
        return (Vec::new(), f);
    }
    let mut simplex: Vec<Vec<f64>> = vec![x0.to_vec()];
    for i in 0..n {
        let mut p = x0.to_vec();
        p[i] += if p[i].abs() > 1e-3 { 0.1 * p[i].abs() } else { 0.1 };
        simplex.push(p);
    }
    let mut values: Vec<f64> = simplex.iter().map(|p| obj.call(p)).collect();

    for _ in 0..max_iter {
        let mut order: Vec<usize> = (0..=n).collect();
        order.sort_by(|&a, &b| values[a].total_cmp(&values[b]));
        simplex = order.iter().map(|&i| simplex[i].clone()).collect();
        values = order.iter().map(|&i| values[i]).collect();

        let (best, worst) = (values[0], values[n]);
        if best.is_finite() && (worst - best).abs() <= f_tol * (best.abs() + f_tol) {
            break;
        }

        let centroid: Vec<f64> =
            (0..n).map(|j| simplex[..n].iter().map(|p| p[j]).sum::<f64>() / n as f64).collect();
        let along = |t: f64| -> Vec<f64> {
            centroid.iter().zip(&simplex[n]).map(|(c, w)| c + t * (c - w)).collect()
        };

        let xr = along(1.0);
        let fr = obj.call(&xr);
        if fr < values[0] {
            let xe = along(2.0);
            let fe = obj.call(&xe);
            if fe < fr {
                simplex[n] = xe;
                values[n] = fe;
            } else {
                simplex[n] = xr;
                values[n] = fr;
            }
        } else if fr < values[n - 1] {
            simplex[n] = xr;
            values[n] = fr;
        } else {
            let (xc, fc) = if fr < values[n] {
                let xc = along(0.5);
                let fc = obj.call(&xc);
                (xc, fc)
            } else {
                let xc = along(-0.5);
                let fc = obj.call(&xc);
                (xc, fc)
            };
            if fc < values[n].min(fr) {
                simplex[n] = xc;
                values[n] = fc;
            } else {
                for i in 1..=n {
                    let shrunk: Vec<f64> =
                        simplex[0].iter().zip(&simplex[i]).map(|(b, p)| b + 0.5 * (p - b)).collect();
                    values[i] = obj.call(&shrunk);
                    simplex[i] = shrunk;
                }
            }
        }
    }
    let best = (0..=n).min_by(|&a, &b| values[a].total_cmp(&values[b])).unwrap_or(0);
    (simplex[best].clone(), values[best])
}

fn gradient<F: FnMut(&[f64]) -> f64>(obj: &mut Counted<F>, x: &[f64]) -> Vec<f64> {
    let mut g = vec![0.0; x.len()];
    let mut xp = x.to_vec();
    for i in 0..x.len() {
        let h = 1e-5 * (1.0 + x[i].abs());
        xp[i] = x[i] + h;
        let fp = obj.call(&xp);
        xp[i] = x[i] - h;
        let fm = obj.call(&xp);
        xp[i] = x[i];
        g[i] = if fp.is_finite() && fm.is_finite() { (fp - fm) / (2.0 * h) } else { 0.0 };
    }
    g
}

fn bfgs<F: FnMut(&[f64]) -> f64>(
    obj: &mut Counted<F>,
    x0: &[f64],
    f0: f64,
    opts: &OptimOptions,
) -> (Vec<f64>, f64, bool, usize) {
    let n = x0.len();
    if n == 0 || !f0.is_finite() {
        return (x0.to_vec(), f0, f0.is_finite(), 0);
    }
    let mut x = x0.to_vec();
    let mut f = f0;
    let mut g = gradient(obj, &x);
    let mut h = Matrix::identity(n);
    let mut stalls = 0;
    for it in 0..opts.max_iter {
        let gnorm = g.iter().fold(0.0f64, |m, v| m.max(v.abs()));
        if gnorm < 1e-8 * (1.0 + f.abs()) {
            return (x, f, true, it);
        }
        let mut d: Vec<f64> = h.matvec(&g).iter().map(|v| -v).collect();
        let mut slope: f64 = d.iter().zip(&g).map(|(a, b)| a * b).sum();
        if slope >= 0.0 {
            h = Matrix::identity(n);
            d = g.iter().map(|v| -v).collect();
            slope = -g.iter().map(|v| v * v).sum::<f64>();
        }
        // backtracking Armijo line search
        let mut t = 1.0;
        let mut accepted = None;
        for _ in 0..40 {
            let xn: Vec<f64> = x.iter().zip(&d).map(|(a, b)| a + t * b).collect();
            let fnew = obj.call(&xn);
            if fnew.is_finite() && fnew <= f + 1e-4 * t * slope {
                accepted = Some((xn, fnew));
                break;
            }
            t *= 0.5;
        }
        let Some((xn, fnew)) = accepted else {
            // no descent along the quasi-Newton direction: treat as converged
            // when the gradient is already small relative to the scale.
            return (x, f, gnorm < 1e-4 * (1.0 + f.abs()), it);
        };
        let gn = gradient(obj, &xn);
        let s: Vec<f64> = xn.iter().zip(&x).map(|(a, b)| a - b).collect();
        let y: Vec<f64> = gn.iter().zip(&g).map(|(a, b)| a - b).collect();
        let sy: f64 = s.iter().zip(&y).map(|(a, b)| a * b).sum();
        let rel_change = (f - fnew).abs() / (f.abs() + 1e-12);
        x = xn;
        g = gn;
        let prev = f;
        f = fnew;
        if sy > 1e-12 {
            let hy = h.matvec(&y);
            let yhy: f64 = y.iter().zip(&hy).map(|(a, b)| a * b).sum();
            let rho = 1.0 / sy;
            for i in 0..n {
                for j in 0..n {
                    h[(i, j)] += rho * ((1.0 + rho * yhy) * s[i] * s[j] - hy[i] * s[j] - s[i] * hy[j]);
                }
            }
        }
        if rel_change < opts.f_tol || prev - f < 1e-14 {
            stalls += 1;
            if stalls >= 2 {
                return (x, f, true, it + 1);
            }
        } else {
            stalls = 0;
        }
    }
    (x, f, false, opts.max_iter)
}

/// Central-difference Hessian of `f` at `x`.
pub fn numerical_hessian<F: FnMut(&[f64]) -> f64>(mut f: F, x: &[f64]) -> Matrix {
    let n = x.len();
    let h: Vec<f64> = x.iter().map(|v| 1e-4 * (1.0 + v.abs())).collect();
    let f0 = f(x);
    let mut hess = Matrix::zeros(n, n);
    let mut xp = x.to_vec();
    for i in 0..n {
        xp[i] = x[i] + h[i];
        let fp = f(&xp);
        xp[i] = x[i] - h[i];
        let fm = f(&xp);
        xp[i] = x[i];
        hess[(i, i)] = (fp - 2.0 * f0 + fm) / (h[i] * h[i]);
        for j in 0..i {
            let mut eval = |di: f64, dj: f64| {
                xp[i] = x[i] + di * h[i];
                xp[j] = x[j] + dj * h[j];
                let v = f(&xp);
                xp[i] = x[i];
                xp[j] = x[j];
                v
            };
            let v = (eval(1.0, 1.0) - eval(1.0, -1.0) - eval(-1.0, 1.0) + eval(-1.0, -1.0))
                / (4.0 * h[i] * h[j]);
            hess[(i, j)] = v;
            hess[(j, i)] = v;
        }
    }
    hess
}

/// Standard errors of natural parameters `θ = g(u)` from the Hessian of the
/// negative log-likelihood in the unconstrained coordinates `u`, by the delta
/// method: `Cov(θ) = J·H⁻¹·Jᵀ` with `J = ∂g/∂u`.
pub fn delta_method_std_errors<F, G>(neg_loglik: F, to_natural: G, u: &[f64]) -> Option<Vec<f64>>
where
    F: FnMut(&[f64]) -> f64,
    G: Fn(&[f64]) -> Vec<f64>,
{
    let hess = numerical_hessian(neg_loglik, u);
    let cov_u = hess.inverse().ok()?;
    let n = u.len();
    let theta0 = to_natural(u);
    let m = theta0.len();
    let mut jac = Matrix::zeros(m, n);
    let mut up = u.to_vec();
    for j in 0..n {
        let h = 1e-6 * (1.0 + u[j].abs());
        up[j] = u[j] + h;
        let tp = to_natural(&up);
        up[j] = u[j] - h;
        let tm = to_natural(&up);
        up[j] = u[j];
        for i in 0..m {
            jac[(i, j)] = (tp[i] - tm[i]) / (2.0 * h);
        }
    }
    let cov = jac.matmul(&cov_u).matmul(&jac.transpose());
    Some((0..m).map(|i| if cov[(i, i)] >= 0.0 { cov[(i, i)].sqrt() } else { f64::NAN }).collect())
}
