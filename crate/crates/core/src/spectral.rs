//! Distance spectrum and the spectral functionals built on it.
//!
//! Eigenvalues come from a cyclic Jacobi sweep over the dense distance
//! matrix. The distance Estrada index is available two ways: directly from
//! the eigenvalues, and as the exponential series of traces `tr(D^k) / k!`,
//! which never touches the eigensolver and serves as its cross-check.

use crate::distance::DistanceProfile;
use crate::error::{Error, Result};

/// Eigenvalues with `mu > POSITIVE_EPS` count as positive.
pub const POSITIVE_EPS: f64 = 1e-9;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SpectrumOptions {
    pub max_sweeps: usize,
    pub positive_eps: f64,
    /// Accepted residual is `residual_factor * n * diameter`.
    pub residual_factor: f64,
}

impl Default for SpectrumOptions {
    fn default() -> Self {
        SpectrumOptions {
            max_sweeps: 100,
            positive_eps: POSITIVE_EPS,
            residual_factor: 1e-9,
        }
    }
}

/// Eigenvalues of a distance matrix, sorted descending.
#[derive(Debug, Clone, PartialEq)]
pub struct DistanceSpectrum {
    eigenvalues: Vec<f64>,
    n_plus: usize,
    residual: f64,
}

impl DistanceSpectrum {
    /// Wraps precomputed eigenvalues (sorted here); the residual is recorded as zero.
    pub fn from_eigenvalues(mut eigenvalues: Vec<f64>, positive_eps: f64) -> Self {
        eigenvalues.sort_by(|a, b| b.total_cmp(a));
        let n_plus = eigenvalues.iter().filter(|&&mu| mu > positive_eps).count();
        DistanceSpectrum {
            eigenvalues,
            n_plus,
            residual: 0.0,
        }
    }

    pub fn eigenvalues(&self) -> &[f64] {
        &self.eigenvalues
    }

    pub fn len(&self) -> usize {
        self.eigenvalues.len()
    }

    pub fn is_empty(&self) -> bool {
        self.eigenvalues.is_empty()
    }

    /// The largest eigenvalue `mu_1`.
    pub fn spectral_radius(&self) -> f64 {
        self.eigenvalues[0]
    }

    pub fn smallest(&self) -> f64 {
        *self.eigenvalues.last().expect("spectrum is non-empty")
    }

    pub fn n_plus(&self) -> usize {
        self.n_plus
    }

    /// `max_i ||D v_i - mu_i v_i||_inf` over the computed eigenpairs.
    pub fn residual(&self) -> f64 {
        self.residual
    }

    /// Spectral moment `N_k = sum_i mu_i^k`.
    pub fn moment(&self, k: i32) -> f64 {
        self.eigenvalues.iter().map(|mu| mu.powi(k)).sum()
    }

    /// Number of distinct eigenvalues, merging neighbours closer than `tol`.
    pub fn distinct_count(&self, tol: f64) -> usize {
        if self.eigenvalues.is_empty() {
            return 0;
        }
        1 + self
            .eigenvalues
            .windows(2)
            .filter(|w| w[0] - w[1] > tol)
            .count()
    }
}

/// Eigenvalues and eigenvectors (columns of `vectors`, row-major `n x n`) of a
/// symmetric matrix by cyclic Jacobi rotations. Eigenvalues are in diagonal
/// order, not sorted.
pub fn jacobi_eigen(matrix: &[f64], n: usize, max_sweeps: usize) -> Result<(Vec<f64>, Vec<f64>)> {
    assert_eq!(matrix.len(), n * n, "matrix must be n x n");
    let mut a = matrix.to_vec();
    let mut v = vec![0.0; n * n];
    for i in 0..n {
        v[i * n + i] = 1.0;
    }
    let frob: f64 = a.iter().map(|x| x * x).sum::<f64>().sqrt();

    let mut converged = false;
    for _ in 0..=max_sweeps {
        let off: f64 = (0..n)
            .flat_map(|p| (p + 1..n).map(move |q| (p, q)))
            .map(|(p, q)| a[p * n + q] * a[p * n + q])
            .sum();
        if off.sqrt() <= f64::EPSILON * frob || off == 0.0 {
            converged = true;
            break;
        }
        for p in 0..n {
            for q in p + 1..n {
                let apq = a[p * n + q];
                if apq == 0.0 {
                    continue;
                }
                let theta = (a[q * n + q] - a[p * n + p]) / (2.0 * apq);
                let t = if theta.abs() > 1e150 {
                    0.5 / theta
                } else {
                    theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt())
                };
                let c = 1.0 / (t * t + 1.0).sqrt();
                let s = t * c;
                let tau = s / (1.0 + c);

                a[p * n + p] -= t * apq;
                a[q * n + q] += t * apq;
                a[p * n + q] = 0.0;
                a[q * n + p] = 0.0;
                for r in 0..n {
                    if r != p && r != q {
                        let g = a[r * n + p];
                        let h = a[r * n + q];
                        let new_p = g - s * (h + g * tau);
                        let new_q = h + s * (g - h * tau);
                        a[r * n + p] = new_p;
                        a[p * n + r] = new_p;
                        a[r * n + q] = new_q;
                        a[q * n + r] = new_q;
                    }
                    let g = v[r * n + p];
                    let h = v[r * n + q];
                    v[r * n + p] = g - s * (h + g * tau);
                    v[r * n + q] = h + s * (g - h * tau);
                }
            }
        }
    }
    if !converged {
        return Err(Error::NonConvergence(format!(
            "off-diagonal mass remains after {max_sweeps} sweeps"
        )));
    }
    let values = (0..n).map(|i| a[i * n + i]).collect();
    Ok((values, v))
}

/// `max_i ||A v_i - lambda_i v_i||_inf`.
fn eigen_residual(matrix: &[f64], n: usize, values: &[f64], vectors: &[f64]) -> f64 {
    let mut worst = 0.0f64;
    for (i, &lambda) in values.iter().enumerate() {
        for r in 0..n {
            let av: f64 = (0..n).map(|k| matrix[r * n + k] * vectors[k * n + i]).sum();
            worst = worst.max((av - lambda * vectors[r * n + i]).abs());
        }
    }
    worst
}

pub fn d_eigenvalues(dp: &DistanceProfile) -> Result<DistanceSpectrum> {
    d_eigenvalues_with(dp, &SpectrumOptions::default())
}

/// Full distance spectrum. Fails rather than returning eigenvalues whose
/// residual exceeds `residual_factor * n * diameter`.
pub fn d_eigenvalues_with(
    dp: &DistanceProfile,
    opts: &SpectrumOptions,
) -> Result<DistanceSpectrum> {
    let n = dp.n();
    let matrix = dp.to_f64_matrix();
    let (values, vectors) = jacobi_eigen(&matrix, n, opts.max_sweeps)?;
    let residual = eigen_residual(&matrix, n, &values, &vectors);
    let allowed = opts.residual_factor * (n as f64) * f64::from(dp.diameter());
    if residual > allowed {
        return Err(Error::NonConvergence(format!(
            "eigenpair residual {residual:e} exceeds {allowed:e}"
        )));
    }
    let mut spectrum = DistanceSpectrum::from_eigenvalues(values, opts.positive_eps);
    spectrum.residual = residual;
    Ok(spectrum)
}

/// `sum_i exp(mu_i)`.
pub fn distance_estrada(spec: &DistanceSpectrum) -> Result<f64> {
    // ascending order: small terms first
    let total: f64 = spec.eigenvalues.iter().rev().map(|mu| mu.exp()).sum();
    if total.is_finite() {
        Ok(total)
    } else {
        Err(Error::Overflow(format!(
            "exp({}) in the distance Estrada index",
            spec.spectral_radius()
        )))
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SeriesOptions {
    pub rel_tol: f64,
    pub max_terms: usize,
}

impl Default for SeriesOptions {
    fn default() -> Self {
        SeriesOptions {
            rel_tol: 1e-12,
            max_terms: 500,
        }
    }
}

/// Collatz-Wielandt upper estimate of the Perron root: for any positive `x`,
/// `mu_1 <= max_i (D x)_i / x_i`. Starting from the all-ones vector the first
/// estimate is the maximum row sum; a few power steps tighten it.
fn perron_upper_estimate(dp: &DistanceProfile) -> f64 {
    let n = dp.n();
    let mut x = vec![1.0; n];
    let mut best = f64::INFINITY;
    for _ in 0..32 {
        let y = dp.apply(&x);
        let ratio = y
            .iter()
            .zip(&x)
            .map(|(yi, xi)| yi / xi)
            .fold(0.0f64, f64::max);
        best = best.min(ratio);
        let scale = y.iter().copied().fold(0.0f64, f64::max);
        if scale == 0.0 {
            break;
        }
        x = y.into_iter().map(|yi| yi / scale).collect();
    }
    // absorb rounding in the ratios
    best * (1.0 + 1e-12)
}

/// Distance Estrada index as `sum_k tr(D^k) / k!`.
///
/// The scaled powers `D^k / k!` are formed by repeated multiplication; every
/// term is non-negative because `D` is. Summation stops once the a priori
/// tail bound `n * sum_{j>k} mu^j / j!`, with `mu` an upper estimate of the
/// spectral radius, drops below `rel_tol` times the partial sum.
pub fn distance_estrada_series(dp: &DistanceProfile, opts: &SeriesOptions) -> Result<f64> {
    if opts.rel_tol.is_nan() || opts.rel_tol <= 0.0 {
        return Err(Error::InvalidParameter(format!(
            "rel_tol = {} must be positive",
            opts.rel_tol
        )));
    }
    let n = dp.n();
    if n == 1 {
        return Ok(1.0);
    }
    let d = dp.to_f64_matrix();
    let mu = perron_upper_estimate(dp);
    let ln_n = (n as f64).ln();
    let ln_mu = mu.ln();

    let mut power = vec![0.0; n * n];
    for i in 0..n {
        power[i * n + i] = 1.0;
    }
    let mut next = vec![0.0; n * n];
    let mut sum = n as f64;
    let mut ln_fact_next = 0.0f64; // ln((k + 1)!)

    for k in 1..=opts.max_terms {
        let inv_k = 1.0 / k as f64;
        next.fill(0.0);
        for i in 0..n {
            for l in 0..n {
                let dil = d[i * n + l];
                if dil == 0.0 {
                    continue;
                }
                let scaled = dil * inv_k;
                let src = &power[l * n..(l + 1) * n];
                let dst = &mut next[i * n..(i + 1) * n];
                for (out, &p) in dst.iter_mut().zip(src) {
                    *out += scaled * p;
                }
            }
        }
        std::mem::swap(&mut power, &mut next);
        sum += (0..n).map(|i| power[i * n + i]).sum::<f64>();
        if !sum.is_finite() {
            return Err(Error::Overflow(
                "trace series of the distance matrix".into(),
            ));
        }

        let j = (k + 1) as f64;
        ln_fact_next += j.ln();
        if j + 1.0 > mu {
            let ln_tail = ln_n + j * ln_mu - ln_fact_next - (1.0 - mu / (j + 1.0)).ln();
            if ln_tail <= (opts.rel_tol * sum).ln() {
                return Ok(sum);
            }
        }
    }
    Err(Error::SeriesTruncation {
        terms: opts.max_terms,
    })
}

/// `sum_i |mu_i|`.
pub fn distance_energy(spec: &DistanceSpectrum) -> f64 {
    spec.eigenvalues.iter().map(|mu| mu.abs()).sum()
}

/// Count of eigenvalues strictly above `eps`; values in `[-eps, eps]` are
/// treated as non-positive.
pub fn count_positive(spec: &DistanceSpectrum, eps: f64) -> usize {
    spec.eigenvalues.iter().filter(|&&mu| mu > eps).count()
}
