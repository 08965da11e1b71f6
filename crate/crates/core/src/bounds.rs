//! Lower and upper bounds on the distance Estrada index and on the spectral
//! radius of the distance matrix, each evaluated against the true value.
//!
//! Every inequality is exposed twice: as a plain function of the graph
//! parameters it depends on (`bound_*`, `mu1_lower_*`) and as a
//! [`BoundReport`] row produced by [`evaluate_all`], which compares the bound
//! with the computed index and records slack and tightness.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::distance::{distance_profile, power_sequence, DistanceProfile, PowerSequence};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::spectral::{
    d_eigenvalues_with, distance_energy, distance_estrada, DistanceSpectrum, SpectrumOptions,
};

/// Identifiers for the checked inequalities. The string forms are part of the
/// JSON and CSV output.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum BoundId {
    /// `DEE >= sqrt(n^2 + 4m)`.
    #[serde(rename = "EQ4_LOWER")]
    Eq4Lower,
    /// `DEE <= n - 1 + exp(diam * sqrt(n(n-1)))`.
    #[serde(rename = "EQ4_UPPER")]
    Eq4Upper,
    /// `DEE - E_D <= n - 1 - diam * sqrt(n(n-1)) + exp(diam * sqrt(n(n-1)))`.
    #[serde(rename = "EQ5")]
    Eq5,
    /// `DEE <= n - 1 + exp(E_D)`.
    #[serde(rename = "EQ6")]
    Eq6,
    /// `DEE >= f(sqrt(S_{t+1} / S_t))` with `f(x) = e^x + (n-1) e^{-x/(n-1)}`.
    #[serde(rename = "EQ7")]
    Eq7,
    /// `DEE >= f(2W / n)`.
    #[serde(rename = "EQ11")]
    Eq11,
    /// `DEE >= e^x + e^{-x} + n - 2` with `x = 2(n-1) - 2m/n`.
    #[serde(rename = "EQ14")]
    Eq14,
    /// `DEE >= E_D (e - 1) / 2 + n - n_plus`.
    #[serde(rename = "EQ19_LOWER")]
    Eq19Lower,
    /// `DEE <= n - 1 + exp(E_D / 2)`.
    #[serde(rename = "EQ19_UPPER")]
    Eq19Upper,
    /// `mu_1 >= sqrt(S_{t+1} / S_t)`.
    #[serde(rename = "MU1_LEMMA21")]
    Mu1Lemma21,
    /// `mu_1 >= sqrt(sum T_i^2 / sum D_i^2)`.
    #[serde(rename = "MU1_EQ12_CHAIN")]
    Mu1Eq12Chain,
    /// `mu_1 >= sqrt(sum D_i^2 / n)`.
    #[serde(rename = "MU1_EQ13_CHAIN")]
    Mu1Eq13Chain,
    /// `mu_1 >= 2(n-1) - 2m/n`.
    #[serde(rename = "MU1_LEMMA23")]
    Mu1Lemma23,
}

impl BoundId {
    pub const ALL: [BoundId; 13] = [
        BoundId::Eq4Lower,
        BoundId::Eq4Upper,
        BoundId::Eq5,
        BoundId::Eq6,
        BoundId::Eq7,
        BoundId::Eq11,
        BoundId::Eq14,
        BoundId::Eq19Lower,
        BoundId::Eq19Upper,
        BoundId::Mu1Lemma21,
        BoundId::Mu1Eq12Chain,
        BoundId::Mu1Eq13Chain,
        BoundId::Mu1Lemma23,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            BoundId::Eq4Lower => "EQ4_LOWER",
            BoundId::Eq4Upper => "EQ4_UPPER",
            BoundId::Eq5 => "EQ5",
            BoundId::Eq6 => "EQ6",
            BoundId::Eq7 => "EQ7",
            BoundId::Eq11 => "EQ11",
            BoundId::Eq14 => "EQ14",
            BoundId::Eq19Lower => "EQ19_LOWER",
            BoundId::Eq19Upper => "EQ19_UPPER",
            BoundId::Mu1Lemma21 => "MU1_LEMMA21",
            BoundId::Mu1Eq12Chain => "MU1_EQ12_CHAIN",
            BoundId::Mu1Eq13Chain => "MU1_EQ13_CHAIN",
            BoundId::Mu1Lemma23 => "MU1_LEMMA23",
        }
    }

    pub fn kind(self) -> BoundKind {
        match self {
            BoundId::Eq4Upper | BoundId::Eq5 | BoundId::Eq6 | BoundId::Eq19Upper => {
                BoundKind::Upper
            }
            _ => BoundKind::Lower,
        }
    }

    /// The quadratic-size lower bound fails on complete graphs with three or
    /// more vertices (K_3: 8.524 > 8.125). Its violations are tracked
    /// separately so they do not mask regressions in the other bounds.
    pub fn is_known_open(self) -> bool {
        self == BoundId::Eq14
    }

    /// Bounds on `mu_1` rather than on the Estrada index.
    pub fn bounds_spectral_radius(self) -> bool {
        matches!(
            self,
            BoundId::Mu1Lemma21
                | BoundId::Mu1Eq12Chain
                | BoundId::Mu1Eq13Chain
                | BoundId::Mu1Lemma23
        )
    }
}

impl fmt::Display for BoundId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for BoundId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        BoundId::ALL
            .into_iter()
            .find(|id| id.as_str() == s)
            .ok_or_else(|| Error::InvalidParameter(format!("unknown bound id {s:?}")))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum BoundKind {
    Lower,
    Upper,
}

/// One evaluated inequality.
///
/// `slack` is `actual - bound` for lower bounds and `bound - actual` for upper
/// bounds. Comparisons use the scale-aware tolerance
/// `tol * max(1, |actual_value|)`: the report is `satisfied` when the slack is
/// above minus that tolerance and marks `equality` when its magnitude is
/// within it.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BoundReport {
    pub bound_id: BoundId,
    pub kind: BoundKind,
    pub bound_value: f64,
    pub actual_value: f64,
    pub satisfied: bool,
    pub slack: f64,
    pub equality: bool,
    pub alpha: Option<f64>,
    pub t: Option<usize>,
}

impl BoundReport {
    pub fn new(bound_id: BoundId, bound_value: f64, actual_value: f64, tol: f64) -> Self {
        let kind = bound_id.kind();
        let slack = match kind {
            BoundKind::Lower => actual_value - bound_value,
            BoundKind::Upper => bound_value - actual_value,
        };
        let scaled = tol * actual_value.abs().max(1.0);
        BoundReport {
            bound_id,
            kind,
            bound_value,
            actual_value,
            satisfied: slack >= -scaled,
            slack,
            equality: slack.abs() <= scaled,
            alpha: None,
            t: None,
        }
    }

    fn with_params(mut self, alpha: f64, t: usize) -> Self {
        self.alpha = Some(alpha);
        self.t = Some(t);
        self
    }

    /// Slack relative to the compared value.
    pub fn relative_slack(&self) -> f64 {
        if self.actual_value == 0.0 {
            self.slack
        } else {
            self.slack / self.actual_value.abs()
        }
    }
}

/// `f(x) = e^x + (n-1) e^{-x/(n-1)}`, increasing for `x > 0`.
fn split_exponential(n: usize, x: f64) -> f64 {
    let k = (n - 1) as f64;
    x.exp() + k * (-x / k).exp()
}

fn require_order(n: usize, what: &str) -> Result<()> {
    if n < 2 {
        Err(Error::InvalidParameter(format!(
            "{what} needs n >= 2, got {n}"
        )))
    } else {
        Ok(())
    }
}

/// `(sqrt(n^2 + 4m), n - 1 + exp(diam * sqrt(n(n-1))))`.
pub fn bound_eq4(n: usize, m: usize, diameter: u32) -> (f64, f64) {
    let nf = n as f64;
    let lower = (nf * nf + 4.0 * m as f64).sqrt();
    let upper = nf - 1.0 + (f64::from(diameter) * (nf * (nf - 1.0)).sqrt()).exp();
    (lower, upper)
}

/// Upper bound on `DEE - E_D`, and the upper bound `n - 1 + exp(E_D)` on `DEE`.
pub fn bound_eq5_eq6(n: usize, diameter: u32, energy: f64) -> (f64, f64) {
    let nf = n as f64;
    let x = f64::from(diameter) * (nf * (nf - 1.0)).sqrt();
    (nf - 1.0 - x + x.exp(), nf - 1.0 + energy.exp())
}

/// `sqrt(S_{t+1} / S_t)`, a lower bound on `mu_1` for every `alpha` and `t`.
pub fn mu1_lower_power(ps: &PowerSequence, t: usize) -> Result<f64> {
    if t == 0 || t >= ps.depth() {
        return Err(Error::InvalidParameter(format!(
            "t = {t} outside 1..{} for a sequence of depth {}",
            ps.depth(),
            ps.depth()
        )));
    }
    Ok((ps.s(t + 1) / ps.s(t)).sqrt())
}

/// The degree-based chain `r1 >= r2 >= r3`, each a lower bound on `mu_1`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DegreeChain {
    /// `sqrt(sum T_i^2 / sum D_i^2)`.
    pub r1: f64,
    /// `sqrt(sum D_i^2 / n)`.
    pub r2: f64,
    /// `2W / n`.
    pub r3: f64,
}

pub fn mu1_lower_chain(dp: &DistanceProfile) -> Result<DegreeChain> {
    let n = dp.n();
    require_order(n, "the degree chain")?;
    let sum_d2: f64 = dp.dist_degrees().iter().map(|&d| (d as f64).powi(2)).sum();
    let sum_t2: f64 = dp
        .second_degrees()
        .iter()
        .map(|&t| (t as f64).powi(2))
        .sum();
    Ok(DegreeChain {
        r1: (sum_t2 / sum_d2).sqrt(),
        r2: (sum_d2 / n as f64).sqrt(),
        r3: 2.0 * dp.wiener() as f64 / n as f64,
    })
}

/// `2(n-1) - 2m/n`, attained exactly by complete graphs and regular graphs of
/// diameter two.
pub fn mu1_lower_size(n: usize, m: usize) -> Result<f64> {
    require_order(n, "the size bound")?;
    let nf = n as f64;
    Ok(2.0 * (nf - 1.0) - 2.0 * m as f64 / nf)
}

/// `f(x) = e^x + (n-1) e^{-x/(n-1)}` at a positive lower estimate `x` of `mu_1`.
pub fn bound_eq7(n: usize, mu1_lower: f64) -> Result<f64> {
    require_order(n, "the split-exponential bound")?;
    if mu1_lower.is_nan() || mu1_lower <= 0.0 {
        return Err(Error::InvalidParameter(format!(
            "spectral radius estimate {mu1_lower} must be positive"
        )));
    }
    Ok(split_exponential(n, mu1_lower))
}

/// `e^{2W/n} + (n-1) e^{-2W/(n(n-1))}`.
pub fn bound_eq11(n: usize, wiener: u64) -> Result<f64> {
    require_order(n, "the Wiener bound")?;
    Ok(split_exponential(n, 2.0 * wiener as f64 / n as f64))
}

/// `e^x + e^{-x} + n - 2` with `x = 2(n-1) - 2m/n`.
pub fn bound_eq14(n: usize, m: usize) -> Result<f64> {
    let x = mu1_lower_size(n, m)?;
    Ok(x.exp() + (-x).exp() + n as f64 - 2.0)
}

/// `(E_D (e-1)/2 + n - n_plus, n - 1 + exp(E_D/2))`.
pub fn bound_eq19(n: usize, n_plus: usize, energy: f64) -> (f64, f64) {
    let nf = n as f64;
    let lower = 0.5 * energy * (std::f64::consts::E - 1.0) + nf - n_plus as f64;
    let upper = nf - 1.0 + (0.5 * energy).exp();
    (lower, upper)
}

/// Structural properties that decide when the bounds are attained.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct EqualityFlags {
    pub is_k1: bool,
    pub is_k2: bool,
    pub is_complete: bool,
    pub is_regular_diameter_two: bool,
    pub two_distinct_d_eigenvalues: bool,
}

/// Structural flags from the graph and its distances; the eigenvalue count
/// comes from `spec`, merging eigenvalues within `1e-6 * max(1, mu_1)`.
pub fn detect_equality_cases(
    g: &Graph,
    dp: &DistanceProfile,
    spec: &DistanceSpectrum,
) -> EqualityFlags {
    let degrees = g.degrees();
    let regular = degrees.windows(2).all(|w| w[0] == w[1]);
    let cluster_tol = 1e-6 * spec.spectral_radius().abs().max(1.0);
    EqualityFlags {
        is_k1: g.n() == 1,
        is_k2: g.n() == 2 && g.m() == 1,
        is_complete: dp.is_complete(),
        is_regular_diameter_two: regular && dp.diameter() == 2,
        two_distinct_d_eigenvalues: spec.distinct_count(cluster_tol) == 2,
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EvalOptions {
    pub alpha: f64,
    pub t: usize,
    pub tol: f64,
    pub spectrum: SpectrumOptions,
}

impl Default for EvalOptions {
    fn default() -> Self {
        EvalOptions {
            alpha: 1.0,
            t: 2,
            tol: 1e-6,
            spectrum: SpectrumOptions::default(),
        }
    }
}

/// Everything computed for one graph on the way to its bound reports.
#[derive(Debug, Clone)]
pub struct Analysis {
    pub profile: DistanceProfile,
    pub spectrum: DistanceSpectrum,
    pub estrada: f64,
    pub energy: f64,
    pub flags: EqualityFlags,
    /// One report per applicable bound, in [`BoundId`] order.
    pub reports: Vec<BoundReport>,
}

impl Analysis {
    pub fn report(&self, id: BoundId) -> Option<&BoundReport> {
        self.reports.iter().find(|r| r.bound_id == id)
    }
}

/// Runs the full pipeline on a connected graph.
///
/// For `K_1` only the bounds defined at `n = 1` are reported (both sides of
/// the size/diameter bound, the two energy upper bounds, and both sides of
/// the positive-eigenvalue bound); every other graph gets all thirteen.
pub fn analyze(g: &Graph, opts: &EvalOptions) -> Result<Analysis> {
    let profile = distance_profile(g)?;
    let spectrum = d_eigenvalues_with(&profile, &opts.spectrum)?;
    analyze_with(g, profile, spectrum, opts)
}

/// [`analyze`] for callers that already hold the distance profile and spectrum.
pub fn analyze_with(
    g: &Graph,
    profile: DistanceProfile,
    spectrum: DistanceSpectrum,
    opts: &EvalOptions,
) -> Result<Analysis> {
    let n = g.n();
    let m = g.m();
    let tol = opts.tol;
    let estrada = distance_estrada(&spectrum)?;
    let energy = distance_energy(&spectrum);
    let mu1 = spectrum.spectral_radius();
    let diameter = profile.diameter();

    let mut reports = Vec::with_capacity(BoundId::ALL.len());
    let (eq4_lower, eq4_upper) = bound_eq4(n, m, diameter);
    reports.push(BoundReport::new(BoundId::Eq4Lower, eq4_lower, estrada, tol));
    reports.push(BoundReport::new(BoundId::Eq4Upper, eq4_upper, estrada, tol));
    let (eq5, eq6) = bound_eq5_eq6(n, diameter, energy);
    reports.push(BoundReport::new(BoundId::Eq5, eq5, estrada - energy, tol));
    reports.push(BoundReport::new(BoundId::Eq6, eq6, estrada, tol));

    let (eq19_lower, eq19_upper) = bound_eq19(n, spectrum.n_plus(), energy);

    if n >= 2 {
        let ps = power_sequence(&profile, opts.alpha, opts.t + 1)?;
        let power_estimate = mu1_lower_power(&ps, opts.t)?;
        let chain = mu1_lower_chain(&profile)?;

        reports.push(
            BoundReport::new(BoundId::Eq7, bound_eq7(n, power_estimate)?, estrada, tol)
                .with_params(opts.alpha, opts.t),
        );
        reports.push(BoundReport::new(
            BoundId::Eq11,
            bound_eq11(n, profile.wiener())?,
            estrada,
            tol,
        ));
        reports.push(BoundReport::new(
            BoundId::Eq14,
            bound_eq14(n, m)?,
            estrada,
            tol,
        ));
        reports.push(BoundReport::new(
            BoundId::Eq19Lower,
            eq19_lower,
            estrada,
            tol,
        ));
        reports.push(BoundReport::new(
            BoundId::Eq19Upper,
            eq19_upper,
            estrada,
            tol,
        ));
        reports.push(
            BoundReport::new(BoundId::Mu1Lemma21, power_estimate, mu1, tol)
                .with_params(opts.alpha, opts.t),
        );
        reports.push(BoundReport::new(BoundId::Mu1Eq12Chain, chain.r1, mu1, tol));
        reports.push(BoundReport::new(BoundId::Mu1Eq13Chain, chain.r2, mu1, tol));
        reports.push(BoundReport::new(
            BoundId::Mu1Lemma23,
            mu1_lower_size(n, m)?,
            mu1,
            tol,
        ));
    } else {
        reports.push(BoundReport::new(
            BoundId::Eq19Lower,
            eq19_lower,
            estrada,
            tol,
        ));
        reports.push(BoundReport::new(
            BoundId::Eq19Upper,
            eq19_upper,
            estrada,
            tol,
        ));
    }

    let flags = detect_equality_cases(g, &profile, &spectrum);
    Ok(Analysis {
        profile,
        spectrum,
        estrada,
        energy,
        flags,
        reports,
    })
}

/// Bound reports for one connected graph, ordered by [`BoundId`].
pub fn evaluate_all(g: &Graph, opts: &EvalOptions) -> Result<Vec<BoundReport>> {
    analyze(g, opts).map(|a| a.reports)
}
