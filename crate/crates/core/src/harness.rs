//! Bulk verification: evaluate every bound over named families, random
//! connected samples, or every labeled connected graph of a given order, and
//! summarize violations, tight cases and slack statistics.
//!
//! Each sample is generated from its own ChaCha8 stream (selected by cell and
//! sample index), so results do not depend on evaluation order and parallel
//! runs reproduce serial ones exactly.

use std::collections::BTreeMap;
use std::ops::RangeInclusive;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::bounds::{analyze, BoundId, BoundReport, EvalOptions};
use crate::error::{Error, Result};
use crate::graph::{
    generate_family, random_connected_gnp_with, FamilyKind, Graph, DEFAULT_RETRY_CAP,
};
use crate::graph6::to_graph6;

pub const REPORT_VERSION: &str = "distspec-report/1";
pub const PRNG_NAME: &str =
    "ChaCha8Rng/rand_chacha-0.3 (seed_from_u64, stream = cell << 32 | sample)";

/// Largest order accepted by a scan.
pub const MAX_SCAN_ORDER: usize = 256;
/// Largest order accepted by [`exhaustive_small`]; 2^28 labeled graphs at 8.
pub const MAX_EXHAUSTIVE_ORDER: usize = 8;

#[derive(Debug, Clone, PartialEq)]
pub enum FamilySpec {
    /// One deterministic member of a named family per order.
    Named {
        kind: FamilyKind,
        orders: RangeInclusive<usize>,
    },
    /// `count` connected G(n, p) samples per `(n, p)` cell.
    Gnp {
        orders: RangeInclusive<usize>,
        p: Vec<f64>,
    },
}

#[derive(Debug, Clone, PartialEq)]
pub struct ScanConfig {
    pub families: Vec<FamilySpec>,
    /// Samples per random cell. Named families are deterministic and are
    /// sampled once per order.
    pub count: usize,
    pub seed: u64,
    pub eval: EvalOptions,
    pub parallel: bool,
    pub max_attempts: usize,
}

impl Default for ScanConfig {
    fn default() -> Self {
        ScanConfig {
            families: Vec::new(),
            count: 1,
            seed: 0,
            eval: EvalOptions::default(),
            parallel: true,
            max_attempts: DEFAULT_RETRY_CAP,
        }
    }
}

impl ScanConfig {
    pub fn validate(&self) -> Result<()> {
        let invalid = |msg: String| Err(Error::InvalidParameter(msg));
        if self.count == 0 {
            return invalid("count must be at least 1".into());
        }
        if self.families.is_empty() {
            return invalid("no families to scan".into());
        }
        if self.eval.tol.is_nan() || self.eval.tol < 0.0 {
            return invalid(format!("tol = {} must be non-negative", self.eval.tol));
        }
        if self.eval.t == 0 {
            return invalid("t must be at least 1".into());
        }
        for spec in &self.families {
            let orders = match spec {
                FamilySpec::Named { orders, .. } => orders,
                FamilySpec::Gnp { orders, p } => {
                    if p.is_empty() {
                        return invalid("G(n, p) family needs at least one p".into());
                    }
                    if let Some(bad) = p.iter().find(|&&p| !(p > 0.0 && p <= 1.0)) {
                        return invalid(format!("p = {bad} outside (0, 1]"));
                    }
                    orders
                }
            };
            if orders.is_empty() || *orders.start() < 1 || *orders.end() > MAX_SCAN_ORDER {
                return invalid(format!(
                    "order range {}..={} must lie within 1..={MAX_SCAN_ORDER}",
                    orders.start(),
                    orders.end()
                ));
            }
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Severity {
    /// A bound already known to fail on some graphs.
    KnownOpen,
    Unexpected,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Violation {
    pub graph6: String,
    pub bound_id: BoundId,
    pub slack: f64,
    pub severity: Severity,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct EqualityHit {
    pub graph6: String,
    pub bound_id: BoundId,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SkippedCell {
    pub cell: String,
    pub reason: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct NumericFailure {
    pub graph6: String,
    pub message: String,
}

/// Slack statistics for one bound over finite slacks; `nonfinite` counts the
/// reports left out (infinite upper bounds).
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct TightnessStats {
    pub count: usize,
    pub nonfinite: usize,
    pub min_slack: f64,
    pub mean_slack: f64,
    pub max_slack: f64,
    pub min_relative_slack: f64,
    pub mean_relative_slack: f64,
    pub max_relative_slack: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct VerificationSummary {
    pub version: String,
    pub prng: Option<String>,
    pub seed: Option<u64>,
    pub alpha: f64,
    pub t: usize,
    pub tol: f64,
    pub graphs_tested: usize,
    pub violations: Vec<Violation>,
    pub equality_hits: Vec<EqualityHit>,
    pub tightness_stats: BTreeMap<BoundId, TightnessStats>,
    pub skipped_cells: Vec<SkippedCell>,
    pub numeric_failures: Vec<NumericFailure>,
}

impl VerificationSummary {
    pub fn unexpected_violations(&self) -> impl Iterator<Item = &Violation> {
        self.violations
            .iter()
            .filter(|v| v.severity == Severity::Unexpected)
    }

    pub fn known_open_violations(&self) -> impl Iterator<Item = &Violation> {
        self.violations
            .iter()
            .filter(|v| v.severity == Severity::KnownOpen)
    }

    /// No violations, counting known-open ones only when `strict`.
    pub fn passed(&self, strict: bool) -> bool {
        if strict {
            self.violations.is_empty()
        } else {
            self.unexpected_violations().next().is_none()
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("summary serializes")
    }
}

/// One `(graph, bound)` line of a tightness scan.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct TightnessRow {
    pub graph6: String,
    pub n: usize,
    pub m: usize,
    pub diameter: u32,
    pub wiener: u64,
    pub bound_id: BoundId,
    pub bound_value: f64,
    pub actual_value: f64,
    pub slack: f64,
    pub equality: bool,
}

#[derive(Debug, Clone)]
enum Outcome {
    Evaluated {
        graph6: String,
        n: usize,
        m: usize,
        diameter: u32,
        wiener: u64,
        reports: Vec<BoundReport>,
    },
    NumericFailure {
        graph6: String,
        message: String,
    },
    Skipped {
        cell: String,
        reason: String,
    },
}

fn evaluate_graph(g: &Graph, eval: &EvalOptions) -> Outcome {
    let graph6 = to_graph6(g);
    match analyze(g, eval) {
        Ok(a) => Outcome::Evaluated {
            graph6,
            n: g.n(),
            m: g.m(),
            diameter: a.profile.diameter(),
            wiener: a.profile.wiener(),
            reports: a.reports,
        },
        Err(e) => Outcome::NumericFailure {
            graph6,
            message: e.to_string(),
        },
    }
}

#[derive(Debug, Clone)]
enum Task {
    Named {
        kind: FamilyKind,
        n: usize,
    },
    Gnp {
        cell: usize,
        n: usize,
        p: f64,
        sample: usize,
    },
}

fn tasks(config: &ScanConfig) -> Vec<Task> {
    let mut tasks = Vec::new();
    let mut cell = 0usize;
    for spec in &config.families {
        match spec {
            FamilySpec::Named { kind, orders } => {
                for n in orders.clone() {
                    tasks.push(Task::Named { kind: *kind, n });
                    cell += 1;
                }
            }
            FamilySpec::Gnp { orders, p } => {
                for n in orders.clone() {
                    for &p in p {
                        for sample in 0..config.count {
                            tasks.push(Task::Gnp { cell, n, p, sample });
                        }
                        cell += 1;
                    }
                }
            }
        }
    }
    tasks
}

fn run_task(task: &Task, config: &ScanConfig) -> Outcome {
    match *task {
        Task::Named { kind, n } => match generate_family(kind.with_order(n)) {
            Ok(g) => evaluate_graph(&g, &config.eval),
            Err(e) => Outcome::Skipped {
                cell: format!("{} n={n}", kind.name()),
                reason: e.to_string(),
            },
        },
        Task::Gnp { cell, n, p, sample } => {
            let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
            rng.set_stream(((cell as u64) << 32) | sample as u64);
            match random_connected_gnp_with(n, p, &mut rng, config.max_attempts) {
                Ok(g) => evaluate_graph(&g, &config.eval),
                Err(e) => Outcome::Skipped {
                    cell: format!("gnp n={n} p={p}"),
                    reason: e.to_string(),
                },
            }
        }
    }
}

fn collect_outcomes(config: &ScanConfig) -> Result<Vec<Outcome>> {
    config.validate()?;
    let tasks = tasks(config);
    let outcomes = if config.parallel {
        tasks.par_iter().map(|t| run_task(t, config)).collect()
    } else {
        tasks.iter().map(|t| run_task(t, config)).collect()
    };
    Ok(outcomes)
}

#[derive(Default)]
struct StatsAccumulator {
    count: usize,
    nonfinite: usize,
    slack: (f64, f64, f64),
    relative: (f64, f64, f64),
}

impl StatsAccumulator {
    fn push(&mut self, r: &BoundReport) {
        let rel = r.relative_slack();
        if !r.slack.is_finite() || !rel.is_finite() {
            self.nonfinite += 1;
            return;
        }
        if self.count == 0 {
            self.slack = (r.slack, 0.0, r.slack);
            self.relative = (rel, 0.0, rel);
        }
        self.count += 1;
        self.slack = (
            self.slack.0.min(r.slack),
            self.slack.1 + r.slack,
            self.slack.2.max(r.slack),
        );
        self.relative = (
            self.relative.0.min(rel),
            self.relative.1 + rel,
            self.relative.2.max(rel),
        );
    }

    fn finish(self) -> TightnessStats {
        let c = self.count as f64;
        let mean = |sum: f64| if self.count == 0 { f64::NAN } else { sum / c };
        TightnessStats {
            count: self.count,
            nonfinite: self.nonfinite,
            min_slack: if self.count == 0 {
                f64::NAN
            } else {
                self.slack.0
            },
            mean_slack: mean(self.slack.1),
            max_slack: if self.count == 0 {
                f64::NAN
            } else {
                self.slack.2
            },
            min_relative_slack: if self.count == 0 {
                f64::NAN
            } else {
                self.relative.0
            },
            mean_relative_slack: mean(self.relative.1),
            max_relative_slack: if self.count == 0 {
                f64::NAN
            } else {
                self.relative.2
            },
        }
    }
}

fn summarize(outcomes: &[Outcome], eval: &EvalOptions, seed: Option<u64>) -> VerificationSummary {
    let mut graphs_tested = 0;
    let mut violations = Vec::new();
    let mut equality_hits = Vec::new();
    let mut stats: BTreeMap<BoundId, StatsAccumulator> = BTreeMap::new();
    let mut skipped_cells: Vec<SkippedCell> = Vec::new();
    let mut numeric_failures = Vec::new();

    for outcome in outcomes {
        match outcome {
            Outcome::Evaluated {
                graph6, reports, ..
            } => {
                graphs_tested += 1;
                for r in reports {
                    if !r.satisfied {
                        violations.push(Violation {
                            graph6: graph6.clone(),
                            bound_id: r.bound_id,
                            slack: r.slack,
                            severity: if r.bound_id.is_known_open() {
                                Severity::KnownOpen
                            } else {
                                Severity::Unexpected
                            },
                        });
                    }
                    if r.equality {
                        equality_hits.push(EqualityHit {
                            graph6: graph6.clone(),
                            bound_id: r.bound_id,
                        });
                    }
                    stats.entry(r.bound_id).or_default().push(r);
                }
            }
            Outcome::NumericFailure { graph6, message } => numeric_failures.push(NumericFailure {
                graph6: graph6.clone(),
                message: message.clone(),
            }),
            Outcome::Skipped { cell, reason } => {
                if !skipped_cells.iter().any(|s| &s.cell == cell) {
                    skipped_cells.push(SkippedCell {
                        cell: cell.clone(),
                        reason: reason.clone(),
                    });
                }
            }
        }
    }

    VerificationSummary {
        version: REPORT_VERSION.to_string(),
        prng: seed.map(|_| PRNG_NAME.to_string()),
        seed,
        alpha: eval.alpha,
        t: eval.t,
        tol: eval.tol,
        graphs_tested,
        violations,
        equality_hits,
        tightness_stats: stats.into_iter().map(|(k, v)| (k, v.finish())).collect(),
        skipped_cells,
        numeric_failures,
    }
}

/// Samples every configured cell, evaluates all bounds and summarizes.
pub fn verify(config: &ScanConfig) -> Result<VerificationSummary> {
    let outcomes = collect_outcomes(config)?;
    Ok(summarize(&outcomes, &config.eval, Some(config.seed)))
}

/// One row per `(graph, bound)`, sorted by order, graph6 string and bound.
pub fn scan_tightness(config: &ScanConfig) -> Result<Vec<TightnessRow>> {
    let outcomes = collect_outcomes(config)?;
    let mut rows = Vec::new();
    for outcome in outcomes {
        if let Outcome::Evaluated {
            graph6,
            n,
            m,
            diameter,
            wiener,
            reports,
        } = outcome
        {
            rows.extend(reports.into_iter().map(|r| TightnessRow {
                graph6: graph6.clone(),
                n,
                m,
                diameter,
                wiener,
                bound_id: r.bound_id,
                bound_value: r.bound_value,
                actual_value: r.actual_value,
                slack: r.slack,
                equality: r.equality,
            }));
        }
    }
    rows.sort_by(|a, b| (a.n, &a.graph6, a.bound_id).cmp(&(b.n, &b.graph6, b.bound_id)));
    Ok(rows)
}

/// Adjacency bitmask connectivity check for graphs given by an edge mask over
/// the pairs in `pairs` order.
fn mask_connected(n: usize, mask: u64, pairs: &[(usize, usize)]) -> bool {
    let mut adj = [0u16; MAX_EXHAUSTIVE_ORDER];
    for (bit, &(u, v)) in pairs.iter().enumerate() {
        if mask >> bit & 1 == 1 {
            adj[u] |= 1 << v;
            adj[v] |= 1 << u;
        }
    }
    let full = (1u16 << n) - 1;
    let mut reached = 1u16;
    let mut frontier = 1u16;
    while frontier != 0 {
        let mut next = 0u16;
        let mut f = frontier;
        while f != 0 {
            let v = f.trailing_zeros() as usize;
            next |= adj[v];
            f &= f - 1;
        }
        frontier = next & !reached;
        reached |= next;
    }
    reached == full
}

/// Every connected graph on vertex set `0..n`, labeled (no isomorphism
/// reduction), in increasing order of the edge bitmask over pairs `u < v`.
pub fn labeled_connected_graphs(n: usize) -> Result<Vec<Graph>> {
    if n == 0 || n > MAX_EXHAUSTIVE_ORDER {
        return Err(Error::InvalidParameter(format!(
            "exhaustive enumeration supports 1..={MAX_EXHAUSTIVE_ORDER} vertices, got {n}"
        )));
    }
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .collect();
    let total = 1u64 << pairs.len();
    let graphs = (0..total)
        .into_par_iter()
        .filter(|&mask| mask_connected(n, mask, &pairs))
        .map(|mask| {
            let edges = pairs
                .iter()
                .enumerate()
                .filter(|(bit, _)| mask >> bit & 1 == 1)
                .map(|(_, &e)| e);
            Graph::from_edges(n, edges).expect("pairs are valid edges")
        })
        .collect();
    Ok(graphs)
}

/// Evaluates every bound on every labeled connected graph with exactly `n`
/// vertices (`n <= 8`).
pub fn exhaustive_small(n: usize, eval: &EvalOptions) -> Result<VerificationSummary> {
    exhaustive_range(n..=n, eval)
}

/// [`exhaustive_small`] over each order in `orders`, merged into one summary.
pub fn exhaustive_range(
    orders: RangeInclusive<usize>,
    eval: &EvalOptions,
) -> Result<VerificationSummary> {
    if orders.is_empty() {
        return Err(Error::InvalidParameter("empty order range".into()));
    }
    let mut outcomes = Vec::new();
    for n in orders {
        let graphs = labeled_connected_graphs(n)?;
        let batch: Vec<Outcome> = graphs.par_iter().map(|g| evaluate_graph(g, eval)).collect();
        outcomes.extend(batch);
    }
    Ok(summarize(&outcomes, eval, None))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph6::parse_graph6;

    fn config(families: Vec<FamilySpec>) -> ScanConfig {
        ScanConfig {
            families,
            ..ScanConfig::default()
        }
    }

    #[test]
    fn labeled_counts() {
        let counts: Vec<usize> = (1..=5)
            .map(|n| labeled_connected_graphs(n).unwrap().len())
            .collect();
        assert_eq!(counts, vec![1, 1, 4, 38, 728]);
        assert!(labeled_connected_graphs(0).is_err());
        assert!(labeled_connected_graphs(9).is_err());
    }

    #[test]
    fn exhaustive_examples() {
        let eval = EvalOptions::default();
        assert_eq!(exhaustive_small(3, &eval).unwrap().graphs_tested, 4);
        assert_eq!(exhaustive_small(4, &eval).unwrap().graphs_tested, 38);
        let two = exhaustive_small(2, &eval).unwrap();
        assert_eq!(two.graphs_tested, 1);
        assert!(two
            .equality_hits
            .iter()
            .any(|h| h.bound_id == BoundId::Eq14 && h.graph6 == "A_"));
        assert!(exhaustive_small(9, &eval).is_err());
    }

    #[test]
    fn complete_family_has_no_violations_for_tight_bounds() {
        let s = verify(&config(vec![FamilySpec::Named {
            kind: FamilyKind::Complete,
            orders: 2..=10,
        }]))
        .unwrap();
        assert_eq!(s.graphs_tested, 9);
        assert_eq!(s.unexpected_violations().count(), 0);
        for n in 2..=10 {
            let g6 = to_graph6(&generate_family(crate::Family::Complete(n)).unwrap());
            for id in [BoundId::Eq7, BoundId::Eq11] {
                assert!(s
                    .equality_hits
                    .iter()
                    .any(|h| h.graph6 == g6 && h.bound_id == id));
            }
        }
        assert!(s.passed(false));
        assert!(!s.passed(true), "K_3..K_10 violate the known-open bound");
    }

    #[test]
    fn path4_slack_statistic() {
        let s = verify(&config(vec![FamilySpec::Named {
            kind: FamilyKind::Path,
            orders: 4..=4,
        }]))
        .unwrap();
        let eq7 = &s.tightness_stats[&BoundId::Eq7];
        // 175.4639383067345 - 175.0694754331431
        assert!((eq7.min_slack - 0.3944628735914).abs() < 1e-9);
        assert_eq!(eq7.min_slack, eq7.max_slack);
    }

    #[test]
    fn triangle_is_a_known_open_witness() {
        let s = verify(&config(vec![FamilySpec::Named {
            kind: FamilyKind::Complete,
            orders: 3..=3,
        }]))
        .unwrap();
        assert_eq!(s.violations.len(), 1);
        let v = &s.violations[0];
        assert_eq!(
            (v.bound_id, v.severity),
            (BoundId::Eq14, Severity::KnownOpen)
        );
        assert!((v.slack - (8.124814981273535 - 8.524391382167263)).abs() < 1e-12);
        assert_eq!(parse_graph6(&v.graph6).unwrap().n(), 3);
    }

    #[test]
    fn invalid_family_members_are_skipped() {
        let s = verify(&config(vec![FamilySpec::Named {
            kind: FamilyKind::Cycle,
            orders: 1..=4,
        }]))
        .unwrap();
        assert_eq!(s.graphs_tested, 2);
        assert_eq!(s.skipped_cells.len(), 2);
    }

    #[test]
    fn exhausted_retry_cap_skips_cell() {
        let mut c = config(vec![FamilySpec::Gnp {
            orders: 40..=40,
            p: vec![0.01],
        }]);
        c.count = 3;
        c.max_attempts = 3;
        let s = verify(&c).unwrap();
        assert_eq!(s.graphs_tested, 0);
        assert_eq!(s.skipped_cells.len(), 1);
        assert!(s.passed(true));
    }

    #[test]
    fn gnp_scan_row_count_and_order() {
        let mut c = config(vec![FamilySpec::Gnp {
            orders: 8..=8,
            p: vec![0.3],
        }]);
        c.count = 100;
        c.seed = 42;
        let rows = scan_tightness(&c).unwrap();
        assert_eq!(rows.len(), 1300);
        assert!(rows.windows(2).all(
            |w| (w[0].n, &w[0].graph6, w[0].bound_id) <= (w[1].n, &w[1].graph6, w[1].bound_id)
        ));
    }

    #[test]
    fn config_validation() {
        assert!(config(vec![]).validate().is_err());
        let mut c = config(vec![FamilySpec::Gnp {
            orders: 3..=5,
            p: vec![0.0],
        }]);
        assert!(c.validate().is_err());
        c.families = vec![FamilySpec::Named {
            kind: FamilyKind::Path,
            orders: 0..=3,
        }];
        assert!(c.validate().is_err());
        c.families = vec![FamilySpec::Named {
            kind: FamilyKind::Path,
            orders: 2..=257,
        }];
        assert!(c.validate().is_err());
        c.families = vec![FamilySpec::Named {
            kind: FamilyKind::Path,
            orders: 2..=5,
        }];
        c.count = 0;
        assert!(c.validate().is_err());
    }
}
