//! Distance-spectral invariants of connected graphs.
//!
//! The crate computes the distance matrix of a simple connected graph and
//! the quantities built from it (distance degrees, Wiener index, the
//! distance spectrum, the distance Estrada index `sum exp(mu_i)` and the
//! distance energy `sum |mu_i|`). It then evaluates a family of known lower and
//! upper bounds on those quantities, flags where they are tight and where they
//! fail, and sweeps random and exhaustive graph collections looking for
//! counterexamples.
//!
//! ```
//! use distspec::{analyze, generate_family, BoundId, EvalOptions, Family};
//!
//! let p4 = generate_family(Family::Path(4)).unwrap();
//! let analysis = analyze(&p4, &EvalOptions::default()).unwrap();
//! let eq7 = analysis.report(BoundId::Eq7).unwrap();
//! assert!((eq7.bound_value - 175.069).abs() < 5e-4);
//! assert!(eq7.satisfied);
//! ```

pub mod bounds;
pub mod cli;
pub mod distance;
pub mod error;
pub mod graph;
pub mod graph6;
pub mod harness;
pub mod report;
pub mod spectral;

pub use bounds::{
    analyze, analyze_with, bound_eq11, bound_eq14, bound_eq19, bound_eq4, bound_eq5_eq6, bound_eq7,
    detect_equality_cases, evaluate_all, mu1_lower_chain, mu1_lower_power, mu1_lower_size,
    Analysis, BoundId, BoundKind, BoundReport, DegreeChain, EqualityFlags, EvalOptions,
};
pub use distance::{distance_profile, power_sequence, DistanceProfile, PowerSequence};
pub use error::{Error, Result};
pub use graph::{
    generate_family, parse_edgelist, random_connected_gnp, random_connected_gnp_with, Family,
    FamilyKind, Graph,
};
pub use graph6::{parse_graph6, to_graph6};
pub use harness::{
    exhaustive_range, exhaustive_small, labeled_connected_graphs, scan_tightness, verify,
    FamilySpec, ScanConfig, Severity, TightnessRow, VerificationSummary,
};
pub use spectral::{
    count_positive, d_eigenvalues, d_eigenvalues_with, distance_energy, distance_estrada,
    distance_estrada_series, DistanceSpectrum, SeriesOptions, SpectrumOptions,
};
