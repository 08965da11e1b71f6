//! All labeled connected graphs up to a given order (default 5), looking for
//! bound violations.
//!
//!     cargo run --release --example exhaustive_search -- 6

use distspec::{exhaustive_range, BoundId, EvalOptions};

fn main() -> distspec::Result<()> {
    let max: usize = std::env::args()
        .nth(1)
        .map(|s| s.parse().expect("order"))
        .unwrap_or(5);
    let summary = exhaustive_range(1..=max, &EvalOptions::default())?;
    println!(
        "{} labeled connected graphs with n <= {max}",
        summary.graphs_tested
    );
    println!(
        "unexpected violations: {}",
        summary.unexpected_violations().count()
    );

    let mut worst: Option<&distspec::harness::Violation> = None;
    for v in summary.known_open_violations() {
        if worst.is_none_or(|w| v.slack < w.slack) {
            worst = Some(v);
        }
    }
    println!(
        "known-open violations: {}",
        summary.known_open_violations().count()
    );
    if let Some(w) = worst {
        println!(
            "worst: {} on {} with slack {:.6}",
            w.bound_id, w.graph6, w.slack
        );
    }
    let hits = summary
        .equality_hits
        .iter()
        .filter(|h| h.bound_id == BoundId::Mu1Lemma23)
        .count();
    println!("size bound tight on {hits} graphs");
    Ok(())
}
