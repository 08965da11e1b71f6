//! Every bound evaluated on the path P4, ordered from tightest to loosest.

use distspec::{analyze, generate_family, EvalOptions, Family};

fn main() -> distspec::Result<()> {
    let g = generate_family(Family::Path(4))?;
    let a = analyze(&g, &EvalOptions::default())?;
    println!("DEE(P4) = {:.6}, E_D(P4) = {:.6}", a.estrada, a.energy);

    let mut reports = a.reports.clone();
    reports.sort_by(|x, y| x.relative_slack().total_cmp(&y.relative_slack()));
    println!(
        "{:<16} {:>6} {:>14} {:>14} {:>12}",
        "bound", "kind", "bound", "actual", "rel. slack"
    );
    for r in &reports {
        let kind = format!("{:?}", r.kind).to_lowercase();
        println!(
            "{:<16} {:>6} {:>14.6} {:>14.6} {:>12.3e}",
            r.bound_id.as_str(),
            kind,
            r.bound_value,
            r.actual_value,
            r.relative_slack()
        );
    }
    Ok(())
}
