//! Structural equality flags and the bounds that are tight on a few
//! classic graphs.

use distspec::{analyze, generate_family, EvalOptions, Family};

fn main() -> distspec::Result<()> {
    let graphs = [
        ("K1", Family::Complete(1)),
        ("K2", Family::Complete(2)),
        ("K5", Family::Complete(5)),
        ("C4", Family::Cycle(4)),
        ("C5", Family::Cycle(5)),
        ("K3,3", Family::CompleteBipartite(3, 3)),
        ("P5", Family::Path(5)),
        ("S6", Family::Star(6)),
    ];
    for (name, family) in graphs {
        let g = generate_family(family)?;
        let a = analyze(&g, &EvalOptions::default())?;
        let tight: Vec<&str> = a
            .reports
            .iter()
            .filter(|r| r.equality)
            .map(|r| r.bound_id.as_str())
            .collect();
        println!("{name:<5} {:?}", a.flags);
        println!(
            "      tight: {}",
            if tight.is_empty() {
                "-".to_string()
            } else {
                tight.join(" ")
            }
        );
    }
    Ok(())
}
