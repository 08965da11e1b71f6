//! Text serializations shared by the harness and the command line: fixed
//! precision numbers and the CSV layouts.

use std::io::Write;

use crate::bounds::BoundReport;
use crate::error::{Error, Result};
use crate::harness::TightnessRow;

/// Fixed-point rendering with `decimals` places. Exact ties round to even;
/// non-finite values print as `inf`, `-inf` or `nan`.
pub fn format_fixed(x: f64, decimals: usize) -> String {
    if x.is_nan() {
        "nan".to_string()
    } else if x.is_infinite() {
        if x > 0.0 { "inf" } else { "-inf" }.to_string()
    } else {
        format!("{x:.decimals$}")
    }
}

fn csv_writer<W: Write>(w: W) -> csv::Writer<W> {
    csv::WriterBuilder::new()
        .terminator(csv::Terminator::Any(b'\n'))
        .from_writer(w)
}

fn csv_err(e: csv::Error) -> Error {
    Error::Io(e.to_string())
}

pub const REPORT_COLUMNS: [&str; 9] = [
    "bound_id",
    "kind",
    "bound_value",
    "actual_value",
    "satisfied",
    "slack",
    "equality",
    "alpha",
    "t",
];

pub const TIGHTNESS_COLUMNS: [&str; 10] = [
    "graph6",
    "n",
    "m",
    "diameter",
    "wiener",
    "bound_id",
    "bound_value",
    "actual_value",
    "slack",
    "equality",
];

/// One CSV row per report; numbers at six decimals, absent parameters empty.
pub fn write_reports_csv<W: Write>(reports: &[BoundReport], w: W) -> Result<()> {
    let mut out = csv_writer(w);
    out.write_record(REPORT_COLUMNS).map_err(csv_err)?;
    for r in reports {
        let kind = match r.kind {
            crate::bounds::BoundKind::Lower => "lower",
            crate::bounds::BoundKind::Upper => "upper",
        };
        out.write_record([
            r.bound_id.as_str().to_string(),
            kind.to_string(),
            format_fixed(r.bound_value, 6),
            format_fixed(r.actual_value, 6),
            r.satisfied.to_string(),
            format_fixed(r.slack, 6),
            r.equality.to_string(),
            r.alpha.map(|a| format_fixed(a, 6)).unwrap_or_default(),
            r.t.map(|t| t.to_string()).unwrap_or_default(),
        ])
        .map_err(csv_err)?;
    }
    out.flush()?;
    Ok(())
}

pub fn write_tightness_csv<W: Write>(rows: &[TightnessRow], w: W) -> Result<()> {
    let mut out = csv_writer(w);
    out.write_record(TIGHTNESS_COLUMNS).map_err(csv_err)?;
    for r in rows {
        out.write_record([
            r.graph6.clone(),
            r.n.to_string(),
            r.m.to_string(),
            r.diameter.to_string(),
            r.wiener.to_string(),
            r.bound_id.as_str().to_string(),
            format_fixed(r.bound_value, 6),
            format_fixed(r.actual_value, 6),
            format_fixed(r.slack, 6),
            r.equality.to_string(),
        ])
        .map_err(csv_err)?;
    }
    out.flush()?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bounds::{evaluate_all, EvalOptions};
    use crate::graph::{generate_family, Family};

    #[test]
    fn fixed_formatting_rounds_half_to_even() {
        assert_eq!(format_fixed(0.0625, 3), "0.062");
        assert_eq!(format_fixed(0.1875, 3), "0.188");
        assert_eq!(format_fixed(2.5, 0), "2");
        assert_eq!(
            format_fixed(std::f64::consts::E + 1.0 / std::f64::consts::E, 6),
            "3.086161"
        );
        assert_eq!(format_fixed(f64::INFINITY, 6), "inf");
        assert_eq!(format_fixed(f64::NEG_INFINITY, 3), "-inf");
        assert_eq!(format_fixed(f64::NAN, 3), "nan");
    }

    #[test]
    fn report_csv_layout() {
        let g = generate_family(Family::Path(4)).unwrap();
        let reports = evaluate_all(&g, &EvalOptions::default()).unwrap();
        let mut buf = Vec::new();
        write_reports_csv(&reports, &mut buf).unwrap();
        let text = String::from_utf8(buf).unwrap();
        let lines: Vec<&str> = text.lines().collect();
        assert_eq!(
            lines[0],
            "bound_id,kind,bound_value,actual_value,satisfied,slack,equality,alpha,t"
        );
        assert_eq!(lines.len(), 14);
        assert!(!text.contains('\r'));
        let eq7 = lines.iter().find(|l| l.starts_with("EQ7,")).unwrap();
        assert!(eq7.starts_with("EQ7,lower,175.069475,175.463938,true,"));
        assert!(eq7.ends_with(",false,1.000000,2"));
        let eq11 = lines.iter().find(|l| l.starts_with("EQ11,")).unwrap();
        assert!(eq11.ends_with(",,"));
    }
}
