use std::fs;

use distspec::cli::{run, EXIT_NUMERIC, EXIT_OK, EXIT_USAGE, EXIT_VIOLATION};

fn invoke(args: &[&str], stdin: &str) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("distspec").chain(args.iter().copied());
    let code = run(argv, &mut stdin.as_bytes(), &mut out, &mut err);
    (
        code,
        String::from_utf8(out).unwrap(),
        String::from_utf8(err).unwrap(),
    )
}

const P4_EDGES: &str = "4 3\n0 1\n1 2\n2 3\n";

#[test]
fn compute_p4_from_stdin() {
    let (code, out, err) = invoke(&["compute"], P4_EDGES);
    assert_eq!(code, EXIT_OK, "{err}");
    assert!(err.is_empty());
    assert_eq!(
        out,
        "n 4\nm 3\ndiameter 3\nwiener 10\n\
         spectrum 5.162278 -0.585786 -1.162278 -3.414214\n\
         DEE 175.463938\nDEE_series 175.463938\nenergy 10.324555\nn_plus 1\n"
    );
}

#[test]
fn compute_k2_graph6() {
    let (code, out, _) = invoke(&["compute", "--format", "graph6"], "A_\n");
    assert_eq!(code, EXIT_OK);
    assert!(out.contains("DEE 3.086161\n"));
    assert!(out.contains("spectrum 1.000000 -1.000000\n"));
}

#[test]
fn bounds_table_from_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("p4.txt");
    fs::write(&path, P4_EDGES).unwrap();
    let (code, out, _) = invoke(
        &["bounds", "--format", "edgelist", path.to_str().unwrap()],
        "",
    );
    assert_eq!(code, EXIT_OK);
    let rows: Vec<&str> = out.lines().collect();
    assert_eq!(rows[0], "bound_id bound actual slack satisfied equality");
    assert_eq!(rows.len(), 14);
    for prefix in [
        "EQ7 175.069 ",
        "EQ14 92.028 ",
        "EQ19_LOWER 11.870 ",
        "EQ4_LOWER 5.292 ",
    ] {
        assert!(
            rows.iter().any(|r| r.starts_with(prefix)),
            "missing {prefix}"
        );
    }
}

#[test]
fn extension_selects_graph6() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("k3.g6");
    fs::write(&path, "Bw\n").unwrap();
    let (code, out, _) = invoke(&["compute", path.to_str().unwrap()], "");
    assert_eq!(code, EXIT_OK);
    assert!(out.starts_with("n 3\nm 3\n"));
}

#[test]
fn bounds_json_and_csv() {
    let (code, out, _) = invoke(&["bounds", "--json"], "Ch");
    assert_eq!(code, EXIT_OK);
    let reports: serde_json::Value = serde_json::from_str(&out).unwrap();
    let reports = reports.as_array().unwrap();
    assert_eq!(reports.len(), 13);
    let eq7 = reports.iter().find(|r| r["bound_id"] == "EQ7").unwrap();
    assert_eq!(eq7["kind"], "lower");
    assert_eq!(eq7["t"], 2);

    let (code, out, _) = invoke(&["bounds", "--csv", "--alpha", "2", "--t", "3"], "Ch");
    assert_eq!(code, EXIT_OK);
    assert!(out
        .lines()
        .any(|l| l.starts_with("EQ7,lower,") && l.ends_with(",2.000000,3")));
}

#[test]
fn known_open_violation_needs_strict() {
    let (code, out, _) = invoke(&["bounds"], "Bw");
    assert_eq!(code, EXIT_OK);
    assert!(out.contains("EQ14 8.524 8.125 -0.400 false false"));
    let (code, _, _) = invoke(&["bounds", "--strict"], "Bw");
    assert_eq!(code, EXIT_VIOLATION);
}

#[test]
fn input_errors_exit_two() {
    let (code, out, err) = invoke(&["compute"], "4 2\n0 1\n2 3\n");
    assert_eq!(code, EXIT_USAGE);
    assert!(out.is_empty());
    assert!(err.contains("2 components"), "{err}");

    for bad in ["3 2\n0 1\n", "3 1\n0 5\n", "2 1\n0 0\n", "3 2\n0 1\n0 1\n"] {
        let (code, _, err) = invoke(&["compute", "--format", "edgelist"], bad);
        assert_eq!(code, EXIT_USAGE, "{bad:?}");
        assert!(!err.is_empty());
    }
    let (code, _, _) = invoke(&["compute", "--format", "graph6"], "A_x");
    assert_eq!(code, EXIT_USAGE);
    let (code, _, _) = invoke(&["compute", "/no/such/file.g6"], "");
    assert_eq!(code, EXIT_USAGE);
    let (code, _, _) = invoke(&["bounds", "--t", "50"], "Ch");
    assert_eq!(code, EXIT_USAGE);
    let (code, _, _) = invoke(&["verify", "--n", "5..2"], "");
    assert_eq!(code, EXIT_USAGE);
    let (code, _, _) = invoke(&["frobnicate"], "");
    assert_eq!(code, EXIT_USAGE);
}

#[test]
fn overflow_exits_three() {
    let mut text = String::from("200 199\n");
    for i in 0..199 {
        text.push_str(&format!("{i} {}\n", i + 1));
    }
    let (code, out, err) = invoke(&["compute"], &text);
    assert_eq!(code, EXIT_NUMERIC);
    assert!(out.is_empty());
    assert!(err.contains("overflow"));
}

#[test]
fn help_goes_to_stdout() {
    let (code, out, err) = invoke(&["--help"], "");
    assert_eq!(code, EXIT_OK);
    assert!(out.contains("exhaustive"));
    assert!(err.is_empty());
}

#[test]
fn verify_json_summary() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("summary.json");
    let (code, out, _) = invoke(
        &[
            "verify",
            "--family",
            "complete",
            "--family",
            "gnp",
            "--n",
            "2..8",
            "--p",
            "0.4,0.7",
            "--count",
            "3",
            "--seed",
            "11",
            "--json",
            "--output",
            path.to_str().unwrap(),
        ],
        "",
    );
    assert_eq!(code, EXIT_OK);
    let summary: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(summary["seed"], 11);
    assert_eq!(summary["graphs_tested"], 7 + 7 * 2 * 3);
    assert!(summary["violations"]
        .as_array()
        .unwrap()
        .iter()
        .all(|v| v["bound_id"] == "EQ14" && v["severity"] == "known-open"));
    assert_eq!(
        fs::read_to_string(&path).unwrap().trim_end(),
        out.trim_end()
    );

    let (code, _, _) = invoke(
        &["verify", "--family", "complete", "--n", "3", "--strict"],
        "",
    );
    assert_eq!(code, EXIT_VIOLATION);
}

#[test]
fn exhaustive_small_orders() {
    let (code, out, _) = invoke(&["exhaustive", "--n", "4"], "");
    assert_eq!(code, EXIT_OK);
    assert!(out.starts_with("graphs_tested 38\n"));
}

#[test]
fn scan_is_reproducible() {
    let args = [
        "scan", "--family", "gnp", "--family", "star", "--n", "3..9", "--p", "0.3,0.6", "--count",
        "3", "--seed", "5",
    ];
    let (code, first, _) = invoke(&args, "");
    assert_eq!(code, EXIT_OK);
    let (_, second, _) = invoke(&args, "");
    let mut serial_args = args.to_vec();
    serial_args.push("--serial");
    let (_, serial, _) = invoke(&serial_args, "");
    assert_eq!(first, second);
    assert_eq!(first, serial);
    assert!(first.starts_with(
        "graph6,n,m,diameter,wiener,bound_id,bound_value,actual_value,slack,equality\n"
    ));
    assert_eq!(first.lines().count(), 1 + (7 * 2 * 3 + 7) * 13);

    let (_, other_seed, _) = invoke(&["scan", "--n", "6", "--seed", "6", "--count", "3"], "");
    let (_, same_cfg, _) = invoke(&["scan", "--n", "6", "--seed", "5", "--count", "3"], "");
    assert_ne!(other_seed, same_cfg);
}
