use std::io::Write as _;

use quon::cli::cli_run;
use quon::io::{parse_mtc, serialize_mtc, MtcFile};
use quon::mtc::fibonacci;

fn run(args: &[&str]) -> (i32, String) {
    let mut buf: Vec<u8> = Vec::new();
    let argv = std::iter::once("quon").chain(args.iter().copied());
    let code = cli_run(argv, &mut buf);
    (code, String::from_utf8(buf).unwrap())
}

#[test]
fn verify_builtin() {
    let (code, out) = run(&["verify", "fibonacci"]);
    assert_eq!(code, 0, "{out}");
    for id in ["s.unitary", "verlinde.recovery", "dims.delta_times_s", "recoupling.pentagon"] {
        assert!(out.contains(&format!("PASS {id}")), "missing {id}:\n{out}");
    }
    assert!(out.contains("fingerprint="));
}

#[test]
fn selfdual_tetrahedron_residual() {
    let (code, out) = run(&["selfdual", "ising", "--graph", "tetrahedron"]);
    assert_eq!(code, 0, "{out}");
    let line = out.lines().find(|l| l.contains("graph_duality.identity")).unwrap();
    let err: f64 = line
        .split("max_error=")
        .nth(1)
        .unwrap()
        .split_whitespace()
        .next()
        .unwrap()
        .parse()
        .unwrap();
    assert!(err < 1e-8);
}

#[test]
fn verlinde_table() {
    let (code, out) = run(&["verlinde", "fibonacci", "--n", "2", "--g", "1"]);
    assert_eq!(code, 0, "{out}");
    assert!(out.contains("dim(1 1; g=1) = 2"));
    assert!(out.contains("dim(tau tau; g=1) = 3"));
}

#[test]
fn json_lines_records() {
    let (code, out) = run(&["--format", "json-lines", "--threads", "1", "ghz-max", "semion", "--n", "3", "--g", "0"]);
    assert_eq!(code, 0);
    let records: Vec<serde_json::Value> = out.lines().map(|l| serde_json::from_str(l).unwrap()).collect();
    assert_eq!(records[0]["record"], "header");
    assert_eq!(records[0]["version"], env!("CARGO_PKG_VERSION"));
    let checks: Vec<&serde_json::Value> = records.iter().filter(|r| r["record"] == "check").collect();
    assert!(!checks.is_empty());
    for c in &checks {
        for field in ["check", "category", "params", "max_error", "passed"] {
            assert!(!c[field].is_null(), "{field} missing in {c}");
        }
    }
    let ids: Vec<&str> = checks.iter().map(|c| c["check"].as_str().unwrap()).collect();
    let mut sorted = ids.clone();
    sorted.sort();
    assert_eq!(ids, sorted);
    // Deterministic output for fixed inputs.
    let (_, again) = run(&["--format", "json-lines", "--threads", "1", "ghz-max", "semion", "--n", "3", "--g", "0"]);
    assert_eq!(out, again);
}

#[test]
fn other_subcommands() {
    for args in [
        &["subcategories", "ising"][..],
        &["genfun", "fibonacci", "--n", "2", "--terms", "3"],
        &["selfdual", "fibonacci", "--graph", "wheel:3"],
        &["selfdual", "fibonacci", "--graph", "cycle:3"],
        &["coefficient", "ising", "--graph", "dipole:4", "--labels", "sigma", "sigma", "sigma", "sigma"],
    ] {
        let (code, out) = run(args);
        assert_eq!(code, 0, "{args:?}\n{out}");
    }
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(run(&["ghz-max", "ising"]).0, 2);
    assert_eq!(run(&["verify", "no_such_category"]).0, 2);
    assert_eq!(run(&["frobnicate"]).0, 2);
    assert_eq!(run(&["--format", "xml", "verify", "ising"]).0, 2);
}

#[test]
fn failing_check_exits_one() {
    // A file whose S matrix is not unitary.
    let mut file = MtcFile::from_mtc(&fibonacci(), None);
    file.name = "broken".into();
    file.s.as_mut().unwrap()[1][1] *= 2.0;
    let mut tmp = tempfile::NamedTempFile::new().unwrap();
    tmp.write_all(serialize_mtc(&file).as_bytes()).unwrap();
    let (code, out) = run(&["verify", tmp.path().to_str().unwrap()]);
    assert_eq!(code, 1, "{out}");
    assert!(out.contains("FAIL s.unitary"));
}

#[test]
fn verify_semion_file() {
    let text = "mtc hand_semion\nlabels 1 s\nunit 1\n\
                N 1 1 1 1\nN 1 s s 1\nN s 1 s 1\nN s s 1 1\n\
                S 0 0.7071067811865476 0 0.7071067811865476 0\n\
                S 1 0.7071067811865476 0 -0.7071067811865476 0\n\
                F s s s s 1 1 -1 0\n";
    assert!(parse_mtc(text).is_ok());
    let mut tmp = tempfile::NamedTempFile::new().unwrap();
    tmp.write_all(text.as_bytes()).unwrap();
    let (code, out) = run(&["verify", tmp.path().to_str().unwrap()]);
    assert_eq!(code, 0, "{out}");
    assert!(out.contains("PASS recoupling.pentagon"));
}

#[test]
fn dual_graph_of_map_file() {
    let map = "map theta\nvertex 0 2 4\nvertex 1 5 3\nedge 1 0 1\nedge 2 2 3\nedge 3 4 5\n";
    let mut tmp = tempfile::NamedTempFile::new().unwrap();
    tmp.write_all(map.as_bytes()).unwrap();
    let (code, out) = run(&["dual-graph", tmp.path().to_str().unwrap()]);
    assert_eq!(code, 0, "{out}");
    assert!(out.contains("map theta_dual"));
    assert!(out.contains("PASS dual_graph.involution"));
    let bad = "map x\nvertex 0 1\nedge 1 0 7\n";
    let mut tmp = tempfile::NamedTempFile::new().unwrap();
    tmp.write_all(bad.as_bytes()).unwrap();
    assert_eq!(run(&["dual-graph", tmp.path().to_str().unwrap()]).0, 2);
}
