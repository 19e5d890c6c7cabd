use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;

const BIN: &str = env!("CARGO_BIN_EXE_threshold");

fn run(args: &[&str]) -> Output {
    Command::new(BIN).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json(args: &[&str]) -> (Value, i32) {
    let mut full = args.to_vec();
    full.extend(["--format", "json"]);
    let o = run(&full);
    (serde_json::from_slice(&o.stdout).expect("valid JSON"), o.status.code().unwrap())
}

fn write_edges(dir: &Path, name: &str, text: &str) -> String {
    let p = dir.join(name);
    std::fs::write(&p, text).unwrap();
    p.to_str().unwrap().to_string()
}

#[test]
fn spectrum_of_nsg_3_2() {
    let o = run(&["spectrum", "--nsg", "nsg(3;2)"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    for line in ["assembled: 3 0 0 -1 -2", "mult0: 2", "multm1: 1", "eta_plus: 3", "eta_minus: -2"] {
        assert!(text.lines().any(|l| l == line), "missing {line:?} in\n{text}");
    }

    let (v, code) = json(&["spectrum", "--nsg", "nsg(3;2)"]);
    assert_eq!(code, 0);
    let want = [3.0, 0.0, 0.0, -1.0, -2.0];
    for key in ["assembled", "dense"] {
        let got: Vec<f64> = v[key].as_array().unwrap().iter().map(|x| x.as_f64().unwrap()).collect();
        assert_eq!(got.len(), 5);
        for (g, w) in got.iter().zip(want) {
            assert!((g - w).abs() < 1e-12, "{key}: {got:?}");
        }
    }
}

#[test]
fn scan_gap_order_ten() {
    let (v, code) = json(&["scan-gap", "--order", "10"]);
    assert_eq!(code, 0);
    assert_eq!(v["graphs_checked"], 256);
    assert_eq!(v["failures"].as_array().unwrap().len(), 0);
    assert_eq!(v["subgap_violations"], 0);
}

#[test]
fn forbidden_graphs_are_not_threshold() {
    let dir = tempfile::tempdir().unwrap();
    for (name, text) in [
        ("c4.txt", "4 4\n0 1\n1 2\n2 3\n3 0\n"),
        ("p4.txt", "# path\n4 3\n0 1\n1 2\n2 3\n"),
        ("2k2.txt", "4 2\n0 1\n2 3\n"),
    ] {
        let path = write_edges(dir.path(), name, text);
        let o = run(&["recognize", "--edges", &path]);
        assert_eq!(o.status.code(), Some(2), "{name}");
        assert_eq!(stdout(&o).lines().next(), Some("NotThreshold"), "{name}");

        let o = run(&["check-gap", "--edges", &path]);
        assert_eq!(o.status.code(), Some(2), "{name}");
    }
}

#[test]
fn usage_errors_exit_one() {
    let dir = tempfile::tempdir().unwrap();
    let missing = dir.path().join("missing.txt");
    let bad_header = write_edges(dir.path(), "bad.txt", "3 2\n0 1\n");
    let cases: &[&[&str]] = &[
        &[],
        &["frobnicate"],
        &["spectrum"],
        &["spectrum", "--seq", "0101", "--nsg", "nsg(1;1)"],
        &["spectrum", "--seq", "0121"],
        &["check-gap", "--nsg", "nsg(1,2;3)"],
        &["gen", "--seq", "01", "--connected-only"],
        &["scan-gap", "--order", "10", "--workers", "0"],
        &["scan-gap", "--order", "30"],
        &["scan-gap", "--order", "1"],
        &["check-antiregular", "--order", "1"],
        &["reduce", "--nsg", "nsg(1;1;+1)"],
        &["recognize", "--edges", missing.to_str().unwrap()],
        &["recognize", "--edges", &bad_header],
        &["spectrum", "--seq", "01", "--format", "xml"],
    ];
    for args in cases {
        let o = run(args);
        assert_eq!(o.status.code(), Some(1), "{args:?}");
        assert!(!o.stderr.is_empty(), "{args:?}");
    }
    assert_eq!(run(&["--help"]).status.code(), Some(0));
    assert_eq!(run(&["--version"]).status.code(), Some(0));
}

#[test]
fn reports_are_byte_identical() {
    let a = run(&["scan-gap", "--order", "12", "--format", "json", "--workers", "1"]);
    let b = run(&["scan-gap", "--order", "12", "--format", "json", "--workers", "4"]);
    let c = run(&["scan-gap", "--order", "12", "--format", "json", "--workers", "4"]);
    assert_eq!(a.stdout, b.stdout);
    assert_eq!(b.stdout, c.stdout);

    let a = run(&["scan-gap", "--order", "9", "--format", "csv", "--workers", "3"]);
    let b = run(&["scan-gap", "--order", "9", "--format", "csv", "--workers", "1"]);
    assert_eq!(a.stdout, b.stdout);
    assert_eq!(stdout(&a).lines().count(), 1 + 128);

    let a = run(&["scan-conjecture", "--order", "11", "--workers", "2"]);
    let b = run(&["scan-conjecture", "--order", "11", "--workers", "2"]);
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn gen_output_is_an_edge_list_that_recognizes_back() {
    let dir = tempfile::tempdir().unwrap();
    let listing = run(&["gen", "--order", "6"]);
    let seqs: Vec<String> =
        stdout(&listing).lines().map(|l| l.split(' ').next().unwrap().to_string()).collect();
    assert_eq!(seqs.len(), 32);
    for seq in &seqs {
        let path = dir.path().join(format!("{seq}.txt"));
        let o = run(&["gen", "--seq", seq, "--out", path.to_str().unwrap()]);
        assert_eq!(o.status.code(), Some(0));
        assert!(o.stdout.is_empty());

        let (v, code) = json(&["recognize", "--edges", path.to_str().unwrap()]);
        assert_eq!(code, 0);
        assert_eq!(v["kind"], "threshold");
        assert_eq!(v["sequence"], seq.as_str());

        // Same report whichever way the graph is given.
        let by_seq = run(&["check-gap", "--seq", seq, "--format", "json"]);
        let by_edges = run(&["check-gap", "--edges", path.to_str().unwrap(), "--format", "json"]);
        assert_eq!(by_seq.stdout, by_edges.stdout);
    }
}

#[test]
fn nsg_text_round_trips_through_gen() {
    for seq in ["0", "01", "0010111", "0110100", "000"] {
        let (v, _) = json(&["gen", "--seq", seq]);
        let nsg = v["nsg"].as_str().unwrap().to_string();
        let (w, code) = json(&["gen", "--nsg", &nsg]);
        assert_eq!(code, 0);
        assert_eq!(w, v, "{seq}");
    }
}

#[test]
fn gen_csv_rebuilds_the_sequence() {
    let o = run(&["gen", "--seq", "0010111", "--format", "csv"]);
    let text = stdout(&o);
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("vertex,symbol,class,weight,degree"));
    let seq: String = lines.map(|l| l.split(',').nth(1).unwrap()).collect();
    assert_eq!(seq, "0010111");
}

#[test]
fn batch_spectra_csv() {
    let o = run(&["spectrum", "--order", "4", "--format", "csv"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines[0], "sequence,order,eigenvalues");
    assert_eq!(lines.len(), 1 + 8);
    assert!(lines.contains(&"0000,4,0,0,0,0"));
    assert!(lines.contains(&"0111,4,3,-1,-1,-1"));

    let o = run(&["spectrum", "--order", "4", "--connected-only", "--format", "csv"]);
    assert_eq!(stdout(&o).lines().count(), 1 + 4);
}

#[test]
fn conjecture_and_antiregular_reports() {
    let (v, code) = json(&["scan-conjecture", "--order", "8"]);
    assert_eq!(code, 0);
    assert_eq!(v["conjecture_holds"], true);
    assert_eq!(v["extremal_eta_plus"]["sequence"], "01010101");

    let (v, code) = json(&["check-antiregular", "--order", "4"]);
    assert_eq!(code, 0);
    assert!((v["eta_plus"].as_f64().unwrap() - 0.311107817465980).abs() < 1e-9);
    assert!((v["eta_minus"].as_f64().unwrap() + 1.481194304092014).abs() < 1e-9);
    assert_eq!(v["passed"], true);
}

#[test]
fn reduce_reports_chain_with_case_tags() {
    let o = run(&["reduce", "--nsg", "nsg(3;2)"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.contains("nsg(3;2) - V_1 -> nsg(3;1) CaseII"), "{text}");
    assert!(text.contains("nsg(3;1) - U_1 -> nsg(2;1) CaseI "), "{text}");
    assert!(text.contains("terminal: nsg(2;1) A_3"), "{text}");

    let (v, code) = json(&["reduce", "--seq", "0001111"]);
    assert_eq!(code, 0);
    assert_eq!(v["check"]["steps_ok"], true);
    assert_eq!(v["check"]["monotone"], true);
    assert_eq!(v["chain"]["steps"].as_array().unwrap().len(), 4);
}
