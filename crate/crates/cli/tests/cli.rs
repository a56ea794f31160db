//! Runs the built `maxmin` binary and checks output and exit codes.

use std::io::Write;
use std::process::{Command, Output, Stdio};

fn maxmin(args: &[&str], stdin: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_maxmin"))
        .args(args)
        .env_remove("MAXMIN_MAX_N")
        .env_remove("MAXMIN_SAMPLES")
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("binary runs");
    child.stdin.take().unwrap().write_all(stdin.as_bytes()).unwrap();
    child.wait_with_output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json_lines(o: &Output) -> Vec<serde_json::Value> {
    stdout(o)
        .lines()
        .map(|l| serde_json::from_str(l).expect("valid JSON line"))
        .collect()
}

#[test]
fn construct_then_invariants_pipeline() {
    let built = maxmin(&["construct", "hs", "5"], "");
    assert!(built.status.success());
    let inv = maxmin(&["invariants"], &stdout(&built));
    assert!(inv.status.success());
    let v = &json_lines(&inv)[0];
    assert_eq!(v["tau_max"], 8);
    assert_eq!(v["n"], 25);
    assert_eq!(v["graph6"].as_str().unwrap(), stdout(&built).trim());
}

#[test]
fn invariants_of_small_families() {
    let c4 = &json_lines(&maxmin(&["invariants", "--family", "c4"], ""))[0];
    assert_eq!(c4["tau_max"], 2);
    assert_eq!(c4["i"], 2);
    assert_eq!(c4["matching"], 2);
    assert_eq!(c4["induced_matching"], 1);
    assert_eq!(c4["chordal"], false);
    assert_eq!(c4["gap_free"], true);
    assert_eq!(c4["bipartite"], true);

    let two_k2 = &json_lines(&maxmin(&["invariants", "--family", "2k2"], ""))[0];
    assert_eq!(two_k2["tau_max"], 2);
    assert_eq!(two_k2["induced_matching"], 2);
    assert_eq!(two_k2["gap_free"], false);

    let k5 = &json_lines(&maxmin(&["invariants", "--family", "k5"], ""))[0];
    assert_eq!(k5["tau_max"], 4);
}

#[test]
fn invariants_reads_edge_lists_and_graph6_streams() {
    let v = json_lines(&maxmin(&["invariants", "--graph", "-"], "3 2\n0 1\n1 2\n"));
    assert_eq!(v.len(), 1);
    assert_eq!(v[0]["tau_max"], 2);
    let v = json_lines(&maxmin(&["invariants"], "A_\nCl\nBw\n"));
    assert_eq!(v.len(), 3);
    assert_eq!(v[2]["tau_max"], 2);
}

#[test]
fn betti_c4_json_and_csv() {
    let o = maxmin(&["betti", "--family", "c4", "--char", "2"], "");
    assert!(o.status.success());
    let t = &json_lines(&o)[0];
    assert_eq!(t["pd"], 3);
    assert_eq!(t["reg"], 1);
    let entries: Vec<(u64, u64, u64)> = t["entries"]
        .as_array()
        .unwrap()
        .iter()
        .map(|e| (e["i"].as_u64().unwrap(), e["j"].as_u64().unwrap(), e["beta"].as_u64().unwrap()))
        .collect();
    assert_eq!(entries, vec![(0, 0, 1), (1, 2, 4), (2, 3, 4), (3, 4, 1)]);

    let csv = stdout(&maxmin(&["betti", "--family", "2k2", "--format", "csv"], ""));
    assert_eq!(csv, "i,j,beta\n0,0,1\n1,2,2\n2,4,1\n");
}

#[test]
fn betti_dual_check() {
    let o = maxmin(&["betti", "--family", "c4", "--dual"], "");
    assert!(o.status.success());
    let d = &json_lines(&o)[0]["dual"];
    assert_eq!(d["reg_dual"], 3);
    assert_eq!(d["identity_holds"], true);
    // Isolated vertices violate the dual check's precondition.
    let o = maxmin(&["betti", "--dual"], "3 1\n0 1\n");
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn verify_bound_exhaustive_n4() {
    let o = maxmin(&["verify", "bound", "--n", "4", "--exhaustive"], "");
    assert!(o.status.success());
    let r = &json_lines(&o)[0];
    assert_eq!(r["violations"].as_array().unwrap().len(), 0);
    assert_eq!(r["equality_class"].as_array().unwrap().len(), 3);
    assert_eq!(r["classes_visited"], 7);
}

#[test]
fn sampled_mode_is_seeded_and_stable() {
    let args = ["verify", "bound", "--n", "11", "--samples", "40", "--seed", "9"];
    let a = maxmin(&args, "");
    assert!(a.status.success());
    assert_eq!(stdout(&a), stdout(&maxmin(&args, "")));
    let no_seed = maxmin(&["verify", "bound", "--n", "11", "--samples", "40"], "");
    assert_eq!(no_seed.status.code(), Some(1));
    let too_big = maxmin(&["verify", "bound", "--n", "11"], "");
    assert_eq!(too_big.status.code(), Some(1));
}

#[test]
fn verify_classification_and_spectrum() {
    let o = maxmin(&["verify", "classification", "--n", "4"], "");
    assert!(o.status.success());
    assert_eq!(json_lines(&o)[0]["equality_class"].as_array().unwrap().len(), 3);

    let o = maxmin(&["verify", "spectrum", "--n", "10"], "");
    assert!(o.status.success());
    let rows = json_lines(&o);
    assert_eq!(rows.len(), 5); // p = 5..9
    assert!(rows.iter().all(|r| r["ok"] == true && r["reg"] == 1));
}

#[test]
fn verify_pdr_spec_csv() {
    let o = maxmin(&["verify", "pdr-spec", "--n", "4", "--format", "csv"], "");
    assert!(o.status.success());
    let text = stdout(&o);
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("n,p,r,witness_graph6"));
    let pairs: Vec<(String, String)> = lines
        .map(|l| {
            let f: Vec<&str> = l.split(',').collect();
            (f[1].to_string(), f[2].to_string())
        })
        .collect();
    assert_eq!(
        pairs,
        vec![("2".into(), "1".into()), ("2".into(), "2".into()), ("3".into(), "1".into())]
    );
}

#[test]
fn verify_pdr_build() {
    let o = maxmin(&["verify", "pdr-build", "--n", "8", "--p", "5", "--r", "2"], "");
    assert!(o.status.success());
    let rows = json_lines(&o);
    assert_eq!(rows.len(), 1);
    assert_eq!((rows[0]["pd"].as_u64(), rows[0]["reg"].as_u64()), (Some(5), Some(2)));
}

#[test]
fn enumerate_counts() {
    let o = maxmin(&["enumerate", "--n", "5"], "");
    assert_eq!(stdout(&o).lines().count(), 34);
    let o = maxmin(&["enumerate", "--n", "5", "--filter", "connected"], "");
    assert_eq!(stdout(&o).lines().count(), 21);
}

#[test]
fn construct_variants() {
    assert_eq!(stdout(&maxmin(&["construct", "2k2"], "")), "C`\n");
    let a = stdout(&maxmin(&["construct", "spectrum", "--n", "10", "--p", "5"], ""));
    let b = stdout(&maxmin(&["construct", "spectrum:10,5"], ""));
    assert_eq!(a, b);
    let el = stdout(&maxmin(&["construct", "c4", "--edge-list"], ""));
    assert_eq!(el, "4 4\n0 1\n0 3\n1 2\n2 3\n");
    assert_eq!(maxmin(&["construct", "hs", "0"], "").status.code(), Some(1));
    assert_eq!(maxmin(&["construct", "spectrum", "10", "3"], "").status.code(), Some(1));
}

#[test]
fn exit_codes() {
    assert_eq!(maxmin(&["invariants"], "Cll\n").status.code(), Some(2));
    assert_eq!(maxmin(&["invariants"], "").status.code(), Some(2));
    assert_eq!(maxmin(&["betti", "--family", "hs:5"], "").status.code(), Some(3));
    assert_eq!(maxmin(&["betti", "--family", "c4", "--char", "4"], "").status.code(), Some(1));
    assert_eq!(maxmin(&["frobnicate"], "").status.code(), Some(1));
    assert_eq!(maxmin(&["enumerate", "--n", "12"], "").status.code(), Some(3));
    assert_eq!(maxmin(&["invariants", "--graph", "/nonexistent/file"], "").status.code(), Some(1));
}

#[test]
fn max_n_override_from_environment() {
    let o = Command::new(env!("CARGO_BIN_EXE_maxmin"))
        .args(["betti", "--family", "c4"])
        .env("MAXMIN_MAX_N", "3")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(3));
}
