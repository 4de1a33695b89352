use std::io::Write;
use std::path::Path;
use std::process::{Command, Output, Stdio};

fn tokenfan(args: &[&str], stdin: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_tokenfan"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(stdin.as_bytes()).unwrap();
    child.wait_with_output().unwrap()
}

fn ok(args: &[&str], stdin: &str) -> String {
    let out = tokenfan(args, stdin);
    assert!(
        out.status.success(),
        "{args:?} failed: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).unwrap()
}

fn path_str(p: &Path) -> &str {
    p.to_str().unwrap()
}

#[test]
fn fan_then_mk_has_a_vertex_table() {
    let fan = ok(&["build", "fan", "--m", "2", "--n", "2"], "");
    assert!(fan.starts_with("p 4 5\n"));
    let mk = ok(&["mk", "--k", "2"], &fan);
    assert!(mk.starts_with("p 10 20\n"));
    assert_eq!(mk.lines().filter(|l| l.starts_with("v ")).count(), 10);
    assert!(mk.contains("v 1 1,1\n"));
}

#[test]
fn tk_builds_the_token_graph() {
    let c4 = ok(&["build", "cycle", "--n", "4"], "");
    let tk = ok(&["tk", "--k", "2"], &c4);
    assert!(tk.starts_with("p 6 "));
}

#[test]
fn decide_fan_json_shapes() {
    assert_eq!(
        ok(&["decide-fan", "--m", "5", "--n", "3", "--json"], ""),
        "{\"verdict\":\"not_hamiltonian_cutset\",\"cut_size\":15,\"components\":16}\n"
    );
    assert_eq!(
        ok(&["decide-fan", "--m", "2", "--n", "1", "--json"], ""),
        "{\"verdict\":\"not_hamiltonian_degree_one\",\"witness\":\"w1,w1\"}\n"
    );
    let ham = ok(&["decide-fan", "--m", "2", "--n", "3", "--json"], "");
    assert!(ham.starts_with("{\"verdict\":\"hamiltonian\",\"length\":15,"));
}

#[test]
fn fan_cycle_verifies_against_mk() {
    let dir = tempfile::tempdir().unwrap();
    let graph = dir.path().join("m2.el");
    let fan = ok(&["build", "fan", "--m", "4", "--n", "3"], "");
    ok(&["mk", "--k", "2", "--out", path_str(&graph)], &fan);
    let cycle = ok(&["fan-cycle", "--m", "4", "--n", "3"], "");
    assert_eq!(ok(&["verify", "--graph", path_str(&graph)], &cycle), "accept\n");

    // a cycle for a smaller fan does not cover this graph
    let short = ok(&["fan-cycle", "--m", "3", "--n", "3"], "");
    let out = tokenfan(&["verify", "--graph", path_str(&graph), "--json"], &short);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stdout).contains("\"accepted\":false"));
}

#[test]
fn exit_codes() {
    // usage error
    assert_eq!(tokenfan(&["decide-fan", "--m", "1"], "").status.code(), Some(2));
    assert_eq!(tokenfan(&["nope"], "").status.code(), Some(2));
    // domain error
    assert_eq!(tokenfan(&["fan-cycle", "--m", "5", "--n", "3"], "").status.code(), Some(1));
    assert_eq!(tokenfan(&["mk", "--k", "2"], "p 3 1\ne 1 9\n").status.code(), Some(1));
    // inconclusive
    let m2c5 = ok(&["mk", "--k", "2"], &ok(&["build", "cycle", "--n", "5"], ""));
    let out = tokenfan(&["brute", "--budget", "10", "--json"], &m2c5);
    assert_eq!(out.status.code(), Some(3));
    assert_eq!(String::from_utf8_lossy(&out.stdout), "{\"result\":\"inconclusive\",\"kind\":\"cycle\"}\n");
    // a complete search with no cycle is still a success
    assert_eq!(ok(&["brute", "--json"], &m2c5), "{\"result\":\"none\",\"kind\":\"cycle\"}\n");
}

#[test]
fn scan_is_deterministic_across_job_counts() {
    let one = ok(&["scan", "--order", "5", "--connected", "--jobs", "1"], "");
    let four = ok(&["scan", "--order", "5", "--connected", "--jobs", "4"], "");
    assert_eq!(one, four);
    assert_eq!(one.lines().count(), 728);
    let first: serde_json::Value = serde_json::from_str(one.lines().next().unwrap()).unwrap();
    assert_eq!(first["order"], 5);
    assert_eq!(first["elapsed_ms"], 0);
}

#[test]
fn scan_reads_graph6_lines() {
    let dir = tempfile::tempdir().unwrap();
    let input = dir.path().join("g.g6");
    std::fs::write(&input, "Cl\nC~\n").unwrap();
    let out = ok(&["scan", "--input", path_str(&input)], "");
    let lines: Vec<&str> = out.lines().collect();
    assert_eq!(lines.len(), 2);
    assert!(lines[0].contains("\"ham_g\":\"yes\",\"ham_mk\":\"no\""));
    assert!(lines[1].contains("\"ham_g\":\"yes\",\"ham_mk\":\"yes\""));
}

#[test]
fn convert_round_trips() {
    let k4 = ok(&["build", "complete", "--n", "4"], "");
    assert_eq!(ok(&["convert", "--to", "g6"], &k4), "C~\n");
    let back = ok(&["convert", "--format", "g6", "--to", "el"], "C~\n");
    assert_eq!(back, k4);
    let dot = ok(&["build", "fan", "--m", "1", "--n", "2", "--format", "dot"], "");
    assert!(dot.contains("w1"));
}

#[test]
fn certify_fan_and_custom_cut() {
    let v: serde_json::Value =
        serde_json::from_str(&ok(&["certify", "--m", "5", "--n", "3", "--json"], "")).unwrap();
    assert_eq!(v["components"], 16);
    assert_eq!(v["refutes_hamiltonicity"], true);

    let dir = tempfile::tempdir().unwrap();
    let star = dir.path().join("star.el");
    std::fs::write(&star, "p 4 3\ne 1 2\ne 1 3\ne 1 4\n").unwrap();
    let v: serde_json::Value = serde_json::from_str(&ok(
        &["certify", "--graph", path_str(&star), "--cut", "1", "--json"],
        "",
    ))
    .unwrap();
    assert_eq!(v["components"], 3);
    assert_eq!(v["refutes_hamiltonicity"], true);
}

#[test]
fn join_cycle_verifies() {
    let dir = tempfile::tempdir().unwrap();
    let left = dir.path().join("e4.el");
    let right = dir.path().join("c4.el");
    ok(&["build", "empty", "--n", "3", "--out", path_str(&left)], "");
    ok(&["build", "cycle", "--n", "4", "--out", path_str(&right)], "");
    let (l, r) = (path_str(&left), path_str(&right));

    let joined = ok(&["build", "join", "--left", l, "--right", r], "");
    let big = dir.path().join("m2.el");
    ok(&["mk", "--k", "2", "--out", path_str(&big)], &joined);

    for extra in [&[][..], &["--path", "3,2,1,4"][..]] {
        let mut args = vec!["join-cycle", "--left", l, "--right", r];
        args.extend_from_slice(extra);
        let cycle = ok(&args, "");
        assert!(cycle.starts_with("# M2 join m=3 n=4\n"));
        assert_eq!(ok(&["verify", "--graph", path_str(&big)], &cycle), "accept\n");
    }
    // 1,3,2,4 is not a path of C4
    let out = tokenfan(&["join-cycle", "--left", l, "--right", r, "--path", "1,3,2,4"], "");
    assert_eq!(out.status.code(), Some(1));
}
