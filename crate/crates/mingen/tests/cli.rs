//! End-to-end tests of the command-line surface: output formats, file
//! artifacts, and exit codes.

mod common;

use common::{fixture_path, run};

fn table_arg() -> String {
    fixture_path().to_str().unwrap().to_string()
}

#[test]
fn components_lists_cosets() {
    let (stdout, _, code) = run(&["components", "--table", &table_arg(), "--gens", "b"]);
    assert_eq!(code, 0);
    assert_eq!(
        stdout,
        "components: 6\n  {e, b}\n  {a, ab}\n  {c, abc}\n  {ac, bc}\n  {cc, acc}\n  {bcc, abcc}\ncoset structure: verified\n"
    );
}

#[test]
fn closure_reports_subgroup_and_index() {
    let (stdout, _, code) = run(&["closure", "--table", &table_arg(), "--gens", "b"]);
    assert_eq!(code, 0);
    assert_eq!(stdout, "closure (order 2): {e, b}\nindex: 6\n");
}

#[test]
fn connectors_reports_both_modes() {
    let (stdout, _, code) = run(&["connectors", "--table", &table_arg(), "--gens", "b"]);
    assert_eq!(code, 0);
    assert_eq!(
        stdout,
        "components: 6\n\
         S1 (chain): {b, a, ac, ab, abc} -> connected\n\
         S2 (star): {b, a, c, ac, cc, bcc} -> connected\n\
         rank bound: 6\n"
    );
}

#[test]
fn rank_of_builtin_cyclic_six() {
    let (stdout, _, code) = run(&["rank", "--builtin", "cyclic:6"]);
    assert_eq!(code, 0);
    assert_eq!(stdout, "rank: 1\nwitness: g\n");
}

#[test]
fn rank_of_trivial_group_is_zero() {
    let (stdout, _, code) = run(&["rank", "--builtin", "trivial"]);
    assert_eq!(code, 0);
    assert_eq!(stdout, "rank: 0\nwitness: (empty)\n");
}

#[test]
fn info_prints_element_orders() {
    let (stdout, _, code) = run(&["info", "--builtin", "klein4"]);
    assert_eq!(code, 0);
    assert_eq!(
        stdout,
        "order: 4\nelement orders:\n  e 1\n  a 2\n  b 2\n  ab 2\n"
    );
}

#[test]
fn cayley_reports_counts_and_writes_dot() {
    let dir = tempfile::tempdir().unwrap();
    let dot_path = dir.path().join("c2.dot");
    let (stdout, _, code) = run(&[
        "cayley",
        "--builtin",
        "cyclic:2",
        "--gens",
        "g",
        "--dot",
        dot_path.to_str().unwrap(),
    ]);
    assert_eq!(code, 0);
    assert_eq!(
        stdout,
        "vertices: 2\narcs: 2\nedges: 1\ndigraph: regular, in-degree 1, out-degree 1\ngraph: regular, degree 1\n"
    );
    let dot = std::fs::read_to_string(&dot_path).unwrap();
    assert_eq!(
        dot,
        "digraph cayley {\n  0 [label=\"e\"];\n  1 [label=\"g\"];\n  0 -> 1 [color=\"blue\"];\n  1 -> 0 [color=\"blue\"];\n}\n"
    );
}

#[test]
fn cayley_undirected_dot_uses_edge_syntax() {
    let dir = tempfile::tempdir().unwrap();
    let dot_path = dir.path().join("c2u.dot");
    let (_, _, code) = run(&[
        "cayley",
        "--builtin",
        "cyclic:2",
        "--gens",
        "g",
        "--dot",
        dot_path.to_str().unwrap(),
        "--undirected",
    ]);
    assert_eq!(code, 0);
    let dot = std::fs::read_to_string(&dot_path).unwrap();
    assert_eq!(
        dot,
        "graph cayley {\n  0 [label=\"e\"];\n  1 [label=\"g\"];\n  0 -- 1 [color=\"blue\"];\n}\n"
    );
}

#[test]
fn mingen_default_policy_run() {
    let (stdout, _, code) = run(&["mingen", "--table", &table_arg(), "--start", "b"]);
    assert_eq!(code, 0);
    assert_eq!(
        stdout,
        "step 1 grow: add b -> components 6\n\
         step 2 grow: add ab (picked a) -> components 3\n\
         step 3 grow: add bc (picked c) -> components 1\n\
         step 4 prune: test ab -> connected, removed\n\
         step 5 prune: test b -> disconnected, kept\n\
         minimal generating set: b, bc\n\
         grow size: 3\n\
         rank bound: 6\n"
    );
}

#[test]
fn verify_trace_round_trips_and_detects_tampering() {
    let dir = tempfile::tempdir().unwrap();
    let trace_path = dir.path().join("run.jsonl");
    let trace_arg = trace_path.to_str().unwrap();
    let (_, _, code) = run(&[
        "mingen",
        "--table",
        &table_arg(),
        "--start",
        "b",
        "--script",
        "ab,bc",
        "--trace-json",
        trace_arg,
    ]);
    assert_eq!(code, 0);

    let (stdout, _, code) = run(&[
        "verify-trace",
        "--table",
        &table_arg(),
        "--trace",
        trace_arg,
    ]);
    assert_eq!(code, 0);
    assert_eq!(stdout, "replayed 5 steps: ok\nfinal set: b, c\n");

    let tampered = std::fs::read_to_string(&trace_path)
        .unwrap()
        .replace("\"components\":3", "\"components\":4");
    std::fs::write(&trace_path, tampered).unwrap();
    let (_, stderr, code) = run(&[
        "verify-trace",
        "--table",
        &table_arg(),
        "--trace",
        trace_arg,
    ]);
    assert_eq!(code, 1);
    assert!(stderr.contains("trace mismatch"));
}

#[test]
fn check_accepts_valid_and_flags_broken_tables() {
    let (stdout, _, code) = run(&["check", "--table", &table_arg()]);
    assert_eq!(code, 0);
    assert_eq!(stdout, "ok: group axioms hold (order 12)\n");

    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.txt");
    std::fs::write(&bad, "e a b ab\ne a b ab\na e ab b\nb ab e a\nab b a a\n").unwrap();
    let (stdout, _, code) = run(&["check", "--table", bad.to_str().unwrap()]);
    assert_eq!(code, 1);
    assert!(stdout.starts_with("invalid:"));
    assert!(stdout.contains("latin-row"));
}

#[test]
fn parse_errors_exit_with_code_two() {
    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("short.txt");
    std::fs::write(&bad, "e a\ne a\n").unwrap();
    let (_, stderr, code) = run(&["check", "--table", bad.to_str().unwrap()]);
    assert_eq!(code, 2);
    assert!(stderr.contains("expected 2 table rows"));
}

#[test]
fn domain_errors_exit_with_code_one() {
    let (_, stderr, code) = run(&["closure", "--table", &table_arg(), "--gens", "nope"]);
    assert_eq!(code, 1);
    assert!(stderr.contains("no element named 'nope'"));

    let (_, stderr, code) = run(&["mingen", "--builtin", "cyclic:4", "--start", "e"]);
    assert_eq!(code, 2, "identity start is a usage error: {stderr}");
}

#[test]
fn resource_refusals_exit_with_code_three() {
    let (_, stderr, code) = run(&["rank", "--builtin", "symmetric:6", "--cap", "3"]);
    assert_eq!(code, 3);
    assert!(stderr.contains("budget"));

    let (_, _, code) = run(&["rank", "--builtin", "klein4", "--cap", "1"]);
    assert_eq!(code, 3);
}

#[test]
fn usage_errors_exit_with_code_two() {
    let (_, _, code) = run(&["components", "--gens", "b"]);
    assert_eq!(code, 2, "a group source is required");

    let (_, stderr, code) = run(&[
        "mingen",
        "--builtin",
        "cyclic:4",
        "--start",
        "g",
        "--policy",
        "script",
    ]);
    assert_eq!(code, 2);
    assert!(stderr.contains("--script"));

    let (_, _, code) = run(&["rank", "--builtin", "nonsense:9"]);
    assert_eq!(code, 2);
}

#[test]
fn permutation_files_load() {
    let dir = tempfile::tempdir().unwrap();
    let perms = dir.path().join("s3.txt");
    std::fs::write(&perms, "(1 2 3)\n(1 2)\n").unwrap();
    let (stdout, _, code) = run(&["info", "--perms", perms.to_str().unwrap()]);
    assert_eq!(code, 0);
    assert!(stdout.starts_with("order: 6\n"));
    assert!(stdout.contains("(1.2.3) 3"));
}

#[test]
fn builtin_products_load() {
    let (stdout, _, code) = run(&["info", "--builtin", "product:cyclic:2*cyclic:3"]);
    assert_eq!(code, 0);
    assert!(stdout.starts_with("order: 6\n"));
    assert!(stdout.contains("(g.g2)"));
}
