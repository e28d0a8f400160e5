use std::io::Write;
use std::process::{Command, Output, Stdio};

use serde_json::Value;

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_convexham"))
}

fn run(args: &[&str], stdin: &[u8]) -> Output {
    let mut child = bin()
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("binary runs");
    child.stdin.take().unwrap().write_all(stdin).unwrap();
    child.wait_with_output().unwrap()
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).unwrap_or_else(|e| panic!("{e}: {}", String::from_utf8_lossy(&out.stdout)))
}

fn gen(args: &[&str]) -> Vec<u8> {
    let mut full = vec!["gen"];
    full.extend_from_slice(args);
    let out = run(&full, b"");
    assert!(out.status.success());
    out.stdout
}

fn tmp(name: &str, bytes: &[u8]) -> std::path::PathBuf {
    let dir = std::env::temp_dir().join(format!("convexham-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let p = dir.join(name);
    std::fs::write(&p, bytes).unwrap();
    p
}

#[test]
fn gen_convex_position_has_five_crossings() {
    let v: Value = serde_json::from_slice(&gen(&["convex-position", "--n", "5"])).unwrap();
    assert_eq!(v["crossings"].as_array().unwrap().len(), 5);
    assert_eq!(v["points"].as_array().unwrap().len(), 5);
}

#[test]
fn gen_twisted_long_edge_crosses_all_independent_edges() {
    let v: Value = serde_json::from_slice(&gen(&["twisted", "--n", "5"])).unwrap();
    let cr: Vec<Value> = v["crossings"].as_array().unwrap().clone();
    for f in [[2, 3], [2, 4], [3, 4]] {
        let pair = serde_json::json!([[1, 5], f]);
        let rev = serde_json::json!([f, [1, 5]]);
        assert!(cr.contains(&pair) || cr.contains(&rev), "{f:?}");
    }
    assert!(v.get("points").is_none());
}

#[test]
fn gen_random_is_byte_identical() {
    let a = gen(&["random", "--n", "9", "--seed", "7"]);
    let b = gen(&["random", "--n", "9", "--seed", "7"]);
    assert_eq!(a, b);
    assert_ne!(a, gen(&["random", "--n", "9", "--seed", "8"]));
}

#[test]
fn manifest_goes_to_stderr_or_file() {
    let out = run(&["gen", "random", "--n", "6", "--seed", "3"], b"");
    let m: Value = serde_json::from_slice(&out.stderr).unwrap();
    assert_eq!(m["seeds"], serde_json::json!([3]));
    assert!(m["versions"]["convexham"].is_string());
    let path = std::env::temp_dir().join(format!("convexham-manifest-{}.json", std::process::id()));
    let drawing = gen(&["convex-position", "--n", "6"]);
    let out = run(&["find", "hc", "--manifest", path.to_str().unwrap()], &drawing);
    assert!(out.status.success());
    assert!(out.stderr.is_empty());
    let m: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(m["input_sha256"].as_str().unwrap().len(), 64);
    assert!(m["oracle_queries"].as_u64().unwrap() > 0);
}

#[test]
fn find_hc_on_convex_position_is_the_hull() {
    let out = run(&["find", "hc"], &gen(&["convex-position", "--n", "8"]));
    assert!(out.status.success());
    let c = json(&out);
    assert_eq!(c["vertices"], serde_json::json!([1, 2, 3, 4, 5, 6, 7, 8]));
    assert_eq!(c["oracle_verified"], true);
    assert_eq!(c["kind"], "cycle");
}

#[test]
fn find_star_hc_on_random_instance() {
    let out = run(
        &["find", "star-hc", "--star", "3"],
        &gen(&["random", "--n", "12", "--seed", "1"]),
    );
    assert!(out.status.success());
    let c = json(&out);
    assert_eq!(c["oracle_verified"], true);
    assert_eq!(c["claims"]["star_avoiding"], 3);
    assert_eq!(c["vertices"][0], 3);
}

#[test]
fn find_hc_on_twisted_reports_evidence() {
    let out = run(&["find", "hc"], &gen(&["twisted", "--n", "6"]));
    assert_eq!(out.status.code(), Some(1));
    let v = json(&out);
    assert_eq!(v["error"], "NotConvexEvidence");
    assert_eq!(v["evidence"]["vertices"].as_array().unwrap().len(), 3);
}

#[test]
fn find_star_hc_on_twisted_without_gate() {
    let out = run(
        &["find", "star-hc", "--star", "6", "--no-verify"],
        &gen(&["twisted", "--n", "6"]),
    );
    assert_eq!(out.status.code(), Some(1));
    assert_eq!(json(&out)["evidence"]["lemma"], "two-blocks");
}

#[test]
fn every_task_runs_on_a_random_instance() {
    let d = gen(&["random", "--n", "10", "--seed", "11"]);
    let tasks: [&[&str]; 7] = [
        &["hc"],
        &["st-path", "--s", "2", "--t", "9"],
        &["star-hc", "--star", "4"],
        &["empty-cycle", "--k", "5", "--star", "1"],
        &["edge-path", "--edge", "3,8"],
        &["max-plane"],
        &["two-edge-path", "--edges", "1,2", "5,6"],
    ];
    for task in tasks {
        let mut args = vec!["find"];
        args.extend_from_slice(task);
        let out = run(&args, &d);
        let v = json(&out);
        if task[0] == "two-edge-path" && v.get("error").is_some() {
            // the fixed edge pair may cross in this point set
            assert_eq!(v["error"], "EdgesCrossOrAdjacent");
            continue;
        }
        assert!(out.status.success(), "{task:?}: {v}");
        assert_eq!(v["oracle_verified"], true, "{task:?}");
    }
}

#[test]
fn no_verify_marks_certificates_unverified() {
    let out = run(&["find", "hc", "--no-verify"], &gen(&["convex-position", "--n", "7"]));
    assert!(out.status.success());
    assert_eq!(json(&out)["oracle_verified"], false);
}

#[test]
fn usage_errors_exit_two() {
    let d = gen(&["convex-position", "--n", "5"]);
    assert_eq!(run(&["find", "st-path", "--s", "1"], &d).status.code(), Some(2));
    assert_eq!(run(&["gen", "nope", "--n", "5"], b"").status.code(), Some(2));
    assert_eq!(run(&["find", "edge-path", "--edge", "3"], &d).status.code(), Some(2));
}

#[test]
fn domain_errors_exit_one() {
    let out = run(&["find", "hc"], b"{\"n\": 3, \"points\": [[0,0],[1,1],[2,2]]}");
    assert_eq!(out.status.code(), Some(1));
    assert_eq!(json(&out)["error"], "DegeneratePointSet");
    let out = run(
        &["find", "st-path", "--s", "2", "--t", "2"],
        &gen(&["convex-position", "--n", "5"]),
    );
    assert_eq!(out.status.code(), Some(1));
    assert_eq!(json(&out)["error"], "SameVertex");
}

#[test]
fn pipeline_gen_find_verify() {
    for gen_args in [
        &["convex-position", "--n", "9"][..],
        &["random", "--n", "11", "--seed", "2"],
    ] {
        let d = gen(gen_args);
        let cert = run(&["find", "star-hc", "--star", "2"], &d);
        assert!(cert.status.success());
        let dp = tmp(&format!("d-{}.json", gen_args[0]), &d);
        let cp = tmp(&format!("c-{}.json", gen_args[0]), &cert.stdout);
        let out = run(
            &["verify", "--in", dp.to_str().unwrap(), "--cert", cp.to_str().unwrap()],
            b"",
        );
        assert!(out.status.success());
        assert_eq!(json(&out)["ok"], true);
    }
}

#[test]
fn verify_rejects_a_crossing_cycle() {
    let d = gen(&["convex-position", "--n", "5"]);
    let bad = br#"{"kind":"cycle","vertices":[1,3,2,4,5],"edges":[[1,3],[2,3],[2,4],[4,5],[1,5]],"claims":{"plane":true,"hamiltonian":true},"oracle_verified":true}"#;
    let cp = tmp("bad.json", bad);
    let out = run(&["verify", "--cert", cp.to_str().unwrap()], &d);
    assert_eq!(out.status.code(), Some(1));
    let v = json(&out);
    assert_eq!(v["ok"], false);
    assert!(!v["failures"].as_array().unwrap().is_empty());
}

#[test]
fn check_convex_verdicts() {
    for method in ["triangles", "k5"] {
        let out = run(
            &["check-convex", "--method", method],
            &gen(&["random", "--n", "8", "--seed", "4"]),
        );
        let v = json(&out);
        assert_eq!(v["convex"], true);
        assert_eq!(v["method"], method);
        assert!(v["witness"].is_null());
        let v = json(&run(
            &["check-convex", "--method", method],
            &gen(&["twisted", "--n", "6"]),
        ));
        assert_eq!(v["convex"], false);
        assert!(v["witness"].is_object());
    }
}

#[test]
fn max_plane_trials_agree() {
    let out = run(
        &["max-plane", "--trials", "6", "--seed", "9"],
        &gen(&["random", "--n", "9", "--seed", "5"]),
    );
    assert!(out.status.success());
    let v = json(&out);
    assert_eq!(v["size_invariant"], true);
    let size = v["size"].as_u64().unwrap();
    assert!(size >= 2 * 9 - 3);
    assert!(v["trial_sizes"]
        .as_array()
        .unwrap()
        .iter()
        .all(|s| s.as_u64() == Some(size)));
    let seeded = json(&run(
        &["max-plane", "--seed-cycle"],
        &gen(&["convex-position", "--n", "7"]),
    ));
    assert_eq!(seeded["size"], 11);
    let refused = run(&["max-plane"], &gen(&["twisted", "--n", "6"]));
    assert_eq!(refused.status.code(), Some(1));
    assert_eq!(json(&refused)["error"], "NotConvex");
}

#[test]
fn render_svg() {
    let d = gen(&["convex-position", "--n", "5"]);
    let out = run(&["render"], &d);
    assert!(out.status.success());
    let svg = String::from_utf8(out.stdout).unwrap();
    assert_eq!(svg.matches("<line ").count(), 10);
    assert_eq!(svg, String::from_utf8(run(&["render"], &d).stdout).unwrap());

    let cert = run(&["find", "hc"], &d);
    let cp = tmp("hull.json", &cert.stdout);
    let svg = String::from_utf8(run(&["render", "--highlight", cp.to_str().unwrap()], &d).stdout).unwrap();
    assert_eq!(svg.matches("class=\"highlight\"").count(), 5);
    assert_eq!(svg.matches("class=\"edge\"").count(), 5);

    let out = run(&["render"], &gen(&["twisted", "--n", "5"]));
    assert_eq!(out.status.code(), Some(1));
    assert_eq!(json(&out)["error"], "NoCoordinates");
}

#[test]
fn omitted_crossings_are_recomputed() {
    let d = gen(&["random", "--n", "8", "--seed", "2", "--omit-crossings"]);
    assert!(!String::from_utf8_lossy(&d).contains("crossings"));
    assert!(run(&["find", "hc"], &d).status.success());
}

#[test]
fn bench_reports_quadratic_counts() {
    let out = run(&["bench", "--sizes", "40,80"], b"");
    assert!(out.status.success());
    let v = json(&out);
    let rows = v["rows"].as_array().unwrap();
    assert_eq!(rows.len(), 2);
    let slope = v["slopes"][0].as_f64().unwrap();
    assert!(slope > 1.5 && slope < 2.3, "{slope}");
}
