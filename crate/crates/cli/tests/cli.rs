use std::process::{Command, Output};

fn equisym(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_equisym"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

const V4: &str = r#"{"name":"V4","order":4,"table":[[0,1,2,3],[1,0,3,2],[2,3,0,1],[3,2,1,0]],"generators":[1,2],"element_names":["e","a","b","c"]}"#;

#[test]
fn klein_four_stratum_has_two_orbits() {
    let out = equisym(&[
        "--output",
        "json",
        "strata",
        "--group",
        "D:2",
        "--signature",
        "0;2,2,2,2,2,2",
    ]);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["orbit_count"], 2);
    assert_eq!(v["total_vectors"], 180);
    assert_eq!(v["orbits"][0]["representative"], "-;r,r,r,r,s,s");
    assert_eq!(v["move_set_complete"], true);
}

#[test]
fn json_is_identical_across_thread_counts() {
    let run = |t: &str| {
        let out = equisym(&[
            "--output",
            "json",
            "--threads",
            t,
            "strata",
            "--group",
            "D:6",
            "--signature",
            "0;2,2,2,2,2,2",
        ]);
        assert!(out.status.success());
        out.stdout
    };
    let one = run("1");
    assert_eq!(one, run("4"));
    assert_eq!(one, run("7"));
}

#[test]
fn signatures_lists_dimension_three() {
    let out = equisym(&[
        "--output",
        "csv",
        "signatures",
        "--genus",
        "6",
        "--order",
        "10",
        "--dim",
        "3",
    ]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("0;2,2,2,2,2,2"));
}

#[test]
fn vector_count_matches_frozen_value() {
    let out = equisym(&[
        "vectors",
        "--group",
        "D:3",
        "--signature",
        "0;2,2,2,2,2,2",
        "--count-only",
    ]);
    assert!(out.status.success());
    assert_eq!(stdout(&out).trim(), "240");
}

#[test]
fn bad_group_spec_exits_two() {
    let out = equisym(&["strata", "--group", "X:3", "--signature", "0;2,2,2"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("X:3"));
}

#[test]
fn bad_signature_exits_two() {
    let out = equisym(&["strata", "--group", "D:3", "--signature", "0;2,2"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn oversized_search_exits_three() {
    let out = equisym(&[
        "strata",
        "--group",
        "D:40",
        "--signature",
        "0;2,2,2,2,2,2,2,2",
    ]);
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn catalog_group_matches_builtin_dihedral() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("v4.json");
    std::fs::write(&path, V4).unwrap();
    let path = path.to_str().unwrap();
    let out = equisym(&[
        "--catalog",
        path,
        "--output",
        "json",
        "strata",
        "--group",
        "V4",
        "--signature",
        "0;2,2,2,2,2,2",
    ]);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["orbit_count"], 2);
    assert_eq!(v["total_vectors"], 180);

    let out = equisym(&[
        "--catalog",
        path,
        "jacobian",
        "--group",
        "V4",
        "--signature",
        "0;2,2,2,2,2,2",
        "--vector",
        "-;a,a,a,a,b,b",
    ]);
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn cache_is_written_and_reused() {
    let dir = tempfile::tempdir().unwrap();
    let cache = dir.path().to_str().unwrap();
    let args = [
        "--output",
        "json",
        "strata",
        "--group",
        "D:5",
        "--signature",
        "0;2,2,2,2,2,2",
        "--cache",
        cache,
    ];
    let first = equisym(&args);
    assert!(first.status.success());
    assert_eq!(std::fs::read_dir(dir.path()).unwrap().count(), 1);
    let second = equisym(&args);
    assert_eq!(first.stdout, second.stdout);
}

#[test]
fn jacobian_reports_quotients_and_pryms() {
    let out = equisym(&[
        "--output",
        "json",
        "jacobian",
        "--group",
        "D:5",
        "--signature",
        "0;2,2,2,2,2,2",
        "--vector",
        "-;s,s,s,s,sr,sr",
        "--subgroups",
        "<r>,<s>",
        "--pryms",
        "<s>-><s,r>",
    ]);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["genus"], 6);
    assert_eq!(v["quotients"][0]["dim"], 2);
    assert_eq!(v["pryms"][0]["dim"], 2);
}

#[test]
fn scan_dimension_three_csv() {
    let out = equisym(&["--output", "csv", "scan", "--dim", "3", "--genus", "2..6"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert_eq!(text.lines().count(), 6);
}

#[test]
fn verify_f_family_passes() {
    let out = equisym(&["verify", "--suite", "f_family", "--genus", "6,8"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("(published)"));
    assert!(text.contains("0 failed"));
}

#[test]
fn verify_v_family_uses_computed_counts() {
    let out = equisym(&[
        "--output", "csv", "verify", "--suite", "v_family", "--genus", "10",
    ]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("v_family,10,orbit_count,1,1,computed,pass"));
}

#[test]
fn verify_bounds4_reports_the_genus_ten_failure() {
    let out = equisym(&["verify", "--suite", "bounds4"]);
    assert_eq!(out.status.code(), Some(1));
    let text = stdout(&out);
    assert!(text.contains("FAIL g=10 realizable_max: expected 10, got 12"));
    assert!(text.contains("PASS linear form"));
}

#[test]
fn verify_outside_family_is_usage_error() {
    let out = equisym(&["verify", "--suite", "u1_family", "--genus", "6"]);
    assert_eq!(out.status.code(), Some(2));
}
