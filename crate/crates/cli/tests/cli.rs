use std::process::{Command, Output};

use serde_json::Value;

fn sigmak(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_sigmak")).args(args).env_remove("SIGMAK_CACHE_DIR").output().unwrap()
}

fn json(args: &[&str]) -> Value {
    let out = sigmak(args);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["schemaVersion"], 1);
    v
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

#[test]
fn search_csv_matches_known_roots() {
    let out = sigmak(&["search", "--k", "4", "--max", "10000", "--format", "csv", "--no-cache"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("k,m,n,sigma1,sigma2,sigma3,sigma4,admissible,large,trivial"));
    let rows: Vec<&str> = lines.collect();
    assert_eq!(rows.len(), 8);
    assert!(rows.contains(&"4,715,806,91,3380,56420,0,true,true,false"));
    assert!(rows.contains(&"4,7476,7567,91,-3381,-558831,0,false,true,false"));
}

#[test]
fn search_admissible_and_diagonal() {
    let v = json(&["search", "--k", "4", "--max", "10000", "--admissible", "--format", "json", "--no-cache"]);
    let hits = v["results"].as_array().unwrap();
    assert_eq!(hits.len(), 1);
    assert_eq!((hits[0]["m"].as_u64(), hits[0]["n"].as_u64()), (Some(715), Some(806)));

    let v = json(&["search", "--k", "1", "--max", "5", "--format", "json", "--no-cache"]);
    let diag: Vec<(u64, u64)> =
        v["results"].as_array().unwrap().iter().map(|h| (h["m"].as_u64().unwrap(), h["n"].as_u64().unwrap())).collect();
    assert_eq!(diag, (1..=5).map(|i| (i, i)).collect::<Vec<_>>());
}

#[test]
fn search_trivial_and_orientation_flags() {
    let base = ["search", "--k", "5", "--max", "50", "--format", "json", "--no-cache"];
    let count = |extra: &[&str]| {
        let args: Vec<&str> = base.iter().chain(extra).copied().collect();
        json(&args)["results"].as_array().unwrap().len()
    };
    let plain = count(&[]);
    assert_eq!(count(&["--include-trivial"]), plain + 50);
    assert_eq!(count(&["--both-orientations"]), 2 * plain);
}

#[test]
fn search_cache_is_reused() {
    let dir = tempfile::tempdir().unwrap();
    let run = || {
        Command::new(env!("CARGO_BIN_EXE_sigmak"))
            .args(["search", "--k", "4", "--max", "300", "--format", "json"])
            .env("SIGMAK_CACHE_DIR", dir.path())
            .output()
            .unwrap()
    };
    let first = run();
    let files: Vec<_> = std::fs::read_dir(dir.path()).unwrap().collect();
    assert_eq!(files.len(), 1);
    let second = run();
    assert_eq!(first.stdout, second.stdout);
    let fresh = sigmak(&["search", "--k", "4", "--max", "300", "--format", "json", "--no-cache"]);
    assert_eq!(first.stdout, fresh.stdout);
}

#[test]
fn profile_examples() {
    let v = json(&["profile", "--n", "806", "--m", "715", "--format", "json"]);
    let r = &v["results"];
    assert_eq!(r["sigma"], serde_json::json!(["91/2", "845", "14105/2", "0"]));
    assert_eq!(r["cone"]["verdict"], "closure_boundary");
    assert_eq!(r["t3"]["sphere"], "26565/4");
    assert_eq!(r["t3"]["hyperbolic"], "14973/2");

    let v = json(&["profile", "--n", "36", "--m", "30", "--kmax", "4", "--format", "json"]);
    assert_eq!(v["results"]["cone"], serde_json::json!({"verdict": "outside", "first_nonpositive": 2}));
    assert_eq!(v["results"]["sigma"][1], "-15/4");

    let v = json(&["profile", "--n", "1", "--m", "1", "--kmax", "2", "--format", "json"]);
    assert_eq!(v["results"]["sigma"], serde_json::json!(["0", "-1/4"]));
    assert!(v["results"]["t3"].is_null());
}

#[test]
fn boundary_polynomials_and_values() {
    let v = json(&["boundary", "--geometry", "cap", "--n", "806", "--m", "715", "--format", "json"]);
    assert_eq!(v["results"]["h4"]["7"], "11194421414880/28977203");
    assert_eq!(v["results"]["s3"]["hyperbolic"]["5"], "927410178387/144886015");
    assert_eq!(v["results"]["n_formula"], 1519);
    let v = json(&["boundary", "--geometry", "ball", "--n", "806", "--m", "715", "--format", "json"]);
    assert_eq!(v["results"]["h4"]["7"], "24089939471088/144886015");
    assert_eq!(v["results"]["s3"]["sphere"]["5"], "508268486964/144886015");

    let v = json(&["boundary", "--geometry", "cap", "--n", "806", "--m", "715", "--kappa", "0", "--format", "json"]);
    assert_eq!(v["results"]["h4"], "0");
    assert_eq!(v["results"]["approximate"], false);

    let v =
        json(&["boundary", "--geometry", "ball", "--n", "806", "--m", "715", "--epsilon", "0.5", "--format", "json"]);
    assert_eq!(v["results"]["approximate"], true);
    let table = stdout(&sigmak(&["boundary", "--geometry", "ball", "--n", "806", "--m", "715", "--epsilon", "0.5"]));
    assert!(table.contains("approximate"));
}

#[test]
fn index_outputs() {
    let v =
        json(&["index", "--geometry", "ball", "--n", "806", "--m", "715", "--kappa", "1,2,4,8", "--format", "json"]);
    assert_eq!(v["results"]["model"], "leading-order, interior term dropped");
    let counts: Vec<f64> = v["results"]["estimates"]
        .as_array()
        .unwrap()
        .iter()
        .map(|e| e["count"].as_str().unwrap().parse::<f64>().unwrap())
        .collect();
    assert!(counts.windows(2).all(|w| w[0] <= w[1]), "{counts:?}");
    assert_eq!(counts[0], 1.0);

    let v = json(&[
        "index",
        "--geometry",
        "ball",
        "--n",
        "806",
        "--m",
        "715",
        "--kappa",
        "1",
        "--modes",
        "constant-only",
        "--format",
        "json",
    ]);
    assert_eq!(v["results"]["estimates"][0]["count"], "1");

    let v = json(&["index", "--geometry", "cap", "--n", "806", "--m", "715", "--kappa", "1,2", "--format", "json"]);
    for e in v["results"]["estimates"].as_array().unwrap() {
        assert_eq!(e["estimate"], true);
        assert_eq!(e["truncated"], false);
    }
    let table = stdout(&sigmak(&["index", "--geometry", "cap", "--n", "806", "--m", "715", "--kappa", "2"]));
    assert!(table.contains("estimate"));
}

#[test]
fn exit_codes() {
    let usage = [
        vec!["boundary", "--geometry", "cap", "--n", "806", "--m", "715", "--kappa", "1", "--epsilon", "0.1"],
        vec!["index", "--geometry", "ball", "--n", "806", "--m", "715", "--kappa", "0"],
        vec!["index", "--geometry", "ball", "--n", "806", "--m", "715", "--kappa", "-1/2"],
        vec!["index", "--geometry", "cap", "--n", "806", "--m", "715", "--kappa", "1", "--modes", "sphere"],
        vec!["search", "--k", "0", "--max", "10"],
        vec!["search", "--k", "4"],
        vec!["profile", "--n", "3"],
        vec!["boundary", "--geometry", "disk", "--n", "3", "--m", "3"],
        vec!["boundary", "--geometry", "cap", "--n", "1", "--m", "3"],
        vec!["frobnicate"],
    ];
    for args in usage {
        let out = sigmak(&args);
        assert_eq!(out.status.code(), Some(2), "{args:?}");
        assert!(!out.stderr.is_empty(), "{args:?}");
    }
    assert_eq!(sigmak(&["--help"]).status.code(), Some(0));
    assert_eq!(sigmak(&["verify", "--no-cache"]).status.code(), Some(0));
}

#[test]
fn json_output_is_deterministic() {
    for args in [
        vec!["verify", "--format", "json", "--no-cache"],
        vec!["search", "--k", "5", "--max", "200", "--format", "json", "--no-cache", "--jobs", "3"],
        vec!["boundary", "--geometry", "ball", "--n", "20", "--m", "9", "--kappa", "7/3", "--format", "json"],
        vec!["index", "--geometry", "cap", "--n", "30", "--m", "12", "--kappa", "1,3", "--format", "json"],
    ] {
        assert_eq!(sigmak(&args).stdout, sigmak(&args).stdout, "{args:?}");
    }
    let one = sigmak(&["search", "--k", "5", "--max", "200", "--format", "json", "--no-cache", "--jobs", "1"]);
    let many = sigmak(&["search", "--k", "5", "--max", "200", "--format", "json", "--no-cache", "--jobs", "4"]);
    assert_eq!(one.stdout, many.stdout);
}

#[test]
fn verify_report_roundtrips() {
    let v = json(&["verify", "--format", "json", "--no-cache"]);
    let report: sigmak_cli::verify::VerifyReport = serde_json::from_value(v["results"].clone()).unwrap();
    assert!(report.overall_pass);
    assert!(report.checks.len() >= 20);
    assert_eq!(serde_json::to_value(&report).unwrap(), v["results"]);
    let csv = stdout(&sigmak(&["verify", "--format", "csv", "--no-cache"]));
    assert!(csv.starts_with("name,expected,computed,pass\n"));
}
