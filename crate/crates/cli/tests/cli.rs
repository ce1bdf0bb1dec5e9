use std::fs;
use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;

fn tritile(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_tritile")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn p(path: &Path) -> &str {
    path.to_str().unwrap()
}

#[test]
fn bounds_prints_table() {
    let o = tritile(&["bounds", "--n", "100", "--delta", "55"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.contains("thm3_lower=10\n"));
    assert!(out.contains("remarkA_upper=10\n"));
    assert!(out.contains("bft_weak=0\n"));

    let o = tritile(&["bounds", "--n", "100", "--delta", "90", "--gamma", "1/100", "--json"]);
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["thm3_lower"], "29");
    assert_eq!(v["bft_weak"], "26");
}

#[test]
fn invalid_input_exits_one() {
    assert_eq!(tritile(&["bounds", "--n", "10", "--delta", "10"]).status.code(), Some(1));
    assert_eq!(tritile(&["bounds", "--n", "10"]).status.code(), Some(1));
    assert_eq!(tritile(&["frobnicate"]).status.code(), Some(1));
    assert_eq!(tritile(&["--help"]).status.code(), Some(0));
    let o = tritile(&["generate", "--n", "10", "--out", "/dev/null"]);
    assert_eq!(o.status.code(), Some(1), "seed is mandatory");
    assert!(!o.stderr.is_empty());
}

#[test]
fn extremal_generate_then_solve() {
    let dir = tempfile::tempdir().unwrap();
    let inst = dir.path().join("e26.txt");
    let o = tritile(&["generate", "--extremal", "--n", "26", "--delta", "13", "--seed", "1", "--out", p(&inst)]);
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    assert!(dir.path().join("e26.txt.meta").exists());

    let o = tritile(&["solve", "--instance", p(&inst), "--exact"]);
    assert_eq!(o.status.code(), Some(0));
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert!(v["size"].as_u64().unwrap() <= 4);
    assert_eq!(v["exact"], true);
    assert_eq!(v["certificate"]["best"], 4);
    assert_eq!(v["certificate"]["respected"], true);
}

#[test]
fn verify_rejects_overlapping_triangles() {
    let dir = tempfile::tempdir().unwrap();
    let inst = dir.path().join("k6.txt");
    let mut text = String::from("6 15\n");
    for u in 0..6 {
        for v in u + 1..6 {
            text.push_str(&format!("{u} {v} r\n"));
        }
    }
    fs::write(&inst, text).unwrap();
    let good = dir.path().join("good.til");
    fs::write(&good, "0 1 2 r\n3 4 5 r\n").unwrap();
    let bad = dir.path().join("bad.til");
    fs::write(&bad, "0 1 2 r\n2 3 4 r\n").unwrap();
    assert_eq!(tritile(&["verify", "--instance", p(&inst), "--tiling", p(&good)]).status.code(), Some(0));
    assert_eq!(tritile(&["verify", "--instance", p(&inst), "--tiling", p(&bad)]).status.code(), Some(1));
    let wrong_color = dir.path().join("blue.til");
    fs::write(&wrong_color, "0 1 2 b\n").unwrap();
    assert_eq!(tritile(&["verify", "--instance", p(&inst), "--tiling", p(&wrong_color)]).status.code(), Some(1));
}

fn strip_runtime(text: &str) -> Value {
    let mut v: Value = serde_json::from_str(text).unwrap();
    v.as_object_mut().unwrap().remove("runtime");
    v
}

#[test]
fn reports_are_deterministic_across_threads() {
    let dir = tempfile::tempdir().unwrap();
    let inst = dir.path().join("r.txt");
    let o = tritile(&["generate", "--n", "14", "--delta", "9", "--seed", "7", "--out", p(&inst)]);
    assert_eq!(o.status.code(), Some(0));
    let again = dir.path().join("r2.txt");
    tritile(&["generate", "--n", "14", "--delta", "9", "--seed", "7", "--out", p(&again)]);
    assert_eq!(fs::read(&inst).unwrap(), fs::read(&again).unwrap());

    for mode in ["weak", "strong"] {
        let one = tritile(&["solve", "--instance", p(&inst), "--mode", mode]);
        let four = tritile(&["--threads", "4", "solve", "--instance", p(&inst), "--mode", mode]);
        assert_eq!(strip_runtime(&stdout(&one)), strip_runtime(&stdout(&four)));
        let bare = tritile(&["solve", "--instance", p(&inst), "--mode", mode, "--no-runtime"]);
        let bare2 = tritile(&["solve", "--instance", p(&inst), "--mode", mode, "--no-runtime"]);
        assert_eq!(bare.stdout, bare2.stdout);
    }

    let h1 = tritile(&["solve", "--instance", p(&inst), "--heuristic", "--seed", "3", "--no-runtime"]);
    let h2 = tritile(&["solve", "--instance", p(&inst), "--heuristic", "--seed", "3", "--no-runtime"]);
    assert_eq!(h1.status.code(), Some(0));
    assert_eq!(h1.stdout, h2.stdout);
    assert_eq!(tritile(&["solve", "--instance", p(&inst), "--heuristic"]).status.code(), Some(1));
}

#[test]
fn solved_tiling_verifies() {
    let dir = tempfile::tempdir().unwrap();
    let inst = dir.path().join("r.txt");
    let til = dir.path().join("r.til");
    tritile(&["generate", "--n", "12", "--seed", "2", "--p-edge", "0.8", "--out", p(&inst)]);
    let o = tritile(&["solve", "--instance", p(&inst), "--tiling-out", p(&til)]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(tritile(&["verify", "--instance", p(&inst), "--tiling", p(&til)]).status.code(), Some(0));
}

#[test]
fn theory_subcommands() {
    let o = tritile(&["theory", "chromatic", "--graph", "bowtie"]);
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["theory"]["chromatic"]["chi_star"], "5/2");
    assert_eq!(v["theory"]["chromatic"]["hcf_c"], "inf");

    let o = tritile(&["theory", "admissible", "--k", "60", "--delta", "33"]);
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["theory"]["C"], "25/2");
    assert_eq!(tritile(&["theory", "admissible", "--k", "20", "--delta", "10"]).status.code(), Some(1));

    let o = tritile(&["theory", "reduce", "--k", "20", "--delta", "12", "--seed", "1", "--tile"]);
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    let r = &v["theory"]["reduction"];
    assert_eq!((r["w"].as_u64(), r["order"].as_u64()), (Some(10), Some(30)));
    assert_eq!(r["tiling"]["perfect"], true);
    let (s, t) = (r["counts"]["s"].as_u64().unwrap(), r["counts"]["t"].as_u64().unwrap());
    assert_eq!(2 * s + t, 10);

    let o = tritile(&["theory", "five-part", "--m", "8", "--seed", "1"]);
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert!(v["theory"]["five_part"]["size"].as_u64().unwrap() <= 8);
}

#[test]
fn pair_diagnostics() {
    let dir = tempfile::tempdir().unwrap();
    let inst = dir.path().join("pair.txt");
    // two disjoint K_{3,3}'s between halves: A = {0..5}, B = {6..11}
    let mut edges = Vec::new();
    for i in 0..3 {
        for j in 0..3 {
            edges.push((i, 6 + j));
            edges.push((3 + i, 9 + j));
        }
    }
    let mut text = format!("12 {}\n", edges.len());
    for (u, v) in edges {
        text.push_str(&format!("{u} {v}\n"));
    }
    fs::write(&inst, text).unwrap();
    let o = tritile(&["theory", "pair", "--instance", p(&inst), "--split", "6", "--eps", "2/5", "--seed", "1"]);
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["regularity"]["density"], "1/2");
    assert_eq!(v["regularity"]["witness"]["deviation"], "1/2");
    assert!(v["regularity"]["dominating"].is_null());
    let o = tritile(&["theory", "pair", "--instance", p(&inst), "--split", "6", "--eps", "1/10", "--seed", "1"]);
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["regularity"]["dominating"]["t_target"], 7);
}

#[test]
fn experiment_appends_rows() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = dir.path().join("exp.toml");
    let csv = dir.path().join("out.csv");
    fs::write(
        &cfg,
        format!(
            "modes = [\"weak\", \"strong\"]\ncsv = {:?}\n\n[grid]\nn = [10, 12]\ndelta = [7]\nseeds = [1, 2]\n",
            p(&csv)
        ),
    )
    .unwrap();
    assert_eq!(tritile(&["experiment", "--config", p(&cfg)]).status.code(), Some(0));
    let first = fs::read_to_string(&csv).unwrap();
    let lines: Vec<&str> = first.lines().collect();
    assert_eq!(lines.len(), 1 + 2 * 2 * 2);
    assert!(lines[0].starts_with("n,delta,seed,size,exact,thm3_lower,remarkA_upper,bft_weak"));

    assert_eq!(tritile(&["--threads", "3", "experiment", "--config", p(&cfg)]).status.code(), Some(0));
    let both = fs::read_to_string(&csv).unwrap();
    let rows: Vec<&str> = both.lines().collect();
    assert_eq!(rows.len(), 1 + 16);
    let strip = |l: &str| l.rsplit_once(',').unwrap().0.to_string();
    for i in 1..9 {
        assert_eq!(strip(rows[i]), strip(rows[i + 8]));
    }

    let bad = dir.path().join("bad.toml");
    fs::write(&bad, "csv = \"x.csv\"\n[grid]\nn = [5]\ndelta = [5]\nseeds = [1]\n").unwrap();
    assert_eq!(tritile(&["experiment", "--config", p(&bad)]).status.code(), Some(1));
    fs::write(&bad, "[grid]\nn = [5]\n").unwrap();
    assert_eq!(tritile(&["experiment", "--config", p(&bad)]).status.code(), Some(1));
}
