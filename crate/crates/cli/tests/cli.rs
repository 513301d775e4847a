use std::fs;
use std::path::Path;
use std::process::{Command, Output};

fn hypgrowth(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hypgrowth"))
        .args(args)
        .env_remove("HYPGROWTH_CACHE")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

fn field<'a>(record: &'a str, key: &str) -> &'a str {
    record
        .lines()
        .find_map(|l| l.strip_prefix(key).and_then(|r| r.strip_prefix('=')))
        .unwrap_or_else(|| panic!("no {key} in\n{record}"))
}

#[test]
fn free_growth_ratio_is_three() {
    let o = hypgrowth(&["growth", "--spec", "free:2", "--radius", "10"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    let mut lines = out.lines();
    assert_eq!(lines.next(), Some("n,sphere,ball,ratio"));
    for line in lines.skip(2) {
        assert_eq!(line.rsplit(',').next(), Some("3.0"), "{line}");
    }
    let rec = stdout(&hypgrowth(&["growth", "--spec", "free:2", "--radius", "10", "--format", "record"]));
    let rate: f64 = field(&rec, "growth_rate").parse().unwrap();
    assert!((rate - 3f64.ln()).abs() < 1e-9);
}

#[test]
fn abelian_and_surface_growth() {
    let rec = stdout(&hypgrowth(&["growth", "--spec", "abelian:2", "--radius", "12", "--format", "record"]));
    let rate: f64 = field(&rec, "growth_rate").parse().unwrap();
    assert!(rate < 0.1, "abelian rate {rate}");
    let rec = stdout(&hypgrowth(&["growth", "--spec", "surface:2", "--radius", "6", "--format", "record"]));
    let ratio: f64 = field(&rec, "last_ratio").parse().unwrap();
    assert!((6.5..=7.5).contains(&ratio));
}

#[test]
fn constants_records() {
    let rec = stdout(&hypgrowth(&["constants", "--spec", "free:2", "--radius", "6", "--format", "record"]));
    assert_eq!(field(&rec, "delta"), "0");
    assert_eq!(field(&rec, "dead_end_step"), "1");
    assert_eq!(field(&rec, "eta_prime"), "0.0");

    let rec = stdout(&hypgrowth(&[
        "constants", "--spec", "free:2", "--radius", "6", "--format", "record", "--lambda", "1/2", "--epsilon",
        "2", "--m", "2", "--d", "2",
    ]));
    assert_eq!(field(&rec, "tau"), "16");
    assert_eq!(field(&rec, "D_source"), "user");

    let rec = stdout(&hypgrowth(&[
        "constants", "--spec", "free:2", "--radius", "6", "--format", "record", "--c0", "2", "--lambda", "1/2",
        "--epsilon", "4", "--m", "3",
    ]));
    assert_eq!(field(&rec, "mu"), "2");
    assert_eq!(field(&rec, "c0_source"), "user");
}

#[test]
fn theorem_report_exit_codes() {
    let o = hypgrowth(&["theorem-report", "--spec", "free:2", "--radius", "12", "--format", "record"]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    assert_eq!(field(&stdout(&o), "pass"), "true");

    let o = hypgrowth(&["theorem-report", "--spec", "abelian:2", "--radius", "4"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("boundary undefined for non-hyperbolic control"));

    // A negative slack makes the ordering check impossible to meet.
    let o = hypgrowth(&["theorem-report", "--spec", "free:2", "--radius", "8", "--slack=-1", "--format", "record"]);
    assert_eq!(o.status.code(), Some(4));
    assert_eq!(field(&stdout(&o), "pass"), "false");
}

#[test]
fn input_and_budget_errors() {
    assert_eq!(hypgrowth(&["growth", "--spec", "bogus:2"]).status.code(), Some(2));
    assert_eq!(hypgrowth(&["growth", "--spec", "surface:1"]).status.code(), Some(2));
    assert_eq!(hypgrowth(&["growth", "--radius", "3"]).status.code(), Some(2));
    let o = hypgrowth(&["growth", "--spec", "free:2", "--radius", "10", "--max-elements", "1000"]);
    assert_eq!(o.status.code(), Some(3));
    assert!(stderr(&o).contains("completing radius 5"));
    let o = hypgrowth(&["boundary-entropy", "--spec", "free:2", "--radius", "6", "--depth", "9"]);
    assert_eq!(o.status.code(), Some(3));
}

#[test]
fn compare_gensets_table() {
    let o = hypgrowth(&[
        "compare-gensets", "--spec", "free:2", "--radius", "5", "--genset", "a,A,b,B", "--genset", "a,A,b,B,ab,BA",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    let rows: Vec<&str> = out.lines().skip(1).collect();
    assert_eq!(rows.len(), 3);
    assert!(rows[2].starts_with("\"min over supplied sets\""));
    let rate = |row: &str| -> f64 { row.rsplit(',').nth(2).unwrap().parse().unwrap() };
    assert!(rate(rows[2]) <= rate(rows[0]) && rate(rows[2]) <= rate(rows[1]));

    let single = stdout(&hypgrowth(&["compare-gensets", "--spec", "free:2", "--radius", "5", "--format", "record"]));
    let growth = stdout(&hypgrowth(&["growth", "--spec", "free:2", "--radius", "5", "--format", "record"]));
    assert_eq!(field(&single, "set0_growth_rate"), field(&growth, "growth_rate"));

    let out = stdout(&hypgrowth(&["compare-gensets", "--spec", "free:2", "--radius", "5", "--genset", "a,A"]));
    assert!(out.contains("does not generate"));

    let o = hypgrowth(&["compare-gensets", "--spec", "free:2", "--genset", "a,b,B"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("not symmetric"));
}

fn cache_file(dir: &Path) -> std::path::PathBuf {
    dir.join("free-2.ball")
}

#[test]
fn cache_store_load_extend() {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path().to_str().unwrap();
    let summary = |r: &str| stdout(&hypgrowth(&["cache", "--spec", "free:2", "--radius", r, "--cache-dir", d]));
    assert_eq!(field(&summary("6"), "outcome"), "enumerated");
    assert_eq!(field(&summary("4"), "outcome"), "loaded radius 6");
    let ext = summary("8");
    assert_eq!(field(&ext, "outcome"), "extended from radius 6");
    assert_eq!(field(&ext, "sphere_counts"), "1 4 12 36 108 324 972 2916 8748");

    let fresh = tempfile::tempdir().unwrap();
    hypgrowth(&["cache", "--spec", "free:2", "--radius", "8", "--cache-dir", fresh.path().to_str().unwrap()]);
    assert_eq!(fs::read(cache_file(dir.path())).unwrap(), fs::read(cache_file(fresh.path())).unwrap());

    let text = fs::read_to_string(cache_file(dir.path())).unwrap();
    fs::write(cache_file(dir.path()), text.replacen("hypgrowth-ball 1", "hypgrowth-ball 99", 1)).unwrap();
    let o = hypgrowth(&["growth", "--spec", "free:2", "--radius", "4", "--cache-dir", d]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("format version 99"));
}

#[test]
fn cache_dir_from_environment() {
    let dir = tempfile::tempdir().unwrap();
    let o = Command::new(env!("CARGO_BIN_EXE_hypgrowth"))
        .args(["growth", "--spec", "free:2", "--radius", "5"])
        .env("HYPGROWTH_CACHE", dir.path())
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(0));
    assert!(cache_file(dir.path()).exists());
}

#[test]
fn boundary_csv_is_reproducible() {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path().to_str().unwrap();
    let out_a = dir.path().join("a.csv");
    let out_b = dir.path().join("b.csv");
    for out in [&out_a, &out_b] {
        let o = hypgrowth(&[
            "boundary-entropy", "--spec", "surface:2", "--radius", "5", "--cache-dir", d, "--out",
            out.to_str().unwrap(), "--theta-grid", "0.7,0.4", "--window", "0..2", "--seed", "3",
        ]);
        assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    }
    let a = fs::read(&out_a).unwrap();
    assert_eq!(a, fs::read(&out_b).unwrap());
    let text = String::from_utf8(a).unwrap();
    assert!(text.starts_with("n,theta,certified_separated,ambiguous,spanning,slope\n"));
    assert_eq!(text.lines().count(), 1 + 2 * 3);
}

#[test]
fn relgrowth_table() {
    let o = hypgrowth(&[
        "relgrowth", "--spec", "free:2", "--radius", "8", "--lambda", "1/2", "--epsilon", "2", "--m", "2",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.contains("1/2,2,2,3,"));
    assert!(out.contains("1 12 108 972 8748"));
}
