use std::path::Path;
use std::process::{Command, Output};

use lscoinv_core::verify::{Golden, Report};
use lscoinv_core::{GradedMatrix, LsResult, RatFunc};

fn lscoinv(args: &[&str], cache: Option<&Path>) -> Output {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_lscoinv"));
    cmd.args(args).env_remove("LSCOINV_CACHE");
    if let Some(dir) = cache {
        cmd.env("LSCOINV_CACHE", dir);
    }
    cmd.output().expect("binary runs")
}

fn ok(args: &[&str]) -> String {
    let out = lscoinv(args, None);
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).unwrap()
}

#[derive(serde::Deserialize)]
struct FakeDegrees {
    #[serde(rename = "P")]
    p: GradedMatrix,
    fake_degrees: Vec<lscoinv_core::LaurentPoly>,
}

#[test]
fn fake_degrees_golden_a3() {
    let v: FakeDegrees = serde_json::from_str(&ok(&["fake-degrees", "--family", "A", "--rank", "3"])).unwrap();
    assert_eq!(v.p, Golden::a3().p);
    let md = ok(&["fake-degrees", "--family", "A", "--rank", "3", "--out", "md"]);
    assert!(md.contains("| (2,1) | 1*t^2 + 1*t^4 | 1 + 1*t^2 + 1*t^4 + 1*t^6 | 1*t^2 + 1*t^4 |"), "{md}");
}

#[test]
fn fake_degrees_a1_and_b2() {
    let a1: FakeDegrees = serde_json::from_str(&ok(&["fake-degrees", "--family", "A", "--rank", "1"])).unwrap();
    assert_eq!(a1.p.len(), 1);
    assert!(a1.p.get(0, 0).is_one());
    assert_eq!(a1.fake_degrees.len(), 1);
    let b2: FakeDegrees = serde_json::from_str(&ok(&["fake-degrees", "--family", "B", "--rank", "2", "--out", "json"])).unwrap();
    assert_eq!(b2.p.len(), 5);
    assert!(b2.p.is_symmetric());
}

#[test]
fn kostka_golden_a3_and_small_cases() {
    let res: LsResult = serde_json::from_str(&ok(&["kostka", "--family", "A", "--rank", "3"])).unwrap();
    let g = Golden::a3();
    assert_eq!(res.k, g.k);
    assert_eq!(res.d, g.d);
    let b1: LsResult = serde_json::from_str(&ok(&["kostka", "--family", "B", "--rank", "1"])).unwrap();
    assert_eq!(b1.k.get(1, 0), &"t^2".parse::<RatFunc>().unwrap());
    assert_eq!(b1.d[1], "(1)/(1 - t^4)".parse::<RatFunc>().unwrap());
    let a2: LsResult = serde_json::from_str(&ok(&["kostka", "--family", "A", "--rank", "2"])).unwrap();
    assert_eq!(a2.labels.len(), 2);
}

#[test]
fn kostka_csv_is_canonical() {
    let csv = ok(&["kostka", "--family", "A", "--rank", "3", "--out", "csv"]);
    assert_eq!(csv.lines().nth(2), Some("\"(2,1)\",0,1*t^1,1*t^1 + 1*t^2"));
}

#[test]
fn verify_suites() {
    for args in [
        vec!["verify", "golden-a3"],
        vec!["verify", "oracle-a", "--rank", "4"],
        vec!["verify", "gates-b", "--rank", "3"],
    ] {
        let reports: Vec<Report> = serde_json::from_str(&ok(&args)).unwrap();
        assert_eq!(reports.len(), 1);
        assert!(reports[0].passed());
    }
}

#[test]
fn usage_errors_exit_nonzero() {
    let out = lscoinv(&["kostka", "--family", "E", "--rank", "3"], None);
    assert!(!out.status.success());
    let out = lscoinv(&["kostka", "--family", "A"], None);
    assert!(!out.status.success());
    assert!(String::from_utf8_lossy(&out.stderr).contains("--rank"));
    let out = lscoinv(&["kostka", "--family", "B", "--rank", "0"], None);
    assert!(!out.status.success());
    let out = lscoinv(&["verify", "nonsense"], None);
    assert!(!out.status.success());
}

#[test]
fn cold_and_warm_cache_give_identical_bytes() {
    let dir = tempfile::tempdir().unwrap();
    let args = ["kostka", "--family", "B", "--rank", "3"];
    let cold = lscoinv(&args, Some(dir.path()));
    assert!(cold.status.success());
    assert!(dir.path().join("chartable-B3-v1.json").exists());
    assert!(dir.path().join("poset-B3-v1.json").exists());
    let warm = lscoinv(&args, Some(dir.path()));
    assert_eq!(cold.stdout, warm.stdout);
    assert!(warm.stderr.is_empty(), "{}", String::from_utf8_lossy(&warm.stderr));
    let uncached = lscoinv(&["kostka", "--family", "B", "--rank", "3", "--no-cache"], Some(dir.path()));
    assert_eq!(cold.stdout, uncached.stdout);
}

#[test]
fn truncated_cache_entry_is_recomputed_with_warning() {
    let dir = tempfile::tempdir().unwrap();
    let args = ["kostka", "--family", "A", "--rank", "4"];
    let cold = lscoinv(&args, Some(dir.path()));
    let entry = dir.path().join("chartable-A4-v1.json");
    let text = std::fs::read(&entry).unwrap();
    std::fs::write(&entry, &text[..text.len() / 2]).unwrap();
    let again = lscoinv(&args, Some(dir.path()));
    assert!(again.status.success());
    assert_eq!(cold.stdout, again.stdout);
    assert!(String::from_utf8_lossy(&again.stderr).contains("warning: discarding corrupt cache entry"));
    // repaired on disk
    assert_eq!(std::fs::read(&entry).unwrap(), text);
}

#[test]
fn entries_from_another_schema_version_are_ignored() {
    let dir = tempfile::tempdir().unwrap();
    std::fs::write(dir.path().join("chartable-A3-v0.json"), "garbage").unwrap();
    let out = lscoinv(&["kostka", "--family", "A", "--rank", "3"], Some(dir.path()));
    assert!(out.status.success());
    assert!(out.stderr.is_empty());
    assert!(dir.path().join("chartable-A3-v1.json").exists());
}

#[test]
fn unusable_cache_dir_warns_and_proceeds() {
    let dir = tempfile::tempdir().unwrap();
    let file = dir.path().join("plain-file");
    std::fs::write(&file, "").unwrap();
    let out = lscoinv(&["kostka", "--family", "A", "--rank", "3", "--cache-dir", file.to_str().unwrap()], None);
    assert!(out.status.success());
    assert!(String::from_utf8_lossy(&out.stderr).contains("warning"));
    let plain = ok(&["kostka", "--family", "A", "--rank", "3"]);
    assert_eq!(String::from_utf8(out.stdout).unwrap(), plain);
}

#[test]
fn char_table_and_poset_commands() {
    let t: lscoinv_core::CharTable = serde_json::from_str(&ok(&["char-table", "--family", "B", "--rank", "2"])).unwrap();
    assert_eq!(t.labels.len(), 5);
    let p: lscoinv_core::OrbitPoset = serde_json::from_str(&ok(&["poset", "--family", "B", "--rank", "2"])).unwrap();
    assert_eq!(p.d, vec![0, 2, 4, 4, 8]);
    let md = ok(&["poset", "--family", "A", "--rank", "3", "--out", "md"]);
    assert!(md.contains("| (1,1,1) | 6 | 1 | 1 | 1 |"), "{md}");
}
