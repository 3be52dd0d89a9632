use std::collections::BTreeSet;
use std::fs;
use std::process::Command;

use realforms_cli::cache::{cayley_hash, AutCache, CacheEntry, CACHE_VERSION};
use realforms_cli::report::{Format, RunReport};
use realforms_cli::run_command;
use realforms_core::builders::build_quaternion;
use realforms_core::automorphism_group;
use serde_json::Value;

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_realforms"))
}

fn json_of(args: &[&str]) -> Value {
    let run = run_command(args.iter().copied()).unwrap();
    serde_json::to_value(&run.report).unwrap()
}

fn schema() -> jsonschema::Validator {
    let text = include_str!("../schema/run-report.schema.json");
    jsonschema::validator_for(&serde_json::from_str(text).unwrap()).unwrap()
}

#[test]
fn m_of_q8() {
    let v = json_of(&["m", "Q8", "--format", "json"]);
    assert_eq!(v["results"]["m_value"], 3);
    assert_eq!(v["results"]["trivial_count"], 2);
}

#[test]
fn curve_bound_and_trivial_h1() {
    assert_eq!(json_of(&["curve-bound", "7"])["results"]["bound"], 2);
    let v = json_of(&["h1", "C1"]);
    let actions = v["results"]["actions"].as_array().unwrap();
    assert_eq!(actions.len(), 1);
    assert_eq!(actions[0]["h1_size"], 1);
    assert_eq!(actions[0]["mass"], "1");
}

#[test]
fn sylow_reduce_and_mass() {
    let v = json_of(&["sylow-reduce", "A5", "--involution", "2"]);
    assert_eq!(v["results"]["sylow_order"], 4);
    assert_eq!(v["results"]["comparison"]["surjective"], true);
    let v = json_of(&["mass", "C4", "--involution", "1"]);
    assert_eq!(v["results"]["ratio"], "1");
    assert_eq!(v["results"]["equality_case"], true);
}

#[test]
fn exit_codes() {
    let out = bin().args(["info", "D(7"]).output().unwrap();
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("byte 1"));
    assert_eq!(bin().args(["bogus"]).output().unwrap().status.code(), Some(2));
    assert_eq!(bin().args(["curve-bound", "3"]).output().unwrap().status.code(), Some(2));
    assert_eq!(bin().args(["verify-paper", "--case", "nope"]).output().unwrap().status.code(), Some(2));
    assert_eq!(bin().args(["mass", "S3", "--involution", "9"]).output().unwrap().status.code(), Some(2));
    let ok = bin().args(["verify-paper", "--case", "q8"]).output().unwrap();
    assert_eq!(ok.status.code(), Some(0));
    assert_eq!(bin().arg("--help").output().unwrap().status.code(), Some(0));
}

#[test]
fn verify_q8_values() {
    let v = json_of(&["verify-paper", "--case", "q8"]);
    let checks = v["results"]["checks"].as_array().unwrap();
    let h1: Vec<&str> = checks
        .iter()
        .filter(|c| c["check"].as_str().unwrap().starts_with("#H1"))
        .map(|c| c["computed"].as_str().unwrap())
        .collect();
    assert_eq!(h1, ["2", "3", "1"]);
    assert!(checks.iter().all(|c| c["pass"] == true));
    assert_eq!(v["results"]["failed"], 0);
}

#[test]
fn verify_dihedral_table() {
    let v = json_of(&["verify-paper", "--case", "dihedral"]);
    let checks = v["results"]["checks"].as_array().unwrap();
    assert_eq!(checks.len(), 28);
    assert!(checks.iter().all(|c| c["pass"] == true));
}

#[test]
fn verify_output_is_ordered_by_case() {
    let v = json_of(&["verify-paper"]);
    let cases: Vec<String> = v["results"]["checks"]
        .as_array()
        .unwrap()
        .iter()
        .map(|c| c["case"].as_str().unwrap().to_string())
        .collect();
    let mut sorted = cases.clone();
    sorted.sort();
    assert_eq!(cases, sorted);
    assert_eq!(cases.iter().collect::<BTreeSet<_>>().len(), 14);
    assert_eq!(v["results"]["failed"], 0);
    assert!(schema().is_valid(&v));
}

#[test]
fn outputs_validate_against_schema() {
    let validator = schema();
    for args in [
        vec!["info", "Hess216"],
        vec!["aut", "Q8"],
        vec!["h1", "S3", "--involution", "all"],
        vec!["h1", "D8", "--involution", "1"],
        vec!["m", "C3^2:C4@gl23_rot"],
        vec!["mass", "Q8", "--involution", "1"],
        vec!["sylow-reduce", "PSL(2,7)", "--involution", "1"],
        vec!["curve-bound", "12"],
        vec!["verify-paper", "--case", "xd"],
        vec!["explore"],
    ] {
        let v = json_of(&args);
        let errors: Vec<String> = validator.iter_errors(&v).map(|e| e.to_string()).collect();
        assert!(errors.is_empty(), "{args:?}: {errors:?}");
    }
    let mut broken = json_of(&["curve-bound", "5"]);
    broken["results"]["bound"] = 3.into();
    assert!(!validator.is_valid(&broken));
}

fn digit_runs(text: &str) -> BTreeSet<String> {
    text.split(|c: char| !c.is_ascii_digit())
        .filter(|s| !s.is_empty())
        .map(str::to_string)
        .collect()
}

#[test]
fn table_and_json_carry_the_same_numbers() {
    for args in [vec!["m", "Q16"], vec!["sylow-reduce", "S4", "--involution", "0"], vec!["h1", "D12"]] {
        let run = run_command(args.iter().copied()).unwrap();
        let json = run.report.render(Format::Json);
        let table = run.report.to_table();
        assert_eq!(digit_runs(&json), digit_runs(&table), "{args:?}");
    }
}

#[test]
fn report_round_trips() {
    let run = run_command(["sylow-reduce", "Fermat 4", "--involution", "1"]).unwrap();
    let text = run.report.render(Format::Json);
    let back: RunReport = serde_json::from_str(&text).unwrap();
    assert_eq!(back, run.report);
}

fn strip_timing(mut v: Value) -> Value {
    let obj = v.as_object_mut().unwrap();
    obj.remove("timing");
    obj.remove("cache_hits");
    v
}

#[test]
fn cached_and_uncached_runs_agree() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().to_str().unwrap();
    let plain = json_of(&["m", "A5"]);
    let first = json_of(&["m", "A5", "--cache-dir", path]);
    let second = json_of(&["m", "A5", "--cache-dir", path]);
    assert_eq!(first["cache_hits"], 0);
    assert_eq!(second["cache_hits"], 1);
    let seedless = json_of(&["m", "A5", "--cache-dir", path, "--seedless"]);
    assert_eq!(seedless["cache_hits"], 0);
    let results = |v: &Value| serde_json::to_string(&strip_timing(v.clone())["results"]).unwrap();
    assert_eq!(results(&plain), results(&first));
    assert_eq!(results(&first), results(&second));
    assert_eq!(results(&second), results(&seedless));
}

#[test]
fn cache_round_trip_and_rejections() {
    let dir = tempfile::tempdir().unwrap();
    let cache = AutCache::new(dir.path());
    let q8 = build_quaternion(3).unwrap();
    let a = automorphism_group(&q8).unwrap();
    assert!(cache.load(&q8).is_none());
    cache.store(&q8, &a).unwrap();
    let loaded = cache.load(&q8).unwrap();
    assert_eq!(loaded.maps(), a.maps());
    assert_eq!(loaded.maps().len(), 24);

    let path = cache.path_for(&cayley_hash(&q8));
    let entry: CacheEntry = serde_json::from_str(&fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(entry.version, CACHE_VERSION);

    let mut stale = entry.clone();
    stale.version = CACHE_VERSION + 1;
    fs::write(&path, serde_json::to_string(&stale).unwrap()).unwrap();
    assert!(cache.load(&q8).is_none());

    let mut wrong = entry.clone();
    wrong.cayley_hash = "00".repeat(32);
    fs::write(&path, serde_json::to_string(&wrong).unwrap()).unwrap();
    assert!(cache.load(&q8).is_none());

    let mut tampered = entry.clone();
    tampered.automorphisms[1].swap(1, 2);
    fs::write(&path, serde_json::to_string(&tampered).unwrap()).unwrap();
    assert!(cache.load(&q8).is_none());

    fs::write(&path, "{not json").unwrap();
    assert!(cache.load(&q8).is_none());
    let (recomputed, hit) = cache.get_or_compute(&q8).unwrap();
    assert!(!hit);
    assert_eq!(recomputed.maps(), a.maps());
    assert!(cache.load(&q8).is_some());
}

#[test]
fn corrupted_cache_falls_back_through_the_binary() {
    let dir = tempfile::tempdir().unwrap();
    let q8 = build_quaternion(3).unwrap();
    let path = AutCache::new(dir.path()).path_for(&cayley_hash(&q8));
    fs::write(&path, "garbage").unwrap();
    let out = bin()
        .args(["m", "Q8", "--format", "json", "--cache-dir", dir.path().to_str().unwrap()])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&out.stderr).contains("corrupted"));
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["results"]["m_value"], 3);
}
