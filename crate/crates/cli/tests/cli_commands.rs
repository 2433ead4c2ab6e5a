use std::collections::HashMap;
use std::process::Command;

use maxpair_cli::{
    cmd_classify, cmd_parse, cmd_scan, Catalog, CatalogRow, Family, ScanFormat, CATALOG_SCHEMA,
    VERDICT_SCHEMA,
};
use serde_json::Value;

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_maxpair"))
}

fn validator(schema: &str) -> jsonschema::JSONSchema {
    let schema: Value = serde_json::from_str(schema).unwrap();
    jsonschema::JSONSchema::compile(&schema).unwrap()
}

fn multiset(rows: &[CatalogRow]) -> HashMap<&CatalogRow, usize> {
    let mut m = HashMap::new();
    for r in rows {
        *m.entry(r).or_insert(0) += 1;
    }
    m
}

#[test]
fn verdicts_match_schema() {
    let v = validator(VERDICT_SCHEMA);
    for spec in [
        "M23", "B", "Th", "PSL(2,23)", "PSL(2,27)", "PSL(5,2)", "PSL(13,2)", "PSU(3,11)",
        "PSU(7,2)", "PSU(19,2)", "PSU(5,2)", "PSp(8,2)", "A13", "E8(2)", "PSL(2,7)",
    ] {
        let out: Value = serde_json::from_str(&cmd_classify(spec).unwrap()).unwrap();
        assert!(v.is_valid(&out), "{spec}");
    }
}

#[test]
fn classify_examples() {
    let pairs = |s: &str| -> usize {
        let v: Value = serde_json::from_str(&cmd_classify(s).unwrap()).unwrap();
        v["pairs"].as_array().unwrap().len()
    };
    assert_eq!(pairs("M23"), 4);
    assert_eq!(pairs("PSL(2,23)"), 2);
    assert_eq!(pairs("PSp(8,2)"), 0);
    let v: Value = serde_json::from_str(&cmd_classify("PSL(2,7)").unwrap()).unwrap();
    assert!(v["notes"].as_array().unwrap().iter().any(|n| n.as_str().unwrap().contains("PSL(3,2)")));
}

#[test]
fn scan_json_and_csv_agree() {
    let s = validator(CATALOG_SCHEMA);
    for family in [Family::Psl2, Family::Psu, Family::Sporadic] {
        let json = cmd_scan(family, 64, 11, ScanFormat::Json).unwrap();
        let csv = cmd_scan(family, 64, 11, ScanFormat::Csv).unwrap();
        let value: Value = serde_json::from_str(&json).unwrap();
        assert!(s.is_valid(&value), "{family:?}");
        let catalog: Catalog = serde_json::from_value(value).unwrap();
        let from_csv = Catalog::rows_from_csv(&csv).unwrap();
        assert_eq!(multiset(&catalog.rows), multiset(&from_csv));
        assert_eq!(catalog.summary.rows, catalog.rows.len());
        assert_eq!(json, cmd_scan(family, 64, 11, ScanFormat::Json).unwrap());
    }
}

#[test]
fn scan_examples() {
    let cat: Catalog =
        serde_json::from_str(&cmd_scan(Family::Psl2, 120, 3, ScanFormat::Json).unwrap()).unwrap();
    let qs: Vec<u64> = cat
        .rows
        .iter()
        .filter(|r| r.clause == "(iii)(1)")
        .map(|r| r.q.unwrap())
        .collect();
    assert_eq!(qs, vec![11, 19, 23, 27, 31, 43, 47, 59, 67, 71, 79, 83, 103, 107]);

    let cat: Catalog =
        serde_json::from_str(&cmd_scan(Family::Psu, 11, 7, ScanFormat::Json).unwrap()).unwrap();
    assert!(cat
        .rows
        .iter()
        .any(|r| r.group == "PSU(3,11)" && r.clause == "(iii)(7)" && r.m_order == "53240"));
    for clause in ["(iii)(6b)", "(iii)(8b)"] {
        assert!(cat.rows.iter().any(|r| r.group == "PSU(7,2)" && r.clause == clause));
    }

    let cat: Catalog =
        serde_json::from_str(&cmd_scan(Family::Sporadic, 200, 23, ScanFormat::Json).unwrap())
            .unwrap();
    assert_eq!(cat.rows.len(), 31);
}

#[test]
fn parse_structure_orders() {
    let v: Value = serde_json::from_str(&cmd_parse("47:23").unwrap()).unwrap();
    assert_eq!(v["order"]["decimal"], "1081");
    let v: Value = serde_json::from_str(&cmd_parse("HN:2").unwrap()).unwrap();
    assert_eq!(v["order"]["decimal"], (2u64 * 273030912000000).to_string());
}

#[test]
fn exit_codes() {
    let code = |args: &[&str]| bin().args(args).output().unwrap().status.code();
    assert_eq!(code(&["classify", "PSU(7,2)"]), Some(0));
    assert_eq!(code(&["classify", "PSL(2,x)"]), Some(2));
    assert_eq!(code(&["classify", "Monster"]), Some(2));
    assert_eq!(code(&["classify", "PSL(2,3)"]), Some(3));
    assert_eq!(code(&["classify", "PSL(2,6)"]), Some(3));
    assert_eq!(code(&["parse-structure", "2^(3"]), Some(2));
    assert_eq!(code(&["oracle", "psl2", "9"]), Some(3));
    assert_eq!(code(&["oracle", "psl2", "11"]), Some(0));
}

#[test]
fn repeated_runs_are_identical() {
    let run = || bin().args(["classify", "PSU(19,2)"]).output().unwrap().stdout;
    assert_eq!(run(), run());
}

#[test]
fn scan_out_writes_sidecar_and_cache() {
    let dir = std::env::temp_dir().join(format!("maxpair-cli-test-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let out = dir.join("psu.csv");
    let cache = dir.join("cache");
    let status = bin()
        .args(["scan", "--family", "psu", "--q-max", "16", "--n-max", "7", "--format", "csv", "--out"])
        .arg(&out)
        .env("MAXPAIR_CACHE_DIR", &cache)
        .status()
        .unwrap();
    assert!(status.success());
    let body = std::fs::read_to_string(&out).unwrap();
    assert!(body.starts_with("group,family,n,q,clause"));
    let meta: Value =
        serde_json::from_str(&std::fs::read_to_string(dir.join("psu.csv.meta.json")).unwrap())
            .unwrap();
    assert_eq!(meta["tool"], "maxpair");
    assert!(meta["generated_unix"].as_u64().unwrap() > 0);
    let cached = std::fs::read_to_string(cache.join("cyclotomic.jsonl")).unwrap();
    assert!(cached.lines().count() > 10);
    maxpair_core::arith::decode_cache(&cached).unwrap();

    let again = bin()
        .args(["scan", "--family", "psu", "--q-max", "16", "--n-max", "7", "--format", "csv"])
        .env("MAXPAIR_CACHE_DIR", &cache)
        .output()
        .unwrap();
    assert_eq!(String::from_utf8(again.stdout).unwrap(), body);
    std::fs::remove_dir_all(&dir).unwrap();
}
