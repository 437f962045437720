use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use serde_json::{json, Value};
use tempfile::TempDir;

fn lowrank(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_lowrank")).args(args).output().expect("run lowrank")
}

fn stdout_json(o: &Output) -> Value {
    serde_json::from_slice(&o.stdout).unwrap_or_else(|e| panic!("{e}: {}", String::from_utf8_lossy(&o.stdout)))
}

fn write(dir: &TempDir, name: &str, v: &Value) -> PathBuf {
    let p = dir.path().join(name);
    std::fs::write(&p, serde_json::to_string(v).unwrap()).unwrap();
    p
}

fn corpus_algebra(dir: &TempDir, name: &str, extra: &[&str]) -> PathBuf {
    let mut args = vec!["corpus", "show", name, "--algebra"];
    args.extend_from_slice(extra);
    let o = lowrank(&args);
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    let file: String = format!("{name}{}.json", extra.join("_")).chars().map(|c| if c.is_alphanumeric() || c == '.' { c } else { '_' }).collect();
    write(dir, &file, &stdout_json(&o))
}

fn path(p: &Path) -> &str {
    p.to_str().unwrap()
}

fn schema() -> jsonschema::JSONSchema {
    let text = std::fs::read_to_string(concat!(env!("CARGO_MANIFEST_DIR"), "/schema/analysis_report.schema.json")).unwrap();
    jsonschema::JSONSchema::options()
        .with_draft(jsonschema::Draft::Draft202012)
        .compile(&serde_json::from_str(&text).unwrap())
        .expect("schema compiles")
}

fn assert_valid(report: &Value) {
    let s = schema();
    let msgs: Vec<String> = match s.validate(report) {
        Ok(()) => return,
        Err(errors) => errors.map(|e| format!("{} at {}", e, e.instance_path)).collect(),
    };
    panic!("schema violations: {msgs:?}");
}

fn analyze(file: &Path) -> Value {
    let o = lowrank(&["analyze", path(file), "--json"]);
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    stdout_json(&o)
}

#[test]
fn validate_exit_codes() {
    let dir = TempDir::new().unwrap();
    let mat2 = corpus_algebra(&dir, "mat2", &[]);
    assert_eq!(lowrank(&["validate", path(&mat2)]).status.code(), Some(0));

    // a table in (C) form with a = s = 1 breaks associativity
    let c = json!({
        "ring": {"kind": "Z"}, "rank": 3,
        "table": [
            [[1,0,0],[0,1,0],[0,0,1]],
            [[0,1,0],[-1,1,0],[0,0,0]],
            [[0,0,1],[0,1,0],[0,0,0]]
        ]
    });
    let bad = write(&dir, "bad.json", &c);
    let o = lowrank(&["validate", path(&bad), "--json"]);
    assert_eq!(o.status.code(), Some(1));
    let v = stdout_json(&o);
    assert_eq!(v["detail"]["kind"], "not_associative");
    let w: Vec<usize> = serde_json::from_value(v["detail"]["witness"].clone()).unwrap();
    assert_eq!(w.len(), 3);
    assert!(String::from_utf8_lossy(&o.stderr).contains("not associative"));

    let truncated = dir.path().join("truncated.json");
    let text = std::fs::read_to_string(&mat2).unwrap();
    std::fs::write(&truncated, &text[..text.len() / 2]).unwrap();
    assert_eq!(lowrank(&["validate", path(&truncated)]).status.code(), Some(2));
    assert_eq!(lowrank(&["validate", "/nonexistent/file.json"]).status.code(), Some(2));
    assert_eq!(lowrank(&["frobnicate"]).status.code(), Some(2));

    let z12 = write(&dir, "z12.json", &json!({"ring": {"kind": "Fp", "p": 12}, "rank": 1, "table": [[[1]]]}));
    assert_eq!(lowrank(&["validate", path(&z12)]).status.code(), Some(3));
    let odd = write(&dir, "odd.json", &json!({"ring": {"kind": "Octonions"}, "rank": 1, "table": [[[1]]]}));
    assert_eq!(lowrank(&["validate", path(&odd)]).status.code(), Some(3));
    let shapeless = write(&dir, "shapeless.json", &json!({"ring": "Q", "rank": 1, "table": [[[1]]]}));
    assert_eq!(lowrank(&["validate", path(&shapeless)]).status.code(), Some(2));
}

#[test]
fn analyze_examples() {
    let dir = TempDir::new().unwrap();
    let b3 = analyze(&corpus_algebra(&dir, "boolean_3", &[]));
    assert_valid(&b3);
    assert_eq!(b3["degree"]["value"], 2);
    assert_eq!(b3["degree"]["method"], "exhaustive");
    assert_eq!(b3["gdeg"]["value"], 3);
    assert_eq!(b3["involution"]["present"], false);
    assert_eq!(b3["theorem_a"]["consistent"], true);
    assert_eq!(b3["rank3"]["reason"], "no-involution");

    let nc = analyze(&corpus_algebra(&dir, "nc_uv", &["--param", "3", "--param", "5"]));
    assert_valid(&nc);
    assert_eq!(nc["involution"]["present"], true);
    assert_eq!(nc["exceptional"]["available"], true);
    assert_eq!(nc["rank3"]["orbit_invariant"], json!({"kind": "gcd", "value": "1"}));
    assert_eq!(nc["degree"]["sampling"]["agrees"], true);

    let rank1 = write(&dir, "rank1.json", &json!({"ring": {"kind": "Q"}, "rank": 1, "table": [[["1"]]]}));
    let r1 = analyze(&rank1);
    assert_valid(&r1);
    assert_eq!(r1["degree"]["value"], 1);
    assert_eq!(r1["rank3"]["reason"], "rank-not-3");

    // the schema is not vacuous
    let mut broken = r1.clone();
    broken["degree"]["value"] = json!(1.5);
    assert!(!schema().is_valid(&broken));
    broken.as_object_mut().unwrap().remove("degree");
    assert!(!schema().is_valid(&broken));
}

#[test]
fn every_corpus_entry_report_matches_schema() {
    let dir = TempDir::new().unwrap();
    let o = lowrank(&["corpus", "list", "--json"]);
    for fam in stdout_json(&o).as_array().unwrap() {
        let fam = fam["name"].as_str().unwrap();
        let name = fam.strip_suffix("_n").map_or(fam.to_string(), |p| format!("{p}_2"));
        let report = analyze(&corpus_algebra(&dir, &name, &[]));
        assert_valid(&report);
    }
    // polynomial and residue rings as well
    for (name, ring, params) in [("mat2", "F_2[t]", vec![]), ("nc_uv", "Q[t]", vec!["1", "0"]), ("nc_uv", "Z/8", vec!["2", "4"])] {
        let mut extra = vec!["--ring", ring];
        for p in &params {
            extra.extend(["--param", p]);
        }
        assert_valid(&analyze(&corpus_algebra(&dir, name, &extra)));
    }
}

#[test]
fn reanalysis_of_embedded_input_is_identical() {
    let dir = TempDir::new().unwrap();
    for (name, extra) in [("nc_uv", vec!["--param", "4", "--param", "6"]), ("rank4_deg3", vec![]), ("upper_tri", vec![])] {
        let first = analyze(&corpus_algebra(&dir, name, &extra));
        let again = analyze(&write(&dir, "embedded.json", &first["input"]));
        assert_eq!(first, again, "{name}");
    }
    // a different seed changes only the sampling record
    let f = corpus_algebra(&dir, "mat2", &[]);
    let a = stdout_json(&lowrank(&["analyze", path(&f), "--json", "--seed", "1"]));
    let b = stdout_json(&lowrank(&["analyze", path(&f), "--json", "--seed", "2"]));
    assert_eq!(a["degree"]["value"], b["degree"]["value"]);
    assert_eq!(a["degree"]["sampling"]["seed"], 1);
    let timed = stdout_json(&lowrank(&["analyze", path(&f), "--json", "--timing"]));
    assert!(timed["timing_ms"]["total"].is_u64());
    assert_valid(&timed);
    assert!(a.get("timing_ms").is_none());
}

#[test]
fn iso_command() {
    let dir = TempDir::new().unwrap();
    let a = corpus_algebra(&dir, "nc_uv", &["--param", "4", "--param", "6"]);
    let b = corpus_algebra(&dir, "nc_uv", &["--param", "2", "--param", "0"]);
    let c = corpus_algebra(&dir, "nc_uv", &["--param", "3", "--param", "5"]);
    let o = lowrank(&["iso", path(&a), path(&b), "--json"]);
    assert_eq!(o.status.code(), Some(0));
    let v = stdout_json(&o);
    assert_eq!(v["isomorphic"], true);
    assert_eq!(v["matrix"].as_array().unwrap().len(), 3);
    let v = stdout_json(&lowrank(&["iso", path(&a), path(&c), "--json"]));
    assert_eq!(v["isomorphic"], false);
    assert!(v["matrix"].is_null());
    let m = corpus_algebra(&dir, "mat2", &[]);
    assert_eq!(lowrank(&["iso", path(&m), path(&m)]).status.code(), Some(1));
}

#[test]
fn census_command() {
    let o = lowrank(&["census", "--ring", "F_2", "--rank", "3", "--json"]);
    assert_eq!(o.status.code(), Some(0));
    let v = stdout_json(&o);
    assert_eq!(v["classes"].as_array().unwrap().len(), 2);
    assert_eq!(v["agree"], true);
    assert_eq!(v["mode"], "full");

    let o = lowrank(&["census", "--ring", "F_2", "--rank", "5"]);
    assert_eq!(o.status.code(), Some(3));
    assert!(String::from_utf8_lossy(&o.stderr).contains("rank"));
    assert_eq!(lowrank(&["census", "--ring", "Z", "--rank", "3"]).status.code(), Some(3));

    let o = lowrank(&["census", "--ring", "F_3", "--rank", "3", "--mode", "full", "--limit", "1000", "--json"]);
    assert_eq!(o.status.code(), Some(3));
    assert_eq!(stdout_json(&o)["detail"]["kind"], "limit_exceeded");
    // auto falls back to the normalized tables when the full search is too large
    let v = stdout_json(&lowrank(&["census", "--ring", "F_3", "--rank", "3", "--limit", "100000", "--json"]));
    assert_eq!(v["mode"], "normalized");
    assert_eq!(v["classes"].as_array().unwrap().len(), 2);

    let o = Command::new(env!("CARGO_BIN_EXE_lowrank"))
        .args(["census", "--ring", "F_2", "--rank", "3", "--mode", "full"])
        .env("LOWRANK_LIMIT", "100")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(3));
}

#[test]
fn corpus_commands() {
    let o = lowrank(&["corpus", "check"]);
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stdout));
    let o = lowrank(&["corpus", "show", "no_such_entry"]);
    assert_eq!(o.status.code(), Some(2));
    let v = stdout_json(&lowrank(&["corpus", "show", "boolean_3"]));
    assert_eq!(v["expected"]["degree"]["value"], 2);
    assert_eq!(v["expected"]["gdeg"]["value"], 3);
    // a full entry is accepted wherever an algebra file is
    let dir = TempDir::new().unwrap();
    let entry = write(&dir, "entry.json", &v);
    assert_eq!(lowrank(&["validate", path(&entry)]).status.code(), Some(0));
}
