use std::process::{Command, Output};

use parorb::{EnhancedOlp, OrientedLinkPattern};
use serde_json::Value;

fn parorb(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_parorb")).args(args).output().expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = parorb(args);
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).unwrap()
}

#[test]
fn enumerate_three_singletons_gives_seven_records() {
    let s = stdout(&["enumerate", "--blocks", "1,1,1", "--nilpotency", "2"]);
    let lines: Vec<&str> = s.lines().collect();
    assert_eq!(lines.len(), 7);
    for l in lines {
        let v: Value = serde_json::from_str(l).unwrap();
        let e: EnhancedOlp = serde_json::from_value(v["class"].clone()).unwrap();
        assert_eq!(e.blocks().blocks(), &[1, 1, 1]);
        assert_eq!(v["label"], e.label());
    }
}

#[test]
fn hasse_two_two_degree_three_dot_has_fourteen_nodes() {
    let s = stdout(&["hasse", "--blocks", "2,2", "--nilpotency", "3", "--format", "dot"]);
    assert!(s.starts_with("digraph"));
    assert_eq!(s.lines().filter(|l| l.contains("[label=")).count(), 14);
}

#[test]
fn hasse_json_matches_dot() {
    let dot = stdout(&["hasse", "--blocks", "2,1", "--format", "dot"]);
    let json: Value = serde_json::from_str(&stdout(&["hasse", "--blocks", "2,1", "--format", "json"])).unwrap();
    let nodes = json["nodes"].as_array().unwrap().len();
    let edges = json["edges"].as_array().unwrap().len();
    assert_eq!(dot.lines().filter(|l| l.contains("[label=")).count(), nodes);
    assert_eq!(dot.lines().filter(|l| l.contains("->")).count(), edges);
    assert_eq!(nodes, 4);
}

#[test]
fn identify_zero_matrix_gives_empty_pattern() {
    let dir = std::env::temp_dir().join(format!("parorb-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("zero4.json");
    std::fs::write(&path, r#"[["0/1","0/1","0/1","0/1"],[0,0,0,0],[0,0,0,0],[0,0,0,0]]"#).unwrap();
    let v: Value = serde_json::from_str(&stdout(&["identify", "--matrix", path.to_str().unwrap()])).unwrap();
    let olp: OrientedLinkPattern = serde_json::from_value(v["pattern"].clone()).unwrap();
    assert_eq!(olp, OrientedLinkPattern::empty(4));
}

#[test]
fn expand_lists_six_patterns() {
    let class = r#"{"kind":"eolp","blocks":[3,1],"counts":[[1,1],[0,0]]}"#;
    let s = stdout(&["expand", "--blocks", "3,1", "--class", class]);
    let pats: Vec<OrientedLinkPattern> = s.lines().map(|l| serde_json::from_str(l).unwrap()).collect();
    assert_eq!(pats.len(), 6);
    assert!(pats.iter().any(|p| p.arrows() == [(1, 3), (4, 2)]));
}

#[test]
fn dim_and_homdim_report_numbers() {
    let loop_class = r#"{"kind":"eolp","blocks":[2],"counts":[[1]]}"#;
    let v: Value = serde_json::from_str(&stdout(&["dim", "--blocks", "2", "--class", loop_class])).unwrap();
    assert_eq!(v["orbit_dim"], 2);
    let v: Value = serde_json::from_str(&stdout(&[
        "homdim", "--blocks", "2,2", "--nilpotency", "3", "--left", "U_{0,1}", "--right", "U_{0,1}",
    ]))
    .unwrap();
    assert_eq!(v["hom_dim"], 1);
}

#[test]
fn hom_table_is_thirty_by_thirty() {
    let v: Value = serde_json::from_str(&stdout(&["homdim", "--table"])).unwrap();
    let t = v["table"].as_array().unwrap();
    assert_eq!(t.len(), 30);
    assert!(t.iter().all(|r| r.as_array().unwrap().len() == 30));
}

#[test]
fn classify_reports_type() {
    let v: Value = serde_json::from_str(&stdout(&["classify", "--blocks", "2,2", "--nilpotency", "3"])).unwrap();
    assert_eq!(v["type"], "finite");
    let v: Value = serde_json::from_str(&stdout(&["classify", "--blocks", "1,1,1", "--nilpotency", "3"])).unwrap();
    assert_eq!(v["type"], "wild");
}

#[test]
fn witness_and_catalog_succeed() {
    let v: Value = serde_json::from_str(&stdout(&["witness", "--family", "wild343", "--params", "2,-1/2"])).unwrap();
    assert_eq!(v["matrix"].as_array().unwrap().len(), 10);
    let v: Value = serde_json::from_str(&stdout(&["verify-catalog"])).unwrap();
    assert_eq!(v["all_passed"], true);
}

#[test]
fn same_seed_same_bytes() {
    let args = ["conjugate", "--blocks", "1,1", "--left", "[[0,0],[1,0]]", "--right", "[[0,1],[0,0]]", "--seed", "5"];
    let a = stdout(&args);
    assert_eq!(a, stdout(&args));
    let v: Value = serde_json::from_str(&a).unwrap();
    assert_eq!(v["verdict"], "probably_not_conjugate");
    assert_eq!(v["seed"], 5);
}

#[test]
fn output_flag_writes_file() {
    let path = std::env::temp_dir().join(format!("parorb-out-{}.jsonl", std::process::id()));
    let s = stdout(&["enumerate", "--blocks", "2", "--output", path.to_str().unwrap()]);
    assert!(s.is_empty());
    assert_eq!(std::fs::read_to_string(&path).unwrap().lines().count(), 2);
}

#[test]
fn exit_codes() {
    let out = parorb(&["identify", "--matrix", "[[1,0],[0,0]]"]);
    assert_eq!(out.status.code(), Some(1));
    let err: Value = serde_json::from_slice(&out.stderr).unwrap();
    assert_eq!(err["error"], "not_two_nilpotent");

    assert_eq!(parorb(&["enumerate"]).status.code(), Some(2));
    assert_eq!(parorb(&["no-such-command"]).status.code(), Some(2));
    assert_eq!(parorb(&["enumerate", "--blocks", "1,1,1", "--nilpotency", "3"]).status.code(), Some(1));
}
