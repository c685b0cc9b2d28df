use std::process::{Command, Output};

use serde_json::Value;

use legendrian_cycles::report::{emit, Format, Report};

const BIN: &str = env!("CARGO_BIN_EXE_legendrian-cycles");
const SCHEMA: &str = include_str!("../schema/report.schema.json");

fn run(args: &[&str]) -> Output {
    Command::new(BIN).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn assert_valid(report: &Value) {
    let schema: Value = serde_json::from_str(SCHEMA).unwrap();
    let validator = jsonschema::validator_for(&schema).unwrap();
    let errors: Vec<String> = validator.iter_errors(report).map(|e| e.to_string()).collect();
    assert!(errors.is_empty(), "{errors:?}");
}

#[test]
fn reproduce_all_is_green_deterministic_and_valid() {
    let first = run(&["reproduce-all", "--json"]);
    assert_eq!(first.status.code(), Some(0), "{}", String::from_utf8_lossy(&first.stderr));
    let second = run(&["reproduce-all", "--json"]);
    assert_eq!(first.stdout, second.stdout);

    let report: Value = serde_json::from_slice(&first.stdout).unwrap();
    assert_valid(&report);
    let entries = report["entries"].as_array().unwrap();
    let ids: Vec<&str> = entries.iter().map(|e| e["claim_id"].as_str().unwrap()).collect();
    let mut sorted = ids.clone();
    sorted.sort();
    assert_eq!(ids, sorted);
    let find = |id: &str| entries.iter().find(|e| e["claim_id"] == id).unwrap_or_else(|| panic!("{id}"));
    assert_eq!(find("lemma2.count")["expected"], "9");
    assert_eq!(find("lemma2.count")["computed"], "9");
    assert_eq!(find("d4.degree.110")["computed"], "432");
    assert_eq!(find("e7.index")["status"], "recorded-exception");
    assert_eq!(report["summary"]["fail"], 0);
    assert!(entries.iter().all(|e| e.get("runtime_ms").is_none()));
}

#[test]
fn timings_and_text() {
    let o = run(&["reproduce-all", "--json", "--timings"]);
    assert_eq!(o.status.code(), Some(0));
    let report: Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_valid(&report);
    assert!(report["entries"].as_array().unwrap().iter().all(|e| e["runtime_ms"].is_u64()));

    let t = run(&["reproduce-all"]);
    assert_eq!(t.status.code(), Some(0));
    let text = stdout(&t);
    assert!(text.lines().any(|l| l.starts_with("lemma2.count") && l.contains("pass")));
    assert!(text.contains("0 fail"));
}

#[test]
fn empty_report_validates() {
    let r = Report::new(1009, 0, Vec::new());
    assert_valid(&serde_json::from_str(&emit(&r, Format::Json)).unwrap());
}

#[test]
fn class_commands() {
    let o = run(&["chern", "sym(3,dual(taut(0)))", "--ring", "G(2,6)", "--degree", "2"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("21*σ[11] + 11*σ[2]"), "{}", stdout(&o));

    let o = run(&["chern", "wedge(2,dual(taut(0)))", "--ring", "G(5,9)", "--degree", "10", "--json"]);
    let v: Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["rank"], 10);
    assert_eq!(v["class"]["terms"][0]["partition_tuple"][0], serde_json::json!([4, 3, 2, 1]));
    assert_eq!(v["class"]["terms"][0]["coefficient"], "1");

    let o = run(&["integrate", "sigma(4321)^2", "--ring", "G(5,9)"]);
    assert_eq!(stdout(&o).trim(), "1");
    let o = run(&[
        "degree",
        "c(8,tensor(dual(taut(0)),dual(taut(1)),dual(taut(2))))",
        "--ring",
        "G(2,4)^3",
        "--weights",
        "1,0,0",
    ]);
    assert_eq!(stdout(&o).trim(), "12");
}

#[test]
fn errors_exit_with_two() {
    for args in [
        vec!["chern", "wedge(2,taut(3))", "--ring", "G(2,4)", "--degree", "1"],
        vec!["integrate", "h^", "--ring", "G(2,4)"],
        vec!["integrate", "h", "--ring", "G(5,3)"],
        vec!["degree", "h", "--ring", "G(2,4)", "--weights", "1,1"],
        vec!["orbits", "--prime", "1000"],
    ] {
        let o = run(&args);
        assert_eq!(o.status.code(), Some(2), "{args:?}");
        assert!(String::from_utf8_lossy(&o.stderr).starts_with("error:"));
    }
    assert_eq!(run(&["reproduce-all", "--prime", "97"]).status.code(), Some(2));
}

#[test]
fn suites_emit_json() {
    let o = run(&["series", "--json"]);
    let rows: Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(rows.as_array().unwrap().len(), 7);
    assert_eq!(rows[0]["group"], "G2");

    for cmd in ["orbits", "kernels", "graph-identity", "cayley"] {
        let o = run(&[cmd, "--samples", "5", "--seed", "3", "--json"]);
        assert_eq!(o.status.code(), Some(0), "{cmd}");
        let v: Value = serde_json::from_slice(&o.stdout).unwrap();
        assert!(v.is_object(), "{cmd}");
    }
    let o = run(&["lemma2", "--json"]);
    let v: Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["count"], "9");
    assert_eq!(v["c10_wedge2_is_sigma4321"], true);
    let o = run(&["d4-degrees", "--json"]);
    let v: Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["degree_porteous"], "432");
    assert_eq!(v["projection_degree"], "6");
}
