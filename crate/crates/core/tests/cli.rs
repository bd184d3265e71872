use std::path::{Path, PathBuf};
use std::process::Command;

use quasihopf::cli::format::SpecFile;
use quasihopf::cli::{run, Outcome};
use quasihopf::families::twisted_dual_group_algebra;
use serde_json::Value;

fn golden(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/golden").join(name)
}

fn cli(args: &[&str]) -> Outcome {
    run(std::iter::once("quasihopf").chain(args.iter().copied()))
}

fn json(o: &Outcome) -> Value {
    serde_json::from_str(&o.stdout).expect("stdout is one JSON document")
}

fn failed_checks(v: &Value) -> Vec<String> {
    v["reports"]
        .as_array()
        .unwrap()
        .iter()
        .flat_map(|r| r["checks"].as_array().unwrap())
        .filter(|c| c["passed"] == false)
        .map(|c| c["name"].as_str().unwrap().to_string())
        .collect()
}

fn write(dir: &tempfile::TempDir, name: &str, text: &str) -> String {
    let p = dir.path().join(name);
    std::fs::write(&p, text).unwrap();
    p.to_str().unwrap().to_string()
}

#[test]
fn golden_files_round_trip() {
    for name in [
        "zn_omega_4_1.jsonl",
        "group_4.jsonl",
        "hopf_module_4_1.jsonl",
        "quotient_4_1_by_2.jsonl",
    ] {
        let text = std::fs::read_to_string(golden(name)).unwrap();
        let parsed = SpecFile::parse(&text).unwrap();
        let again = parsed.to_jsonl();
        assert_eq!(again, text, "{name}");
        assert_eq!(SpecFile::parse(&again).unwrap().to_jsonl(), again);
    }
}

#[test]
fn examples_reproduce_golden_files() {
    let dir = tempfile::tempdir().unwrap();
    let cases: [(&[&str], &str); 3] = [
        (&["example", "zn-omega", "--n", "4", "--s", "1", "--quotient-order", "2"], "zn_omega_4_1.jsonl"),
        (&["example", "group", "--n", "4", "--subgroup-order", "2"], "group_4.jsonl"),
        (&["example", "hopf-module", "--n", "4", "--s", "1", "--quotient-order", "2"], "hopf_module_4_1.jsonl"),
    ];
    for (args, name) in cases {
        let out = dir.path().join(name);
        let mut full = args.to_vec();
        full.extend(["--out", out.to_str().unwrap()]);
        assert_eq!(cli(&full).exit_code, 0);
        assert_eq!(std::fs::read(&out).unwrap(), std::fs::read(golden(name)).unwrap(), "{name}");
        // without --out the file is embedded in the report
        let embedded = json(&cli(args));
        assert_eq!(embedded["derived_spec"].as_str().unwrap(), std::fs::read_to_string(golden(name)).unwrap());
    }
}

#[test]
fn check_report_is_byte_stable() {
    let f = golden("zn_omega_4_1.jsonl");
    let a = cli(&["check", "--file", f.to_str().unwrap()]);
    let b = cli(&["check", "--file", f.to_str().unwrap()]);
    assert_eq!(a, b);
    assert_eq!(a.exit_code, 0);
    assert_eq!(a.stdout, std::fs::read_to_string(golden("check_zn_omega_4_1.json")).unwrap());
    assert!(json(&a)["reports"][0]["conventions"]["pivot_rule"].is_string());
}

#[test]
fn quotient_golden_is_the_restricted_cocycle_instance() {
    // restricting ω_1 on ℤ₄ to {0, 2} gives ω_1 on ℤ₂
    let q = SpecFile::parse(&std::fs::read_to_string(golden("quotient_4_1_by_2.jsonl")).unwrap()).unwrap();
    let oracle = twisted_dual_group_algebra(2, 1).unwrap().with_conductor(4).unwrap();
    assert_eq!(q.algebra.mult(), oracle.algebra.mult());
    assert_eq!(q.algebra.delta(), oracle.algebra.delta());
    assert_eq!(q.algebra.phi(), oracle.algebra.phi());
    let a = q.antipode.unwrap();
    assert_eq!(a.s, oracle.antipode.s);
    assert_eq!(a.alpha, oracle.antipode.alpha);
    assert_eq!(a.beta, oracle.antipode.beta);
}

#[test]
fn pipeline_outputs_pass_check() {
    let dir = tempfile::tempdir().unwrap();
    let q = dir.path().join("q.jsonl");
    let f = golden("zn_omega_4_1.jsonl");
    let o = cli(&["quotient", "--file", f.to_str().unwrap(), "--ideal", "subgroup_quotient", "--out", q.to_str().unwrap()]);
    assert_eq!(o.exit_code, 0, "{}", o.stdout);
    assert_eq!(std::fs::read(&q).unwrap(), std::fs::read(golden("quotient_4_1_by_2.jsonl")).unwrap());
    assert_eq!(cli(&["check", "--file", q.to_str().unwrap()]).exit_code, 0);
    let lagrange = json(&o);
    let facts = &lagrange["reports"].as_array().unwrap().last().unwrap()["facts"];
    assert_eq!((facts["dim_H"].as_u64(), facts["dim_Q"].as_u64()), (Some(4), Some(2)));
}

#[test]
fn corrupted_phi_fails_pentagon_with_witness() {
    let dir = tempfile::tempdir().unwrap();
    let text = std::fs::read_to_string(golden("zn_omega_4_1.jsonl")).unwrap();
    let mut lines: Vec<Value> = text.lines().map(|l| serde_json::from_str(l).unwrap()).collect();
    let phi = lines.iter_mut().find(|l| l["section"] == "phi").unwrap();
    let entry = phi["entries"].as_array_mut().unwrap().iter_mut().find(|e| e[1] != "1").unwrap();
    entry[1] = "1".into();
    let corrupted: String = lines.iter().map(|l| l.to_string() + "\n").collect();
    let path = write(&dir, "bad.jsonl", &corrupted);
    let o = cli(&["check", "--file", &path]);
    assert_eq!(o.exit_code, 1);
    let v = json(&o);
    let pentagon = v["reports"][0]["checks"]
        .as_array()
        .unwrap()
        .iter()
        .find(|c| c["name"] == "pentagon")
        .unwrap();
    assert_eq!(pentagon["passed"], false);
    assert!(pentagon["witness"]["component"].is_array());
}

#[test]
fn malformed_input_exits_2_with_location() {
    let dir = tempfile::tempdir().unwrap();
    let text = std::fs::read_to_string(golden("zn_omega_4_1.jsonl")).unwrap();
    let truncated: String = text.lines().take(3).map(|l| format!("{l}\n")).collect();
    let o = cli(&["check", "--file", &write(&dir, "t.jsonl", &truncated)]);
    assert_eq!(o.exit_code, 2);
    assert!(json(&o)["error"]["message"].as_str().unwrap().contains("line 4"));

    let garbage = text.replacen("\"section\":\"unit\"", "\"section\":\"unit\",\"extra\":1", 1);
    let o = cli(&["check", "--file", &write(&dir, "g.jsonl", &garbage)]);
    assert_eq!(o.exit_code, 2);
    assert!(json(&o)["error"]["message"].as_str().unwrap().contains("line 3"));

    let bad_scalar = text.replacen("\"z\"", "\"2*w\"", 1);
    assert_eq!(cli(&["check", "--file", &write(&dir, "s.jsonl", &bad_scalar)]).exit_code, 2);
    assert_eq!(cli(&["check", "--file", "/nonexistent/x.jsonl"]).exit_code, 2);
    assert_eq!(cli(&["frobnicate"]).exit_code, 2);
    assert_eq!(cli(&["check", "--file", "x", "--strict", "--lenient"]).exit_code, 2);
}

#[test]
fn non_ideal_subspace_fails_biideal() {
    let dir = tempfile::tempdir().unwrap();
    let text = std::fs::read_to_string(golden("zn_omega_4_1.jsonl")).unwrap();
    // δ_0 + δ_1 spans no ideal of k^{ℤ₄}
    let extra = r#"{"name":"bad","section":"ideal","vectors":[[[[0],"1"],[[1],"1"]]]}"#;
    let path = write(&dir, "i.jsonl", &format!("{text}{extra}\n"));
    let o = cli(&["quotient", "--file", &path, "--ideal", "bad"]);
    assert_eq!(o.exit_code, 1);
    assert!(failed_checks(&json(&o)).contains(&"two_sided_ideal".to_string()));
    assert_eq!(cli(&["quotient", "--file", &path, "--ideal", "missing"]).exit_code, 2);
}

#[test]
fn zero_ideal_gives_a_copy() {
    let dir = tempfile::tempdir().unwrap();
    let text = std::fs::read_to_string(golden("zn_omega_4_1.jsonl")).unwrap();
    let path = write(&dir, "z.jsonl", &format!("{text}{}\n", r#"{"name":"zero","section":"ideal","vectors":[]}"#));
    let o = cli(&["quotient", "--file", &path, "--ideal", "zero"]);
    assert_eq!(o.exit_code, 0);
    let q = SpecFile::parse(json(&o)["derived_spec"].as_str().unwrap()).unwrap();
    let h = SpecFile::parse(&text).unwrap();
    assert_eq!(q.algebra.mult(), h.algebra.mult());
    assert_eq!(q.algebra.phi(), h.algebra.phi());
    assert_eq!(q.antipode.unwrap(), h.antipode.unwrap());
}

#[test]
fn subalgebra_commands() {
    let dir = tempfile::tempdir().unwrap();
    let g = golden("group_4.jsonl");
    let o = cli(&["subalgebra", "--file", g.to_str().unwrap(), "--subspace", "subgroup"]);
    assert_eq!(o.exit_code, 0, "{}", o.stdout);
    let k = SpecFile::parse(json(&o)["derived_spec"].as_str().unwrap()).unwrap();
    assert_eq!(k.algebra.dim(), 2);

    // full space returns the ambient triple
    let text = std::fs::read_to_string(&g).unwrap();
    let full = r#"{"name":"all","section":"subspace","vectors":[[[[0],"1"]],[[[1],"1"]],[[[2],"1"]],[[[3],"1"]]]}"#;
    let path = write(&dir, "full.jsonl", &format!("{text}{full}\n"));
    let o = cli(&["subalgebra", "--file", &path, "--subspace", "all"]);
    assert_eq!(o.exit_code, 0);
    let k = SpecFile::parse(json(&o)["derived_spec"].as_str().unwrap()).unwrap();
    assert_eq!(k.antipode, SpecFile::parse(&text).unwrap().antipode);

    // gauging by a unit outside K breaks the membership condition
    let gauged = dir.path().join("gauged.jsonl");
    let o = cli(&["gauge", "--file", g.to_str().unwrap(), "--unit", "1:1", "--out", gauged.to_str().unwrap()]);
    assert_eq!(o.exit_code, 0);
    assert_eq!(cli(&["check", "--file", gauged.to_str().unwrap()]).exit_code, 0);
    let o = cli(&["subalgebra", "--file", gauged.to_str().unwrap(), "--subspace", "subgroup"]);
    assert_eq!(o.exit_code, 1);
    assert_eq!(failed_checks(&json(&o)), vec!["canonical_element_in_KxK".to_string()]);
}

#[test]
fn gauge_by_idempotent_combination() {
    // u = δ_0 + 2δ_1 + 3δ_2 + 4δ_3 is a unit of k^{ℤ₄}
    let dir = tempfile::tempdir().unwrap();
    let f = golden("zn_omega_4_1.jsonl");
    let out = dir.path().join("g.jsonl");
    let o = cli(&["gauge", "--file", f.to_str().unwrap(), "--unit", "0:1,1:2,2:3,3:4", "--out", out.to_str().unwrap()]);
    assert_eq!(o.exit_code, 0);
    assert_eq!(cli(&["check", "--file", out.to_str().unwrap()]).exit_code, 0);
    let o = cli(&["gauge", "--file", f.to_str().unwrap(), "--unit", "0:1,1:1"]);
    assert_eq!(o.exit_code, 1);
    assert_eq!(json(&o)["error"]["kind"], "not_a_unit");
    assert_eq!(cli(&["gauge", "--file", f.to_str().unwrap(), "--unit", "9:1"]).exit_code, 2);
}

#[test]
fn hopfmod_on_each_module_section() {
    let f = golden("hopf_module_4_1.jsonl");
    for m in ["regular", "quotient", "quotient_tensor_regular"] {
        let o = cli(&["hopfmod", "--file", f.to_str().unwrap(), "--module", m]);
        assert_eq!(o.exit_code, 0, "{m}: {}", o.stdout);
    }
    let o = json(&cli(&["hopfmod", "--file", f.to_str().unwrap(), "--module", "quotient"]));
    let div = &o["reports"][1]["checks"][0];
    assert_eq!(div["note"], "2 | 2");
    // three modules, so the name is required
    assert_eq!(cli(&["hopfmod", "--file", f.to_str().unwrap()]).exit_code, 2);
}

#[test]
fn lagrange_command_reports_characters() {
    let f = golden("zn_omega_4_1.jsonl");
    let o = cli(&["lagrange", "--file", f.to_str().unwrap(), "--ideal", "subgroup_quotient"]);
    assert_eq!(o.exit_code, 0);
    let v = json(&o);
    let reports = v["reports"].as_array().unwrap();
    assert_eq!(reports.last().unwrap()["facts"]["characters"], 4);
}

#[test]
fn binary_is_a_thin_wrapper() {
    let f = golden("zn_omega_4_1.jsonl");
    let out = Command::new(env!("CARGO_BIN_EXE_quasihopf"))
        .args(["check", "--file", f.to_str().unwrap()])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(String::from_utf8(out.stdout).unwrap(), cli(&["check", "--file", f.to_str().unwrap()]).stdout);
    let bad = Command::new(env!("CARGO_BIN_EXE_quasihopf")).arg("nope").output().unwrap();
    assert_eq!(bad.status.code(), Some(2));
}
