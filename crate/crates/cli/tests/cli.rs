use std::process::{Command, Output};

use serde_json::Value;

fn planepairs(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_planepairs")).args(args).env_remove("PLANEPAIRS_SEED").output().expect("binary runs")
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

#[test]
fn borel_enum_lists_both_points() {
    let out = planepairs(&["borel-enum", "--hp", "C(t+2,2)+t+1", "--n", "4", "--json"]);
    assert_eq!(out.status.code(), Some(0));
    let r = json(&out);
    assert_eq!(r["schema_version"], 1);
    let ideals = &r["records"][0]["computed"]["ideals"];
    assert_eq!(ideals.as_array().unwrap().len(), 2);
    assert_eq!(ideals[0], serde_json::json!(["x0", "x1*x2*x3", "x1*x2^2", "x1^2"]));
    assert_eq!(ideals[1], serde_json::json!(["x0*x1", "x0*x2", "x0*x3", "x0^2", "x1*x2", "x1^2"]));
    let same = planepairs(&["borel-enum", "--hp", "pair:1,2", "--n", "4", "--json"]);
    assert_eq!(json(&same)["records"][0]["computed"], r["records"][0]["computed"]);
}

#[test]
fn mutated_fixture_fails_flatness() {
    let out = planepairs(&["deform", "--case", "i124", "--mutate", "--json"]);
    assert_eq!(out.status.code(), Some(1));
    let r = json(&out);
    let failing: Vec<&str> =
        r["records"].as_array().unwrap().iter().filter(|x| x["pass"] == false).map(|x| x["claim"].as_str().unwrap()).collect();
    assert_eq!(failing, ["deform/i124/flatness"]);
}

#[test]
fn corrected_deformation_data_passes() {
    let out = planepairs(&["deform", "--case", "j3"]);
    assert_eq!(out.status.code(), Some(0));
    let table = String::from_utf8(out.stdout).unwrap();
    assert!(table.lines().any(|l| l.starts_with("deform/j3") && l.ends_with("PASS")));
}

#[test]
fn printed_deformation_data_fails() {
    let out = planepairs(&["deform", "--case", "i124", "--printed"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn seed_falls_back_to_environment() {
    let out = Command::new(env!("CARGO_BIN_EXE_planepairs"))
        .args(["gin", "--ideal", "x0^2,x0*x1", "--n", "2", "--json"])
        .env("PLANEPAIRS_SEED", "1234")
        .output()
        .unwrap();
    assert_eq!(json(&out)["seed"], 1234);
    let flag = Command::new(env!("CARGO_BIN_EXE_planepairs"))
        .args(["gin", "--ideal", "x0^2,x0*x1", "--n", "2", "--json", "--seed", "5"])
        .env("PLANEPAIRS_SEED", "1234")
        .output()
        .unwrap();
    assert_eq!(json(&flag)["seed"], 5);
}

#[test]
fn single_ideal_commands() {
    let hilb = json(&planepairs(&["hilb", "--ideal", "x0*x2,x0*x3,x1*x2,x1*x3", "--n", "3"]));
    assert_eq!(hilb["polynomial"], "2*t + 2");
    let betti = json(&planepairs(&["betti", "--ideal", "x0*x2,x0*x3,x1*x2,x1*x3", "--n", "3"]));
    assert_eq!(betti["totals"], serde_json::json!([1, 4, 4, 1]));
    let tangent = json(&planepairs(&["tangent", "--ideal", "x0*x2,x0*x3,x1*x2,x1*x3", "--n", "3"]));
    assert_eq!(tangent["hom_degree_zero_dim"], 8);
}

#[test]
fn catalog_type_filter() {
    let out = planepairs(&["catalog", "--family", "codim2-pairs", "--n", "4", "--type", "3", "--json"]);
    assert_eq!(out.status.code(), Some(0));
    let r = json(&out);
    let recs = r["records"].as_array().unwrap();
    assert_eq!(recs.len(), 1);
    assert_eq!(recs[0]["claim"], "catalog/codim2-pairs/n=4/3");
}

#[test]
fn cones_at_one_dimension() {
    let out = planepairs(&["cones", "--family", "line-plane", "--n", "6", "--json"]);
    assert_eq!(out.status.code(), Some(0));
    let r = json(&out);
    assert!(r["records"].as_array().unwrap().iter().any(|x| x["claim"] == "cones/line-plane/fano/n=6"));
}

#[test]
fn family_at_one_size() {
    let out = planepairs(&["family", "--k", "2", "--n", "5", "--samples", "3", "--json"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json(&out)["records"][0]["expected"]["passing_draws"], 7);
}

#[test]
fn bad_input_exits_with_two() {
    assert_eq!(planepairs(&["hilb", "--ideal", "x0^2+x1", "--n", "2"]).status.code(), Some(2));
    assert_eq!(planepairs(&["catalog", "--family", "nonsense"]).status.code(), Some(2));
    assert_eq!(planepairs(&["verify-all", "--suite", "everything"]).status.code(), Some(2));
}
