use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn data(name: &str) -> String {
  PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../data").join(name).to_string_lossy().into_owned()
}

fn run(args: &[&str]) -> Output { Command::new(env!("CARGO_BIN_EXE_hopfcyc")).args(args).output().expect("binary runs") }

fn json(args: &[&str]) -> (i32, Value) {
  let mut all = args.to_vec();
  all.extend(["--format", "json"]);
  let out = run(&all);
  let code = out.status.code().unwrap();
  let value = serde_json::from_slice(&out.stdout).unwrap_or(Value::Null);
  (code, value)
}

fn dims(v: &Value) -> Vec<u64> { v.as_array().unwrap().iter().map(|x| x.as_u64().unwrap()).collect() }

#[test]
fn verify_builtin_and_file_documents() {
  assert_eq!(run(&["verify", "hopf", &data("z2.json")]).status.code(), Some(0));
  assert_eq!(run(&["verify", "hopf", "sweedler"]).status.code(), Some(0));
  assert_eq!(run(&["verify", "crossed", &data("ad_s3.json")]).status.code(), Some(0));
  assert_eq!(run(&["verify", "crossed", "coadjoint", "--base", "d4"]).status.code(), Some(0));
}

#[test]
fn mutated_input_fails_with_witness() {
  let (code, v) = json(&["verify", "hopf", &data("z2_broken.json")]);
  assert_eq!(code, 1);
  let failed: Vec<&Value> = v["checks"].as_array().unwrap().iter().filter(|c| c["passed"] == false).collect();
  assert_eq!(failed.len(), 1);
  assert_eq!(failed[0]["name"], "antipode");
  assert!(failed[0]["witness"].is_string());
}

#[test]
fn non_modular_cyclic_suite_fails() {
  let doc = r#"{"basis":["m"],"action":[[0,0,0,1],[1,0,0,-1]],"coaction":[[0,0,1,1]]}"#;
  let (code, v) = json(&["verify", "cyclic", "z2", doc, "--max-degree", "2"]);
  assert_eq!(code, 1);
  assert_eq!(v["passed"], false);
}

#[test]
fn homology_examples() {
  let (code, v) = json(&["hc", "kz2", "adjoint", "--max-degree", "5"]);
  assert_eq!(code, 0);
  assert_eq!(dims(&v["results"]["hc"]), vec![2, 0, 2, 0, 2, 0]);
  let (code, v) = json(&["hh", "kz2", "trivial", "--max-degree", "3"]);
  assert_eq!(code, 0);
  assert_eq!(dims(&v["results"]["hh"]), vec![1, 0, 0, 0]);
  let (code, v) = json(&["hc", "z3", "trivial", "--max-degree", "3", "--method", "both"]);
  assert_eq!(code, 0);
  assert_eq!(v["results"]["agree"], true);
  assert_eq!(dims(&v["results"]["hc"]), vec![1, 0, 1, 0]);
}

#[test]
fn hochschild_over_a_prime_field() {
  let (code, v) = json(&["hh", "z2", "adjoint", "--field", "f2", "--max-degree", "2"]);
  assert_eq!(code, 0);
  // Over F_2 the group Z/2 is not invertible in the field, so HH_1 survives.
  assert_eq!(dims(&v["results"]["hh"]), vec![2, 2, 2]);
  assert_eq!(v["config"]["field"], "f2");
}

#[test]
fn configuration_errors_exit_2() {
  let out = run(&["hc", "--field", "f5", "kz2", "adjoint"]);
  assert_eq!(out.status.code(), Some(2));
  assert!(String::from_utf8_lossy(&out.stderr).contains("characteristic 0"));
  assert_eq!(run(&["hh", "z2", "adjoint", "--field", "f4"]).status.code(), Some(2));
  assert_eq!(run(&["hh", "z2", "adjoint", "--max-degree", "0"]).status.code(), Some(2));
  assert_eq!(run(&["hh", "nosuchgroup", "adjoint"]).status.code(), Some(2));
  assert_eq!(run(&["verify", "hopf", "{not json"]).status.code(), Some(2));
  assert_eq!(run(&["frobnicate"]).status.code(), Some(2));
}

#[test]
fn galois_suite() {
  let (code, v) = json(&["galois", &data("s3_over_a3.json"), "--max-degree", "3"]);
  assert_eq!(code, 0, "{v:#}");
  let hc = v["results"]["comparison"]["comparisons"].as_array().unwrap().iter().find(|c| c["quantity"] == "HC").unwrap();
  assert_eq!(dims(&hc["left"]), vec![3, 0, 3, 0]);
  assert_eq!(dims(&hc["right"]), vec![3, 0, 3, 0]);
  for name in ["lambda.commutes_with_faces", "lambda.commutes_with_degeneracies", "lambda.commutes_with_cyclic", "relations.tau5"] {
    assert!(v["checks"].as_array().unwrap().iter().any(|c| c["name"] == name && c["passed"] == true), "{name}");
  }
}

#[test]
fn trivial_coaction_is_not_galois() {
  let doc = r#"{"algebra":"z2","grading":{"group":"z2","blocks":[[0,[0,1]]]}}"#;
  let (code, v) = json(&["verify", "galois", doc]);
  assert_eq!(code, 1);
  assert!(v["checks"].as_array().unwrap().iter().any(|c| c["name"] == "galois_map_bijective" && c["passed"] == false));
}

#[test]
fn burghelea_example() {
  let (code, v) = json(&["burghelea", "s3", "adjoint", "--max-degree", "3"]);
  assert_eq!(code, 0);
  assert_eq!(dims(&v["results"]["formula"]), vec![3, 0, 3, 0]);
  assert_eq!(v["results"]["formula"], v["results"]["direct"]);
}

#[test]
fn qtorus_example() {
  let (code, v) = json(&["qtorus", r#"{"r":2,"a":[[0,1],[-1,0]],"q_order":"infinite"}"#, "--max-degree", "2"]);
  assert_eq!(code, 0);
  let hh: Vec<u64> = v["results"]["degrees"].as_array().unwrap().iter().map(|d| d["hh_total"].as_u64().unwrap()).collect();
  assert_eq!(hh, vec![1, 2, 1]);
  let (code, v) = json(&["qtorus", &data("torus_order3.json")]);
  assert_eq!(code, 0);
  assert_eq!(v["results"]["lattice_description"], "3Z ⊕ 3Z");
  assert!(v["results"]["degrees"][0].get("hh_total").is_none());
  assert_eq!(run(&["qtorus", r#"{"r":2,"a":[[0,1],[1,0]],"q_order":3}"#]).status.code(), Some(2));
}

#[test]
fn reports_are_deterministic_apart_from_timings() {
  let args = ["hc", "s3", "trivial", "--max-degree", "3", "--format", "json"];
  let strip = |o: Output| {
    let mut v: Value = serde_json::from_slice(&o.stdout).unwrap();
    assert!(v.as_object_mut().unwrap().remove("timings").is_some());
    serde_json::to_string(&v).unwrap()
  };
  assert_eq!(strip(run(&args)), strip(run(&args)));
  let mut quiet = args.to_vec();
  quiet.push("--no-timings");
  assert_eq!(run(&quiet).stdout, run(&quiet).stdout);
  let v: Value = serde_json::from_slice(&run(&args).stdout).unwrap();
  assert_eq!(v["schema"], 1);
  assert_eq!(v["inputs"][0]["sha256"].as_str().unwrap().len(), 64);
}

#[test]
fn export_round_trips_through_verify() {
  let out = run(&["export", "crossed", "d4", "coadjoint"]);
  assert_eq!(out.status.code(), Some(0));
  let doc = String::from_utf8(out.stdout).unwrap();
  assert_eq!(run(&["verify", "crossed", &doc]).status.code(), Some(0));
}
