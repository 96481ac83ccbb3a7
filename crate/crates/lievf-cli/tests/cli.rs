//! Command-line behavior: exit codes, error objects, and the report
//! round-trip (a serialized normalization map stays phi-related after
//! re-parsing).

use lievf::normalization::{verify_phi_related, RationalMap};
use lievf::symbolic::{parse_expression, Vars};
use lievf::vector_fields::{Chart, VectorField};
use lievf_cli::input::AlgebraInput;
use lievf_cli::pipeline::{self, ModeChoice};
use std::process::Command;

fn bin() -> &'static str {
    env!("CARGO_BIN_EXE_lievf")
}

fn catalog_path(name: &str) -> String {
    format!("{}/catalog/{name}.json", env!("CARGO_MANIFEST_DIR"))
}

fn write_temp(name: &str, contents: &str) -> std::path::PathBuf {
    let dir = std::env::temp_dir().join("lievf-cli-tests");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join(name);
    std::fs::write(&path, contents).unwrap();
    path
}

#[test]
fn malformed_file_exits_2() {
    let path = write_temp("malformed.json", "{ not json");
    let out = Command::new(bin())
        .arg("analyze")
        .arg(&path)
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(
        text.contains("\"code\": 2"),
        "error object expected, got {text}"
    );
}

#[test]
fn jacobi_violating_tensor_exits_2() {
    // sl2 tensor with [v2,v3] removed: antisymmetric but not Jacobi
    let tensor = r#"{
      "abstract": {
        "tensor": [
          [["0","0","0"],["1","0","0"],["0","2","0"]],
          [["-1","0","0"],["0","0","0"],["0","0","0"]],
          [["0","-2","0"],["0","0","0"],["0","0","0"]]
        ],
        "h": [["0","1","0"]]
      },
      "meta": {"name": "broken"}
    }"#;
    let path = write_temp("broken-tensor.json", tensor);
    let out = Command::new(bin())
        .arg("realize")
        .arg(&path)
        .arg("--order")
        .arg("2")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("Jacobi"), "got {text}");
}

#[test]
fn missing_coefficient_string_exits_2() {
    let path = write_temp(
        "bad-coeff.json",
        r#"{"variables": ["x"], "fields": [["x +"]], "meta": {"name": "bad"}}"#,
    );
    let out = Command::new(bin())
        .arg("analyze")
        .arg(&path)
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn non_transitive_analyze_succeeds_with_flag() {
    let path = write_temp(
        "non-transitive.json",
        r#"{"variables": ["x", "y"], "fields": [["1", "0"], ["x", "0"]], "meta": {"name": "nt"}}"#,
    );
    let out = Command::new(bin())
        .arg("analyze")
        .arg(&path)
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("\"transitive\": false"));
}

#[test]
fn normalize_diagonal_reports_out_of_scope() {
    let out = Command::new(bin())
        .arg("normalize")
        .arg(catalog_path("sl2sl2-diagonal"))
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("out-of-scope:Diagonal"), "got {text}");
}

#[test]
fn normalize_non_primitive_exits_2() {
    let out = Command::new(bin())
        .arg("normalize")
        .arg(catalog_path("translations-C2"))
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn normalize_wrong_explicit_mode_exits_2() {
    // curve mode on a plane algebra
    let out = Command::new(bin())
        .arg("normalize")
        .arg(catalog_path("gl2-aff-C2"))
        .arg("--mode")
        .arg("curve")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn realize_needs_an_abstract_pair() {
    let out = Command::new(bin())
        .arg("realize")
        .arg(catalog_path("sl2-P1"))
        .arg("--order")
        .arg("3")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn realize_emits_checked_jets() {
    let out = Command::new(bin())
        .arg("realize")
        .arg(catalog_path("sl2sl2-diagonal"))
        .arg("--order")
        .arg("3")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    let json: serde_json::Value = serde_json::from_str(&text).unwrap();
    assert_eq!(
        json["realization"]["check"]["ok"],
        serde_json::Value::Bool(true)
    );
    assert_eq!(json["realization"]["kernel_dim"], 0);
    assert_eq!(json["realization"]["images"].as_array().unwrap().len(), 6);
}

#[test]
fn realize_sl2_borel_and_abelian_line() {
    let sl2 = r#"{
      "abstract": {
        "tensor": [
          [["0","0","0"],["1","0","0"],["0","2","0"]],
          [["-1","0","0"],["0","0","0"],["0","0","1"]],
          [["0","-2","0"],["0","0","-1"],["0","0","0"]]
        ],
        "h": [["0","1","0"],["0","0","1"]]
      },
      "meta": {"name": "sl2-borel"}
    }"#;
    let path = write_temp("sl2-borel.json", sl2);
    let out = Command::new(bin())
        .arg("realize")
        .arg(&path)
        .arg("--order")
        .arg("3")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    let json: serde_json::Value =
        serde_json::from_str(&String::from_utf8(out.stdout).unwrap()).unwrap();
    assert_eq!(
        json["realization"]["check"]["ok"],
        serde_json::Value::Bool(true)
    );

    let abelian = r#"{
      "abstract": {"tensor": [[["0"]]], "h": []},
      "meta": {"name": "abelian-1"}
    }"#;
    let path = write_temp("abelian-1.json", abelian);
    let out = Command::new(bin())
        .arg("realize")
        .arg(&path)
        .arg("--order")
        .arg("1")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    let json: serde_json::Value =
        serde_json::from_str(&String::from_utf8(out.stdout).unwrap()).unwrap();
    assert_eq!(json["realization"]["images"][0][0], "1");
}

#[test]
fn non_effective_abstract_pair_analyzes_via_the_quotient() {
    // aff ⊕ C with h containing the central factor: the center is the
    // kernel of the realization, the pair is reported as not effective,
    // and the dimension identity still holds upstairs
    let text = r#"{
      "abstract": {
        "tensor": [
          [["0","0","0"],["1","0","0"],["0","0","0"]],
          [["-1","0","0"],["0","0","0"],["0","0","0"]],
          [["0","0","0"],["0","0","0"],["0","0","0"]]
        ],
        "h": [["0","1","0"],["0","0","1"]]
      },
      "meta": {"name": "aff-plus-center"}
    }"#;
    let path = write_temp("aff-plus-center.json", text);
    let out = Command::new(bin())
        .arg("analyze")
        .arg(&path)
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    let json: serde_json::Value =
        serde_json::from_str(&String::from_utf8(out.stdout).unwrap()).unwrap();
    assert_eq!(json["effective"], serde_json::Value::Bool(false));
    assert_eq!(json["morozov"], "Unknown");
    assert_eq!(json["realization"]["kernel_dim"], 1);
    let dims = &json["dims"];
    assert_eq!(
        dims["normalizer"].as_u64().unwrap(),
        dims["h"].as_u64().unwrap() + dims["zero_locus_tangent"].as_u64().unwrap()
    );
}

#[test]
fn seed_environment_variable_is_honored() {
    let path = catalog_path("gl2-aff-C2");
    let with_env = Command::new(bin())
        .arg("analyze")
        .arg(&path)
        .env("LIEVF_SEED", "9")
        .output()
        .unwrap();
    let with_flag = Command::new(bin())
        .arg("analyze")
        .arg(&path)
        .arg("--seed")
        .arg("9")
        .env_remove("LIEVF_SEED")
        .output()
        .unwrap();
    assert_eq!(with_env.stdout, with_flag.stdout);
}

#[test]
fn serialized_normalization_round_trips_as_phi_related() {
    // normalize, serialize, re-read the map and transformed basis from the
    // JSON strings, and re-verify relatedness against the original fields
    for name in ["sl2-P1", "gl2-aff-C2", "sa2-C2"] {
        let text = std::fs::read_to_string(catalog_path(name)).unwrap();
        let input = AlgebraInput::from_json(&text).unwrap();
        let analysis = pipeline::normalize(&input, ModeChoice::Auto, 11, false).unwrap();
        let serialized = serde_json::to_string(&analysis.report).unwrap();
        let value: serde_json::Value = serde_json::from_str(&serialized).unwrap();
        let section = &value["normalization"];
        let target_names: Vec<String> = section["target_variables"]
            .as_array()
            .unwrap()
            .iter()
            .map(|v| v.as_str().unwrap().to_string())
            .collect();
        let algebra = input.algebra().unwrap();
        let source = algebra.chart().clone();
        let target = Chart::new(Vars::new(target_names));
        let entries: Vec<_> = section["map"]
            .as_array()
            .unwrap()
            .iter()
            .map(|s| parse_expression(s.as_str().unwrap(), source.vars()).unwrap())
            .collect();
        let map = RationalMap::new(source.clone(), target.clone(), entries).unwrap();
        let transformed: Vec<VectorField> = section["transformed_basis"]
            .as_array()
            .unwrap()
            .iter()
            .map(|coeffs| {
                let strs: Vec<&str> = coeffs
                    .as_array()
                    .unwrap()
                    .iter()
                    .map(|s| s.as_str().unwrap())
                    .collect();
                VectorField::parse(&target, &strs).unwrap()
            })
            .collect();
        for (v, w) in algebra.basis().iter().zip(&transformed) {
            assert!(
                verify_phi_related(v, &map, w),
                "{name}: relatedness lost in serialization"
            );
        }
    }
}
