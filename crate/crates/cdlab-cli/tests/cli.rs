//! End-to-end runs of the binary: canonical text output, JSON mirrors,
//! exit codes, and the environment cap.

use std::process::{Command, Output};

fn cdlab(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_cdlab"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(output: &Output) -> String {
    String::from_utf8(output.stdout.clone()).expect("utf8 stdout")
}

#[test]
fn diamond_cd_example() {
    let out = cdlab(&["diamond", "--mode=cd", "cd", "dc"]);
    assert!(out.status.success());
    assert_eq!(
        stdout(&out).trim(),
        "ccdcc + ccdd + cdccc + 2*cdcd + 3*cddc + 2*dccd + 4*dcdc + 2*ddcc + 4*ddd"
    );
}

#[test]
fn diamond_methods_agree_and_unit_works() {
    for method in ["recursion", "paths"] {
        let out = cdlab(&["diamond", "--mode=cd", &format!("--method={method}"), "c", "1"]);
        assert!(out.status.success());
        assert_eq!(stdout(&out).trim(), "c", "method {method}");
    }
    let a = cdlab(&["diamond", "--mode=ab", "a", "b"]);
    assert_eq!(stdout(&a).trim(), "ab + ba");
    // Bilinear extension through the path method.
    let r = cdlab(&["diamond", "--mode=cd", "--method=recursion", "c + d", "2*c"]);
    let p = cdlab(&["diamond", "--mode=cd", "--method=paths", "c + d", "2*c"]);
    assert_eq!(stdout(&r), stdout(&p));
}

#[test]
fn diamond_parse_error_is_usage_error() {
    let out = cdlab(&["diamond", "--mode=cd", "cd", "ax"]);
    assert_eq!(out.status.code(), Some(2));
    let out = cdlab(&["diamond", "--mode=nope", "c", "c"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn gamma_listing_is_deterministic_with_table_weights() {
    let out = cdlab(&["paths", "enumerate", "--family=gamma", "cd", "dc"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("paths: 13"));
    assert!(text.contains("R D U D  ->  2*cdcd"));
    assert!(text.contains("UU D RR  ->  2*ddd"));
    assert!(text.ends_with(
        "total: ccdcc + ccdd + cdccc + 2*cdcd + 3*cddc + 2*dccd + 4*dcdc + 2*ddcc + 4*ddd\n"
    ));
    let again = cdlab(&["paths", "enumerate", "--family=gamma", "cd", "dc"]);
    assert_eq!(stdout(&again), text);
}

#[test]
fn omega_by_corner_lists_paths_only() {
    let out = cdlab(&["paths", "enumerate", "--family=omega", "--p=1", "--q=0"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("paths: 1"));
    assert!(text.lines().last().unwrap() == "R");
}

#[test]
fn lambda_listing_totals_the_c_power_product() {
    let out = cdlab(&["paths", "enumerate", "--family=lambda", "--p=1", "--q=1", "--json"]);
    assert!(out.status.success());
    let doc: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(doc["count"], 2);
    assert_eq!(doc["total"]["terms"][0]["word"], "cc");
    assert_eq!(doc["total"]["terms"][1]["coeff"], 2);
}

#[test]
fn render_writes_svg_and_rejects_unknown_format() {
    let dir = std::env::temp_dir().join("cdlab-cli-test");
    std::fs::create_dir_all(&dir).unwrap();
    let out_file = dir.join("figure.svg");
    let out = cdlab(&[
        "paths",
        "render",
        "--family=gamma",
        "cd",
        "dc",
        "--out",
        out_file.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    let svg = std::fs::read_to_string(&out_file).unwrap();
    assert!(svg.starts_with("<svg"));
    assert_eq!(svg.matches("<g transform").count(), 13);

    let bad = cdlab(&[
        "paths",
        "render",
        "--family=gamma",
        "cd",
        "dc",
        "--out",
        out_file.to_str().unwrap(),
        "--format=png",
    ]);
    assert_eq!(bad.status.code(), Some(2));
}

#[test]
fn poset_queries() {
    let out = cdlab(&["poset", "cdindex", "boolean:3"]);
    assert_eq!(stdout(&out).trim(), "cc + d");
    let out = cdlab(&["poset", "cdindex", "--op=diamond", "boolean:2", "boolean:2"]);
    assert_eq!(stdout(&out).trim(), "cc + 2*d");
    let out = cdlab(&["poset", "eulerian", "butterfly:4"]);
    assert_eq!(stdout(&out).trim(), "true");
    let out = cdlab(&["poset", "eulerian", "chain:3"]);
    assert_eq!(stdout(&out).trim(), "false");
    let out = cdlab(&["poset", "cdindex", "chain:3"]);
    assert_eq!(stdout(&out).trim(), "NotExpressible");
    assert!(out.status.success());
}

#[test]
fn poset_flagvector_text_and_json() {
    let out = cdlab(&["poset", "flagvector", "boolean:3"]);
    let text = stdout(&out);
    assert!(text.contains("f{} = 1"));
    assert!(text.contains("f{1} = 3"));
    assert!(text.contains("f{1,2} = 6"));
    let out = cdlab(&["poset", "flagvector", "--h", "boolean:3"]);
    assert!(stdout(&out).contains("h{1,2} = 1"));
    let out = cdlab(&["poset", "flagvector", "boolean:3", "--json"]);
    let doc: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(doc["n"], 2);
    assert_eq!(doc["counts"][3]["count"], 6);
}

#[test]
fn poset_product_round_trips_through_file() {
    let out = cdlab(&["poset", "product", "--op=diamond", "boolean:2", "boolean:2"]);
    assert!(out.status.success());
    let dir = std::env::temp_dir().join("cdlab-cli-test");
    std::fs::create_dir_all(&dir).unwrap();
    let file = dir.join("square.json");
    std::fs::write(&file, stdout(&out)).unwrap();
    let out = cdlab(&["poset", "cdindex", file.to_str().unwrap()]);
    assert_eq!(stdout(&out).trim(), "cc + 2*d");
}

#[test]
fn verify_exit_codes_and_report_shape() {
    let out = cdlab(&["verify", "slone", "--max=3"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("checked: 16"));
    assert!(text.contains("all 16 checks OK"));

    let out = cdlab(&["verify", "prop32", "--json"]);
    assert_eq!(out.status.code(), Some(0));
    let doc: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(doc["suite"], "prop32");
    assert_eq!(doc["checked"], 100);
    assert_eq!(doc["mismatches"].as_array().unwrap().len(), 0);

    let out = cdlab(&["verify", "unknown-suite"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn element_cap_env_var_is_honored() {
    let out = Command::new(env!("CARGO_BIN_EXE_cdlab"))
        .args(["poset", "cdindex", "boolean:5"])
        .env("CDLAB_MAX_ELEMENTS", "10")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(err.contains("above the cap of 10"));
}
