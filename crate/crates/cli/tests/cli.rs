//! End-to-end tests of the `njp` binary: output formats, JSON round trips,
//! exit codes.

use std::process::{Command, Output};

use serde_json::Value;

fn njp(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_njp"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout_of(args: &[&str]) -> String {
    let out = njp(args);
    assert!(
        out.status.success(),
        "njp {args:?} failed: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).unwrap().trim().to_string()
}

fn json_of(args: &[&str]) -> Value {
    let mut full = args.to_vec();
    full.extend_from_slice(&["--format", "json"]);
    serde_json::from_str(&stdout_of(&full)).expect("valid JSON output")
}

#[test]
fn njp_prints_polygon() {
    assert_eq!(stdout_of(&["njp", "(y^2-x^3)^2-x^7"]), "{6|1}+{14|2}");
    assert_eq!(stdout_of(&["njp", "y^2-x^3"]), "{3|1}");
    assert_eq!(stdout_of(&["njp", "y - x^2"]), "{}");
}

#[test]
fn polygon_json_round_trips_into_other_verbs() {
    let polygon_json = stdout_of(&["njp", "(y^2-x^3)^2-x^7", "--format", "json"]);
    // The JSON emitted by njp is directly accepted by reduce/abrade/criteria.
    assert_eq!(stdout_of(&["reduce", &polygon_json]), "{8|1}");
    assert_eq!(stdout_of(&["abrade", &polygon_json]), "{3|1}");
    let verdicts = json_of(&["criteria", &polygon_json]);
    assert_eq!(verdicts["reduction"]["pass"], Value::Bool(false));
    assert_eq!(verdicts["reduction"]["condition"], 3);
    assert_eq!(verdicts["reduction"]["stage"], 1);
    assert_eq!(verdicts["gamma"]["condition"], 1);
}

#[test]
fn text_and_json_carry_the_same_polygon() {
    let text = stdout_of(&["njp", "(y^2-x^3)^2-4x^5y-x^7"]);
    let value = json_of(&["njp", "(y^2-x^3)^2-4x^5y-x^7"]);
    let terms: Vec<String> = value["terms"]
        .as_array()
        .unwrap()
        .iter()
        .map(|t| format!("{{{}|{}}}", t[0].as_str().unwrap(), t[1].as_str().unwrap()))
        .collect();
    assert_eq!(terms.join("+"), text);
    assert_eq!(value["horizontal"], Value::Bool(true));
    assert_eq!(value["vertical"], Value::Bool(true));
}

#[test]
fn irreducible_json_shape() {
    let v = json_of(&["irreducible", "(y^2-x^3)^2-x^7"]);
    assert_eq!(v["pass"], Value::Bool(false));
    assert_eq!(v["condition"], 1);
    assert_eq!(
        v["gamma"],
        Value::Array(vec!["4".into(), "6".into(), "14".into()])
    );
    assert_eq!(v["criteria"]["reduction"]["condition"], 3);

    let v = json_of(&["irreducible", "(y^2-x^3)^2-4x^5y-x^7"]);
    assert_eq!(v["pass"], Value::Bool(true));
    assert_eq!(v["characteristic"], serde_json::json!([4, 6, 7]));
    assert_eq!(v["semigroup"], serde_json::json!([4, 6, 13]));
}

#[test]
fn semigroup_verbs() {
    assert_eq!(stdout_of(&["merle", "2,3"]), "{3|1}");
    assert_eq!(stdout_of(&["merle", "4,6,13"]), "{6|1}+{13|2}");
    assert_eq!(stdout_of(&["char2sgp", "4,6,7"]), "4,6,13");
    assert_eq!(stdout_of(&["sgp2char", "4,6,13"]), "4,6,7");
    assert_eq!(stdout_of(&["bresinsky", "4,6,13"]), "valid");
    assert_eq!(
        stdout_of(&["bresinsky", "4,6,11"]),
        "fails condition 3 at index 1"
    );
    let v = json_of(&["bresinsky", "4,6,14"]);
    assert_eq!(v["valid"], Value::Bool(false));
    assert_eq!(v["condition"], 1);
}

#[test]
fn disc_polar_approx_verbs() {
    assert_eq!(stdout_of(&["disc", "y^2-x^3"]), "-4v - 4u^3");
    assert_eq!(stdout_of(&["polar", "(y^2-x^3)^2-x^7"]), "<6:1, 7:2>");
    assert_eq!(stdout_of(&["approx", "(y^2-x^3)^2-x^7", "2"]), "y^2 - x^3");
    let v = json_of(&["polar", "(y^3-x^5)^2-9x^11"]);
    assert_eq!(v["pairs"], serde_json::json!([["10", "2"], ["11", "3"]]));
}

#[test]
fn tree_verb_reads_roots_files() {
    let f_file = format!("{}/../../data/example1_f_roots.json", env!("CARGO_MANIFEST_DIR"));
    let out = stdout_of(&["tree", &f_file]);
    assert!(out.contains("polygon: {30|3}+{22|2}"), "got: {out}");
    assert!(out.contains("invariants: <10:3, 11:2>"));
    let g_file = format!("{}/../../data/example1_g_roots.json", env!("CARGO_MANIFEST_DIR"));
    let v = json_of(&["tree", &g_file]);
    assert_eq!(
        v["polygon"]["terms"],
        serde_json::json!([["20", "2"], ["33", "3"]])
    );
}

#[test]
fn svg_output() {
    let dir = std::env::temp_dir().join(format!("njp-svg-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("kuo.svg");
    let path_str = path.to_str().unwrap();
    stdout_of(&["njp", "(y^2-x^3)^2-x^7", "--svg", path_str]);
    let svg = std::fs::read_to_string(&path).unwrap();
    assert!(svg.starts_with("<svg"));
    assert!(svg.contains("</svg>"));
    // Edge labels carry the inclinations.
    assert!(svg.contains(">6<") && svg.contains(">7<"), "labels missing");
    std::fs::remove_dir_all(&dir).ok();
}

#[test]
fn exit_codes() {
    // Usage error: unknown verb.
    let out = njp(&["frobnicate", "x"]);
    assert_eq!(out.status.code(), Some(2));

    // Domain error in text mode: message on stderr, exit 1.
    let out = njp(&["merle", "4,6,14"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("Bresinsky"));

    // Domain error in JSON mode: machine-readable error object on stdout.
    let out = njp(&["merle", "4,6,14", "--format", "json"]);
    assert_eq!(out.status.code(), Some(1));
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["error"]["kind"], "not_plane_branch");

    // Malformed polynomial.
    let out = njp(&["njp", "y^2 + + x"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("position 6"));
}

#[test]
fn shear_note_on_stderr() {
    let out = njp(&["njp", "x"]);
    assert!(out.status.success());
    assert_eq!(String::from_utf8_lossy(&out.stdout).trim(), "{}");
    assert!(String::from_utf8_lossy(&out.stderr).contains("shears"));
}

#[test]
fn max_shear_bound_is_honored() {
    // f = x is rejected unsheared and needs two agreeing sheared samples;
    // a bound of 1 leaves only one candidate, so normalization fails.
    let out = njp(&["njp", "x", "--max-shear", "1"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("shears up to c = 1"));
    let out = njp(&["njp", "x", "--max-shear", "2"]);
    assert!(out.status.success());
}
