//! End-to-end tests of the binary: exit codes, fixtures, determinism.

use std::process::{Command, Output};

fn prym(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_prym"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout_json(out: &Output) -> serde_json::Value {
    serde_json::from_slice(&out.stdout).expect("valid JSON on stdout")
}

#[test]
fn curve_info_fixture() {
    let out = prym(&["curve-info", "--s", "0,0,1", "--t", "-6,5,0"]);
    assert!(out.status.success());
    let doc = stdout_json(&out);
    assert_eq!(doc["j_base"], "148176/25");
    assert_eq!(doc["j_dual_base"], "48384");
    assert_eq!(doc["disc_tau"], "400");
    assert_eq!(doc["fiber_report"]["count_sigma"], 6);
}

#[test]
fn curve_info_tau_check_of_53() {
    let out = prym(&["curve-info", "--s", "1,-1,0", "--t", "2,-3,0"]);
    assert!(out.status.success());
    let doc = stdout_json(&out);
    let tc: Vec<&str> = doc["tau_check"]
        .as_array()
        .unwrap()
        .iter()
        .map(|v| v.as_str().unwrap())
        .collect();
    assert_eq!(tc, ["-9", "-9", "1", "1"]);
    // the shared root of tau promotes a = -3 to a 1I4 fiber
    assert_eq!(doc["fiber_report"]["count_sigma"], 5);
}

#[test]
fn singular_curve_exits_one() {
    let out = prym(&["curve-info", "--s", "0,0,0", "--t", "0,0,0"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(!String::from_utf8_lossy(&out.stderr).is_empty());
}

#[test]
fn malformed_input_exits_one() {
    let out = prym(&["curve-info", "--s", "0,0", "--t", "0,0,1"]);
    assert_eq!(out.status.code(), Some(1));
    let out = prym(&["curve-info", "--s", "0,0,1/0", "--t", "0,0,1"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn fiber_has_twelve_parameters() {
    let out = prym(&[
        "fiber", "--s", "1,-1,0", "--t", "2,-3,0", "--target", "21952/9",
    ]);
    assert!(out.status.success());
    let doc = stdout_json(&out);
    assert_eq!(doc["total"], 12);
    assert_eq!(doc["side_F"].as_array().unwrap().len(), 6);
    assert_eq!(doc["side_K"].as_array().unwrap().len(), 6);
    let side_f: Vec<&str> = doc["side_F"]
        .as_array()
        .unwrap()
        .iter()
        .map(|v| v.as_str().unwrap())
        .collect();
    assert!(side_f.contains(&"inf"));
    assert!(side_f.contains(&"-3/2"));
}

#[test]
fn nodes_are_seed_independent() {
    let run = |seed: &str| {
        let out = prym(&["nodes", "--s", "0,0,1", "--t", "-6,5,0", "--seed", seed]);
        assert!(out.status.success());
        out.stdout
    };
    let a = run("0");
    let b = run("12345");
    assert_eq!(a, b);
    let doc: serde_json::Value = serde_json::from_slice(&a).unwrap();
    let nodes = doc["nodes"].as_array().unwrap();
    let found = nodes
        .iter()
        .any(|n| n["a1"] == "-1/3" && n["a2"] == "5/6");
    assert!(found, "printed node missing: {:?}", nodes);
}

#[test]
fn contains_fixture() {
    let out = prym(&[
        "contains", "--s", "0,0,1", "--t", "-6,5,0", "--u", "148176/25", "--v", "48384",
    ]);
    assert!(out.status.success());
    assert_eq!(stdout_json(&out)["contained"], false);
    let out = prym(&[
        "contains", "--s", "0,0,1", "--t", "-6,5,0", "--u", "48384", "--v", "148176/25",
    ]);
    assert_eq!(stdout_json(&out)["contained"], true);
}

#[test]
fn lattice_verify_fixture() {
    let out = prym(&["lattice-verify"]);
    assert!(out.status.success());
    let doc = stdout_json(&out);
    assert_eq!(doc["gram_matches_printed"], true);
    assert_eq!(doc["c_y_norm"], "4");
    assert_eq!(doc["glue_index_y"], "2");
    assert_eq!(doc["glue_index_a"], "2");
    assert_eq!(doc["invariant_comparison"]["verdict"], "inconclusive");
}

#[test]
fn sample_csv_round_trips() {
    let out = prym(&[
        "sample", "--s", "0,0,1", "--t", "-6,5,0", "--from", "-1", "--to", "1", "--step", "1/2",
        "--format", "csv",
    ]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("a,j_F,j_K"));
    let mut count = 0;
    for line in lines {
        let cells: Vec<&str> = line.split(',').collect();
        assert_eq!(cells.len(), 3);
        // every cell parses back exactly
        for cell in cells {
            prym_core::qalg::parse_proj(cell).unwrap();
        }
        count += 1;
    }
    assert_eq!(count, 5); // -1, -1/2, 0, 1/2, 1
    // pole rows carry the inf sentinel
    assert!(text.contains("0,1792,inf"));
}

#[test]
fn family_member_at_infinity_redirects() {
    let out = prym(&[
        "family-member", "--s", "0,0,1", "--t", "-6,5,0", "--a", "7",
    ]);
    assert!(out.status.success());
    let doc = stdout_json(&out);
    assert_eq!(doc["c0"], "-83"); // -(343 - 294 + 35 - 1)
}

#[test]
fn examples_replay_passes_with_expected_deviations() {
    let out = prym(&["examples"]);
    assert!(out.status.success());
    let doc = stdout_json(&out);
    assert_eq!(doc["all_passed"], true);
    let assertions = doc["assertions"].as_array().unwrap();
    let statuses: Vec<&str> = assertions
        .iter()
        .map(|a| a["status"].as_str().unwrap())
        .collect();
    assert!(statuses.iter().all(|s| *s != "FAIL"));
    assert_eq!(statuses.iter().filter(|s| **s == "EXPECTED-DEVIATION").count(), 2);
    assert!(statuses.iter().filter(|s| **s == "PASS").count() >= 12);
}

#[test]
fn output_is_deterministic() {
    let run = || prym(&["jfun", "--s", "1,-2,3", "--t", "-4,3,0"]).stdout;
    assert_eq!(run(), run());
}
