//! End-to-end tests for the `mcda` binary: exit codes, diagnostics,
//! report content and byte-level determinism.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use mcda_core::casestudy::load_case_study;

fn mcda(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_mcda"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(output: &Output) -> String {
    String::from_utf8(output.stdout.clone()).expect("utf-8 stdout")
}

fn stderr(output: &Output) -> String {
    String::from_utf8(output.stderr.clone()).expect("utf-8 stderr")
}

fn write(path: &Path, content: &str) -> PathBuf {
    fs::write(path, content).expect("write test file");
    path.to_path_buf()
}

/// The embedded case-study matrix rendered as the CLI's CSV format.
fn study_csv() -> String {
    let study = load_case_study();
    let mut text = String::from("id,value_to_customer:benefit,value_from_customer:benefit\n");
    for (i, id) in study.matrix.alternatives().iter().enumerate() {
        text.push_str(&format!(
            "{id},{},{}\n",
            study.matrix.value(i, 0),
            study.matrix.value(i, 1)
        ));
    }
    text
}

fn questionnaire_header() -> String {
    let mut header = String::from("id");
    for i in 1..=50 {
        header.push_str(&format!(",q{i}"));
    }
    header.push('\n');
    header
}

fn questionnaire_row(id: &str, level: u8) -> String {
    let mut row = String::from(id);
    for _ in 0..50 {
        row.push_str(&format!(",{level}"));
    }
    row.push('\n');
    row
}

// ----- rank -----

#[test]
fn rank_study_matrix_with_published_weights_reports_the_full_pipeline() {
    let dir = tempfile::tempdir().unwrap();
    let matrix = write(&dir.path().join("study.csv"), &study_csv());

    let output = mcda(&[
        "rank",
        matrix.to_str().unwrap(),
        "--normalize",
        "none",
        "--weights",
        "0.4083,0.5917",
        "--aggregate",
        "copeland",
    ]);
    assert!(output.status.success(), "stderr: {}", stderr(&output));
    let text = stdout(&output);
    assert!(text.contains("weights (manual)"));
    assert!(text.contains("saw"));
    assert!(text.contains("topsis"));
    // the consensus over the recomputed SAW and TOPSIS rankings
    assert!(text.contains(
        "chain: C39 > C46 > C3 > C30 > C1 = C43 > C23 > C41 > C40 > C33 = C47 > C27 > \
         C13 > C35 > C42 > C12 > C31 > C20 > C44 > C28 = C45 > C6 > C2 > C18 > \
         C10 = C34 > C16 > C15 = C26 > C21 = C22 = C37 > C11 > C17 > C7 > C14 > C38 > \
         C24 > C32 > C19 > C4 > C25 > C29 = C8 > C9 > C5 > C36"
    ));
    // SAW reproduces the published ranking exactly under these weights
    assert!(text.contains("C39            0.921606      1"));
    assert!(text.contains("C36            0.045321     47"));
}

#[test]
fn rank_reports_are_byte_identical_across_runs() {
    let dir = tempfile::tempdir().unwrap();
    let matrix = write(&dir.path().join("study.csv"), &study_csv());
    let args = [
        "rank",
        matrix.to_str().unwrap(),
        "--normalize",
        "none",
        "--json",
    ];
    let first = mcda(&args);
    let second = mcda(&args);
    assert!(first.status.success());
    assert_eq!(first.stdout, second.stdout);
    // and the JSON parses with the documented sections
    let parsed: serde_json::Value = serde_json::from_slice(&first.stdout).unwrap();
    assert!(parsed.get("weights").is_some());
    assert!(parsed.get("saw").is_some());
    assert!(parsed.get("topsis").is_some());
    assert!(parsed.get("copeland").is_some());
}

#[test]
fn rank_single_alternative_gets_rank_one_with_uniform_weights() {
    let dir = tempfile::tempdir().unwrap();
    let matrix = write(
        &dir.path().join("single.csv"),
        "id,quality,price:cost\nonly,5.0,3.0\n",
    );
    let output = mcda(&["rank", matrix.to_str().unwrap(), "--json"]);
    assert!(output.status.success(), "stderr: {}", stderr(&output));
    let parsed: serde_json::Value = serde_json::from_slice(&output.stdout).unwrap();
    assert_eq!(parsed["saw"][0]["rank"], 1);
    assert_eq!(parsed["topsis"]["entries"][0]["rank"], 1);
    assert_eq!(parsed["weights"]["mode"], "uniform");
    let notes = parsed["notes"].as_array().unwrap();
    assert!(notes
        .iter()
        .any(|n| n.as_str().unwrap().contains("single alternative")));
}

#[test]
fn rank_rejects_malformed_csv_with_a_line_number() {
    let dir = tempfile::tempdir().unwrap();
    let matrix = write(
        &dir.path().join("bad.csv"),
        "id,a,b\nx,1.0,2.0\ny,oops,4.0\n",
    );
    let output = mcda(&["rank", matrix.to_str().unwrap()]);
    assert!(!output.status.success());
    let diagnostic = stderr(&output);
    assert!(diagnostic.contains(":3:"), "diagnostic: {diagnostic}");
    assert!(diagnostic.contains("oops"));
}

#[test]
fn rank_rejects_wrong_field_count_with_a_line_number() {
    let dir = tempfile::tempdir().unwrap();
    let matrix = write(&dir.path().join("bad.csv"), "id,a,b\nx,1.0\n");
    let output = mcda(&["rank", matrix.to_str().unwrap()]);
    assert!(!output.status.success());
    assert!(stderr(&output).contains(":2:"));
}

#[test]
fn rank_rejects_copeland_over_a_single_method() {
    let dir = tempfile::tempdir().unwrap();
    let matrix = write(&dir.path().join("m.csv"), "id,a\nx,1.0\ny,2.0\n");
    let output = mcda(&[
        "rank",
        matrix.to_str().unwrap(),
        "--methods",
        "saw",
        "--aggregate",
        "copeland",
    ]);
    assert!(!output.status.success());
    assert!(stderr(&output).contains("contradiction"));
}

#[test]
fn rank_honors_a_config_file_and_flag_overrides() {
    let dir = tempfile::tempdir().unwrap();
    let matrix = write(
        &dir.path().join("m.csv"),
        "id,a,b\nx,1.0,9.0\ny,4.0,3.0\nz,2.0,7.0\n",
    );
    let config = write(
        &dir.path().join("config.json"),
        r#"{"weights": [0.25, 0.75], "methods": ["saw"], "normalize": "minmax"}"#,
    );
    let output = mcda(&[
        "rank",
        matrix.to_str().unwrap(),
        "--config",
        config.to_str().unwrap(),
        "--json",
    ]);
    assert!(output.status.success(), "stderr: {}", stderr(&output));
    let parsed: serde_json::Value = serde_json::from_slice(&output.stdout).unwrap();
    assert_eq!(parsed["weights"]["mode"], "manual");
    assert!(parsed.get("topsis").is_none());
    // flags override the file
    let output = mcda(&[
        "rank",
        matrix.to_str().unwrap(),
        "--config",
        config.to_str().unwrap(),
        "--methods",
        "saw,topsis",
        "--json",
    ]);
    let parsed: serde_json::Value = serde_json::from_slice(&output.stdout).unwrap();
    assert!(parsed.get("topsis").is_some());
}

#[test]
fn rank_rejects_manual_weights_that_do_not_sum_to_one() {
    let dir = tempfile::tempdir().unwrap();
    let matrix = write(&dir.path().join("m.csv"), "id,a,b\nx,1.0,2.0\ny,3.0,4.0\n");
    let output = mcda(&[
        "rank",
        matrix.to_str().unwrap(),
        "--weights",
        "0.5,0.6",
    ]);
    assert!(!output.status.success());
    assert!(stderr(&output).contains("sum to 1"));
}

// ----- weights -----

#[test]
fn weights_command_reports_the_entropy_trace() {
    let dir = tempfile::tempdir().unwrap();
    let matrix = write(&dir.path().join("study.csv"), &study_csv());
    let output = mcda(&["weights", matrix.to_str().unwrap(), "--json"]);
    assert!(output.status.success());
    let parsed: serde_json::Value = serde_json::from_slice(&output.stdout).unwrap();
    let weights = parsed["weights"]["weights"].as_array().unwrap();
    // direct entropy over the study matrix (not the published grid route)
    assert!((weights[0].as_f64().unwrap() - 0.30358680569453783).abs() < 1e-12);
    assert!((weights[1].as_f64().unwrap() - 0.69641319430546220).abs() < 1e-12);
    assert!(parsed["weights"]["entropies"].is_array());
    assert!(parsed["weights"]["divergences"].is_array());
}

// ----- value -----

#[test]
fn value_composes_clv_questionnaire_and_profile() {
    let dir = tempfile::tempdir().unwrap();
    let periods = write(
        &dir.path().join("periods.csv"),
        "id,period,price,cost,retention,discount_rate,acquisition_cost\n\
         acme,0,100,60,1.0,0.1,10\n",
    );
    let questionnaire = write(
        &dir.path().join("q.csv"),
        &format!("{}{}", questionnaire_header(), questionnaire_row("acme", 3)),
    );
    let output = mcda(&[
        "value",
        "--periods",
        periods.to_str().unwrap(),
        "--questionnaire",
        questionnaire.to_str().unwrap(),
        "--json",
    ]);
    assert!(output.status.success(), "stderr: {}", stderr(&output));
    let parsed: serde_json::Value = serde_json::from_slice(&output.stdout).unwrap();
    let row = &parsed["segments"]["rows"][0];
    assert_eq!(row["id"], "acme");
    assert_eq!(row["lifetime_value"], 30.0);
    assert_eq!(row["questionnaire_total"], 250);
    // single customer sits exactly on its own medians: high on both axes
    assert_eq!(row["profile"], "Noteworthy");
}

#[test]
fn value_two_customers_split_across_the_median() {
    let dir = tempfile::tempdir().unwrap();
    let periods = write(
        &dir.path().join("periods.csv"),
        "id,period,price,cost,retention,discount_rate,acquisition_cost\n\
         low,0,100,60,1.0,0.1,10\n\
         high,0,50,10,1.0,0.0,0\n",
    );
    let questionnaire = write(
        &dir.path().join("q.csv"),
        &format!(
            "{}{}{}",
            questionnaire_header(),
            questionnaire_row("low", 3),
            questionnaire_row("high", 5)
        ),
    );
    let output = mcda(&[
        "value",
        "--periods",
        periods.to_str().unwrap(),
        "--questionnaire",
        questionnaire.to_str().unwrap(),
        "--json",
    ]);
    assert!(output.status.success(), "stderr: {}", stderr(&output));
    let parsed: serde_json::Value = serde_json::from_slice(&output.stdout).unwrap();
    // medians: firm axis (30 + 40) / 2 = 35, customer axis (250 + 450) / 2 = 350
    assert_eq!(parsed["segments"]["thresholds"]["firm"], 35.0);
    assert_eq!(parsed["segments"]["thresholds"]["customer"], 350.0);
    let rows = parsed["segments"]["rows"].as_array().unwrap();
    assert_eq!(rows[0]["id"], "low");
    assert_eq!(rows[0]["lifetime_value"], 30.0);
    assert_eq!(rows[0]["profile"], "Passenger");
    assert_eq!(rows[1]["id"], "high");
    assert_eq!(rows[1]["lifetime_value"], 40.0);
    assert_eq!(rows[1]["profile"], "Noteworthy");
}

#[test]
fn value_supports_the_perception_file_for_the_customer_axis() {
    let dir = tempfile::tempdir().unwrap();
    let periods = write(
        &dir.path().join("periods.csv"),
        "id,period,price,cost,retention,discount_rate,acquisition_cost\n\
         acme,0,100,60,1.0,0.1,10\n",
    );
    let questionnaire = write(
        &dir.path().join("q.csv"),
        &format!("{}{}", questionnaire_header(), questionnaire_row("acme", 3)),
    );
    let perception = write(
        &dir.path().join("p.csv"),
        "id,parameter,importance,benefit,cost\n\
         acme,support,1.0,4.0,2.0\n\
         acme,delivery,0.5,3.0,2.0\n",
    );
    let output = mcda(&[
        "value",
        "--periods",
        periods.to_str().unwrap(),
        "--questionnaire",
        questionnaire.to_str().unwrap(),
        "--perception",
        perception.to_str().unwrap(),
        "--json",
    ]);
    assert!(output.status.success(), "stderr: {}", stderr(&output));
    let parsed: serde_json::Value = serde_json::from_slice(&output.stdout).unwrap();
    let row = &parsed["segments"]["rows"][0];
    // 1.0 * (4-2)/2 + 0.5 * (3-2)/2 = 1.25
    assert_eq!(row["value_to_customer"], 1.25);
    assert_eq!(row["value_to_axis"], 1.25);
}

#[test]
fn value_rejects_mismatched_ids_and_bad_likert_levels() {
    let dir = tempfile::tempdir().unwrap();
    let periods = write(
        &dir.path().join("periods.csv"),
        "id,period,price,cost,retention,discount_rate,acquisition_cost\n\
         acme,0,100,60,1.0,0.1,10\n",
    );
    let other = write(
        &dir.path().join("q.csv"),
        &format!("{}{}", questionnaire_header(), questionnaire_row("umbrella", 3)),
    );
    let output = mcda(&[
        "value",
        "--periods",
        periods.to_str().unwrap(),
        "--questionnaire",
        other.to_str().unwrap(),
    ]);
    assert!(!output.status.success());
    assert!(stderr(&output).contains("ids differ"));

    let bad = write(
        &dir.path().join("bad.csv"),
        &format!("{}{}", questionnaire_header(), questionnaire_row("acme", 6)),
    );
    let output = mcda(&[
        "value",
        "--periods",
        periods.to_str().unwrap(),
        "--questionnaire",
        bad.to_str().unwrap(),
    ]);
    assert!(!output.status.success());
    assert!(stderr(&output).contains("likert level 6"));
}

#[test]
fn value_rejects_an_empty_periods_file() {
    let dir = tempfile::tempdir().unwrap();
    let periods = write(
        &dir.path().join("periods.csv"),
        "id,period,price,cost,retention,discount_rate,acquisition_cost\n",
    );
    let questionnaire = write(
        &dir.path().join("q.csv"),
        &format!("{}{}", questionnaire_header(), questionnaire_row("acme", 3)),
    );
    let output = mcda(&[
        "value",
        "--periods",
        periods.to_str().unwrap(),
        "--questionnaire",
        questionnaire.to_str().unwrap(),
    ]);
    assert!(!output.status.success());
    assert!(stderr(&output).contains("empty input"));
}

// ----- segment -----

#[test]
fn segment_assigns_each_unit_square_corner_its_own_profile() {
    let dir = tempfile::tempdir().unwrap();
    let points = write(
        &dir.path().join("points.csv"),
        "id,value_from,value_to\nll,0,0\nlh,0,1\nhl,1,0\nhh,1,1\n",
    );
    let output = mcda(&[
        "segment",
        points.to_str().unwrap(),
        "--thresholds",
        "0.5,0.5",
        "--json",
    ]);
    assert!(output.status.success(), "stderr: {}", stderr(&output));
    let parsed: serde_json::Value = serde_json::from_slice(&output.stdout).unwrap();
    let rows = parsed["segments"]["rows"].as_array().unwrap();
    let profiles: Vec<&str> = rows.iter().map(|r| r["profile"].as_str().unwrap()).collect();
    assert_eq!(
        profiles,
        ["Passenger", "CostToServe", "Challenger", "Noteworthy"]
    );
}

// ----- reproduce-paper -----

#[test]
fn reproduce_paper_reports_gates_and_exits_nonzero_on_documented_failures() {
    let output = mcda(&["reproduce-paper"]);
    // two gates fail by design: the published record itself is
    // inconsistent there, and the report says so
    assert_eq!(output.status.code(), Some(1));
    let text = stdout(&output);
    assert!(text.contains("[PASS] weights"));
    assert!(text.contains("[PASS] weighted-matrix"));
    assert!(text.contains("[PASS] saw"));
    assert!(text.contains("[FAIL] topsis"));
    assert!(text.contains("[FAIL] consensus-chain"));
    assert!(text.contains("errata:"));
    assert!(text.contains("29.8 percent"));
}

#[test]
fn reproduce_paper_json_is_deterministic_and_schema_complete() {
    let first = mcda(&["reproduce-paper", "--json"]);
    let second = mcda(&["reproduce-paper", "--json"]);
    assert_eq!(first.stdout, second.stdout);
    let parsed: serde_json::Value = serde_json::from_slice(&first.stdout).unwrap();
    let stages = parsed["stages"].as_array().unwrap();
    assert_eq!(stages.len(), 5);
    for stage in stages {
        assert!(stage.get("stage").is_some());
        assert!(stage.get("passed").is_some());
        assert!(stage.get("detail").is_some());
        assert!(stage.get("mismatches").is_some());
    }
    assert!(parsed["errata"].as_array().unwrap().len() == 5);
    assert!(parsed["exclusions"].as_array().unwrap().len() == 1);
    assert_eq!(parsed["all_gates_pass"], false);
}

#[test]
fn reproduce_paper_with_zero_tolerance_fails_every_numeric_gate() {
    let output = mcda(&["reproduce-paper", "--tolerance-override", "0"]);
    assert_eq!(output.status.code(), Some(1));
    let text = stdout(&output);
    assert!(text.contains("[FAIL] weights"));
    assert!(text.contains("[FAIL] weighted-matrix"));
    assert!(text.contains("[FAIL] saw"));
}
