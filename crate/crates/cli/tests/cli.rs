//! End-to-end tests of the `ncsieve` binary: exit codes, document shape,
//! determinism, and the worked examples each subcommand must reproduce.

use std::process::{Command, Output};

use serde_json::Value;

fn ncsieve(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_ncsieve"))
        .args(args)
        .output()
        .expect("spawn ncsieve")
}

fn json_run(args: &[&str]) -> (Value, i32) {
    let mut full = args.to_vec();
    full.push("--format");
    full.push("json");
    let out = ncsieve(&full);
    let doc: Value = serde_json::from_slice(&out.stdout).expect("valid JSON document");
    (doc, out.status.code().expect("exit code"))
}

#[test]
fn group_info_reports_invariants_and_catalan_value() {
    let (doc, code) = json_run(&["group-info", "A3"]);
    assert_eq!(code, 0);
    assert_eq!(doc["status"], "pass");
    assert_eq!(doc["group"]["h"], 4);
    assert_eq!(doc["group"]["degrees"], serde_json::json!([2, 3, 4]));
    assert_eq!(doc["group"]["order"], 24);
    assert_eq!(doc["group"]["reflection_count"], 6);
    assert_eq!(doc["group"]["center_order"], 1);
    assert_eq!(doc["result"]["catalan"]["at_one"], 14);
}

#[test]
fn group_info_echoes_catalog_degrees() {
    let (doc, code) = json_run(&["group-info", "E8"]);
    assert_eq!(code, 0);
    assert_eq!(
        doc["group"]["degrees"],
        serde_json::json!([2, 8, 12, 14, 18, 20, 24, 30])
    );
    assert_eq!(doc["group"]["reflection_count"], 120);
}

#[test]
fn group_info_rejects_badly_generated_groups() {
    let (doc, code) = json_run(&["group-info", "G(4,2,3)"]);
    assert_eq!(code, 2);
    assert_eq!(doc["status"], "error");
    let message = doc["result"]["error"].as_str().unwrap();
    assert!(message.contains("well-generated"), "got: {message}");
}

#[test]
fn csp_nc_conjugation_passes_on_a3() {
    let (doc, code) = json_run(&["csp-nc", "A3"]);
    assert_eq!(code, 0);
    assert_eq!(doc["status"], "pass");
    assert_eq!(doc["result"]["claim_status"], "proved");
    assert_eq!(doc["result"]["csp"]["declared_order"], 4);
    assert_eq!(doc["result"]["csp"]["pass"], true);
    assert_eq!(doc["result"]["set_size"], 14);
}

#[test]
fn csp_nc_kreweras_is_conjecture_labeled_with_doubled_order() {
    let (doc, code) = json_run(&["csp-nc", "B2", "--action", "kreweras"]);
    assert_eq!(code, 0);
    assert_eq!(doc["result"]["claim_status"], "conjectured");
    assert_eq!(doc["result"]["csp"]["declared_order"], 8);
    assert_eq!(doc["result"]["csp"]["pass"], true);
}

#[test]
fn csp_nc_tuple_actions_use_their_declared_orders() {
    let (armstrong, code) = json_run(&["csp-nc", "A2", "--m", "2", "--action", "armstrong"]);
    assert_eq!(code, 0);
    assert_eq!(armstrong["result"]["set_size"], 12);
    assert_eq!(armstrong["result"]["csp"]["declared_order"], 6);
    let (rotation, code) = json_run(&["csp-nc", "A2", "--m", "2", "--action", "rotation"]);
    assert_eq!(code, 0);
    assert_eq!(rotation["result"]["set_size"], 12);
    assert_eq!(rotation["result"]["csp"]["declared_order"], 9);
}

#[test]
fn csp_nc_lattice_actions_require_m_equal_one() {
    let (doc, code) = json_run(&["csp-nc", "A2", "--m", "2", "--action", "conj"]);
    assert_eq!(code, 2);
    assert_eq!(doc["status"], "error");
}

#[test]
fn csp_nc_respects_the_size_budget() {
    let (doc, code) = json_run(&["csp-nc", "A3", "--max-group-size", "10"]);
    assert_eq!(code, 2);
    let message = doc["result"]["error"].as_str().unwrap();
    assert!(message.contains("size limit"), "got: {message}");
}

#[test]
fn csp_classical_full_family_and_refined_type() {
    let (doc, code) = json_run(&["csp-classical", "5"]);
    assert_eq!(code, 0);
    assert_eq!(doc["result"]["csp"]["rows"][0]["fixed"], 42);
    assert_eq!(doc["result"]["csp"]["pass"], true);
    let (doc, code) = json_run(&["csp-classical", "6", "--block-type", "2:3"]);
    assert_eq!(code, 0);
    assert_eq!(doc["result"]["count"], 5);
    assert_eq!(doc["result"]["csp"]["pass"], true);
    assert_eq!(doc["result"]["block_type"], "2:3");
}

#[test]
fn csp_classical_rejects_malformed_block_types() {
    let (doc, code) = json_run(&["csp-classical", "6", "--block-type", "2-3"]);
    assert_eq!(code, 2);
    assert_eq!(doc["status"], "error");
}

#[test]
fn csp_panyushev_passes_with_order_dividing_2h() {
    let (doc, code) = json_run(&["csp-panyushev", "G2"]);
    assert_eq!(code, 0);
    assert_eq!(doc["result"]["antichain_count"], 8);
    assert_eq!(doc["result"]["order_divides_2h"], true);
    assert_eq!(doc["result"]["claim_status"], "conjectured");
    assert_eq!(doc["result"]["csp"]["pass"], true);
}

#[test]
fn torus_reports_orbit_count_and_fixed_table() {
    let (doc, code) = json_run(&["torus", "A2", "--p", "4"]);
    assert_eq!(code, 0);
    assert_eq!(doc["result"]["orbit_count"], 5);
    assert_eq!(doc["result"]["element_count"], 6);
    let rows = doc["result"]["fixed_counts"].as_array().unwrap();
    assert_eq!(rows.len(), 6);
    let identity_fixed: Vec<&Value> = rows
        .iter()
        .filter(|row| row["element"] == "[[1, 0], [0, 1]]")
        .map(|row| &row["fixed"])
        .collect();
    assert_eq!(identity_fixed, vec![&serde_json::json!(16)]);
}

#[test]
fn restriction_reports_equal_interval_sides() {
    let (doc, code) = json_run(&["restriction", "B2", "--d", "4"]);
    assert_eq!(code, 0);
    assert_eq!(doc["status"], "pass");
    assert_eq!(doc["result"]["intersection_size"], 2);
    assert_eq!(doc["result"]["restricted_interval_size"], 2);
    assert_eq!(doc["result"]["equal"], true);
}

#[test]
fn verify_all_at_rank_one_reports_the_known_red_item() {
    let (doc, code) = json_run(&["verify-all", "--max-rank", "1"]);
    assert_eq!(code, 1, "the toral character identity fails and is proved-status");
    assert_eq!(doc["status"], "fail");
    assert_eq!(doc["result"]["totals"]["items"], 22);
    assert_eq!(doc["result"]["totals"]["fail_proved"], 1);
    assert_eq!(doc["result"]["totals"]["error"], 0);
    let failing: Vec<&str> = doc["result"]["items"]
        .as_array()
        .unwrap()
        .iter()
        .filter(|item| item["outcome"] == "fail")
        .map(|item| item["key"].as_str().unwrap())
        .collect();
    assert_eq!(failing, vec!["c13a:A1"]);
}

#[test]
fn verify_all_with_impossible_budget_errors_out() {
    let (doc, code) = json_run(&["verify-all", "--max-rank", "1", "--max-group-size", "1"]);
    assert_eq!(code, 2);
    assert_eq!(doc["status"], "error");
    assert!(doc["result"]["totals"]["error"].as_u64().unwrap() > 0);
}

#[test]
fn identical_runs_differ_only_in_wall_time() {
    let (mut first, _) = json_run(&["csp-nc", "B2", "--action", "kreweras"]);
    let (mut second, _) = json_run(&["csp-nc", "B2", "--action", "kreweras"]);
    first.as_object_mut().unwrap().remove("wall_ms");
    second.as_object_mut().unwrap().remove("wall_ms");
    assert_eq!(first, second);
}

#[test]
fn json_documents_have_the_contract_keys_in_sorted_byte_order() {
    let out = ncsieve(&["group-info", "B3", "--format", "json"]);
    let text = String::from_utf8(out.stdout).unwrap();
    let expected = ["command", "findings", "group", "result", "status", "version", "wall_ms"];
    let positions: Vec<usize> = expected
        .iter()
        .map(|key| text.find(&format!("\"{key}\"")).expect("key present"))
        .collect();
    assert!(positions.windows(2).all(|w| w[0] < w[1]), "keys not sorted: {positions:?}");
}

#[test]
fn unknown_flags_are_rejected() {
    let out = ncsieve(&["group-info", "A3", "--bogus"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn text_format_prints_the_same_facts() {
    let out = ncsieve(&["group-info", "A3"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("status: pass"));
    assert!(text.contains("degrees: [2, 3, 4]"));
    assert!(text.contains("at_one: 14"));
}
