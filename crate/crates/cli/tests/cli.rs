//! End-to-end tests of the `htg` binary: subcommands, exit codes and file
//! formats.

use htg_core::aut::are_isomorphic;
use htg_core::graph6::from_graph6;
use htg_core::named::NamedGraph;
use std::process::{Command, Output};

fn htg(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_htg"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(output: &Output) -> String {
    String::from_utf8(output.stdout.clone()).unwrap()
}

fn stderr(output: &Output) -> String {
    String::from_utf8(output.stderr.clone()).unwrap()
}

#[test]
fn classify_reports_pappus() {
    let out = htg(&["classify", "3", "6", "3"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("exceptional (Pappus)"), "{text}");
    assert!(text.contains("216"), "{text}");
    assert!(text.contains("normal Cayley:   no"), "{text}");
}

#[test]
fn classify_rejects_invalid_parameters_with_exit_2() {
    let out = htg(&["classify", "1", "6", "2"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("parity"), "{}", stderr(&out));

    let out = htg(&["classify", "0", "6", "0"]);
    assert_eq!(out.status.code(), Some(2));

    let out = htg(&["classify", "1", "6", "1"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("multigraph"), "{}", stderr(&out));
}

#[test]
fn classify_with_verify_agrees() {
    let out = htg(&["classify", "1", "18", "5", "--verify"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("regular"), "{text}");
    assert!(text.contains("verified:        true"), "{text}");
    assert!(text.contains("oracle:          agrees"), "{text}");
}

#[test]
fn classify_normalizes_with_a_notice() {
    let out = htg(&["classify", "1", "16", "11"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("note:"), "{text}");
    assert!(text.contains("Moebius-Kantor"), "{text}");
}

#[test]
fn classify_json_is_machine_readable() {
    let out = htg(&["classify", "1", "14", "5", "--json"]);
    assert!(out.status.success());
    let value: serde_json::Value = serde_json::from_str(stdout(&out).trim()).unwrap();
    assert_eq!(value["named_iso"], "Heawood");
    assert_eq!(value["aut_order"], "336");
    assert_eq!(value["c4"], true);
}

#[test]
fn census_csv_is_deterministic_and_contains_the_exceptional_rows() {
    let first = htg(&["census", "--max-order", "24"]);
    let second = htg(&["census", "--max-order", "24"]);
    assert!(first.status.success());
    assert_eq!(first.stdout, second.stdout, "census must be byte-identical");
    let text = stdout(&first);
    assert!(text.starts_with("# htg-census format 1\n"), "{text}");
    for needle in ["\"K3,3\"", "Heawood", "Pappus", "Moebius-Kantor", "cube"] {
        assert!(text.contains(needle), "missing {needle}");
    }
    // rows are sorted by (order, m, n, ell): first data row is the K3,3 one
    let first_row = text.lines().nth(2).unwrap();
    assert!(first_row.starts_with("1,6,3,3,6,4,exceptional"), "{first_row}");
}

#[test]
fn census_at_order_4_is_empty() {
    let out = htg(&["census", "--max-order", "4"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out).lines().count(), 2, "header lines only");
}

#[test]
fn census_jsonl_parses_line_by_line() {
    let out = htg(&["census", "--max-order", "18", "--format", "jsonl"]);
    assert!(out.status.success());
    let text = stdout(&out);
    let mut rows = 0;
    for line in text.lines() {
        let value: serde_json::Value = serde_json::from_str(line).unwrap();
        assert_eq!(
            value["order"].as_u64().unwrap(),
            value["m"].as_u64().unwrap() * value["n"].as_u64().unwrap()
        );
        rows += 1;
    }
    assert!(rows > 0);
}

#[test]
fn census_to_file_with_verification() {
    let dir = std::env::temp_dir().join("htg-cli-test");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("census18.csv");
    let out = htg(&[
        "census",
        "--max-order",
        "18",
        "--verify",
        "--jobs",
        "2",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    let content = std::fs::read_to_string(&path).unwrap();
    assert!(content.lines().skip(2).all(|l| l.ends_with(",true")), "{content}");
    std::fs::remove_file(&path).ok();
}

#[test]
fn verify_small_range_exits_zero() {
    let out = htg(&["verify", "--max-order", "36", "--jobs", "2"]);
    assert!(out.status.success(), "{}", stderr(&out));
    let text = stdout(&out);
    assert!(text.contains("classifier and oracle agree"), "{text}");
    assert!(text.contains("exceptional"), "{text}");
}

#[test]
fn verify_guard_requires_force() {
    let out = htg(&["verify", "--max-order", "300"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("--force"), "{}", stderr(&out));
}

#[test]
fn export_graph6_round_trips_to_k33() {
    let out = htg(&["export", "1", "6", "3", "--format", "graph6"]);
    assert!(out.status.success());
    let decoded = from_graph6(stdout(&out).trim()).unwrap();
    assert_eq!(decoded.order(), 6);
    let k33 = NamedGraph::K33.build().unwrap();
    assert!(are_isomorphic(&decoded, &k33).unwrap());
}

#[test]
fn export_dot_has_nine_edges_per_color() {
    let out = htg(&["export", "3", "6", "3", "--format", "dot"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert_eq!(text.matches(" -- ").count(), 27);
    for color in ["red", "blue", "green"] {
        assert_eq!(text.matches(&format!("[color={color}]")).count(), 9, "{color}");
    }
}

#[test]
fn export_json_carries_labels_and_colors() {
    let out = htg(&["export", "2", "8", "4", "--format", "json"]);
    assert!(out.status.success());
    let value: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(value["order"], 16);
    assert_eq!(value["adjacency"].as_array().unwrap().len(), 16);
    assert_eq!(value["edges"].as_array().unwrap().len(), 24);
    assert_eq!(value["vertex_labels"].as_array().unwrap().len(), 16);
    let colors: std::collections::HashSet<&str> = value["edges"]
        .as_array()
        .unwrap()
        .iter()
        .map(|e| e["color"].as_str().unwrap())
        .collect();
    assert_eq!(colors.len(), 3);
}

#[test]
fn export_rejects_invalid_parameters() {
    let out = htg(&["export", "1", "7", "3", "--format", "graph6"]);
    assert_eq!(out.status.code(), Some(2));
}
