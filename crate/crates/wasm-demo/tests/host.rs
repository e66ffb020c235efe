//! The bindings are plain functions on the host target; test them natively.

use polychrome_wasm::{constants_json, graph_json, seymour_json};
use serde_json::Value;

fn parse(s: &str) -> Value {
    serde_json::from_str(s).expect("valid json")
}

#[test]
fn constants_carry_both_bounds() {
    let v = parse(&constants_json());
    assert!(v["sokal"]["value"].as_f64().unwrap() < 8.0);
    assert!(v["fernandez_procacci"]["value"].as_f64().unwrap() < 7.0);
}

#[test]
fn triangle_analysis_is_complete() {
    let v = parse(&graph_json("0 1\n1 2\n0 2\n"));
    assert_eq!(v["polynomial"]["display"], "q^3 - 3q^2 + 2q");
    assert_eq!(
        v["polynomial"]["coefficients"],
        serde_json::json!(["0", "2", "-3", "1"])
    );
    assert_eq!(v["roots"].as_array().unwrap().len(), 3);
    assert_eq!(v["pass"], true);
    assert_eq!(v["logcc"]["threshold_q0"], 21);
    assert_eq!(v["logcc"]["contradictions"].as_array().unwrap().len(), 0);
}

#[test]
fn parse_errors_are_reported_as_usage() {
    let v = parse(&graph_json("0 1\nbroken\n"));
    assert_eq!(v["class"], "usage");
    assert!(v["error"].as_str().unwrap().contains("line 2"));
}

#[test]
fn oversized_graphs_are_reported_as_budget() {
    let mut edges = String::new();
    for u in 0..30usize {
        for w in (u + 1)..30 {
            edges.push_str(&format!("{u} {w}\n"));
        }
    }
    let v = parse(&graph_json(&edges));
    assert_eq!(v["class"], "budget");
}

#[test]
fn family_table_finds_the_crossover() {
    let v = parse(&seymour_json(1, 40));
    assert_eq!(v["rows"].as_array().unwrap().len(), 40);
    assert_eq!(v["n_star"], 28);
    let rows = v["rows"].as_array().unwrap();
    for row in rows {
        let holds = row["inequality_holds"].as_bool().unwrap();
        let gap = row["gap"].as_f64().unwrap();
        assert_eq!(holds, row["n"].as_u64().unwrap() >= 28);
        // The float gap mirrors the exact verdict away from the boundary.
        if gap.abs() > 1e-6 {
            assert_eq!(holds, gap > 0.0);
        }
    }
}

#[test]
fn family_range_is_capped() {
    let v = parse(&seymour_json(1, 100_000));
    assert_eq!(v["class"], "usage");
}
