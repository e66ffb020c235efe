//! Browser bindings. Every export takes plain values and returns a JSON
//! string, so the page needs no generated glue beyond the module loader.
//! Errors come back as {"error": message, "class": usage|budget|internal}.

use serde_json::json;
use wasm_bindgen::prelude::*;

use polychrome::bounds::{check_root_bound, fp_constant, sokal_constant};
use polychrome::chromatic::chromatic_polynomial;
use polychrome::concavity::{logcc_scan, seymour_report, threshold_q0};
use polychrome::error::Error;
use polychrome::graph::parse_graph;
use polychrome::report::log10_big;

/// Largest family range the demo will tabulate in one call.
const MAX_FAMILY_ROWS: u32 = 2000;

fn error_json(err: &Error) -> String {
    let class = match err {
        Error::Parse { .. }
        | Error::InvalidParameter(_)
        | Error::InvalidVertex { .. }
        | Error::SelfLoop(_)
        | Error::Domain(_) => "usage",
        Error::ResourceLimit(_) => "budget",
        Error::Convergence { .. } => "internal",
    };
    json!({ "error": err.to_string(), "class": class }).to_string()
}

/// Both root-bound constants at tolerance 1e-9.
#[wasm_bindgen]
pub fn constants_json() -> String {
    let result = sokal_constant(1e-9).and_then(|k| Ok((k, fp_constant(1e-9)?)));
    match result {
        Ok((k, kstar)) => json!({
            "sokal": k,
            "fernandez_procacci": kstar,
        })
        .to_string(),
        Err(e) => error_json(&e),
    }
}

/// Full analysis of one edge-list graph: exact polynomial, all complex
/// roots with the degree bound, and an integer log-concavity scan up to
/// the guarantee threshold plus 20.
#[wasm_bindgen]
pub fn graph_json(edge_list: &str) -> String {
    let analysis = (|| {
        let g = parse_graph(edge_list)?;
        let kstar = fp_constant(1e-9)?.value;
        let poly = chromatic_polynomial(&g)?;
        let bound = check_root_bound(&g, kstar, 1e-9)?;
        let delta = g.max_degree();
        let hi = threshold_q0(delta, kstar) + 20;
        let scan = logcc_scan(&poly, 0, hi, delta, kstar)?;
        Ok::<_, Error>(json!({
            "n": g.n(),
            "m": g.m(),
            "max_degree": delta,
            "polynomial": {
                "display": poly.to_string(),
                "coefficients": poly,
            },
            "roots": bound.roots.roots.iter().map(|z| [z.re, z.im]).collect::<Vec<_>>(),
            "max_modulus": bound.max_modulus,
            "bound": bound.bound,
            "pass": bound.pass,
            "logcc": scan,
        })
        .to_string())
    })();
    analysis.unwrap_or_else(|e| error_json(&e))
}

/// Six-class family table with base-10 logs for plotting. The gap column
/// is log10(p5 * p7 / p6^2); the concavity failure is exactly gap > 0.
#[wasm_bindgen]
pub fn seymour_json(n_lo: u32, n_hi: u32) -> String {
    if n_hi.saturating_sub(n_lo) >= MAX_FAMILY_ROWS {
        return error_json(&Error::InvalidParameter(format!(
            "demo caps the range at {MAX_FAMILY_ROWS} rows"
        )));
    }
    match seymour_report(n_lo, n_hi) {
        Ok(report) => {
            let rows: Vec<_> = report
                .rows
                .iter()
                .map(|row| {
                    let l5 = log10_big(&row.p5);
                    let l6 = log10_big(&row.p6);
                    let l7 = log10_big(&row.p7);
                    json!({
                        "n": row.n,
                        "log_p5": l5,
                        "log_p6": l6,
                        "log_p7": l7,
                        "gap": l5 + l7 - 2.0 * l6,
                        "inequality_holds": row.inequality_holds,
                        "bounds_hold": row.bounds_hold,
                    })
                })
                .collect();
            json!({
                "rows": rows,
                "n_star": report.n_star,
                "note": report.degree_note,
            })
            .to_string()
        }
        Err(e) => error_json(&e),
    }
}
