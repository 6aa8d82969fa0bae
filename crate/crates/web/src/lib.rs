//! JSON-over-strings bindings for the static demo page in `www/`.
//!
//! Every entry point takes graph text (graph6 or edge list) and returns a
//! JSON object. Failures come back as `{"error": "..."}` rather than as
//! exceptions.

use minorkit::domatic::{domatic_number, find_disjoint_dominating_sets};
use minorkit::formats::{format_graph6, parse_graph_text};
use minorkit::minor::{find_clique_minor, hadwiger_number, Hadwiger, MinorModel, SearchBudget, SearchOutcome};
use minorkit::reduce::{domatic_witness_to_minor_model, reduce_domatic_to_hadwiger, DomaticReduction};
use minorkit::{Graph, VertexSet};
use serde_json::{json, Value};
use wasm_bindgen::prelude::wasm_bindgen;

fn sets(sets: &[VertexSet]) -> Value {
    sets.iter().map(|s| s.as_slice().to_vec()).collect()
}

fn edges(g: &Graph) -> Value {
    g.edges().into_iter().map(|(u, v)| json!([u, v])).collect()
}

fn error(e: impl std::fmt::Display) -> String {
    json!({ "error": e.to_string() }).to_string()
}

fn model_json(m: &MinorModel) -> Value {
    sets(&m.branch_sets)
}

/// Domatic number of the graph with one optimal partition.
#[wasm_bindgen]
pub fn domatic(graph: &str) -> String {
    let g = match parse_graph_text(graph) {
        Ok(g) => g,
        Err(e) => return error(e),
    };
    match domatic_number(&g) {
        Ok((value, family)) => json!({ "n": g.n(), "value": value, "sets": sets(&family.sets) }).to_string(),
        Err(e) => error(e),
    }
}

/// Hadwiger number when `h` is absent, otherwise whether `K_h` is a minor.
#[wasm_bindgen]
pub fn hadwiger(graph: &str, h: Option<u32>, budget: u32) -> String {
    let g = match parse_graph_text(graph) {
        Ok(g) => g,
        Err(e) => return error(e),
    };
    if budget == 0 {
        return error("budget must be positive");
    }
    let mut b = SearchBudget::new(budget.into());
    let mut out = match h {
        Some(h) => match find_clique_minor(&g, h as usize, &mut b) {
            SearchOutcome::Found(m) => json!({ "answer": "yes", "h": h, "model": model_json(&m) }),
            SearchOutcome::NotFound => json!({ "answer": "no", "h": h }),
            SearchOutcome::Indeterminate => json!({ "answer": "unknown", "h": h }),
        },
        None => match hadwiger_number(&g, &mut b) {
            Ok(Hadwiger::Exact { value, model }) => {
                json!({ "answer": "exact", "value": value, "model": model_json(&model) })
            }
            Ok(Hadwiger::LowerBound { value, model }) => {
                json!({ "answer": "lower_bound", "value": value, "model": model_json(&model) })
            }
            Err(e) => return error(e),
        },
    };
    out["nodes"] = b.used().into();
    out["n"] = g.n().into();
    out.to_string()
}

/// Builds the layered host graph for `(G, d)`. When `G` has `d` disjoint
/// dominating sets, the translated branch sets come along as `model`.
#[wasm_bindgen]
pub fn reduce(graph: &str, d: u32) -> String {
    let g = match parse_graph_text(graph) {
        Ok(g) => g,
        Err(e) => return error(e),
    };
    let d = d as usize;
    let reduction = match reduce_domatic_to_hadwiger(&g, d) {
        Ok(r) => r,
        Err(e) => return error(e),
    };
    let core = reduction.core();
    let (host, h) = reduction.hadwiger_instance();
    let mut out = json!({
        "h": h,
        "vertices": host.n(),
        "edge_count": host.edge_count(),
        "graph6": format_graph6(&host),
        "stripped": core.stripped,
        "edges": edges(&host),
    });
    match &reduction {
        DomaticReduction::TriviallyPositive { .. } => out["trivial"] = "yes".into(),
        DomaticReduction::TriviallyNegative { .. } => out["trivial"] = "no".into(),
        DomaticReduction::Instance { labeling, .. } => {
            out["labels"] = labeling.layers().iter().map(|l| l.to_string()).collect();
            let family = match find_disjoint_dominating_sets(&core.core, labeling.d()) {
                Ok(f) => f,
                Err(e) => return error(e),
            };
            if let Some(family) = family {
                let model = match domatic_witness_to_minor_model(&core.core, &family, labeling) {
                    Ok(m) => m,
                    Err(e) => return error(e),
                };
                out["family"] = sets(&family.sets);
                out["model"] = model_json(&model);
            }
        }
    }
    out.to_string()
}
