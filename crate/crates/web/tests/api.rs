use minorkit::formats::parse_graph6;
use minorkit::minor::{verify_clique_minor_model, MinorModel};
use minorkit::VertexSet;
use minorkit_web::{domatic, hadwiger, reduce};
use serde_json::Value;

fn parse(s: String) -> Value {
    serde_json::from_str(&s).unwrap()
}

fn model(v: &Value) -> MinorModel {
    MinorModel::new(
        v.as_array()
            .unwrap()
            .iter()
            .map(|s| s.as_array().unwrap().iter().map(|x| x.as_u64().unwrap() as usize).collect::<VertexSet>())
            .collect(),
    )
}

#[test]
fn c5_reduction() {
    let out = parse(reduce("Dhc", 2));
    assert_eq!(out["h"], 32);
    assert_eq!(out["vertices"], 37);
    assert_eq!(out["edge_count"], 536);
    assert_eq!(out["labels"][36], "B5.6");
    let host = parse_graph6(out["graph6"].as_str().unwrap()).unwrap();
    let m = model(&out["model"]);
    assert_eq!(m.order(), 32);
    assert_eq!(verify_clique_minor_model(&host, &m), Ok(()));
}

#[test]
fn negative_and_trivial_reductions() {
    let out = parse(reduce("Dhc", 3));
    assert_eq!(out["h"], 33);
    assert!(out.get("model").is_none());
    // K3: every vertex is universal
    assert_eq!(parse(reduce("Bw", 3))["trivial"], "yes");
    assert_eq!(parse(reduce("Bw", 4))["trivial"], "no");
    assert!(parse(reduce("Dhc", 0)).get("error").is_some());
}

#[test]
fn hadwiger_queries() {
    let out = parse(hadwiger("Dhc", None, 1_000_000));
    assert_eq!((out["answer"].as_str(), out["value"].as_u64()), (Some("exact"), Some(3)));
    assert_eq!(parse(hadwiger("Dhc", Some(4), 1_000_000))["answer"], "no");
    let yes = parse(hadwiger("p 4 3\ne 0 1\ne 1 2\ne 2 3\n", Some(2), 1_000))["answer"].clone();
    assert_eq!(yes, "yes");
    assert!(parse(hadwiger("not a graph", None, 10)).get("error").is_some());
    assert!(parse(hadwiger("Dhc", None, 0)).get("error").is_some());
}

#[test]
fn domatic_queries() {
    let out = parse(domatic("Dhc"));
    assert_eq!(out["value"], 2);
    assert_eq!(out["sets"].as_array().unwrap().len(), 2);
    assert_eq!(parse(domatic("Bw"))["value"], 3);
}
