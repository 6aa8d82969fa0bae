//! Graphviz output.
//!
//! With a labeling, nodes are named by layer (`T1`, `M2`, `B4.1`) and each
//! layer is pinned to one rank. With a model, each branch set becomes a
//! filled cluster with its own color; unused vertices stay white.

use std::fmt::Write;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::minor::{verify_clique_minor_model, MinorModel};
use crate::reduce::{Layer, ReductionLabeling};

/// Fill color of branch set `i` out of `count`, spread around the hue circle.
pub fn set_color(i: usize, count: usize) -> String {
    format!("{:.3} 0.45 0.95", i as f64 / count.max(1) as f64)
}

pub fn emit_dot(g: &Graph, lab: Option<&ReductionLabeling>, model: Option<&MinorModel>) -> Result<String> {
    if let Some(lab) = lab {
        if lab.vertex_count() != g.n() {
            return Err(Error::InvalidParameters(format!(
                "labeling covers {} vertices, graph has {}",
                lab.vertex_count(),
                g.n()
            )));
        }
    }
    if let Some(model) = model {
        verify_clique_minor_model(g, model).map_err(|v| Error::InvalidWitness(v.to_string()))?;
    }
    let name = |v: usize| match lab {
        Some(lab) => format!("\"{}\"", lab.layer(v)),
        None => v.to_string(),
    };

    let mut out = String::from("graph G {\n  node [shape=circle, style=filled, fillcolor=white];\n");
    if let Some(lab) = lab {
        out.push_str("  rankdir=TB;\n");
        type Pick = fn(&Layer) -> bool;
        let picks: [Pick; 3] = [
            |l| matches!(l, Layer::Top(_)),
            |l| matches!(l, Layer::Mid(_)),
            |l| matches!(l, Layer::Bot(..)),
        ];
        for pick in picks {
            let members: Vec<String> = (0..g.n()).filter(|&v| pick(&lab.layer(v))).map(name).collect();
            if !members.is_empty() {
                writeln!(out, "  {{ rank=same; {}; }}", members.join("; ")).unwrap();
            }
        }
    }
    match model {
        Some(model) => {
            let k = model.order();
            for (i, set) in model.branch_sets.iter().enumerate() {
                let color = set_color(i, k);
                writeln!(out, "  subgraph cluster_{i} {{").unwrap();
                writeln!(out, "    style=filled; color=\"{color}\";").unwrap();
                for &v in set.iter() {
                    writeln!(out, "    {} [fillcolor=\"{color}\"];", name(v)).unwrap();
                }
                out.push_str("  }\n");
            }
            for v in (0..g.n()).filter(|&v| model.set_of(v).is_none()) {
                writeln!(out, "  {};", name(v)).unwrap();
            }
        }
        None => {
            for v in 0..g.n() {
                writeln!(out, "  {};", name(v)).unwrap();
            }
        }
    }
    for (u, v) in g.edges() {
        writeln!(out, "  {} -- {};", name(u), name(v)).unwrap();
    }
    out.push_str("}\n");
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generate::cycle;
    use crate::graph::VertexSet;

    #[test]
    fn plain_cycle() {
        let dot = emit_dot(&cycle(5), None, None).unwrap();
        assert_eq!(dot.matches(" -- ").count(), 5);
        assert!(dot.contains("  0 -- 1;\n"));
        assert!(dot.contains("  0 -- 4;\n"));
        assert!(!dot.contains("cluster"));
    }

    #[test]
    fn invalid_model_rejected() {
        let bad = MinorModel::new(vec![VertexSet::from([0]), VertexSet::from([2])]);
        assert!(emit_dot(&cycle(5), None, Some(&bad)).is_err());
        let lab = ReductionLabeling::new(2, 1);
        assert!(emit_dot(&cycle(5), Some(&lab), None).is_err());
    }

    #[test]
    fn model_clusters() {
        let m = MinorModel::new(vec![VertexSet::from([0, 1]), VertexSet::from([2]), VertexSet::from([3, 4])]);
        let dot = emit_dot(&cycle(5), None, Some(&m)).unwrap();
        assert_eq!(dot.matches("subgraph cluster_").count(), 3);
        assert!(dot.contains(&format!("    1 [fillcolor=\"{}\"];", set_color(0, 3))));
    }
}
