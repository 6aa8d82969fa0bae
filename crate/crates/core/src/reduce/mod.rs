//! Witness-preserving reductions into the Hadwiger number problem.

mod domatic;
mod paths;

pub use domatic::{
    audit_reduction_structure, build_host, decode_source, domatic_witness_to_minor_model,
    minor_model_to_domatic_witness, predicted_host_edges, reduce_domatic_to_hadwiger,
    strip_universal_vertices, AuditViolation, DomaticReduction, Layer, ReductionLabeling,
    StrippedCore,
};
pub use paths::{
    minor_model_to_paths_witness, paths_witness_to_minor_model, reduce_paths_to_hadwiger,
    PathsReductionMap,
};
