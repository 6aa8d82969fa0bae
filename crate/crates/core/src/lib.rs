pub mod crosscheck;
pub mod domatic;
pub mod dot;
pub mod error;
pub mod formats;
pub mod generate;
pub mod graph;
pub mod minor;
pub mod paths;
pub mod reduce;
pub mod witness;

pub use error::{Error, Result};
pub use graph::{Graph, VertexSet};
