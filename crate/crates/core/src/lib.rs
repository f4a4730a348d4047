pub mod branches;
pub mod error;
pub mod generate;
pub mod graph;
pub mod kernel;
pub mod obstructions;
pub mod recognition;
pub mod solver;

pub use error::{Error, Result};
pub use graph::{Edge, EdgeSet, Graph, VertexSet};
