pub mod balance;
pub mod budget;
pub mod central_bag;
pub mod corpus;
pub mod cutsets;
pub mod error;
pub mod graph;
pub mod pipeline;
pub mod recognizers;
pub mod seagull;
pub mod tw;
pub mod vset;
pub mod weights;

pub use budget::Budget;
pub use error::{Error, Result};
pub use graph::{Graph, Path};
pub use vset::VertexSet;
