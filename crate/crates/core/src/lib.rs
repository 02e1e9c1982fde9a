pub mod cli;
pub mod enumerate;
pub mod error;
pub mod families;
pub mod graph;
pub mod orientation;
pub mod repnum;
pub mod search;
pub mod words;

pub use error::{Error, Result};
pub use graph::Graph;
pub use search::{Budget, SearchOutcome, Status};
pub use words::{Pattern, Word};
