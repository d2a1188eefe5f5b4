//! Hiring records, record filters and the weighted directed network built
//! from them.
//!
//! Edge direction is producer to employer: `m_ij` counts people who earned
//! their doctorate at `i` and were hired by `j`.

mod edgelist;
mod filter;
mod graph;
mod records;

pub use edgelist::{load_edge_list, write_edge_list};
pub use filter::{load_whitelist, NetworkFilter, YearRange};
pub use graph::{build_network, degree_sequences, HiringNetwork, NodeRegistry};
pub use records::{load_records, write_records, HiringRecord, RECORD_COLUMNS};
