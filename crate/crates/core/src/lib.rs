//! Prestige hierarchies in weighted directed hiring networks.
//!
//! * [`network`] builds the institution-level network from hiring records.
//! * [`mvr`] infers minimum violation rankings and prestige scores.
//! * [`nullmodel`] compares the hierarchy strength against degree-preserving
//!   randomizations.
//! * [`metrics`] covers production inequality and placement mobility.
//! * [`synth`] generates networks with a planted hierarchy.

pub mod error;
pub mod metrics;
pub mod mvr;
pub mod network;
pub mod nullmodel;
pub mod synth;

pub use error::{Error, Result};
