//! Parallel dynamic programming for decision-monotone recurrences.

pub mod bench;
pub mod cost;
pub mod decisions;
pub mod error;
pub mod extras;
pub mod gap;
pub mod glws;
pub mod oracle;
pub mod sequence;
pub mod types;

pub use cost::{CostModel, CostSpec, Shape};
pub use decisions::{DecisionIntervals, Segment};
pub use error::{DpError, Result};
pub use glws::{glws_par, glws_seq, GlwsSolution};
pub use types::{Cost, RoundStats, INF};
