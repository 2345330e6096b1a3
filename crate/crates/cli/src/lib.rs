//! File formats, sweeps and structured output for the `regfactor` command.

pub mod edgelist;
pub mod output;
pub mod sweep;

pub use edgelist::{parse_edge_list, read_edge_list, to_edge_list, write_edge_list, FormatError};
pub use output::Format;
pub use sweep::{plan_sweep, run_sweep, Source, SweepPlan, SweepRecord, SweepSummary};
