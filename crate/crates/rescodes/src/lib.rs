//! File formats, threaded verification, simulation and the command line
//! for [`rescodes_core`].

pub mod cli;
pub mod format;
pub mod parallel;
pub mod simulate;

pub use rescodes_core as core;
