//! Verification suites, sweeps and chain spectra over `ybx-core`, with JSON and
//! CSV output. The `ybx` binary is a thin wrapper over this library.

pub mod chain;
pub mod parallel;
pub mod report;
pub mod suites;
pub mod sweep;
