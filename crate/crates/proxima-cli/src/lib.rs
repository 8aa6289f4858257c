//! Batch front end for the proxima toolkit: scenario files, the scenario
//! runner, deterministic scenario generation, and report/trace formats.

pub mod gen;
pub mod runner;
pub mod scenario;
