//! Library side of the command-line front end: file formats, solver
//! dispatch, and the benchmark harness.

pub mod bench;
pub mod format;
pub mod run;
