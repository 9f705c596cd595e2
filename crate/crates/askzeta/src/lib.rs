//! File formats, caching, parallel oracle runs, acceptance suites and the
//! command-line front end for `askzeta-core`.

pub mod cache;
pub mod cli;
pub mod formats;
pub mod parallel;
pub mod ratparse;
pub mod verify;
