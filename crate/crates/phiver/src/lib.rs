//! Identity registry, verification engine and command-line front end over
//! `phiver-core`.

pub mod cli;
pub mod registry;
pub mod report;
