//! File formats, bundled data and the command-line front end.

pub mod cli;
pub mod corpus;
pub mod error;
pub mod observable_files;
pub mod propagator_file;
pub mod registry_file;
