//! Command-line driver and HTTP service for `wordbins`.

pub mod cli;
pub mod server;

pub use cli::{run, Cli};
