//! Library side of the `seqtrans` command: ingest, configuration, the
//! transform registry and report rendering.

pub mod app;
pub mod compare;
pub mod config;
pub mod error;
pub mod ingest;
pub mod registry;
pub mod report;

pub use app::run_app;
pub use error::{CliError, CliResult};
