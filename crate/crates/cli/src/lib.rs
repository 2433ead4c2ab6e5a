//! Library half of the `maxpair` binary: command implementations that return
//! their output as text, so tests can call them without spawning a process.

pub mod catalog;
pub mod commands;

pub use catalog::{scan, Catalog, CatalogRow, Family};
pub use commands::{cmd_classify, cmd_oracle, cmd_parse, cmd_scan, CliError, ScanFormat};

/// JSON schema for `classify` output.
pub const VERDICT_SCHEMA: &str = include_str!("../schema/verdict.schema.json");
/// JSON schema for `scan --format json` output.
pub const CATALOG_SCHEMA: &str = include_str!("../schema/catalog.schema.json");

/// Directory holding the persistent cyclotomic-value cache.
pub const CACHE_ENV: &str = "MAXPAIR_CACHE_DIR";
