//! Identify reusable business components in a codebase.
//!
//! The pipeline: ingest a weighted class-dependency graph (JSON, DOT subset,
//! or CSV invocation log), compute a Dependency Strength matrix under a
//! chosen strategy, cluster elements by threshold merge with transitive
//! closure, map clusters to named components, measure component coupling
//! (CBOM), flag and split over-coupled components, and track component reuse
//! in a persistent repository.

pub mod cli;
pub mod cluster;
pub mod ds;
pub mod graph;
pub mod metrics;
pub mod repo;
pub mod report;

#[cfg(test)]
pub(crate) mod testutil;
