//! The persistent component management relation: one record per component
//! with its count of reuse and node mapping.
//!
//! A reuse count tracks reuse *events* (each recorded reuse increments it
//! once), not the number of distinct reusing systems. Content updates bump a
//! record's version; recording a reuse does not.

use std::collections::{BTreeMap, BTreeSet};
use std::path::Path;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::ElementId;

pub const REPO_SCHEMA: &str = "repo/1";

#[derive(Debug, Error)]
pub enum RepoError {
    #[error("component `{0}` is already registered")]
    DuplicateName(String),
    #[error("unknown component `{0}`")]
    UnknownName(String),
    #[error("{path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
    #[error("malformed repository JSON: {0}")]
    MalformedJson(String),
    #[error("unsupported schema version `{0}` (expected `repo/1`)")]
    SchemaVersion(String),
    #[error("invalid repository: {0}")]
    Invariant(String),
}

/// One row of the component management relation.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ComponentRecord {
    pub name: String,
    pub reuse_count: u64,
    /// Opaque label linking the record to a clustering output (e.g. "N_k").
    pub node: String,
    pub members: BTreeSet<ElementId>,
    pub version: u64,
}

/// An entry of the reuse report, most-reused first.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ReuseEntry {
    pub name: String,
    pub reuse_count: u64,
    pub node: String,
    pub unused: bool,
}

#[derive(Serialize, Deserialize)]
struct StoreFile {
    schema_version: String,
    records: Vec<ComponentRecord>,
}

/// The component store. Single-writer; mutation is serialized by the caller.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct RepositoryStore {
    records: BTreeMap<String, ComponentRecord>,
}

impl RepositoryStore {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn len(&self) -> usize {
        self.records.len()
    }

    pub fn is_empty(&self) -> bool {
        self.records.is_empty()
    }

    pub fn get(&self, name: &str) -> Option<&ComponentRecord> {
        self.records.get(name)
    }

    /// Records in name order.
    pub fn records(&self) -> impl Iterator<Item = &ComponentRecord> {
        self.records.values()
    }

    /// Adds a fresh record with reuse count 0 at version 1.
    pub fn register(
        &mut self,
        name: &str,
        node: &str,
        members: BTreeSet<ElementId>,
    ) -> Result<(), RepoError> {
        if name.is_empty() {
            return Err(RepoError::Invariant(
                "component name must be non-empty".into(),
            ));
        }
        if self.records.contains_key(name) {
            return Err(RepoError::DuplicateName(name.to_string()));
        }
        self.records.insert(
            name.to_string(),
            ComponentRecord {
                name: name.to_string(),
                reuse_count: 0,
                node: node.to_string(),
                members,
                version: 1,
            },
        );
        Ok(())
    }

    /// Counts one reuse event. The version is untouched: reuse is not a
    /// content change. Returns the new count.
    pub fn record_reuse(&mut self, name: &str) -> Result<u64, RepoError> {
        let record = self
            .records
            .get_mut(name)
            .ok_or_else(|| RepoError::UnknownName(name.to_string()))?;
        record.reuse_count += 1;
        Ok(record.reuse_count)
    }

    /// Replaces a record's member list (e.g. after a split is applied) and
    /// bumps its version by exactly 1.
    pub fn update_members(
        &mut self,
        name: &str,
        members: BTreeSet<ElementId>,
    ) -> Result<(), RepoError> {
        let record = self
            .records
            .get_mut(name)
            .ok_or_else(|| RepoError::UnknownName(name.to_string()))?;
        record.members = members;
        record.version += 1;
        Ok(())
    }

    /// The reuse analysis: descending by count, ties by name; zero-count
    /// records are flagged unused.
    pub fn reuse_report(&self) -> Vec<ReuseEntry> {
        let mut entries: Vec<ReuseEntry> = self
            .records
            .values()
            .map(|r| ReuseEntry {
                name: r.name.clone(),
                reuse_count: r.reuse_count,
                node: r.node.clone(),
                unused: r.reuse_count == 0,
            })
            .collect();
        entries.sort_by(|a, b| {
            b.reuse_count
                .cmp(&a.reuse_count)
                .then_with(|| a.name.cmp(&b.name))
        });
        entries
    }

    pub fn to_json(&self) -> String {
        let file = StoreFile {
            schema_version: REPO_SCHEMA.to_string(),
            records: self.records.values().cloned().collect(),
        };
        serde_json::to_string_pretty(&file).expect("store serialization")
    }

    pub fn from_json(text: &str) -> Result<Self, RepoError> {
        let file: StoreFile =
            serde_json::from_str(text).map_err(|e| RepoError::MalformedJson(e.to_string()))?;
        if file.schema_version != REPO_SCHEMA {
            return Err(RepoError::SchemaVersion(file.schema_version));
        }
        let mut records = BTreeMap::new();
        for record in file.records {
            if record.name.is_empty() {
                return Err(RepoError::Invariant(
                    "component name must be non-empty".into(),
                ));
            }
            if record.version == 0 {
                return Err(RepoError::Invariant(format!(
                    "record `{}` has version 0 (versions start at 1)",
                    record.name
                )));
            }
            if records.insert(record.name.clone(), record).is_some() {
                return Err(RepoError::Invariant("duplicate component names".into()));
            }
        }
        Ok(RepositoryStore { records })
    }

    /// Atomic write: serialize to a sibling temp file, then rename over the
    /// target.
    pub fn save(&self, path: &Path) -> Result<(), RepoError> {
        let io_err = |source| RepoError::Io {
            path: path.display().to_string(),
            source,
        };
        let mut tmp = path.as_os_str().to_owned();
        tmp.push(".tmp");
        let tmp = std::path::PathBuf::from(tmp);
        std::fs::write(&tmp, self.to_json()).map_err(io_err)?;
        std::fs::rename(&tmp, path).map_err(io_err)
    }

    pub fn load(path: &Path) -> Result<Self, RepoError> {
        let text = std::fs::read_to_string(path).map_err(|source| RepoError::Io {
            path: path.display().to_string(),
            source,
        })?;
        Self::from_json(&text)
    }
}
