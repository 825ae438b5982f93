//! Weighted directed dependency graphs and the ingest formats that produce them.
//!
//! A [`DependencyGraph`] holds business elements (classes, model entities) and
//! directed invocation edges between them. Three ingest paths build the same
//! canonical graph: a JSON document (`depgraph/1`), a DOT subset, and a CSV
//! invocation log. All of them merge duplicate edges by summing weights and
//! drop self-edges with a warning.

use std::collections::BTreeMap;
use std::fmt;

use thiserror::Error;

mod csv;
mod dot;
mod json;
mod orders;

pub use csv::ingest_invocation_log;
pub use dot::{parse_dot_graph, to_dot_string};
pub use json::{parse_json_graph, to_json_string};
pub use orders::enumerate_execution_orders;

/// Errors produced while parsing or validating dependency data.
#[derive(Debug, Error, PartialEq, Eq)]
pub enum GraphError {
    #[error("invalid element id {0:?}: must be non-empty with no leading/trailing whitespace")]
    InvalidId(String),
    #[error("duplicate element id `{0}`")]
    DuplicateElement(String),
    #[error("element `{id}`: duplicate method name `{method}`")]
    DuplicateMethod { id: String, method: String },
    #[error("{location}: unknown element `{id}` referenced by edge")]
    UnknownElement { location: String, id: String },
    #[error("{location}: edge weight must be a positive integer (got {got})")]
    NonPositiveWeight { location: String, got: i64 },
    #[error("{location}: edge weight overflow")]
    WeightOverflow { location: String },
    #[error("malformed JSON: {0}")]
    MalformedJson(String),
    #[error("unsupported schema version `{0}` (expected `depgraph/1`)")]
    SchemaVersion(String),
    #[error("line {line}, column {column}: {message}")]
    DotSyntax {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("line {line}: {message}")]
    CsvFormat { line: usize, message: String },
    #[error("method list is empty")]
    EmptyMethodList,
    #[error("duplicate method name `{0}`")]
    DuplicateMethodName(String),
}

/// Identifier of a business element. Non-empty, no surrounding whitespace;
/// compared by exact byte equality.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ElementId(String);

impl ElementId {
    pub fn new(value: impl Into<String>) -> Result<Self, GraphError> {
        let value = value.into();
        if value.is_empty() || value.trim() != value {
            return Err(GraphError::InvalidId(value));
        }
        Ok(ElementId(value))
    }

    pub fn as_str(&self) -> &str {
        &self.0
    }
}

impl fmt::Display for ElementId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl AsRef<str> for ElementId {
    fn as_ref(&self) -> &str {
        &self.0
    }
}

impl std::borrow::Borrow<str> for ElementId {
    fn borrow(&self) -> &str {
        &self.0
    }
}

impl serde::Serialize for ElementId {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.0)
    }
}

impl<'de> serde::Deserialize<'de> for ElementId {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let value = String::deserialize(deserializer)?;
        ElementId::new(value).map_err(serde::de::Error::custom)
    }
}

/// A business element: a class or model entity to be grouped.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Element {
    pub id: ElementId,
    /// Optional package/tier label; used only for component naming.
    pub container: Option<String>,
    pub methods: Vec<String>,
}

impl Element {
    pub fn new(
        id: ElementId,
        container: Option<String>,
        methods: Vec<String>,
    ) -> Result<Self, GraphError> {
        let mut seen = std::collections::BTreeSet::new();
        for m in &methods {
            if !seen.insert(m.as_str()) {
                return Err(GraphError::DuplicateMethod {
                    id: id.as_str().to_string(),
                    method: m.clone(),
                });
            }
        }
        Ok(Element {
            id,
            container,
            methods,
        })
    }

    /// Bare element with no metadata.
    pub fn named(id: ElementId) -> Self {
        Element {
            id,
            container: None,
            methods: Vec::new(),
        }
    }
}

/// A directed invocation edge with a positive weight.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DependencyEdge {
    pub source: ElementId,
    pub target: ElementId,
    pub weight: u64,
}

/// Canonical weighted directed graph. Immutable after construction; element
/// and edge iteration order is fixed (sorted by id) so every downstream
/// computation is deterministic.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct DependencyGraph {
    elements: BTreeMap<ElementId, Element>,
    edges: BTreeMap<(ElementId, ElementId), u64>,
}

impl DependencyGraph {
    pub fn element_count(&self) -> usize {
        self.elements.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn contains_element(&self, id: &str) -> bool {
        self.elements.contains_key(id)
    }

    pub fn element(&self, id: &str) -> Option<&Element> {
        self.elements.get(id)
    }

    /// Elements in sorted id order.
    pub fn elements(&self) -> impl Iterator<Item = &Element> {
        self.elements.values()
    }

    /// Element ids in sorted order.
    pub fn element_ids(&self) -> impl Iterator<Item = &ElementId> {
        self.elements.keys()
    }

    /// Edges in sorted (source, target) order.
    pub fn edges(&self) -> impl Iterator<Item = (&ElementId, &ElementId, u64)> {
        self.edges.iter().map(|((s, t), w)| (s, t, *w))
    }

    /// Weight of the edge source -> target, or 0 when absent.
    pub fn weight(&self, source: &str, target: &str) -> u64 {
        let key = (ElementId(source.to_string()), ElementId(target.to_string()));
        self.edges.get(&key).copied().unwrap_or(0)
    }

    /// Sum of all edge weights.
    pub fn total_weight(&self) -> u64 {
        self.edges.values().sum()
    }
}

/// Accumulates elements and edges under the canonical normalization rules:
/// duplicate edges merge by weight summation, self-edges are dropped with a
/// warning.
#[derive(Debug, Default)]
pub struct GraphBuilder {
    elements: BTreeMap<ElementId, Element>,
    edges: BTreeMap<(ElementId, ElementId), u64>,
    warnings: Vec<String>,
}

impl GraphBuilder {
    pub fn new() -> Self {
        Self::default()
    }

    /// Adds a fully described element; duplicate ids are an error.
    pub fn add_element(&mut self, element: Element) -> Result<(), GraphError> {
        if self.elements.contains_key(element.id.as_str()) {
            return Err(GraphError::DuplicateElement(
                element.id.as_str().to_string(),
            ));
        }
        self.elements.insert(element.id.clone(), element);
        Ok(())
    }

    /// Ensures an element exists, creating a bare one if needed. Used by the
    /// formats that infer elements from edge endpoints.
    pub fn touch_element(&mut self, id: ElementId) {
        self.elements
            .entry(id.clone())
            .or_insert_with(|| Element::named(id));
    }

    pub fn has_element(&self, id: &str) -> bool {
        self.elements.contains_key(id)
    }

    /// Records an edge between existing elements. Self-edges are dropped with
    /// a warning; a repeated (source, target) pair merges by summing weights.
    pub fn add_edge(
        &mut self,
        source: ElementId,
        target: ElementId,
        weight: u64,
        location: &str,
    ) -> Result<(), GraphError> {
        debug_assert!(self.elements.contains_key(source.as_str()));
        debug_assert!(self.elements.contains_key(target.as_str()));
        debug_assert!(weight >= 1);
        if source == target {
            self.warnings
                .push(format!("{location}: self-edge on `{source}` dropped"));
            return Ok(());
        }
        let slot = self.edges.entry((source, target)).or_insert(0);
        *slot = slot
            .checked_add(weight)
            .ok_or_else(|| GraphError::WeightOverflow {
                location: location.to_string(),
            })?;
        Ok(())
    }

    pub fn warn(&mut self, message: String) {
        self.warnings.push(message);
    }

    pub fn finish(self) -> ParseOutput {
        ParseOutput {
            graph: DependencyGraph {
                elements: self.elements,
                edges: self.edges,
            },
            warnings: self.warnings,
        }
    }
}

/// A parsed graph plus any non-fatal warnings collected along the way
/// (dropped self-edges, ignored DOT attributes).
#[derive(Debug)]
pub struct ParseOutput {
    pub graph: DependencyGraph,
    pub warnings: Vec<String>,
}
