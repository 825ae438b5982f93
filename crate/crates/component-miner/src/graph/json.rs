//! The `depgraph/1` JSON document format.
//!
//! ```json
//! {
//!   "schema": "depgraph/1",
//!   "elements": [{"id": "A", "container": "web", "methods": ["m1"]}],
//!   "edges": [{"source": "A", "target": "B", "weight": 3}]
//! }
//! ```
//!
//! `schema`, `container`, and `methods` are optional on input; the serializer
//! always writes `schema` and omits empty metadata.

use serde::{Deserialize, Serialize};

use super::{DependencyGraph, Element, ElementId, GraphBuilder, GraphError, ParseOutput};

pub const SCHEMA: &str = "depgraph/1";

#[derive(Debug, Serialize, Deserialize)]
struct RawGraph {
    #[serde(skip_serializing_if = "Option::is_none")]
    schema: Option<String>,
    #[serde(default)]
    elements: Vec<RawElement>,
    #[serde(default)]
    edges: Vec<RawEdge>,
}

#[derive(Debug, Serialize, Deserialize)]
struct RawElement {
    id: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    container: Option<String>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    methods: Vec<String>,
}

#[derive(Debug, Serialize, Deserialize)]
struct RawEdge {
    source: String,
    target: String,
    weight: i64,
}

/// Parses a `depgraph/1` JSON document into a validated graph.
pub fn parse_json_graph(text: &str) -> Result<ParseOutput, GraphError> {
    let text = text.strip_prefix('\u{feff}').unwrap_or(text);
    let raw: RawGraph =
        serde_json::from_str(text).map_err(|e| GraphError::MalformedJson(e.to_string()))?;
    if let Some(schema) = &raw.schema {
        if schema != SCHEMA {
            return Err(GraphError::SchemaVersion(schema.clone()));
        }
    }

    let mut builder = GraphBuilder::new();
    for (i, el) in raw.elements.into_iter().enumerate() {
        let id = ElementId::new(el.id).map_err(|e| locate(e, &format!("elements[{i}]")))?;
        builder.add_element(Element::new(id, el.container, el.methods)?)?;
    }
    for (i, edge) in raw.edges.into_iter().enumerate() {
        let location = format!("edges[{i}]");
        if edge.weight < 1 {
            return Err(GraphError::NonPositiveWeight {
                location,
                got: edge.weight,
            });
        }
        for endpoint in [&edge.source, &edge.target] {
            if !builder.has_element(endpoint) {
                return Err(GraphError::UnknownElement {
                    location: location.clone(),
                    id: endpoint.clone(),
                });
            }
        }
        builder.add_edge(
            ElementId::new(edge.source).map_err(|e| locate(e, &location))?,
            ElementId::new(edge.target).map_err(|e| locate(e, &location))?,
            edge.weight as u64,
            &location,
        )?;
    }
    Ok(builder.finish())
}

/// Serializes a graph as a pretty-printed `depgraph/1` document. Output is
/// deterministic: elements and edges appear in sorted id order.
pub fn to_json_string(graph: &DependencyGraph) -> String {
    let raw = RawGraph {
        schema: Some(SCHEMA.to_string()),
        elements: graph
            .elements()
            .map(|el| RawElement {
                id: el.id.as_str().to_string(),
                container: el.container.clone(),
                methods: el.methods.clone(),
            })
            .collect(),
        edges: graph
            .edges()
            .map(|(s, t, w)| RawEdge {
                source: s.as_str().to_string(),
                target: t.as_str().to_string(),
                weight: w as i64,
            })
            .collect(),
    };
    // Serialization of plain structs cannot fail.
    serde_json::to_string_pretty(&raw).expect("graph serialization")
}

fn locate(err: GraphError, location: &str) -> GraphError {
    match err {
        GraphError::InvalidId(id) => GraphError::InvalidId(format!("{location}: {id}")),
        other => other,
    }
}
