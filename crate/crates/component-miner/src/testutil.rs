//! Shared helpers and proptest strategies for unit tests.

use std::collections::{BTreeMap, BTreeSet};

use proptest::prelude::*;

use crate::ds::{DsMatrix, DsStrategy};
use crate::graph::{parse_json_graph, DependencyGraph, Element, ElementId, GraphBuilder};
use crate::metrics::{Component, ComponentSet};
use crate::repo::RepositoryStore;

pub(crate) fn id(s: &str) -> ElementId {
    ElementId::new(s).unwrap()
}

pub(crate) fn graph_from_edges(
    extra_elements: &[&str],
    edges: &[(&str, &str, u64)],
) -> DependencyGraph {
    let mut b = GraphBuilder::new();
    for e in extra_elements {
        b.touch_element(id(e));
    }
    for (s, t, w) in edges {
        b.touch_element(id(s));
        b.touch_element(id(t));
        b.add_edge(id(s), id(t), *w, "test").unwrap();
    }
    b.finish().graph
}

pub(crate) fn graph_with_containers(
    elements: &[(&str, Option<&str>)],
    edges: &[(&str, &str, u64)],
) -> DependencyGraph {
    let mut b = GraphBuilder::new();
    for (e, container) in elements {
        b.add_element(Element::new(id(e), container.map(str::to_string), Vec::new()).unwrap())
            .unwrap();
    }
    for (s, t, w) in edges {
        b.add_edge(id(s), id(t), *w, "test").unwrap();
    }
    b.finish().graph
}

pub(crate) fn component(name: &str, members: &[&str]) -> Component {
    Component {
        name: name.to_string(),
        members: members.iter().map(|m| id(m)).collect(),
    }
}

pub(crate) fn sorted_ids(ids: &[ElementId]) -> Vec<&str> {
    ids.iter().map(ElementId::as_str).collect()
}

/// Symmetric matrix from explicit pair values (unlisted pairs are 0).
pub(crate) fn matrix_from_pairs(ids: &[&str], pairs: &[(&str, &str, f64)]) -> DsMatrix {
    let mut sorted: Vec<&str> = ids.to_vec();
    sorted.sort_unstable();
    let n = sorted.len();
    let pos = |needle: &str| sorted.iter().position(|x| *x == needle).unwrap();
    let mut values = vec![0.0; n * n];
    for (a, b, v) in pairs {
        let (ia, ib) = (pos(a), pos(b));
        values[ia * n + ib] = *v;
        values[ib * n + ia] = *v;
    }
    DsMatrix::new(
        sorted.into_iter().map(id).collect(),
        values,
        DsStrategy::SymmetricSum,
    )
    .expect("valid test matrix")
}

/// The 13-class HR Portal graph used across the suite.
pub(crate) fn hr_portal_fixture() -> DependencyGraph {
    parse_json_graph(include_str!("../tests/data/hr_portal.json"))
        .expect("fixture parses")
        .graph
}

/// The three tier components, grouped by container label (independent of the
/// clusterer).
pub(crate) fn hr_portal_tiers(graph: &DependencyGraph) -> ComponentSet {
    let mut by_label: BTreeMap<String, BTreeSet<ElementId>> = BTreeMap::new();
    for el in graph.elements() {
        by_label
            .entry(el.container.clone().expect("fixture elements are labeled"))
            .or_default()
            .insert(el.id.clone());
    }
    let mut components: Vec<Component> = by_label
        .into_iter()
        .map(|(name, members)| Component { name, members })
        .collect();
    components.sort_by(|a, b| a.members.iter().next().cmp(&b.members.iter().next()));
    ComponentSet {
        components,
        source_f_min: 0.7,
        strategy: DsStrategy::NormalizedSymmetric,
    }
}

pub(crate) fn table1_store() -> RepositoryStore {
    RepositoryStore::from_json(include_str!("../tests/data/table1_repo.json"))
        .expect("fixture parses")
}

/// Edge lists over a small element pool `e0..e{max_elements-1}`.
pub(crate) fn arb_edge_list(
    max_elements: usize,
    max_edges: usize,
) -> impl Strategy<Value = Vec<(String, String, u64)>> {
    (2..=max_elements).prop_flat_map(move |n| {
        proptest::collection::vec(
            (0..n, 0..n, 1u64..100).prop_map(|(a, b, w)| (format!("e{a}"), format!("e{b}"), w)),
            0..=max_edges,
        )
    })
}

/// Random DS matrices with grid-quantized values so threshold boundaries are
/// hit often; half symmetric (tagged symmetric_sum), half raw_out.
pub(crate) fn arb_matrix(max_n: usize) -> impl Strategy<Value = DsMatrix> {
    (1..=max_n).prop_flat_map(|n| {
        (
            proptest::collection::vec((0..=10u32).prop_map(|k| k as f64 / 10.0), n * n),
            any::<bool>(),
        )
            .prop_map(move |(mut values, symmetric)| {
                for i in 0..n {
                    values[i * n + i] = 0.0;
                }
                if symmetric {
                    for i in 0..n {
                        for j in 0..i {
                            values[j * n + i] = values[i * n + j];
                        }
                    }
                }
                let order: Vec<ElementId> = (0..n).map(|i| id(&format!("e{i:02}"))).collect();
                let strategy = if symmetric {
                    DsStrategy::SymmetricSum
                } else {
                    DsStrategy::RawOut
                };
                DsMatrix::new(order, values, strategy).expect("valid generated matrix")
            })
    })
}

/// Thresholds biased toward exact grid values so the >= boundary is tested.
pub(crate) fn arb_threshold() -> impl Strategy<Value = f64> {
    prop_oneof![
        2 => 0.0f64..1.2,
        1 => (0..=12u32).prop_map(|k| k as f64 / 10.0),
    ]
}

/// Random graphs with containers, methods, and isolated elements, for
/// round-trip tests.
pub(crate) fn arb_graph() -> impl Strategy<Value = DependencyGraph> {
    let element_id = prop_oneof![
        4 => "[a-zA-Z_][a-zA-Z0-9_.]{0,8}",
        1 => "[a-z]{1,3}( [a-z]{1,3})?",
    ];
    proptest::collection::btree_set(element_id, 1..8).prop_flat_map(|ids| {
        let ids: Vec<String> = ids.into_iter().collect();
        let n = ids.len();
        (
            Just(ids),
            proptest::collection::vec(proptest::option::of("[A-Z]{1,3}"), n),
            proptest::collection::vec(proptest::collection::btree_set("[a-z]{1,4}", 0..3), n),
            proptest::collection::vec((0..n, 0..n, 1u64..50), 0..16),
        )
            .prop_map(|(ids, containers, methods, edges)| {
                let mut b = GraphBuilder::new();
                for (i, name) in ids.iter().enumerate() {
                    b.add_element(
                        Element::new(
                            id(name),
                            containers[i].clone(),
                            methods[i].iter().cloned().collect(),
                        )
                        .unwrap(),
                    )
                    .unwrap();
                }
                for (s, t, w) in edges {
                    b.add_edge(id(&ids[s]), id(&ids[t]), w, "gen").unwrap();
                }
                b.finish().graph
            })
    })
}
