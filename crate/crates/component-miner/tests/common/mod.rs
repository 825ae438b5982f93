//! Shared helpers for the integration and acceptance suites.
#![allow(dead_code)]

use std::path::PathBuf;
use std::process::{Command, Output};

use rand::Rng;

use component_miner::ds::{DsMatrix, DsStrategy};
use component_miner::graph::{DependencyGraph, Element, ElementId, GraphBuilder};
use component_miner::repo::RepositoryStore;

pub fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_component-miner"))
}

pub fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

pub fn stdout(output: &Output) -> String {
    String::from_utf8(output.stdout.clone()).expect("utf-8 stdout")
}

pub fn stderr(output: &Output) -> String {
    String::from_utf8(output.stderr.clone()).expect("utf-8 stderr")
}

pub fn fixture_path(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("tests/data")
        .join(name)
}

pub fn hr_portal_path() -> String {
    fixture_path("hr_portal.json").display().to_string()
}

pub fn id(s: &str) -> ElementId {
    ElementId::new(s).unwrap()
}

/// Random DS matrix with grid-quantized values in [0, 1]; half symmetric,
/// half raw_out.
pub fn random_matrix(rng: &mut impl Rng, max_n: usize) -> DsMatrix {
    let n = rng.random_range(1..=max_n);
    let symmetric = rng.random_bool(0.5);
    let mut values = vec![0.0f64; n * n];
    for i in 0..n {
        for j in 0..n {
            if i != j {
                values[i * n + j] = rng.random_range(0..=10) as f64 / 10.0;
            }
        }
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
}

/// Thresholds biased toward exact grid values so >= boundaries are hit.
pub fn random_threshold(rng: &mut impl Rng) -> f64 {
    if rng.random_bool(0.4) {
        rng.random_range(0..=12) as f64 / 10.0
    } else {
        rng.random_range(0.0..1.2)
    }
}

/// Random graph with optional containers/methods and occasional odd ids.
pub fn random_graph(rng: &mut impl Rng, max_n: usize, with_metadata: bool) -> DependencyGraph {
    let n = rng.random_range(1..=max_n);
    let names: Vec<String> = (0..n)
        .map(|i| match rng.random_range(0..4u8) {
            0 => format!("pkg.Class{i}"),
            1 => format!("odd id {i}"),
            2 => format!("C{i}\"q\""),
            _ => format!("Element{i}"),
        })
        .collect();
    let mut builder = GraphBuilder::new();
    for name in &names {
        let container = if with_metadata && rng.random_bool(0.5) {
            Some(format!("T{}", rng.random_range(0..3)))
        } else {
            None
        };
        let methods = if with_metadata && rng.random_bool(0.4) {
            (0..rng.random_range(1..=3))
                .map(|k| format!("m{k}"))
                .collect()
        } else {
            Vec::new()
        };
        builder
            .add_element(Element::new(id(name), container, methods).unwrap())
            .unwrap();
    }
    let edge_count = rng.random_range(0..=3 * n);
    for _ in 0..edge_count {
        let s = &names[rng.random_range(0..n)];
        let t = &names[rng.random_range(0..n)];
        if s != t {
            builder
                .add_edge(id(s), id(t), rng.random_range(1..=50), "gen")
                .unwrap();
        }
    }
    builder.finish().graph
}

/// Random store built through the public API only.
pub fn random_store(rng: &mut impl Rng) -> RepositoryStore {
    let mut store = RepositoryStore::new();
    let count = rng.random_range(0..=8);
    for k in 0..count {
        let name = format!("comp{k}");
        let members: std::collections::BTreeSet<ElementId> = (0..rng.random_range(0..4))
            .map(|m| id(&format!("el{m}")))
            .collect();
        store
            .register(&name, &format!("N_{k}"), members)
            .expect("unique names");
        for _ in 0..rng.random_range(0..30) {
            store.record_reuse(&name).unwrap();
        }
        if rng.random_bool(0.3) {
            store
                .update_members(&name, [id("changed")].into_iter().collect())
                .unwrap();
        }
    }
    store
}
