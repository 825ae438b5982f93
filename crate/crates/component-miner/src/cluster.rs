//! Threshold clustering: merge every pair at or above F_min, close
//! transitively, and map the resulting partition to named components.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::ds::{distinct_thresholds, DsMatrix, DsStrategy};
use crate::graph::{DependencyGraph, ElementId};
use crate::metrics::{Component, ComponentSet};

#[derive(Debug, Error, PartialEq)]
pub enum ClusterError {
    #[error("threshold must be a non-negative finite number (got {0})")]
    InvalidThreshold(f64),
    #[error("clustering does not partition the graph elements: {0}")]
    ElementMismatch(String),
}

/// A partition of the matrix elements at a given threshold.
///
/// Canonical form: every cluster's members are sorted, and clusters are
/// listed by their smallest member id, so identical inputs produce
/// byte-identical reports.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Clustering {
    pub f_min: f64,
    pub strategy: DsStrategy,
    pub clusters: Vec<Vec<ElementId>>,
}

impl Clustering {
    pub fn cluster_count(&self) -> usize {
        self.clusters.len()
    }

    pub fn element_count(&self) -> usize {
        self.clusters.iter().map(Vec::len).sum()
    }

    /// Index of the cluster containing `id`, if any.
    pub fn cluster_of(&self, id: &str) -> Option<usize> {
        self.clusters
            .iter()
            .position(|c| c.iter().any(|m| m.as_str() == id))
    }
}

struct UnionFind {
    parent: Vec<usize>,
    size: Vec<usize>,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind {
            parent: (0..n).collect(),
            size: vec![1; n],
        }
    }

    fn find(&mut self, x: usize) -> usize {
        let mut root = x;
        while self.parent[root] != root {
            root = self.parent[root];
        }
        let mut cur = x;
        while self.parent[cur] != root {
            let next = self.parent[cur];
            self.parent[cur] = root;
            cur = next;
        }
        root
    }

    fn union(&mut self, a: usize, b: usize) {
        let (mut ra, mut rb) = (self.find(a), self.find(b));
        if ra == rb {
            return;
        }
        if self.size[ra] < self.size[rb] {
            std::mem::swap(&mut ra, &mut rb);
        }
        self.parent[rb] = ra;
        self.size[ra] += self.size[rb];
    }
}

/// Partitions the elements into the connected components of the graph whose
/// edges are the pairs with symmetrized DS >= `f_min`.
///
/// `f_min = 0` merges every pair (DS is never negative), yielding a single
/// cluster for any non-empty matrix.
pub fn cluster(matrix: &DsMatrix, f_min: f64) -> Result<Clustering, ClusterError> {
    if !(f_min >= 0.0 && f_min.is_finite()) {
        return Err(ClusterError::InvalidThreshold(f_min));
    }
    let n = matrix.n();
    let mut uf = UnionFind::new(n);
    for i in 0..n {
        for j in (i + 1)..n {
            if matrix.symmetric_value(i, j) >= f_min {
                uf.union(i, j);
            }
        }
    }

    let mut by_root: std::collections::BTreeMap<usize, Vec<ElementId>> = Default::default();
    for i in 0..n {
        by_root
            .entry(uf.find(i))
            .or_default()
            .push(matrix.order()[i].clone());
    }
    // Canonical form regardless of the matrix's element order: members
    // sorted, clusters by smallest member.
    let mut clusters: Vec<Vec<ElementId>> = by_root.into_values().collect();
    for members in &mut clusters {
        members.sort_unstable();
    }
    clusters.sort_by(|a, b| a[0].cmp(&b[0]));

    Ok(Clustering {
        f_min,
        strategy: matrix.strategy(),
        clusters,
    })
}

/// Clusters the matrix at every threshold where the result can change:
/// a singleton baseline just above the maximum value, then one entry per
/// distinct positive value, in descending threshold order. Consecutive
/// entries form a coarsening chain.
pub fn sweep(matrix: &DsMatrix) -> Vec<Clustering> {
    let thresholds = distinct_thresholds(matrix);
    let baseline = thresholds.last().copied().unwrap_or(0.0).next_up();
    let mut entries = Vec::with_capacity(thresholds.len() + 1);
    entries.push(cluster(matrix, baseline).expect("baseline threshold is valid"));
    for &t in thresholds.iter().rev() {
        entries.push(cluster(matrix, t).expect("matrix values are valid thresholds"));
    }
    entries
}

/// Maps each cluster to a named business component.
///
/// A cluster is named by the most common container label among its members;
/// when labels are absent or tied the fallback is `C<k>` with k the cluster's
/// position in canonical order. Name collisions get `#2`, `#3`, ... suffixes.
pub fn map_to_components(
    clustering: &Clustering,
    graph: &DependencyGraph,
) -> Result<ComponentSet, ClusterError> {
    let clustered: std::collections::BTreeSet<&ElementId> =
        clustering.clusters.iter().flatten().collect();
    if clustered.len() != clustering.element_count() {
        return Err(ClusterError::ElementMismatch(
            "duplicate element across clusters".into(),
        ));
    }
    if clustered.len() != graph.element_count() {
        return Err(ClusterError::ElementMismatch(format!(
            "clustering covers {} elements, graph has {}",
            clustered.len(),
            graph.element_count()
        )));
    }
    for id in &clustered {
        if !graph.contains_element(id.as_str()) {
            return Err(ClusterError::ElementMismatch(format!(
                "element `{id}` is not in the graph"
            )));
        }
    }

    let mut used_names: std::collections::BTreeSet<String> = Default::default();
    let mut components = Vec::with_capacity(clustering.clusters.len());
    for (k, members) in clustering.clusters.iter().enumerate() {
        let base = majority_container(members, graph).unwrap_or_else(|| format!("C{}", k + 1));
        let mut name = base.clone();
        let mut suffix = 1;
        while used_names.contains(&name) {
            suffix += 1;
            name = format!("{base}#{suffix}");
        }
        used_names.insert(name.clone());
        components.push(Component {
            name,
            members: members.iter().cloned().collect(),
        });
    }

    Ok(ComponentSet {
        components,
        source_f_min: clustering.f_min,
        strategy: clustering.strategy,
    })
}

/// The unique most-common container label of the members, if one exists.
fn majority_container(members: &[ElementId], graph: &DependencyGraph) -> Option<String> {
    let mut counts: std::collections::BTreeMap<&str, usize> = Default::default();
    for id in members {
        if let Some(container) = graph
            .element(id.as_str())
            .and_then(|el| el.container.as_deref())
        {
            *counts.entry(container).or_default() += 1;
        }
    }
    let best = counts.values().copied().max()?;
    let mut winners = counts.iter().filter(|(_, &c)| c == best);
    let (label, _) = winners.next()?;
    if winners.next().is_some() {
        return None; // tied labels fall back to positional naming
    }
    Some(label.to_string())
}
