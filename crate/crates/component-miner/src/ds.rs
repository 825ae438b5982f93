//! Dependency Strength: pairwise coupling values computed from the graph.
//!
//! The clustering pipeline never looks at the graph directly; it works on a
//! [`DsMatrix`] computed under one of four documented strategies. The choice
//! of strategy changes the clustering result, so it is recorded in every
//! downstream artifact.

use clap::ValueEnum;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::{DependencyGraph, ElementId};

#[derive(Debug, Error, PartialEq)]
pub enum DsError {
    #[error("expected {expected} values for {n} elements, got {got}")]
    Dimension {
        n: usize,
        expected: usize,
        got: usize,
    },
    #[error("value at ({i}, {j}) must be finite and non-negative (got {value})")]
    InvalidValue { i: usize, j: usize, value: f64 },
    #[error("diagonal value at ({0}, {0}) must be 0")]
    NonZeroDiagonal(usize),
    #[error("{strategy} matrices must be symmetric; ({i}, {j}) differs from ({j}, {i})")]
    Asymmetric {
        strategy: &'static str,
        i: usize,
        j: usize,
    },
    #[error("duplicate element id `{0}` in matrix order")]
    DuplicateElement(String),
}

/// How pairwise dependency strength F(i, j) is computed from edge weights.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize, ValueEnum)]
#[serde(rename_all = "snake_case")]
pub enum DsStrategy {
    /// F(i, j) = weight of the edge i -> j, 0 when absent. The only
    /// asymmetric strategy; the clusterer symmetrizes it with
    /// max(F(i, j), F(j, i)).
    RawOut,
    /// F(i, j) = weight(i -> j) + weight(j -> i).
    SymmetricSum,
    /// Symmetric sum divided by the maximum symmetric sum over all pairs,
    /// so values land in [0, 1] regardless of project size. All-zero for an
    /// edgeless graph. The default.
    #[default]
    NormalizedSymmetric,
    /// |neighbors(i) and neighbors(j)| / |neighbors(i) or neighbors(j)| over
    /// undirected neighbor sets; 0 when the union is empty.
    Jaccard,
}

impl DsStrategy {
    /// True for strategies whose matrix equals its transpose by construction.
    pub fn is_symmetric(self) -> bool {
        !matches!(self, DsStrategy::RawOut)
    }

    pub fn as_str(self) -> &'static str {
        match self {
            DsStrategy::RawOut => "raw_out",
            DsStrategy::SymmetricSum => "symmetric_sum",
            DsStrategy::NormalizedSymmetric => "normalized_symmetric",
            DsStrategy::Jaccard => "jaccard",
        }
    }
}

/// Square matrix of dependency-strength values over a fixed element order.
/// The diagonal is 0 by convention; all values are finite and non-negative.
#[derive(Debug, Clone, PartialEq)]
pub struct DsMatrix {
    order: Vec<ElementId>,
    values: Vec<f64>,
    strategy: DsStrategy,
}

impl DsMatrix {
    /// Builds a matrix from externally computed values (row-major), checking
    /// the invariants: square, finite non-negative values, zero diagonal, and
    /// symmetry for the symmetric strategies.
    pub fn new(
        order: Vec<ElementId>,
        values: Vec<f64>,
        strategy: DsStrategy,
    ) -> Result<Self, DsError> {
        let n = order.len();
        if values.len() != n * n {
            return Err(DsError::Dimension {
                n,
                expected: n * n,
                got: values.len(),
            });
        }
        let mut seen = std::collections::BTreeSet::new();
        for id in &order {
            if !seen.insert(id) {
                return Err(DsError::DuplicateElement(id.as_str().to_string()));
            }
        }
        for i in 0..n {
            if values[i * n + i] != 0.0 {
                return Err(DsError::NonZeroDiagonal(i));
            }
            for j in 0..n {
                let v = values[i * n + j];
                if !v.is_finite() || v < 0.0 {
                    return Err(DsError::InvalidValue { i, j, value: v });
                }
                if strategy.is_symmetric() && v != values[j * n + i] {
                    return Err(DsError::Asymmetric {
                        strategy: strategy.as_str(),
                        i,
                        j,
                    });
                }
            }
        }
        Ok(DsMatrix {
            order,
            values,
            strategy,
        })
    }

    pub fn n(&self) -> usize {
        self.order.len()
    }

    /// Element order fixing row/column indices (sorted by id).
    pub fn order(&self) -> &[ElementId] {
        &self.order
    }

    pub fn strategy(&self) -> DsStrategy {
        self.strategy
    }

    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.values[i * self.order.len() + j]
    }

    /// The value the clusterer compares against the threshold: the matrix
    /// value for symmetric strategies, max(F(i, j), F(j, i)) for raw_out.
    pub fn symmetric_value(&self, i: usize, j: usize) -> f64 {
        if self.strategy.is_symmetric() {
            self.get(i, j)
        } else {
            self.get(i, j).max(self.get(j, i))
        }
    }

    /// Largest off-diagonal symmetrized value; 0 for n <= 1.
    pub fn max_symmetric_value(&self) -> f64 {
        let n = self.n();
        let mut max = 0.0f64;
        for i in 0..n {
            for j in (i + 1)..n {
                max = max.max(self.symmetric_value(i, j));
            }
        }
        max
    }
}

/// Computes the DS matrix of a graph under the given strategy.
///
/// Deterministic: identical inputs produce bit-identical matrices. The
/// element order is the graph's sorted id order.
pub fn compute_ds(graph: &DependencyGraph, strategy: DsStrategy) -> DsMatrix {
    let order: Vec<ElementId> = graph.element_ids().cloned().collect();
    let n = order.len();
    let index: std::collections::BTreeMap<&ElementId, usize> =
        order.iter().enumerate().map(|(i, id)| (id, i)).collect();

    // Dense adjacency of integer weights.
    let mut adj = vec![0u64; n * n];
    for (s, t, w) in graph.edges() {
        adj[index[s] * n + index[t]] = w;
    }

    let mut values = vec![0f64; n * n];
    match strategy {
        DsStrategy::RawOut => {
            for i in 0..n {
                for j in 0..n {
                    if i != j {
                        values[i * n + j] = adj[i * n + j] as f64;
                    }
                }
            }
        }
        DsStrategy::SymmetricSum => {
            for i in 0..n {
                for j in 0..n {
                    if i != j {
                        values[i * n + j] = (adj[i * n + j] + adj[j * n + i]) as f64;
                    }
                }
            }
        }
        DsStrategy::NormalizedSymmetric => {
            let mut max_sum = 0u64;
            for i in 0..n {
                for j in (i + 1)..n {
                    max_sum = max_sum.max(adj[i * n + j] + adj[j * n + i]);
                }
            }
            if max_sum > 0 {
                let max_sum = max_sum as f64;
                for i in 0..n {
                    for j in 0..n {
                        if i != j {
                            values[i * n + j] = (adj[i * n + j] + adj[j * n + i]) as f64 / max_sum;
                        }
                    }
                }
            }
        }
        DsStrategy::Jaccard => {
            let mut neighbors: Vec<std::collections::BTreeSet<usize>> = vec![Default::default(); n];
            for i in 0..n {
                for j in 0..n {
                    if i != j && (adj[i * n + j] > 0 || adj[j * n + i] > 0) {
                        neighbors[i].insert(j);
                    }
                }
            }
            for i in 0..n {
                for j in 0..n {
                    if i == j {
                        continue;
                    }
                    let inter = neighbors[i].intersection(&neighbors[j]).count();
                    let union = neighbors[i].union(&neighbors[j]).count();
                    if union > 0 {
                        values[i * n + j] = inter as f64 / union as f64;
                    }
                }
            }
        }
    }

    DsMatrix {
        order,
        values,
        strategy,
    }
}

/// All distinct positive off-diagonal values, strictly increasing. These are
/// the only thresholds at which the clustering can change.
pub fn distinct_thresholds(matrix: &DsMatrix) -> Vec<f64> {
    let n = matrix.n();
    let mut values: Vec<f64> = Vec::new();
    for i in 0..n {
        for j in 0..n {
            if i != j {
                let v = matrix.get(i, j);
                if v > 0.0 {
                    values.push(v);
                }
            }
        }
    }
    values.sort_by(f64::total_cmp);
    values.dedup();
    values
}

/// Renders the full square matrix as CSV: a header row of element ids, then
/// one labeled row per element. Values carry 9 significant digits.
pub fn matrix_to_csv(matrix: &DsMatrix) -> String {
    let mut out = String::from("element");
    for id in matrix.order() {
        out.push(',');
        out.push_str(id.as_str());
    }
    out.push('\n');
    for (i, id) in matrix.order().iter().enumerate() {
        out.push_str(id.as_str());
        for j in 0..matrix.n() {
            out.push(',');
            out.push_str(&format!("{:.8e}", matrix.get(i, j)));
        }
        out.push('\n');
    }
    out
}
