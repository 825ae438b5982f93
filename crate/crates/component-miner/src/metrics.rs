//! Component coupling metrics: CBOM, reconfigurable-component selection,
//! minimum-cut splitting, and the supporting cohesion ratio.

use std::collections::BTreeSet;

use clap::ValueEnum;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::ds::DsStrategy;
use crate::graph::{DependencyGraph, ElementId};

#[derive(Debug, Error, PartialEq)]
pub enum MetricsError {
    #[error("component `{0}` is not in the component set")]
    NotInSet(String),
    #[error("component set does not partition the graph elements: {0}")]
    NotAPartition(String),
    #[error("component `{0}` needs at least 2 members to split")]
    TooFewMembers(String),
    #[error("cannot select from an empty component list")]
    EmptyList,
    #[error("malformed component set JSON: {0}")]
    MalformedJson(String),
    #[error("unsupported schema version `{0}` (expected `components/1`)")]
    SchemaVersion(String),
    #[error("invalid component set: {0}")]
    InvalidSet(String),
    #[error("split part name `{0}` collides with an existing component")]
    NameCollision(String),
}

/// A named group of elements exposed as one reusable unit.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Component {
    pub name: String,
    pub members: BTreeSet<ElementId>,
}

impl Component {
    pub fn contains(&self, id: &str) -> bool {
        self.members.contains(id)
    }
}

/// The components produced from one clustering, in canonical cluster order.
#[derive(Debug, Clone, PartialEq)]
pub struct ComponentSet {
    pub components: Vec<Component>,
    pub source_f_min: f64,
    pub strategy: DsStrategy,
}

impl ComponentSet {
    pub fn get(&self, name: &str) -> Option<&Component> {
        self.components.iter().find(|c| c.name == name)
    }
}

pub const COMPONENT_SET_SCHEMA: &str = "components/1";

#[derive(Serialize, Deserialize)]
struct ComponentSetFile {
    schema: String,
    strategy: DsStrategy,
    source_f_min: f64,
    components: Vec<Component>,
}

/// Serializes a component set as a `components/1` JSON document.
pub fn component_set_to_json(set: &ComponentSet) -> String {
    let file = ComponentSetFile {
        schema: COMPONENT_SET_SCHEMA.to_string(),
        strategy: set.strategy,
        source_f_min: set.source_f_min,
        components: set.components.clone(),
    };
    serde_json::to_string_pretty(&file).expect("component set serialization")
}

/// Parses and validates a `components/1` document.
pub fn component_set_from_json(text: &str) -> Result<ComponentSet, MetricsError> {
    let file: ComponentSetFile =
        serde_json::from_str(text).map_err(|e| MetricsError::MalformedJson(e.to_string()))?;
    if file.schema != COMPONENT_SET_SCHEMA {
        return Err(MetricsError::SchemaVersion(file.schema));
    }
    let mut names = BTreeSet::new();
    for c in &file.components {
        if c.members.is_empty() {
            return Err(MetricsError::InvalidSet(format!(
                "component `{}` has no members",
                c.name
            )));
        }
        if !names.insert(c.name.as_str()) {
            return Err(MetricsError::InvalidSet(format!(
                "duplicate component name `{}`",
                c.name
            )));
        }
    }
    Ok(ComponentSet {
        components: file.components,
        source_f_min: file.source_f_min,
        strategy: file.strategy,
    })
}

/// Which invocations CBOM counts.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize, ValueEnum)]
#[serde(rename_all = "snake_case")]
pub enum CbomMode {
    /// Total weight of edges leaving the component (outgoing invocation
    /// count). The default.
    #[default]
    Weighted,
    /// Number of distinct outside elements the component invokes.
    Distinct,
}

/// How the reconfigurable component(s) are chosen from the CBOM table.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "rule", rename_all = "snake_case")]
pub enum SelectionRule {
    /// The single component with maximal CBOM (ties broken by smallest name).
    Max,
    /// Every component whose CBOM strictly exceeds the scalar P.
    Threshold { p: u64 },
}

impl std::fmt::Display for SelectionRule {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            SelectionRule::Max => write!(f, "max"),
            SelectionRule::Threshold { p } => write!(f, "threshold({p})"),
        }
    }
}

/// CBOM of `component`: outgoing invocations to elements outside it.
///
/// `all` must partition the graph's elements and contain `component`.
pub fn cbom(
    component: &Component,
    all: &ComponentSet,
    graph: &DependencyGraph,
    mode: CbomMode,
) -> Result<u64, MetricsError> {
    validate_partition(all, graph)?;
    let member = all
        .components
        .iter()
        .find(|c| c.name == component.name)
        .ok_or_else(|| MetricsError::NotInSet(component.name.clone()))?;
    if member.members != component.members {
        return Err(MetricsError::NotInSet(component.name.clone()));
    }
    Ok(cbom_unchecked(component, graph, mode))
}

fn cbom_unchecked(component: &Component, graph: &DependencyGraph, mode: CbomMode) -> u64 {
    let mut weighted = 0u64;
    let mut targets: BTreeSet<&ElementId> = BTreeSet::new();
    for (s, t, w) in graph.edges() {
        if component.contains(s.as_str()) && !component.contains(t.as_str()) {
            weighted += w;
            targets.insert(t);
        }
    }
    match mode {
        CbomMode::Weighted => weighted,
        CbomMode::Distinct => targets.len() as u64,
    }
}

fn validate_partition(all: &ComponentSet, graph: &DependencyGraph) -> Result<(), MetricsError> {
    let mut seen: BTreeSet<&ElementId> = BTreeSet::new();
    for c in &all.components {
        if c.members.is_empty() {
            return Err(MetricsError::NotAPartition(format!(
                "component `{}` is empty",
                c.name
            )));
        }
        for m in &c.members {
            if !graph.contains_element(m.as_str()) {
                return Err(MetricsError::NotAPartition(format!(
                    "member `{m}` is not a graph element"
                )));
            }
            if !seen.insert(m) {
                return Err(MetricsError::NotAPartition(format!(
                    "member `{m}` appears in more than one component"
                )));
            }
        }
    }
    if seen.len() != graph.element_count() {
        return Err(MetricsError::NotAPartition(format!(
            "components cover {} of {} elements",
            seen.len(),
            graph.element_count()
        )));
    }
    Ok(())
}

/// The component with maximal CBOM; ties broken by lexicographically
/// smallest name.
pub fn select_reconfigurable_max(entries: &[(String, u64)]) -> Result<String, MetricsError> {
    entries
        .iter()
        .max_by(|(na, ca), (nb, cb)| ca.cmp(cb).then_with(|| nb.cmp(na)))
        .map(|(name, _)| name.clone())
        .ok_or(MetricsError::EmptyList)
}

/// Every component whose CBOM strictly exceeds `p`, in name order.
pub fn select_reconfigurable_threshold(entries: &[(String, u64)], p: u64) -> Vec<String> {
    let mut names: Vec<String> = entries
        .iter()
        .filter(|(_, c)| *c > p)
        .map(|(n, _)| n.clone())
        .collect();
    names.sort();
    names
}

/// One row of the CBOM table.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CbomEntry {
    pub component: String,
    pub cbom: u64,
}

/// CBOM per component plus the reconfigurable selection under a rule.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CbomReport {
    pub mode: CbomMode,
    #[serde(flatten)]
    pub rule: SelectionRule,
    pub entries: Vec<CbomEntry>,
    pub reconfigurable: Vec<String>,
}

/// Builds the full CBOM report for a component set.
pub fn cbom_report(
    all: &ComponentSet,
    graph: &DependencyGraph,
    mode: CbomMode,
    rule: SelectionRule,
) -> Result<CbomReport, MetricsError> {
    validate_partition(all, graph)?;
    let entries: Vec<CbomEntry> = all
        .components
        .iter()
        .map(|c| CbomEntry {
            component: c.name.clone(),
            cbom: cbom_unchecked(c, graph, mode),
        })
        .collect();
    let pairs: Vec<(String, u64)> = entries
        .iter()
        .map(|e| (e.component.clone(), e.cbom))
        .collect();
    let reconfigurable = match rule {
        SelectionRule::Max => vec![select_reconfigurable_max(&pairs)?],
        SelectionRule::Threshold { p } => select_reconfigurable_threshold(&pairs, p),
    };
    Ok(CbomReport {
        mode,
        rule,
        entries,
        reconfigurable,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SplitMethod {
    Exhaustive,
    Heuristic,
}

/// A two-way split of a component minimizing crossing invocation weight.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SplitResult {
    pub original: Component,
    pub parts: [Component; 2],
    /// Total weight of member-to-member edges crossing the cut, both
    /// directions.
    pub cut_weight: u64,
    pub method: SplitMethod,
}

/// Members above this count switch from exhaustive search to local search.
pub const EXHAUSTIVE_SPLIT_LIMIT: usize = 15;

/// Splits a component into two non-empty parts minimizing the weight of
/// internal edges crossing the cut.
///
/// Up to [`EXHAUSTIVE_SPLIT_LIMIT`] members every bipartition is evaluated
/// (the smallest member is pinned to part 1, so 2^(n-1) - 1 candidates).
/// Larger components use a deterministic local search: seed with the first
/// half of the sorted member list, then repeatedly apply the single-member
/// move or pairwise swap that most reduces the cut until no strict
/// improvement exists. Ties prefer the partition whose first part is
/// lexicographically smallest.
pub fn split_component(
    component: &Component,
    graph: &DependencyGraph,
) -> Result<SplitResult, MetricsError> {
    let members: Vec<&ElementId> = component.members.iter().collect();
    let n = members.len();
    if n < 2 {
        return Err(MetricsError::TooFewMembers(component.name.clone()));
    }

    let index: std::collections::BTreeMap<&str, usize> = members
        .iter()
        .enumerate()
        .map(|(i, id)| (id.as_str(), i))
        .collect();
    let internal_edges: Vec<(usize, usize, u64)> = graph
        .edges()
        .filter_map(
            |(s, t, w)| match (index.get(s.as_str()), index.get(t.as_str())) {
                (Some(&a), Some(&b)) => Some((a, b, w)),
                _ => None,
            },
        )
        .collect();

    let cut_of = |in_part2: &[bool]| -> u64 {
        internal_edges
            .iter()
            .filter(|(a, b, _)| in_part2[*a] != in_part2[*b])
            .map(|(_, _, w)| w)
            .sum()
    };

    let (assignment, method) = if n <= EXHAUSTIVE_SPLIT_LIMIT {
        (exhaustive_split(n, &cut_of), SplitMethod::Exhaustive)
    } else {
        (local_search_split(n, &cut_of), SplitMethod::Heuristic)
    };
    let cut_weight = cut_of(&assignment);

    let part = |want_part2: bool| -> BTreeSet<ElementId> {
        members
            .iter()
            .enumerate()
            .filter(|(i, _)| assignment[*i] == want_part2)
            .map(|(_, id)| (*id).clone())
            .collect()
    };
    Ok(SplitResult {
        original: component.clone(),
        parts: [
            Component {
                name: format!("{}_1", component.name),
                members: part(false),
            },
            Component {
                name: format!("{}_2", component.name),
                members: part(true),
            },
        ],
        cut_weight,
        method,
    })
}

/// Evaluates every bipartition with member 0 pinned to part 1. Returns the
/// assignment (true = part 2) with minimal cut; ties keep the
/// lexicographically smallest part-1 index list.
fn exhaustive_split(n: usize, cut_of: &dyn Fn(&[bool]) -> u64) -> Vec<bool> {
    let mut best: Option<(u64, Vec<usize>, Vec<bool>)> = None;
    for mask in 1u32..(1 << (n - 1)) {
        let assignment: Vec<bool> = std::iter::once(false)
            .chain((0..n - 1).map(|b| mask & (1 << b) != 0))
            .collect();
        let cut = cut_of(&assignment);
        let better = match &best {
            None => true,
            Some((best_cut, best_part1, _)) => {
                cut < *best_cut || (cut == *best_cut && part1_indices(&assignment) < *best_part1)
            }
        };
        if better {
            best = Some((cut, part1_indices(&assignment), assignment));
        }
    }
    best.expect("n >= 2 has at least one bipartition").2
}

fn part1_indices(assignment: &[bool]) -> Vec<usize> {
    assignment
        .iter()
        .enumerate()
        .filter(|(_, &p2)| !p2)
        .map(|(i, _)| i)
        .collect()
}

/// Steepest-descent local search over single-member moves and pairwise
/// swaps, from the deterministic half/half seed.
fn local_search_split(n: usize, cut_of: &dyn Fn(&[bool]) -> u64) -> Vec<bool> {
    let half = n.div_ceil(2);
    let mut assignment: Vec<bool> = (0..n).map(|i| i >= half).collect();
    let mut current = cut_of(&assignment);
    loop {
        let mut best: Option<(u64, Vec<bool>)> = None;
        let mut consider = |candidate: Vec<bool>, cut: u64| {
            if cut < current && best.as_ref().is_none_or(|(b, _)| cut < *b) {
                best = Some((cut, candidate));
            }
        };
        let size2 = assignment.iter().filter(|&&p| p).count();
        for i in 0..n {
            // Keep both parts non-empty.
            let leaving_size = if assignment[i] { size2 } else { n - size2 };
            if leaving_size <= 1 {
                continue;
            }
            let mut candidate = assignment.clone();
            candidate[i] = !candidate[i];
            let cut = cut_of(&candidate);
            consider(candidate, cut);
        }
        for i in 0..n {
            for j in 0..n {
                if assignment[i] || !assignment[j] {
                    continue;
                }
                let mut candidate = assignment.clone();
                candidate.swap(i, j);
                let cut = cut_of(&candidate);
                consider(candidate, cut);
            }
        }
        match best {
            Some((cut, next)) => {
                assignment = next;
                current = cut;
            }
            None => break,
        }
    }
    if assignment[0] {
        // Canonical orientation: the smallest member belongs to part 1.
        for p in assignment.iter_mut() {
            *p = !*p;
        }
    }
    assignment
}

/// Replaces `split.original` in the set with the two parts.
pub fn apply_split(all: &ComponentSet, split: &SplitResult) -> Result<ComponentSet, MetricsError> {
    let position = all
        .components
        .iter()
        .position(|c| c.name == split.original.name && c.members == split.original.members)
        .ok_or_else(|| MetricsError::NotInSet(split.original.name.clone()))?;
    for part in &split.parts {
        if all.components.iter().any(|c| c.name == part.name) {
            return Err(MetricsError::NameCollision(part.name.clone()));
        }
    }
    let mut components = all.components.clone();
    components.splice(position..=position, split.parts.iter().cloned());
    Ok(ComponentSet {
        components,
        source_f_min: all.source_f_min,
        strategy: all.strategy,
    })
}

/// Internal edge weight over internal plus outgoing external weight;
/// 0 when the component touches no edges.
pub fn cohesion(component: &Component, graph: &DependencyGraph) -> f64 {
    let mut internal = 0u64;
    let mut outgoing = 0u64;
    for (s, t, w) in graph.edges() {
        match (
            component.contains(s.as_str()),
            component.contains(t.as_str()),
        ) {
            (true, true) => internal += w,
            (true, false) => outgoing += w,
            _ => {}
        }
    }
    if internal + outgoing == 0 {
        0.0
    } else {
        internal as f64 / (internal + outgoing) as f64
    }
}
