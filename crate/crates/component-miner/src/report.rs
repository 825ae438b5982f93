//! Report documents emitted by the CLI, in JSON and aligned-column text.
//!
//! JSON reports are deterministic: no timestamps, struct-ordered keys, and
//! all collections in canonical order, so identical inputs produce
//! byte-identical output.

use serde::{Deserialize, Serialize};

use crate::cluster::Clustering;
use crate::ds::DsStrategy;
use crate::graph::{DependencyGraph, ElementId};
use crate::metrics::{
    cohesion, CbomMode, CbomReport, ComponentSet, SelectionRule, SplitMethod, SplitResult,
};

pub const REPORT_SCHEMA: &str = "report/1";

/// One component row of an analyze report.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ComponentReport {
    pub name: String,
    pub members: Vec<ElementId>,
    pub cbom: u64,
    pub cohesion: f64,
}

/// A split rendered for reporting, with the cohesion change the split causes.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SplitReport {
    pub component: String,
    pub cut_weight: u64,
    pub method: SplitMethod,
    pub parts: Vec<ComponentMembers>,
    pub cohesion_before: f64,
    pub cohesion_after: Vec<f64>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ComponentMembers {
    pub name: String,
    pub members: Vec<ElementId>,
}

/// Full pipeline report for a fixed threshold.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct AnalyzeReport {
    pub schema: String,
    pub input: String,
    pub strategy: DsStrategy,
    pub f_min: f64,
    pub cbom_mode: CbomMode,
    pub clusters: Vec<Vec<ElementId>>,
    pub components: Vec<ComponentReport>,
    #[serde(flatten)]
    pub rule: SelectionRule,
    pub reconfigurable: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub splits: Option<Vec<SplitReport>>,
}

/// Report of the reconfigure subcommand: the CBOM table plus the splits.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ReconfigureReport {
    pub schema: String,
    pub input: String,
    pub strategy: DsStrategy,
    pub cbom_mode: CbomMode,
    #[serde(flatten)]
    pub rule: SelectionRule,
    pub entries: Vec<crate::metrics::CbomEntry>,
    pub reconfigurable: Vec<String>,
    pub splits: Vec<SplitReport>,
    pub applied: bool,
}

/// Threshold-sweep report: one entry per threshold, finest first.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SweepReport {
    pub schema: String,
    pub input: String,
    pub strategy: DsStrategy,
    pub entries: Vec<SweepEntry>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SweepEntry {
    pub f_min: f64,
    pub cluster_count: usize,
    pub clusters: Vec<Vec<ElementId>>,
}

pub fn split_report(split: &SplitResult, graph: &DependencyGraph) -> SplitReport {
    SplitReport {
        component: split.original.name.clone(),
        cut_weight: split.cut_weight,
        method: split.method,
        parts: split
            .parts
            .iter()
            .map(|p| ComponentMembers {
                name: p.name.clone(),
                members: p.members.iter().cloned().collect(),
            })
            .collect(),
        cohesion_before: cohesion(&split.original, graph),
        cohesion_after: split.parts.iter().map(|p| cohesion(p, graph)).collect(),
    }
}

pub fn analyze_report(
    input: &str,
    clustering: &Clustering,
    set: &ComponentSet,
    cbom: &CbomReport,
    graph: &DependencyGraph,
    splits: Option<Vec<SplitReport>>,
) -> AnalyzeReport {
    let components = set
        .components
        .iter()
        .zip(&cbom.entries)
        .map(|(c, e)| ComponentReport {
            name: c.name.clone(),
            members: c.members.iter().cloned().collect(),
            cbom: e.cbom,
            cohesion: cohesion(c, graph),
        })
        .collect();
    AnalyzeReport {
        schema: REPORT_SCHEMA.to_string(),
        input: input.to_string(),
        strategy: clustering.strategy,
        f_min: clustering.f_min,
        cbom_mode: cbom.mode,
        clusters: clustering.clusters.clone(),
        components,
        rule: cbom.rule,
        reconfigurable: cbom.reconfigurable.clone(),
        splits,
    }
}

pub fn sweep_report(input: &str, entries: &[Clustering]) -> SweepReport {
    SweepReport {
        schema: REPORT_SCHEMA.to_string(),
        input: input.to_string(),
        strategy: entries.first().map(|c| c.strategy).unwrap_or_default(),
        entries: entries
            .iter()
            .map(|c| SweepEntry {
                f_min: c.f_min,
                cluster_count: c.cluster_count(),
                clusters: c.clusters.clone(),
            })
            .collect(),
    }
}

/// Aligned-column table: headers plus rows, two spaces between columns.
pub fn render_table(headers: &[&str], rows: &[Vec<String>]) -> String {
    let columns = headers.len();
    let mut widths: Vec<usize> = headers.iter().map(|h| h.len()).collect();
    for row in rows {
        for (i, cell) in row.iter().enumerate() {
            widths[i] = widths[i].max(cell.len());
        }
    }
    let mut out = String::new();
    let mut push_row = |cells: &[String]| {
        for (i, cell) in cells.iter().enumerate() {
            if i + 1 == columns {
                out.push_str(cell.trim_end());
            } else {
                out.push_str(&format!("{:<width$}  ", cell, width = widths[i]));
            }
        }
        while out.ends_with(' ') {
            out.pop();
        }
        out.push('\n');
    };
    push_row(&headers.iter().map(|h| h.to_string()).collect::<Vec<_>>());
    for row in rows {
        push_row(row);
    }
    out
}

fn member_list(members: &[ElementId]) -> String {
    members
        .iter()
        .map(ElementId::as_str)
        .collect::<Vec<_>>()
        .join(", ")
}

pub fn render_clusters_text(clustering: &Clustering) -> String {
    let mut out = format!(
        "F_min: {}  Strategy: {}  Clusters: {}\n",
        clustering.f_min,
        clustering.strategy.as_str(),
        clustering.cluster_count()
    );
    for (i, members) in clustering.clusters.iter().enumerate() {
        out.push_str(&format!("  {}. {}\n", i + 1, member_list(members)));
    }
    out
}

pub fn render_analyze_text(report: &AnalyzeReport) -> String {
    let mut out = format!(
        "Strategy: {}  F_min: {}  CBOM mode: {}\n\nClusters ({}):\n",
        report.strategy.as_str(),
        report.f_min,
        match report.cbom_mode {
            CbomMode::Weighted => "weighted",
            CbomMode::Distinct => "distinct",
        },
        report.clusters.len()
    );
    for (i, members) in report.clusters.iter().enumerate() {
        out.push_str(&format!("  {}. {}\n", i + 1, member_list(members)));
    }
    out.push('\n');
    let rows: Vec<Vec<String>> = report
        .components
        .iter()
        .map(|c| {
            vec![
                c.name.clone(),
                c.members.len().to_string(),
                c.cbom.to_string(),
                format!("{:.3}", c.cohesion),
            ]
        })
        .collect();
    out.push_str(&render_table(
        &["Component", "Members", "CBOM", "Cohesion"],
        &rows,
    ));
    out.push_str(&format!(
        "\nRule: {}\nReconfigurable: {}\n",
        report.rule,
        if report.reconfigurable.is_empty() {
            "(none)".to_string()
        } else {
            report.reconfigurable.join(", ")
        }
    ));
    if let Some(splits) = &report.splits {
        for s in splits {
            out.push('\n');
            out.push_str(&render_split_text(s));
        }
    }
    out
}

pub fn render_split_text(split: &SplitReport) -> String {
    let mut out = format!(
        "Split {} -> {} + {}  (cut weight {}, {})\n",
        split.component,
        split.parts[0].name,
        split.parts[1].name,
        split.cut_weight,
        match split.method {
            SplitMethod::Exhaustive => "exhaustive",
            SplitMethod::Heuristic => "heuristic",
        }
    );
    for part in &split.parts {
        out.push_str(&format!(
            "  {}: {}\n",
            part.name,
            member_list(&part.members)
        ));
    }
    out.push_str(&format!(
        "  Cohesion: {:.3} -> {:.3} / {:.3}\n",
        split.cohesion_before, split.cohesion_after[0], split.cohesion_after[1]
    ));
    out
}

pub fn render_sweep_text(report: &SweepReport) -> String {
    let mut out = format!("Strategy: {}\n\n", report.strategy.as_str());
    let rows: Vec<Vec<String>> = report
        .entries
        .iter()
        .map(|e| vec![e.f_min.to_string(), e.cluster_count.to_string()])
        .collect();
    out.push_str(&render_table(&["F_min", "Clusters"], &rows));
    out
}

pub fn render_components_text(set: &ComponentSet) -> String {
    let mut out = format!(
        "F_min: {}  Strategy: {}\n\n",
        set.source_f_min,
        set.strategy.as_str()
    );
    let rows: Vec<Vec<String>> = set
        .components
        .iter()
        .map(|c| {
            vec![
                c.name.clone(),
                c.members.len().to_string(),
                c.members
                    .iter()
                    .map(|m| m.as_str())
                    .collect::<Vec<_>>()
                    .join(", "),
            ]
        })
        .collect();
    out.push_str(&render_table(&["Component", "Size", "Members"], &rows));
    out
}

pub fn render_cbom_text(report: &CbomReport) -> String {
    let rows: Vec<Vec<String>> = report
        .entries
        .iter()
        .map(|e| vec![e.component.clone(), e.cbom.to_string()])
        .collect();
    let mut out = render_table(&["Component", "CBOM"], &rows);
    out.push_str(&format!(
        "\nMode: {}  Rule: {}\nReconfigurable: {}\n",
        match report.mode {
            CbomMode::Weighted => "weighted",
            CbomMode::Distinct => "distinct",
        },
        report.rule,
        if report.reconfigurable.is_empty() {
            "(none)".to_string()
        } else {
            report.reconfigurable.join(", ")
        }
    ));
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn table_alignment_pads_all_but_last_column() {
        let table = render_table(
            &["Component", "Count of Reuse", "Node"],
            &[
                vec!["DAO".into(), "36".into(), "N_k".into()],
                vec!["Webtier(WBR)".into(), "24".into(), "N_i".into()],
            ],
        );
        let lines: Vec<&str> = table.lines().collect();
        assert_eq!(lines[0], "Component     Count of Reuse  Node");
        assert_eq!(lines[1], "DAO           36              N_k");
        assert_eq!(lines[2], "Webtier(WBR)  24              N_i");
    }
}
