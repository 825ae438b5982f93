//! Command-line front end. Every pipeline stage is individually invokable
//! and stages compose through intermediate JSON files (`ingest` emits
//! `depgraph/1`, `components` emits `components/1`, `repo` persists
//! `repo/1`).
//!
//! Exit codes: 0 success, 1 usage error, 2 input/parse error, 3 internal
//! invariant violation.

use std::collections::BTreeSet;
use std::fmt;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::cluster::{cluster, map_to_components, sweep, Clustering};
use crate::ds::{compute_ds, matrix_to_csv, DsStrategy};
use crate::graph::{
    ingest_invocation_log, parse_dot_graph, parse_json_graph, to_json_string, DependencyGraph,
    ElementId,
};
use crate::metrics::{
    apply_split, cbom_report, component_set_from_json, component_set_to_json, split_component,
    CbomMode, ComponentSet, SelectionRule, SplitResult,
};
use crate::repo::{RepoError, RepositoryStore};
use crate::report::{
    analyze_report, render_analyze_text, render_cbom_text, render_clusters_text,
    render_components_text, render_sweep_text, render_table, split_report, sweep_report,
    ReconfigureReport, SplitReport, REPORT_SCHEMA,
};

/// A failure with the exit code it maps to.
#[derive(Debug)]
pub enum CliError {
    /// Bad flags or flag combinations (exit 1).
    Usage(String),
    /// Unreadable or invalid input data (exit 2).
    Input(String),
    /// A violated internal invariant (exit 3).
    Internal(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => 1,
            CliError::Input(_) => 2,
            CliError::Internal(_) => 3,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Usage(msg) | CliError::Input(msg) => f.write_str(msg),
            CliError::Internal(msg) => write!(f, "internal invariant violation: {msg}"),
        }
    }
}

impl std::error::Error for CliError {}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum InputFormat {
    Json,
    Dot,
    Csv,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Json,
    Text,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum RuleArg {
    /// Select the component with maximal CBOM
    Max,
    /// Select every component with CBOM > P (requires --p)
    Threshold,
}

#[derive(Debug, Parser)]
#[command(
    name = "component-miner",
    version,
    about = "Identify reusable business components by clustering a weighted dependency graph"
)]
pub struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Run the full pipeline: cluster, name components, measure CBOM, select
    Analyze(AnalyzeArgs),
    /// Parse dependency data and emit the canonical depgraph/1 JSON
    Ingest(IngestArgs),
    /// Cluster at one threshold, or sweep every distinct threshold
    Cluster(ClusterArgs),
    /// Map a clustering to named components (components/1 JSON)
    Components(ComponentsArgs),
    /// CBOM per component and the reconfigurable selection
    Cbom(CbomArgs),
    /// Split the selected over-coupled component(s) to reduce coupling
    Reconfigure(ReconfigureArgs),
    /// Manage the component repository (reuse tracking)
    Repo(RepoArgs),
}

#[derive(Debug, Args)]
struct InputArgs {
    /// Dependency data to analyze
    #[arg(long, value_name = "PATH")]
    input: PathBuf,
    /// Input format; inferred from the file extension when omitted
    #[arg(long, value_enum, value_name = "FORMAT")]
    input_format: Option<InputFormat>,
}

#[derive(Debug, Args)]
struct StrategyArg {
    /// Dependency-strength formula. The clustering result depends on this
    /// choice; there is no single canonical definition, so pick the one that
    /// fits your data and keep it fixed for comparable runs.
    #[arg(
        long,
        value_enum,
        default_value_t = DsStrategy::NormalizedSymmetric,
        long_help = "Dependency-strength formula used for the DS matrix. \
                     raw-out: weight(i->j), asymmetric, symmetrized with max() for clustering. \
                     symmetric-sum: weight(i->j) + weight(j->i). \
                     normalized-symmetric (default): symmetric sum divided by the largest pair \
                     sum, so thresholds live in [0, 1] regardless of project size. \
                     jaccard: overlap of undirected neighbor sets. \
                     The choice changes the clustering; it is recorded in every report."
    )]
    strategy: DsStrategy,
}

#[derive(Debug, Args)]
struct RenderArgs {
    /// Report format
    #[arg(long, value_enum, default_value_t = OutputFormat::Text)]
    format: OutputFormat,
    /// Omit the header line from text reports
    #[arg(long)]
    no_header: bool,
}

#[derive(Debug, Args)]
struct AnalyzeArgs {
    #[command(flatten)]
    input: InputArgs,
    #[command(flatten)]
    strategy: StrategyArg,
    /// Cluster at this minimum dependency strength
    #[arg(
        long,
        value_name = "REAL",
        allow_negative_numbers = true,
        conflicts_with = "sweep",
        required_unless_present = "sweep"
    )]
    f_min: Option<f64>,
    /// Report one section per distinct threshold instead of one clustering
    #[arg(long)]
    sweep: bool,
    /// CBOM counting mode
    #[arg(long, value_enum, default_value_t = CbomMode::Weighted, conflicts_with = "sweep")]
    cbom_mode: CbomMode,
    /// Selection rule for reconfigurable components
    #[arg(long, value_enum, default_value_t = RuleArg::Max, conflicts_with = "sweep")]
    rule: RuleArg,
    /// Scalar CBOM threshold P (with --rule threshold)
    #[arg(long, value_name = "INT", conflicts_with = "sweep")]
    p: Option<u64>,
    /// Also split the selected component(s)
    #[arg(long, conflicts_with = "sweep")]
    split: bool,
    /// Write the DS matrix as CSV to this path
    #[arg(long, value_name = "PATH")]
    emit_matrix: Option<PathBuf>,
    #[command(flatten)]
    render: RenderArgs,
}

#[derive(Debug, Args)]
struct IngestArgs {
    #[command(flatten)]
    input: InputArgs,
}

#[derive(Debug, Args)]
struct ClusterArgs {
    #[command(flatten)]
    input: InputArgs,
    #[command(flatten)]
    strategy: StrategyArg,
    /// Cluster at this minimum dependency strength
    #[arg(
        long,
        value_name = "REAL",
        allow_negative_numbers = true,
        conflicts_with = "sweep",
        required_unless_present = "sweep"
    )]
    f_min: Option<f64>,
    /// Report every distinct threshold
    #[arg(long)]
    sweep: bool,
    /// Write the DS matrix as CSV to this path
    #[arg(long, value_name = "PATH")]
    emit_matrix: Option<PathBuf>,
    #[command(flatten)]
    render: RenderArgs,
}

#[derive(Debug, Args)]
struct ComponentsArgs {
    #[command(flatten)]
    input: InputArgs,
    #[command(flatten)]
    strategy: StrategyArg,
    /// Minimum dependency strength for the clustering
    #[arg(long, value_name = "REAL", allow_negative_numbers = true)]
    f_min: f64,
    #[command(flatten)]
    render: RenderArgs,
}

#[derive(Debug, Args)]
struct CbomArgs {
    #[command(flatten)]
    input: InputArgs,
    #[command(flatten)]
    strategy: StrategyArg,
    /// components/1 JSON produced by the `components` subcommand
    #[arg(
        long,
        value_name = "PATH",
        conflicts_with = "f_min",
        required_unless_present = "f_min"
    )]
    components: Option<PathBuf>,
    /// Compute the components at this threshold instead
    #[arg(long, value_name = "REAL", allow_negative_numbers = true)]
    f_min: Option<f64>,
    /// CBOM counting mode
    #[arg(long, value_enum, default_value_t = CbomMode::Weighted)]
    cbom_mode: CbomMode,
    /// Selection rule for reconfigurable components
    #[arg(long, value_enum, default_value_t = RuleArg::Max)]
    rule: RuleArg,
    /// Scalar CBOM threshold P (with --rule threshold)
    #[arg(long, value_name = "INT")]
    p: Option<u64>,
    #[command(flatten)]
    render: RenderArgs,
}

#[derive(Debug, Args)]
struct ReconfigureArgs {
    #[command(flatten)]
    cbom: CbomArgs,
    /// Rewrite the --components file with the split applied
    #[arg(long, requires = "components")]
    apply: bool,
}

#[derive(Debug, Args)]
struct RepoArgs {
    /// Repository file (or set COMPONENT_MINER_REPO)
    #[arg(long, value_name = "PATH", env = "COMPONENT_MINER_REPO", global = true)]
    repo: Option<PathBuf>,
    #[command(subcommand)]
    command: RepoCommand,
}

#[derive(Debug, Subcommand)]
enum RepoCommand {
    /// Register a component (reuse count 0, version 1)
    Add {
        name: String,
        /// Node label linking the record to a clustering output
        #[arg(long, value_name = "LABEL")]
        node: String,
        /// Comma-separated member element ids
        #[arg(long, value_delimiter = ',', value_name = "IDS")]
        members: Vec<String>,
    },
    /// Record one reuse event
    Touch { name: String },
    /// Reuse report: most-reused first, unused flagged
    List {
        #[command(flatten)]
        render: RenderArgs,
    },
    /// Print one record in full
    Show {
        name: String,
        #[command(flatten)]
        render: RenderArgs,
    },
}

pub fn run(cli: Cli) -> Result<(), CliError> {
    match cli.command {
        Command::Analyze(args) => cmd_analyze(args),
        Command::Ingest(args) => cmd_ingest(args),
        Command::Cluster(args) => cmd_cluster(args),
        Command::Components(args) => cmd_components(args),
        Command::Cbom(args) => cmd_cbom(args),
        Command::Reconfigure(args) => cmd_reconfigure(args),
        Command::Repo(args) => cmd_repo(args),
    }
}

fn detect_format(args: &InputArgs) -> Result<InputFormat, CliError> {
    if let Some(format) = args.input_format {
        return Ok(format);
    }
    match args
        .input
        .extension()
        .and_then(|e| e.to_str())
        .map(str::to_ascii_lowercase)
        .as_deref()
    {
        Some("json") => Ok(InputFormat::Json),
        Some("dot") | Some("gv") => Ok(InputFormat::Dot),
        Some("csv") => Ok(InputFormat::Csv),
        _ => Err(CliError::Usage(format!(
            "cannot infer the input format of `{}`; pass --input-format",
            args.input.display()
        ))),
    }
}

fn load_graph(args: &InputArgs) -> Result<DependencyGraph, CliError> {
    let format = detect_format(args)?;
    let path = args.input.display().to_string();
    let text = std::fs::read_to_string(&args.input)
        .map_err(|e| CliError::Input(format!("{path}: {e}")))?;
    let parsed = match format {
        InputFormat::Json => parse_json_graph(&text),
        InputFormat::Dot => parse_dot_graph(&text),
        InputFormat::Csv => ingest_invocation_log(&text),
    }
    .map_err(|e| CliError::Input(format!("{path}: {e}")))?;
    for warning in &parsed.warnings {
        eprintln!("warning: {path}: {warning}");
    }
    Ok(parsed.graph)
}

fn load_pipeline_graph(args: &InputArgs) -> Result<DependencyGraph, CliError> {
    let graph = load_graph(args)?;
    if graph.is_empty() {
        return Err(CliError::Input("empty graph".into()));
    }
    Ok(graph)
}

fn selection_rule(rule: RuleArg, p: Option<u64>) -> Result<SelectionRule, CliError> {
    match (rule, p) {
        (RuleArg::Max, None) => Ok(SelectionRule::Max),
        (RuleArg::Max, Some(_)) => Err(CliError::Usage(
            "--p is only valid with --rule threshold".into(),
        )),
        (RuleArg::Threshold, Some(p)) => Ok(SelectionRule::Threshold { p }),
        (RuleArg::Threshold, None) => Err(CliError::Usage("--rule threshold requires --p".into())),
    }
}

fn write_matrix(path: &Option<PathBuf>, matrix: &crate::ds::DsMatrix) -> Result<(), CliError> {
    if let Some(path) = path {
        std::fs::write(path, matrix_to_csv(matrix))
            .map_err(|e| CliError::Input(format!("{}: {e}", path.display())))?;
    }
    Ok(())
}

fn text_header(command: &str, source: &str) -> String {
    format!(
        "component-miner {} {command} {source}",
        env!("CARGO_PKG_VERSION")
    )
}

fn print_json<T: serde::Serialize>(value: &T) {
    println!(
        "{}",
        serde_json::to_string_pretty(value).expect("report serialization")
    );
}

fn print_text(render: &RenderArgs, header: String, body: String) {
    if !render.no_header {
        println!("{header}");
        println!();
    }
    print!("{body}");
}

/// Splits each selected component. Under the max rule a single-member
/// selection is an error; under the threshold rule it is skipped with a
/// warning (P may flag many components).
fn make_splits(
    names: &[String],
    set: &ComponentSet,
    graph: &DependencyGraph,
    rule: SelectionRule,
) -> Result<Vec<SplitResult>, CliError> {
    let mut splits = Vec::new();
    for name in names {
        let component = set
            .get(name)
            .ok_or_else(|| CliError::Internal(format!("selected component `{name}` missing")))?;
        if component.members.len() < 2 {
            match rule {
                SelectionRule::Max => {
                    return Err(CliError::Input(format!(
                        "component `{name}` has a single member and cannot be split"
                    )))
                }
                SelectionRule::Threshold { .. } => {
                    eprintln!("warning: skipping single-member component `{name}`");
                    continue;
                }
            }
        }
        let split =
            split_component(component, graph).map_err(|e| CliError::Internal(e.to_string()))?;
        splits.push(split);
    }
    Ok(splits)
}

fn cluster_and_map(
    matrix: &crate::ds::DsMatrix,
    graph: &DependencyGraph,
    f_min: f64,
) -> Result<(Clustering, ComponentSet), CliError> {
    let clustering = cluster(matrix, f_min).map_err(|e| CliError::Usage(e.to_string()))?;
    let set =
        map_to_components(&clustering, graph).map_err(|e| CliError::Internal(e.to_string()))?;
    Ok((clustering, set))
}

fn compute_component_set(
    graph: &DependencyGraph,
    strategy: DsStrategy,
    f_min: f64,
) -> Result<(Clustering, ComponentSet), CliError> {
    let matrix = compute_ds(graph, strategy);
    cluster_and_map(&matrix, graph, f_min)
}

/// Loads a component set from a file (input errors are the user's) or
/// computes one from a threshold (errors there are ours).
fn resolve_component_set(
    graph: &DependencyGraph,
    strategy: DsStrategy,
    components: &Option<PathBuf>,
    f_min: Option<f64>,
) -> Result<(ComponentSet, bool), CliError> {
    match (components, f_min) {
        (Some(path), None) => {
            let text = std::fs::read_to_string(path)
                .map_err(|e| CliError::Input(format!("{}: {e}", path.display())))?;
            let set = component_set_from_json(&text)
                .map_err(|e| CliError::Input(format!("{}: {e}", path.display())))?;
            Ok((set, true))
        }
        (None, Some(f_min)) => {
            let (_, set) = compute_component_set(graph, strategy, f_min)?;
            Ok((set, false))
        }
        _ => unreachable!("clap enforces exactly one of --components/--f-min"),
    }
}

fn cmd_analyze(args: AnalyzeArgs) -> Result<(), CliError> {
    let graph = load_pipeline_graph(&args.input)?;
    let input = args.input.input.display().to_string();
    let strategy = args.strategy.strategy;
    let matrix = compute_ds(&graph, strategy);
    write_matrix(&args.emit_matrix, &matrix)?;

    if args.sweep {
        let entries = sweep(&matrix);
        let report = sweep_report(&input, &entries);
        match args.render.format {
            OutputFormat::Json => print_json(&report),
            OutputFormat::Text => print_text(
                &args.render,
                text_header("analyze --sweep", &input),
                render_sweep_text(&report),
            ),
        }
        return Ok(());
    }

    let f_min = args.f_min.expect("clap requires --f-min without --sweep");
    let (clustering, set) = cluster_and_map(&matrix, &graph, f_min)?;
    let rule = selection_rule(args.rule, args.p)?;
    let cbom = cbom_report(&set, &graph, args.cbom_mode, rule)
        .map_err(|e| CliError::Internal(e.to_string()))?;
    let splits = if args.split {
        Some(
            make_splits(&cbom.reconfigurable, &set, &graph, rule)?
                .iter()
                .map(|s| split_report(s, &graph))
                .collect::<Vec<SplitReport>>(),
        )
    } else {
        None
    };
    let report = analyze_report(&input, &clustering, &set, &cbom, &graph, splits);
    match args.render.format {
        OutputFormat::Json => print_json(&report),
        OutputFormat::Text => print_text(
            &args.render,
            text_header("analyze", &input),
            render_analyze_text(&report),
        ),
    }
    Ok(())
}

fn cmd_ingest(args: IngestArgs) -> Result<(), CliError> {
    let graph = load_graph(&args.input)?;
    println!("{}", to_json_string(&graph));
    Ok(())
}

fn cmd_cluster(args: ClusterArgs) -> Result<(), CliError> {
    let graph = load_pipeline_graph(&args.input)?;
    let input = args.input.input.display().to_string();
    let matrix = compute_ds(&graph, args.strategy.strategy);
    write_matrix(&args.emit_matrix, &matrix)?;

    if args.sweep {
        let report = sweep_report(&input, &sweep(&matrix));
        match args.render.format {
            OutputFormat::Json => print_json(&report),
            OutputFormat::Text => print_text(
                &args.render,
                text_header("cluster --sweep", &input),
                render_sweep_text(&report),
            ),
        }
        return Ok(());
    }

    let f_min = args.f_min.expect("clap requires --f-min without --sweep");
    let clustering = cluster(&matrix, f_min).map_err(|e| CliError::Usage(e.to_string()))?;
    match args.render.format {
        OutputFormat::Json => print_json(&clustering),
        OutputFormat::Text => print_text(
            &args.render,
            text_header("cluster", &input),
            render_clusters_text(&clustering),
        ),
    }
    Ok(())
}

fn cmd_components(args: ComponentsArgs) -> Result<(), CliError> {
    let graph = load_pipeline_graph(&args.input)?;
    let input = args.input.input.display().to_string();
    let (_, set) = compute_component_set(&graph, args.strategy.strategy, args.f_min)?;
    match args.render.format {
        OutputFormat::Json => println!("{}", component_set_to_json(&set)),
        OutputFormat::Text => print_text(
            &args.render,
            text_header("components", &input),
            render_components_text(&set),
        ),
    }
    Ok(())
}

fn cmd_cbom(args: CbomArgs) -> Result<(), CliError> {
    let graph = load_pipeline_graph(&args.input)?;
    let input = args.input.input.display().to_string();
    let (set, from_file) =
        resolve_component_set(&graph, args.strategy.strategy, &args.components, args.f_min)?;
    let rule = selection_rule(args.rule, args.p)?;
    let report = cbom_report(&set, &graph, args.cbom_mode, rule).map_err(|e| {
        if from_file {
            CliError::Input(e.to_string())
        } else {
            CliError::Internal(e.to_string())
        }
    })?;
    match args.render.format {
        OutputFormat::Json => print_json(&report),
        OutputFormat::Text => print_text(
            &args.render,
            text_header("cbom", &input),
            render_cbom_text(&report),
        ),
    }
    Ok(())
}

fn cmd_reconfigure(args: ReconfigureArgs) -> Result<(), CliError> {
    let ReconfigureArgs {
        cbom: cbom_args,
        apply,
    } = args;
    let graph = load_pipeline_graph(&cbom_args.input)?;
    let input = cbom_args.input.input.display().to_string();
    let (set, from_file) = resolve_component_set(
        &graph,
        cbom_args.strategy.strategy,
        &cbom_args.components,
        cbom_args.f_min,
    )?;
    let rule = selection_rule(cbom_args.rule, cbom_args.p)?;
    let table = cbom_report(&set, &graph, cbom_args.cbom_mode, rule).map_err(|e| {
        if from_file {
            CliError::Input(e.to_string())
        } else {
            CliError::Internal(e.to_string())
        }
    })?;
    let splits = make_splits(&table.reconfigurable, &set, &graph, rule)?;

    if apply {
        let path = cbom_args
            .components
            .as_ref()
            .expect("clap: --apply requires --components");
        let mut updated = set.clone();
        for split in &splits {
            updated = apply_split(&updated, split).map_err(|e| CliError::Input(e.to_string()))?;
        }
        std::fs::write(path, component_set_to_json(&updated))
            .map_err(|e| CliError::Input(format!("{}: {e}", path.display())))?;
    }

    let report = ReconfigureReport {
        schema: REPORT_SCHEMA.to_string(),
        input: input.clone(),
        strategy: set.strategy,
        cbom_mode: table.mode,
        rule: table.rule,
        entries: table.entries.clone(),
        reconfigurable: table.reconfigurable.clone(),
        splits: splits.iter().map(|s| split_report(s, &graph)).collect(),
        applied: apply,
    };
    match cbom_args.render.format {
        OutputFormat::Json => print_json(&report),
        OutputFormat::Text => {
            let mut body = render_cbom_text(&table);
            for split in &report.splits {
                body.push('\n');
                body.push_str(&crate::report::render_split_text(split));
            }
            if report.applied {
                body.push_str("\nApplied: component set rewritten\n");
            }
            print_text(&cbom_args.render, text_header("reconfigure", &input), body);
        }
    }
    Ok(())
}

fn cmd_repo(args: RepoArgs) -> Result<(), CliError> {
    let path = args.repo.ok_or_else(|| {
        CliError::Usage("--repo <path> (or COMPONENT_MINER_REPO) is required".into())
    })?;
    let input_err = |e: RepoError| CliError::Input(e.to_string());

    match args.command {
        RepoCommand::Add {
            name,
            node,
            members,
        } => {
            let mut store = if path.exists() {
                RepositoryStore::load(&path).map_err(input_err)?
            } else {
                RepositoryStore::new()
            };
            let members: BTreeSet<ElementId> = members
                .iter()
                .map(|m| {
                    ElementId::new(m.as_str())
                        .map_err(|e| CliError::Usage(format!("--members: {e}")))
                })
                .collect::<Result<_, _>>()?;
            store.register(&name, &node, members).map_err(|e| match e {
                RepoError::DuplicateName(_) => CliError::Usage(e.to_string()),
                other => CliError::Input(other.to_string()),
            })?;
            store.save(&path).map_err(input_err)?;
            println!("registered {name} (version 1)");
        }
        RepoCommand::Touch { name } => {
            let mut store = RepositoryStore::load(&path).map_err(input_err)?;
            let count = store.record_reuse(&name).map_err(input_err)?;
            store.save(&path).map_err(input_err)?;
            println!("recorded reuse of {name} (count {count})");
        }
        RepoCommand::List { render } => {
            let store = RepositoryStore::load(&path).map_err(input_err)?;
            let report = store.reuse_report();
            match render.format {
                OutputFormat::Json => print_json(&report),
                OutputFormat::Text => {
                    let rows: Vec<Vec<String>> = report
                        .iter()
                        .map(|e| {
                            vec![
                                e.name.clone(),
                                e.reuse_count.to_string(),
                                e.node.clone(),
                                if e.unused {
                                    "unused".into()
                                } else {
                                    String::new()
                                },
                            ]
                        })
                        .collect();
                    print_text(
                        &render,
                        text_header("repo list", &path.display().to_string()),
                        render_table(&["Component", "Count of Reuse", "Node", "Status"], &rows),
                    );
                }
            }
        }
        RepoCommand::Show { name, render } => {
            let store = RepositoryStore::load(&path).map_err(input_err)?;
            let record = store
                .get(&name)
                .ok_or_else(|| CliError::Input(format!("unknown component `{name}`")))?;
            match render.format {
                OutputFormat::Json => print_json(record),
                OutputFormat::Text => {
                    let members: Vec<&str> = record.members.iter().map(|m| m.as_str()).collect();
                    let body = format!(
                        "Name: {}\nReuse count: {}\nNode: {}\nVersion: {}\nMembers: {}\n",
                        record.name,
                        record.reuse_count,
                        record.node,
                        record.version,
                        if members.is_empty() {
                            "(none)".to_string()
                        } else {
                            members.join(", ")
                        }
                    );
                    print_text(
                        &render,
                        text_header("repo show", &path.display().to_string()),
                        body,
                    );
                }
            }
        }
    }
    Ok(())
}
