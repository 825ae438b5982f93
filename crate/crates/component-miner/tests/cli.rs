//! End-to-end tests of the command-line interface: exit codes, report
//! stability, and pipeline composition through intermediate files.

mod common;

use component_miner::cluster::{cluster, Clustering};
use component_miner::ds::{compute_ds, DsStrategy};
use component_miner::graph::parse_json_graph;
use component_miner::repo::RepositoryStore;
use component_miner::report::{AnalyzeReport, SweepReport};

use common::{bin, fixture_path, hr_portal_path, id, run, stderr, stdout};

#[test]
fn analyze_selects_dao_on_the_fixture() {
    let output = run(&[
        "analyze",
        "--input",
        &hr_portal_path(),
        "--f-min",
        "0.7",
        "--rule",
        "max",
        "--format",
        "json",
    ]);
    assert!(output.status.success());
    let report: AnalyzeReport = serde_json::from_str(&stdout(&output)).unwrap();
    assert_eq!(report.reconfigurable, vec!["DAO"]);
    assert_eq!(report.f_min, 0.7);
    assert_eq!(report.clusters.len(), 3);
    assert_eq!(report.components.len(), 3);
    assert!(report.splits.is_none());
}

#[test]
fn analyze_split_reports_the_dao_bisection() {
    let output = run(&[
        "analyze",
        "--input",
        &hr_portal_path(),
        "--f-min",
        "0.7",
        "--split",
        "--format",
        "json",
    ]);
    assert!(output.status.success());
    let report: AnalyzeReport = serde_json::from_str(&stdout(&output)).unwrap();
    let splits = report.splits.unwrap();
    assert_eq!(splits.len(), 1);
    assert_eq!(splits[0].component, "DAO");
    assert_eq!(splits[0].parts[0].name, "DAO_1");
    assert_eq!(splits[0].parts[1].name, "DAO_2");
    assert_eq!(splits[0].cut_weight, 60);
}

#[test]
fn empty_graph_exits_2() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("empty.json");
    std::fs::write(&path, r#"{"elements":[],"edges":[]}"#).unwrap();
    let output = run(&[
        "analyze",
        "--input",
        path.to_str().unwrap(),
        "--f-min",
        "0.5",
    ]);
    assert_eq!(output.status.code(), Some(2));
    assert!(stderr(&output).contains("empty graph"));
}

#[test]
fn sweep_sections_match_independent_runs() {
    let output = run(&[
        "analyze",
        "--input",
        &hr_portal_path(),
        "--sweep",
        "--format",
        "json",
    ]);
    assert!(output.status.success());
    let report: SweepReport = serde_json::from_str(&stdout(&output)).unwrap();
    assert!(report.entries.len() > 2);

    // Counts are non-increasing as the threshold descends.
    for pair in report.entries.windows(2) {
        assert!(pair[0].f_min > pair[1].f_min);
        assert!(pair[0].cluster_count >= pair[1].cluster_count);
    }

    // Oracle: recompute each section independently through the library.
    let graph = parse_json_graph(&std::fs::read_to_string(fixture_path("hr_portal.json")).unwrap())
        .unwrap()
        .graph;
    let matrix = compute_ds(&graph, DsStrategy::NormalizedSymmetric);
    for entry in &report.entries {
        let expected = cluster(&matrix, entry.f_min).unwrap();
        assert_eq!(entry.clusters, expected.clusters, "f_min {}", entry.f_min);
    }
}

#[test]
fn reports_are_byte_identical_across_runs() {
    let args = [
        "analyze",
        "--input",
        &hr_portal_path(),
        "--f-min",
        "0.7",
        "--split",
        "--format",
        "json",
    ];
    let first = run(&args);
    let second = run(&args);
    assert!(first.status.success());
    assert_eq!(stdout(&first), stdout(&second));

    let text_args = [
        "analyze",
        "--input",
        &hr_portal_path(),
        "--f-min",
        "0.7",
        "--format",
        "text",
    ];
    let first = run(&text_args);
    let second = run(&text_args);
    assert_eq!(stdout(&first), stdout(&second));
}

#[test]
fn json_report_rendering_is_idempotent() {
    let output = run(&[
        "analyze",
        "--input",
        &hr_portal_path(),
        "--f-min",
        "0.7",
        "--split",
        "--format",
        "json",
    ]);
    let text = stdout(&output);
    let report: AnalyzeReport = serde_json::from_str(&text).unwrap();
    let rerendered = serde_json::to_string_pretty(&report).unwrap();
    assert_eq!(text.trim_end(), rerendered);
}

#[test]
fn no_header_strips_exactly_the_header() {
    let with = run(&[
        "cluster",
        "--input",
        &hr_portal_path(),
        "--f-min",
        "0.7",
        "--format",
        "text",
    ]);
    let without = run(&[
        "cluster",
        "--input",
        &hr_portal_path(),
        "--f-min",
        "0.7",
        "--format",
        "text",
        "--no-header",
    ]);
    let with = stdout(&with);
    let without = stdout(&without);
    assert!(with.starts_with("component-miner "));
    assert!(!without.starts_with("component-miner "));
    let stripped: String = with.splitn(3, '\n').nth(2).unwrap().to_string();
    assert_eq!(stripped, without);
}

#[test]
fn dot_and_converted_json_cluster_identically() {
    let dir = tempfile::tempdir().unwrap();
    let dot_path = dir.path().join("g.dot");
    std::fs::write(
        &dot_path,
        "digraph g { A -> B [weight=4]; B -> C [weight=4]; C -> D; Lonely; }\n",
    )
    .unwrap();

    let ingested = run(&["ingest", "--input", dot_path.to_str().unwrap()]);
    assert!(ingested.status.success());
    let json_path = dir.path().join("g.json");
    std::fs::write(&json_path, stdout(&ingested)).unwrap();

    let from_dot = run(&[
        "cluster",
        "--input",
        dot_path.to_str().unwrap(),
        "--f-min",
        "0.5",
        "--format",
        "json",
    ]);
    let from_json = run(&[
        "cluster",
        "--input",
        json_path.to_str().unwrap(),
        "--f-min",
        "0.5",
        "--format",
        "json",
    ]);
    assert!(from_dot.status.success() && from_json.status.success());
    assert_eq!(stdout(&from_dot), stdout(&from_json));

    let clustering: Clustering = serde_json::from_str(&stdout(&from_dot)).unwrap();
    assert_eq!(clustering.element_count(), 5);
}

#[test]
fn csv_log_runs_through_the_full_pipeline() {
    // Two call-heavy groups bridged by one weak edge, with duplicate rows
    // and a recursive call that must be dropped along the way.
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("invocations.csv");
    std::fs::write(
        &path,
        "caller,callee,count\n\
         ui.Login,ui.Home,40\n\
         ui.Home,ui.Login,20\n\
         ui.Login,ui.Home,20\n\
         svc.Auth,svc.Session,60\n\
         svc.Auth,svc.Auth,9\n\
         ui.Login,svc.Auth,5\n",
    )
    .unwrap();

    let output = run(&[
        "analyze",
        "--input",
        path.to_str().unwrap(),
        "--f-min",
        "0.5",
        "--format",
        "json",
    ]);
    assert!(output.status.success(), "stderr: {}", stderr(&output));
    assert!(stderr(&output).contains("self-edge"));
    let report: AnalyzeReport = serde_json::from_str(&stdout(&output)).unwrap();
    // Duplicate rows merged: ui pair sum 80, svc pair 60, bridge 5; at 0.5
    // the two groups separate.
    assert_eq!(report.clusters.len(), 2);
    let sizes: Vec<usize> = report.components.iter().map(|c| c.members.len()).collect();
    assert_eq!(sizes, vec![2, 2]);
    let cboms: Vec<u64> = report.components.iter().map(|c| c.cbom).collect();
    assert_eq!(cboms, vec![0, 5]);
}

#[test]
fn csv_self_edges_warn_on_stderr() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("calls.csv");
    std::fs::write(&path, "caller,callee,count\nA,B,2\nA,A,9\n").unwrap();
    let output = run(&["ingest", "--input", path.to_str().unwrap()]);
    assert!(output.status.success());
    assert!(stderr(&output).contains("self-edge"));
    assert!(stdout(&output).contains("\"weight\": 2"));
}

#[test]
fn components_file_feeds_cbom_and_reconfigure() {
    let dir = tempfile::tempdir().unwrap();
    let comps_path = dir.path().join("components.json");
    let components = run(&[
        "components",
        "--input",
        &hr_portal_path(),
        "--f-min",
        "0.7",
        "--format",
        "json",
    ]);
    assert!(components.status.success());
    std::fs::write(&comps_path, stdout(&components)).unwrap();

    let via_file = run(&[
        "cbom",
        "--input",
        &hr_portal_path(),
        "--components",
        comps_path.to_str().unwrap(),
        "--format",
        "json",
    ]);
    let via_threshold = run(&[
        "cbom",
        "--input",
        &hr_portal_path(),
        "--f-min",
        "0.7",
        "--format",
        "json",
    ]);
    assert_eq!(stdout(&via_file), stdout(&via_threshold));

    let reconfigure = run(&[
        "reconfigure",
        "--input",
        &hr_portal_path(),
        "--components",
        comps_path.to_str().unwrap(),
        "--apply",
        "--format",
        "json",
    ]);
    assert!(reconfigure.status.success());
    let rewritten = std::fs::read_to_string(&comps_path).unwrap();
    assert!(rewritten.contains("DAO_1") && rewritten.contains("DAO_2"));
    assert!(!rewritten.contains("\"name\": \"DAO\""));
}

#[test]
fn emit_matrix_writes_the_csv() {
    let dir = tempfile::tempdir().unwrap();
    let matrix_path = dir.path().join("ds.csv");
    let output = run(&[
        "cluster",
        "--input",
        &hr_portal_path(),
        "--f-min",
        "0.7",
        "--emit-matrix",
        matrix_path.to_str().unwrap(),
        "--format",
        "json",
    ]);
    assert!(output.status.success());
    let csv = std::fs::read_to_string(&matrix_path).unwrap();
    let lines: Vec<&str> = csv.lines().collect();
    assert!(lines[0].starts_with("element,AuditDao,"));
    assert_eq!(lines.len(), 14); // header + 13 rows
}

#[test]
fn usage_errors_exit_1() {
    let no_p = run(&[
        "cbom",
        "--input",
        &hr_portal_path(),
        "--f-min",
        "0.7",
        "--rule",
        "threshold",
    ]);
    assert_eq!(no_p.status.code(), Some(1));

    let p_with_max = run(&[
        "cbom",
        "--input",
        &hr_portal_path(),
        "--f-min",
        "0.7",
        "--p",
        "10",
    ]);
    assert_eq!(p_with_max.status.code(), Some(1));

    let conflicting = run(&[
        "analyze",
        "--input",
        &hr_portal_path(),
        "--f-min",
        "0.7",
        "--sweep",
    ]);
    assert_eq!(conflicting.status.code(), Some(1));

    let negative = run(&["cluster", "--input", &hr_portal_path(), "--f-min", "-1"]);
    assert_eq!(negative.status.code(), Some(1));

    let missing_input = run(&["analyze", "--f-min", "0.7"]);
    assert_eq!(missing_input.status.code(), Some(1));
}

#[test]
fn unreadable_or_malformed_input_exits_2() {
    let missing = run(&["analyze", "--input", "/nonexistent.json", "--f-min", "0.5"]);
    assert_eq!(missing.status.code(), Some(2));

    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("bad.json");
    std::fs::write(&path, "{not json").unwrap();
    let malformed = run(&[
        "analyze",
        "--input",
        path.to_str().unwrap(),
        "--f-min",
        "0.5",
    ]);
    assert_eq!(malformed.status.code(), Some(2));
    assert!(stderr(&malformed).contains("line"));
}

#[test]
fn repo_flow_add_touch_list_show() {
    let dir = tempfile::tempdir().unwrap();
    let repo = dir.path().join("repo.json");
    let repo_str = repo.to_str().unwrap();

    // Seed WBR at 22 reuses through the library.
    let mut store = RepositoryStore::new();
    store
        .register("WBR", "N_i", [id("LoginView")].into_iter().collect())
        .unwrap();
    for _ in 0..22 {
        store.record_reuse("WBR").unwrap();
    }
    store.save(&repo).unwrap();

    let touch1 = run(&["repo", "--repo", repo_str, "touch", "WBR"]);
    assert!(stdout(&touch1).contains("count 23"));
    let touch2 = run(&["repo", "--repo", repo_str, "touch", "WBR"]);
    assert!(stdout(&touch2).contains("count 24"));
    assert_eq!(
        RepositoryStore::load(&repo)
            .unwrap()
            .get("WBR")
            .unwrap()
            .reuse_count,
        24
    );

    let add = run(&[
        "repo",
        "--repo",
        repo_str,
        "add",
        "BR",
        "--node",
        "N_j",
        "--members",
        "EmployeeService,LeaveService",
    ]);
    assert!(add.status.success(), "stderr: {}", stderr(&add));

    let duplicate = run(&["repo", "--repo", repo_str, "add", "BR", "--node", "N_x"]);
    assert_eq!(duplicate.status.code(), Some(1));

    let unknown = run(&["repo", "--repo", repo_str, "touch", "nope"]);
    assert_eq!(unknown.status.code(), Some(2));

    let list = run(&[
        "repo",
        "--repo",
        repo_str,
        "list",
        "--format",
        "text",
        "--no-header",
    ]);
    let text = stdout(&list);
    let lines: Vec<&str> = text.lines().collect();
    assert!(lines[0].starts_with("Component"));
    assert!(lines[1].starts_with("WBR"));
    assert!(lines[2].starts_with("BR") && lines[2].contains("unused"));

    let show = run(&["repo", "--repo", repo_str, "show", "BR", "--format", "json"]);
    let record: component_miner::repo::ComponentRecord =
        serde_json::from_str(&stdout(&show)).unwrap();
    assert_eq!(record.version, 1);
    assert_eq!(record.members.len(), 2);
}

#[test]
fn repo_path_comes_from_the_environment() {
    let dir = tempfile::tempdir().unwrap();
    let repo = dir.path().join("repo.json");
    let add = bin()
        .args(["repo", "add", "X", "--node", "N_1"])
        .env("COMPONENT_MINER_REPO", &repo)
        .output()
        .unwrap();
    assert!(
        add.status.success(),
        "stderr: {}",
        String::from_utf8_lossy(&add.stderr)
    );
    assert!(repo.exists());

    let no_repo = bin()
        .args(["repo", "list"])
        .env_remove("COMPONENT_MINER_REPO")
        .output()
        .unwrap();
    assert_eq!(no_repo.status.code(), Some(1));
}

#[test]
fn repo_list_on_missing_file_exits_2() {
    let output = run(&["repo", "--repo", "/nonexistent-repo.json", "list"]);
    assert_eq!(output.status.code(), Some(2));
}

#[test]
fn threshold_rule_lists_all_over_p() {
    let output = run(&[
        "cbom",
        "--input",
        &hr_portal_path(),
        "--f-min",
        "0.7",
        "--rule",
        "threshold",
        "--p",
        "100",
        "--format",
        "json",
    ]);
    assert!(output.status.success());
    let report: component_miner::metrics::CbomReport =
        serde_json::from_str(&stdout(&output)).unwrap();
    assert_eq!(report.reconfigurable, vec!["DAO", "WBR"]);
}

#[test]
fn help_and_version_exit_0() {
    let help = run(&["--help"]);
    assert_eq!(help.status.code(), Some(0));
    assert!(stdout(&help).contains("analyze"));

    let version = run(&["--version"]);
    assert_eq!(version.status.code(), Some(0));

    let strategy_help = run(&["cluster", "--help"]);
    assert!(stdout(&strategy_help).contains("--strategy"));
}

#[test]
fn requires_format_when_extension_is_unknown() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("graph.data");
    std::fs::write(&path, "digraph g { A -> B; }").unwrap();
    let bare = run(&["ingest", "--input", path.to_str().unwrap()]);
    assert_eq!(bare.status.code(), Some(1));

    let explicit = run(&[
        "ingest",
        "--input",
        path.to_str().unwrap(),
        "--input-format",
        "dot",
    ]);
    assert!(explicit.status.success());
}
