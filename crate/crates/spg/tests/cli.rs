//! End-to-end tests of the `spg` binary: exit codes, golden outputs,
//! config-file precedence, and stream separation.

mod common;

use std::path::Path;
use std::process::{Command, Output};

use common::{fixture, golden};

fn spg(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_spg"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(output: &Output) -> String {
    String::from_utf8_lossy(&output.stdout).into_owned()
}

fn stderr(output: &Output) -> String {
    String::from_utf8_lossy(&output.stderr).into_owned()
}

fn code(output: &Output) -> i32 {
    output.status.code().expect("exit code")
}

fn path_arg(path: &Path) -> String {
    path.display().to_string()
}

#[test]
fn convert_ex1_matches_golden_on_stdout() {
    let out = spg(&["convert", "--input", &path_arg(&fixture("ex1.nt"))]);
    assert_eq!(code(&out), 0, "{}", stderr(&out));
    assert_eq!(stdout(&out), golden("ex1.gdf"));
    assert!(stderr(&out).is_empty());
}

#[test]
fn convert_turtle_input_by_extension() {
    let out = spg(&["convert", "--input", &path_arg(&fixture("ex1.ttl"))]);
    assert_eq!(code(&out), 0, "{}", stderr(&out));
    assert_eq!(stdout(&out), golden("ex1.gdf"));
}

#[test]
fn convert_writes_byte_identical_files_across_runs() {
    let dir = tempfile::tempdir().unwrap();
    let a = dir.path().join("a.gdf");
    let b = dir.path().join("b.gdf");
    for (path, _) in [(&a, 0), (&b, 1)] {
        let out = spg(&[
            "convert",
            "--input",
            &path_arg(&fixture("ex1.nt")),
            "--output",
            &path_arg(path),
        ]);
        assert_eq!(code(&out), 0, "{}", stderr(&out));
    }
    let bytes_a = std::fs::read(&a).unwrap();
    let bytes_b = std::fs::read(&b).unwrap();
    assert_eq!(bytes_a, bytes_b);
    assert_eq!(String::from_utf8(bytes_a).unwrap(), golden("ex1.gdf"));
}

#[test]
fn convert_incomplete_reification_strict_exits_one_and_names_the_node() {
    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.nt");
    std::fs::write(
        &bad,
        "<http://e/st> <http://www.w3.org/1999/02/22-rdf-syntax-ns#type> <http://www.w3.org/1999/02/22-rdf-syntax-ns#Statement> .\n",
    )
    .unwrap();
    let out = spg(&["convert", "--input", &path_arg(&bad)]);
    assert_eq!(code(&out), 1);
    assert!(stderr(&out).contains("http://e/st"), "{}", stderr(&out));
}

#[test]
fn convert_lenient_keeps_going() {
    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.nt");
    std::fs::write(
        &bad,
        "<http://e/st> <http://www.w3.org/1999/02/22-rdf-syntax-ns#type> <http://www.w3.org/1999/02/22-rdf-syntax-ns#Statement> .\n",
    )
    .unwrap();
    let out = spg(&["convert", "--input", &path_arg(&bad), "--lenient"]);
    assert_eq!(code(&out), 0, "{}", stderr(&out));
    assert!(stdout(&out).contains("Statement"));
}

#[test]
fn convert_parse_error_exits_one_with_location() {
    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("broken.nt");
    std::fs::write(&bad, "<http://a> <http://p>\n").unwrap();
    let out = spg(&["convert", "--input", &path_arg(&bad)]);
    assert_eq!(code(&out), 1);
    assert!(stderr(&out).contains("line 1"), "{}", stderr(&out));
}

#[test]
fn convert_with_ontology_strict_exits_two_on_violation() {
    let out = spg(&[
        "convert",
        "--input",
        &path_arg(&fixture("fault_domain.nt")),
        "--ontology",
        &path_arg(&fixture("onto.ttl")),
        "--strict",
    ]);
    assert_eq!(code(&out), 2, "{}", stderr(&out));
    assert!(stderr(&out).contains("DomainViolation"), "{}", stderr(&out));
}

#[test]
fn convert_with_ontology_lenient_reports_but_succeeds() {
    let out = spg(&[
        "convert",
        "--input",
        &path_arg(&fixture("fault_domain.nt")),
        "--ontology",
        &path_arg(&fixture("onto.ttl")),
        "--lenient",
    ]);
    assert_eq!(code(&out), 0, "{}", stderr(&out));
    assert!(stderr(&out).contains("DomainViolation"));
    assert!(stdout(&out).contains("nodedef>"));
}

#[test]
fn convert_clean_with_ontology_exits_zero() {
    let out = spg(&[
        "convert",
        "--input",
        &path_arg(&fixture("ex1.nt")),
        "--ontology",
        &path_arg(&fixture("onto.ttl")),
        "--strict",
    ]);
    assert_eq!(code(&out), 0, "{}", stderr(&out));
    assert_eq!(stdout(&out), golden("ex1.gdf"));
}

#[test]
fn validate_clean_graph_exits_zero_with_empty_report() {
    let dir = tempfile::tempdir().unwrap();
    let report = dir.path().join("report.txt");
    let out = spg(&[
        "validate",
        "--input",
        &path_arg(&fixture("ex1.nt")),
        "--ontology",
        &path_arg(&fixture("onto.ttl")),
        "--output",
        &path_arg(&report),
    ]);
    assert_eq!(code(&out), 0, "{}", stderr(&out));
    assert_eq!(std::fs::read_to_string(&report).unwrap(), "");
    let json_path = dir.path().join("report.txt.json");
    let json: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(json_path).unwrap()).unwrap();
    assert_eq!(json["violations"].as_array().unwrap().len(), 0);
}

#[test]
fn validate_fault_exits_two_with_code_and_element() {
    let out = spg(&[
        "validate",
        "--input",
        &path_arg(&fixture("fault_unknown_label.nt")),
        "--ontology",
        &path_arg(&fixture("onto.ttl")),
    ]);
    assert_eq!(code(&out), 2);
    let text = stdout(&out);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines.len(), 1, "{text}");
    assert!(lines[0].starts_with("UnknownLabel\thttp://ex.org/acme\t"), "{text}");
}

#[test]
fn validate_without_ontology_is_a_usage_error() {
    let out = spg(&["validate", "--input", &path_arg(&fixture("ex1.nt"))]);
    assert_eq!(code(&out), 64);
    assert!(stderr(&out).contains("--ontology"));
}

#[test]
fn stats_both_emits_histograms_and_metrics() {
    let out = spg(&["stats", "--input", &path_arg(&fixture("ex1.nt")), "--view", "both"]);
    assert_eq!(code(&out), 0, "{}", stderr(&out));
    let text = stdout(&out);
    assert!(text.contains("degree,count\n1,4\n2,2\n3,1\n5,1\n"), "{text}");
    assert!(text.contains("degree,count\n1,2\n"), "{text}");
    assert!(text.contains("node_ratio=4.0"), "{text}");
    assert!(text.contains("edge_ratio=8.0"), "{text}");
}

#[test]
fn stats_single_view_emits_one_csv() {
    let out = spg(&["stats", "--input", &path_arg(&fixture("ex1.nt")), "--view", "rdf"]);
    assert_eq!(code(&out), 0);
    let text = stdout(&out);
    assert_eq!(text.matches("degree,count").count(), 1, "{text}");
    assert!(!text.contains("node_ratio"), "{text}");
}

#[test]
fn stats_empty_input_is_fine() {
    let dir = tempfile::tempdir().unwrap();
    let empty = dir.path().join("empty.nt");
    std::fs::write(&empty, "").unwrap();
    let out = spg(&["stats", "--input", &path_arg(&empty), "--view", "both"]);
    assert_eq!(code(&out), 0, "{}", stderr(&out));
    let text = stdout(&out);
    assert!(text.contains("degree,count\n"), "{text}");
    assert!(!text.contains("node_ratio"), "{text}");
}

#[test]
fn stats_writes_files_with_output_prefix() {
    let dir = tempfile::tempdir().unwrap();
    let base = dir.path().join("ex1");
    let out = spg(&[
        "stats",
        "--input",
        &path_arg(&fixture("ex1.nt")),
        "--output",
        &path_arg(&base),
    ]);
    assert_eq!(code(&out), 0, "{}", stderr(&out));
    let rdf = std::fs::read_to_string(dir.path().join("ex1.rdf.csv")).unwrap();
    assert_eq!(rdf, "degree,count\n1,4\n2,2\n3,1\n5,1\n");
    let metrics = std::fs::read_to_string(dir.path().join("ex1.metrics.txt")).unwrap();
    assert!(metrics.contains("edge_ratio=8.0"));
    let json: serde_json::Value = serde_json::from_str(
        &std::fs::read_to_string(dir.path().join("ex1.metrics.json")).unwrap(),
    )
    .unwrap();
    assert_eq!(json["node_ratio"], serde_json::json!(4.0));
}

#[test]
fn query_compact_wedge_matches_golden() {
    let out = spg(&["query-compact", "--input", &path_arg(&fixture("wedge.nt"))]);
    assert_eq!(code(&out), 0, "{}", stderr(&out));
    assert_eq!(stdout(&out), golden("wedge.gdf"));
}

#[test]
fn query_compact_attributed_wedge_matches_golden() {
    let out = spg(&[
        "query-compact",
        "--input",
        &path_arg(&fixture("wedge_attributed.nt")),
    ]);
    assert_eq!(code(&out), 0, "{}", stderr(&out));
    assert_eq!(stdout(&out), golden("wedge_attributed.gdf"));
}

#[test]
fn query_compact_without_variables_behaves_as_convert_with_notice() {
    let out = spg(&["query-compact", "--input", &path_arg(&fixture("ex1.nt"))]);
    assert_eq!(code(&out), 0, "{}", stderr(&out));
    assert_eq!(stdout(&out), golden("ex1.gdf"));
    assert!(stderr(&out).contains("no var: variables"), "{}", stderr(&out));
}

#[test]
fn query_compact_malformed_pattern_exits_one() {
    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad_pattern.nt");
    std::fs::write(
        &bad,
        "<var:st> <http://www.w3.org/1999/02/22-rdf-syntax-ns#type> <http://www.w3.org/1999/02/22-rdf-syntax-ns#Statement> .\n\
         <var:st> <http://www.w3.org/1999/02/22-rdf-syntax-ns#subject> <var:x> .\n",
    )
    .unwrap();
    let out = spg(&["query-compact", "--input", &path_arg(&bad)]);
    assert_eq!(code(&out), 1, "{}", stderr(&out));
}

#[test]
fn help_exits_zero_everywhere() {
    for args in [
        vec!["--help"],
        vec!["convert", "--help"],
        vec!["validate", "--help"],
        vec!["stats", "--help"],
        vec!["query-compact", "--help"],
    ] {
        let out = spg(&args);
        assert_eq!(code(&out), 0, "{args:?}");
        let text = stdout(&out);
        if args[0] != "--help" {
            for flag in ["--input", "--format", "--output", "--config"] {
                assert!(text.contains(flag), "{args:?} missing {flag}:\n{text}");
            }
        }
    }
}

#[test]
fn unknown_flag_is_a_usage_error() {
    let out = spg(&["convert", "--frobnicate"]);
    assert_eq!(code(&out), 64);
}

#[test]
fn missing_input_is_a_usage_error() {
    let out = spg(&["convert"]);
    assert_eq!(code(&out), 64);
    assert!(stderr(&out).contains("input"), "{}", stderr(&out));
}

#[test]
fn config_file_supplies_values_and_flags_win() {
    let dir = tempfile::tempdir().unwrap();
    let from_config = dir.path().join("from_config.gdf");
    let from_flag = dir.path().join("from_flag.gdf");
    let config = dir.path().join("run.cfg");
    std::fs::write(
        &config,
        format!(
            "# conversion defaults\ninput={}\noutput={}\nstrictness=strict\n",
            fixture("ex1.nt").display(),
            from_config.display()
        ),
    )
    .unwrap();

    let out = spg(&["convert", "--config", &path_arg(&config)]);
    assert_eq!(code(&out), 0, "{}", stderr(&out));
    assert_eq!(std::fs::read_to_string(&from_config).unwrap(), golden("ex1.gdf"));

    // the --output flag overrides the config file value
    let out = spg(&[
        "convert",
        "--config",
        &path_arg(&config),
        "--output",
        &path_arg(&from_flag),
    ]);
    assert_eq!(code(&out), 0, "{}", stderr(&out));
    assert!(from_flag.exists());
}

#[test]
fn config_file_bad_key_is_a_usage_error() {
    let dir = tempfile::tempdir().unwrap();
    let config = dir.path().join("run.cfg");
    std::fs::write(&config, "frobnicate=yes\n").unwrap();
    let out = spg(&["convert", "--config", &path_arg(&config)]);
    assert_eq!(code(&out), 64);
    assert!(stderr(&out).contains("frobnicate"), "{}", stderr(&out));
}

#[test]
fn mapping_driven_projection_from_file() {
    let out = spg(&[
        "convert",
        "--input",
        &path_arg(&fixture("ex1.nt")),
        "--mapping",
        &path_arg(&fixture("mapping.cfg")),
    ]);
    assert_eq!(code(&out), 0, "{}", stderr(&out));
    let text = stdout(&out);
    assert!(
        text.contains("http://ex.org/alice,http://ex.org/bob,true,knows"),
        "{text}"
    );
    // the mapping captures no types, so nodes are Thing-labeled
    assert!(text.contains("http://ex.org/alice,Thing"), "{text}");
}

#[test]
fn vocabulary_override_projects_custom_reification() {
    let dir = tempfile::tempdir().unwrap();
    let data = dir.path().join("claims.nt");
    std::fs::write(
        &data,
        "<http://e/c1> <http://www.w3.org/1999/02/22-rdf-syntax-ns#type> <http://my.org/Claim> .\n\
         <http://e/c1> <http://my.org/about> <http://e/a> .\n\
         <http://e/c1> <http://my.org/says> <http://e/p> .\n\
         <http://e/c1> <http://my.org/value> <http://e/b> .\n",
    )
    .unwrap();
    let config = dir.path().join("vocab.cfg");
    std::fs::write(
        &config,
        "vocab.statement=http://my.org/Claim\n\
         vocab.subject=http://my.org/about\n\
         vocab.predicate=http://my.org/says\n\
         vocab.object=http://my.org/value\n",
    )
    .unwrap();
    let out = spg(&[
        "convert",
        "--input",
        &path_arg(&data),
        "--config",
        &path_arg(&config),
    ]);
    assert_eq!(code(&out), 0, "{}", stderr(&out));
    let text = stdout(&out);
    assert!(text.contains("http://e/a,http://e/b,true,p"), "{text}");
}

#[test]
fn multi_input_batch_writes_into_directory() {
    let dir = tempfile::tempdir().unwrap();
    let outdir = dir.path().join("out");
    let out = spg(&[
        "convert",
        "--input",
        &path_arg(&fixture("ex1.nt")),
        "--input",
        &path_arg(&fixture("fault_unknown_edge_type.nt")),
        "--output",
        &path_arg(&outdir),
    ]);
    assert_eq!(code(&out), 0, "{}", stderr(&out));
    assert_eq!(
        std::fs::read_to_string(outdir.join("ex1.gdf")).unwrap(),
        golden("ex1.gdf")
    );
    assert!(outdir.join("fault_unknown_edge_type.gdf").exists());
}

#[test]
fn keep_names_merges_repeated_graph_names_and_reports() {
    let dir = tempfile::tempdir().unwrap();
    let outdir = dir.path().join("out");
    let out = spg(&[
        "convert",
        "--input",
        &path_arg(&fixture("ex1.nt")),
        "--input",
        &path_arg(&fixture("ex1.nt")),
        "--output",
        &path_arg(&outdir),
        "--keep-names",
    ]);
    assert_eq!(code(&out), 0, "{}", stderr(&out));
    // merged under one name: set semantics keep 8 triples
    assert!(stderr(&out).contains("kept graph 'ex1' (8 triples)"), "{}", stderr(&out));
    assert_eq!(
        std::fs::read_to_string(outdir.join("ex1.gdf")).unwrap(),
        golden("ex1.gdf")
    );
}

#[test]
fn explicit_format_flag_beats_extension() {
    let dir = tempfile::tempdir().unwrap();
    let odd = dir.path().join("data.rdf");
    std::fs::copy(fixture("ex1.nt"), &odd).unwrap();
    let out = spg(&["convert", "--input", &path_arg(&odd), "--format", "ntriples"]);
    assert_eq!(code(&out), 0, "{}", stderr(&out));
    assert_eq!(stdout(&out), golden("ex1.gdf"));

    // without the flag the extension is unknown
    let out = spg(&["convert", "--input", &path_arg(&odd)]);
    assert_eq!(code(&out), 64, "{}", stderr(&out));
}
