use arcspace_core::{generate_nonisomorphic, to_graph6, GraphFilter};
use std::process::{Command, Output};

fn arcspace(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_arcspace"))
        .args(args)
        .output()
        .expect("run arcspace")
}

fn json(out: &Output) -> serde_json::Value {
    assert!(
        out.status.success(),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
    serde_json::from_slice(&out.stdout).unwrap()
}

#[test]
fn analyze_c4() {
    let doc = json(&arcspace(&["analyze", "--graph6", "Cl"]));
    assert_eq!(doc["schema_version"], 1);
    assert_eq!(doc["input"]["graph6"], "Cl");
    assert_eq!(doc["dimensions"]["dim_l"], 2);
    assert_eq!(doc["dimensions"]["dim_k"], 6);
    assert_eq!(doc["semisimplicity"]["is_semisimple"], true);
    // x^4 - 1, ascending coefficients
    assert_eq!(
        doc["semisimplicity"]["min_poly"],
        serde_json::json!(["-1/1", "0/1", "0/1", "0/1", "1/1"])
    );
    assert_eq!(doc["identities"]["u_orthogonal"]["status"], "holds");
}

#[test]
fn analyze_k4_identities_only() {
    let doc = json(&arcspace(&["analyze", "--graph6", "C~", "--identities"]));
    assert_eq!(doc["dimensions"]["dim_l"], 5);
    assert!(doc["semisimplicity"].is_null());
    let ids = doc["identities"].as_object().unwrap();
    assert!(ids.values().all(|v| v["status"] == "holds"));
}

#[test]
fn analyze_edge_list_file() {
    let path = std::env::temp_dir().join(format!("arcspace-binary-{}.edges", std::process::id()));
    std::fs::write(
        &path,
        "# the 16-edge example\n8 16\n0 1\n0 2\n0 5\n0 6\n0 7\n1 3\n1 4\n2 3\n3 5\n3 6\n3 7\n4 5\n4 6\n4 7\n5 6\n6 7\n",
    )
    .unwrap();
    let doc = json(&arcspace(&[
        "analyze",
        "--edges",
        path.to_str().unwrap(),
        "--semisimple",
    ]));
    std::fs::remove_file(&path).ok();
    let ss = &doc["semisimplicity"];
    assert_eq!(
        ss["repeated_part"],
        serde_json::json!(["2/1", "0/1", "1/1"])
    );
    assert_eq!(ss["matched_candidates"], serde_json::json!(["x^2 + 2"]));
}

#[test]
fn exit_codes() {
    assert_eq!(
        arcspace(&["analyze", "--graph6", "C~~"]).status.code(),
        Some(2)
    );
    assert_eq!(
        arcspace(&["analyze", "--edges", "/nonexistent"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(arcspace(&["analyze"]).status.code(), Some(2));

    let odd = arcspace(&["analyze", "--graph6", "Bw", "--basis", "bipartite"]);
    assert_eq!(odd.status.code(), Some(3));
    assert!(String::from_utf8_lossy(&odd.stderr).contains("odd cycle"));
    assert_eq!(
        arcspace(&["analyze", "--graph6", "A?", "--semisimple"])
            .status
            .code(),
        Some(3)
    );

    assert_eq!(
        arcspace(&["census", "--census-n", "9", "--quiet"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        arcspace(&["census", "--census-n", "5", "--candidates", "1,q"])
            .status
            .code(),
        Some(2)
    );
}

#[test]
fn census_from_stream_matches_generator() {
    let generated = json(&arcspace(&[
        "census",
        "--census-n",
        "7",
        "--all",
        "--no-degree-one",
        "--quiet",
    ]));

    // same graphs, reversed order, plus one bad record and one graph of the
    // wrong order
    let mut lines: Vec<String> = generate_nonisomorphic(&GraphFilter::all(7))
        .unwrap()
        .iter()
        .map(|g| to_graph6(g).unwrap())
        .collect();
    lines.reverse();
    lines.insert(3, "not a graph".into());
    lines.push("Cl".into());
    let path = std::env::temp_dir().join(format!("arcspace-stream-{}.g6", std::process::id()));
    std::fs::write(&path, lines.join("\n")).unwrap();
    let streamed = json(&arcspace(&[
        "census",
        "--census-n",
        "7",
        "--all",
        "--no-degree-one",
        "--quiet",
        "--source",
        path.to_str().unwrap(),
    ]));
    std::fs::remove_file(&path).ok();

    assert_eq!(generated["provenance"], "built-in");
    assert_eq!(streamed["provenance"], "external-stream");
    assert_eq!(streamed["errors"].as_array().unwrap().len(), 1);
    assert_eq!(streamed["errors"][0]["line"], 4);
    for key in [
        "filter",
        "total_examined",
        "non_semisimple_count",
        "candidate_counts",
        "offenders",
    ] {
        assert_eq!(generated[key], streamed[key], "{key}");
    }
    // the generator filters while it enumerates; the stream filters on read
    let examined = streamed["total_examined"].as_u64().unwrap();
    assert_eq!(
        streamed["skipped_by_filter"].as_u64().unwrap(),
        1044 - examined + 1
    );
}
