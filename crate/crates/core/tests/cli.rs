use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use serde_json::Value;

fn cmtk(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_cmtk"))
        .args(args)
        .current_dir(env!("CARGO_MANIFEST_DIR"))
        .output()
        .expect("binary runs")
}

fn json(args: &[&str]) -> Value {
    let out = cmtk(args);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

fn scratch(name: &str, contents: &[u8]) -> PathBuf {
    let dir = Path::new(env!("CARGO_TARGET_TMPDIR")).join("cli");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join(name);
    std::fs::write(&path, contents).unwrap();
    path
}

#[test]
fn classify_rp2() {
    let report = json(&["classify", "examples/rp2_6.json", "--fields", "q,f2,z"]);
    assert_eq!(report["cm_over"], serde_json::json!({"q": true, "f2": false, "z": false}));
    assert_eq!(report["manifest"]["subcommand"], "classify");
    assert_eq!(report["manifest"]["inputs"], serde_json::json!(["examples/rp2_6.json"]));
    assert!(report["manifest"].get("wall_time_ms").is_none());
}

#[test]
fn filtered_charpoly_text() {
    let out = cmtk(&["--text", "filtered", "examples/paper_fig3.json", "--threshold", "0", "--charpoly"]);
    assert_eq!(String::from_utf8(out.stdout).unwrap(), "z^3 - 4z^2 + 3z\n");
    let out = cmtk(&["--text", "filtered", "examples/paper_fig3.json", "--walk", "a", "c"]);
    assert_eq!(String::from_utf8(out.stdout).unwrap(), "{a} - {d} - {f} - {c}\n");
}

#[test]
fn generate_simplex_boundary() {
    let doc = json(&["generate", "simplex-boundary", "3"]);
    let facets = doc["facets"].as_array().unwrap();
    assert_eq!(facets.len(), 4);
    assert!(facets.iter().all(|f| f.as_array().unwrap().len() == 3));
}

#[test]
fn generated_documents_round_trip() {
    let complexes = [
        vec!["simplex-boundary", "2"],
        vec!["simplex", "2"],
        vec!["cycle", "5"],
        vec!["cross-polytope", "3"],
        vec!["rp2"],
    ];
    for args in complexes {
        let out = cmtk(&[&["generate"][..], &args].concat());
        let path = scratch(&format!("{}.json", args.join("-")), &out.stdout);
        let path = path.to_str().unwrap();
        for consumer in [
            vec!["homology", path],
            vec!["classify", path],
            vec!["betti", path],
            vec!["betti", path, "--field", "fp:2"],
        ] {
            let out = cmtk(&consumer);
            assert_eq!(out.status.code(), Some(0), "{consumer:?}: {}", String::from_utf8_lossy(&out.stderr));
        }
    }
    let out = cmtk(&["generate", "paper-fig3"]);
    let path = scratch("fig3.json", &out.stdout);
    let plus = json(&["filtered", path.to_str().unwrap(), "--charpoly"]);
    assert_eq!(plus["charpoly"], "z^3 - 4z^2 + 3z");
}

#[test]
fn poset_actions() {
    let path = scratch(
        "b2.json",
        br#"{"elements": ["0", "a", "b", "1"], "covers": [["0","a"],["0","b"],["a","1"],["b","1"]]}"#,
    );
    let path = path.to_str().unwrap();
    let doc = json(&["poset", path, "--mobius", "--charpoly", "--order-complex"]);
    assert_eq!(doc["mobius"]["value"], 1);
    assert_eq!(doc["charpoly"], "z^2 - 2z + 1");
    assert_eq!(doc["order_complex"]["facets"].as_array().unwrap().len(), 2);
    let doc = json(&["poset", path, "--mobius", "0", "a"]);
    assert_eq!(doc["mobius"]["value"], -1);
    assert_eq!(cmtk(&["poset", path, "--mobius", "a", "b"]).status.code(), Some(1));
}

#[test]
fn user_errors_exit_one() {
    let bad = scratch("bad.json", b"{\"facets\": [[1, 2],\n  [3,]]}");
    let out = cmtk(&["homology", bad.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    let stderr = String::from_utf8_lossy(&out.stderr);
    assert!(stderr.contains("line 2 column"), "{stderr}");

    assert_eq!(cmtk(&["homology", "no/such/file.json"]).status.code(), Some(1));
    assert_eq!(cmtk(&["homology", "examples/rp2_6.json", "--coeff", "fp:4"]).status.code(), Some(1));
    assert_eq!(cmtk(&["betti", "examples/rp2_6.json", "--field", "z"]).status.code(), Some(1));
    assert_eq!(cmtk(&["betti", "examples/rp2_6.json", "--max-vertices", "3"]).status.code(), Some(1));
    assert_eq!(cmtk(&["frobnicate"]).status.code(), Some(1));
    assert_eq!(cmtk(&["--version"]).status.code(), Some(0));
}

#[test]
fn experiments_are_reproducible() {
    let args = ["filtered", "examples/paper_fig3.json", "--experiment", "40", "--seed", "9"];
    let first = cmtk(&args);
    let serial = Command::new(env!("CARGO_BIN_EXE_cmtk"))
        .args(args)
        .current_dir(env!("CARGO_MANIFEST_DIR"))
        .env("CMTK_THREADS", "1")
        .output()
        .unwrap();
    assert_eq!(first.stdout, serial.stdout);
    let doc: Value = serde_json::from_slice(&first.stdout).unwrap();
    assert_eq!(doc["experiment"]["draws"], 40);
    assert_eq!(doc["manifest"]["seed"], 9);
}

#[test]
fn timing_is_opt_in() {
    let doc = json(&["--timing", "homology", "examples/rp2_6.json"]);
    assert!(doc["manifest"]["wall_time_ms"].is_u64());
}
