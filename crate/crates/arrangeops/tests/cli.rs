//! End-to-end checks of the command-line interface: exit codes, output
//! determinism, manifests, and figure element counts.

use std::path::Path;
use std::process::Command;

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_arrangeops"))
}

#[test]
fn gen_is_deterministic_and_manifested() {
    let dir = tempfile::tempdir().unwrap();
    let out1 = dir.path().join("a1.json");
    let out2 = dir.path().join("a2.json");
    for out in [&out1, &out2] {
        let status = bin()
            .current_dir(dir.path())
            .args(["gen", "c0:t=2", "--out", out.to_str().unwrap()])
            .status()
            .unwrap();
        assert!(status.success());
    }
    let b1 = std::fs::read(&out1).unwrap();
    let b2 = std::fs::read(&out2).unwrap();
    assert_eq!(
        b1, b2,
        "primary outputs must be byte-identical across reruns"
    );
    assert!(Path::new(&format!("{}.manifest.json", out1.display())).exists());

    // And the written file loads back to the same arrangement.
    let loaded = arrangeops::io::load_arrangement(out1.to_str().unwrap()).unwrap();
    let direct = arrangeops::io::parse_arrangement_spec("c0:t=2", None).unwrap();
    assert!(loaded.set_equal(&direct));
}

#[test]
fn exit_codes() {
    let dir = tempfile::tempdir().unwrap();
    // Success.
    let ok = bin()
        .current_dir(dir.path())
        .args(["check", "ceva:4"])
        .status()
        .unwrap();
    assert_eq!(ok.code(), Some(0));
    // Usage error: unparseable address.
    let bad = bin()
        .current_dir(dir.path())
        .args(["gen", "nonsense:xyz"])
        .status()
        .unwrap();
    assert_eq!(bad.code(), Some(2));
    // Usage error: unknown table row.
    let bad_row = bin()
        .current_dir(dir.path())
        .args(["table1", "--rows", "4"])
        .status()
        .unwrap();
    assert_eq!(bad_row.code(), Some(2));
}

#[test]
fn table1_small_rows_exit_zero() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("report.json");
    let run = bin()
        .current_dir(dir.path())
        .args(["table1", "--rows", "3,5", "--out", out.to_str().unwrap()])
        .output()
        .unwrap();
    assert_eq!(run.status.code(), Some(0));
    let stdout = String::from_utf8_lossy(&run.stdout);
    assert_eq!(stdout.matches("PASS").count(), 2);
    let report: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(&out).unwrap()).unwrap();
    assert_eq!(report.as_array().unwrap().len(), 2);
}

#[test]
fn svg_element_counts_match_profile() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("fig.svg");
    let status = bin()
        .current_dir(dir.path())
        .args([
            "export",
            "c0:t=2",
            "--format",
            "svg",
            "--out",
            out.to_str().unwrap(),
        ])
        .status()
        .unwrap();
    assert!(status.success());
    let svg = std::fs::read_to_string(&out).unwrap();
    assert_eq!(svg.matches("<line ").count(), 6);
    assert_eq!(svg.matches("<circle ").count(), 15);

    // Non-real fields are refused for drawings with a pointer to json.
    let refused = bin()
        .current_dir(dir.path())
        .args(["export", "hesse", "--format", "svg"])
        .output()
        .unwrap();
    assert_eq!(refused.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&refused.stderr).contains("json"));
}

#[test]
fn iterate_detects_periods() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("orbit.json");
    let run = bin()
        .current_dir(dir.path())
        .args([
            "iterate",
            "cabc:1,1,zeta3",
            "--detect-period",
            "--out",
            out.to_str().unwrap(),
        ])
        .output()
        .unwrap();
    assert!(run.status.success());
    assert!(String::from_utf8_lossy(&run.stdout).contains("period 3"));
    let report: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(&out).unwrap()).unwrap();
    assert_eq!(report["period"], serde_json::json!(3));
    assert_eq!(report["terminated"], serde_json::json!(false));
}

#[test]
fn search_and_preimage_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let search_out = dir.path().join("found.json");
    let run = bin()
        .current_dir(dir.path())
        .args([
            "search",
            "hesse-union",
            "--predicate",
            "nodal",
            "--out",
            search_out.to_str().unwrap(),
        ])
        .output()
        .unwrap();
    assert!(run.status.success());
    assert!(String::from_utf8_lossy(&run.stdout).contains("6 sub-arrangements"));

    let pre_out = dir.path().join("pre.json");
    let run = bin()
        .current_dir(dir.path())
        .args([
            "preimage",
            "cabc:1,4,1",
            "--real",
            "--out",
            pre_out.to_str().unwrap(),
        ])
        .output()
        .unwrap();
    assert!(run.status.success());
    let ants: Vec<arrangeops::io::ArrangementJson> =
        serde_json::from_str(&std::fs::read_to_string(&pre_out).unwrap()).unwrap();
    assert_eq!(ants.len(), 1);
    let ant = arrangeops::io::arrangement_from_json(&ants[0]).unwrap();
    let expect = arrangeops::io::parse_arrangement_spec("cabc:2,2,2", None).unwrap();
    assert!(ant.set_equal(&expect));
}
