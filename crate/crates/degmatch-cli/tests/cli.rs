use std::process::{Command, Output};

use degmatch_core::graph::maximum_matching;
use degmatch_core::LabeledBipartiteGraph;

fn degmatch(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_degmatch"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout_of(args: &[&str]) -> String {
    let out = degmatch(args);
    assert!(out.status.success(), "command {args:?} failed: {out:?}");
    String::from_utf8(out.stdout).unwrap()
}

#[test]
fn tree_interval_worked_example() {
    assert_eq!(
        stdout_of(&["tree-interval", "--seq", "3,3,2,1,1,1,1"]),
        "{\"nu_min\":2,\"nu_max\":3}\n"
    );
}

#[test]
fn bip_realize_worked_example_as_edge_list() {
    assert_eq!(
        stdout_of(&[
            "bip-realize",
            "--a",
            "2,1",
            "--b",
            "2,1",
            "--nu",
            "2",
            "--format",
            "edges"
        ]),
        "v1 w1\nv1 w2\nv2 w1\n"
    );
}

#[test]
fn bip_check_worked_example() {
    assert_eq!(
        stdout_of(&["bip-check", "--a", "3,1", "--b", "2,2"]),
        "{\"graphical\":false,\"violated_k\":1}\n"
    );
}

#[test]
fn output_is_byte_deterministic() {
    for args in [
        vec!["bip-interval", "--a", "2,2,1", "--b", "2,2,1"],
        vec![
            "bip-interpolate",
            "--a",
            "2,1,1",
            "--b",
            "2,1,1",
            "--nu",
            "3",
        ],
        vec!["tree-realize", "--seq", "3,3,2,1,1,1,1", "--nu", "2"],
    ] {
        let first = degmatch(&args);
        let second = degmatch(&args);
        assert_eq!(first.stdout, second.stdout, "args {args:?}");
        assert_eq!(first.status, second.status);
    }
}

#[test]
fn infeasible_answers_exit_zero() {
    let out = degmatch(&["bip-realize", "--a", "2,1", "--b", "2,1", "--nu", "1"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("\"infeasible\":true"), "got {text}");

    let out = degmatch(&["bip-interval", "--a", "3,1", "--b", "2,2"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(String::from_utf8(out.stdout).unwrap(), "{\"empty\":true}\n");
}

#[test]
fn invalid_input_exits_two() {
    for args in [
        vec!["tree-interval", "--seq", "2,2"],
        vec!["tree-interval", "--seq", "2,x,1"],
        vec!["tree-realize", "--seq", "3,3,2,1,1,1,1", "--nu", "4"],
        vec!["bip-realize", "--a", "1,1", "--b", "1,1", "--nu", "3"],
        vec![
            "swap-path",
            "--n",
            "2",
            "--m",
            "2",
            "--g1",
            "1-1",
            "--g2",
            "1-2;2-1",
        ],
    ] {
        let out = degmatch(&args);
        assert_eq!(out.status.code(), Some(2), "args {args:?}: {out:?}");
    }
}

#[test]
fn unsorted_input_reports_the_applied_permutation() {
    let text = stdout_of(&["tree-interval", "--seq", "1,3,2,3,1,1,1"]);
    let parsed: serde_json::Value = serde_json::from_str(&text).unwrap();
    assert_eq!(parsed["nu_min"], 2);
    assert_eq!(parsed["nu_max"], 3);
    let from: Vec<usize> = parsed["sorted_from"]
        .as_array()
        .unwrap()
        .iter()
        .map(|v| v.as_u64().unwrap() as usize)
        .collect();
    // entries 2 and 4 of the input hold the two 3s
    assert_eq!(&from[..2], &[2, 4]);
}

#[test]
fn emitted_realizations_reparse_and_verify() {
    let text = stdout_of(&[
        "bip-realize",
        "--a",
        "3,2,2,1",
        "--b",
        "3,3,1,1",
        "--nu",
        "3",
    ]);
    let parsed: serde_json::Value = serde_json::from_str(&text).unwrap();
    let edges: Vec<(usize, usize)> = parsed["edges"]
        .as_array()
        .unwrap()
        .iter()
        .map(|e| {
            let pair = e.as_array().unwrap();
            (
                pair[0].as_u64().unwrap() as usize,
                pair[1].as_u64().unwrap() as usize,
            )
        })
        .collect();
    let g = LabeledBipartiteGraph::new(4, 4, edges).unwrap();
    let (da, db) = g.degree_vectors();
    assert_eq!(da, vec![3, 2, 2, 1]);
    assert_eq!(db, vec![3, 3, 1, 1]);
    assert_eq!(maximum_matching(&g).len(), 3);
}

#[test]
fn swap_method_and_flow_method_agree_on_feasibility() {
    let flow = stdout_of(&["bip-realize", "--a", "2,1,1", "--b", "2,1,1", "--nu", "2"]);
    assert!(flow.contains("\"nu\":2"));
    let swap = stdout_of(&[
        "bip-realize",
        "--a",
        "2,1,1",
        "--b",
        "2,1,1",
        "--nu",
        "2",
        "--method",
        "swap",
    ]);
    assert!(swap.contains("\"nu\":2"));
}

#[test]
fn interval_linear_scan_agrees_with_binary_search() {
    for (a, b) in [("2,2,1", "2,2,1"), ("3,3,3", "3,3,3"), ("2,1,1", "2,1,1")] {
        let fast = stdout_of(&["bip-interval", "--a", a, "--b", b]);
        let slow = stdout_of(&["bip-interval", "--a", a, "--b", b, "--linear-scan"]);
        assert_eq!(fast, slow);
    }
}

#[test]
fn verify_small_sweep_passes() {
    let out = degmatch(&[
        "verify",
        "--max-n",
        "3",
        "--max-m",
        "3",
        "--max-deg",
        "2",
        "--max-tree-n",
        "6",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("\"status\":\"pass\""), "got {text}");
}

#[test]
fn swap_path_between_given_realizations() {
    let text = stdout_of(&[
        "swap-path",
        "--n",
        "2",
        "--m",
        "2",
        "--g1",
        "1-1;2-2",
        "--g2",
        "1-2;2-1",
    ]);
    assert_eq!(text, "{\"length\":1,\"steps\":[[1,2,1,2]]}\n");
}
