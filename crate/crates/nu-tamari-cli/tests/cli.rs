//! End-to-end runs of the binary: worked instances, format round trips, and
//! the documented exit codes.

use std::process::Command;

use nu_tamari::path::nu_tamari_poset;

const T1: &str = "{(0,2),(2,2),(2,1),(3,1),(0,0),(1,0)}";

fn run(args: &[&str]) -> (Option<i32>, String, String) {
    let output =
        Command::new(env!("CARGO_BIN_EXE_nu-tamari")).args(args).output().expect("binary runs");
    (
        output.status.code(),
        String::from_utf8(output.stdout).expect("stdout is text"),
        String::from_utf8(output.stderr).expect("stderr is text"),
    )
}

fn stdout_of(args: &[&str]) -> String {
    let (code, stdout, stderr) = run(args);
    assert_eq!(code, Some(0), "args {args:?} failed: {stderr}");
    stdout
}

#[test]
fn enumerates_paths_in_word_order() {
    let stdout = stdout_of(&["enumerate", "--nu", "ENEEN", "--object", "paths"]);
    let words: Vec<&str> = stdout.lines().collect();
    assert_eq!(words, ["ENEEN", "ENENE", "ENNEE", "NEEEN", "NEENE", "NENEE", "NNEEE"]);
}

#[test]
fn one_step_worlds_are_single_objects() {
    assert_eq!(stdout_of(&["enumerate", "--nu", "E", "--object", "trees"]), "{(0,0),(1,0)}\n");
    assert_eq!(stdout_of(&["enumerate", "--nu", "NE", "--object", "brackets"]), "011\n");
}

#[test]
fn json_listings_parse_back() {
    let stdout =
        stdout_of(&["enumerate", "--nu", "ENEEN", "--object", "paths", "--format", "json"]);
    let words: Vec<String> = serde_json::from_str(&stdout).expect("valid json");
    assert_eq!(words.len(), 7);
    assert!(words.contains(&"ENENE".to_string()));

    let stdout =
        stdout_of(&["enumerate", "--nu", "ENEEN", "--object", "brackets", "--format", "json"]);
    let vectors: Vec<Vec<usize>> = serde_json::from_str(&stdout).expect("valid json");
    assert_eq!(vectors.len(), 7);
    assert!(vectors.contains(&vec![0, 0, 1, 1, 1, 2]));

    let stdout =
        stdout_of(&["enumerate", "--nu", "ENEEN", "--object", "trees", "--format", "json"]);
    let trees: Vec<Vec<[usize; 2]>> = serde_json::from_str(&stdout).expect("valid json");
    assert_eq!(trees.len(), 7);
    assert!(trees.iter().all(|t| t.len() == 6));
}

#[test]
fn bracket_diagram_grows_up_from_the_minimum() {
    let stdout = stdout_of(&["hasse", "--nu", "ENEEN", "--guise", "bracket", "--format", "dot"]);
    assert!(stdout.starts_with("digraph poset {"));
    assert!(stdout.contains("\"001112\";"), "bottom node missing");
    assert!(stdout.contains("\"001112\" -> "), "bottom node has no cover");
    assert!(!stdout.contains("-> \"001112\";"), "bottom node is covered by something");
}

#[test]
fn trivial_diagram_is_a_single_node() {
    let stdout = stdout_of(&["hasse", "--nu", "E", "--guise", "path"]);
    assert_eq!(stdout, "digraph poset {\n  rankdir=BT;\n  \"E\";\n}\n");
}

#[test]
fn json_diagram_matches_the_library_poset() {
    let stdout = stdout_of(&["hasse", "--nu", "ENEEN", "--guise", "path", "--format", "json"]);
    let value: serde_json::Value = serde_json::from_str(&stdout).expect("valid json");
    let poset = nu_tamari_poset(&"ENEEN".parse().unwrap());
    assert_eq!(value["nodes"].as_array().unwrap().len(), poset.len());
    assert_eq!(value["covers"].as_array().unwrap().len(), poset.cover_pairs().len());
}

#[test]
fn subword_diagram_nodes_are_facet_sets() {
    let stdout = stdout_of(&["hasse", "--nu", "ENEEN", "--guise", "subword", "--format", "json"]);
    let value: serde_json::Value = serde_json::from_str(&stdout).expect("valid json");
    let nodes = value["nodes"].as_array().unwrap();
    assert_eq!(nodes.len(), 7);
    assert!(nodes.iter().all(|n| n.as_str().unwrap().starts_with('{')));
}

#[test]
fn maps_follow_the_worked_instance() {
    assert_eq!(
        stdout_of(&["map", "--nu", "ENEEN", "--from", "path", "--to", "tree", "--value", "ENENE"]),
        format!("{T1}\n")
    );
    assert_eq!(
        stdout_of(&["map", "--nu", "ENEEN", "--from", "tree", "--to", "bracket", "--value", T1]),
        "002112\n"
    );
    assert_eq!(
        stdout_of(&[
            "map", "--nu", "ENEEN", "--from", "bracket", "--to", "path", "--value", "002112"
        ]),
        "ENENE\n"
    );
}

#[test]
fn tree_values_parse_from_json_pairs_too() {
    let stdout = stdout_of(&[
        "map",
        "--nu",
        "ENEEN",
        "--from",
        "tree",
        "--to",
        "bracket",
        "--value",
        "[[0,2],[2,2],[2,1],[3,1],[0,0],[1,0]]",
    ]);
    assert_eq!(stdout, "002112\n");
}

#[test]
fn duality_round_trips_through_the_reversed_world() {
    let image = stdout_of(&[
        "map",
        "--nu",
        "ENEEN",
        "--from",
        "path",
        "--to",
        "path-dual",
        "--value",
        "ENENE",
    ]);
    let image = image.trim();
    let back = stdout_of(&[
        "map",
        "--nu",
        "ENNEN",
        "--from",
        "path",
        "--to",
        "path-dual",
        "--value",
        image,
    ]);
    assert_eq!(back.trim(), "ENENE");
}

#[test]
fn subword_guise_round_trips() {
    let facet = stdout_of(&[
        "map", "--nu", "ENEEN", "--from", "path", "--to", "subword", "--value", "ENENE",
    ]);
    let back = stdout_of(&[
        "map",
        "--nu",
        "ENEEN",
        "--from",
        "subword",
        "--to",
        "path",
        "--value",
        facet.trim(),
    ]);
    assert_eq!(back.trim(), "ENENE");
}

#[test]
fn bad_base_paths_exit_two() {
    let (code, _, stderr) = run(&["enumerate", "--nu", "EXN", "--object", "paths"]);
    assert_eq!(code, Some(2));
    assert!(stderr.contains("invalid path step"));
}

#[test]
fn oversized_listings_exit_three() {
    let (code, stdout, stderr) =
        run(&["enumerate", "--nu", "ENEEN", "--object", "paths", "--limit", "3"]);
    assert_eq!(code, Some(3));
    assert!(stdout.is_empty());
    assert!(stderr.contains("limit"));
}

#[test]
fn invalid_map_values_exit_four_with_a_reason() {
    let (code, _, stderr) =
        run(&["map", "--nu", "ENEEN", "--from", "path", "--to", "tree", "--value", "EENNE"]);
    assert_eq!(code, Some(4));
    assert!(stderr.contains("weakly above"));

    let (code, _, stderr) =
        run(&["map", "--nu", "ENEEN", "--from", "bracket", "--to", "path", "--value", "999999"]);
    assert_eq!(code, Some(4));
    assert!(!stderr.is_empty());
}

#[test]
fn check_passes_and_reports_every_tag() {
    let stdout = stdout_of(&["check", "--max-len", "3", "--k", "2"]);
    for tag in [
        "Thm-lattice",
        "Thm-guises",
        "Prop-meet",
        "Prop-join",
        "Cor-duality",
        "Prop-brackets",
        "Lemma-rotation",
        "Prop-dreams",
        "Thm-flips",
        "Prop-EG",
        "Prop-multi",
    ] {
        assert!(stdout.contains(&format!("PASS {tag}")), "missing {tag}");
    }
    assert!(!stdout.contains("FAIL"));
}

#[test]
fn empty_sweep_passes_vacuously() {
    let (code, stdout, _) = run(&["check", "--max-len", "0", "--k", "1"]);
    assert_eq!(code, Some(0));
    assert!(stdout.contains("PASS Thm-lattice"));
}

#[test]
fn closed_pipes_do_not_crash_the_listing() {
    use std::io::Read;
    use std::process::Stdio;

    // Enough output to overflow the pipe buffer, so the binary is still
    // writing when the read end goes away.
    let mut child = Command::new(env!("CARGO_BIN_EXE_nu-tamari"))
        .args(["enumerate", "--nu", &"NE".repeat(10), "--object", "paths", "--limit", "20000"])
        .stdout(Stdio::piped())
        .spawn()
        .expect("binary runs");
    let mut stdout = child.stdout.take().expect("stdout is piped");
    let mut probe = [0u8; 64];
    stdout.read_exact(&mut probe).expect("some output arrives");
    drop(stdout);
    let status = child.wait().expect("child finishes");
    assert_eq!(status.code(), Some(0));
}

#[test]
fn seed_flag_is_accepted_and_ignored() {
    let with = stdout_of(&["enumerate", "--nu", "NENE", "--object", "paths", "--seed", "7"]);
    let without = stdout_of(&["enumerate", "--nu", "NENE", "--object", "paths"]);
    assert_eq!(with, without);
}
