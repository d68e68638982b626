use std::fs;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use rainbowj::format::{from_json, Certificate};
use rainbowj::generators;
use rainbowj::Graph;

fn rainbowj(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_rainbowj"))
        .args(args)
        .env_remove("RAINBOWJ_BUDGET_MS")
        .output()
        .expect("binary runs")
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("exit code")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn write(dir: &Path, name: &str, text: &str) -> PathBuf {
    let path = dir.join(name);
    fs::write(&path, text).unwrap();
    path
}

fn arg(p: &Path) -> &str {
    p.to_str().unwrap()
}

#[test]
fn gen_round_trips() {
    let out = rainbowj(&["gen", "--family", "jahangir", "-n", "4", "-m", "6", "--format", "json"]);
    assert_eq!(code(&out), 0);
    let g: Graph = from_json(&stdout(&out)).unwrap();
    assert_eq!(g, generators::jahangir(4, 6).unwrap().graph);

    let out = rainbowj(&["gen", "--family", "mycielski-of", "--base", "path", "-n", "2"]);
    let g: Graph = from_json(&stdout(&out)).unwrap();
    assert_eq!((g.num_vertices(), g.num_edges()), (5, 5));
}

#[test]
fn gen_rejects_bad_parameters() {
    assert_eq!(code(&rainbowj(&["gen", "--family", "cycle", "-c", "2"])), 2);
    assert_eq!(code(&rainbowj(&["gen", "--family", "jahangir", "-n", "4"])), 2);
    assert_eq!(code(&rainbowj(&["gen"])), 2);
}

#[test]
fn gen_dot() {
    let out = rainbowj(&["gen", "--family", "wheel", "-c", "4", "--format", "dot"]);
    assert_eq!(code(&out), 0);
    let text = stdout(&out);
    assert!(text.starts_with("graph G {"));
    let nodes = text.lines().filter(|l| l.trim().trim_end_matches(';').parse::<usize>().is_ok());
    assert_eq!(nodes.count(), 5);
}

#[test]
fn decide_families() {
    let out = rainbowj(&["decide", "--family", "jahangir", "-n", "4", "-m", "6"]);
    assert_eq!(code(&out), 0);
    assert_eq!(stdout(&out).trim(), "J_{4,6}: admits, J=3, rule=jahangir-spaced-spokes");

    let out = rainbowj(&["decide", "--family", "jahangir", "-n", "5", "-m", "4", "--oracle"]);
    assert_eq!(code(&out), 1);
    assert!(stdout(&out).contains("oracle: not admits, agrees"));

    // bipartite even-n case: closed form and search both give 2 colours
    let out = rainbowj(&["decide", "--family", "jahangir", "-n", "2", "-m", "4", "--oracle"]);
    assert_eq!(code(&out), 0);
    assert!(stdout(&out).contains("oracle: admits, J=2, agrees"));

    let out = rainbowj(&["decide", "--family", "path", "-n", "5", "--jstar", "--oracle"]);
    assert_eq!(code(&out), 0);
    assert!(stdout(&out).contains("oracle: admits, J*=3, agrees"));
}

#[test]
fn decide_graph_file_uses_search() {
    let dir = tempfile::tempdir().unwrap();
    let c9 = rainbowj(&["gen", "--family", "complement-of", "--base", "cycle", "-c", "9"]);
    let path = write(dir.path(), "c9.json", &stdout(&c9));
    let out = rainbowj(&["decide", "--graph", arg(&path)]);
    assert_eq!(code(&out), 1);
    assert!(stdout(&out).contains("rule=oracle"));

    let out = rainbowj(&["decide", "--graph", arg(&path), "--max-nodes", "10"]);
    assert_eq!(code(&out), 2);
}

#[test]
fn construct_then_verify() {
    let dir = tempfile::tempdir().unwrap();
    let cert = dir.path().join("cert.json");
    let out = rainbowj(&["construct", "--family", "jahangir", "-n", "4", "-m", "6", "--out", arg(&cert)]);
    assert_eq!(code(&out), 0);
    let parsed: Certificate = from_json(&fs::read_to_string(&cert).unwrap()).unwrap();
    assert_eq!(parsed.k, 3);
    assert_eq!(&parsed.coloring.colors()[..8], &[1, 2, 3, 1, 2, 1, 3, 2]);
    assert_eq!(code(&rainbowj(&["verify", arg(&cert)])), 0);

    for family in [
        vec!["--family", "cycle", "-c", "9"],
        vec!["--family", "wheel", "-c", "6"],
        vec!["--family", "jahangir", "-n", "7", "-m", "4"],
        vec!["--family", "jahangir", "-n", "1", "-m", "3"],
    ] {
        let mut args = vec!["construct"];
        args.extend(&family);
        args.extend(["--out", arg(&cert)]);
        assert_eq!(code(&rainbowj(&args)), 0, "{family:?}");
        assert_eq!(code(&rainbowj(&["verify", arg(&cert)])), 0, "{family:?}");
    }

    let out = rainbowj(&["construct", "--family", "wheel", "-c", "6"]);
    let cert: Certificate = from_json(&stdout(&out)).unwrap();
    assert_eq!(cert.k, 4);
    assert_eq!(code(&rainbowj(&["construct", "--family", "cycle", "-c", "5"])), 1);
}

#[test]
fn construct_from_graph_uses_search_witness() {
    let dir = tempfile::tempdir().unwrap();
    let g = rainbowj(&["gen", "--family", "complement-of", "--base", "cycle", "-c", "6"]);
    let path = write(dir.path(), "g.json", &stdout(&g));
    let out = rainbowj(&["construct", "--graph", arg(&path)]);
    assert_eq!(code(&out), 0);
    let cert: Certificate = from_json(&stdout(&out)).unwrap();
    assert_eq!(cert.k, 3);
    assert!(cert.check().unwrap().valid);
}

#[test]
fn verify_rejects_bad_certificates() {
    let dir = tempfile::tempdir().unwrap();
    let out = rainbowj(&["construct", "--family", "jahangir", "-n", "4", "-m", "6"]);
    let mut cert: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    cert["coloring"]["colors"][24] = 1.into();
    let bad = write(dir.path(), "bad.json", &cert.to_string());
    let out = rainbowj(&["verify", arg(&bad)]);
    assert_eq!(code(&out), 1);
    assert!(stdout(&out).contains("edge 0-24"));

    let c4 = write(
        dir.path(),
        "c4.json",
        r#"{"graph":{"num_vertices":4,"edges":[[0,1],[1,2],[2,3],[3,0]]},
            "coloring":{"k":4,"colors":[1,2,1,2]},"claim":"J","k":4}"#,
    );
    let out = rainbowj(&["verify", arg(&c4)]);
    assert_eq!(code(&out), 1);
    assert!(stdout(&out).contains("colours used: 2 of 4"));

    let broken = write(dir.path(), "broken.json", "{\"graph\":");
    assert_eq!(code(&rainbowj(&["verify", arg(&broken)])), 2);
}

#[test]
fn surveys() {
    let out = rainbowj(&["survey", "--family", "cycle", "--min", "3", "--max", "14", "--format", "csv"]);
    assert_eq!(code(&out), 0);
    let text = stdout(&out);
    assert_eq!(text.lines().count(), 13);
    assert!(text.lines().skip(1).all(|l| l.contains(",true,")));

    let out = rainbowj(&["survey", "--family", "wheel", "--min", "3", "--max", "12", "--format", "csv"]);
    assert_eq!(code(&out), 0);
    let fours: Vec<String> = stdout(&out)
        .lines()
        .filter(|l| l.contains(",yes,4,"))
        .map(|l| l.split(',').nth(1).unwrap().to_string())
        .collect();
    assert_eq!(fours, ["c=3", "c=6", "c=9", "c=12"]);

    let single = rainbowj(&["survey", "--family", "jahangir", "--max-vertices", "21"]);
    let parallel = rainbowj(&["survey", "--family", "jahangir", "--max-vertices", "21", "--threads", "4"]);
    assert_eq!(code(&single), 0);
    assert_eq!(stdout(&single), stdout(&parallel));

    let starved = rainbowj(&["survey", "--family", "jahangir", "--max-vertices", "25", "--max-nodes", "50"]);
    assert_eq!(code(&starved), 2);
    assert!(stdout(&starved).contains("budget"));
}

#[test]
fn rchi_reports_min_and_max() {
    let dir = tempfile::tempdir().unwrap();
    for (family, c, expected) in [("cycle", "5", "(3, 3)"), ("cycle", "4", "(4, 4)"), ("cycle", "3", "(3, 3)")] {
        let g = rainbowj(&["gen", "--family", family, "-c", c]);
        let path = write(dir.path(), "g.json", &stdout(&g));
        let out = rainbowj(&["rchi", arg(&path)]);
        assert_eq!(code(&out), 0);
        assert!(stdout(&out).contains(&format!("r_chi (min, max) = {expected}")), "{}", stdout(&out));
    }
}

#[test]
fn cordial_commands() {
    let dir = tempfile::tempdir().unwrap();
    let out = rainbowj(&["cordial", "find", "--family", "jahangir", "-n", "3", "-m", "6"]);
    assert_eq!(code(&out), 0);
    let labeling = write(dir.path(), "f.json", &stdout(&out));
    let g = rainbowj(&["gen", "--family", "jahangir", "-n", "3", "-m", "6"]);
    let graph = write(dir.path(), "g.json", &stdout(&g));
    assert_eq!(code(&rainbowj(&["cordial", "check", arg(&graph), arg(&labeling)])), 0);

    let ones = write(dir.path(), "ones.json", &format!("{{\"labels\":{:?}}}", vec![1; 19]));
    assert_eq!(code(&rainbowj(&["cordial", "check", arg(&graph), arg(&ones)])), 1);

    let k4 = rainbowj(&["gen", "--family", "complete", "-n", "4"]);
    let k4 = write(dir.path(), "k4.json", &stdout(&k4));
    assert_eq!(code(&rainbowj(&["cordial", "find", "--graph", arg(&k4)])), 1);
}

#[test]
fn budget_from_environment() {
    let out = Command::new(env!("CARGO_BIN_EXE_rainbowj"))
        .args(["decide", "--family", "jahangir", "-n", "4", "-m", "6", "--oracle"])
        .env("RAINBOWJ_BUDGET_MS", "60000")
        .output()
        .unwrap();
    assert_eq!(code(&out), 0);
}
