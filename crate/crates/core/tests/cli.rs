//! End-to-end runs of the command-line tool.

mod common;

use std::process::{Command, Output};

use bchlab::lattice::{bareiss_det, Matrix};
use bchlab::rings::{parse_zpoly, zpoly_from_json};
use bchlab::Rational;
use rand::{rngs::StdRng, Rng, SeedableRng};

fn bchlab(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_bchlab")).args(args).env_remove("BCHLAB_MAX_N").output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn code(o: &Output) -> i32 {
    o.status.code().unwrap()
}

fn temp_file(name: &str, text: &str) -> String {
    let dir = std::env::temp_dir().join(format!("bchlab-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join(name);
    std::fs::write(&path, text).unwrap();
    path.to_string_lossy().into_owned()
}

#[test]
fn gen_prints_members() {
    let o = bchlab(&["gen", "--kind", "Q", "--coords", "q", "--n", "2"]);
    assert_eq!(code(&o), 0);
    assert_eq!(stdout(&o), "Q1 = z + q1\nQ2 = 1/3*z^3 + q1*z^2 + (-1/3 + q1^2)*z + q2\n");
    let o = bchlab(&["gen", "--kind", "Q0", "--n", "3"]);
    assert_eq!(code(&o), 0);
    let q03 = stdout(&o).lines().last().unwrap().split(" = ").nth(1).unwrap().to_string();
    assert_eq!(parse_zpoly(&q03).unwrap(), parse_zpoly("z^2*(z^2-1)*(z^2-4)/45").unwrap());
}

#[test]
fn gen_cross_check_agrees() {
    for args in [["--kind", "Q", "--coords", "t"], ["--kind", "P", "--coords", "c"], ["--kind", "Q0", "--coords", "q"]] {
        let mut all = vec!["gen"];
        all.extend(args);
        all.extend(["--n", "3", "--cross-check"]);
        assert_eq!(code(&bchlab(&all)), 0, "{all:?}");
    }
}

#[test]
fn json_output_round_trips() {
    let o = bchlab(&["--format", "json", "gen", "--kind", "Q", "--coords", "q", "--n", "3"]);
    assert_eq!(code(&o), 0);
    let doc: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    let entries = doc["entries"].as_array().unwrap();
    assert_eq!(entries.len(), 3);
    for (i, e) in entries.iter().enumerate() {
        let n = i + 1;
        let parsed = zpoly_from_json(&e["poly"]).unwrap();
        assert_eq!(parsed, parse_zpoly(e["text"].as_str().unwrap()).unwrap());
        assert_eq!(parsed, common::golden_zpoly(&format!("Q{n}")));
    }
}

#[test]
fn convert_prints_coordinate_changes() {
    let o = bchlab(&["convert", "--direction", "q-to-t", "--n", "3"]);
    assert!(stdout(&o).contains("t3 = -3*q2 + q1^3\n"));
    let o = bchlab(&["convert", "--direction", "t-to-q", "--n", "2"]);
    assert!(stdout(&o).contains("q2 = -1/3*t3 + 1/3*t1^3\n"));
    let o = bchlab(&["convert", "--direction", "even-gauge", "--n", "1"]);
    assert_eq!(stdout(&o), "t2 = t1^2\n");
}

#[test]
fn verify_suites_pass() {
    for relation in ["bch", "dbch", "dodgson", "modified-dodgson", "constraint", "jacobi", "laurent"] {
        let o = bchlab(&["verify", "--relation", relation, "--n", "4"]);
        assert_eq!(code(&o), 0, "{relation}");
        assert!(stdout(&o).trim_end().ends_with("PASS"), "{relation}");
    }
    let o = bchlab(&["verify", "--relation", "laurent", "--n", "5"]);
    let text = stdout(&o);
    for a in ["A_1 = 1", "A_2 = 3", "A_3 = 45", "A_4 = 4725", "A_5 = 4465125"] {
        assert!(text.contains(a), "{a}");
    }
    let o = bchlab(&["--format", "json", "verify", "--relation", "dbch", "--n", "3"]);
    let doc: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(doc["pass"], true);
}

#[test]
fn usage_errors_exit_2() {
    for args in [
        &["gen", "--kind", "Q0", "--coords", "t", "--n", "2"][..],
        &["gen", "--kind", "Q", "--n", "x"],
        &["verify", "--relation", "nonsense", "--n", "2"],
        &["verify", "--relation", "dbch", "--n", "50"],
        &["table", "--seed", "symbolic", "--window", "figure4"],
        &["table", "--window", "0..3,2..4"],
        &["det"],
        &[],
    ] {
        assert_eq!(code(&bchlab(args)), 2, "{args:?}");
    }
    assert_eq!(code(&bchlab(&["--help"])), 0);
}

#[test]
fn cap_is_configurable() {
    let run = |cap: &str| {
        Command::new(env!("CARGO_BIN_EXE_bchlab"))
            .args(["gen", "--kind", "Q", "--coords", "q", "--n", "3"])
            .env("BCHLAB_MAX_N", cap)
            .output()
            .unwrap()
    };
    assert_eq!(code(&run("2")), 2);
    assert_eq!(code(&run("3")), 0);
    assert_eq!(code(&run("three")), 2);
}

#[test]
fn table_reproduces_the_figure() {
    let o = bchlab(&["table", "--seed", "ones", "--window", "figure4", "--format", "tsv"]);
    assert_eq!(code(&o), 0);
    assert_eq!(stdout(&o), std::fs::read_to_string(common::golden_dir().join("figure4.tsv")).unwrap());
    let notes = String::from_utf8(o.stderr).unwrap();
    assert!(notes.contains("(2, -4)") && notes.contains("(-2, 3)"), "{notes}");
    assert_eq!(code(&bchlab(&["table", "--strict"])), 1);
    let o = bchlab(&["table", "--seed", "symbolic", "--window", "3x3", "--check-laurent"]);
    assert_eq!(code(&o), 0);
}

#[test]
fn table_reads_seed_files() {
    let seeds = temp_file("seeds.txt", "# the all-ones data\n0 1\n1 1\n2 1\n3 1\n-1 1\n");
    let o = bchlab(&["table", "--seed", &format!("file:{seeds}"), "--window", "-3..3,-1..3", "--format", "tsv"]);
    assert_eq!(code(&o), 0);
    let bad = temp_file("bad.tsv", "1 x\n");
    assert_eq!(code(&bchlab(&["table", "--seed", &format!("file:{bad}")])), 2);
    let missing = format!("file:{}", temp_file("gone.txt", "") + ".absent");
    assert_eq!(code(&bchlab(&["table", "--seed", &missing])), 2);
}

#[test]
fn det_methods_agree() {
    let path = temp_file("two.txt", "2\n1 2\n3 4\n");
    let o = bchlab(&["det", "--input", &path, "--method", "both"]);
    assert_eq!((code(&o), stdout(&o)), (0, "-2\n".to_string()));

    let path = temp_file("identity.txt", "3\n1 0 0\n0 1 0\n0 0 1\n");
    for method in ["condense", "bareiss", "both"] {
        let o = bchlab(&["det", "--input", &path, "--method", method]);
        assert_eq!(stdout(&o), "1\n", "{method}");
    }

    let mut rng = StdRng::seed_from_u64(6);
    let rows: Vec<Vec<i64>> = (0..6).map(|_| (0..6).map(|_| rng.gen_range(-5..=5)).collect()).collect();
    let text = std::iter::once("6".to_string())
        .chain(rows.iter().map(|r| r.iter().map(i64::to_string).collect::<Vec<_>>().join(" ")))
        .collect::<Vec<_>>()
        .join("\n");
    let path = temp_file("six.txt", &text);
    let o = bchlab(&["--format", "json", "det", "--input", &path]);
    let doc: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    let expected = bareiss_det(&Matrix::<Rational>::from_ints(&rows).unwrap());
    assert_eq!(doc["det"].as_str().unwrap(), bchlab::rings::format_rational(&expected));
    assert_eq!(doc["agree"], true);

    let path = temp_file("ragged.txt", "2\n1 2\n3\n");
    assert_eq!(code(&bchlab(&["det", "--input", &path])), 2);
}

#[test]
fn limit_matches_the_classical_sequence() {
    let o = bchlab(&["limit", "--n", "4", "--check-against-bch"]);
    assert_eq!(code(&o), 0);
    let text = stdout(&o);
    let p4 = text.lines().find(|l| l.starts_with("P4 = ")).unwrap();
    assert_eq!(parse_zpoly(&p4[5..]).unwrap(), common::golden_zpoly("P4"));
    let o = bchlab(&["limit", "--n", "2", "--kdv-times"]);
    assert!(stdout(&o).contains("T1 = 1/12*t3"));
}

#[test]
fn output_is_deterministic() {
    let args = ["--format", "json", "gen", "--kind", "R", "--n", "3"];
    let a = bchlab(&args);
    assert_eq!(code(&a), 0);
    assert_eq!(a.stdout, bchlab(&args).stdout);
}

#[test]
fn library_entry_point_matches_the_binary() {
    let args = ["bchlab", "verify", "--relation", "constraint", "--n", "3"];
    let (mut out, mut err) = (Vec::new(), Vec::new());
    let rc = bchlab::cli::run(args, &mut out, &mut err);
    assert_eq!(rc, 0);
    assert_eq!(out, bchlab(&args[1..]).stdout);
}
