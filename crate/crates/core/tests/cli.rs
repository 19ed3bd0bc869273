use std::io::Write;
use std::process::Command;

use bcontact::cli::run_cli;

struct Outcome {
    status: i32,
    stdout: String,
    stderr: String,
}

fn run_with_stdin(args: &[&str], stdin: &str) -> Outcome {
    let (mut out, mut err) = (Vec::new(), Vec::new());
    let argv = std::iter::once("bcontact").chain(args.iter().copied());
    let status = run_cli(argv, &mut stdin.as_bytes(), &mut out, &mut err);
    Outcome { status, stdout: String::from_utf8(out).unwrap(), stderr: String::from_utf8(err).unwrap() }
}

fn run(args: &[&str]) -> Outcome {
    run_with_stdin(args, "")
}

const TORUS_32: &str = "surface torus\nv 0 + 0\nv 1 - 0\ne 0 1\ne 0 1\nslope 3 2\n";
const SPHERE_ONE: &str = "surface sphere\nv 0 + 0\nv 1 - 0\ne 0 1\n";
const SPHERE_PATH3: &str = "surface sphere\nv 0 + 0\nv 1 - 0\nv 2 + 0\ne 0 1\ne 1 2\n";

#[test]
fn small_answers() {
    assert_eq!(run(&["tight-count", "--n", "1", "--p", "3", "--q", "2"]).stdout, "2\n");
    assert_eq!(run(&["enum-trees", "--n", "5", "--count-only"]).stdout, "65\n");
    assert_eq!(run(&["enum-trees", "--n", "5", "--count-only", "--modulo-swap"]).stdout, "37\n");
    assert_eq!(run(&["cf", "--p", "7", "--q", "2"]).stdout, "-4 -2\n");
    assert_eq!(run(&["cf", "--p", "7", "--q", "2", "--format", "json"]).stdout, "[-4,-2]\n");
    assert_eq!(run_with_stdin(&["census", "--gamma", "-"], SPHERE_ONE).stdout, "2 2 1\n");
}

#[test]
fn count_only_matches_listing() {
    for n in ["1", "2", "3", "4"] {
        let count = run(&["enum-trees", "--n", n, "--count-only"]).stdout;
        let listing = run(&["enum-trees", "--n", n]).stdout;
        assert_eq!(count.trim().parse::<usize>().unwrap(), listing.lines().count());
        let json = run(&["enum-trees", "--n", n, "--format", "json"]).stdout;
        assert_eq!(json.lines().count(), listing.lines().count());
    }
    let count = run(&["enum-torus", "--max-curves", "4", "--max-slope", "3", "--count-only"]).stdout;
    let csv = run(&["enum-torus", "--max-curves", "4", "--max-slope", "3", "--format", "csv"]).stdout;
    assert_eq!(count.trim().parse::<usize>().unwrap() + 1, csv.lines().count());
}

#[test]
fn exit_statuses() {
    let cases: &[(&[&str], &str, i32)] = &[
        (&["cf", "--p", "7", "--q", "2"], "", 0),
        (&["classify", "--gamma", "-"], TORUS_32, 0),
        (&["check", "--gamma", "-"], SPHERE_ONE, 0),
        // unbalanced tree: pairing 2
        (&["check", "--gamma", "-"], SPHERE_PATH3, 1),
        (&["classify", "--gamma", "-"], SPHERE_PATH3, 1),
        (&["classify", "--gamma", "-", "--manifold", "s3-s2"], TORUS_32, 1),
        (&["cf", "--p", "4", "--q", "2"], "", 2),
        (&["cf", "--p", "2", "--q", "3"], "", 2),
        (&["cf", "--p", "7"], "", 2),
        (&["tight-count", "--n", "0", "--p", "1", "--q", "1"], "", 2),
        (&["enum-trees"], "", 2),
        (&["enum-trees", "--n", "11"], "", 2),
        (&["enum-trees", "--n", "3", "--modulo-swap", "--distinguish-signs"], "", 2),
        (&["frobnicate"], "", 2),
        (&["classify", "--gamma", "-"], "surface torus\nv 0 + 0\n", 2),
        (&["classify", "--gamma", "-"], "surface sphere\nv 0 + 0\nv 1 + 0\ne 0 1\n", 2),
        (&["classify", "--gamma", "-"], "surface torus\nv 0 + 0\nv 1 - 0\ne 0 1\ne 0 1\nslope 4 2\n", 2),
        (&["classify", "--gamma", "/nonexistent/gamma.txt"], "", 2),
        (&["table"], "", 2),
    ];
    for (args, stdin, expected) in cases {
        let o = run_with_stdin(args, stdin);
        assert_eq!(o.status, *expected, "{args:?}: stdout={} stderr={}", o.stdout, o.stderr);
        if *expected == 2 {
            assert!(!o.stderr.is_empty(), "{args:?} printed no diagnostic");
        }
    }
}

#[test]
fn check_reports_pairing() {
    let o = run_with_stdin(&["check", "--gamma", "-", "--format", "json"], SPHERE_PATH3);
    let v: serde_json::Value = serde_json::from_str(o.stdout.trim()).unwrap();
    assert_eq!(v["euler_pairing"], 2);
    assert_eq!(v["admissible"], false);
}

#[test]
fn classify_formats() {
    let o = run_with_stdin(&["classify", "--gamma", "-", "--format", "json"], TORUS_32);
    let v: serde_json::Value = serde_json::from_str(o.stdout.trim()).unwrap();
    assert_eq!(v["tight"]["finite_factor"], "4");
    assert_eq!(v["mixed"]["finite_factor"], "4");
    assert_eq!(v["mixed"]["free_rank"], 2);
    assert_eq!(v["fully_overtwisted"]["free_rank"], 4);

    let csv = run_with_stdin(&["classify", "--gamma", "-", "--format", "csv"], TORUS_32).stdout;
    let mut reader = csv::Reader::from_reader(csv.as_bytes());
    let headers = reader.headers().unwrap().clone();
    let row = reader.records().next().unwrap().unwrap();
    let field = |name: &str| &row[headers.iter().position(|h| h == name).unwrap()];
    assert_eq!(field("tight_count"), "4");
    assert_eq!(field("slope_p"), "3");
    assert_eq!(field("ot_rank"), "4");
}

#[test]
fn gamma_from_file_and_stdin_agree() {
    let mut file = tempfile::NamedTempFile::new().unwrap();
    file.write_all(TORUS_32.as_bytes()).unwrap();
    let path = file.path().to_str().unwrap();
    let from_file = run(&["classify", "--gamma", path, "--format", "json"]);
    let from_stdin = run_with_stdin(&["classify", "--gamma", "-", "--format", "json"], TORUS_32);
    assert_eq!(from_file.status, 0);
    assert_eq!(from_file.stdout, from_stdin.stdout);
}

#[test]
fn export_dot_round_trips() {
    let dot = run_with_stdin(&["export-dot", "--gamma", "-"], TORUS_32).stdout;
    assert!(dot.contains("graph dividing_set {"));
    let back = bcontact::io::parse_dot_metadata(&dot).unwrap();
    assert_eq!(bcontact::io::class_to_text(&back), TORUS_32);
}

#[test]
fn sphere_table_by_n_and_by_curves() {
    let by_n = run(&["table", "--manifold", "s3-s2", "--n", "3", "--format", "csv"]).stdout;
    let by_curves = run(&["table", "--manifold", "s3-s2", "--max-curves", "5", "--format", "csv"]).stdout;
    assert_eq!(by_n, by_curves);
    assert_eq!(by_n.lines().count(), 1 + 6);
    assert_eq!(run(&["table", "--manifold", "s3-s2", "--n", "3", "--count-only"]).stdout, "6\n");
}

#[test]
fn caps_can_be_raised() {
    assert_eq!(run(&["enum-trees", "--n", "11"]).status, 2);
    let o = run(&["cf", "--p", "1000", "--q", "999"]);
    assert_eq!(o.stdout.split_whitespace().count(), 999);
    let o = run(&["enum-torus", "--max-curves", "2", "--max-slope", "300", "--count-only"]);
    assert_eq!(o.status, 2);
    let o = run(&["enum-torus", "--max-curves", "2", "--max-slope", "300", "--max-slope-cap", "300", "--count-only"]);
    assert_eq!(o.status, 0);
}

#[test]
fn binary_uses_the_same_front_end() {
    let out = Command::new(env!("CARGO_BIN_EXE_bcontact")).args(["cf", "--p", "7", "--q", "2"]).output().unwrap();
    assert!(out.status.success());
    assert_eq!(String::from_utf8_lossy(&out.stdout), "-4 -2\n");

    let out = Command::new(env!("CARGO_BIN_EXE_bcontact")).args(["cf", "--p", "4", "--q", "2"]).output().unwrap();
    assert_eq!(out.status.code(), Some(2));
}
