use std::fs;
use std::io::Write;
use std::path::PathBuf;
use std::process::{Command, Stdio};

use sgkit::cli::{self, EXIT_FAIL, EXIT_INPUT, EXIT_OK};

fn manifest() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
}

fn data(name: &str) -> String {
    manifest().join("tests/data").join(name).to_string_lossy().into_owned()
}

fn golden(name: &str) -> String {
    fs::read_to_string(manifest().join("tests/golden").join(name)).expect("golden file")
}

struct Run {
    code: i32,
    out: String,
    err: String,
}

fn run(args: &[&str], stdin: &str) -> Run {
    let mut argv = vec!["sgkit"];
    argv.extend_from_slice(args);
    let mut input = stdin.as_bytes();
    let mut out = Vec::new();
    let mut err = Vec::new();
    let code = cli::run(argv, &mut input, &mut out, &mut err);
    Run {
        code,
        out: String::from_utf8(out).unwrap(),
        err: String::from_utf8(err).unwrap(),
    }
}

fn value<'a>(report: &'a str, key: &str) -> Option<&'a str> {
    report
        .lines()
        .find_map(|l| l.strip_prefix(key).and_then(|r| r.strip_prefix(": ")))
}

fn pipe(first: &[&str], second: &[&str]) -> (i32, String) {
    let exe = env!("CARGO_BIN_EXE_sgkit");
    let produced = Command::new(exe).args(first).output().unwrap();
    assert!(produced.status.success(), "{first:?} failed");
    let mut child = Command::new(exe)
        .args(second)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(&produced.stdout).unwrap();
    let done = child.wait_with_output().unwrap();
    (done.status.code().unwrap(), String::from_utf8(done.stdout).unwrap())
}

#[test]
fn gen_outputs_match_goldens() {
    for (args, file) in [
        (&["gen", "hesse"][..], "gen_hesse.txt"),
        (&["gen", "trilattice", "--m", "1"][..], "gen_trilattice_m1.txt"),
        (&["gen", "eisenstein", "--m", "0"][..], "gen_eisenstein_m0.txt"),
    ] {
        let r = run(args, "");
        assert_eq!(r.code, EXIT_OK, "{args:?}: {}", r.err);
        assert_eq!(r.out, golden(file), "{args:?}");
    }
}

#[test]
fn gen_small_instances_have_nine_elements() {
    let tri = run(&["gen", "trilattice", "--m", "1"], "");
    assert_eq!(tri.out.lines().filter(|l| l.starts_with("plane ")).count(), 9);
    let eis = run(&["gen", "eisenstein", "--m", "0"], "");
    assert_eq!(eis.out.lines().filter(|l| l.starts_with("plane ")).count(), 9);
}

#[test]
fn gen_dodeca_lists_the_alphas_and_the_arrangement() {
    let r = run(&["gen", "dodeca"], "");
    assert_eq!(r.code, EXIT_OK);
    assert!(r.out.starts_with("space P^4 over H(5)\n"));
    assert_eq!(r.out.lines().filter(|l| l.starts_with("# alpha ")).count(), 20);
    assert_eq!(r.out.lines().filter(|l| l.starts_with("plane ")).count(), 15);
}

#[test]
fn gen_rejects_bad_parameters() {
    assert_eq!(run(&["gen", "trilattice", "--m", "-1"], "").code, EXIT_INPUT);
    assert_eq!(run(&["gen", "nonagon"], "").code, EXIT_INPUT);
}

#[test]
fn verify_hesse_is_sg_with_span_two() {
    let r = run(&["verify", &data("hesse.cfg")], "");
    assert_eq!(r.code, EXIT_OK);
    assert_eq!(value(&r.out, "span"), Some("2"));
    assert_eq!(r.out, golden("verify_hesse.txt"));
}

#[test]
fn verify_two_points_has_one_violation() {
    let r = run(&["verify", &data("two_points.cfg")], "");
    assert_eq!(r.code, EXIT_FAIL);
    assert_eq!(value(&r.out, "violations"), Some("1"));
    assert_eq!(r.out, golden("verify_two_points.txt"));
}

#[test]
fn malformed_literal_is_an_input_error_with_position() {
    let r = run(&["verify", &data("malformed.cfg")], "");
    assert_eq!(r.code, EXIT_INPUT);
    assert!(r.out.is_empty());
    assert!(r.err.contains("line 3, column 11"), "{}", r.err);
}

#[test]
fn missing_file_is_an_input_error() {
    let r = run(&["verify", &data("no_such_file.cfg")], "");
    assert_eq!(r.code, EXIT_INPUT);
}

#[test]
fn verify_reads_standard_input_by_default() {
    let text = fs::read_to_string(data("two_points.cfg")).unwrap();
    let r = run(&["verify"], &text);
    assert_eq!(r.out, golden("verify_two_points.txt"));
}

#[test]
fn explicit_mode_overrides_the_file_contents() {
    let r = run(&["verify", "--mode", "dual", &data("hesse.cfg")], "");
    assert_eq!(value(&r.out, "mode"), Some("dual"));
    assert_eq!(value(&r.out, "elements"), Some("0"));
}

#[test]
fn minsimplex_on_the_coordinate_simplex() {
    let r = run(&["minsimplex", &data("coordinate_simplex.cfg")], "");
    assert_eq!(r.code, EXIT_OK);
    assert_eq!(value(&r.out, "minimum"), Some("1"));
    assert_eq!(value(&r.out, "ties"), Some("0"));
    assert_eq!(r.out, golden("minsimplex_coordinate.txt"));
}

#[test]
fn minsimplex_on_concurrent_planes_has_no_finite_simplex() {
    let r = run(&["minsimplex", &data("concurrent.cfg")], "");
    assert_eq!(r.code, EXIT_FAIL);
    assert_eq!(value(&r.out, "minimum"), Some("none"));
}

#[test]
fn alphas_need_a_third_plane() {
    let r = run(&["alphas", &data("coordinate_simplex.cfg")], "");
    assert_eq!(r.code, EXIT_INPUT);
    assert!(r.err.contains("no third hyperplane"));
}

#[test]
fn lemma_c_matches_golden() {
    let r = run(&["lemma", "c"], "");
    assert_eq!(r.code, EXIT_OK);
    assert_eq!(r.out, golden("lemma_c.txt"));
}

#[test]
fn lemma_triangle_without_samples_runs_the_exact_case() {
    let r = run(&["lemma", "triangle", "--samples", "0"], "");
    assert_eq!(r.code, EXIT_OK);
    assert_eq!(r.out, golden("lemma_triangle_exact.txt"));
}

#[test]
fn lemma_hexagon_sampling_is_reproducible() {
    let args = ["--seed", "7", "lemma", "hexagon", "--samples", "2000"];
    let r = run(&args, "");
    assert_eq!(r.code, EXIT_OK);
    assert_eq!(value(&r.out, "violations"), Some("0"));
    assert_eq!(r.out, golden("lemma_hexagon_2000_seed7.txt"));
}

#[test]
fn lemma_l1_certifies_the_dodecahedron() {
    let r = run(&["lemma", "l1"], "");
    assert_eq!(r.code, EXIT_OK);
    assert_eq!(value(&r.out, "holds"), Some("true"));
    assert!(r.out.lines().filter(|l| l.starts_with("check: ")).all(|l| l.ends_with(": ok")));
}

#[test]
fn unknown_lemma_is_an_input_error() {
    let r = run(&["lemma", "pentagon"], "");
    assert_eq!(r.code, EXIT_INPUT);
}

#[test]
fn unknown_subcommand_is_an_input_error() {
    assert_eq!(run(&["frobnicate"], "").code, EXIT_INPUT);
    assert_eq!(run(&[], "").code, EXIT_INPUT);
    assert_eq!(run(&["--help"], "").code, EXIT_OK);
}

#[test]
fn identical_invocations_are_byte_identical() {
    for args in [
        &["--seed", "5", "lemma", "parallelotope", "--samples", "500"][..],
        &["--seed", "5", "lemma", "triangle", "--samples", "500"][..],
        &["gen", "dodeca"][..],
        &["minsimplex", &data("coordinate_simplex.cfg")][..],
    ] {
        let a = run(args, "");
        let b = run(args, "");
        assert_eq!(a.code, b.code);
        assert_eq!(a.out, b.out, "{args:?}");
    }
}

#[test]
fn output_flag_writes_the_report_to_a_file() {
    let path = std::env::temp_dir().join(format!("sgkit-cli-{}.txt", std::process::id()));
    let p = path.to_string_lossy().into_owned();
    let r = run(&["-o", &p, "verify", &data("hesse.cfg")], "");
    assert_eq!(r.code, EXIT_OK);
    assert!(r.out.is_empty());
    assert_eq!(fs::read_to_string(&path).unwrap(), golden("verify_hesse.txt"));
    fs::remove_file(path).unwrap();
}

#[test]
fn gen_piped_into_verify_never_errors() {
    let cases: [&[&str]; 6] = [
        &["gen", "hesse"],
        &["gen", "trilattice", "--m", "1"],
        &["gen", "trilattice", "--m", "3"],
        &["gen", "eisenstein", "--m", "0"],
        &["gen", "eisenstein", "--m", "1"],
        &["gen", "dodeca"],
    ];
    for args in cases {
        let (code, out) = pipe(args, &["verify"]);
        assert!(code == EXIT_OK || code == EXIT_FAIL, "{args:?} exit {code}");
        assert!(value(&out, "is_sg").is_some());
    }
    assert_eq!(pipe(&["gen", "hesse"], &["verify"]).0, EXIT_OK);
    assert_eq!(pipe(&["gen", "eisenstein", "--m", "0"], &["verify"]).0, EXIT_OK);
}

#[test]
fn dualize_twice_is_the_identity() {
    for name in ["hesse", "dodeca"] {
        let original = run(&["gen", name], "").out;
        let once = run(&["dualize"], &original);
        assert_eq!(once.code, EXIT_OK);
        let twice = run(&["dualize"], &once.out);
        // a point configuration has no hyperplane at infinity to carry back
        let kept: String = original
            .lines()
            .filter(|l| !l.starts_with("infinity "))
            .map(|l| format!("{l}\n"))
            .collect();
        assert_eq!(twice.out, kept, "{name}");
    }
}

#[test]
fn dodeca_minsimplex_through_the_binary() {
    let (code, out) = pipe(&["gen", "dodeca"], &["minsimplex", "--alphas", "--base", "0,1,2,3,4"]);
    assert_eq!(code, EXIT_OK);
    assert_eq!(value(&out, "all_equalities"), Some("true"));
    assert_eq!(value(&out, "certificate"), Some("holds"));
}
