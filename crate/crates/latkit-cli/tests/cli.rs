//! End-to-end command tests: exit codes, file round-trips, and agreement
//! between command decisions and direct library calls.

use latkit::congruence;
use latkit::construct::fixtures;
use latkit::fileio::{render_algebra, Algebra, AlgebraFile};
use latkit_cli::run_command;
use std::path::PathBuf;

fn run(args: &[&str]) -> i32 {
    let mut argv = vec!["latkit"];
    argv.extend_from_slice(args);
    run_command(argv)
}

fn write_fixture(dir: &tempfile::TempDir, name: &str, alg: Algebra) -> PathBuf {
    let path = dir.path().join(name);
    std::fs::write(&path, render_algebra(&AlgebraFile::plain(alg))).unwrap();
    path
}

#[test]
fn validate_and_exit_codes() {
    let dir = tempfile::tempdir().unwrap();
    let n5 = write_fixture(&dir, "n5.lat", Algebra::Pointed(fixtures::n5_left_pointed()));
    assert_eq!(run(&["validate", n5.to_str().unwrap()]), 0);

    let bad = dir.path().join("bad.lat");
    std::fs::write(&bad, "kind pointed\nsize 4\ncovers: 0 2, 0 3, 1 2, 1 3\none 0\n").unwrap();
    assert_eq!(run(&["validate", bad.to_str().unwrap()]), 2);
    assert_eq!(run(&["validate", "/nonexistent/x.lat"]), 2);
}

#[test]
fn check_properties_match_library() {
    let dir = tempfile::tempdir().unwrap();
    let n5 = write_fixture(&dir, "n5.lat", Algebra::Pointed(fixtures::n5_left_pointed()));
    let path = n5.to_str().unwrap();

    // the pointed pentagon is the forbidden configuration
    assert_eq!(run(&["check", "semiconic", path]), 1);
    assert_eq!(
        congruence::is_semiconic(&fixtures::n5_left_pointed()).unwrap(),
        false
    );
    assert_eq!(run(&["check", "prime-pointed", path]), 0);
    assert!(fixtures::n5_left_pointed().is_prime_pointed());
    assert_eq!(run(&["check", "up-distributive", path]), 0);

    // ad-hoc sentences
    assert_eq!(run(&["check", "x <= y | y <= x", path]), 1);
    assert_eq!(run(&["check", "x ^ y = y ^ x", path]), 0);
    assert_eq!(run(&["check", "x <=", path]), 2); // syntax error
}

#[test]
fn profiles_report_agreement() {
    let dir = tempfile::tempdir().unwrap();
    let sq = write_fixture(
        &dir,
        "square.lat",
        Algebra::Pointed(fixtures::boolean_square_unital()),
    );
    assert_eq!(run(&["profile", "spp", sq.to_str().unwrap()]), 0);
    assert_eq!(run(&["profile", "semiconic", sq.to_str().unwrap()]), 0);
    assert_eq!(run(&["profile", "unknown", sq.to_str().unwrap()]), 2);
}

#[test]
fn construct_drastic_output_validates() {
    let dir = tempfile::tempdir().unwrap();
    let m3p1 = write_fixture(&dir, "m3p1.lat", Algebra::Pointed(fixtures::m3_plus_one()));
    let out = dir.path().join("m3p1.rl");
    assert_eq!(
        run(&[
            "construct",
            "drastic",
            m3p1.to_str().unwrap(),
            "-o",
            out.to_str().unwrap()
        ]),
        0
    );
    assert_eq!(run(&["validate", out.to_str().unwrap()]), 0);
    assert_eq!(run(&["check", "commutative", out.to_str().unwrap()]), 0);
    assert_eq!(run(&["check", "simple", out.to_str().unwrap()]), 0);
    // the diamond reduct is not prelinear
    assert_eq!(run(&["check", "prelinear", out.to_str().unwrap()]), 1);

    // no splitting pair over the square
    let sq = write_fixture(
        &dir,
        "square.lat",
        Algebra::Pointed(fixtures::boolean_square_unital()),
    );
    assert_eq!(run(&["construct", "drastic", sq.to_str().unwrap()]), 2);
}

#[test]
fn construct_and_decompose_round() {
    let dir = tempfile::tempdir().unwrap();
    let two = write_fixture(&dir, "two.lat", Algebra::Pointed(fixtures::chain(2, 1)));
    let out = dir.path().join("three.lat");
    assert_eq!(
        run(&[
            "construct",
            "double",
            two.to_str().unwrap(),
            "-o",
            out.to_str().unwrap()
        ]),
        0
    );
    assert_eq!(run(&["validate", out.to_str().unwrap()]), 0);

    let sq = write_fixture(
        &dir,
        "square.lat",
        Algebra::Pointed(fixtures::boolean_square_unital()),
    );
    assert_eq!(run(&["decompose", sq.to_str().unwrap(), "--class", "linear"]), 0);
    let n5 = write_fixture(&dir, "n5.lat", Algebra::Pointed(fixtures::n5_unital()));
    assert_eq!(run(&["decompose", n5.to_str().unwrap(), "--class", "linear"]), 1);
}

#[test]
fn fep_needs_seed_and_works_with_names() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("m3.lat");
    std::fs::write(
        &path,
        "kind pointed\nsize 5\nnames: bot p q r top\n\
         covers: bot p, bot q, bot r, p top, q top, r top\none top\n",
    )
    .unwrap();
    assert_eq!(run(&["construct", "fep", path.to_str().unwrap()]), 2);
    let out = dir.path().join("env.lat");
    assert_eq!(
        run(&[
            "construct",
            "fep",
            path.to_str().unwrap(),
            "--set",
            "p,q",
            "-o",
            out.to_str().unwrap()
        ]),
        0
    );
    let text = std::fs::read_to_string(&out).unwrap();
    assert!(text.contains("size 4"), "closure of two atoms is the square: {text}");
}

#[test]
fn cancellative_report_passes() {
    let dir = tempfile::tempdir().unwrap();
    let n5 = write_fixture(&dir, "n5.lat", Algebra::Pointed(fixtures::n5_unital()));
    assert_eq!(run(&["construct", "cancellative", n5.to_str().unwrap()]), 0);
}

#[test]
fn enumerate_and_export() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("catalog.txt");
    assert_eq!(
        run(&["enumerate", "--size", "3", "-o", out.to_str().unwrap()]),
        0
    );
    let text = std::fs::read_to_string(&out).unwrap();
    assert_eq!(text.matches("kind pointed").count(), 6); // sizes 1..3

    let dot = dir.path().join("n5.dot");
    let n5 = write_fixture(&dir, "n5.lat", Algebra::Pointed(fixtures::n5_left_pointed()));
    assert_eq!(
        run(&[
            "export-dot",
            n5.to_str().unwrap(),
            "-o",
            dot.to_str().unwrap()
        ]),
        0
    );
    let text = std::fs::read_to_string(&dot).unwrap();
    assert!(text.starts_with("digraph"));
    assert_eq!(text.matches("->").count(), 5);
}

#[test]
fn audit_suite_small() {
    assert_eq!(
        run(&["audit", "--size", "3", "--suite", "fact_semiconic"]),
        0
    );
    assert_eq!(run(&["audit", "--size", "3", "--suite", "nonsense"]), 2);
}

#[test]
fn fixtures_print() {
    assert_eq!(run(&["fixture", "m3_plus_one"]), 0);
    assert_eq!(run(&["fixture", "chain(4,2)"]), 0);
    assert_eq!(run(&["fixture", "dodecahedron"]), 2);
}
