//! The acceptance suite: every structural theorem audit the crate exists
//! for, run over the full catalogs at the documented sizes, one pass/fail
//! line per criterion. Run with `--nocapture` to see the lines:
//!
//! ```text
//! cargo test --release -p latkit --test acceptance -- --nocapture
//! ```

mod common;

use common::{LATTICE_CORPUS, RL_CORPUS};
use latkit::audits::{run_suite, SuiteConfig};
use latkit::cancellative::AuditOptions;
use latkit::congruence::{decomposable_at_1, spp_profile, up_distributive_at_1};
use latkit::construct::fixtures;
use latkit::enumerate::{enumerate_lattices, oracle_lattice_count, pointed_catalog};
use latkit::logic::{parse_sentence, Signature};
use latkit::rl::find_splitting_pair;

fn criterion(n: usize, name: &str, ok: bool, detail: String) {
    println!(
        "criterion {n:>2} [{}] {name}: {detail}",
        if ok { "PASS" } else { "FAIL" }
    );
    assert!(ok, "criterion {n} ({name}) failed: {detail}");
}

fn suite_line(n: usize, display: &str, suite: &str, config: &SuiteConfig) {
    let report = run_suite(suite, config).expect("suite exists");
    criterion(
        n,
        display,
        report.ok(),
        format!(
            "{} algebras checked, {} disagreements{}",
            report.checked,
            report.failures.len(),
            if report.ok() {
                String::new()
            } else {
                format!("\n{}", report.failures.join("\n"))
            }
        ),
    );
}

fn config() -> SuiteConfig {
    SuiteConfig::default()
}

#[test]
fn criterion_01_fact_semiconic() {
    suite_line(
        1,
        "semiconic characterizations agree on all pointed lattices of size <= 6",
        "fact_semiconic",
        &config(),
    );
}

#[test]
fn criterion_02_theorem_semi_prime_pointed() {
    // named witnesses first
    let pentagon = fixtures::n5_unital();
    let p = spp_profile(&pentagon).unwrap();
    assert!(up_distributive_at_1(&pentagon));
    assert!(!decomposable_at_1(&pentagon).unwrap());
    assert!(p.components().iter().all(|&c| !c), "pentagon must be all-false");

    let m3 = fixtures::m3_unital();
    assert!(!up_distributive_at_1(&m3));
    assert!(spp_profile(&m3).unwrap().components().iter().all(|&c| !c));

    let square = fixtures::boolean_square_unital();
    assert!(spp_profile(&square).unwrap().components().iter().all(|&c| c));

    suite_line(
        2,
        "semi-prime-pointed characterizations agree on all pointed lattices of size <= 6",
        "theorem_spp",
        &config(),
    );
}

#[test]
fn criterion_03_theorem_semiconic_semi_prime_pointed() {
    suite_line(
        3,
        "semiconic semi-prime-pointed characterizations agree on the same catalog",
        "theorem_semiconic_spp",
        &config(),
    );
}

#[test]
fn criterion_04_kernel_congruences() {
    suite_line(
        4,
        "kernel congruences have the right kernel and are minimal (plain and conic)",
        "lemma_theta",
        &config(),
    );
}

#[test]
fn criterion_05_drastic_construction() {
    // non-vacuity: a splitting pair exists exactly for the prime-pointed
    // algebras whose unit is not the bottom
    let catalog = pointed_catalog(6).unwrap();
    let mut constructed = 0;
    for a in &catalog.algebras {
        let expect = a.is_prime_pointed() && a.size() > 1 && a.unit() != a.bottom();
        assert_eq!(
            find_splitting_pair(a).is_some(),
            expect,
            "splitting pair presence wrong on {a:?}"
        );
        if expect {
            constructed += 1;
        }
    }
    assert!(constructed > 20, "the catalog must exercise the construction");
    suite_line(
        5,
        "drastic expansions validate, commute, are simple, and satisfy the laws",
        "drastic",
        &config(),
    );
}

#[test]
fn criterion_06_filter_congruence_isomorphisms() {
    suite_line(
        6,
        "filters and one-sided congruences are isomorphic lattices on all catalog algebras",
        "theta_iso",
        &config(),
    );
}

#[test]
fn criterion_07_generated_filter_laws() {
    suite_line(
        7,
        "generated-filter meet and join laws hold for all pairs in all catalog algebras",
        "fg_lemmas",
        &config(),
    );
}

#[test]
fn criterion_08_reduct_soundness() {
    suite_line(
        8,
        "reducts are semi-irreducible-pointed; f.s.i. commutative algebras have join irreducible units",
        "reduct_soundness",
        &config(),
    );
}

#[test]
fn criterion_09_translated_axiom_profiles() {
    suite_line(
        9,
        "translated-axiom profiles agree for integral/conic/linear; prelinearity implies distributivity",
        "pre_k",
        &config(),
    );
    suite_line(
        9,
        "prelinearity and preconicity profiles agree; derived division law holds",
        "prelinear",
        &config(),
    );
}

#[test]
fn criterion_10_cancellative_construction() {
    let cfg = SuiteConfig {
        cancellative: AuditOptions {
            bound: 8,
            random_triples: 10_000,
            ..Default::default()
        },
        ..config()
    };
    suite_line(
        10,
        "every lattice of size <= 5 embeds (with a unit on top) into the vector algebra; zero violations",
        "cancellative",
        &cfg,
    );
}

#[test]
fn criterion_11_enumeration_counts() {
    let expected = [1usize, 1, 1, 2, 5, 15, 53];
    let mut ok = true;
    let mut details = Vec::new();
    for (i, &want) in expected.iter().enumerate() {
        let n = i + 1;
        let generated = enumerate_lattices(n).unwrap().len();
        let oracle = oracle_lattice_count(n);
        if generated != want || oracle != want {
            ok = false;
        }
        details.push(format!("{n}:{generated}/{oracle}"));
    }
    criterion(
        11,
        "lattice counts 1,1,1,2,5,15,53 match the independent oracle",
        ok,
        format!("size:generated/oracle = {}", details.join(" ")),
    );
}

#[test]
fn criterion_12_congruence_generation_oracle() {
    suite_line(
        12,
        "generated congruences equal the intersection of all containing congruences",
        "congruence_oracle",
        &config(),
    );
}

#[test]
fn criterion_13_dsl_round_trip() {
    let mut checked = 0;
    let mut ok = true;
    for (texts, sig) in [
        (LATTICE_CORPUS, Signature::Lattice),
        (RL_CORPUS, Signature::Rl),
    ] {
        for text in texts {
            let s = parse_sentence(text, sig).expect(text);
            let printed = s.to_string();
            let back = parse_sentence(&printed, sig).expect("printed form parses");
            if back != s || back.to_string() != printed {
                ok = false;
            }
            checked += 1;
        }
    }
    criterion(
        13,
        "parse/print identity over the sentence corpus",
        ok && checked >= 30,
        format!("{checked} sentences"),
    );
}
