//! Command-line surface over the workbench: validation, property checks,
//! theorem profiles, constructions, subdirect decomposition, catalog
//! enumeration, the audit harness, and DOT export.
//!
//! Exit codes: 0 for pass/true, 1 for fail/false, 2 for errors, so shell
//! pipelines can branch on decisions.

use clap::{Parser, Subcommand};
use latkit::audits::{self, SuiteConfig, SUITE_NAMES};
use latkit::bitset::ElemSet;
use latkit::cancellative::{self, AuditOptions, Encoding};
use latkit::congruence::{self, spp_profile};
use latkit::construct::{
    adjoin_top_unit, double_at_one, fep_envelope, fixtures, ideal_completion, prime_cover,
};
use latkit::enumerate::{pointed_catalog, rl_catalog};
use latkit::fileio::{export_dot, parse_algebra, render_algebra, Algebra, AlgebraFile};
use latkit::logic::{holds, parse_sentence, Evaluation, KClass, Signature};
use latkit::order::{ElementProp, PointedLattice, StructuralProp};
use latkit::rl::{self, drastic_crl, FiniteRL};
use std::path::{Path, PathBuf};

#[derive(Parser)]
#[command(
    name = "latkit",
    about = "Finite order-algebra workbench: pointed lattices, congruences, residuated lattices"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Parse and fully validate an algebra file.
    Validate { file: PathBuf },
    /// Decide a named property or an ad-hoc sentence on an algebra.
    Check {
        /// Property name (e.g. `conic`, `semiconic`, `decomposable`) or a
        /// sentence in the DSL (e.g. "x <= y | y <= x").
        property: String,
        file: PathBuf,
    },
    /// Evaluate every component of a theorem profile and report agreement.
    Profile {
        /// One of: spp, semiconic-spp, semiconic, pre-k, prelinear,
        /// preconic, simplicity, theta-iso.
        theorem: String,
        file: PathBuf,
        /// Class for pre-k: integral, dually_integral, conic, linear, all.
        #[arg(long, default_value = "linear")]
        class: String,
    },
    /// Apply a construction and write or print the result.
    Construct {
        /// One of: drastic, double, adjoin, prime-cover, idl, fep,
        /// cancellative.
        kind: String,
        file: PathBuf,
        #[arg(short, long)]
        output: Option<PathBuf>,
        /// Seed elements for `fep` (comma-separated indices or names).
        #[arg(long)]
        set: Option<String>,
    },
    /// Decompose an algebra as a subdirect product of quotients in a class.
    Decompose {
        file: PathBuf,
        #[arg(long)]
        class: String,
    },
    /// Enumerate catalog algebras up to a size, in the file format.
    Enumerate {
        #[arg(long)]
        size: usize,
        /// Enumerate residuated lattices over all bases up to the size.
        #[arg(long)]
        rl: bool,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Run named theorem audits over whole catalogs.
    Audit {
        /// Catalog bound; applies to the suite's natural catalog.
        #[arg(long)]
        size: Option<usize>,
        #[arg(long, default_value = "all")]
        suite: String,
        /// Coordinate bound for the cancellative audit.
        #[arg(long)]
        bound: Option<i64>,
        /// Seed for randomized audit sampling.
        #[arg(long)]
        seed: Option<u64>,
    },
    /// Render the cover relation as a Graphviz digraph.
    ExportDot {
        file: PathBuf,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Print a named fixture in the file format.
    Fixture { name: String },
}

/// Runs the CLI against the given arguments; returns the exit code.
pub fn run_command<I, S>(argv: I) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            // clap prints help/version through the error path with code 0
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return code;
        }
    };
    match dispatch(cli.command) {
        Ok(pass) => {
            if pass {
                0
            } else {
                1
            }
        }
        Err(msg) => {
            eprintln!("error: {msg}");
            2
        }
    }
}

fn load(path: &Path) -> Result<AlgebraFile, String> {
    latkit::fileio::read_algebra(path).map_err(|e| e.to_string())
}

fn want_pointed(file: &AlgebraFile) -> Result<&PointedLattice, String> {
    file.algebra
        .as_pointed()
        .ok_or_else(|| "this command needs a pointed algebra (`kind pointed` or `kind rl`)".into())
}

fn want_rl(file: &AlgebraFile) -> Result<&FiniteRL, String> {
    file.algebra
        .as_rl()
        .ok_or_else(|| "this command needs a residuated algebra (`kind rl`)".into())
}

fn emit(output: &Option<PathBuf>, text: &str) -> Result<(), String> {
    match output {
        Some(path) => std::fs::write(path, text).map_err(|e| e.to_string()),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn witness_string(file: &AlgebraFile, vars: &[String], env: &[usize]) -> String {
    vars.iter()
        .zip(env)
        .map(|(v, &e)| format!("{v}={}", file.elem_name(e)))
        .collect::<Vec<_>>()
        .join(", ")
}

fn dispatch(cmd: Command) -> Result<bool, String> {
    match cmd {
        Command::Validate { file } => {
            let parsed = load(&file)?;
            parsed
                .algebra
                .lattice()
                .validate()
                .map_err(|e| format!("invalid algebra: {e}"))?;
            if let Some(rl) = parsed.algebra.as_rl() {
                if !rl.residuation_laws_hold() {
                    return Err("residuation laws fail".into());
                }
            }
            println!(
                "valid {} with {} elements",
                parsed.algebra.kind_name(),
                parsed.algebra.size()
            );
            Ok(true)
        }
        Command::Check { property, file } => check_command(&property, &file),
        Command::Profile {
            theorem,
            file,
            class,
        } => profile_command(&theorem, &file, &class),
        Command::Construct {
            kind,
            file,
            output,
            set,
        } => construct_command(&kind, &file, &output, set.as_deref()),
        Command::Decompose { file, class } => {
            let parsed = load(&file)?;
            let a = want_pointed(&parsed)?;
            let k = KClass::builtin(&class).ok_or(format!("unknown class `{class}`"))?;
            let quality = |q: &PointedLattice| k.contains(q).unwrap_or(false);
            match congruence::subdirect_into(a, &quality).map_err(|e| e.to_string())? {
                Some(family) => {
                    println!(
                        "subdirect decomposition into {} quotient(s) in `{class}`:",
                        family.len()
                    );
                    for theta in family {
                        let (q, _) = congruence::quotient(a, &theta);
                        println!("blocks {:?} -> quotient of size {}", theta.blocks(), q.size());
                    }
                    Ok(true)
                }
                None => {
                    println!("not a subdirect product of `{class}` quotients");
                    Ok(false)
                }
            }
        }
        Command::Enumerate { size, rl, output } => {
            let mut text = String::new();
            if rl {
                for alg in rl_catalog(size).map_err(|e| e.to_string())?.algebras {
                    text.push_str(&render_algebra(&AlgebraFile::plain(Algebra::Rl(alg))));
                    text.push('\n');
                }
            } else {
                for alg in pointed_catalog(size).map_err(|e| e.to_string())?.algebras {
                    text.push_str(&render_algebra(&AlgebraFile::plain(Algebra::Pointed(alg))));
                    text.push('\n');
                }
            }
            emit(&output, &text)?;
            Ok(true)
        }
        Command::Audit {
            size,
            suite,
            bound,
            seed,
        } => {
            let mut config = SuiteConfig::default();
            if let Some(n) = size {
                config.pointed_max = n.min(8);
                config.cancellative_lattice_max = n.min(6);
                config.rl_base_max = n.min(5);
                config.count_max = n.min(8);
            }
            if let Some(b) = bound {
                config.cancellative.bound = b;
            }
            if let Some(s) = seed {
                config.cancellative.seed = s;
            }
            let names: Vec<&str> = if suite == "all" {
                SUITE_NAMES.to_vec()
            } else {
                vec![suite.as_str()]
            };
            let mut all_ok = true;
            for name in names {
                let report = audits::run_suite(name, &config)?;
                println!("{}", report.summary());
                all_ok &= report.ok();
            }
            Ok(all_ok)
        }
        Command::ExportDot { file, output } => {
            let parsed = load(&file)?;
            emit(&output, &export_dot(&parsed))?;
            Ok(true)
        }
        Command::Fixture { name } => {
            let a = fixtures::by_name(&name).map_err(|e| e.to_string())?;
            print!(
                "{}",
                render_algebra(&AlgebraFile::plain(Algebra::Pointed(a)))
            );
            Ok(true)
        }
    }
}

fn check_command(property: &str, path: &Path) -> Result<bool, String> {
    let parsed = load(path)?;
    // named structural and congruence-theoretic properties first
    let named: Option<Result<bool, String>> = match property {
        "valid" => Some(Ok(true)), // loading validated already
        "integral" | "dually-integral" | "conic" | "linear" | "distributive" | "prime-pointed"
        | "irreducible-pointed" => {
            let a = want_pointed(&parsed)?;
            let prop = match property {
                "integral" => StructuralProp::Integral,
                "dually-integral" => StructuralProp::DuallyIntegral,
                "conic" => StructuralProp::Conic,
                "linear" => StructuralProp::Linear,
                "distributive" => StructuralProp::Distributive,
                "prime-pointed" => StructuralProp::PrimePointed,
                _ => StructuralProp::IrreduciblePointed,
            };
            Some(Ok(a.structural_class(prop)))
        }
        "join-prime-unit" => {
            let a = want_pointed(&parsed)?;
            Some(Ok(a.element_class(a.unit(), ElementProp::JoinPrime)))
        }
        "semiconic" => {
            let a = want_pointed(&parsed)?;
            Some(congruence::is_semiconic(a).map_err(|e| e.to_string()))
        }
        "semi-prime-pointed" => {
            let a = want_pointed(&parsed)?;
            Some(congruence::is_semi_prime_pointed(a).map_err(|e| e.to_string()))
        }
        "semi-irreducible-pointed" => {
            let a = want_pointed(&parsed)?;
            Some(congruence::is_semi_irreducible_pointed(a).map_err(|e| e.to_string()))
        }
        "up-distributive" => Some(Ok(congruence::up_distributive_at_1(want_pointed(&parsed)?))),
        "join-semidistributive" => Some(Ok(congruence::join_semidistributive_at_1(
            want_pointed(&parsed)?,
        ))),
        "decomposable" => Some(
            congruence::decomposable_at_1(want_pointed(&parsed)?).map_err(|e| e.to_string()),
        ),
        "alpha2" => {
            Some(congruence::alpha_n_holds(want_pointed(&parsed)?, 2).map_err(|e| e.to_string()))
        }
        "commutative" => Some(Ok(want_rl(&parsed)?.is_commutative())),
        "simple" => {
            let p = rl::simplicity_profile(want_rl(&parsed)?).map_err(|e| e.to_string())?;
            Some(Ok(p.simple))
        }
        "prelinear" => {
            let p = rl::prelinear_profile(want_rl(&parsed)?).map_err(|e| e.to_string())?;
            Some(Ok(p.translated_equation))
        }
        "preconic" => {
            let p = rl::preconic_profile(want_rl(&parsed)?).map_err(|e| e.to_string())?;
            Some(Ok(p.translated_equation))
        }
        _ => None,
    };
    if let Some(result) = named {
        let value = result?;
        println!("{property}: {value}");
        return Ok(value);
    }
    // otherwise treat the argument as a sentence
    let signature = if parsed.algebra.as_rl().is_some() {
        Signature::Rl
    } else {
        Signature::Lattice
    };
    let sentence =
        parse_sentence(property, signature).map_err(|e| format!("not a property name and {e}"))?;
    let outcome = match &parsed.algebra {
        Algebra::Rl(rl) => holds(rl, &sentence),
        Algebra::Pointed(p) => holds(p, &sentence),
        Algebra::Lattice(_) => {
            return Err("sentences need a pointed algebra (`kind pointed` or `kind rl`)".into())
        }
    }
    .map_err(|e| e.to_string())?;
    match outcome {
        Evaluation::Holds => {
            println!("holds: {sentence}");
            Ok(true)
        }
        Evaluation::Fails(env) => {
            println!(
                "fails: {sentence} at {}",
                witness_string(&parsed, &sentence.vars, &env)
            );
            Ok(false)
        }
    }
}

fn profile_command(theorem: &str, path: &Path, class: &str) -> Result<bool, String> {
    let parsed = load(path)?;
    let (lines, agree): (Vec<(String, bool)>, bool) = match theorem {
        "spp" => {
            let p = spp_profile(want_pointed(&parsed)?).map_err(|e| e.to_string())?;
            (
                vec![
                    ("subdirect-into-prime-pointed".into(), p.subdirect),
                    ("up-distributive-and-decomposable".into(), p.updistributive_decomposable),
                    ("meet-distribution-and-decomposable".into(), p.alpha_decomposable),
                    ("kernel-congruences-meet-trivially".into(), p.kernel_congruences),
                    ("filter-families".into(), p.filter_families),
                ],
                p.agree(),
            )
        }
        "semiconic-spp" => {
            let p =
                congruence::semiconic_spp_profile(want_pointed(&parsed)?).map_err(|e| e.to_string())?;
            (
                vec![
                    ("semiconic-and-spp".into(), p.semiconic_and_spp),
                    ("subdirect-conic-prime".into(), p.subdirect_conic_prime),
                    (
                        "equations-updistributive-decomposable".into(),
                        p.equations_updistributive_decomposable,
                    ),
                    ("equations-alpha-decomposable".into(), p.equations_alpha_decomposable),
                    ("conic-kernel-congruences".into(), p.conic_kernel_congruences),
                    ("finite-form".into(), p.finite_form),
                ],
                p.agree(),
            )
        }
        "semiconic" => {
            let p = congruence::semiconic_profile(want_pointed(&parsed)?).map_err(|e| e.to_string())?;
            (
                vec![
                    ("subdirect-into-conic".into(), p.subdirect),
                    ("cone-congruences".into(), p.cone_congruences),
                    ("equations".into(), p.equations),
                    ("quasi-equation".into(), p.quasi_equation),
                    ("no-forbidden-pentagon".into(), p.no_forbidden_pentagon),
                ],
                p.agree(),
            )
        }
        "pre-k" => {
            let k = KClass::builtin(class).ok_or(format!("unknown class `{class}`"))?;
            let p = rl::pre_k_profile(want_rl(&parsed)?, &k).map_err(|e| e.to_string())?;
            (
                vec![
                    ("translated-equations".into(), p.translated_equations),
                    ("meet-irreducibles-in-class".into(), p.meet_irreducibles_are_k),
                    ("unit-filter-intersection".into(), p.unit_filter_intersection),
                    ("every-filter-intersection".into(), p.every_filter_intersection),
                ],
                p.agree(),
            )
        }
        "prelinear" => {
            let p = rl::prelinear_profile(want_rl(&parsed)?).map_err(|e| e.to_string())?;
            (
                vec![
                    ("translated-equation".into(), p.translated_equation),
                    (
                        "unit-meet-distribution-and-divisions".into(),
                        p.unit_meet_distribution_and_division_join,
                    ),
                    ("distributive-and-divisions".into(), p.distributive_and_division_join),
                ],
                p.agree(),
            )
        }
        "preconic" => {
            let p = rl::preconic_profile(want_rl(&parsed)?).map_err(|e| e.to_string())?;
            (
                vec![
                    ("translated-equation".into(), p.translated_equation),
                    (
                        "unit-meet-distribution-and-divisions".into(),
                        p.unit_meet_distribution_and_division_join,
                    ),
                    ("semiconic-reduct-and-divisions".into(), p.semiconic_reduct_and_division_join),
                ],
                p.agree(),
            )
        }
        "simplicity" => {
            let p = rl::simplicity_profile(want_rl(&parsed)?).map_err(|e| e.to_string())?;
            (
                vec![
                    ("simple".into(), p.simple),
                    ("strongly-simple".into(), p.strongly_simple),
                    ("fsi".into(), p.fsi),
                    ("strongly-fsi".into(), p.strongly_fsi),
                    ("si".into(), p.si),
                    ("strongly-si".into(), p.strongly_si),
                    ("semisimple".into(), p.semisimple),
                    ("strongly-semisimple".into(), p.strongly_semisimple),
                ],
                true, // hierarchy flags need not coincide
            )
        }
        "theta-iso" => {
            let report = rl::verify_theta_iso(want_rl(&parsed)?).map_err(|e| e.to_string())?;
            println!(
                "filters={} normal={} left={} right={} two-sided={}",
                report.filters,
                report.normal_filters,
                report.left_congruences,
                report.right_congruences,
                report.two_sided
            );
            for issue in &report.issues {
                println!("issue: {issue}");
            }
            return Ok(report.ok());
        }
        other => return Err(format!("unknown theorem profile `{other}`")),
    };
    for (name, value) in &lines {
        println!("{name}: {value}");
    }
    println!("agree: {agree}");
    Ok(agree)
}

fn construct_command(
    kind: &str,
    path: &Path,
    output: &Option<PathBuf>,
    set: Option<&str>,
) -> Result<bool, String> {
    let parsed = load(path)?;
    let result: AlgebraFile = match kind {
        "drastic" => {
            let a = want_pointed(&parsed)?;
            let rl = drastic_crl(a).map_err(|e| e.to_string())?;
            AlgebraFile {
                algebra: Algebra::Rl(rl),
                names: parsed.names.clone(),
            }
        }
        "double" => {
            let a = want_pointed(&parsed)?;
            let (d, _) = double_at_one(a);
            AlgebraFile::plain(Algebra::Pointed(d))
        }
        "adjoin" => {
            let l = parsed.algebra.lattice();
            AlgebraFile::plain(Algebra::Pointed(adjoin_top_unit(l)))
        }
        "prime-cover" => {
            let a = want_pointed(&parsed)?;
            let (c, _) = prime_cover(a);
            AlgebraFile::plain(Algebra::Pointed(c))
        }
        "idl" => {
            let a = want_pointed(&parsed)?;
            let (idl, _) = ideal_completion(a).map_err(|e| e.to_string())?;
            AlgebraFile::plain(Algebra::Pointed(idl))
        }
        "fep" => {
            let a = want_pointed(&parsed)?;
            let spec = set.ok_or("`fep` needs --set with comma-separated elements")?;
            let mut seed = ElemSet::empty(a.size());
            for tok in spec.split(',').map(str::trim).filter(|t| !t.is_empty()) {
                let e = match tok.parse::<usize>() {
                    Ok(i) if i < a.size() => i,
                    _ => parsed
                        .names
                        .as_ref()
                        .and_then(|ns| ns.iter().position(|n| n == tok))
                        .ok_or(format!("unknown element `{tok}`"))?,
                };
                seed.insert(e);
            }
            let (env, _) = fep_envelope(a, &seed).map_err(|e| e.to_string())?;
            AlgebraFile::plain(Algebra::Pointed(env))
        }
        "cancellative" => {
            let l = parsed.algebra.lattice();
            let enc = Encoding::build(l).map_err(|e| e.to_string())?;
            let issues = cancellative::verify_embedding(&enc);
            let report = cancellative::property_audit(&enc, AuditOptions::default());
            println!(
                "coordinates: {:?}; sample {}; triples {}; max witness exponent {}",
                enc.coords(),
                report.sample_size,
                report.triples_checked,
                report.max_simplicity_exponent
            );
            if !issues.is_empty() || !report.ok() {
                for msg in issues.iter().chain(&report.violations) {
                    println!("violation: {msg}");
                }
                return Ok(false);
            }
            println!("embedding verified; no violations");
            return Ok(true);
        }
        other => return Err(format!("unknown construction `{other}`")),
    };
    let text = render_algebra(&result);
    emit(output, &text)?;
    Ok(true)
}

/// Check helper for tests: does the CLI agree with a direct library call?
pub fn cli_matches_library(property: &str, file_text: &str) -> Result<bool, String> {
    let parsed = parse_algebra(file_text).map_err(|e| e.to_string())?;
    let a = parsed.algebra.as_pointed().ok_or("needs pointed")?;
    match property {
        "conic" => Ok(a.is_conic()),
        "semiconic" => congruence::is_semiconic(a).map_err(|e| e.to_string()),
        _ => Err("unsupported".into()),
    }
}

