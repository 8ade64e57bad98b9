//! Acceptance gate: one test per top-level criterion, each printing a
//! single PASS/FAIL line (visible under `--nocapture` or on failure).
//!
//! Law suites run through the harness API at the stated sample counts;
//! the determinism criterion drives the installed `cubeops` binary.

use std::process::Command;
use std::time::{Duration, Instant};

use cubeops_harness::{replay, run_suites, Mode, RunReport, SuiteConfig};

fn conclude(name: &str, ok: bool) {
    println!("{name}: {}", if ok { "PASS" } else { "FAIL" });
    assert!(ok, "{name}");
}

fn config(n: usize, samples: u64) -> SuiteConfig {
    SuiteConfig { n, samples, ..SuiteConfig::default() }
}

fn run(cfg: &SuiteConfig, suites: &[&str]) -> (RunReport, Duration) {
    let start = Instant::now();
    let outcome = run_suites(cfg, suites, Mode::Parallel).expect("known suites");
    (outcome.report, start.elapsed())
}

fn failures(report: &RunReport) -> String {
    report
        .counterexamples()
        .iter()
        .map(|c| format!("{}/{} case {}: {}", c.suite, c.law, c.case_index, c.message))
        .collect::<Vec<_>>()
        .join("\n")
}

#[test]
fn operad_laws_exact_in_dimensions_one_two_three() {
    let mut ok = true;
    for n in 1..=3 {
        let (report, elapsed) = run(&config(n, 200), &["operad.laws"]);
        if !report.pass {
            eprintln!("{}", failures(&report));
        }
        ok &= report.pass && elapsed < Duration::from_secs(10);
    }
    conclude("operad laws: associativity/unit/equivariance/simplicial, n in {1,2,3}, 200 samples, exact, <10s per dimension", ok);
}

#[test]
fn comonad_axioms_pointwise_per_constructor() {
    let (report, elapsed) = run(&config(1, 200), &["comonad.axioms"]);
    if !report.pass {
        eprintln!("{}", failures(&report));
    }
    conclude(
        "comonad axioms: coassociativity and both counit identities, 200 triples per constructor, exact, <10s",
        report.pass && elapsed < Duration::from_secs(10),
    );
}

#[test]
fn property_d_holds_for_constructors_and_catches_the_broken_fixture() {
    let cfg = config(1, 500);
    let (report, _) = run(&cfg, &["comonad.property_d"]);
    if !report.pass {
        eprintln!("{}", failures(&report));
    }

    let fixture_cfg = config(1, 5);
    let (fixture, _) = run(&fixture_cfg, &["fixtures.property_d_violation"]);
    let counterexamples = fixture.counterexamples();
    let replayable = counterexamples
        .first()
        .map(|cex| replay(&fixture_cfg, cex) == Err(cex.message.clone()))
        .unwrap_or(false);

    conclude(
        "property (D): all constructors on 500 disjoint-interior pairs; broken fixture fails with a replayable counterexample",
        report.pass && !fixture.pass && replayable,
    );
}

#[test]
fn coalgebra_definitions_are_equivalent() {
    let (report, _) = run(&config(1, 200), &["coalgebra.equivalence"]);
    if !report.pass {
        eprintln!("{}", failures(&report));
    }
    conclude(
        "coalgebra equivalence: coend and comonadic round trips are pointwise identities, 200 samples",
        report.pass,
    );
}

#[test]
fn suspension_coalgebra_is_operadic_equivariant_natural() {
    let (report, _) = run(&config(1, 200), &["coalgebra.suspension"]);
    if !report.pass {
        eprintln!("{}", failures(&report));
    }
    conclude(
        "suspension coalgebra: operad-morphism residuals zero, equivariance and naturality exact, 200 samples",
        report.pass,
    );
}

#[test]
fn approximation_is_a_retract_with_exact_homotopy_endpoints() {
    let (report, _) = run(&config(1, 500), &["approximation.retract"]);
    if !report.pass {
        eprintln!("{}", failures(&report));
    }
    conclude(
        "approximation retract: psi after alpha is the identity on 500 samples; H endpoints exact; H passes property (D) at sampled times",
        report.pass,
    );
}

#[test]
fn alpha_is_a_morphism_of_comonads() {
    let (report, _) = run(&config(1, 200), &["approximation.morphism"]);
    if !report.pass {
        eprintln!("{}", failures(&report));
    }
    conclude(
        "morphism of comonads: counit and comultiplication identities for alpha, exact, 200 samples",
        report.pass,
    );
}

#[test]
fn cubical_supports_are_exact_and_oracle_bracketed() {
    let (report, _) = run(&config(1, 200), &["supports"]);
    if !report.pass {
        eprintln!("{}", failures(&report));
    }
    conclude(
        "cubical supports: peaked singletons, suspension heights, threshold intervals exact; oracle brackets and is tight on thresholds",
        report.pass,
    );
}

#[test]
fn reduced_operad_forces_trivial_comonad_elements() {
    let (report, _) = run(&config(1, 100), &["reduced.triviality"]);
    if !report.pass {
        eprintln!("{}", failures(&report));
    }
    conclude(
        "reduced-operad triviality: every non-base candidate rejected over the one-point operad, 100 candidates",
        report.pass,
    );
}

#[test]
fn recognition_retracts_fix_sphere_and_suspension_instances() {
    let (report, _) = run(&config(1, 200), &["recognition.sphere", "recognition.suspension"]);
    if !report.pass {
        eprintln!("{}", failures(&report));
    }
    conclude(
        "recognition: retraction fixes S(X), homotopy endpoints exact, induced structure counit and pushforward laws hold, P_n membership accepts generators and rejects the twisted fixture, 200 points each",
        report.pass,
    );
}

#[test]
fn may_action_matches_concatenation_and_algebra_laws() {
    let (report, _) = run(&config(1, 100), &["may.action"]);
    if !report.pass {
        eprintln!("{}", failures(&report));
    }
    conclude(
        "May action: halves configuration equals loop concatenation; operad-algebra laws pass, 100 samples",
        report.pass,
    );
}

#[test]
fn reports_are_deterministic_and_fast() {
    let run_check = || {
        let start = Instant::now();
        let output = Command::new(env!("CARGO_BIN_EXE_cubeops"))
            .args(["check", "--n", "1", "--seed", "42", "--samples", "100"])
            .output()
            .expect("cubeops binary runs");
        (output, start.elapsed())
    };
    let (first, elapsed) = run_check();
    let (second, _) = run_check();
    conclude(
        "determinism: default check run is byte-identical across runs and completes in <60s",
        first.status.success()
            && second.status.success()
            && first.stdout == second.stdout
            && !first.stdout.is_empty()
            && elapsed < Duration::from_secs(60),
    );
}
