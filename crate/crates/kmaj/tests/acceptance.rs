//! Acceptance suite: one test per criterion, each printing a PASS/FAIL line.
//!
//! Every check is exact (integer and set equality); the sizes are pinned in
//! the calls below.

use std::time::Instant;

use kmaj::verify::{self, SuiteReport};

fn conclude(criterion: &str, report: &SuiteReport, started: Instant) {
    let verdict = if report.pass { "PASS" } else { "FAIL" };
    println!(
        "acceptance {criterion}: {verdict} ({} cases, {} failures, {:.2?})",
        report.checked,
        report.failure_count,
        started.elapsed()
    );
    for w in &report.witnesses {
        println!("  witness: {w}");
    }
    if !report.pass {
        for f in report.failures.iter().take(5) {
            println!("  counterexample [{}] {} :: {}", f.check, f.input, f.detail);
        }
    }
    assert!(report.pass, "criterion failed: {criterion}");
}

#[test]
fn criterion_1_worked_example_fidelity() {
    let started = Instant::now();
    let report = verify::worked_examples();
    conclude("1 worked-example fidelity", &report, started);
}

#[test]
fn criterion_2_mahonian_distributions_on_words() {
    // Every multiset of size <= 7, with and without spacer masks up to
    // total length 7; maj_k distributions for k = 1..=7 must coincide and
    // the spacer-free maj distribution must equal the q-multinomial.
    //
    // The spacer-free half is exact and verified; the spacered half is
    // recorded as FAIL because interior spacers genuinely separate the
    // distributions (minimal case: letters {1,2} with a spacer between
    // them give maj constant 0 but maj_2 distributed as 1 + q, and no
    // bijection on that two-word set can reconcile distinct distributions).
    let started = Instant::now();
    let report = verify::mahonian(7);
    let spacer_free_failures = report
        .failures
        .iter()
        .filter(|f| f.input.contains("spacers []"))
        .count();
    println!(
        "  spacer-free cases: {}; spacered cases recorded {} failures",
        if spacer_free_failures == 0 {
            "all exact"
        } else {
            "FAILING"
        },
        report.failure_count
    );
    conclude("2 Mahonian distributions on words", &report, started);
}

#[test]
fn criterion_3_transfer_bijection_properties() {
    // For all permutations of length <= 7 and steps k = 2..=7: statistic
    // transfer, two-sided inversion, fixed tail, end-comparison transfer,
    // inverse descent preservation.
    let started = Instant::now();
    let report = verify::phi_props(7);
    conclude("3 transfer bijection properties", &report, started);
}

#[test]
fn criterion_4_divergence_from_the_classical_transfer() {
    // The composed transfer must carry maj to inv AND differ from the
    // classical second fundamental transformation on some permutation of
    // length <= 5. The transfer half holds; the divergence half is
    // recorded as FAIL because the two maps coincide on every permutation
    // of length <= 5 and first separate at length 6 (e.g. at 1 6 3 2 5 4,
    // 16 of the 720 length-6 permutations differ).
    let started = Instant::now();
    let report = verify::foata_divergence(5);
    let at_six = verify::foata_divergence(6);
    assert!(at_six.pass, "divergence must exist at length 6");
    for w in &at_six.witnesses {
        println!("  (length-6 witness: {w})");
    }
    conclude("4 divergence from the classical transfer", &report, started);
}

#[test]
fn criterion_5_mahonian_distributions_on_tableaux() {
    // For every shape of size <= 8: maj, maj_2, maj_3 equidistributed over
    // the standard tableaux, and the level-2/level-3 transfers verified as
    // inverse-pair bijections carrying the statistic.
    let started = Instant::now();
    let report = verify::mahonian_syt(8);
    conclude("5 Mahonian distributions on tableaux", &report, started);
}

#[test]
fn criterion_6_level_4_breakdown_on_shape_222() {
    let started = Instant::now();
    let report = verify::k4_breakdown();
    conclude("6 level-4 breakdown on shape (2,2,2)", &report, started);
}

#[test]
fn criterion_7_involution_class_suite() {
    // The exact small classes, involutivity and statistic constancy
    // (n <= 7), commutation of the level-2 transfer with the involutions
    // (n <= 7), the top-level class characterization (n <= 7), the
    // Schur-shape shadow of the level-1 classes (n <= 6), and the
    // candidate-family checker (level-2 passes everything; level-3 breaks
    // class compatibility at n = 6).
    let started = Instant::now();
    let all = vec![
        verify::equivalence_basics(7),
        verify::phi2_commute(7),
        verify::nclass(7),
        verify::schur_shape(6),
        verify::theta_check(7),
    ];
    let mut pass = true;
    for report in &all {
        let verdict = if report.pass { "PASS" } else { "FAIL" };
        println!(
            "  section [{}]: {verdict} ({} cases, {} failures)",
            report.suite, report.checked, report.failure_count
        );
        for w in &report.witnesses {
            println!("    witness: {w}");
        }
        if !report.pass {
            for f in report.failures.iter().take(3) {
                println!(
                    "    counterexample [{}] {} :: {}",
                    f.check, f.input, f.detail
                );
            }
            pass = false;
        }
    }
    println!(
        "acceptance 7 involution class suite: {} ({:.2?})",
        if pass { "PASS" } else { "FAIL" },
        started.elapsed()
    );
    assert!(pass, "criterion failed: 7 involution class suite");
}
