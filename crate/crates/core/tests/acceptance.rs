//! Exit criteria for the library. Each criterion prints one PASS/FAIL line;
//! the test fails if any criterion fails.

mod common;

use std::time::{Duration, Instant};

use tableau_trails::fixtures::{worked_example, worked_example_result};
use tableau_trails::format::{parse_rendered, render};
use tableau_trails::harness::ViolationKind;
use tableau_trails::modify::{check_modify_lemma, DEFAULT_SEED};
use tableau_trails::{
    column_insert, commute_check, enumerate_cases, enumerate_syt, fused_insert, reversal_check,
    row_insert, run_sweep, BoxCoord, Configuration, Convention, RenderOptions, SweepOptions,
    Tableau, Variant,
};

struct Outcome {
    name: &'static str,
    pass: bool,
    detail: String,
}

fn timed<T>(f: impl FnOnce() -> T) -> (T, Duration) {
    let start = Instant::now();
    let out = f();
    (out, start.elapsed())
}

fn worked_example_golden() -> Outcome {
    let ((pass, detail), elapsed) = timed(|| {
        let t = worked_example();
        let (_, row) = row_insert(&t, 8).unwrap();
        let (_, col) = column_insert(7, &t).unwrap();
        let row_labels: Vec<Option<u32>> = row.steps().iter().map(|s| s.label).collect();
        let col_labels: Vec<Option<u32>> = col.steps().iter().map(|s| s.label).collect();
        let report = commute_check(&t, 7, 8).unwrap();
        let expected = worked_example_result();
        let strong = report.intersection.strong().cloned();
        let pass = row_labels == [Some(9), Some(10), Some(13), Some(18), Some(19), None]
            && col_labels == [Some(11), Some(13), Some(14), Some(15), None]
            && strong.as_ref().is_some_and(|st| {
                st.s_box == BoxCoord::new(2, 1)
                    && (st.i, st.a, st.s, st.j, st.b) == (10, 11, 13, Some(18), Some(14))
            })
            && report.left == expected
            && report.right == expected
            && report.fused == expected
            && report.all_equal;
        (pass, format!("{}", report.intersection))
    });
    Outcome {
        name: "1 worked example golden (bit-exact, < 10 ms)",
        pass: pass && elapsed < Duration::from_millis(10),
        detail: format!("{detail}; {elapsed:?}"),
    }
}

fn commutation_by_exhaustion(summary: &tableau_trails::SweepSummary, elapsed: Duration) -> Outcome {
    let pass = summary.cases_per_n.get(7) == Some(&16_704)
        && summary.violation_count(ViolationKind::NotCommuting) == 0
        && summary.failures == 0
        && elapsed < Duration::from_secs(10);
    Outcome {
        name: "2 commutation by exhaustion, n <= 7 (0 failures, < 10 s single-threaded)",
        pass,
        detail: format!(
            "{} cases, n=7: {:?}, failures {}, {elapsed:?}",
            summary.cases_total,
            summary.cases_per_n.get(7),
            summary.failures
        ),
    }
}

fn lemma_suite(summary: &tableau_trails::SweepSummary) -> Outcome {
    let kinds = [
        ViolationKind::WeakIntersection,
        ViolationKind::MultipleSharedBoxes,
        ViolationKind::EmptyBoxMismatch,
        ViolationKind::ForbiddenConfiguration,
        ViolationKind::RelativePosition,
        ViolationKind::TrailAgreementBelow,
        ViolationKind::TrailAgreementAbove,
        ViolationKind::LabelOrderAroundS,
        ViolationKind::ConflictPlacement,
        ViolationKind::TrailShape,
        ViolationKind::BumpDeterminism,
        ViolationKind::SlideReconstruction,
    ];
    let counts: Vec<(ViolationKind, usize)> = kinds
        .iter()
        .map(|&k| (k, summary.violation_count(k)))
        .collect();
    let strong = summary.variant_count(Variant::Strong);
    let configured: usize = Configuration::ALL
        .iter()
        .map(|&c| summary.configuration_count(c))
        .sum();
    Outcome {
        name: "3 lemma suite by exhaustion, n <= 7 (0 violations)",
        pass: counts.iter().all(|&(_, c)| c == 0) && strong > 0 && configured == strong,
        detail: format!(
            "{strong} strong cases, all in the five configurations; violations {counts:?}"
        ),
    }
}

fn configuration_coverage() -> Outcome {
    let (summary, elapsed) = timed(|| run_sweep(&SweepOptions::new(8)));
    // Regression snapshot of the n <= 8 sweep.
    let variants = [
        (Variant::Disjoint, 32_650),
        (Variant::SharedEmptyBox, 25_924),
        (Variant::Strong, 32_650),
    ];
    let configurations = [
        (Configuration::JB, 14_598),
        (Configuration::IJB, 3_886),
        (Configuration::AJB, 3_886),
        (Configuration::IJ, 5_140),
        (Configuration::AB, 5_140),
    ];
    let covered = Variant::ALL.iter().all(|&v| summary.variant_count(v) >= 1)
        && Configuration::ALL
            .iter()
            .all(|&c| summary.configuration_count(c) >= 1);
    let snapshot = variants.iter().all(|&(v, n)| summary.variant_count(v) == n)
        && configurations
            .iter()
            .all(|&(c, n)| summary.configuration_count(c) == n);
    Outcome {
        name: "4 configuration coverage, n <= 8 (all >= 1, snapshot, < 60 s)",
        pass: covered && snapshot && summary.failures == 0 && elapsed < Duration::from_secs(60),
        detail: format!(
            "{:?} {:?}, failures {}, {elapsed:?}",
            summary.variant_counts, summary.configuration_counts, summary.failures
        ),
    }
}

fn modify_property() -> Outcome {
    let (report, elapsed) = timed(|| check_modify_lemma(10_000, DEFAULT_SEED));
    Outcome {
        name: "5 row-modification property, 10,000 seeded instances (< 1 s)",
        pass: report.instances == 10_000
            && report.failures == 0
            && elapsed < Duration::from_secs(1),
        detail: format!(
            "seed {}, failures {}, {elapsed:?}",
            report.seed, report.failures
        ),
    }
}

fn reversal() -> Outcome {
    let (all, elapsed) = timed(|| (0..=7).all(reversal_check));
    Outcome {
        name: "6 reversal transposes P, n <= 7 (< 5 s)",
        pass: all && elapsed < Duration::from_secs(5),
        detail: format!("{elapsed:?}"),
    }
}

fn generation_cross_check() -> Outcome {
    let expected = [1usize, 1, 2, 4, 10, 26, 76, 232, 764];
    let generated: Vec<usize> = (0..=8).map(|n| enumerate_syt(n).len()).collect();
    let brute: Vec<usize> = (0..=8).map(|n| common::brute_force_syt(n).len()).collect();
    Outcome {
        name: "7 SYT counts match involution numbers and brute force, n <= 8",
        pass: generated == expected && brute == expected,
        detail: format!("generated {generated:?}, brute force {brute:?}"),
    }
}

fn round_trip_and_duality() -> Outcome {
    let opts = RenderOptions::default();
    let mut tableaux = 0;
    let mut round_trip_failures = 0;
    let mut duality_failures = 0;
    for n in 0..=6 {
        for t in enumerate_syt(n) {
            tableaux += 1;
            if parse_rendered(&render(&t, &opts), Convention::French).as_ref() != Ok(&t) {
                round_trip_failures += 1;
            }
        }
        for case in enumerate_cases(n) {
            let (col_out, col_trail) = column_insert(case.x, &case.tableau).unwrap();
            let (row_out, row_trail) = row_insert(&case.tableau.transpose(), case.x).unwrap();
            if row_out.transpose() != col_out || row_trail.transposed() != col_trail {
                duality_failures += 1;
            }
        }
    }
    Outcome {
        name: "8 render/parse round trip and transpose duality, n <= 6",
        pass: round_trip_failures == 0 && duality_failures == 0,
        detail: format!(
            "{tableaux} tableaux, round-trip failures {round_trip_failures}, duality failures {duality_failures}"
        ),
    }
}

#[test]
fn acceptance() {
    // Warm up allocations so the timed golden run measures the algorithm.
    let _ = fused_insert(&worked_example(), 7, 8);
    let _ = Tableau::empty();

    let (sweep7, elapsed7) = timed(|| {
        run_sweep(&SweepOptions {
            workers: 1,
            ..SweepOptions::new(7)
        })
    });
    let outcomes = [
        worked_example_golden(),
        commutation_by_exhaustion(&sweep7, elapsed7),
        lemma_suite(&sweep7),
        configuration_coverage(),
        modify_property(),
        reversal(),
        generation_cross_check(),
        round_trip_and_duality(),
    ];
    for o in &outcomes {
        println!(
            "[{}] {} -- {}",
            if o.pass { "PASS" } else { "FAIL" },
            o.name,
            o.detail
        );
    }
    if let Some(first) = &sweep7.first_failure {
        println!("first sweep failure: {first}");
    }
    let failed: Vec<&str> = outcomes
        .iter()
        .filter(|o| !o.pass)
        .map(|o| o.name)
        .collect();
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}
