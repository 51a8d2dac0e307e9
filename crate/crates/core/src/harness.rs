//! Exhaustive enumeration of small cases and the invariant sweep.
//!
//! Every standard tableau of size `n` is relabelled into `1..=n+2` in each of
//! the `C(n+2, 2)` ways that leave two values out, and the two leftovers are
//! inserted as `(x, y)` in both orders. Since every statement checked here
//! depends only on the relative order of labels, this covers every order type
//! of `(T, x, y)` with `|T| = n`.

use std::collections::BTreeMap;
use std::fmt;
use std::time::{Duration, Instant};

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::analysis::{
    check_relative_position, classify_intersection, AnalysisError, Configuration,
    IntersectionReport, Variant,
};
use crate::fused::{commute_check, fused_assignments, resolve_conflict, trail_agreement};
use crate::insertion::{
    column_insert, row_insert, row_insert_into_row, slide_trail, Trail, TrailKind,
};
use crate::modify::modify_row;
use crate::tableau::{BoxCoord, Label, Tableau};

/// One `(T, x, y)` instance: `x` is column-inserted, `y` row-inserted.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CaseDescriptor {
    pub tableau: Tableau,
    pub x: Label,
    pub y: Label,
}

impl fmt::Display for CaseDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "T = [{}], x = {}, y = {}",
            crate::format::inline(&self.tableau),
            self.x,
            self.y
        )
    }
}

/// All standard Young tableaux on `1..=n`, built by adding `n` at every outer
/// corner of every tableau on `1..=n-1`.
pub fn enumerate_syt(n: usize) -> Vec<Tableau> {
    let mut level = vec![Tableau::empty()];
    for k in 1..=n {
        level = level
            .iter()
            .flat_map(|t| {
                t.shape().addable_boxes().into_iter().map(move |b| {
                    t.with_assignments(&[(b, k as Label)])
                        .expect("largest label at an outer corner")
                })
            })
            .collect();
    }
    level
}

/// Cases of size `n`, `SYT(n) * C(n+2, 2) * 2` of them.
pub fn enumerate_cases(n: usize) -> impl Iterator<Item = CaseDescriptor> {
    let top = n as Label + 2;
    enumerate_syt(n).into_iter().flat_map(move |t| {
        (1..=top)
            .flat_map(move |p| (p + 1..=top).map(move |q| (p, q)))
            .flat_map(move |(p, q)| {
                let kept: Vec<Label> = (1..=top).filter(|&v| v != p && v != q).collect();
                let relabelled = t
                    .relabel(|v| kept[v as usize - 1])
                    .expect("increasing relabelling");
                [(p, q), (q, p)].map(|(x, y)| CaseDescriptor {
                    tableau: relabelled.clone(),
                    x,
                    y,
                })
            })
    })
}

/// Which check failed.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ViolationKind {
    Insertion,
    TrailShape,
    BumpDeterminism,
    SlideReconstruction,
    ShapeGrowth,
    TransposeDuality,
    WeakIntersection,
    MultipleSharedBoxes,
    EmptyBoxMismatch,
    ForbiddenConfiguration,
    LabelOrderAroundS,
    NotCommuting,
    RelativePosition,
    TrailAgreementBelow,
    TrailAgreementAbove,
    ConflictPlacement,
    ModifyLemma,
}

impl ViolationKind {
    pub fn name(self) -> &'static str {
        match self {
            ViolationKind::Insertion => "insertion",
            ViolationKind::TrailShape => "trail_shape",
            ViolationKind::BumpDeterminism => "bump_determinism",
            ViolationKind::SlideReconstruction => "slide_reconstruction",
            ViolationKind::ShapeGrowth => "shape_growth",
            ViolationKind::TransposeDuality => "transpose_duality",
            ViolationKind::WeakIntersection => "weak_intersection",
            ViolationKind::MultipleSharedBoxes => "multiple_shared_boxes",
            ViolationKind::EmptyBoxMismatch => "empty_box_mismatch",
            ViolationKind::ForbiddenConfiguration => "forbidden_configuration",
            ViolationKind::LabelOrderAroundS => "label_order_around_s",
            ViolationKind::NotCommuting => "not_commuting",
            ViolationKind::RelativePosition => "relative_position",
            ViolationKind::TrailAgreementBelow => "trail_agreement_below",
            ViolationKind::TrailAgreementAbove => "trail_agreement_above",
            ViolationKind::ConflictPlacement => "conflict_placement",
            ViolationKind::ModifyLemma => "modify_lemma",
        }
    }
}

impl fmt::Display for ViolationKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Violation {
    pub kind: ViolationKind,
    pub detail: String,
}

impl Violation {
    fn new(kind: ViolationKind, detail: impl Into<String>) -> Self {
        Violation {
            kind,
            detail: detail.into(),
        }
    }
}

/// Result of checking one case.
#[derive(Clone, Debug, Default)]
pub struct CaseOutcome {
    pub variant: Option<Variant>,
    pub configuration: Option<Configuration>,
    /// The row trails of `T <- y` and `(x -> T) <- y` differ at their first
    /// box above the shared row.
    pub above_hypothesis_failed: bool,
    pub violations: Vec<Violation>,
}

fn analysis_kind(err: &AnalysisError) -> ViolationKind {
    match err {
        AnalysisError::WeakIntersectionDetected { .. } | AnalysisError::OverlappingSegments => {
            ViolationKind::WeakIntersection
        }
        AnalysisError::MultipleSharedBoxes(_) => ViolationKind::MultipleSharedBoxes,
        AnalysisError::EmptyBoxMismatch(_) => ViolationKind::EmptyBoxMismatch,
        AnalysisError::ForbiddenConfiguration(_) => ViolationKind::ForbiddenConfiguration,
        AnalysisError::WrongTrailKinds | AnalysisError::NotAStrongIntersection => {
            ViolationKind::Insertion
        }
    }
}

/// Invariants of a single insertion of `value` into `t` producing
/// `(out, trail)`.
fn check_insertion(
    t: &Tableau,
    value: Label,
    out: &Tableau,
    trail: &Trail,
    violations: &mut Vec<Violation>,
) {
    let which = match trail.kind() {
        TrailKind::Row => "row",
        TrailKind::Column => "column",
    };
    if let Err(defect) = trail.check_shape() {
        violations.push(Violation::new(
            ViolationKind::TrailShape,
            format!("{which} trail: {defect}"),
        ));
    }
    // Re-inserting each incoming label into the line of the next step bumps
    // exactly that step's label (nothing, for the empty box).
    let mut incoming = value;
    for (k, step) in trail.steps().iter().enumerate() {
        let line = match trail.kind() {
            TrailKind::Row => t.row(step.at.row).to_vec(),
            TrailKind::Column => t.column(step.at.col),
        };
        let bumped = row_insert_into_row(&line, incoming)
            .ok()
            .and_then(|(_, b)| b);
        if bumped != step.label {
            violations.push(Violation::new(
                ViolationKind::BumpDeterminism,
                format!(
                    "{which} trail step {k}: {incoming} bumps {bumped:?}, trail says {:?}",
                    step.label
                ),
            ));
            break;
        }
        if let Some(v) = step.label {
            incoming = v;
        }
    }
    match slide_trail(t, trail, value) {
        Ok(slid) if &slid == out => {}
        other => violations.push(Violation::new(
            ViolationKind::SlideReconstruction,
            format!("{which} trail slide gives {other:?}"),
        )),
    }
    let mut lengths = t.shape().row_lengths().to_vec();
    let new_box = trail.empty_box();
    if new_box.row == lengths.len() {
        lengths.push(0);
    }
    lengths[new_box.row] += 1;
    let mut entries = t.entries();
    entries.push(value);
    entries.sort_unstable();
    if out.shape().row_lengths() != lengths.as_slice()
        || lengths[new_box.row] != new_box.col + 1
        || out.entries() != entries
        || out.validate().is_err()
    {
        violations.push(Violation::new(
            ViolationKind::ShapeGrowth,
            format!("{which} insertion"),
        ));
    }
}

/// Runs every invariant on one case. `rng` drives the row-modification check.
pub fn check_case(case: &CaseDescriptor, rng: &mut ChaCha8Rng) -> CaseOutcome {
    let mut outcome = CaseOutcome::default();
    let violations = &mut outcome.violations;
    let CaseDescriptor { tableau: t, x, y } = case;
    let (x, y) = (*x, *y);

    let (row_out, row_trail) = match row_insert(t, y) {
        Ok(r) => r,
        Err(e) => {
            violations.push(Violation::new(ViolationKind::Insertion, e.to_string()));
            return outcome;
        }
    };
    let (col_out, col_trail) = match column_insert(x, t) {
        Ok(r) => r,
        Err(e) => {
            violations.push(Violation::new(ViolationKind::Insertion, e.to_string()));
            return outcome;
        }
    };
    check_insertion(t, y, &row_out, &row_trail, violations);
    check_insertion(t, x, &col_out, &col_trail, violations);

    match row_insert(&t.transpose(), x) {
        Ok((tr_out, tr_trail))
            if tr_out.transpose() == col_out && tr_trail.transposed() == col_trail => {}
        _ => violations.push(Violation::new(
            ViolationKind::TransposeDuality,
            "column insertion of x",
        )),
    }

    // Row-modification property on every bump of the row insertion.
    let mut incoming = y;
    for step in row_trail.steps() {
        let Some(label) = step.label else { break };
        if let Some(inst) = modify_row(t.row(step.at.row), incoming, rng) {
            if !inst.holds() {
                violations.push(Violation::new(
                    ViolationKind::ModifyLemma,
                    format!("{inst:?}"),
                ));
            }
        }
        incoming = label;
    }

    let report = match classify_intersection(&row_trail, &col_trail, x, y) {
        Ok(r) => r,
        Err(e) => {
            violations.push(Violation::new(analysis_kind(&e), e.to_string()));
            return outcome;
        }
    };
    outcome.variant = Some(report.variant());

    let commutation = match commute_check(t, x, y) {
        Ok(c) => c,
        Err(e) => {
            violations.push(Violation::new(ViolationKind::NotCommuting, e.to_string()));
            return outcome;
        }
    };
    if !commutation.all_equal {
        violations.push(Violation::new(
            ViolationKind::NotCommuting,
            format!(
                "left [{}] right [{}] fused [{}]",
                crate::format::inline(&commutation.left),
                crate::format::inline(&commutation.right),
                crate::format::inline(&commutation.fused)
            ),
        ));
    }
    let left = &commutation.left;

    match &report {
        IntersectionReport::Disjoint => {}
        IntersectionReport::SharedEmptyBox { s_box, a, i } => {
            let (s_label, other_box, other_label) = if i < a {
                (*i, BoxCoord::new(s_box.row + 1, s_box.col), *a)
            } else {
                (*a, BoxCoord::new(s_box.row, s_box.col + 1), *i)
            };
            if left.get(*s_box) != Some(s_label) || left.get(other_box) != Some(other_label) {
                violations.push(Violation::new(
                    ViolationKind::ConflictPlacement,
                    "shared empty box",
                ));
            }
        }
        IntersectionReport::Strong(st) => {
            outcome.configuration = Some(st.configuration);
            let ordered = st.a < st.s
                && st.i < st.s
                && st.b.is_none_or(|b| st.s < b)
                && st.j.is_none_or(|j| st.s < j);
            if !ordered {
                violations.push(Violation::new(
                    ViolationKind::LabelOrderAroundS,
                    report.to_string(),
                ));
            }
            if check_relative_position(&row_trail, &col_trail, st.s_box) != Ok(true) {
                violations.push(Violation::new(
                    ViolationKind::RelativePosition,
                    report.to_string(),
                ));
            }
            match trail_agreement(t, x, y) {
                Ok(agreement) => {
                    if !agreement.below {
                        violations.push(Violation::new(
                            ViolationKind::TrailAgreementBelow,
                            report.to_string(),
                        ));
                    }
                    if !agreement.above {
                        violations.push(Violation::new(
                            ViolationKind::TrailAgreementAbove,
                            report.to_string(),
                        ));
                    }
                    outcome.above_hypothesis_failed = !agreement.above_hypothesis;
                }
                Err(e) => violations.push(Violation::new(
                    ViolationKind::TrailAgreementBelow,
                    e.to_string(),
                )),
            }
            // The composed tableau holds the resolved labels at S, B, J and
            // every other trail label one step further along its trail.
            let placed = resolve_conflict(st.a, st.i, st.s).ok().is_some_and(|c| {
                left.get(st.s_box) == Some(c.s_target)
                    && left.get(st.b_box) == Some(c.b_target)
                    && left.get(st.j_box) == Some(c.j_target)
            });
            let slid = fused_assignments(&row_trail, &col_trail, &report, x, y)
                .map(|assignments| assignments.iter().all(|&(b, v)| left.get(b) == Some(v)))
                .unwrap_or(false);
            let s_in_b = st.i > st.a
                || (col_out.get(st.b_box) == Some(st.s) && left.get(st.b_box) == Some(st.s));
            if !(placed && slid && s_in_b) {
                violations.push(Violation::new(
                    ViolationKind::ConflictPlacement,
                    report.to_string(),
                ));
            }
        }
    }
    outcome
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SweepOptions {
    pub max_n: usize,
    /// Worker threads; 0 uses all available cores.
    pub workers: usize,
    pub seed: u64,
}

impl SweepOptions {
    pub fn new(max_n: usize) -> Self {
        SweepOptions {
            max_n,
            workers: 0,
            seed: crate::modify::DEFAULT_SEED,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SweepFailure {
    pub n: usize,
    /// Index of the case within its size.
    pub index: usize,
    pub case: CaseDescriptor,
    pub violations: Vec<Violation>,
}

impl fmt::Display for SweepFailure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "n={} case #{}: {}", self.n, self.index, self.case)?;
        for v in &self.violations {
            write!(f, "\n  {}: {}", v.kind, v.detail)?;
        }
        Ok(())
    }
}

impl std::error::Error for SweepFailure {}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SweepSummary {
    pub max_n: usize,
    pub seed: u64,
    pub cases_total: usize,
    /// Number of cases at each size `0..=max_n`.
    pub cases_per_n: Vec<usize>,
    /// Cases with at least one violation.
    pub failures: usize,
    pub violations: BTreeMap<ViolationKind, usize>,
    pub variant_counts: BTreeMap<Variant, usize>,
    pub configuration_counts: BTreeMap<Configuration, usize>,
    /// Strong cases where the first row-trail box above the shared row
    /// differs between `T <- y` and `(x -> T) <- y`.
    pub above_hypothesis_failures: usize,
    pub first_failure: Option<SweepFailure>,
    pub elapsed: Duration,
}

impl SweepSummary {
    pub fn violation_count(&self, kind: ViolationKind) -> usize {
        self.violations.get(&kind).copied().unwrap_or(0)
    }

    pub fn variant_count(&self, variant: Variant) -> usize {
        self.variant_counts.get(&variant).copied().unwrap_or(0)
    }

    pub fn configuration_count(&self, configuration: Configuration) -> usize {
        self.configuration_counts
            .get(&configuration)
            .copied()
            .unwrap_or(0)
    }

    pub fn into_result(self) -> Result<SweepSummary, SweepFailure> {
        match self.first_failure {
            Some(f) => Err(f),
            None => Ok(self),
        }
    }

    /// `key=value` lines.
    pub fn records(&self) -> String {
        let mut out = String::new();
        let mut push = |k: String, v: String| {
            out.push_str(&k);
            out.push('=');
            out.push_str(&v);
            out.push('\n');
        };
        push("max_n".into(), self.max_n.to_string());
        push("seed".into(), self.seed.to_string());
        push("cases_total".into(), self.cases_total.to_string());
        for (n, c) in self.cases_per_n.iter().enumerate() {
            push(format!("cases_n{n}"), c.to_string());
        }
        push("failures".into(), self.failures.to_string());
        for v in Variant::ALL {
            push(format!("variant.{v}"), self.variant_count(v).to_string());
        }
        for c in Configuration::ALL {
            push(
                format!("configuration.{c}"),
                self.configuration_count(c).to_string(),
            );
        }
        for (k, c) in &self.violations {
            push(format!("violation.{k}"), c.to_string());
        }
        push(
            "above_hypothesis_failures".into(),
            self.above_hypothesis_failures.to_string(),
        );
        push("elapsed_ms".into(), self.elapsed.as_millis().to_string());
        out
    }
}

impl fmt::Display for SweepSummary {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "sizes: 0..={}", self.max_n)?;
        writeln!(f, "cases: {}", self.cases_total)?;
        for (n, c) in self.cases_per_n.iter().enumerate() {
            writeln!(f, "  n={n}: {c}")?;
        }
        writeln!(f, "failures: {}", self.failures)?;
        let variants: Vec<String> = Variant::ALL
            .iter()
            .map(|v| format!("{v} {}", self.variant_count(*v)))
            .collect();
        writeln!(f, "variants: {}", variants.join(", "))?;
        let configs: Vec<String> = Configuration::ALL
            .iter()
            .map(|c| format!("{c} {}", self.configuration_count(*c)))
            .collect();
        writeln!(f, "configurations: {}", configs.join(", "))?;
        for (k, c) in &self.violations {
            writeln!(f, "violation {k}: {c}")?;
        }
        writeln!(
            f,
            "above-row hypothesis failures: {}",
            self.above_hypothesis_failures
        )?;
        writeln!(f, "seed: {}", self.seed)?;
        write!(f, "elapsed: {:.3}s", self.elapsed.as_secs_f64())?;
        if let Some(first) = &self.first_failure {
            write!(f, "\nfirst failure: {first}")?;
        }
        Ok(())
    }
}

#[derive(Default)]
struct Tally {
    cases: usize,
    failures: usize,
    violations: BTreeMap<ViolationKind, usize>,
    variants: BTreeMap<Variant, usize>,
    configurations: BTreeMap<Configuration, usize>,
    above_hypothesis_failures: usize,
    first_failure: Option<SweepFailure>,
}

impl Tally {
    fn merge(mut self, other: Tally) -> Tally {
        self.cases += other.cases;
        self.failures += other.failures;
        for (k, v) in other.violations {
            *self.violations.entry(k).or_default() += v;
        }
        for (k, v) in other.variants {
            *self.variants.entry(k).or_default() += v;
        }
        for (k, v) in other.configurations {
            *self.configurations.entry(k).or_default() += v;
        }
        self.above_hypothesis_failures += other.above_hypothesis_failures;
        self.first_failure = match (self.first_failure, other.first_failure) {
            (Some(a), Some(b)) => Some(if (a.n, a.index) <= (b.n, b.index) {
                a
            } else {
                b
            }),
            (a, b) => a.or(b),
        };
        self
    }
}

/// Per-case generator seed, independent of scheduling.
fn case_seed(seed: u64, n: usize, index: usize) -> u64 {
    seed ^ ((n as u64) << 56) ^ (index as u64).wrapping_mul(0x9e37_79b9_7f4a_7c15)
}

/// Checks every case of every size up to `opts.max_n`. Counts and the first
/// failure do not depend on `opts.workers`.
pub fn run_sweep(opts: &SweepOptions) -> SweepSummary {
    let start = Instant::now();
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(opts.workers)
        .build()
        .expect("thread pool");
    let mut cases_per_n = Vec::with_capacity(opts.max_n + 1);
    let mut total = Tally::default();
    for n in 0..=opts.max_n {
        let cases: Vec<CaseDescriptor> = enumerate_cases(n).collect();
        cases_per_n.push(cases.len());
        let tally = pool.install(|| {
            cases
                .par_iter()
                .enumerate()
                .fold(Tally::default, |mut tally, (index, case)| {
                    let mut rng = ChaCha8Rng::seed_from_u64(case_seed(opts.seed, n, index));
                    let outcome = check_case(case, &mut rng);
                    tally.cases += 1;
                    if let Some(v) = outcome.variant {
                        *tally.variants.entry(v).or_default() += 1;
                    }
                    if let Some(c) = outcome.configuration {
                        *tally.configurations.entry(c).or_default() += 1;
                    }
                    tally.above_hypothesis_failures += usize::from(outcome.above_hypothesis_failed);
                    if !outcome.violations.is_empty() {
                        tally.failures += 1;
                        for v in &outcome.violations {
                            *tally.violations.entry(v.kind).or_default() += 1;
                        }
                        let failure = SweepFailure {
                            n,
                            index,
                            case: case.clone(),
                            violations: outcome.violations,
                        };
                        tally = tally.merge(Tally {
                            first_failure: Some(failure),
                            ..Tally::default()
                        });
                    }
                    tally
                })
                .reduce(Tally::default, Tally::merge)
        });
        total = total.merge(tally);
    }
    SweepSummary {
        max_n: opts.max_n,
        seed: opts.seed,
        cases_total: total.cases,
        cases_per_n,
        failures: total.failures,
        violations: total.violations,
        variant_counts: total.variants,
        configuration_counts: total.configurations,
        above_hypothesis_failures: total.above_hypothesis_failures,
        first_failure: total.first_failure,
        elapsed: start.elapsed(),
    }
}
