//! Simultaneous column-then-row insertion computed from the two trails on the
//! original tableau, and the three-way commutation check.
//!
//! Both trails are read with a virtual head: `x` precedes the column trail's
//! labels and `y` precedes the row trail's, and box `k` of a trail receives
//! the `k`-th entry of that extended sequence. Only the labels that compete
//! for the shared box need special handling.

use thiserror::Error;

use crate::analysis::{
    classify_intersection, AnalysisError, IntersectionReport, StrongIntersection,
};
use crate::insertion::{column_insert, row_insert, InsertError, Trail};
use crate::tableau::{BoxCoord, Label, Tableau, TableauError};

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum FusedError {
    #[error("inserted values must differ")]
    SameValues,
    #[error(transparent)]
    Insert(#[from] InsertError),
    #[error(transparent)]
    Analysis(#[from] AnalysisError),
    #[error("labels a, i, s must be pairwise distinct")]
    LabelsNotDistinct,
    #[error("fused placement is not a tableau: {0}")]
    InvalidResult(TableauError),
}

/// Labels written into `S`, `B` (column successor of `S`) and `J` (row
/// successor of `S`).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ConflictAssignment {
    pub s_target: Label,
    pub b_target: Label,
    pub j_target: Label,
}

/// `(i, s, a)` when `i < a`, `(a, i, s)` when `i > a`.
///
/// Expects `a < s` and `i < s`; only distinctness is checked.
pub fn resolve_conflict(a: Label, i: Label, s: Label) -> Result<ConflictAssignment, FusedError> {
    if a == i || a == s || i == s {
        return Err(FusedError::LabelsNotDistinct);
    }
    Ok(if i < a {
        ConflictAssignment {
            s_target: i,
            b_target: s,
            j_target: a,
        }
    } else {
        ConflictAssignment {
            s_target: a,
            b_target: i,
            j_target: s,
        }
    })
}

/// Incoming label for every box of `trail`, with `head` entering first.
fn incoming(trail: &Trail, head: Label) -> Vec<(BoxCoord, Label)> {
    let labels = std::iter::once(head).chain(trail.steps().iter().filter_map(|s| s.label));
    trail.boxes().zip(labels).collect()
}

fn check_fresh(t: &Tableau, x: Label, y: Label) -> Result<(), FusedError> {
    if x == y {
        return Err(FusedError::SameValues);
    }
    for v in [x, y] {
        if t.contains(v) {
            return Err(InsertError::XAlreadyPresent(v).into());
        }
    }
    Ok(())
}

/// Placements for `(x -> T) <- y` given both trails on `T` and their
/// classification.
pub(crate) fn fused_assignments(
    row_trail: &Trail,
    col_trail: &Trail,
    report: &IntersectionReport,
    x: Label,
    y: Label,
) -> Result<Vec<(BoxCoord, Label)>, FusedError> {
    let mut row_in = incoming(row_trail, y);
    let mut col_in = incoming(col_trail, x);
    match report {
        IntersectionReport::Disjoint => {}
        IntersectionReport::SharedEmptyBox { s_box, a, i } => {
            // The last incoming label of each trail is the one aimed at S.
            row_in.pop();
            col_in.pop();
            if i < a {
                row_in.push((*s_box, *i));
                row_in.push((BoxCoord::new(s_box.row + 1, s_box.col), *a));
            } else {
                row_in.push((*s_box, *a));
                row_in.push((BoxCoord::new(s_box.row, s_box.col + 1), *i));
            }
        }
        IntersectionReport::Strong(st) => {
            let StrongIntersection {
                s_box,
                s,
                a,
                i,
                b_box,
                j_box,
                row_index,
                col_index,
                ..
            } = *st;
            let conflict = resolve_conflict(a, i, s)?;
            // Drop i -> S, s -> J from the row trail and a -> S, s -> B from
            // the column trail.
            row_in.drain(row_index..=row_index + 1);
            col_in.drain(col_index..=col_index + 1);
            row_in.extend([
                (s_box, conflict.s_target),
                (b_box, conflict.b_target),
                (j_box, conflict.j_target),
            ]);
        }
    }
    row_in.extend(col_in);
    Ok(row_in)
}

/// Computes `(x -> T) <- y` directly from the trails of `x -> T` and `T <- y`
/// on `T`, without building the intermediate tableau.
pub fn fused_insert(t: &Tableau, x: Label, y: Label) -> Result<Tableau, FusedError> {
    Ok(fused_insert_with_report(t, x, y)?.0)
}

/// [`fused_insert`] also returning the intersection classification.
pub fn fused_insert_with_report(
    t: &Tableau,
    x: Label,
    y: Label,
) -> Result<(Tableau, IntersectionReport), FusedError> {
    check_fresh(t, x, y)?;
    let (_, row_trail) = row_insert(t, y)?;
    let (_, col_trail) = column_insert(x, t)?;
    let report = classify_intersection(&row_trail, &col_trail, x, y)?;
    let assignments = fused_assignments(&row_trail, &col_trail, &report, x, y)?;
    let fused = t
        .with_assignments(&assignments)
        .map_err(FusedError::InvalidResult)?;
    Ok((fused, report))
}

/// The three routes to "insert `x` by column and `y` by row".
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CommutationReport {
    /// `(x -> T) <- y`
    pub left: Tableau,
    /// `x -> (T <- y)`
    pub right: Tableau,
    pub fused: Tableau,
    pub intersection: IntersectionReport,
    pub all_equal: bool,
}

pub fn commute_check(t: &Tableau, x: Label, y: Label) -> Result<CommutationReport, FusedError> {
    check_fresh(t, x, y)?;
    let (after_col, _) = column_insert(x, t)?;
    let (left, _) = row_insert(&after_col, y)?;
    let (after_row, _) = row_insert(t, y)?;
    let (right, _) = column_insert(x, &after_row)?;
    let (fused, intersection) = fused_insert_with_report(t, x, y)?;
    let all_equal = left == right && right == fused;
    Ok(CommutationReport {
        left,
        right,
        fused,
        intersection,
        all_equal,
    })
}

/// Agreement of the row trails of `T <- y` and `(x -> T) <- y` around the
/// row of the shared box.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct TrailAgreement {
    /// Same boxes and labels on every row below `S`.
    pub below: bool,
    /// The two trails have the same first box, with the same label, in the
    /// row just above `S`.
    pub above_hypothesis: bool,
    /// Same boxes and labels on every row above `S`.
    pub above: bool,
}

/// Compares the row trail of `T <- y` with that of `(x -> T) <- y`.
pub fn trail_agreement(t: &Tableau, x: Label, y: Label) -> Result<TrailAgreement, FusedError> {
    check_fresh(t, x, y)?;
    let (_, row_trail) = row_insert(t, y)?;
    let (after_col, col_trail) = column_insert(x, t)?;
    let report = classify_intersection(&row_trail, &col_trail, x, y)?;
    let st = report
        .strong()
        .ok_or(AnalysisError::NotAStrongIntersection)?;
    let (_, new_trail) = row_insert(&after_col, y)?;
    // Step k of a row trail lies in row k.
    let ell = st.s_box.row;
    let old = row_trail.steps();
    let new = new_trail.steps();
    let below = old.len() > ell && new.len() > ell && old[..ell] == new[..ell];
    let above_hypothesis = old.get(ell + 1).is_some() && old.get(ell + 1) == new.get(ell + 1);
    let above = old.get(ell + 1..) == new.get(ell + 1..);
    Ok(TrailAgreement {
        below,
        above_hypothesis,
        above,
    })
}

/// True iff the row trails of `T <- y` and `(x -> T) <- y` coincide strictly
/// below the row of the shared box.
pub fn trail_agreement_below(t: &Tableau, x: Label, y: Label) -> Result<bool, FusedError> {
    Ok(trail_agreement(t, x, y)?.below)
}
