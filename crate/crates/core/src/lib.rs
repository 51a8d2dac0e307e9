//! Schensted row and column insertion on standard Young tableaux, with the
//! insertion path ("trail") of every insertion made explicit.
//!
//! Beyond plain insertion the crate provides:
//!
//! * [`analysis`]: how the trails of `x -> T` and `T <- y` meet, including
//!   an exact test for crossings of the two broken lines;
//! * [`fused`]: `(x -> T) <- y` computed in one pass from both trails on `T`,
//!   and the check that it equals both composition orders;
//! * [`harness`]: exhaustive enumeration of small cases and a sweep running
//!   every trail invariant on each of them;
//! * [`rsk`] and [`format`] for the correspondence and text I/O.
//!
//! Coordinates are `(row, col)`, 0-based, with row 0 the first (bottom, in
//! French drawing) row.

pub mod analysis;
pub mod fixtures;
pub mod format;
pub mod fused;
pub mod harness;
pub mod insertion;
pub mod modify;
pub mod rsk;
pub mod tableau;

pub use analysis::{
    check_relative_position, classify_intersection, geometric_trail, Adjacency, AnalysisError,
    Configuration, GeometricTrail, IntersectionReport, Point, StrongIntersection, Variant,
};
pub use format::{
    parse_tableau, render, render_annotated, Annotate, Convention, OutputFormat, ParseError,
    RenderOptions,
};
pub use fused::{
    commute_check, fused_insert, resolve_conflict, trail_agreement, trail_agreement_below,
    CommutationReport, ConflictAssignment, FusedError, TrailAgreement,
};
pub use harness::{
    enumerate_cases, enumerate_syt, run_sweep, CaseDescriptor, SweepOptions, SweepSummary,
};
pub use insertion::{
    column_insert, row_insert, row_insert_into_row, slide_trail, InsertError, Trail, TrailKind,
    TrailStep,
};
pub use rsk::{reversal_check, rsk, RskError};
pub use tableau::{BoxCoord, Label, Shape, Tableau, TableauError};
