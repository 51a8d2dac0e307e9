//! Schensted row and column insertion with trail recording.
//!
//! A trail is the sequence of boxes activated by one insertion, each carrying
//! the label it held *before* the insertion, followed by the newly created
//! (unlabelled) box. Sliding every trail label one step forward and writing the
//! inserted value into the first box reproduces the insertion.

use std::fmt;

use thiserror::Error;

use crate::tableau::{BoxCoord, Label, Tableau, TableauError};

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum InsertError {
    #[error("label {0} is already present")]
    XAlreadyPresent(Label),
    #[error("trail step at {at} expects label {expected:?}, tableau has {found:?}")]
    TrailInconsistentWithTableau {
        at: BoxCoord,
        expected: Option<Label>,
        found: Option<Label>,
    },
    #[error("slid tableau is invalid: {0}")]
    InvalidResult(#[from] TableauError),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum TrailKind {
    Row,
    Column,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct TrailStep {
    pub at: BoxCoord,
    /// `None` only for the final, newly created box.
    pub label: Option<Label>,
}

/// Insertion path of a single row or column insertion.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Trail {
    kind: TrailKind,
    steps: Vec<TrailStep>,
}

/// Ways a sequence of steps can fail to be a trail.
#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum TrailDefect {
    #[error("trail has no steps")]
    Empty,
    #[error("step {0} is labelled/unlabelled in the wrong place")]
    MisplacedEmptyBox(usize),
    #[error("labels do not strictly increase at step {0}")]
    LabelsNotIncreasing(usize),
    #[error("step {0} is not on the expected row/column")]
    WrongLine(usize),
    #[error("step {0} moves in a forbidden direction")]
    WrongDirection(usize),
}

impl Trail {
    /// Checks the structural trail invariants and wraps the steps.
    pub fn new(kind: TrailKind, steps: Vec<TrailStep>) -> Result<Self, TrailDefect> {
        let trail = Trail { kind, steps };
        trail.check_shape()?;
        Ok(trail)
    }

    pub fn kind(&self) -> TrailKind {
        self.kind
    }

    pub fn steps(&self) -> &[TrailStep] {
        &self.steps
    }

    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    /// The newly created box.
    pub fn empty_box(&self) -> BoxCoord {
        self.steps.last().expect("trail is never empty").at
    }

    pub fn boxes(&self) -> impl Iterator<Item = BoxCoord> + '_ {
        self.steps.iter().map(|s| s.at)
    }

    /// The labels of the labelled steps, in order.
    pub fn labels(&self) -> Vec<Label> {
        self.steps.iter().filter_map(|s| s.label).collect()
    }

    pub fn position_of(&self, b: BoxCoord) -> Option<usize> {
        self.steps.iter().position(|s| s.at == b)
    }

    /// The same trail reflected across the main diagonal.
    pub fn transposed(&self) -> Trail {
        Trail {
            kind: match self.kind {
                TrailKind::Row => TrailKind::Column,
                TrailKind::Column => TrailKind::Row,
            },
            steps: self
                .steps
                .iter()
                .map(|s| TrailStep {
                    at: s.at.transposed(),
                    label: s.label,
                })
                .collect(),
        }
    }

    /// Checks every invariant that does not need the tableau: the empty box
    /// is last, labels increase, step `k` sits on line `k`, and the trail moves
    /// weakly north-west (row) or weakly south-east (column).
    pub fn check_shape(&self) -> Result<(), TrailDefect> {
        let last = self.steps.len().checked_sub(1).ok_or(TrailDefect::Empty)?;
        for (k, step) in self.steps.iter().enumerate() {
            if step.label.is_none() != (k == last) {
                return Err(TrailDefect::MisplacedEmptyBox(k));
            }
            let (line, cross) = match self.kind {
                TrailKind::Row => (step.at.row, step.at.col),
                TrailKind::Column => (step.at.col, step.at.row),
            };
            if line != k {
                return Err(TrailDefect::WrongLine(k));
            }
            if k > 0 {
                let prev = &self.steps[k - 1];
                let prev_cross = match self.kind {
                    TrailKind::Row => prev.at.col,
                    TrailKind::Column => prev.at.row,
                };
                if cross > prev_cross {
                    return Err(TrailDefect::WrongDirection(k));
                }
                if let (Some(u), Some(v)) = (prev.label, step.label) {
                    if u >= v {
                        return Err(TrailDefect::LabelsNotIncreasing(k));
                    }
                }
            }
        }
        Ok(())
    }
}

impl fmt::Display for Trail {
    /// One step per line: `row col label`, with `_` for the empty box.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for step in &self.steps {
            match step.label {
                Some(v) => writeln!(f, "{} {} {}", step.at.row, step.at.col, v)?,
                None => writeln!(f, "{} {} _", step.at.row, step.at.col)?,
            }
        }
        Ok(())
    }
}

/// Inserts `x` into one strictly increasing row. Returns the new row and the
/// bumped label: the smallest element greater than `x`, if any.
pub fn row_insert_into_row(
    row: &[Label],
    x: Label,
) -> Result<(Vec<Label>, Option<Label>), InsertError> {
    let mut out = row.to_vec();
    let bumped = insert_into_line(&mut out, x)?;
    Ok((out, bumped))
}

fn insert_into_line(line: &mut Vec<Label>, x: Label) -> Result<Option<Label>, InsertError> {
    match line.binary_search(&x) {
        Ok(_) => Err(InsertError::XAlreadyPresent(x)),
        Err(pos) if pos == line.len() => {
            line.push(x);
            Ok(None)
        }
        Err(pos) => Ok(Some(std::mem::replace(&mut line[pos], x))),
    }
}

/// Row insertion `T <- x`.
pub fn row_insert(t: &Tableau, x: Label) -> Result<(Tableau, Trail), InsertError> {
    if t.contains(x) {
        return Err(InsertError::XAlreadyPresent(x));
    }
    let mut rows = t.rows().to_vec();
    let mut steps = Vec::new();
    let mut carry = x;
    for r in 0.. {
        if r == rows.len() {
            rows.push(Vec::new());
        }
        let row = &mut rows[r];
        let col = row.partition_point(|&v| v < carry);
        match insert_into_line(row, carry)? {
            Some(bumped) => {
                steps.push(TrailStep {
                    at: BoxCoord::new(r, col),
                    label: Some(bumped),
                });
                carry = bumped;
            }
            None => {
                steps.push(TrailStep {
                    at: BoxCoord::new(r, col),
                    label: None,
                });
                break;
            }
        }
    }
    Ok((
        Tableau::from_rows_unchecked(rows),
        Trail {
            kind: TrailKind::Row,
            steps,
        },
    ))
}

/// Column insertion `x -> T`, implemented directly on columns.
pub fn column_insert(x: Label, t: &Tableau) -> Result<(Tableau, Trail), InsertError> {
    if t.contains(x) {
        return Err(InsertError::XAlreadyPresent(x));
    }
    let mut rows = t.rows().to_vec();
    let mut steps = Vec::new();
    let mut carry = x;
    for c in 0.. {
        let height = rows.iter().take_while(|row| row.len() > c).count();
        let r = rows[..height].partition_point(|row| row[c] < carry);
        if r == height {
            if r == rows.len() {
                rows.push(Vec::new());
            }
            rows[r].push(carry);
            steps.push(TrailStep {
                at: BoxCoord::new(r, c),
                label: None,
            });
            break;
        }
        let bumped = std::mem::replace(&mut rows[r][c], carry);
        steps.push(TrailStep {
            at: BoxCoord::new(r, c),
            label: Some(bumped),
        });
        carry = bumped;
    }
    Ok((
        Tableau::from_rows_unchecked(rows),
        Trail {
            kind: TrailKind::Column,
            steps,
        },
    ))
}

/// Rebuilds an insertion result from its trail: each label moves to the next
/// step's box and `inserted` fills the first box.
pub fn slide_trail(t: &Tableau, trail: &Trail, inserted: Label) -> Result<Tableau, InsertError> {
    if t.contains(inserted) {
        return Err(InsertError::XAlreadyPresent(inserted));
    }
    for step in trail.steps() {
        let found = t.get(step.at);
        if found != step.label {
            return Err(InsertError::TrailInconsistentWithTableau {
                at: step.at,
                expected: step.label,
                found,
            });
        }
    }
    Ok(t.with_assignments(&slide_assignments(trail, inserted))?)
}

/// `(box, label)` placements produced by sliding `trail` with `head` entering
/// at the first box: box `k` receives the label of step `k - 1`.
pub(crate) fn slide_assignments(trail: &Trail, head: Label) -> Vec<(BoxCoord, Label)> {
    let incoming = std::iter::once(head).chain(trail.steps().iter().filter_map(|s| s.label));
    trail.boxes().zip(incoming).collect()
}
