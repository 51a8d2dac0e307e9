//! Standard (injectively labelled) Young tableaux.
//!
//! Boxes are addressed by `(row, col)`, both 0-based. Row 0 is the first row,
//! which the French convention draws at the bottom. Storage is orientation
//! free; only rendering picks French or English.

use std::collections::HashSet;
use std::fmt;

use thiserror::Error;

/// A tableau entry. Labels are arbitrary distinct naturals, gaps allowed.
pub type Label = u32;

/// A box position in the quarter-plane.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BoxCoord {
    pub row: usize,
    pub col: usize,
}

impl BoxCoord {
    pub const fn new(row: usize, col: usize) -> Self {
        BoxCoord { row, col }
    }

    /// Reflection across the main diagonal.
    pub const fn transposed(self) -> Self {
        BoxCoord {
            row: self.col,
            col: self.row,
        }
    }

    /// True when the two boxes share a side.
    pub fn is_adjacent(self, other: BoxCoord) -> bool {
        self.row.abs_diff(other.row) + self.col.abs_diff(other.col) == 1
    }
}

impl fmt::Display for BoxCoord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.row, self.col)
    }
}

/// Weakly decreasing sequence of positive row lengths.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Shape(Vec<usize>);

impl Shape {
    /// Builds a shape, returning `None` unless the lengths are positive and
    /// weakly decreasing.
    pub fn new(row_lengths: Vec<usize>) -> Option<Self> {
        let positive = row_lengths.iter().all(|&len| len > 0);
        let decreasing = row_lengths.windows(2).all(|w| w[0] >= w[1]);
        (positive && decreasing).then_some(Shape(row_lengths))
    }

    pub fn row_lengths(&self) -> &[usize] {
        &self.0
    }

    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn contains(&self, b: BoxCoord) -> bool {
        self.0.get(b.row).is_some_and(|&len| b.col < len)
    }

    /// The conjugate partition (column lengths).
    pub fn conjugate(&self) -> Shape {
        let width = self.0.first().copied().unwrap_or(0);
        Shape(
            (0..width)
                .map(|c| self.0.iter().take_while(|&&len| len > c).count())
                .collect(),
        )
    }

    /// Boxes that can be added while keeping a Ferrers shape.
    pub fn addable_boxes(&self) -> Vec<BoxCoord> {
        let mut out = Vec::new();
        for (r, &len) in self.0.iter().enumerate() {
            if r == 0 || self.0[r - 1] > len {
                out.push(BoxCoord::new(r, len));
            }
        }
        out.push(BoxCoord::new(self.0.len(), 0));
        out
    }
}

/// Validation failure for a candidate tableau. Each variant names the first
/// offending box found by a row-major scan.
#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum TableauError {
    #[error("shape is not a Ferrers diagram: row {row} has length {len}, previous row has length {prev}")]
    ShapeNotFerrers { row: usize, len: usize, prev: usize },
    #[error("row {row} is not strictly increasing at column {col}")]
    RowNotIncreasing { row: usize, col: usize },
    #[error("column {col} is not strictly increasing at row {row}")]
    ColumnNotIncreasing { row: usize, col: usize },
    #[error("label {label} appears twice (again at box {at})")]
    DuplicateLabel { label: Label, at: BoxCoord },
}

/// An immutable tableau: a Ferrers shape with strictly increasing rows and
/// columns and pairwise distinct labels.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Tableau {
    rows: Vec<Vec<Label>>,
}

impl Tableau {
    pub fn empty() -> Self {
        Tableau::default()
    }

    /// Validates and wraps `rows` (row 0 first).
    pub fn from_rows(rows: Vec<Vec<Label>>) -> Result<Self, TableauError> {
        validate_rows(&rows)?;
        Ok(Tableau { rows })
    }

    /// Wraps rows that are valid by construction.
    pub(crate) fn from_rows_unchecked(rows: Vec<Vec<Label>>) -> Self {
        debug_assert_eq!(validate_rows(&rows), Ok(()));
        Tableau { rows }
    }

    /// Re-checks every tableau invariant.
    pub fn validate(&self) -> Result<(), TableauError> {
        validate_rows(&self.rows)
    }

    pub fn rows(&self) -> &[Vec<Label>] {
        &self.rows
    }

    pub fn row(&self, r: usize) -> &[Label] {
        self.rows.get(r).map_or(&[], Vec::as_slice)
    }

    /// Column `c` read from row 0 upward.
    pub fn column(&self, c: usize) -> Vec<Label> {
        self.rows
            .iter()
            .take_while(|row| row.len() > c)
            .map(|row| row[c])
            .collect()
    }

    /// Number of boxes in column `c`.
    pub fn column_len(&self, c: usize) -> usize {
        self.rows.iter().take_while(|row| row.len() > c).count()
    }

    pub fn num_rows(&self) -> usize {
        self.rows.len()
    }

    pub fn num_cols(&self) -> usize {
        self.rows.first().map_or(0, Vec::len)
    }

    pub fn len(&self) -> usize {
        self.rows.iter().map(Vec::len).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    pub fn shape(&self) -> Shape {
        Shape(self.rows.iter().map(Vec::len).collect())
    }

    pub fn get(&self, b: BoxCoord) -> Option<Label> {
        self.rows.get(b.row).and_then(|row| row.get(b.col)).copied()
    }

    pub fn contains(&self, v: Label) -> bool {
        // Each row is sorted, so a binary search per row suffices.
        self.rows.iter().any(|row| row.binary_search(&v).is_ok())
    }

    /// Box holding `v`, if any.
    pub fn position(&self, v: Label) -> Option<BoxCoord> {
        self.rows
            .iter()
            .enumerate()
            .find_map(|(r, row)| row.binary_search(&v).ok().map(|c| BoxCoord::new(r, c)))
    }

    /// All labels in increasing order.
    pub fn entries(&self) -> Vec<Label> {
        let mut out: Vec<Label> = self.rows.iter().flatten().copied().collect();
        out.sort_unstable();
        out
    }

    /// Iterates `(box, label)` in row-major order.
    pub fn boxes(&self) -> impl Iterator<Item = (BoxCoord, Label)> + '_ {
        self.rows.iter().enumerate().flat_map(|(r, row)| {
            row.iter()
                .enumerate()
                .map(move |(c, &v)| (BoxCoord::new(r, c), v))
        })
    }

    /// Reflects across the main diagonal: box `(r, c)` of the result holds the
    /// label of box `(c, r)` of `self`.
    pub fn transpose(&self) -> Tableau {
        let rows = (0..self.num_cols()).map(|c| self.column(c)).collect();
        Tableau::from_rows_unchecked(rows)
    }

    /// Applies `f` to every label. `f` must be strictly increasing on the
    /// entries for the result to remain a tableau.
    pub fn relabel(&self, f: impl Fn(Label) -> Label) -> Result<Tableau, TableauError> {
        Tableau::from_rows(
            self.rows
                .iter()
                .map(|row| row.iter().map(|&v| f(v)).collect())
                .collect(),
        )
    }

    /// Overwrites or creates boxes, then validates the result. New boxes are
    /// created in row-major order and must extend their row contiguously.
    pub(crate) fn with_assignments(
        &self,
        assignments: &[(BoxCoord, Label)],
    ) -> Result<Tableau, TableauError> {
        let height = assignments
            .iter()
            .map(|(b, _)| b.row + 1)
            .chain(std::iter::once(self.rows.len()))
            .max()
            .unwrap_or(0);
        let mut grid: Vec<Vec<Option<Label>>> = (0..height)
            .map(|r| self.row(r).iter().copied().map(Some).collect())
            .collect();
        for &(b, v) in assignments {
            let row = &mut grid[b.row];
            if row.len() <= b.col {
                row.resize(b.col + 1, None);
            }
            row[b.col] = Some(v);
        }
        let mut rows = Vec::with_capacity(height);
        for (r, row) in grid.into_iter().enumerate() {
            let prev = rows.last().map_or(usize::MAX, Vec::len);
            // A hole inside a row, or an empty row below a filled one, breaks
            // the Ferrers property.
            let filled: Option<Vec<Label>> = row.into_iter().collect();
            match filled {
                Some(row) => rows.push(row),
                None => {
                    return Err(TableauError::ShapeNotFerrers {
                        row: r,
                        len: 0,
                        prev,
                    })
                }
            }
        }
        while rows.last().is_some_and(Vec::is_empty) {
            rows.pop();
        }
        Tableau::from_rows(rows)
    }
}

fn validate_rows(rows: &[Vec<Label>]) -> Result<(), TableauError> {
    for (r, row) in rows.iter().enumerate() {
        let prev = if r == 0 {
            usize::MAX
        } else {
            rows[r - 1].len()
        };
        if row.is_empty() || row.len() > prev {
            return Err(TableauError::ShapeNotFerrers {
                row: r,
                len: row.len(),
                prev,
            });
        }
    }
    for (r, row) in rows.iter().enumerate() {
        if let Some(c) = row.windows(2).position(|w| w[0] >= w[1]) {
            return Err(TableauError::RowNotIncreasing { row: r, col: c + 1 });
        }
    }
    for r in 1..rows.len() {
        for (c, &v) in rows[r].iter().enumerate() {
            if rows[r - 1][c] >= v {
                return Err(TableauError::ColumnNotIncreasing { row: r, col: c });
            }
        }
    }
    let mut seen = HashSet::new();
    for (r, row) in rows.iter().enumerate() {
        for (c, &v) in row.iter().enumerate() {
            if !seen.insert(v) {
                return Err(TableauError::DuplicateLabel {
                    label: v,
                    at: BoxCoord::new(r, c),
                });
            }
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::worked_example;

    #[test]
    fn empty_rows_give_empty_tableau() {
        let t = Tableau::from_rows(vec![]).unwrap();
        assert!(t.is_empty());
        assert_eq!(t.shape().row_lengths(), &[] as &[usize]);
    }

    #[test]
    fn worked_example_shape_and_lookups() {
        let t = worked_example();
        assert_eq!(t.shape().row_lengths(), &[6, 4, 3, 2, 2]);
        assert!(t.contains(13));
        assert!(!t.contains(7));
        assert_eq!(t.position(13), Some(BoxCoord::new(2, 1)));
        assert_eq!(t.transpose().transpose(), t);
    }

    #[test]
    fn validation_errors() {
        assert_eq!(
            Tableau::from_rows(vec![vec![1, 2], vec![3, 4, 5]]),
            Err(TableauError::ShapeNotFerrers {
                row: 1,
                len: 3,
                prev: 2
            })
        );
        assert!(matches!(
            Tableau::from_rows(vec![vec![1], vec![], vec![2]]),
            Err(TableauError::ShapeNotFerrers { row: 1, .. })
        ));
        assert_eq!(
            Tableau::from_rows(vec![vec![1, 3, 2]]),
            Err(TableauError::RowNotIncreasing { row: 0, col: 2 })
        );
        assert_eq!(
            Tableau::from_rows(vec![vec![2, 3], vec![1]]),
            Err(TableauError::ColumnNotIncreasing { row: 1, col: 0 })
        );
        assert_eq!(
            Tableau::from_rows(vec![vec![1, 3], vec![3]]),
            Err(TableauError::DuplicateLabel {
                label: 3,
                at: BoxCoord::new(1, 0)
            })
        );
        assert_eq!(
            Tableau::from_rows(vec![vec![1, 5], vec![2], vec![5]]),
            Err(TableauError::DuplicateLabel {
                label: 5,
                at: BoxCoord::new(2, 0)
            })
        );
    }

    #[test]
    fn small_lookups() {
        let t = Tableau::from_rows(vec![vec![1, 3], vec![2]]).unwrap();
        assert_eq!(t.shape().row_lengths(), &[2, 1]);
        assert_eq!(t.get(BoxCoord::new(1, 1)), None);
        assert_eq!(t.get(BoxCoord::new(0, 1)), Some(3));
        assert_eq!(t.entries(), vec![1, 2, 3]);
        assert_eq!(
            t.transpose(),
            Tableau::from_rows(vec![vec![1, 2], vec![3]]).unwrap()
        );
        assert_eq!(t.transpose().shape(), t.shape().conjugate());
    }

    #[test]
    fn addable_boxes_of_staircase() {
        let s = Shape::new(vec![3, 1]).unwrap();
        assert_eq!(
            s.addable_boxes(),
            vec![
                BoxCoord::new(0, 3),
                BoxCoord::new(1, 1),
                BoxCoord::new(2, 0)
            ]
        );
        assert!(Shape::new(vec![1, 2]).is_none());
        assert!(Shape::new(vec![2, 0]).is_none());
    }

    #[test]
    fn assignments_extend_rows() {
        let t = Tableau::from_rows(vec![vec![2, 3]]).unwrap();
        let out = t
            .with_assignments(&[
                (BoxCoord::new(0, 3), 4),
                (BoxCoord::new(0, 2), 3),
                (BoxCoord::new(0, 1), 2),
                (BoxCoord::new(0, 0), 1),
            ])
            .unwrap();
        assert_eq!(out.rows(), &[vec![1, 2, 3, 4]]);
        assert!(t.with_assignments(&[(BoxCoord::new(0, 3), 9)]).is_err());
        assert!(t.with_assignments(&[(BoxCoord::new(2, 0), 9)]).is_err());
    }
}
