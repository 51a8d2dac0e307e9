//! The worked example used throughout the tests, benches and CLI docs.

use crate::tableau::Tableau;

/// A six-column tableau whose column trail for 7 and row trail for 8 cross
/// at box (2,1).
pub fn worked_example() -> Tableau {
    Tableau::from_rows(vec![
        vec![1, 3, 5, 9, 12, 16],
        vec![2, 6, 10, 15],
        vec![4, 13, 14],
        vec![11, 18],
        vec![17, 19],
    ])
    .expect("worked example is a tableau")
}

/// `(7 -> T) <- 8` for [`worked_example`].
pub fn worked_example_result() -> Tableau {
    Tableau::from_rows(vec![
        vec![1, 3, 5, 8, 12, 16],
        vec![2, 6, 9, 14, 15],
        vec![4, 10, 13],
        vec![7, 11],
        vec![17, 18],
        vec![19],
    ])
    .expect("worked example result is a tableau")
}
