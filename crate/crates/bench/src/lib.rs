//! Inputs shared by the criterion benches.

use tableau_trails::Tableau;

/// A staircase-like tableau of size roughly `k * (k + 1) / 2` with even labels,
/// leaving odd values free for insertion.
pub fn staircase(k: usize) -> Tableau {
    let rows: Vec<Vec<u32>> = (0..k)
        .map(|r| {
            (0..k - r)
                .map(|c| 2 * ((r + c) * k + c) as u32 + 2)
                .collect()
        })
        .collect();
    Tableau::from_rows(rows).expect("staircase is a tableau")
}
