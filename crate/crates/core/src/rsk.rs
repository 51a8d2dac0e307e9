//! Robinson–Schensted correspondence by iterated row insertion.

use itertools::Itertools;
use thiserror::Error;

use crate::insertion::row_insert;
use crate::tableau::{Label, Tableau};

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum RskError {
    #[error("label {0} occurs more than once in the word")]
    DuplicateInWord(Label),
}

/// Returns `(P, Q)`: `P` is the row insertion of the word from left to right,
/// `Q` records in which step each box was created.
pub fn rsk(word: &[Label]) -> Result<(Tableau, Tableau), RskError> {
    let mut p = Tableau::empty();
    let mut q = Tableau::empty();
    for (step, &w) in word.iter().enumerate() {
        let (next, trail) = row_insert(&p, w).map_err(|_| RskError::DuplicateInWord(w))?;
        q = q
            .with_assignments(&[(trail.empty_box(), step as Label + 1)])
            .expect("recording tableau grows at an outer corner");
        p = next;
    }
    Ok((p, q))
}

/// Checks that reversing a permutation of `1..=n` transposes its insertion
/// tableau, over all `n!` permutations.
pub fn reversal_check(n: usize) -> bool {
    reversal_counterexample(n).is_none()
}

/// First permutation (in lexicographic order) whose reversal does not
/// transpose the insertion tableau.
pub fn reversal_counterexample(n: usize) -> Option<Vec<Label>> {
    (1..=n as Label).permutations(n).find(|w| {
        let (p, _) = rsk(w).expect("permutation has distinct entries");
        let reversed: Vec<Label> = w.iter().rev().copied().collect();
        let (p_rev, _) = rsk(&reversed).expect("permutation has distinct entries");
        p_rev != p.transpose()
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn tab(rows: &[&[Label]]) -> Tableau {
        Tableau::from_rows(rows.iter().map(|r| r.to_vec()).collect()).unwrap()
    }

    #[test]
    fn small_words() {
        assert_eq!(rsk(&[]).unwrap(), (Tableau::empty(), Tableau::empty()));
        assert_eq!(
            rsk(&[1, 2, 3]).unwrap(),
            (tab(&[&[1, 2, 3]]), tab(&[&[1, 2, 3]]))
        );
        assert_eq!(
            rsk(&[3, 1, 2]).unwrap(),
            (tab(&[&[1, 2], &[3]]), tab(&[&[1, 3], &[2]]))
        );
        assert_eq!(rsk(&[2, 1, 3]).unwrap().0, tab(&[&[1, 3], &[2]]));
        assert_eq!(rsk(&[4, 1, 4]), Err(RskError::DuplicateInWord(4)));
    }

    #[test]
    fn reversal_small() {
        for n in 0..=5 {
            assert!(reversal_check(n), "n = {n}");
        }
    }

    #[test]
    fn shapes_agree() {
        let (p, q) = rsk(&[5, 2, 7, 1, 3, 6, 4]).unwrap();
        assert_eq!(p.shape(), q.shape());
        assert_eq!(q.entries(), (1..=7).collect::<Vec<_>>());
    }
}
