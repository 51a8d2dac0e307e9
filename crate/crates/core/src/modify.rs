//! Randomized check of the row-modification property of bumping: if `x`
//! bumps `y` from row `L`, it still bumps `y` from any strictly increasing row
//! `L'` that keeps `y` in place and does not increase anything left of `y`.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::insertion::row_insert_into_row;
use crate::tableau::Label;

/// Default seed for [`check_modify_lemma`].
pub const DEFAULT_SEED: u64 = 0x5eed_7ab1;

/// Largest decrement applied to an element left of the bumped one.
const MAX_DECREMENT: Label = 6;
/// Largest gap between consecutive regenerated elements right of it.
const MAX_GAP: Label = 5;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModifyInstance {
    pub row: Vec<Label>,
    pub x: Label,
    pub bumped: Label,
    pub modified: Vec<Label>,
}

impl ModifyInstance {
    /// Whether inserting `x` into the modified row bumps the same element.
    pub fn holds(&self) -> bool {
        matches!(row_insert_into_row(&self.modified, self.x), Ok((_, Some(b))) if b == self.bumped)
    }
}

/// Produces a random admissible modification of `row` for insertion of `x`.
/// Returns `None` when `x` does not bump anything from `row`.
///
/// Elements left of the bumped one are lowered by random amounts (respecting
/// strict increase and staying naturals); elements right of it are replaced
/// by a fresh increasing run above it.
pub fn modify_row<R: Rng + ?Sized>(row: &[Label], x: Label, rng: &mut R) -> Option<ModifyInstance> {
    let (_, bumped) = row_insert_into_row(row, x).ok()?;
    let bumped = bumped?;
    let pos = row.partition_point(|&v| v < bumped);
    let mut modified = row.to_vec();

    let mut ceiling = bumped;
    for k in (0..pos).rev() {
        // Leave room for the k smaller naturals still to be placed.
        let upper = row[k].min(ceiling - 1);
        let lower = upper.saturating_sub(MAX_DECREMENT).max(k as Label);
        let v = rng.random_range(lower..=upper);
        modified[k] = v;
        ceiling = v;
    }
    let mut prev = bumped;
    for slot in modified.iter_mut().skip(pos + 1) {
        prev += rng.random_range(1..=MAX_GAP);
        *slot = prev;
    }
    Some(ModifyInstance {
        row: row.to_vec(),
        x,
        bumped,
        modified,
    })
}

/// A random strictly increasing row with an insertion value that bumps.
pub fn random_instance<R: Rng + ?Sized>(rng: &mut R) -> ModifyInstance {
    loop {
        let len = rng.random_range(1..=9);
        let mut row = Vec::with_capacity(len);
        let mut v: Label = rng.random_range(0..4);
        for _ in 0..len {
            row.push(v);
            v += rng.random_range(1..=4);
        }
        let max = *row.last().expect("non-empty");
        let x = rng.random_range(0..=max);
        if row.binary_search(&x).is_ok() {
            continue;
        }
        if let Some(instance) = modify_row(&row, x, rng) {
            return instance;
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModifyReport {
    pub seed: u64,
    pub instances: usize,
    pub failures: usize,
    pub first_failure: Option<ModifyInstance>,
}

/// Runs `instances` random modifications from `seed`.
pub fn check_modify_lemma(instances: usize, seed: u64) -> ModifyReport {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut failures = 0;
    let mut first_failure = None;
    for _ in 0..instances {
        let inst = random_instance(&mut rng);
        if !inst.holds() {
            failures += 1;
            first_failure.get_or_insert(inst);
        }
    }
    ModifyReport {
        seed,
        instances,
        failures,
        first_failure,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn modifications_are_admissible() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for _ in 0..2000 {
            let inst = random_instance(&mut rng);
            let pos = inst.row.iter().position(|&v| v == inst.bumped).unwrap();
            assert_eq!(inst.modified.len(), inst.row.len());
            assert_eq!(inst.modified[pos], inst.bumped);
            assert!(inst.modified.windows(2).all(|w| w[0] < w[1]));
            assert!(inst.modified[..pos]
                .iter()
                .zip(&inst.row[..pos])
                .all(|(m, o)| m <= o));
            assert!(!inst.modified.contains(&inst.x));
        }
    }

    #[test]
    fn no_bump_no_instance() {
        let mut rng = ChaCha8Rng::seed_from_u64(0);
        assert_eq!(modify_row(&[1, 2, 3], 9, &mut rng), None);
        assert_eq!(modify_row(&[], 9, &mut rng), None);
    }

    #[test]
    fn seeded_runs_are_reproducible() {
        assert_eq!(check_modify_lemma(200, 11), check_modify_lemma(200, 11));
        assert_eq!(check_modify_lemma(500, DEFAULT_SEED).failures, 0);
    }
}
