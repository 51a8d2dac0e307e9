//! Test-only oracles, kept independent of the library's enumeration and
//! validation code.

#![allow(dead_code)]

use itertools::Itertools;

/// Partitions of `n` as weakly decreasing part lists.
pub fn partitions(n: usize) -> Vec<Vec<usize>> {
    fn go(remaining: usize, max: usize, prefix: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if remaining == 0 {
            out.push(prefix.clone());
            return;
        }
        for part in (1..=remaining.min(max)).rev() {
            prefix.push(part);
            go(remaining - part, part, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    go(n, n, &mut Vec::new(), &mut out);
    out
}

fn is_standard(rows: &[Vec<u32>]) -> bool {
    for (r, row) in rows.iter().enumerate() {
        for (c, &v) in row.iter().enumerate() {
            if c > 0 && row[c - 1] >= v {
                return false;
            }
            if r > 0 && rows[r - 1][c] >= v {
                return false;
            }
        }
    }
    true
}

/// Every standard filling of every shape of size `n`, found by trying all
/// `n!` placements of `1..=n` in each shape.
pub fn brute_force_syt(n: usize) -> Vec<Vec<Vec<u32>>> {
    let mut out = Vec::new();
    for shape in partitions(n) {
        for perm in (1..=n as u32).permutations(n) {
            let mut it = perm.into_iter();
            let rows: Vec<Vec<u32>> = shape
                .iter()
                .map(|&len| it.by_ref().take(len).collect())
                .collect();
            if is_standard(&rows) {
                out.push(rows);
            }
        }
    }
    out
}
