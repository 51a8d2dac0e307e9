mod common;

use std::collections::BTreeSet;

use proptest::prelude::*;
use proptest::sample::Index;

use tableau_trails::{
    column_insert, commute_check, enumerate_syt, fused_insert, row_insert, slide_trail, BoxCoord,
    Label, Tableau,
};

/// Random growth by outer corners, then relabelling of `1..=n` together with
/// `x` and `y` into a gapped increasing sequence.
fn build(corners: &[Index], gaps: &[Label], rx: Index, ry: Index) -> (Tableau, Label, Label) {
    let mut rows: Vec<Vec<Label>> = Vec::new();
    for (k, pick) in corners.iter().enumerate() {
        let mut addable: Vec<usize> = (0..rows.len())
            .filter(|&r| r == 0 || rows[r - 1].len() > rows[r].len())
            .collect();
        addable.push(rows.len());
        let r = addable[pick.index(addable.len())];
        if r == rows.len() {
            rows.push(Vec::new());
        }
        rows[r].push(k as Label + 1);
    }
    let n = corners.len();
    let values: Vec<Label> = gaps[..n + 2]
        .iter()
        .scan(0, |acc, g| {
            *acc += g;
            Some(*acc)
        })
        .collect();
    let ix = rx.index(n + 2);
    let mut iy = ry.index(n + 1);
    if iy >= ix {
        iy += 1;
    }
    let rest: Vec<Label> = (0..n + 2)
        .filter(|&k| k != ix && k != iy)
        .map(|k| values[k])
        .collect();
    let rows = rows
        .into_iter()
        .map(|row| row.into_iter().map(|v| rest[v as usize - 1]).collect())
        .collect();
    (Tableau::from_rows(rows).unwrap(), values[ix], values[iy])
}

fn case() -> impl Strategy<Value = (Tableau, Label, Label)> {
    (
        prop::collection::vec(any::<Index>(), 0..16),
        prop::collection::vec(1..4 as Label, 18),
        any::<Index>(),
        any::<Index>(),
    )
        .prop_map(|(corners, gaps, rx, ry)| build(&corners, &gaps, rx, ry))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(512))]

    #[test]
    fn insertions_commute((t, x, y) in case()) {
        let report = commute_check(&t, x, y).unwrap();
        prop_assert!(report.all_equal, "{}", report.intersection);
        prop_assert_eq!(&report.fused, &report.left);
        prop_assert_eq!(report.fused.len(), t.len() + 2);
    }

    #[test]
    fn sliding_reproduces_insertion((t, x, y) in case()) {
        let (row_out, row_trail) = row_insert(&t, y).unwrap();
        prop_assert_eq!(slide_trail(&t, &row_trail, y).unwrap(), row_out);
        let (col_out, col_trail) = column_insert(x, &t).unwrap();
        prop_assert_eq!(slide_trail(&t, &col_trail, x).unwrap(), col_out);
    }

    #[test]
    fn column_insertion_is_transposed_row_insertion((t, x, _y) in case()) {
        let (col_out, col_trail) = column_insert(x, &t).unwrap();
        let (row_out, row_trail) = row_insert(&t.transpose(), x).unwrap();
        prop_assert_eq!(row_out.transpose(), col_out);
        prop_assert_eq!(row_trail.transposed(), col_trail);
    }

    #[test]
    fn increasing_relabelling_is_invisible((t, x, y) in case(), scale in 1..5 as Label, shift in 0..7 as Label) {
        let f = |v: Label| scale * v + shift;
        let ft = t.relabel(f).unwrap();
        let before = commute_check(&t, x, y).unwrap();
        let after = commute_check(&ft, f(x), f(y)).unwrap();
        prop_assert_eq!(before.intersection.variant(), after.intersection.variant());
        prop_assert_eq!(before.fused.relabel(f).unwrap(), after.fused);
    }

    #[test]
    fn transpose_is_an_involution((t, _x, _y) in case()) {
        let tt = t.transpose();
        prop_assert_eq!(tt.shape(), t.shape().conjugate());
        prop_assert_eq!(tt.transpose(), t.clone());
        for (b, v) in t.boxes() {
            prop_assert_eq!(tt.get(BoxCoord::new(b.col, b.row)), Some(v));
        }
    }

    #[test]
    fn new_box_is_an_outer_corner((t, x, y) in case()) {
        let shape = t.shape();
        let addable = shape.addable_boxes();
        let (_, row_trail) = row_insert(&t, y).unwrap();
        let (_, col_trail) = column_insert(x, &t).unwrap();
        prop_assert!(addable.contains(&row_trail.empty_box()));
        prop_assert!(addable.contains(&col_trail.empty_box()));
        prop_assert!(fused_insert(&t, x, y).unwrap().validate().is_ok());
    }
}

#[test]
fn enumeration_matches_brute_force() {
    for n in 0..=6 {
        let generated: BTreeSet<Vec<Vec<Label>>> =
            enumerate_syt(n).iter().map(|t| t.rows().to_vec()).collect();
        let brute: BTreeSet<Vec<Vec<Label>>> = common::brute_force_syt(n).into_iter().collect();
        assert_eq!(
            generated.len(),
            enumerate_syt(n).len(),
            "duplicates at n={n}"
        );
        assert_eq!(generated, brute, "n={n}");
    }
}
