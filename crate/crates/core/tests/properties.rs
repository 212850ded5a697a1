use std::collections::{BTreeMap, HashSet};

use num_bigint::BigInt;
use proptest::prelude::*;
use tatami::gf::{
    guess_recurrence, invert_transform, series_expand, verify_gf, Polynomial, RationalGF,
    RecurrenceGuess, SeriesPrefix,
};
use tatami::table_io::{column_series, read_table, write_csv, write_json, Column};
use tatami::tiling::legal_placements_at;
use tatami::{
    classify_row, classify_table, count_tilings, crossing_count, enumerate_tilings,
    slide_line_count, transfer_count, ClassMode, Congruence, Count, FloorSpec, TileShape, Tiling,
};

const CASES: u32 = 1000;

fn tile() -> impl Strategy<Value = TileShape> {
    prop::sample::select(vec![(1, 1), (1, 2), (1, 3), (1, 4), (2, 3)])
        .prop_map(|(a, b)| TileShape::new(a, b).unwrap())
}

fn small_floor() -> impl Strategy<Value = FloorSpec> {
    (tile(), 1usize..=5, 1usize..=8).prop_map(|(t, m, n)| FloorSpec::new(m, n, t).unwrap())
}

fn all_tilings(floor: FloorSpec) -> Vec<Tiling> {
    let mut out = Vec::new();
    enumerate_tilings(floor, &mut |t: &Tiling| out.push(t.clone())).unwrap();
    out
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(CASES))]

    #[test]
    fn oracle_agrees_with_enumeration(floor in small_floor()) {
        prop_assert_eq!(transfer_count(floor).unwrap(), count_tilings(floor).unwrap());
    }

    #[test]
    fn enumeration_is_duplicate_free_and_complete(floor in small_floor()) {
        let tilings = all_tilings(floor);
        let distinct: HashSet<_> = tilings.iter().map(|t| t.placements().to_vec()).collect();
        prop_assert_eq!(distinct.len(), tilings.len());
        for t in &tilings {
            prop_assert!(t.is_complete());
            prop_assert_eq!(t.placements().len(), floor.tiles_per_tiling());
        }
    }

    #[test]
    fn row_sums_match_totals(floor in small_floor(), slide in any::<bool>(), inc in any::<bool>()) {
        let mode = if slide { ClassMode::SlideLines } else { ClassMode::Tatami };
        let congruence = if inc { Congruence::Incongruent } else { Congruence::Full };
        let row = classify_row(floor, mode, congruence, None).unwrap();
        prop_assert_eq!(row.row_sum().unwrap(), row.total());
        if !inc {
            prop_assert_eq!(row.total(), count_tilings(floor).unwrap());
        }
    }

    #[test]
    fn random_greedy_fill_stays_legal(floor in small_floor(), choices in prop::collection::vec(any::<bool>(), 64)) {
        // Follow random legal choices at the first empty cell until stuck or full.
        let mut tiling = Tiling::empty(floor);
        let mut step = 0;
        while let Some((x, y)) = tiling.grid().first_empty() {
            let legal = legal_placements_at(tiling.grid(), floor.tile(), x, y).unwrap();
            if legal.is_empty() {
                break;
            }
            let pick = legal[usize::from(choices[step % choices.len()]) % legal.len()];
            tiling.push(pick).unwrap();
            step += 1;
        }
        let area = floor.tile().area();
        prop_assert_eq!(tiling.grid().occupied_cells(), tiling.placements().len() * area);
        if tiling.is_complete() {
            prop_assert!(all_tilings(floor).contains(&tiling));
        }
    }

    #[test]
    fn series_prefixes_are_consistent(
        num in prop::collection::vec(-9i64..=9, 1..5),
        den_tail in prop::collection::vec(-3i64..=3, 0..4),
        sign in prop::bool::ANY,
        short in 1usize..20,
        extra in 0usize..20,
    ) {
        let mut den = vec![if sign { 1 } else { -1 }];
        den.extend(den_tail);
        let gf = RationalGF::new(Polynomial::from_i64s(&num), Polynomial::from_i64s(&den)).unwrap();
        let a = series_expand(&gf, short).unwrap();
        let b = series_expand(&gf, short + extra).unwrap();
        prop_assert_eq!(&a.values[..], &b.values[..short]);
        // Multiplying back by the denominator recovers the numerator.
        let back = (Polynomial::new(b.values.clone()) * Polynomial::from_i64s(&den))
            .truncate(short + extra);
        prop_assert_eq!(back, Polynomial::from_i64s(&num).truncate(short + extra));
    }

    #[test]
    fn recurrences_round_trip(
        coeffs in prop::collection::vec(-3i64..=3, 1..=3),
        init in prop::collection::vec(-5i64..=5, 3),
        offset in 0usize..4,
    ) {
        let d = coeffs.len();
        let mut a: Vec<BigInt> = init[..d].iter().map(|&v| BigInt::from(v)).collect();
        while a.len() < 16 {
            let k = a.len();
            let next = (1..=d).map(|j| BigInt::from(coeffs[j - 1]) * &a[k - j]).sum();
            a.push(next);
        }
        let observed = SeriesPrefix::new(offset, a);
        match guess_recurrence(&observed, 3) {
            RecurrenceGuess::Found { coefficients, gf } => {
                prop_assert!(coefficients.len() <= d);
                prop_assert!(verify_gf("fit", &gf, &observed).is_match());
            }
            other => prop_assert!(false, "no recurrence found: {:?}", other),
        }
    }

    #[test]
    fn invert_transform_matches_enumeration(m in 1usize..=5, n in 1usize..=7) {
        let tile = TileShape::new(1, 2).unwrap();
        let mut hat = BTreeMap::new();
        for w in 1..=m {
            let row = classify_row(FloorSpec::new(w, n, tile).unwrap(), ClassMode::SlideLines, Congruence::Full, None).unwrap();
            hat.insert((n, w), row.get(0));
        }
        let full = classify_row(FloorSpec::new(m, n, tile).unwrap(), ClassMode::SlideLines, Congruence::Full, None).unwrap();
        prop_assert_eq!(invert_transform(&hat, m, n, None).unwrap(), full.total());
        for s in 0..m {
            prop_assert_eq!(invert_transform(&hat, m, n, Some(s + 1)).unwrap(), full.get(s));
        }
    }

    #[test]
    fn tables_round_trip_through_csv_and_json(t in tile(), m in 1usize..=4, hi in 1usize..=7, slide in any::<bool>()) {
        let mode = if slide { ClassMode::SlideLines } else { ClassMode::Tatami };
        let table = classify_table(m, t, 1..=hi, mode, Congruence::Full).unwrap();
        for text in [write_csv(&table, 1..=hi), write_json(&table, 1..=hi)] {
            let rows = read_table(&text).unwrap();
            prop_assert_eq!(rows.len(), hi);
            for r in &rows {
                let floor = FloorSpec::new(m, r.n, t).unwrap();
                prop_assert_eq!(r.total, count_tilings(floor).unwrap());
                prop_assert_eq!(r.classes.iter().sum::<Count>(), r.total);
            }
            let totals = column_series(&rows, Column::Total, 1, None);
            prop_assert_eq!(totals.len(), hi);
        }
    }
}

#[test]
fn statistics_are_bounded_by_interior_structure() {
    for (a, b) in [(1, 2), (1, 3), (2, 3)] {
        let t = TileShape::new(a, b).unwrap();
        for m in 1..=4 {
            for n in 1..=8 {
                let floor = FloorSpec::new(m, n, t).unwrap();
                for tiling in all_tilings(floor) {
                    let interior = (m - 1) * (n - 1);
                    assert!(crossing_count(&tiling).unwrap() <= interior);
                    assert!(slide_line_count(&tiling).unwrap() < m);
                }
            }
        }
    }
}
