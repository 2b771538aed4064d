//! Property tests: structural invariants under random inputs. Case counts
//! stay modest because every operation runs in exact big-rational arithmetic.

use flatspan::essdim::{cover_max_points, essential_dimension};
use flatspan::incidence::{
    count_independent_lists, is_alpha_degenerate, is_essentially_alpha_degenerate,
    project_configuration, rich_profile, spanned_flats, spanned_flats_incremental,
};
use flatspan::scalar::{int, ratio};
use flatspan::{Configuration, Flat, MultiPointSet, Point, PointSet};
use proptest::prelude::*;
use std::collections::BTreeSet;

fn arb_point(ambient: usize) -> impl Strategy<Value = Point> {
    prop::collection::vec(-4i64..=4, ambient + 1)
        .prop_filter("nonzero vector", |v| v.iter().any(|&c| c != 0))
        .prop_map(|v| Point::from_integers(&v).unwrap())
}

fn arb_point_set(ambient: usize, max: usize) -> impl Strategy<Value = PointSet> {
    prop::collection::btree_set(arb_point(ambient), 1..=max)
        .prop_map(move |set| PointSet::new(ambient, set.into_iter().collect()).unwrap())
}

fn arb_multiset(ambient: usize, max: usize) -> impl Strategy<Value = MultiPointSet> {
    prop::collection::btree_map(arb_point(ambient), 1u64..=3, 1..=max)
        .prop_map(move |map| MultiPointSet::new(ambient, map.into_iter().collect()).unwrap())
}

fn arb_flat(ambient: usize) -> impl Strategy<Value = Flat> {
    prop::collection::vec(arb_point(ambient), 1..=3)
        .prop_map(move |pts| Flat::span(ambient, &pts).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn point_canonicalization_is_scale_free(
        coords in prop::collection::vec(-4i64..=4, 4)
            .prop_filter("nonzero", |v| v.iter().any(|&c| c != 0)),
        num in 1i64..=3,
        den in 1i64..=3,
        sign in prop::bool::ANY,
    ) {
        let p = Point::from_integers(&coords).unwrap();
        let scale = ratio(if sign { -num } else { num }, den);
        let scaled: Vec<_> = coords.iter().map(|&c| int(c) * &scale).collect();
        let q = Point::new(scaled).unwrap();
        prop_assert_eq!(p, q);
    }

    #[test]
    fn span_ignores_order_and_scale(points in prop::collection::vec(arb_point(3), 1..=4)) {
        let a = Flat::span(3, &points).unwrap();
        let mut reversed = points.clone();
        reversed.reverse();
        let b = Flat::span(3, &reversed).unwrap();
        prop_assert_eq!(&a, &b);
        // Spanning again from the canonical basis points reproduces the flat.
        let c = Flat::span(3, &a.basis_points()).unwrap();
        prop_assert_eq!(&a, &c);
    }

    #[test]
    fn join_meet_dimension_identity(a in arb_flat(3), b in arb_flat(3)) {
        let join = a.join(&b).unwrap();
        let meet = a.meet(&b).unwrap();
        prop_assert_eq!(join.dim() + meet.dim(), a.dim() + b.dim());
        // The meet lies in both, the join contains both.
        prop_assert!(join.contains_flat(&a) && join.contains_flat(&b));
        prop_assert!(a.contains_flat(&meet) && b.contains_flat(&meet));
    }

    #[test]
    fn join_family_dimension_bound(flats in prop::collection::vec(arb_flat(4), 1..=4)) {
        let mut join = Flat::empty(4);
        let mut sum = 0i64;
        for f in &flats {
            join = join.join(f).unwrap();
            sum += f.dim();
        }
        prop_assert!(join.dim() <= flats.len() as i64 - 1 + sum);
    }

    #[test]
    fn projection_classes_match_joins(set in arb_point_set(3, 6), center_pt in arb_point(3)) {
        let center = Flat::span(3, &[center_pt]).unwrap();
        let (image, dropped) = project_configuration(&center, &set);
        prop_assert_eq!(image.total_weight() + dropped, set.total_weight());

        // Two surviving points share an image exactly when they span the
        // same flat with the center.
        let survivors: Vec<&Point> = set
            .points()
            .iter()
            .filter(|p| !center.contains(p))
            .collect();
        let mut joins = BTreeSet::new();
        for p in &survivors {
            joins.insert(center.join_point(p).unwrap());
        }
        prop_assert_eq!(joins.len(), image.support_len());
    }

    #[test]
    fn essential_implies_plain_for_k2(
        config in arb_multiset(3, 6),
        num in 1i64..=9,
    ) {
        let alpha = ratio(num, 10);
        let flats = spanned_flats(&config, 2).unwrap();
        for (flat, _) in flats.iter() {
            if is_essentially_alpha_degenerate(flat, &config, &alpha).unwrap() {
                prop_assert!(is_alpha_degenerate(flat, &config, &alpha).unwrap());
            }
        }
    }

    #[test]
    fn essential_implies_plain_for_lines_on_sets(
        set in arb_point_set(2, 7),
        num in 5i64..=9,
    ) {
        // For k = 1 the implication needs distinct points and alpha >= 1/2.
        let alpha = ratio(num, 10);
        let flats = spanned_flats(&set, 1).unwrap();
        for (flat, _) in flats.iter() {
            if is_essentially_alpha_degenerate(flat, &set, &alpha).unwrap() {
                prop_assert!(is_alpha_degenerate(flat, &set, &alpha).unwrap());
            }
        }
    }

    #[test]
    fn rich_profile_is_monotone(set in arb_point_set(3, 7)) {
        let flats = spanned_flats(&set, 1).unwrap();
        let profile = rich_profile(&flats, &[0, 1, 2, 3, 4, 5]);
        for pair in profile.rows.windows(2) {
            prop_assert!(pair[0].1 >= pair[1].1);
        }
    }

    #[test]
    fn singleton_lists_count_total_weight(config in arb_multiset(2, 5)) {
        prop_assert_eq!(count_independent_lists(&config, 0), config.total_weight() as u128);
    }

    #[test]
    fn enumeration_routes_agree(config in arb_multiset(3, 6), k in 1usize..=2) {
        let subset = spanned_flats(&config, k).unwrap();
        let incremental = spanned_flats_incremental(&config, k).unwrap();
        prop_assert_eq!(subset, incremental);
    }

    #[test]
    fn cover_max_is_monotone_and_complete(set in arb_point_set(3, 6)) {
        let caps: Vec<u64> = (0..=3).map(|t| cover_max_points(&set, t)).collect();
        for pair in caps.windows(2) {
            prop_assert!(pair[0] <= pair[1]);
        }
        let (k, witness) = essential_dimension(&set).unwrap();
        prop_assert_eq!(cover_max_points(&set, k), set.total_weight());
        prop_assert!(witness.covers(&set));
        prop_assert_eq!(witness.total_dim, k);
    }

    #[test]
    fn membership_is_join_fixpoint(flat in arb_flat(3), p in arb_point(3)) {
        let joined = flat.join_point(&p).unwrap();
        if flat.contains(&p) {
            prop_assert_eq!(&joined, &flat);
        } else {
            prop_assert_eq!(joined.dim(), flat.dim() + 1);
        }
    }
}
