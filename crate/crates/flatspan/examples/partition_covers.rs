//! Partitioning a cover of total dimension <= k into two halves whose joins
//! both stay below dimension k, and the two covers where that must fail.

use flatspan::constructions::{flat_plus_line_family, k_lines_family};
use flatspan::essdim::Cover;
use flatspan::procedures::{partition_cover, PartitionResult};
use flatspan::Flat;

fn main() {
    // A line plus a disjoint plane in P^4, total dimension 3 = k. The greedy
    // split puts the line in one half and the plane in the other; both joins
    // have dimension <= 2.
    let fpl = flat_plus_line_family(12, 3, 4).unwrap();
    let cover = Cover::from_flats(vec![fpl.gamma.clone(), fpl.line.clone()]);
    match partition_cover(&cover, 3).unwrap() {
        PartitionResult::Partitioned { g1, g2 } => {
            println!(
                "line + plane split: g1 dims {:?}, g2 dims {:?}",
                g1.flats.iter().map(Flat::dim).collect::<Vec<_>>(),
                g2.flats.iter().map(Flat::dim).collect::<Vec<_>>()
            );
        }
        other => panic!("expected a partition, got {other:?}"),
    }

    // Three pairwise skew lines with k = 3 odd: any two of the lines already
    // join to dimension 3 > k - 1, so no split works. This is the only
    // all-lines obstruction.
    let kl = k_lines_family(6, 3, 5).unwrap();
    let cover = Cover::from_flats(kl.lines.clone());
    let outcome = partition_cover(&cover, 3).unwrap();
    println!("three skew lines at k=3: {outcome:?}");
    assert_eq!(outcome, PartitionResult::AllLinesOddK);

    // A single k-flat is the other unsplittable cover: its only "half" is
    // itself, at dimension k.
    let plane = Flat::whole_space(2);
    let outcome = partition_cover(&Cover::from_flats(vec![plane]), 2).unwrap();
    println!("single 2-flat at k=2: {outcome:?}");
    assert_eq!(outcome, PartitionResult::SingleKFlat);

    // Covers over the dimension budget are rejected outright.
    let big = Flat::whole_space(3);
    let err = partition_cover(&Cover::from_flats(vec![big]), 2).unwrap_err();
    println!("3-flat against k=2: {err}");
}
