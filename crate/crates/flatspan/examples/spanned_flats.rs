//! Spanned-flat inventories: enumerate every k-flat a configuration spans,
//! with exact incidence weights, and tabulate richness.

use flatspan::constructions::{grid, skew_lines};
use flatspan::incidence::{rich_profile, spanned_flats, spanned_flats_incremental};

fn main() {
    let grid = grid(3, 2).unwrap();
    let lines = spanned_flats(&grid, 1).unwrap();
    println!("3x3 grid spans {} lines:", lines.len());
    for (flat, inc) in lines.iter() {
        println!("  {} points on {flat}", inc.weight);
    }
    assert_eq!(lines.len(), 20);

    // Two independent enumeration routes: spans of (k+1)-subsets versus
    // incremental growth from single points. They must agree exactly.
    let incremental = spanned_flats_incremental(&grid, 1).unwrap();
    assert_eq!(lines, incremental);
    println!("incremental oracle agrees on all {} flats", lines.len());

    // Richness profile: how many spanned lines hold at least r points.
    let profile = rich_profile(&lines, &[2, 3, 4]);
    for (r, count) in &profile.rows {
        println!("  r = {r}: {count} rich lines");
    }
    assert_eq!(profile.rows, vec![(2, 20), (3, 8), (4, 0)]);

    // The skew-lines set spans exactly n planes, none richer than n/2 + 1.
    let set = skew_lines(12).unwrap();
    let planes = spanned_flats(&set, 2).unwrap();
    println!(
        "skew_lines(12) spans {} planes, max richness {}",
        planes.len(),
        planes.max_weight()
    );
    assert_eq!(planes.len(), 12);
    assert_eq!(planes.max_weight(), 7);
}
