//! The built-in extremal families and the exact counts that make them
//! interesting.

use flatspan::constructions::{
    flat_plus_line_family, k_lines_family, planes_through_common_line, skew_lines_family,
};
use flatspan::incidence::spanned_flats;
use flatspan::pointset::Configuration;

fn main() {
    // Two skew lines, n/2 points each: exactly n spanned planes (every
    // point of one line joined with the other line), max richness n/2 + 1.
    let skew = skew_lines_family(12).unwrap();
    let planes = spanned_flats(&skew.points, 2).unwrap();
    println!(
        "skew_lines(12): {} planes, max {} points on one",
        planes.len(),
        planes.max_weight()
    );
    assert_eq!((planes.len(), planes.max_weight()), (12, 7));

    // A (k-1)-flat plus a disjoint line. Every spanned k-flat must swallow
    // one of the two parts, which caps the count at n/2 + C(n/2, k-1).
    let fpl = flat_plus_line_family(12, 3, 4).unwrap();
    let flats = spanned_flats(&fpl.points, 3).unwrap();
    let containing_gamma = flats
        .iter()
        .filter(|(f, _)| f.contains_flat(&fpl.gamma))
        .count();
    let containing_line = flats
        .iter()
        .filter(|(f, _)| f.contains_flat(&fpl.line))
        .count();
    println!(
        "flat_plus_line(12, k=3): {} spanned 3-flats, {} over the plane, {} over the line",
        flats.len(),
        containing_gamma,
        containing_line
    );
    assert_eq!(flats.len(), 21); // 6 + C(6,2)
    assert!(flats
        .iter()
        .all(|(f, _)| f.contains_flat(&fpl.gamma) || f.contains_flat(&fpl.line)));

    // k pairwise skew lines: any two of the three lines span a 3-flat with
    // 8 of the 12 points, beating the n/2 + 1 ceiling of a single plane.
    let kl = k_lines_family(12, 3, 5).unwrap();
    let flats = spanned_flats(&kl.points, 3).unwrap();
    println!(
        "k_lines(12, k=3): {} spanned 3-flats, max richness {}",
        flats.len(),
        flats.max_weight()
    );
    assert_eq!(flats.max_weight(), 8);

    // The negative control: n collinear points span no plane at all, yet
    // every plane through their line is n-rich. Rich flats only become
    // countable once spanning (or a degeneracy condition) is required.
    let family = planes_through_common_line(8).unwrap();
    let spanned = spanned_flats(&family.points, 2).unwrap();
    println!(
        "planes_through_common_line(8): {} spanned planes",
        spanned.len()
    );
    assert!(spanned.is_empty());
    for plane in family.sample_planes(3) {
        assert_eq!(family.points.ambient_dim(), plane.ambient_dim());
        assert_eq!(
            family.points.incident_weight(&plane),
            family.points.total_weight()
        );
    }
    println!("yet every sampled plane through the line holds all 8 points");
}
