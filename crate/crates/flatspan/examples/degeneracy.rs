//! The three flat predicates: alpha-degenerate, essentially-alpha-degenerate,
//! gamma-saturated, and the strict gap between the first two.

use flatspan::constructions::skew_lines;
use flatspan::incidence::{
    is_alpha_degenerate, is_essentially_alpha_degenerate, is_gamma_saturated,
    max_subflat_coverage, spanned_flats,
};
use flatspan::scalar::ratio;
use flatspan::Flat;

fn main() {
    let set = skew_lines(12).unwrap();
    let alpha = ratio(3, 4);

    // Each spanned plane holds 7 points, 6 of them on one line. A single
    // (k-1)-subflat carrying 6 > (3/4) * 7 points: not degenerate.
    let planes = spanned_flats(&set, 2).unwrap();
    for (plane, inc) in planes.iter().take(1) {
        let (subflat, covered) = max_subflat_coverage(plane, &set).unwrap();
        println!(
            "plane with {} points: heaviest subflat {subflat} covers {covered}",
            inc.weight
        );
        assert!(!is_alpha_degenerate(plane, &set, &alpha).unwrap());
    }

    // The whole P^3 is spanned too, and there the two notions split. No
    // single plane holds more than 7 of the 12 points, so it is
    // (3/4)-degenerate. But the 12 points cover with two *lines* of total
    // dimension 2 <= k - 1, so it is not *essentially* (3/4)-degenerate:
    // a low-essential-dimension subset carries everything.
    let whole = Flat::whole_space(3);
    let plain = is_alpha_degenerate(&whole, &set, &alpha).unwrap();
    let essential = is_essentially_alpha_degenerate(&whole, &set, &alpha).unwrap();
    println!("whole space: degenerate = {plain}, essentially = {essential}");
    assert!(plain && !essential);

    // Saturation asks the opposite question: does the restriction span many
    // (k-1)-flats? The 12 points span 12 planes >= (1/144) * 12^3.
    assert!(is_gamma_saturated(&whole, &set, &ratio(1, 144)).unwrap());
    assert!(!is_gamma_saturated(&whole, &set, &ratio(1, 100)).unwrap());
    println!("whole space is (1/144)-saturated but not (1/100)-saturated");
}
