//! Upgrading a degeneracy witness: replace each non-degenerate flat by its
//! smallest rich subflat and discard the poor ones, then extract a skew line
//! pair from a 3-flat that is degenerate but not essentially so.

use flatspan::constructions::skew_lines_family;
use flatspan::procedures::{refine_witness, skew_line_witness, RefineOutcome};
use flatspan::scalar::ratio;
use flatspan::{Flat, MultiPointSet, Point};

fn main() {
    // A configuration in P^4: five points on a line inside a plane, three
    // points on a second line, a doubled point, and a stray singleton.
    let line = Flat::span(
        4,
        &[
            Point::from_integers(&[1, 0, 0, 0, 0]).unwrap(),
            Point::from_integers(&[0, 1, 0, 0, 0]).unwrap(),
        ],
    )
    .unwrap();
    let plane = Flat::span(
        4,
        &[
            Point::from_integers(&[1, 0, 0, 0, 0]).unwrap(),
            Point::from_integers(&[0, 1, 0, 0, 0]).unwrap(),
            Point::from_integers(&[0, 0, 1, 0, 0]).unwrap(),
        ],
    )
    .unwrap();
    let line2 = Flat::span(
        4,
        &[
            Point::from_integers(&[0, 0, 1, 0, 0]).unwrap(),
            Point::from_integers(&[0, 0, 0, 1, 0]).unwrap(),
        ],
    )
    .unwrap();
    let mut entries = vec![];
    for t in 0..5 {
        entries.push((Point::from_integers(&[1, t, 0, 0, 0]).unwrap(), 1));
    }
    for t in 1..=3 {
        entries.push((Point::from_integers(&[0, 0, 1, t, 0]).unwrap(), 1));
    }
    entries.push((Point::from_integers(&[0, 0, 0, 0, 1]).unwrap(), 2));
    entries.push((Point::from_integers(&[1, 1, 1, 1, 1]).unwrap(), 1));
    let config = MultiPointSet::new(4, entries).unwrap();

    // The witness covers everything but is sloppy: the plane is not
    // (5/6)-degenerate (its line holds 5 of 5 incident points), and the
    // stray point is too poor to keep.
    let q_hat = Flat::span(4, &[Point::from_integers(&[0, 0, 0, 0, 1]).unwrap()]).unwrap();
    let r_hat = Flat::span(4, &[Point::from_integers(&[1, 1, 1, 1, 1]).unwrap()]).unwrap();
    let gprime = vec![plane.clone(), line2.clone(), q_hat.clone(), r_hat];

    let lambda = Flat::whole_space(4);
    match refine_witness(&lambda, &config, &gprime, &ratio(1, 10), &ratio(5, 6)).unwrap() {
        RefineOutcome::Refined(witness) => {
            println!("refined to {} flats covering weight {}:", witness.flats.len(),
                witness.covered_weight);
            for f in &witness.flats {
                println!("  {f}");
            }
            // The plane collapsed to its heavy line; the stray point is gone.
            assert_eq!(witness.flats, vec![line, line2, q_hat]);
            assert_eq!(witness.covered_weight, 10);
        }
        RefineOutcome::DegenerateBelowK => panic!("the refined flats span the space"),
    }

    // Skew witness extraction: with alpha = 49/64 = (7/8)^2 the whole P^3 is
    // alpha-degenerate for the 12-point two-line set (no plane beats 7 <=
    // (49/64) * 12) but not essentially (7/8)-degenerate (two lines cover all
    // 12 > (7/8) * 12). The procedure then finds two skew lines carrying
    // sqrt(alpha) * w points each.
    let family = skew_lines_family(12).unwrap();
    let whole = Flat::whole_space(3);
    let pair = skew_line_witness(&whole, &family.points, &ratio(49, 64))
        .unwrap()
        .expect("a qualifying pair exists");
    println!("skew witness: {} and {}", pair.0, pair.1);
    assert_eq!(pair, (family.line_a.clone(), family.line_b.clone()));
    assert!(pair.0.meet(&pair.1).unwrap().is_empty());
}
