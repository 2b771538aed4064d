//! Essential dimension: the cheapest way to cover a configuration with
//! flats of dimension >= 1, plus the g-profile and Beck-style products.

use flatspan::constructions::{grid, skew_lines};
use flatspan::essdim::{beck_lower_profile, cover_max_points, essential_dimension, g_profile};
use flatspan::{Point, PointSet};

fn main() {
    // Collinear points: one line suffices, K = 1.
    let collinear = PointSet::new(
        3,
        (0..5)
            .map(|t| Point::from_integers(&[1, t, 0, 0]).unwrap())
            .collect(),
    )
    .unwrap();
    let (k, witness) = essential_dimension(&collinear).unwrap();
    println!("5 collinear points: K = {k}, witness {} flat(s)", witness.flats.len());
    assert_eq!(k, 1);

    // The 3x3 grid is planar: a single 2-flat beats any pair of lines.
    let grid = grid(3, 2).unwrap();
    let (k, witness) = essential_dimension(&grid).unwrap();
    println!("3x3 grid: K = {k}, witness dims {:?}",
        witness.flats.iter().map(|f| f.dim()).collect::<Vec<_>>());
    assert_eq!(k, 2);

    // Two skew lines with 3 points each: two lines, total dimension 2, and
    // nothing cheaper exists because the set is not coplanar.
    let skew = skew_lines(6).unwrap();
    let (k, witness) = essential_dimension(&skew).unwrap();
    println!("two skew lines: K = {k}, witness dims {:?}",
        witness.flats.iter().map(|f| f.dim()).collect::<Vec<_>>());
    assert_eq!(k, 2);
    assert_eq!(witness.flats.len(), 2);

    // cover_max_points(S, t): most points any total-dimension-t family
    // covers. Monotone in t, and equal to |S| exactly at t = K(S).
    let caps: Vec<u64> = (0..=3).map(|t| cover_max_points(&skew, t)).collect();
    println!("skew 3+3 cover_max by budget: {caps:?}");
    assert_eq!(caps, vec![0, 3, 6, 6]);

    // The g-profile feeds the Beck-style lower bound: g_i is the most weight
    // covered by flats of total dimension <= i (g_0: a single point), and the
    // products prod(n - g_i) lower-bound spanned flat counts up to constants.
    let g = g_profile(&grid, 2);
    let beck = beck_lower_profile(&grid, 2);
    println!("grid g-profile {:?}, beck products {:?}", g.values, beck);
    assert_eq!(g.values, vec![1, 3, 9]);
}
