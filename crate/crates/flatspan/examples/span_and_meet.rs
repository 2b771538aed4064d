//! Canonical points and flats, join/meet, the dimension identity, and
//! projection from a center flat.

use flatspan::incidence::project_configuration;
use flatspan::pointset::Configuration;
use flatspan::{Flat, Point, PointSet};

fn main() {
    // Homogeneous coordinates are scale-free; both spellings canonicalize to
    // the same point.
    let p = Point::from_integers(&[2, 4, 6]).unwrap();
    let q = Point::from_integers(&[1, 2, 3]).unwrap();
    assert_eq!(p, q);
    println!("(2:4:6) canonicalizes to {p}");

    // Two skew lines in P^3.
    let a = Flat::span(
        3,
        &[
            Point::from_integers(&[1, 0, 0, 0]).unwrap(),
            Point::from_integers(&[0, 1, 0, 0]).unwrap(),
        ],
    )
    .unwrap();
    let b = Flat::span(
        3,
        &[
            Point::from_integers(&[0, 0, 1, 0]).unwrap(),
            Point::from_integers(&[0, 0, 0, 1]).unwrap(),
        ],
    )
    .unwrap();

    let join = a.join(&b).unwrap();
    let meet = a.meet(&b).unwrap();
    println!("line a = {a}");
    println!("line b = {b}");
    println!("join dim {}, meet dim {}", join.dim(), meet.dim());

    // dim(join) + dim(meet) = dim(a) + dim(b), here 3 + (-1) = 1 + 1.
    assert_eq!(join.dim() + meet.dim(), a.dim() + b.dim());
    assert!(meet.is_empty());

    // Concurrent lines in P^2 meet in a point instead.
    let l1 = Flat::span(
        2,
        &[
            Point::from_integers(&[1, 0, 0]).unwrap(),
            Point::from_integers(&[0, 1, 0]).unwrap(),
        ],
    )
    .unwrap();
    let l2 = Flat::span(
        2,
        &[
            Point::from_integers(&[1, 0, 0]).unwrap(),
            Point::from_integers(&[0, 0, 1]).unwrap(),
        ],
    )
    .unwrap();
    let meet2 = l1.meet(&l2).unwrap();
    assert_eq!(meet2.dim(), 0);
    println!("concurrent lines meet in {meet2}");

    // Projection from a point center: P^2 -> P^1, distances to the center
    // collapse along the pencil of lines through it.
    let center = Flat::span(2, &[Point::from_integers(&[1, 0, 0]).unwrap()]).unwrap();
    let points = PointSet::new(
        2,
        vec![
            Point::from_integers(&[1, 1, 1]).unwrap(),
            Point::from_integers(&[1, 2, 2]).unwrap(), // same line through center
            Point::from_integers(&[1, 1, 2]).unwrap(),
            Point::from_integers(&[1, 0, 0]).unwrap(), // the center itself: dropped
        ],
    )
    .unwrap();
    let (image, dropped) = project_configuration(&center, &points);
    println!(
        "projection from {center}: {} image points, {} dropped",
        image.support_len(),
        dropped
    );
    for (pt, weight) in image.entries() {
        println!("  image {pt} with weight {weight}");
    }
    assert_eq!(dropped, 1);
    assert_eq!(image.support_len(), 2); // (1,1,1) and (1,2,2) merge
    assert_eq!(image.total_weight(), 3);
}
