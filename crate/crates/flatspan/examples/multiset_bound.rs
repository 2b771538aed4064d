//! The rich degenerate flat bound for weighted configurations: at most
//! (1 - alpha)^(-k) n^(k+1) / r^(k+1) spanned k-flats are both r-rich and
//! alpha-degenerate, checked in exact rational arithmetic.

use flatspan::incidence::count_independent_lists;
use flatspan::scalar::ratio;
use flatspan::suites::verify_rich_degenerate_bound;
use flatspan::{Configuration, MultiPointSet, Point};

fn main() {
    // A weighted planar configuration: a heavy point (weight 4) on a line
    // with two light ones, plus two generic points.
    let config = MultiPointSet::new(
        2,
        vec![
            (Point::from_integers(&[1, 0, 0]).unwrap(), 4),
            (Point::from_integers(&[1, 1, 0]).unwrap(), 1),
            (Point::from_integers(&[1, 2, 0]).unwrap(), 1),
            (Point::from_integers(&[1, 0, 1]).unwrap(), 1),
            (Point::from_integers(&[1, 1, 2]).unwrap(), 1),
        ],
    )
    .unwrap();
    println!(
        "weighted configuration: {} support points, total weight {}",
        config.support_len(),
        config.total_weight()
    );

    // Ordered independent lists are what the bound actually counts: there
    // are n^(k+1) lists overall, and each rich degenerate flat soaks up at
    // least (1 - alpha)^k r^(k+1) of them.
    let singles = count_independent_lists(&config, 0);
    let pairs = count_independent_lists(&config, 1);
    println!("independent 1-lists {singles}, 2-lists {pairs}");
    assert_eq!(singles, 8); // n itself

    // The collinear triple carries weight 6 with its heaviest point at 4,
    // so the line is 5-rich and (3/4)-degenerate; both bounds hold exactly.
    let report = verify_rich_degenerate_bound(&config, 1, 5, &ratio(3, 4)).unwrap();
    assert!(report.passed());
    assert_eq!(report.observations["rich_degenerate_count"], "1");
    println!(
        "k=1, r=5, alpha=3/4: {} rich degenerate line(s), bound {}",
        report.observations["rich_degenerate_count"], report.observations["outer_bound"]
    );

    // Raising r past the line's weight empties the count.
    let report = verify_rich_degenerate_bound(&config, 1, 7, &ratio(3, 4)).unwrap();
    assert!(report.passed());
    assert_eq!(report.observations["rich_degenerate_count"], "0");
    println!("k=1, r=7: no line is rich enough");
    println!("{}", report.to_json());
}
