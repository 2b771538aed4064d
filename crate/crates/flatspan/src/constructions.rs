//! Deterministic generators for the configurations used throughout the test
//! suites: integer grids, points split across skew lines, a flat plus a
//! disjoint line, k pairwise skew lines, collinear points (the negative
//! control for richness without degeneracy), and seeded general-position
//! samples.

use crate::flat::Flat;
use crate::linalg::rank;
use crate::point::Point;
use crate::pointset::{Configuration, PointSet};
use crate::scalar::{int, Scalar};
use itertools::Itertools;
use num::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

/// Hard cap on generated configuration sizes.
pub const MAX_POINTS: usize = 4096;

const GENERAL_POSITION_RETRY_LIMIT: usize = 1000;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ConstructError {
    #[error("requested {requested} points exceeds the cap of {cap}")]
    SizeOverflow { requested: usize, cap: usize },
    #[error("n = {0} must be even")]
    OddN(usize),
    #[error("incompatible parameters: {0}")]
    ParameterConflict(String),
    #[error("n = {n} must be divisible by k = {k}")]
    DivisibilityError { n: usize, k: usize },
    #[error("rejection sampling gave up after {0} attempts per point")]
    RetryLimit(usize),
}

fn unit_point(ambient: usize, axis: usize) -> Point {
    let mut coords = vec![Scalar::zero(); ambient + 1];
    coords[axis] = int(1);
    Point::new(coords).expect("unit vector is nonzero")
}

/// The affine integer grid {0..m-1}^d embedded in `P^d`. Capped at m^d <= 4096.
pub fn grid(m: usize, d: usize) -> Result<PointSet, ConstructError> {
    if m == 0 || d == 0 {
        return Err(ConstructError::ParameterConflict(
            "grid needs m >= 1 and d >= 1".to_string(),
        ));
    }
    let count = m.checked_pow(d as u32).filter(|&c| c <= MAX_POINTS);
    let Some(count) = count else {
        return Err(ConstructError::SizeOverflow {
            requested: m.saturating_pow(d as u32),
            cap: MAX_POINTS,
        });
    };
    let mut points = Vec::with_capacity(count);
    let mut odometer = vec![0usize; d];
    loop {
        let affine: Vec<Scalar> = odometer.iter().map(|&c| int(c as i64)).collect();
        points.push(Point::embed_affine(&affine));
        let mut i = 0;
        loop {
            if i == d {
                let set = PointSet::new(d, points).expect("grid points are distinct");
                return Ok(set);
            }
            odometer[i] += 1;
            if odometer[i] < m {
                break;
            }
            odometer[i] = 0;
            i += 1;
        }
    }
}

/// Two skew lines in `P^3` carrying n/2 points each.
pub struct SkewLinesFamily {
    pub points: PointSet,
    pub line_a: Flat,
    pub line_b: Flat,
}

pub fn skew_lines_family(n: usize) -> Result<SkewLinesFamily, ConstructError> {
    if n % 2 != 0 {
        return Err(ConstructError::OddN(n));
    }
    if n < 4 {
        return Err(ConstructError::ParameterConflict(
            "skew lines need n >= 4".to_string(),
        ));
    }
    if n > MAX_POINTS {
        return Err(ConstructError::SizeOverflow {
            requested: n,
            cap: MAX_POINTS,
        });
    }
    let half = n / 2;
    let mut points = Vec::with_capacity(n);
    // (1 : t : 0 : 0) on the first line, (1 : 0 : t : 1) on the second.
    for t in 1..=half {
        points.push(Point::from_integers(&[1, t as i64, 0, 0]).unwrap());
    }
    for t in 1..=half {
        points.push(Point::from_integers(&[1, 0, t as i64, 1]).unwrap());
    }
    let line_a = Flat::span(
        3,
        &[
            Point::from_integers(&[1, 0, 0, 0]).unwrap(),
            Point::from_integers(&[0, 1, 0, 0]).unwrap(),
        ],
    )
    .unwrap();
    let line_b = Flat::span(
        3,
        &[
            Point::from_integers(&[1, 0, 0, 1]).unwrap(),
            Point::from_integers(&[0, 0, 1, 0]).unwrap(),
        ],
    )
    .unwrap();
    debug_assert_eq!(line_a.meet(&line_b).unwrap().dim(), -1);
    Ok(SkewLinesFamily {
        points: PointSet::new(3, points).expect("parameter points are distinct"),
        line_a,
        line_b,
    })
}

/// n points split evenly across two skew lines in `P^3`.
pub fn skew_lines(n: usize) -> Result<PointSet, ConstructError> {
    skew_lines_family(n).map(|f| f.points)
}

/// A (k-1)-flat holding n/2 points in general position, plus a disjoint line
/// holding the other n/2.
pub struct FlatPlusLineFamily {
    pub points: PointSet,
    /// The (k-1)-flat carrying half the points.
    pub gamma: Flat,
    /// The disjoint line carrying the other half.
    pub line: Flat,
}

pub fn flat_plus_line_family(
    n: usize,
    k: usize,
    d: usize,
) -> Result<FlatPlusLineFamily, ConstructError> {
    if n % 2 != 0 {
        return Err(ConstructError::OddN(n));
    }
    if k < 2 {
        return Err(ConstructError::ParameterConflict(
            "flat plus line needs k >= 2".to_string(),
        ));
    }
    if d < k + 1 {
        return Err(ConstructError::ParameterConflict(format!(
            "flat plus line needs d >= k + 1 (got k = {k}, d = {d})"
        )));
    }
    if n < 2 * k {
        return Err(ConstructError::ParameterConflict(format!(
            "flat plus line needs n >= 2k so the flat can be spanned (got n = {n}, k = {k})"
        )));
    }
    if n > MAX_POINTS {
        return Err(ConstructError::SizeOverflow {
            requested: n,
            cap: MAX_POINTS,
        });
    }
    let half = n / 2;
    let mut points = Vec::with_capacity(n);
    // Moment-curve points inside the coordinate flat on coordinates 0..k-1:
    // any k of them are independent, so they sit in general position within it.
    for t in 1..=half {
        let mut coords = vec![Scalar::zero(); d + 1];
        let mut power = int(1);
        for c in coords.iter_mut().take(k) {
            *c = power.clone();
            power = power * int(t as i64);
        }
        points.push(Point::new(coords).unwrap());
    }
    // (e_k + t e_{k+1}) on the disjoint line.
    for t in 1..=half {
        let mut coords = vec![Scalar::zero(); d + 1];
        coords[k] = int(1);
        coords[k + 1] = int(t as i64);
        points.push(Point::new(coords).unwrap());
    }
    let gamma_points: Vec<Point> = (0..k).map(|axis| unit_point(d, axis)).collect();
    let gamma = Flat::span(d, &gamma_points).unwrap();
    let line = Flat::span(d, &[unit_point(d, k), unit_point(d, k + 1)]).unwrap();
    debug_assert_eq!(gamma.meet(&line).unwrap().dim(), -1);
    Ok(FlatPlusLineFamily {
        points: PointSet::new(d, points).expect("parameter points are distinct"),
        gamma,
        line,
    })
}

pub fn flat_plus_line(n: usize, k: usize, d: usize) -> Result<PointSet, ConstructError> {
    flat_plus_line_family(n, k, d).map(|f| f.points)
}

/// k pairwise skew lines carrying n/k points each.
pub struct KLinesFamily {
    pub points: PointSet,
    pub lines: Vec<Flat>,
}

/// Lines spanned by consecutive pairs of moment-curve points: any four of the
/// spanning points are independent (d >= 3), so the lines are pairwise skew.
/// With d >= 2k-1 every pair of lines spans a 3-flat that misses the others.
pub fn k_lines_family(n: usize, k: usize, d: usize) -> Result<KLinesFamily, ConstructError> {
    if k < 2 {
        return Err(ConstructError::ParameterConflict(
            "k lines needs k >= 2".to_string(),
        ));
    }
    if n % k != 0 {
        return Err(ConstructError::DivisibilityError { n, k });
    }
    if d < 3 {
        return Err(ConstructError::ParameterConflict(
            "skew lines need ambient dimension >= 3".to_string(),
        ));
    }
    if n > MAX_POINTS {
        return Err(ConstructError::SizeOverflow {
            requested: n,
            cap: MAX_POINTS,
        });
    }
    let per_line = n / k;
    if per_line < 2 {
        return Err(ConstructError::ParameterConflict(
            "k lines needs at least 2 points per line".to_string(),
        ));
    }
    let moment = |t: i64| -> Point {
        let mut coords = Vec::with_capacity(d + 1);
        let mut power = int(1);
        for _ in 0..=d {
            coords.push(power.clone());
            power = power * int(t);
        }
        Point::new(coords).unwrap()
    };
    let mut points = Vec::with_capacity(n);
    let mut lines = Vec::with_capacity(k);
    for i in 0..k {
        let a = moment(2 * i as i64 + 1);
        let b = moment(2 * i as i64 + 2);
        let line = Flat::span(d, &[a.clone(), b.clone()]).unwrap();
        debug_assert_eq!(line.dim(), 1);
        for s in 1..=per_line {
            let coords: Vec<Scalar> = a
                .coords()
                .iter()
                .zip(b.coords())
                .map(|(x, y)| x + &(int(s as i64) * y))
                .collect();
            points.push(Point::new(coords).unwrap());
        }
        lines.push(line);
    }
    Ok(KLinesFamily {
        points: PointSet::new(d, points).expect("line parameter points are distinct"),
        lines,
    })
}

pub fn k_lines(n: usize, k: usize, d: usize) -> Result<PointSet, ConstructError> {
    k_lines_family(n, k, d).map(|f| f.points)
}

/// n collinear points in `P^3` together with the common line every plane of
/// the family contains. Every plane through the line is n-rich while the
/// points span no plane at all: the motivating control for why richness
/// bounds need a degeneracy condition.
pub struct CommonLineFamily {
    pub points: PointSet,
    pub line: Flat,
}

impl CommonLineFamily {
    /// A few distinct planes through the common line.
    pub fn sample_planes(&self, count: usize) -> Vec<Flat> {
        let d = self.points.ambient_dim();
        let mut planes = Vec::new();
        let mut c = 0i64;
        while planes.len() < count {
            let mut coords = vec![Scalar::zero(); d + 1];
            coords[2] = int(1);
            coords[3] = int(c);
            let apex = Point::new(coords).unwrap();
            let plane = self.line.join_point(&apex).unwrap();
            if !planes.contains(&plane) {
                planes.push(plane);
            }
            c += 1;
        }
        planes
    }
}

pub fn planes_through_common_line(n: usize) -> Result<CommonLineFamily, ConstructError> {
    if n < 2 {
        return Err(ConstructError::ParameterConflict(
            "need at least 2 collinear points".to_string(),
        ));
    }
    if n > MAX_POINTS {
        return Err(ConstructError::SizeOverflow {
            requested: n,
            cap: MAX_POINTS,
        });
    }
    let points: Vec<Point> = (1..=n)
        .map(|t| Point::from_integers(&[1, t as i64, 0, 0]).unwrap())
        .collect();
    let line = Flat::span(
        3,
        &[
            Point::from_integers(&[1, 0, 0, 0]).unwrap(),
            Point::from_integers(&[0, 1, 0, 0]).unwrap(),
        ],
    )
    .unwrap();
    Ok(CommonLineFamily {
        points: PointSet::new(3, points).expect("collinear parameter points are distinct"),
        line,
    })
}

/// n seeded random integer points in general position in `P^d`: every subset
/// of at most d+1 points is rank-maximal. Points are rejection-sampled one at
/// a time; a point that lands in the span of d (or fewer) accepted points is
/// discarded.
pub fn random_general_position(n: usize, d: usize, seed: u64) -> Result<PointSet, ConstructError> {
    if d == 0 {
        return Err(ConstructError::ParameterConflict(
            "general position needs d >= 1".to_string(),
        ));
    }
    if n > MAX_POINTS {
        return Err(ConstructError::SizeOverflow {
            requested: n,
            cap: MAX_POINTS,
        });
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut accepted: Vec<Point> = Vec::with_capacity(n);
    while accepted.len() < n {
        let mut attempts = 0;
        loop {
            attempts += 1;
            if attempts > GENERAL_POSITION_RETRY_LIMIT {
                return Err(ConstructError::RetryLimit(GENERAL_POSITION_RETRY_LIMIT));
            }
            let affine: Vec<Scalar> = (0..d).map(|_| int(rng.gen_range(-50..=50))).collect();
            let candidate = Point::embed_affine(&affine);
            if degenerates(&accepted, &candidate, d) {
                continue;
            }
            accepted.push(candidate);
            break;
        }
    }
    Ok(PointSet::new(d, accepted).expect("general position points are distinct"))
}

/// True when adding `candidate` would create a rank-deficient subset of size
/// <= d+1, i.e. the candidate lies in the span of some min(d, |accepted|)
/// accepted points.
fn degenerates(accepted: &[Point], candidate: &Point, d: usize) -> bool {
    let subset_size = accepted.len().min(d);
    if subset_size == 0 {
        return false;
    }
    for subset in (0..accepted.len()).combinations(subset_size) {
        let mut rows: Vec<Vec<Scalar>> = subset
            .iter()
            .map(|&i| accepted[i].coords().to_vec())
            .collect();
        rows.push(candidate.coords().to_vec());
        if rank(&rows) < subset_size + 1 {
            return true;
        }
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::pointset::Configuration;

    #[test]
    fn grid_cardinality_and_cap() {
        assert_eq!(grid(3, 2).unwrap().len(), 9);
        assert_eq!(grid(2, 3).unwrap().len(), 8);
        assert!(matches!(
            grid(100, 2).unwrap_err(),
            ConstructError::SizeOverflow { .. }
        ));
    }

    #[test]
    fn skew_lines_shape() {
        let family = skew_lines_family(8).unwrap();
        assert_eq!(family.points.len(), 8);
        assert_eq!(family.line_a.meet(&family.line_b).unwrap().dim(), -1);
        for (i, p) in family.points.points().iter().enumerate() {
            let line = if i < 4 { &family.line_a } else { &family.line_b };
            assert!(line.contains(p));
        }
        assert_eq!(skew_lines(7).unwrap_err(), ConstructError::OddN(7));
        assert!(matches!(
            skew_lines(2).unwrap_err(),
            ConstructError::ParameterConflict(_)
        ));
    }

    #[test]
    fn flat_plus_line_shape() {
        let family = flat_plus_line_family(12, 3, 4).unwrap();
        assert_eq!(family.gamma.dim(), 2);
        assert_eq!(family.line.dim(), 1);
        assert_eq!(family.gamma.meet(&family.line).unwrap().dim(), -1);
        for (i, p) in family.points.points().iter().enumerate() {
            let home = if i < 6 { &family.gamma } else { &family.line };
            assert!(home.contains(p));
        }
        // General position inside gamma: no 3 of the first 6 on a line.
        for triple in (0..6).combinations(3) {
            let pts: Vec<Point> = triple
                .iter()
                .map(|&i| family.points.points()[i].clone())
                .collect();
            assert_eq!(Flat::span(4, &pts).unwrap().dim(), 2);
        }
        assert!(matches!(
            flat_plus_line(12, 3, 3).unwrap_err(),
            ConstructError::ParameterConflict(_)
        ));
        assert_eq!(flat_plus_line(11, 3, 4).unwrap_err(), ConstructError::OddN(11));
    }

    #[test]
    fn k_lines_shape() {
        let family = k_lines_family(12, 3, 5).unwrap();
        assert_eq!(family.lines.len(), 3);
        for pair in family.lines.iter().combinations(2) {
            assert_eq!(pair[0].meet(pair[1]).unwrap().dim(), -1);
            assert_eq!(pair[0].join(pair[1]).unwrap().dim(), 3);
        }
        // In d = 2k - 1 the 3-flat of any pair misses the third line's points.
        let pair_flat = family.lines[0].join(&family.lines[1]).unwrap();
        assert_eq!(family.points.incident_weight(&pair_flat), 8);

        let low = k_lines_family(12, 3, 3).unwrap();
        for pair in low.lines.iter().combinations(2) {
            assert_eq!(pair[0].meet(pair[1]).unwrap().dim(), -1);
        }
        assert_eq!(
            k_lines(10, 3, 5).unwrap_err(),
            ConstructError::DivisibilityError { n: 10, k: 3 }
        );
    }

    #[test]
    fn common_line_family() {
        let family = planes_through_common_line(5).unwrap();
        assert_eq!(family.points.len(), 5);
        for p in family.points.points() {
            assert!(family.line.contains(p));
        }
        let planes = family.sample_planes(3);
        assert_eq!(planes.len(), 3);
        for plane in &planes {
            assert_eq!(plane.dim(), 2);
            assert!(plane.contains_flat(&family.line));
            assert_eq!(family.points.incident_weight(plane), 5);
        }
    }

    #[test]
    fn general_position_is_deterministic_and_general() {
        let a = random_general_position(6, 3, 1).unwrap();
        let b = random_general_position(6, 3, 1).unwrap();
        assert_eq!(a, b);
        let c = random_general_position(6, 3, 2).unwrap();
        assert_ne!(a, c);
        // Every 4-subset of the 6 points spans P^3.
        for subset in (0..6).combinations(4) {
            let pts: Vec<Point> = subset.iter().map(|&i| a.points()[i].clone()).collect();
            assert_eq!(Flat::span(3, &pts).unwrap().dim(), 3);
        }
    }
}
