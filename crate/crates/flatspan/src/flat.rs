//! Flats of rational projective space in canonical form.
//!
//! A flat of projective dimension m is stored as the reduced row echelon basis
//! of its (m+1)-dimensional coordinate subspace. RREF is unique per row space,
//! so two flats are equal as sets of points exactly when their `Flat` values
//! compare equal, and `Ord`/`Hash` are structural. The empty flat (dimension
//! -1) has an empty basis.

use crate::linalg::rref;
use crate::point::{GeomError, Point};
use crate::scalar::{format_scalar, Scalar};
use num::Zero;
use std::fmt;

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Flat {
    ambient: usize,
    basis: Vec<Vec<Scalar>>,
    pivots: Vec<usize>,
}

impl Flat {
    /// The empty flat (projective dimension -1) of `P^ambient`.
    pub fn empty(ambient: usize) -> Flat {
        Flat {
            ambient,
            basis: Vec::new(),
            pivots: Vec::new(),
        }
    }

    /// The whole space `P^ambient` as a flat.
    pub fn whole_space(ambient: usize) -> Flat {
        let n = ambient + 1;
        let mut basis = vec![vec![Scalar::zero(); n]; n];
        for (i, row) in basis.iter_mut().enumerate() {
            row[i] = crate::scalar::int(1);
        }
        Flat {
            ambient,
            basis,
            pivots: (0..n).collect(),
        }
    }

    /// Builds the flat spanned by arbitrary coordinate rows (canonicalizing).
    pub fn from_rows(ambient: usize, rows: Vec<Vec<Scalar>>) -> Result<Flat, GeomError> {
        for row in &rows {
            if row.len() != ambient + 1 {
                return Err(GeomError::MixedAmbient {
                    expected: ambient,
                    found: row.len().saturating_sub(1),
                });
            }
        }
        let mut basis = rows;
        let pivots = rref(&mut basis);
        Ok(Flat {
            ambient,
            basis,
            pivots,
        })
    }

    /// The span of a set of points: the smallest flat containing all of them.
    pub fn span(ambient: usize, points: &[Point]) -> Result<Flat, GeomError> {
        for p in points {
            if p.ambient_dim() != ambient {
                return Err(GeomError::MixedAmbient {
                    expected: ambient,
                    found: p.ambient_dim(),
                });
            }
        }
        let rows = points.iter().map(|p| p.coords().to_vec()).collect();
        Flat::from_rows(ambient, rows)
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    /// Projective dimension; -1 for the empty flat.
    pub fn dim(&self) -> i64 {
        self.basis.len() as i64 - 1
    }

    pub fn is_empty(&self) -> bool {
        self.basis.is_empty()
    }

    /// Canonical RREF basis rows.
    pub fn basis(&self) -> &[Vec<Scalar>] {
        &self.basis
    }

    pub fn pivot_columns(&self) -> &[usize] {
        &self.pivots
    }

    /// The basis rows as canonical points (a spanning set of the flat).
    pub fn basis_points(&self) -> Vec<Point> {
        self.basis
            .iter()
            .map(|row| Point::new(row.clone()).expect("basis rows are nonzero"))
            .collect()
    }

    /// Reduces a coordinate vector modulo the flat; the result is zero exactly
    /// when the vector lies in the flat, and otherwise vanishes on all pivot
    /// columns of the flat.
    pub fn reduce(&self, vector: &[Scalar]) -> Vec<Scalar> {
        let mut v = vector.to_vec();
        for (row, &pc) in self.basis.iter().zip(&self.pivots) {
            if !v[pc].is_zero() {
                let factor = v[pc].clone();
                for (entry, base) in v.iter_mut().zip(row) {
                    let delta = &factor * base;
                    *entry = &*entry - &delta;
                }
            }
        }
        v
    }

    pub fn contains(&self, point: &Point) -> bool {
        point.ambient_dim() == self.ambient && self.reduce(point.coords()).iter().all(Zero::is_zero)
    }

    pub fn contains_flat(&self, other: &Flat) -> bool {
        other.ambient == self.ambient
            && other
                .basis
                .iter()
                .all(|row| self.reduce(row).iter().all(Zero::is_zero))
    }

    /// Join: the smallest flat containing both operands.
    pub fn join(&self, other: &Flat) -> Result<Flat, GeomError> {
        if self.ambient != other.ambient {
            return Err(GeomError::MixedAmbient {
                expected: self.ambient,
                found: other.ambient,
            });
        }
        let mut rows = self.basis.clone();
        rows.extend(other.basis.iter().cloned());
        Flat::from_rows(self.ambient, rows)
    }

    /// Join of a flat with a single point.
    pub fn join_point(&self, point: &Point) -> Result<Flat, GeomError> {
        if point.ambient_dim() != self.ambient {
            return Err(GeomError::MixedAmbient {
                expected: self.ambient,
                found: point.ambient_dim(),
            });
        }
        let mut rows = self.basis.clone();
        rows.push(point.coords().to_vec());
        Flat::from_rows(self.ambient, rows)
    }

    /// Meet: the largest flat contained in both operands (Zassenhaus block
    /// reduction on [A|A] over [B|0]; rows whose left half vanishes carry a
    /// basis of the intersection in their right half).
    pub fn meet(&self, other: &Flat) -> Result<Flat, GeomError> {
        if self.ambient != other.ambient {
            return Err(GeomError::MixedAmbient {
                expected: self.ambient,
                found: other.ambient,
            });
        }
        let n = self.ambient + 1;
        let mut block: Vec<Vec<Scalar>> = Vec::with_capacity(self.basis.len() + other.basis.len());
        for row in &self.basis {
            let mut wide = Vec::with_capacity(2 * n);
            wide.extend_from_slice(row);
            wide.extend_from_slice(row);
            block.push(wide);
        }
        for row in &other.basis {
            let mut wide = Vec::with_capacity(2 * n);
            wide.extend_from_slice(row);
            wide.extend(std::iter::repeat(Scalar::zero()).take(n));
            block.push(wide);
        }
        rref(&mut block);
        let intersection_rows: Vec<Vec<Scalar>> = block
            .iter()
            .filter(|row| row[..n].iter().all(Zero::is_zero))
            .map(|row| row[n..].to_vec())
            .collect();
        Flat::from_rows(self.ambient, intersection_rows)
    }

    /// Projection from this flat as center. A point p outside the center maps
    /// to the unique intersection of join(center, p) with the coordinate flat
    /// spanned by the center's non-pivot coordinate directions, read off in
    /// those coordinates. Images land in `P^(d - k - 1)` for a center of
    /// dimension k, and two points share an image exactly when they span the
    /// same flat together with the center.
    pub fn project_from(&self, point: &Point) -> Result<Point, GeomError> {
        if point.ambient_dim() != self.ambient {
            return Err(GeomError::MixedAmbient {
                expected: self.ambient,
                found: point.ambient_dim(),
            });
        }
        let residual = self.reduce(point.coords());
        if residual.iter().all(Zero::is_zero) {
            return Err(GeomError::PointInCenter);
        }
        let image: Vec<Scalar> = (0..=self.ambient)
            .filter(|col| !self.pivots.contains(col))
            .map(|col| residual[col].clone())
            .collect();
        Point::new(image)
    }
}

impl fmt::Debug for Flat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for Flat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            return write!(f, "flat{{dim -1 in P^{}}}", self.ambient);
        }
        let rows: Vec<String> = self
            .basis
            .iter()
            .map(|row| {
                let rendered: Vec<String> = row.iter().map(format_scalar).collect();
                format!("[{}]", rendered.join(", "))
            })
            .collect();
        write!(
            f,
            "flat{{dim {} in P^{}: {}}}",
            self.dim(),
            self.ambient,
            rows.join(" ")
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pt(coords: &[i64]) -> Point {
        Point::from_integers(coords).unwrap()
    }

    #[test]
    fn span_of_two_points_is_a_line() {
        let line = Flat::span(3, &[pt(&[1, 0, 0, 0]), pt(&[1, 1, 0, 0])]).unwrap();
        assert_eq!(line.dim(), 1);
        assert!(line.contains(&pt(&[1, 5, 0, 0])));
        assert!(line.contains(&pt(&[0, 1, 0, 0])));
        assert!(!line.contains(&pt(&[1, 0, 1, 0])));
    }

    #[test]
    fn span_is_presentation_invariant() {
        let a = Flat::span(2, &[pt(&[1, 1, 0]), pt(&[1, 0, 1])]).unwrap();
        let b = Flat::span(2, &[pt(&[1, 0, 1]), pt(&[2, 1, 1]), pt(&[1, 1, 0])]).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn span_of_repeated_point_is_the_point() {
        let f = Flat::span(2, &[pt(&[1, 2, 3]), pt(&[2, 4, 6])]).unwrap();
        assert_eq!(f.dim(), 0);
    }

    #[test]
    fn empty_flat() {
        let e = Flat::empty(3);
        assert_eq!(e.dim(), -1);
        assert!(!e.contains(&pt(&[1, 0, 0, 0])));
        let line = Flat::span(3, &[pt(&[1, 0, 0, 0]), pt(&[0, 1, 0, 0])]).unwrap();
        assert_eq!(e.join(&line).unwrap(), line);
        assert_eq!(e.meet(&line).unwrap(), e);
    }

    #[test]
    fn join_of_skew_lines_fills_p3() {
        let a = Flat::span(3, &[pt(&[1, 0, 0, 0]), pt(&[0, 1, 0, 0])]).unwrap();
        let b = Flat::span(3, &[pt(&[1, 0, 0, 1]), pt(&[0, 0, 1, 0])]).unwrap();
        let j = a.join(&b).unwrap();
        assert_eq!(j.dim(), 3);
        assert_eq!(j, Flat::whole_space(3));
        assert_eq!(a.meet(&b).unwrap(), Flat::empty(3));
    }

    #[test]
    fn meet_of_coplanar_lines_is_a_point() {
        // Two distinct lines through (1:0:0) inside P^2.
        let a = Flat::span(2, &[pt(&[1, 0, 0]), pt(&[0, 1, 0])]).unwrap();
        let b = Flat::span(2, &[pt(&[1, 0, 0]), pt(&[0, 0, 1])]).unwrap();
        let m = a.meet(&b).unwrap();
        assert_eq!(m.dim(), 0);
        assert!(m.contains(&pt(&[1, 0, 0])));
    }

    #[test]
    fn dimension_identity_examples() {
        let a = Flat::span(4, &[pt(&[1, 0, 0, 0, 0]), pt(&[0, 1, 0, 0, 0])]).unwrap();
        let b = Flat::span(
            4,
            &[pt(&[0, 1, 0, 0, 0]), pt(&[0, 0, 1, 0, 0]), pt(&[0, 0, 0, 1, 0])],
        )
        .unwrap();
        let join = a.join(&b).unwrap();
        let meet = a.meet(&b).unwrap();
        assert_eq!(join.dim() + meet.dim(), a.dim() + b.dim());
    }

    #[test]
    fn contains_flat_checks_basis_rows() {
        let plane = Flat::span(3, &[pt(&[1, 0, 0, 0]), pt(&[0, 1, 0, 0]), pt(&[0, 0, 1, 0])])
            .unwrap();
        let line = Flat::span(3, &[pt(&[1, 1, 1, 0]), pt(&[1, 2, 3, 0])]).unwrap();
        assert!(plane.contains_flat(&line));
        assert!(!line.contains_flat(&plane));
        let off = Flat::span(3, &[pt(&[1, 0, 0, 1]), pt(&[0, 1, 0, 0])]).unwrap();
        assert!(!plane.contains_flat(&off));
    }

    #[test]
    fn projection_from_a_point_center() {
        // Center (1:0:0) in P^2; p = (1:1:2) reduces to (0:1:2), giving (1:2).
        let center = Flat::span(2, &[pt(&[1, 0, 0])]).unwrap();
        let image = center.project_from(&pt(&[1, 1, 2])).unwrap();
        assert_eq!(image, Point::from_integers(&[1, 2]).unwrap());
        assert_eq!(image.ambient_dim(), 1);
    }

    #[test]
    fn projection_rejects_center_points() {
        let center = Flat::span(2, &[pt(&[1, 0, 0])]).unwrap();
        assert_eq!(
            center.project_from(&pt(&[3, 0, 0])).unwrap_err(),
            GeomError::PointInCenter
        );
    }

    #[test]
    fn projection_images_match_join_classes() {
        // From a line center in P^3, images agree exactly when the joined
        // planes agree.
        let center = Flat::span(3, &[pt(&[1, 0, 0, 0]), pt(&[0, 1, 0, 0])]).unwrap();
        let p = pt(&[1, 3, 1, 0]);
        let q = pt(&[1, -2, 2, 0]); // same plane z-axis-free: join contains both?
        let r = pt(&[1, 0, 0, 1]);
        let jp = center.join_point(&p).unwrap();
        let jq = center.join_point(&q).unwrap();
        let jr = center.join_point(&r).unwrap();
        assert_eq!(jp, jq);
        assert_ne!(jp, jr);
        let ip = center.project_from(&p).unwrap();
        let iq = center.project_from(&q).unwrap();
        let ir = center.project_from(&r).unwrap();
        assert_eq!(ip, iq);
        assert_ne!(ip, ir);
        assert_eq!(ip.ambient_dim(), 1);
    }

    #[test]
    fn projection_from_empty_center_is_identity() {
        let center = Flat::empty(2);
        let p = pt(&[1, 5, 7]);
        assert_eq!(center.project_from(&p).unwrap(), p);
    }

    #[test]
    fn mixed_ambient_rejected() {
        let a = Flat::span(2, &[pt(&[1, 0, 0])]).unwrap();
        let b = Flat::span(3, &[pt(&[1, 0, 0, 0])]).unwrap();
        assert!(matches!(
            a.join(&b).unwrap_err(),
            GeomError::MixedAmbient { .. }
        ));
        assert!(matches!(
            a.meet(&b).unwrap_err(),
            GeomError::MixedAmbient { .. }
        ));
        assert!(matches!(
            Flat::span(2, &[pt(&[1, 0, 0, 0])]).unwrap_err(),
            GeomError::MixedAmbient { .. }
        ));
    }
}
