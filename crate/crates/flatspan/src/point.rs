//! Canonical projective points.

use crate::scalar::{format_scalar, int, Scalar};
use num::{One, Zero};
use std::fmt;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GeomError {
    #[error("zero vector does not represent a projective point")]
    ZeroVector,
    #[error("ambient dimension mismatch: expected {expected}, found {found}")]
    MixedAmbient { expected: usize, found: usize },
    #[error("point lies in the projection center")]
    PointInCenter,
}

/// A point of `P^d(Q)` stored as d+1 homogeneous coordinates scaled so the
/// first nonzero coordinate is 1. Canonical form makes equality, ordering and
/// hashing structural.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Point {
    coords: Vec<Scalar>,
}

impl Point {
    /// Canonicalizes homogeneous coordinates. Errs on the zero vector.
    pub fn new(coords: Vec<Scalar>) -> Result<Point, GeomError> {
        let lead = coords.iter().find(|c| !c.is_zero()).cloned();
        match lead {
            None => Err(GeomError::ZeroVector),
            Some(lead) => {
                if lead.is_one() {
                    return Ok(Point { coords });
                }
                let coords = coords.into_iter().map(|c| c / lead.clone()).collect();
                Ok(Point { coords })
            }
        }
    }

    /// Embeds an affine point (x1..xd) as (1 : x1 : ... : xd).
    pub fn embed_affine(affine: &[Scalar]) -> Point {
        let mut coords = Vec::with_capacity(affine.len() + 1);
        coords.push(int(1));
        coords.extend_from_slice(affine);
        Point { coords }
    }

    /// Convenience constructor from integer homogeneous coordinates.
    pub fn from_integers(coords: &[i64]) -> Result<Point, GeomError> {
        Point::new(coords.iter().map(|&c| int(c)).collect())
    }

    pub fn coords(&self) -> &[Scalar] {
        &self.coords
    }

    /// Ambient projective dimension d (one less than the coordinate count).
    pub fn ambient_dim(&self) -> usize {
        self.coords.len() - 1
    }
}

impl fmt::Debug for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rendered: Vec<String> = self.coords.iter().map(format_scalar).collect();
        write!(f, "({})", rendered.join(" : "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::ratio;

    #[test]
    fn canonical_leading_one() {
        let p = Point::from_integers(&[2, 4, 6]).unwrap();
        assert_eq!(p.coords(), &[int(1), int(2), int(3)]);

        let q = Point::from_integers(&[0, 0, 5]).unwrap();
        assert_eq!(q.coords(), &[int(0), int(0), int(1)]);
    }

    #[test]
    fn zero_vector_rejected() {
        assert_eq!(
            Point::from_integers(&[0, 0, 0]).unwrap_err(),
            GeomError::ZeroVector
        );
    }

    #[test]
    fn rescaling_is_identified() {
        let p = Point::new(vec![ratio(1, 2), ratio(3, 2)]).unwrap();
        let q = Point::from_integers(&[1, 3]).unwrap();
        assert_eq!(p, q);
    }

    #[test]
    fn affine_embedding() {
        let p = Point::embed_affine(&[int(3), int(-1)]);
        assert_eq!(p, Point::from_integers(&[1, 3, -1]).unwrap());
        assert_eq!(p.ambient_dim(), 2);
    }

    #[test]
    fn display_uses_colons() {
        let p = Point::new(vec![int(1), ratio(2, 3), int(0)]).unwrap();
        assert_eq!(p.to_string(), "(1 : 2/3 : 0)");
    }
}
