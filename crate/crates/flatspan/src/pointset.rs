//! Point configurations: plain sets and multisets of projective points.
//!
//! Incidence counting works uniformly over both through the [`Configuration`]
//! trait: a configuration is a list of distinct support points with positive
//! integer weights. A `PointSet` weights every point 1; a `MultiPointSet`
//! carries explicit multiplicities (projections collapse points, so multisets
//! arise naturally even when the input is a plain set).

use crate::flat::Flat;
use crate::point::Point;
use std::collections::BTreeMap;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ConfigError {
    #[error("ambient dimension mismatch: expected {expected}, found {found}")]
    MixedAmbient { expected: usize, found: usize },
    #[error("duplicate point {0}")]
    DuplicatePoint(String),
    #[error("zero multiplicity for point {0}")]
    ZeroMultiplicity(String),
}

/// Uniform view of a configuration: distinct support points plus weights.
pub trait Configuration {
    fn ambient_dim(&self) -> usize;
    /// Distinct support points.
    fn support(&self) -> &[Point];
    /// Weight of the i-th support point (1 for plain sets).
    fn multiplicity(&self, index: usize) -> u64;
    /// Total weight n (counts multiplicity).
    fn total_weight(&self) -> u64;

    fn support_len(&self) -> usize {
        self.support().len()
    }

    /// Indices of support points lying in `flat`, in support order.
    fn incident_indices(&self, flat: &Flat) -> Vec<usize> {
        self.support()
            .iter()
            .enumerate()
            .filter(|(_, p)| flat.contains(p))
            .map(|(i, _)| i)
            .collect()
    }

    /// Total weight of the points lying in `flat`.
    fn incident_weight(&self, flat: &Flat) -> u64 {
        self.incident_indices(flat)
            .iter()
            .map(|&i| self.multiplicity(i))
            .sum()
    }

    /// The sub-multiset of points lying in `flat`.
    fn restrict_to(&self, flat: &Flat) -> MultiPointSet {
        let entries: Vec<(Point, u64)> = self
            .incident_indices(flat)
            .into_iter()
            .map(|i| (self.support()[i].clone(), self.multiplicity(i)))
            .collect();
        MultiPointSet::new(self.ambient_dim(), entries).expect("restriction preserves invariants")
    }
}

/// A finite set of distinct points in `P^d`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PointSet {
    ambient: usize,
    points: Vec<Point>,
}

impl PointSet {
    pub fn new(ambient: usize, points: Vec<Point>) -> Result<PointSet, ConfigError> {
        let mut seen = std::collections::BTreeSet::new();
        for p in &points {
            if p.ambient_dim() != ambient {
                return Err(ConfigError::MixedAmbient {
                    expected: ambient,
                    found: p.ambient_dim(),
                });
            }
            if !seen.insert(p.clone()) {
                return Err(ConfigError::DuplicatePoint(p.to_string()));
            }
        }
        Ok(PointSet { ambient, points })
    }

    pub fn points(&self) -> &[Point] {
        &self.points
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }
}

impl Configuration for PointSet {
    fn ambient_dim(&self) -> usize {
        self.ambient
    }

    fn support(&self) -> &[Point] {
        &self.points
    }

    fn multiplicity(&self, _index: usize) -> u64 {
        1
    }

    fn total_weight(&self) -> u64 {
        self.points.len() as u64
    }
}

/// A multiset of points: distinct support points with positive multiplicities.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MultiPointSet {
    ambient: usize,
    points: Vec<Point>,
    multiplicities: Vec<u64>,
}

impl MultiPointSet {
    pub fn new(ambient: usize, entries: Vec<(Point, u64)>) -> Result<MultiPointSet, ConfigError> {
        let mut seen = std::collections::BTreeSet::new();
        let mut points = Vec::with_capacity(entries.len());
        let mut multiplicities = Vec::with_capacity(entries.len());
        for (p, m) in entries {
            if p.ambient_dim() != ambient {
                return Err(ConfigError::MixedAmbient {
                    expected: ambient,
                    found: p.ambient_dim(),
                });
            }
            if m == 0 {
                return Err(ConfigError::ZeroMultiplicity(p.to_string()));
            }
            if !seen.insert(p.clone()) {
                return Err(ConfigError::DuplicatePoint(p.to_string()));
            }
            points.push(p);
            multiplicities.push(m);
        }
        Ok(MultiPointSet {
            ambient,
            points,
            multiplicities,
        })
    }

    /// Accumulates possibly-repeated points into support + multiplicity form,
    /// in canonical point order.
    pub fn from_occurrences(
        ambient: usize,
        occurrences: impl IntoIterator<Item = (Point, u64)>,
    ) -> Result<MultiPointSet, ConfigError> {
        let mut acc: BTreeMap<Point, u64> = BTreeMap::new();
        for (p, m) in occurrences {
            if p.ambient_dim() != ambient {
                return Err(ConfigError::MixedAmbient {
                    expected: ambient,
                    found: p.ambient_dim(),
                });
            }
            *acc.entry(p).or_insert(0) += m;
        }
        MultiPointSet::new(ambient, acc.into_iter().filter(|&(_, m)| m > 0).collect())
    }

    pub fn entries(&self) -> impl Iterator<Item = (&Point, u64)> {
        self.points.iter().zip(self.multiplicities.iter().copied())
    }
}

impl From<&PointSet> for MultiPointSet {
    fn from(set: &PointSet) -> MultiPointSet {
        MultiPointSet {
            ambient: set.ambient,
            points: set.points.clone(),
            multiplicities: vec![1; set.points.len()],
        }
    }
}

impl Configuration for MultiPointSet {
    fn ambient_dim(&self) -> usize {
        self.ambient
    }

    fn support(&self) -> &[Point] {
        &self.points
    }

    fn multiplicity(&self, index: usize) -> u64 {
        self.multiplicities[index]
    }

    fn total_weight(&self) -> u64 {
        self.multiplicities.iter().sum()
    }
}

impl<C: Configuration + ?Sized> Configuration for &C {
    fn ambient_dim(&self) -> usize {
        (**self).ambient_dim()
    }

    fn support(&self) -> &[Point] {
        (**self).support()
    }

    fn multiplicity(&self, index: usize) -> u64 {
        (**self).multiplicity(index)
    }

    fn total_weight(&self) -> u64 {
        (**self).total_weight()
    }
}
