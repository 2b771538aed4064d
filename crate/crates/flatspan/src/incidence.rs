//! Spanned-flat enumeration and incidence predicates.
//!
//! A k-flat is *spanned* by a configuration when it contains k+1 points of the
//! configuration that lie in no (k-1)-flat. `spanned_flats` enumerates spanned
//! k-flats by taking spans of (k+1)-subsets of the support;
//! `spanned_flats_incremental` is an intentionally independent second route
//! (grow a (k-1)-inventory by one point at a time) kept as an equivalence
//! oracle; the two must agree on every configuration, and tests hold them to
//! that.
//!
//! Richness counts weight (multiplicity); degeneracy predicates compare exact
//! rational thresholds:
//!
//! * r-rich: at least r points of the configuration lie in the flat;
//! * alpha-degenerate: no (k-1)-subflat holds more than an alpha fraction of
//!   the flat's points;
//! * essentially-alpha-degenerate: no subset of essential dimension <= k-1
//!   does (equivalently, bounded cover coverage);
//! * gamma-saturated: the flat's points span at least gamma * |P ∩ Λ|^k
//!   different (k-1)-flats.

use crate::essdim;
use crate::flat::Flat;
use crate::pointset::{Configuration, MultiPointSet};
use crate::scalar::Scalar;
use itertools::Itertools;
use num::bigint::BigInt;
use num::rational::BigRational;
use num::Signed;
use std::collections::{BTreeMap, BTreeSet};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum IncidenceError {
    #[error("k = {k} out of range for ambient dimension {ambient}")]
    KOutOfRange { k: usize, ambient: usize },
    #[error("no incident points")]
    EmptyPointList,
    #[error("alpha must be positive, got {0}")]
    AlphaOutOfRange(String),
    #[error("gamma must be positive, got {0}")]
    GammaOutOfRange(String),
}

/// Incidence data for one spanned flat.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Incidences {
    /// Sorted support indices of the points lying in the flat.
    pub point_indices: Vec<usize>,
    /// Total weight of those points.
    pub weight: u64,
}

/// All k-flats spanned by a configuration, each with its incident points.
/// Entries are kept in canonical (basis-lexicographic) order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FlatInventory {
    k: usize,
    entries: BTreeMap<Flat, Incidences>,
}

impl FlatInventory {
    pub fn k(&self) -> usize {
        self.k
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Flat, &Incidences)> {
        self.entries.iter()
    }

    pub fn flats(&self) -> impl Iterator<Item = &Flat> {
        self.entries.keys()
    }

    pub fn get(&self, flat: &Flat) -> Option<&Incidences> {
        self.entries.get(flat)
    }

    pub fn contains(&self, flat: &Flat) -> bool {
        self.entries.contains_key(flat)
    }

    /// Largest incident weight over the inventory (0 when empty).
    pub fn max_weight(&self) -> u64 {
        self.entries.values().map(|inc| inc.weight).max().unwrap_or(0)
    }
}

fn incidences_for<C: Configuration>(config: &C, flat: &Flat) -> Incidences {
    let point_indices = config.incident_indices(flat);
    let weight = point_indices.iter().map(|&i| config.multiplicity(i)).sum();
    Incidences {
        point_indices,
        weight,
    }
}

fn check_k<C: Configuration>(config: &C, k: usize) -> Result<(), IncidenceError> {
    if k > config.ambient_dim() {
        return Err(IncidenceError::KOutOfRange {
            k,
            ambient: config.ambient_dim(),
        });
    }
    Ok(())
}

/// Spanned k-flats via spans of (k+1)-subsets of the support.
pub fn spanned_flats<C: Configuration>(
    config: &C,
    k: usize,
) -> Result<FlatInventory, IncidenceError> {
    check_k(config, k)?;
    let ambient = config.ambient_dim();
    let support = config.support();
    let mut flats = BTreeSet::new();
    for subset in (0..support.len()).combinations(k + 1) {
        let points: Vec<_> = subset.iter().map(|&i| support[i].clone()).collect();
        let span = Flat::span(ambient, &points).expect("support shares the ambient space");
        if span.dim() == k as i64 {
            flats.insert(span);
        }
    }
    let entries = flats
        .into_iter()
        .map(|flat| {
            let inc = incidences_for(config, &flat);
            (flat, inc)
        })
        .collect();
    Ok(FlatInventory { k, entries })
}

/// Independent route to the spanned k-flats: start from the spanned 0-flats
/// (the support points) and extend each (j-1)-inventory by one point not in
/// the flat. Every spanned j-flat arises this way because a spanning set of
/// j+1 independent points can be built one point at a time.
pub fn spanned_flats_incremental<C: Configuration>(
    config: &C,
    k: usize,
) -> Result<FlatInventory, IncidenceError> {
    check_k(config, k)?;
    let ambient = config.ambient_dim();
    let support = config.support();
    let mut level: BTreeSet<Flat> = support
        .iter()
        .map(|p| Flat::span(ambient, std::slice::from_ref(p)).expect("single point spans"))
        .collect();
    for _ in 0..k {
        let mut next = BTreeSet::new();
        for flat in &level {
            for p in support {
                if !flat.contains(p) {
                    next.insert(flat.join_point(p).expect("same ambient"));
                }
            }
        }
        level = next;
    }
    let entries = level
        .into_iter()
        .map(|flat| {
            let inc = incidences_for(config, &flat);
            (flat, inc)
        })
        .collect();
    Ok(FlatInventory { k, entries })
}

/// Counts of r-rich flats in an inventory, one row per requested r.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RichProfile {
    pub k: usize,
    /// (r, number of inventory flats with incident weight >= r).
    pub rows: Vec<(u64, usize)>,
}

pub fn rich_profile(inventory: &FlatInventory, r_values: &[u64]) -> RichProfile {
    let rows = r_values
        .iter()
        .map(|&r| {
            let count = inventory
                .iter()
                .filter(|(_, inc)| inc.weight >= r)
                .count();
            (r, count)
        })
        .collect();
    RichProfile {
        k: inventory.k,
        rows,
    }
}

/// The heaviest proper-dimension subflat: over all flats of dimension <=
/// dim(Λ) - 1 spanned inside Λ (single support points included), the one
/// covering the largest incident weight. Ties break to the lexicographically
/// least canonical basis. Returns the flat and the weight it covers.
pub fn max_subflat_coverage<C: Configuration>(
    flat: &Flat,
    config: &C,
) -> Result<(Flat, u64), IncidenceError> {
    let incident = config.incident_indices(flat);
    if incident.is_empty() {
        return Err(IncidenceError::EmptyPointList);
    }
    let k = flat.dim();
    let ambient = config.ambient_dim();
    let support = config.support();
    if k <= 0 {
        // A 0-flat has only the empty flat below it.
        return Ok((Flat::empty(ambient), 0));
    }
    // Spans of up to k incident points realize every maximal proper subflat:
    // the points covered by a (k-1)-flat span the same subflat.
    let mut candidates = BTreeSet::new();
    for size in 1..=(k as usize) {
        if size > incident.len() {
            break;
        }
        for subset in incident.iter().combinations(size) {
            let points: Vec<_> = subset.iter().map(|&&i| support[i].clone()).collect();
            let span = Flat::span(ambient, &points).expect("same ambient");
            if span.dim() < k {
                candidates.insert(span);
            }
        }
    }
    let mut best: Option<(Flat, u64)> = None;
    for candidate in candidates {
        let weight: u64 = incident
            .iter()
            .filter(|&&i| candidate.contains(&support[i]))
            .map(|&i| config.multiplicity(i))
            .sum();
        let better = match &best {
            None => true,
            Some((best_flat, best_weight)) => {
                weight > *best_weight || (weight == *best_weight && candidate < *best_flat)
            }
        };
        if better {
            best = Some((candidate, weight));
        }
    }
    Ok(best.expect("at least one incident point yields a candidate"))
}

fn check_positive(value: &Scalar, err: fn(String) -> IncidenceError) -> Result<(), IncidenceError> {
    if value.is_positive() {
        Ok(())
    } else {
        Err(err(crate::scalar::format_scalar(value)))
    }
}

/// True when every (dim-1)-subflat of `flat` holds at most alpha * |P ∩ Λ|
/// points of the configuration. Vacuously true for flats without incident
/// points.
pub fn is_alpha_degenerate<C: Configuration>(
    flat: &Flat,
    config: &C,
    alpha: &Scalar,
) -> Result<bool, IncidenceError> {
    check_positive(alpha, IncidenceError::AlphaOutOfRange)?;
    let total = config.incident_weight(flat);
    if total == 0 {
        return Ok(true);
    }
    let (_, covered) = max_subflat_coverage(flat, config)?;
    Ok(scaled_at_most(covered, alpha, total))
}

/// covered <= bound * total, exactly.
fn scaled_at_most(covered: u64, bound: &Scalar, total: u64) -> bool {
    let lhs = BigRational::from_integer(BigInt::from(covered));
    let rhs = bound * BigRational::from_integer(BigInt::from(total));
    lhs <= rhs
}

/// True when every subset of the flat's points with essential dimension <=
/// dim(Λ) - 1 carries at most alpha * |P ∩ Λ| weight. Computed through the
/// exact budgeted cover search: the heaviest subset with essential dimension
/// <= t is exactly the weight coverable by flats of total dimension <= t.
pub fn is_essentially_alpha_degenerate<C: Configuration>(
    flat: &Flat,
    config: &C,
    alpha: &Scalar,
) -> Result<bool, IncidenceError> {
    check_positive(alpha, IncidenceError::AlphaOutOfRange)?;
    let total = config.incident_weight(flat);
    if total == 0 {
        return Ok(true);
    }
    let k = flat.dim();
    if k <= 0 {
        return Ok(true);
    }
    let inside = config.restrict_to(flat);
    let covered = essdim::cover_max_points(&inside, (k - 1) as usize);
    Ok(scaled_at_most(covered, alpha, total))
}

/// True when the flat's points span at least gamma * |P ∩ Λ|^dim(Λ) distinct
/// (dim-1)-flats.
pub fn is_gamma_saturated<C: Configuration>(
    flat: &Flat,
    config: &C,
    gamma: &Scalar,
) -> Result<bool, IncidenceError> {
    check_positive(gamma, IncidenceError::GammaOutOfRange)?;
    let k = flat.dim();
    if k < 1 {
        return Ok(false);
    }
    let inside = config.restrict_to(flat);
    let total = inside.total_weight();
    let spanned = if inside.support_len() >= k as usize {
        spanned_flats(&inside, (k - 1) as usize)?.len()
    } else {
        0
    };
    let lhs = BigRational::from_integer(BigInt::from(spanned));
    let rhs = gamma * BigRational::from_integer(BigInt::from(total).pow(k as u32));
    Ok(lhs >= rhs)
}

/// Number of ordered lists of k'+1 affinely independent points drawn from the
/// configuration, counting multiplicity per list slot. Affine independence
/// forces the support points to be distinct, so the count is the sum over
/// independent (k'+1)-subsets of (k'+1)! times the product of multiplicities.
pub fn count_independent_lists<C: Configuration>(config: &C, k_prime: usize) -> u128 {
    let support = config.support();
    let ambient = config.ambient_dim();
    if support.len() < k_prime + 1 {
        return 0;
    }
    let factorial: u128 = (1..=(k_prime as u128 + 1)).product();
    let mut count: u128 = 0;
    for subset in (0..support.len()).combinations(k_prime + 1) {
        let points: Vec<_> = subset.iter().map(|&i| support[i].clone()).collect();
        let span = Flat::span(ambient, &points).expect("same ambient");
        if span.dim() == k_prime as i64 {
            let product: u128 = subset
                .iter()
                .map(|&i| config.multiplicity(i) as u128)
                .product();
            count += factorial * product;
        }
    }
    count
}

/// Projects a configuration from a center flat. Points inside the center are
/// dropped; the rest map through `Flat::project_from`, and coincident images
/// accumulate multiplicity. Returns the image multiset and the dropped weight.
pub fn project_configuration<C: Configuration>(center: &Flat, config: &C) -> (MultiPointSet, u64) {
    let d = config.ambient_dim();
    assert_eq!(
        center.ambient_dim(),
        d,
        "projection center must share the configuration's ambient space"
    );
    if center.dim() == d as i64 {
        // Degenerate center: everything is dropped.
        let empty = MultiPointSet::new(0, Vec::new()).expect("empty multiset");
        return (empty, config.total_weight());
    }
    let image_ambient = (d as i64 - center.dim() - 1) as usize;
    let mut dropped = 0u64;
    let mut occurrences = Vec::new();
    for (i, p) in config.support().iter().enumerate() {
        match center.project_from(p) {
            Ok(image) => occurrences.push((image, config.multiplicity(i))),
            Err(_) => dropped += config.multiplicity(i),
        }
    }
    let image = MultiPointSet::from_occurrences(image_ambient, occurrences)
        .expect("projected points share the image space");
    (image, dropped)
}
