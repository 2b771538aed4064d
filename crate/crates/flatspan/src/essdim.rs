//! Essential dimension: exact minimum-total-dimension covers by flats.
//!
//! The essential dimension K(P) is the least total dimension of a family of
//! flats, each of dimension at least 1, whose union contains P. The search is
//! exact (iterative deepening over an explicit candidate list), so results
//! are optimality proofs by exhaustion, not heuristics. Candidate flats are
//! the spans of support subsets: an optimal cover's flat can always be shrunk
//! to the span of the points it covers, and a point left alone gets a fixed
//! fallback line, so restricting to these candidates preserves optimality.
//!
//! `cover_max_points` is the dual budgeted question (heaviest subset coverable
//! with total dimension <= t), and `g_profile` the affine-cost variant used
//! for Beck-type products, where a flat of dimension j costs j + 1 and single
//! points are purchasable.

use crate::flat::Flat;
use crate::point::Point;
use crate::pointset::Configuration;
use crate::scalar::int;
use itertools::Itertools;
use num::bigint::BigInt;
use std::collections::BTreeSet;
use thiserror::Error;

/// Coverage bitmasks are u64; larger supports need a different search.
pub const MAX_SUPPORT: usize = 64;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum EssDimError {
    #[error("configuration has no points")]
    EmptyConfiguration,
}

/// A family of pairwise distinct flats of dimension >= 1 with its total
/// dimension; the witness shape for essential-dimension and partition results.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cover {
    pub flats: Vec<Flat>,
    pub total_dim: usize,
}

impl Cover {
    /// Builds a cover from flats, computing the total dimension.
    /// Panics if a flat has dimension < 1 or a duplicate appears.
    pub fn from_flats(flats: Vec<Flat>) -> Self {
        let mut seen = BTreeSet::new();
        let mut total_dim = 0usize;
        for f in &flats {
            assert!(f.dim() >= 1, "cover flats must have dimension >= 1");
            assert!(seen.insert(f.clone()), "cover flats must be distinct");
            total_dim += f.dim() as usize;
        }
        Cover { flats, total_dim }
    }

    /// True when every support point lies in some flat of the cover.
    pub fn covers<C: Configuration>(&self, config: &C) -> bool {
        config
            .support()
            .iter()
            .all(|p| self.flats.iter().any(|f| f.contains(p)))
    }
}

fn unit_point(ambient: usize, j: usize) -> Point {
    let mut coords = vec![int(0); ambient + 1];
    coords[j] = int(1);
    Point::new(coords).expect("unit vector is nonzero")
}

/// One fixed line through `p`: its join with the first standard basis point
/// that differs from it. Returns None only in ambient dimension 0, where no
/// line exists.
fn fallback_line(ambient: usize, p: &Point) -> Option<Flat> {
    if ambient == 0 {
        return None;
    }
    for j in 0..=ambient {
        let e = unit_point(ambient, j);
        if &e != p {
            return Some(
                Flat::span(ambient, &[p.clone(), e]).expect("two distinct points span a line"),
            );
        }
    }
    None
}

/// Every distinct span of a support subset with 1 <= dim <= max_dim, plus one
/// fallback line per support point. Sorted canonically.
pub fn candidate_flats<C: Configuration>(config: &C, max_dim: usize) -> Vec<Flat> {
    assert!(max_dim >= 1, "max_dim must be at least 1");
    let ambient = config.ambient_dim();
    let support = config.support();
    let mut out = BTreeSet::new();
    // Spans of larger subsets repeat spans of independent subsets of size
    // dim + 1, so size <= max_dim + 1 reaches every span of dim <= max_dim.
    for size in 2..=(max_dim + 1).min(support.len()) {
        for subset in support.iter().combinations(size) {
            let points: Vec<Point> = subset.into_iter().cloned().collect();
            let span = Flat::span(ambient, &points).expect("support shares the ambient space");
            let dim = span.dim();
            if dim >= 1 && dim <= max_dim as i64 {
                out.insert(span);
            }
        }
    }
    for p in support {
        if let Some(line) = fallback_line(ambient, p) {
            out.insert(line);
        }
    }
    out.into_iter().collect()
}

struct Candidate {
    mask: u64,
    cost: usize,
    weight: u64,
}

fn coverage_mask<C: Configuration>(config: &C, flat: &Flat) -> u64 {
    let mut mask = 0u64;
    for (i, p) in config.support().iter().enumerate() {
        if flat.contains(p) {
            mask |= 1u64 << i;
        }
    }
    mask
}

fn mask_weight<C: Configuration>(config: &C, mask: u64) -> u64 {
    let mut w = 0u64;
    let mut bits = mask;
    while bits != 0 {
        let i = bits.trailing_zeros() as usize;
        w += config.multiplicity(i);
        bits &= bits - 1;
    }
    w
}

/// Exhaustive search for a full cover within `budget` total dimension.
/// Candidates must be ordered deterministically; the first cover found (in
/// that order, branching on the lowest uncovered point) is returned.
fn search_cover(
    cands: &[(u64, usize)],
    full: u64,
    covered: u64,
    budget: usize,
    chosen: &mut Vec<usize>,
) -> bool {
    if covered & full == full {
        return true;
    }
    if budget == 0 {
        return false;
    }
    let lowest = (!covered & full).trailing_zeros();
    let bit = 1u64 << lowest;
    for (idx, &(mask, dim)) in cands.iter().enumerate() {
        if mask & bit != 0 && dim <= budget {
            chosen.push(idx);
            if search_cover(cands, full, covered | mask, budget - dim, chosen) {
                return true;
            }
            chosen.pop();
        }
    }
    false
}

/// K(S) with an optimal witness. Exact: budgets are tried in increasing
/// order, so the returned total dimension is minimal and the witness attains
/// it.
pub fn essential_dimension<C: Configuration>(config: &C) -> Result<(usize, Cover), EssDimError> {
    let n = config.support_len();
    if n == 0 {
        return Err(EssDimError::EmptyConfiguration);
    }
    assert!(n <= MAX_SUPPORT, "support exceeds the {MAX_SUPPORT}-point search cap");
    let ambient = config.ambient_dim();
    let span_all = Flat::span(ambient, config.support()).expect("nonempty support");
    let upper = (span_all.dim().max(1)) as usize;
    let flats = candidate_flats(config, upper);
    let mut cands: Vec<(u64, usize, &Flat)> = flats
        .iter()
        .map(|f| (coverage_mask(config, f), f.dim() as usize, f))
        .collect();
    // Prefer high coverage per unit dimension; ties break on canonical order.
    cands.sort_by(|a, b| {
        let ra = a.0.count_ones() as u64 * b.1 as u64;
        let rb = b.0.count_ones() as u64 * a.1 as u64;
        rb.cmp(&ra).then(a.1.cmp(&b.1)).then(a.2.cmp(b.2))
    });
    let pairs: Vec<(u64, usize)> = cands.iter().map(|&(m, d, _)| (m, d)).collect();
    let full = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
    for budget in 1..=upper {
        let mut chosen = Vec::new();
        if search_cover(&pairs, full, 0, budget, &mut chosen) {
            let witness =
                Cover::from_flats(chosen.into_iter().map(|i| cands[i].2.clone()).collect());
            return Ok((witness.total_dim, witness));
        }
    }
    unreachable!("the span of the support is itself an affordable cover")
}

/// Branch and bound for the heaviest coverable weight. Candidates are sorted
/// by descending weight, so the sum of the next `budget` weights bounds any
/// further gain (every candidate costs at least 1).
fn budgeted_max_weight<C: Configuration>(config: &C, cands: &[Candidate], budget: usize) -> u64 {
    let prefix: Vec<u64> = std::iter::once(0)
        .chain(cands.iter().scan(0u64, |acc, c| {
            *acc += c.weight;
            Some(*acc)
        }))
        .collect();
    let top_sum = |idx: usize, b: usize| {
        let end = (idx + b).min(cands.len());
        prefix[end] - prefix[idx]
    };
    fn dfs<C: Configuration>(
        config: &C,
        cands: &[Candidate],
        top_sum: &dyn Fn(usize, usize) -> u64,
        idx: usize,
        budget: usize,
        covered: u64,
        weight: u64,
        best: &mut u64,
    ) {
        if weight > *best {
            *best = weight;
        }
        if idx == cands.len() || budget == 0 {
            return;
        }
        if weight + top_sum(idx, budget) <= *best {
            return;
        }
        let c = &cands[idx];
        if c.cost <= budget {
            let gained = c.mask & !covered;
            if gained != 0 {
                dfs(
                    config,
                    cands,
                    top_sum,
                    idx + 1,
                    budget - c.cost,
                    covered | c.mask,
                    weight + mask_weight(config, gained),
                    best,
                );
            }
        }
        dfs(config, cands, top_sum, idx + 1, budget, covered, weight, best);
    }
    let mut best = 0;
    dfs(config, cands, &top_sum, 0, budget, 0, 0, &mut best);
    best
}

fn dim_cost_candidates<C: Configuration>(config: &C, max_dim: usize) -> Vec<Candidate> {
    let mut cands: Vec<Candidate> = candidate_flats(config, max_dim)
        .iter()
        .map(|f| {
            let mask = coverage_mask(config, f);
            Candidate {
                mask,
                cost: f.dim() as usize,
                weight: mask_weight(config, mask),
            }
        })
        .collect();
    cands.sort_by(|a, b| b.weight.cmp(&a.weight).then(a.cost.cmp(&b.cost)).then(a.mask.cmp(&b.mask)));
    cands
}

/// Heaviest subset of S coverable by flats of dimension >= 1 with total
/// dimension <= t. Equivalently the largest weight of a subset with essential
/// dimension <= t; 0 at t = 0.
pub fn cover_max_points<C: Configuration>(config: &C, t: usize) -> u64 {
    let n = config.support_len();
    if t == 0 || n == 0 || config.ambient_dim() == 0 {
        return 0;
    }
    assert!(n <= MAX_SUPPORT, "support exceeds the {MAX_SUPPORT}-point search cap");
    let max_dim = t.min(config.ambient_dim());
    let cands = dim_cost_candidates(config, max_dim);
    budgeted_max_weight(config, &cands, t)
}

/// The coverage numbers g_0 .. g_k: g_i is the heaviest subset coverable when
/// a flat of dimension j costs j + 1 and the budget is i + 1, so 0-flats
/// (single points) are purchasable and g_0 picks out the heaviest point.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GProfile {
    pub values: Vec<u64>,
}

pub fn g_profile<C: Configuration>(config: &C, k: usize) -> GProfile {
    let n = config.support_len();
    if n == 0 {
        return GProfile {
            values: vec![0; k + 1],
        };
    }
    assert!(n <= MAX_SUPPORT, "support exceeds the {MAX_SUPPORT}-point search cap");
    let mut cands: Vec<Candidate> = (0..n)
        .map(|i| Candidate {
            mask: 1u64 << i,
            cost: 1,
            weight: config.multiplicity(i),
        })
        .collect();
    let max_dim = k.min(config.ambient_dim());
    if max_dim >= 1 {
        for f in candidate_flats(config, max_dim) {
            let mask = coverage_mask(config, &f);
            cands.push(Candidate {
                mask,
                cost: f.dim() as usize + 1,
                weight: mask_weight(config, mask),
            });
        }
    }
    cands.sort_by(|a, b| b.weight.cmp(&a.weight).then(a.cost.cmp(&b.cost)).then(a.mask.cmp(&b.mask)));
    let values = (0..=k)
        .map(|i| budgeted_max_weight(config, &cands, i + 1))
        .collect();
    GProfile { values }
}

/// Exact products prod_{i=0..j} (n - g_i) for j = 0..k, the Beck-type lower
/// counts reported next to measured f_j; no constant is asserted.
pub fn beck_lower_profile<C: Configuration>(config: &C, k: usize) -> Vec<BigInt> {
    let n = BigInt::from(config.total_weight());
    let g = g_profile(config, k);
    let mut out = Vec::with_capacity(k + 1);
    let mut product = BigInt::from(1);
    for i in 0..=k {
        product *= &n - BigInt::from(g.values[i]);
        out.push(product.clone());
    }
    out
}
