//! Executable forms of three constructive proof steps: partitioning a
//! low-total-dimension cover into two halves of smaller join, refining a
//! degeneracy witness into rich alpha'-degenerate flats, and extracting a
//! skew line pair from a 3-flat that is degenerate but not essentially so.
//!
//! These follow the source arguments literally (ascending-dimension prefix
//! greedy, smallest-subflat replacement, exhaustive line-pair search) rather
//! than anything smarter; the point is to run the argument, not improve it.

use crate::essdim::Cover;
use crate::flat::Flat;
use crate::incidence::{is_alpha_degenerate, is_essentially_alpha_degenerate, spanned_flats};
use crate::pointset::Configuration;
use crate::scalar::{format_scalar, rational_sqrt, Scalar};
use itertools::Itertools;
use num::bigint::BigInt;
use num::rational::BigRational;
use num::{One, Signed, Zero};
use std::collections::BTreeSet;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ProcedureError {
    #[error("cover total dimension {total} exceeds the budget k = {k}")]
    BudgetExceeded { total: usize, k: usize },
    #[error("precondition violated: {0}")]
    PreconditionViolated(String),
}

fn rat(n: u64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

/// Outcome of splitting a cover G with total dimension <= k into two parts
/// whose joins both have dimension <= k-1.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PartitionResult {
    Partitioned { g1: Cover, g2: Cover },
    /// The split failed and every flat is a line with k odd; the obstruction
    /// the equality analysis predicts.
    AllLinesOddK,
    /// The split failed because G is a single k-flat, which no proper split
    /// can shrink. The equality analysis admits s = k as well as s = 1, so
    /// this case is a genuine second obstruction.
    SingleKFlat,
}

fn join_of(ambient: usize, flats: &[&Flat]) -> Flat {
    let mut acc = Flat::empty(ambient);
    for f in flats {
        acc = acc.join(f).expect("same ambient");
    }
    acc
}

/// Ascending-dimension prefix greedy: g1 is the longest sorted prefix whose
/// join stays within dimension k-1, g2 the remainder. When g2's join also
/// fits, the partition is returned; otherwise the failure is classified.
pub fn partition_cover(g: &Cover, k: usize) -> Result<PartitionResult, ProcedureError> {
    if g.total_dim > k {
        return Err(ProcedureError::BudgetExceeded {
            total: g.total_dim,
            k,
        });
    }
    if g.flats.is_empty() {
        return Ok(PartitionResult::Partitioned {
            g1: Cover::from_flats(vec![]),
            g2: Cover::from_flats(vec![]),
        });
    }
    let ambient = g.flats[0].ambient_dim();
    let mut sorted: Vec<&Flat> = g.flats.iter().collect();
    sorted.sort_by_key(|f| (f.dim(), (*f).clone()));

    let limit = k as i64 - 1;
    let mut prefix_join = Flat::empty(ambient);
    let mut split = 0;
    for f in &sorted {
        let next = prefix_join.join(f).expect("same ambient");
        if next.dim() > limit {
            break;
        }
        prefix_join = next;
        split += 1;
    }
    let (g1_flats, g2_flats) = sorted.split_at(split);
    let g2_join = join_of(ambient, g2_flats);

    if let Some(first) = g2_flats.first() {
        // The proof's chain: dim(join(g2)) <= s + k/s - 1 <= k, with s the
        // smallest dimension in g2. Checked exactly on every run.
        let s = BigRational::from_integer(BigInt::from(first.dim()));
        let k_rat = rat(k as u64);
        let bound = &s + &k_rat / &s - BigRational::one();
        let join_dim = BigRational::from_integer(BigInt::from(g2_join.dim()));
        assert!(
            join_dim <= bound && bound <= k_rat,
            "partition chain inequality failed: dim {} vs s + k/s - 1 = {}",
            g2_join.dim(),
            bound
        );
    }

    if g2_join.dim() <= limit {
        return Ok(PartitionResult::Partitioned {
            g1: Cover::from_flats(g1_flats.iter().map(|f| (*f).clone()).collect()),
            g2: Cover::from_flats(g2_flats.iter().map(|f| (*f).clone()).collect()),
        });
    }
    if g.flats.iter().all(|f| f.dim() == 1) && k % 2 == 1 {
        return Ok(PartitionResult::AllLinesOddK);
    }
    if g.flats.len() == 1 && g.flats[0].dim() == k as i64 {
        return Ok(PartitionResult::SingleKFlat);
    }
    unreachable!("partition can only fail on all-lines-odd-k or a single k-flat")
}

/// A refined degeneracy witness: flats that are alpha'-degenerate and rich,
/// jointly spanning the ambient flat, covering the listed points.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RefinedWitness {
    pub flats: Vec<Flat>,
    pub covered_indices: Vec<usize>,
    pub covered_weight: u64,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RefineOutcome {
    Refined(RefinedWitness),
    /// The refined flats join below dimension k, exhibiting a proper subflat
    /// that carries the heavy coverage; the input flat was degenerate below k.
    DegenerateBelowK,
}

fn coverage_weight<C: Configuration>(config: &C, flats: &[Flat]) -> (Vec<usize>, u64) {
    let mut indices = BTreeSet::new();
    for f in flats {
        for i in config.incident_indices(f) {
            indices.insert(i);
        }
    }
    let weight = indices.iter().map(|&i| config.multiplicity(i)).sum();
    (indices.into_iter().collect(), weight)
}

/// The smallest-dimension span of incident points of `gamma` holding at least
/// (alpha')^(dim gamma - t) of gamma's weight, lex-least at the first
/// qualifying dimension. Total: the span of all incident points qualifies.
fn smallest_rich_subflat<C: Configuration>(gamma: &Flat, config: &C, alpha_prime: &Scalar) -> Flat {
    let ambient = config.ambient_dim();
    let support = config.support();
    let incident = config.incident_indices(gamma);
    let w_gamma = rat(config.incident_weight(gamma));
    for t in 0..=gamma.dim() {
        let threshold = alpha_prime.pow((gamma.dim() - t) as i32) * &w_gamma;
        let mut spans = BTreeSet::new();
        for subset in incident.iter().combinations(t as usize + 1) {
            let points: Vec<_> = subset.iter().map(|&&i| support[i].clone()).collect();
            let span = Flat::span(ambient, &points).expect("same ambient");
            if span.dim() == t {
                spans.insert(span);
            }
        }
        for span in spans {
            if rat(config.incident_weight(&span)) >= threshold {
                return span;
            }
        }
    }
    unreachable!("gamma's own point span qualifies at its dimension")
}

/// Runs the witness-refinement step: replace each non-alpha'-degenerate flat
/// by its smallest rich subflat, then drop flats holding fewer than
/// (1 - alpha') of the ambient flat's weight. Preconditions (checked):
/// (k + alpha)/(k + 1) < alpha' < 1, total input dimension < k, input flats
/// lie in `lambda` and cover more than alpha' of its weight.
pub fn refine_witness<C: Configuration>(
    lambda: &Flat,
    config: &C,
    gprime: &[Flat],
    alpha: &Scalar,
    alpha_prime: &Scalar,
) -> Result<RefineOutcome, ProcedureError> {
    let k = lambda.dim();
    if k < 1 {
        return Err(ProcedureError::PreconditionViolated(format!(
            "ambient flat must have dimension >= 1, got {k}"
        )));
    }
    if !alpha.is_positive() {
        return Err(ProcedureError::PreconditionViolated(format!(
            "alpha must be positive, got {}",
            format_scalar(alpha)
        )));
    }
    let k_rat = rat(k as u64);
    let lower = (&k_rat + alpha) / (&k_rat + BigRational::one());
    if !(alpha_prime > &lower && alpha_prime < &BigRational::one()) {
        return Err(ProcedureError::PreconditionViolated(format!(
            "alpha' = {} outside ((k + alpha)/(k + 1), 1) = ({}, 1)",
            format_scalar(alpha_prime),
            format_scalar(&lower)
        )));
    }
    let mut total_dim: i64 = 0;
    for gamma in gprime {
        if gamma.dim() < 0 {
            return Err(ProcedureError::PreconditionViolated(
                "witness flats must be nonempty".to_string(),
            ));
        }
        if !lambda.contains_flat(gamma) {
            return Err(ProcedureError::PreconditionViolated(
                "witness flat lies outside the ambient flat".to_string(),
            ));
        }
        total_dim += gamma.dim();
    }
    if total_dim >= k {
        return Err(ProcedureError::PreconditionViolated(format!(
            "witness total dimension {total_dim} must be < k = {k}"
        )));
    }
    let w = config.incident_weight(lambda);
    let (_, covered_before) = coverage_weight(config, gprime);
    if rat(covered_before) <= alpha_prime * rat(w) {
        return Err(ProcedureError::PreconditionViolated(format!(
            "witness covers {covered_before} of {w}, not more than alpha' of the weight"
        )));
    }

    let mut refined: Vec<Flat> = Vec::new();
    for gamma in gprime {
        let replacement = if is_alpha_degenerate(gamma, config, alpha_prime)
            .expect("alpha' is positive")
        {
            gamma.clone()
        } else {
            smallest_rich_subflat(gamma, config, alpha_prime)
        };
        if !refined.contains(&replacement) {
            refined.push(replacement);
        }
    }
    let poverty = (BigRational::one() - alpha_prime) * rat(w);
    refined.retain(|f| rat(config.incident_weight(f)) >= poverty);

    let joined = join_of(lambda.ambient_dim(), &refined.iter().collect::<Vec<_>>());
    if joined.dim() < k {
        return Ok(RefineOutcome::DegenerateBelowK);
    }
    let (covered_indices, covered_weight) = coverage_weight(config, &refined);
    Ok(RefineOutcome::Refined(RefinedWitness {
        flats: refined,
        covered_indices,
        covered_weight,
    }))
}

/// Lines considered by the skew-pair search: every line spanned by two
/// incident points, plus each incident point joined with each basis point of
/// the ambient flat. The basis joins make the search total: for any line l
/// and point p outside it, some basis point avoids the plane of l and p, and
/// joining p with it gives a line meeting that plane only at p, hence skew
/// to l.
fn candidate_lines<C: Configuration>(lambda: &Flat, config: &C) -> Vec<Flat> {
    let ambient = config.ambient_dim();
    let support = config.support();
    let incident = config.incident_indices(lambda);
    let mut lines = BTreeSet::new();
    for pair in incident.iter().combinations(2) {
        let span = Flat::span(ambient, &[support[*pair[0]].clone(), support[*pair[1]].clone()])
            .expect("same ambient");
        if span.dim() == 1 {
            lines.insert(span);
        }
    }
    for &i in &incident {
        for b in lambda.basis_points() {
            if b != support[i] {
                let span = Flat::span(ambient, &[support[i].clone(), b]).expect("same ambient");
                lines.insert(span);
            }
        }
    }
    lines.into_iter().collect()
}

/// Finds two skew lines in a 3-flat whose union carries at least sqrt(alpha)
/// of the flat's weight, each line carrying at least (sqrt(alpha) - alpha) of
/// it. Preconditions (checked): alpha is a perfect rational square in (0, 1),
/// and the flat is alpha-degenerate but not essentially-sqrt(alpha)-
/// degenerate. Among qualifying pairs the one with the heaviest union is
/// returned (ties to the canonically least pair); None should not occur when
/// the preconditions hold.
pub fn skew_line_witness<C: Configuration>(
    lambda: &Flat,
    config: &C,
    alpha: &Scalar,
) -> Result<Option<(Flat, Flat)>, ProcedureError> {
    if lambda.dim() != 3 {
        return Err(ProcedureError::PreconditionViolated(format!(
            "skew-pair extraction needs a 3-flat, got dimension {}",
            lambda.dim()
        )));
    }
    let beta = rational_sqrt(alpha).ok_or_else(|| {
        ProcedureError::PreconditionViolated(format!(
            "alpha = {} is not a perfect rational square",
            format_scalar(alpha)
        ))
    })?;
    if !(alpha > &BigRational::zero() && alpha < &BigRational::one()) {
        return Err(ProcedureError::PreconditionViolated(format!(
            "alpha = {} outside (0, 1)",
            format_scalar(alpha)
        )));
    }
    let w = config.incident_weight(lambda);
    if w == 0 {
        return Err(ProcedureError::PreconditionViolated(
            "the flat has no incident points".to_string(),
        ));
    }
    if !is_alpha_degenerate(lambda, config, alpha).expect("alpha is positive") {
        return Err(ProcedureError::PreconditionViolated(format!(
            "the flat is not {}-degenerate",
            format_scalar(alpha)
        )));
    }
    if is_essentially_alpha_degenerate(lambda, config, &beta).expect("beta is positive") {
        return Err(ProcedureError::PreconditionViolated(format!(
            "the flat is essentially {}-degenerate",
            format_scalar(&beta)
        )));
    }

    let w_rat = rat(w);
    let line_threshold = (&beta - alpha) * &w_rat;
    let union_threshold = &beta * &w_rat;
    let lines = candidate_lines(lambda, config);
    let weights: Vec<u64> = lines.iter().map(|l| config.incident_weight(l)).collect();
    let mut best: Option<(u64, &Flat, &Flat)> = None;
    for i in 0..lines.len() {
        if rat(weights[i]) < line_threshold {
            continue;
        }
        for j in (i + 1)..lines.len() {
            if rat(weights[j]) < line_threshold {
                continue;
            }
            let meet = lines[i].meet(&lines[j]).expect("same ambient");
            if !meet.is_empty() {
                continue;
            }
            // Skew lines share no points, so the union weight is the sum.
            let union = weights[i] + weights[j];
            if rat(union) < union_threshold {
                continue;
            }
            if best.as_ref().map_or(true, |&(u, _, _)| union > u) {
                best = Some((union, &lines[i], &lines[j]));
            }
        }
    }
    Ok(best.map(|(_, a, b)| (a.clone(), b.clone())))
}

/// Spanned k-flat enumeration restricted to a flat, used by callers preparing
/// procedure inputs; identical to restricting the configuration first.
pub fn spanned_flats_in<C: Configuration>(
    lambda: &Flat,
    config: &C,
    k: usize,
) -> Result<Vec<Flat>, crate::incidence::IncidenceError> {
    let inside = config.restrict_to(lambda);
    Ok(spanned_flats(&inside, k)?.flats().cloned().collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions;
    use crate::point::Point;
    use crate::pointset::MultiPointSet;
    use crate::scalar::ratio;

    fn pt(coords: &[i64]) -> Point {
        Point::from_integers(coords).unwrap()
    }

    fn line(ambient: usize, a: &[i64], b: &[i64]) -> Flat {
        Flat::span(ambient, &[pt(a), pt(b)]).unwrap()
    }

    #[test]
    fn partition_two_skew_lines() {
        let l1 = line(3, &[1, 1, 0, 0], &[1, 2, 0, 0]);
        let l2 = line(3, &[1, 0, 1, 1], &[1, 0, 2, 1]);
        let g = Cover::from_flats(vec![l1.clone(), l2.clone()]);
        match partition_cover(&g, 2).unwrap() {
            PartitionResult::Partitioned { g1, g2 } => {
                assert_eq!(g1.flats.len(), 1);
                assert_eq!(g2.flats.len(), 1);
                assert!(g1.flats[0].dim() <= 1 && g2.flats[0].dim() <= 1);
            }
            other => panic!("expected a partition, got {other:?}"),
        }
    }

    #[test]
    fn partition_three_skew_lines_hits_the_marker() {
        let family = constructions::k_lines_family(6, 3, 5).unwrap();
        let g = Cover::from_flats(family.lines.clone());
        assert_eq!(partition_cover(&g, 3).unwrap(), PartitionResult::AllLinesOddK);
    }

    #[test]
    fn partition_line_and_disjoint_plane() {
        let l = line(4, &[1, 0, 0, 0, 0], &[0, 1, 0, 0, 0]);
        let plane = Flat::from_rows(
            4,
            vec![
                vec![int_s(0), int_s(0), int_s(1), int_s(0), int_s(0)],
                vec![int_s(0), int_s(0), int_s(0), int_s(1), int_s(0)],
                vec![int_s(0), int_s(0), int_s(0), int_s(0), int_s(1)],
            ],
        )
        .unwrap();
        let g = Cover::from_flats(vec![plane.clone(), l.clone()]);
        match partition_cover(&g, 3).unwrap() {
            PartitionResult::Partitioned { g1, g2 } => {
                assert_eq!(g1.flats, vec![l]);
                assert_eq!(g2.flats, vec![plane]);
            }
            other => panic!("expected a partition, got {other:?}"),
        }
    }

    fn int_s(n: i64) -> Scalar {
        crate::scalar::int(n)
    }

    #[test]
    fn partition_single_flat_cases() {
        let plane = Flat::from_rows(
            2,
            vec![
                vec![int_s(1), int_s(0), int_s(0)],
                vec![int_s(0), int_s(1), int_s(0)],
                vec![int_s(0), int_s(0), int_s(1)],
            ],
        )
        .unwrap();
        assert_eq!(
            partition_cover(&Cover::from_flats(vec![plane]), 2).unwrap(),
            PartitionResult::SingleKFlat
        );
        let l = line(2, &[1, 0, 0], &[1, 1, 0]);
        assert_eq!(
            partition_cover(&Cover::from_flats(vec![l]), 1).unwrap(),
            PartitionResult::AllLinesOddK
        );
    }

    #[test]
    fn partition_budget_check() {
        let plane = Flat::from_rows(
            3,
            vec![
                vec![int_s(1), int_s(0), int_s(0), int_s(0)],
                vec![int_s(0), int_s(1), int_s(0), int_s(0)],
                vec![int_s(0), int_s(0), int_s(1), int_s(0)],
            ],
        )
        .unwrap();
        assert_eq!(
            partition_cover(&Cover::from_flats(vec![plane]), 1).unwrap_err(),
            ProcedureError::BudgetExceeded { total: 2, k: 1 }
        );
    }

    #[test]
    fn partition_meeting_lines_fit_in_one_part() {
        // Two concurrent lines span only a plane, so both land in g1 at k = 3.
        let l1 = line(3, &[1, 0, 0, 0], &[1, 1, 0, 0]);
        let l2 = line(3, &[1, 0, 0, 0], &[1, 0, 1, 0]);
        let g = Cover::from_flats(vec![l1, l2]);
        match partition_cover(&g, 3).unwrap() {
            PartitionResult::Partitioned { g1, g2 } => {
                assert_eq!(g1.flats.len(), 2);
                assert!(g2.flats.is_empty());
            }
            other => panic!("expected a partition, got {other:?}"),
        }
    }

    #[test]
    fn refine_keeps_a_good_witness() {
        let set = constructions::skew_lines(12).unwrap();
        let family = constructions::skew_lines_family(12).unwrap();
        let lambda = Flat::whole_space(3);
        let gprime = vec![family.line_a.clone(), family.line_b.clone()];
        let outcome =
            refine_witness(&lambda, &set, &gprime, &ratio(1, 2), &ratio(9, 10)).unwrap();
        match outcome {
            RefineOutcome::Refined(w) => {
                assert_eq!(w.flats, gprime);
                assert_eq!(w.covered_weight, 12);
                assert_eq!(w.covered_indices.len(), 12);
            }
            other => panic!("expected a refined witness, got {other:?}"),
        }
    }

    #[test]
    fn refine_replaces_and_removes() {
        // P^4: five points on a line inside a plane witness, three on a skew
        // line, a double point off both, and a stray single point.
        let l = line(4, &[1, 0, 0, 0, 0], &[0, 1, 0, 0, 0]);
        let plane = Flat::from_rows(
            4,
            vec![
                vec![int_s(1), int_s(0), int_s(0), int_s(0), int_s(0)],
                vec![int_s(0), int_s(1), int_s(0), int_s(0), int_s(0)],
                vec![int_s(0), int_s(0), int_s(1), int_s(0), int_s(0)],
            ],
        )
        .unwrap();
        let l2 = line(4, &[0, 0, 1, 0, 0], &[0, 0, 0, 1, 0]);
        let q = pt(&[0, 0, 0, 0, 1]);
        let mut entries: Vec<(Point, u64)> = (1..=5).map(|t| (pt(&[1, t, 0, 0, 0]), 1)).collect();
        entries.push((pt(&[0, 0, 1, 1, 0]), 1));
        entries.push((pt(&[0, 0, 1, 2, 0]), 1));
        entries.push((pt(&[0, 0, 1, 3, 0]), 1));
        entries.push((q.clone(), 2));
        let config = MultiPointSet::new(4, entries).unwrap();
        let lambda = Flat::whole_space(4);
        let q_flat = Flat::span(4, &[q]).unwrap();
        let r_flat = Flat::span(4, &[pt(&[1, 1, 0, 0, 0])]).unwrap();
        let gprime = vec![plane.clone(), l2.clone(), q_flat.clone(), r_flat];
        let outcome =
            refine_witness(&lambda, &config, &gprime, &ratio(1, 10), &ratio(5, 6)).unwrap();
        match outcome {
            RefineOutcome::Refined(w) => {
                // The plane collapses to the line carrying its points; the
                // stray single point is too poor to keep.
                assert_eq!(w.flats, vec![l, l2, q_flat]);
                assert_eq!(w.covered_weight, 10);
            }
            other => panic!("expected a refined witness, got {other:?}"),
        }
    }

    #[test]
    fn refine_all_poor_gives_the_marker() {
        // Twenty five-fold points: every singleton flat is below the poverty
        // line at alpha' = 9/10, so the witness empties out.
        let entries: Vec<(Point, u64)> = (0..20)
            .map(|t| (pt(&[1, t, t * t, t * t * t]), 5))
            .collect();
        let config = MultiPointSet::new(3, entries).unwrap();
        let lambda = Flat::whole_space(3);
        let gprime: Vec<Flat> = config
            .support()
            .iter()
            .map(|p| Flat::span(3, std::slice::from_ref(p)).unwrap())
            .collect();
        let outcome =
            refine_witness(&lambda, &config, &gprime, &ratio(1, 2), &ratio(9, 10)).unwrap();
        assert_eq!(outcome, RefineOutcome::DegenerateBelowK);
    }

    #[test]
    fn refine_precondition_checks() {
        let set = constructions::skew_lines(12).unwrap();
        let family = constructions::skew_lines_family(12).unwrap();
        let lambda = Flat::whole_space(3);
        let gprime = vec![family.line_a.clone(), family.line_b.clone()];
        // alpha' below (k + alpha)/(k + 1) = 7/8.
        assert!(matches!(
            refine_witness(&lambda, &set, &gprime, &ratio(1, 2), &ratio(3, 4)),
            Err(ProcedureError::PreconditionViolated(_))
        ));
        // Budget: a plane plus a line reaches k = 3.
        let plane = family.line_a.join_point(&pt(&[1, 0, 1, 1])).unwrap();
        assert!(matches!(
            refine_witness(
                &lambda,
                &set,
                &[plane, family.line_b.clone()],
                &ratio(1, 2),
                &ratio(9, 10)
            ),
            Err(ProcedureError::PreconditionViolated(_))
        ));
        // Coverage: one line holds only half the points.
        assert!(matches!(
            refine_witness(
                &lambda,
                &set,
                &[family.line_a.clone()],
                &ratio(1, 2),
                &ratio(9, 10)
            ),
            Err(ProcedureError::PreconditionViolated(_))
        ));
    }

    #[test]
    fn skew_witness_on_the_skew_lines_family() {
        let set = constructions::skew_lines(12).unwrap();
        let family = constructions::skew_lines_family(12).unwrap();
        let lambda = Flat::whole_space(3);
        let alpha = ratio(49, 64);
        let (a, b) = skew_line_witness(&lambda, &set, &alpha)
            .unwrap()
            .expect("the two construction lines qualify");
        let mut found = [a, b];
        found.sort();
        let mut expected = [family.line_a, family.line_b];
        expected.sort();
        assert_eq!(found, expected);
        // Thresholds hold exactly: each line has 6 >= (7/8 - 49/64) * 12 and
        // the union 12 >= (7/8) * 12.
        assert!(found[0].meet(&found[1]).unwrap().is_empty());
    }

    #[test]
    fn skew_witness_guards() {
        let set = constructions::skew_lines(12).unwrap();
        let lambda = Flat::whole_space(3);
        // Not a perfect square.
        assert!(matches!(
            skew_line_witness(&lambda, &set, &ratio(1, 2)),
            Err(ProcedureError::PreconditionViolated(_))
        ));
        // Not alpha-degenerate: the best plane holds 7 > (9/16) * 12.
        assert!(matches!(
            skew_line_witness(&lambda, &set, &ratio(9, 16)),
            Err(ProcedureError::PreconditionViolated(_))
        ));
        // Essentially degenerate: general-position points are coverable well
        // below the sqrt(alpha) fraction.
        let generic = constructions::random_general_position(12, 3, 2).unwrap();
        assert!(matches!(
            skew_line_witness(&lambda, &generic, &ratio(49, 64)),
            Err(ProcedureError::PreconditionViolated(_))
        ));
        // Wrong dimension.
        let plane_cfg = constructions::grid(3, 2).unwrap();
        assert!(matches!(
            skew_line_witness(&Flat::whole_space(2), &plane_cfg, &ratio(49, 64)),
            Err(ProcedureError::PreconditionViolated(_))
        ));
    }
}
