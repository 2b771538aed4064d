//! Small exact-arithmetic row-reduction helpers shared by the geometry types.

use crate::scalar::Scalar;
use num::Zero;

/// Reduces `rows` to reduced row echelon form in place, drops zero rows, and
/// returns the pivot columns in increasing order. The result is the unique
/// canonical basis of the row space.
pub fn rref(rows: &mut Vec<Vec<Scalar>>) -> Vec<usize> {
    let mut pivots = Vec::new();
    if rows.is_empty() {
        return pivots;
    }
    let ncols = rows[0].len();
    let mut pivot_row = 0usize;
    for col in 0..ncols {
        if pivot_row == rows.len() {
            break;
        }
        let Some(found) = (pivot_row..rows.len()).find(|&r| !rows[r][col].is_zero()) else {
            continue;
        };
        rows.swap(pivot_row, found);
        let lead = rows[pivot_row][col].clone();
        for entry in rows[pivot_row].iter_mut() {
            *entry = &*entry / &lead;
        }
        for r in 0..rows.len() {
            if r != pivot_row && !rows[r][col].is_zero() {
                let factor = rows[r][col].clone();
                for c in 0..ncols {
                    let delta = &factor * &rows[pivot_row][c];
                    rows[r][c] = &rows[r][c] - &delta;
                }
            }
        }
        pivots.push(col);
        pivot_row += 1;
    }
    rows.truncate(pivot_row);
    pivots
}

pub fn rank(rows: &[Vec<Scalar>]) -> usize {
    let mut copy: Vec<Vec<Scalar>> = rows.to_vec();
    rref(&mut copy);
    copy.len()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::int;

    fn m(rows: &[&[i64]]) -> Vec<Vec<Scalar>> {
        rows.iter()
            .map(|r| r.iter().map(|&x| int(x)).collect())
            .collect()
    }

    #[test]
    fn rref_is_canonical() {
        let mut a = m(&[&[2, 4, 6], &[1, 2, 3], &[0, 1, 1]]);
        let pivots = rref(&mut a);
        assert_eq!(pivots, vec![0, 1]);
        assert_eq!(a, m(&[&[1, 0, 1], &[0, 1, 1]]));

        // Same row space in a different presentation reduces identically.
        let mut b = m(&[&[1, 3, 4], &[3, 7, 10]]);
        rref(&mut b);
        assert_eq!(a, b);
    }

    #[test]
    fn rank_of_degenerate_rows() {
        assert_eq!(rank(&m(&[&[1, 2], &[2, 4], &[3, 6]])), 1);
        assert_eq!(rank(&m(&[&[0, 0], &[0, 0]])), 0);
        assert_eq!(rank(&[]), 0);
    }
}
