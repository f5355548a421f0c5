//! Exact rank by Gaussian elimination over the rationals.

use num_traits::Zero;

use crate::error::Result;
use crate::matrix::Matrix;
use crate::rational::Rational;

/// Dimension of the span of a list of equal-length vectors.
pub fn rank_of_vectors(mut vectors: Vec<Vec<Rational>>) -> usize {
    let width = vectors.first().map_or(0, Vec::len);
    let mut rank = 0;
    for col in 0..width {
        if rank == vectors.len() {
            break;
        }
        let Some(pivot) = (rank..vectors.len()).find(|&r| !vectors[r][col].is_zero()) else {
            continue;
        };
        vectors.swap(rank, pivot);
        let (head, tail) = vectors.split_at_mut(rank + 1);
        let pivot_row = &head[rank];
        let pivot_value = pivot_row[col].clone();
        for row in tail.iter_mut() {
            if row[col].is_zero() {
                continue;
            }
            let factor = &row[col] / &pivot_value;
            for k in col..width {
                if !pivot_row[k].is_zero() {
                    let delta = &factor * &pivot_row[k];
                    row[k] -= delta;
                }
            }
        }
        rank += 1;
    }
    rank
}

/// Dimension of the span of the vectorized matrices. All matrices must share
/// one shape; an empty family has rank 0.
pub fn rank_of_family(family: &[Matrix]) -> Result<usize> {
    let Some(first) = family.first() else {
        return Ok(0);
    };
    for m in family {
        first.check_same_shape(m)?;
    }
    Ok(rank_of_vectors(family.iter().map(|m| m.as_slice().to_vec()).collect()))
}
