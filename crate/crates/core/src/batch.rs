//! Data-parallel sweeps over many independent inputs.
//!
//! With the `parallel` feature (default) [`Strategy::Parallel`] runs on the
//! rayon pool; without it every strategy runs sequentially, so callers never
//! need their own `cfg` switches.

#[cfg(feature = "parallel")]
use rayon::prelude::*;

use crate::combination::ConvexCombination;
use crate::decompose::{decompose_centrosymmetric, decompose_stochastic};
use crate::error::Result;
use crate::extremes::is_extreme_oracle;
use crate::matrix::Matrix;
use crate::perm::RectPermMatrix;
use crate::sample::uniform_rows;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Strategy {
    Sequential,
    #[default]
    Parallel,
}

impl Strategy {
    /// Whether this strategy actually fans out in this build.
    pub fn is_parallel(self) -> bool {
        cfg!(feature = "parallel") && self == Strategy::Parallel
    }
}

/// `f` over every item, results in input order.
pub fn map<T, U, F>(items: &[T], strategy: Strategy, f: F) -> Vec<U>
where
    T: Sync,
    U: Send,
    F: Fn(&T) -> U + Sync + Send,
{
    #[cfg(feature = "parallel")]
    if strategy.is_parallel() {
        return items.par_iter().map(f).collect();
    }
    let _ = strategy;
    items.iter().map(f).collect()
}

/// `f` over `0..count`, results in index order.
pub fn map_indices<U, F>(count: u64, strategy: Strategy, f: F) -> Vec<U>
where
    U: Send,
    F: Fn(u64) -> U + Sync + Send,
{
    #[cfg(feature = "parallel")]
    if strategy.is_parallel() {
        return (0..count).into_par_iter().map(f).collect();
    }
    let _ = strategy;
    (0..count).map(f).collect()
}

/// Number of indices in `0..count` satisfying `pred`.
pub fn count_indices<F>(count: u64, strategy: Strategy, pred: F) -> u64
where
    F: Fn(u64) -> bool + Sync + Send,
{
    #[cfg(feature = "parallel")]
    if strategy.is_parallel() {
        return (0..count).into_par_iter().filter(|&k| pred(k)).count() as u64;
    }
    let _ = strategy;
    (0..count).filter(|&k| pred(k)).count() as u64
}

pub fn decompose_all(matrices: &[Matrix], strategy: Strategy) -> Vec<Result<ConvexCombination<RectPermMatrix>>> {
    map(matrices, strategy, decompose_stochastic)
}

pub fn decompose_centro_all(matrices: &[Matrix], strategy: Strategy) -> Vec<Result<ConvexCombination<Matrix>>> {
    map(matrices, strategy, decompose_centrosymmetric)
}

/// Row masks selecting one or two columns out of `n`.
fn small_row_masks(n: usize) -> Vec<u32> {
    (1u32..1 << n).filter(|m| m.count_ones() <= 2).collect()
}

/// Number of matrices whose every row is uniform on one or two columns:
/// `(n + n(n-1)/2)^m`.
pub fn candidate_count(m: usize, n: usize) -> u64 {
    (small_row_masks(n).len() as u64).pow(m as u32)
}

/// The `index`-th candidate in mixed-radix order (last row fastest).
pub fn candidate(m: usize, n: usize, index: u64) -> Matrix {
    let masks = small_row_masks(n);
    let radix = masks.len() as u64;
    let mut rest = index;
    let mut chosen = vec![0u32; m];
    for slot in chosen.iter_mut().rev() {
        *slot = masks[(rest % radix) as usize];
        rest /= radix;
    }
    uniform_rows(n, &chosen)
}

/// Counts extreme points by brute force: every candidate whose rows are
/// uniform on one or two columns (a superset of the extreme points of both
/// polytopes) is tested with the null-space oracle; with `centro` only
/// centrosymmetric candidates are considered.
pub fn oracle_extreme_count(m: usize, n: usize, centro: bool, strategy: Strategy) -> u64 {
    count_indices(candidate_count(m, n), strategy, |k| {
        let a = candidate(m, n, k);
        if centro && !a.is_centrosymmetric() {
            return false;
        }
        is_extreme_oracle(&a, centro).expect("candidates are stochastic")
    })
}
