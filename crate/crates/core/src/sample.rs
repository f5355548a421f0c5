//! Random instances for sweeps and benchmarks.

use rand::Rng;

use crate::matrix::Matrix;
use crate::rational::{self, Rational};

/// Random stochastic `m x n` matrix. Each row draws integer weights in
/// `0..=max_weight` (about a third of them forced to zero) and is normalized
/// exactly, so entries are rationals with varied denominators.
pub fn random_stochastic<R: Rng + ?Sized>(rng: &mut R, m: usize, n: usize, max_weight: i64) -> Matrix {
    let rows = (0..m)
        .map(|_| {
            let mut weights: Vec<i64> = (0..n)
                .map(|_| {
                    if rng.gen_bool(0.35) {
                        0
                    } else {
                        rng.gen_range(1..=max_weight.max(1))
                    }
                })
                .collect();
            if weights.iter().all(|&w| w == 0) {
                let j = rng.gen_range(0..n);
                weights[j] = rng.gen_range(1..=max_weight.max(1));
            }
            let total: i64 = weights.iter().sum();
            weights.iter().map(|&w| rational::ratio(w, total)).collect()
        })
        .collect();
    Matrix::from_rows(rows).expect("positive dimensions")
}

/// Random centrosymmetric stochastic matrix `(S + S^pi) / 2` for a random
/// stochastic `S`.
pub fn random_centro_stochastic<R: Rng + ?Sized>(rng: &mut R, m: usize, n: usize, max_weight: i64) -> Matrix {
    let s = random_stochastic(rng, m, n, max_weight);
    (&s + &s.rotate_pi()).scale(&rational::half())
}

/// Random rational matrix with entries `p/q`, `|p| <= bound`, `1 <= q <= bound`.
pub fn random_rational<R: Rng + ?Sized>(rng: &mut R, m: usize, n: usize, bound: i64) -> Matrix {
    Matrix::from_fn(m, n, |_, _| -> Rational {
        rational::ratio(rng.gen_range(-bound..=bound), rng.gen_range(1..=bound.max(1)))
    })
}

/// Uniform distribution over the columns in each row's mask; row `i` uses
/// bit pattern `masks[i]` (bit `j` selects column `j + 1`). Masks must be
/// nonzero.
pub fn uniform_rows(n: usize, masks: &[u32]) -> Matrix {
    let rows = masks
        .iter()
        .map(|&mask| {
            assert!(mask != 0 && mask < (1 << n), "mask must select at least one column");
            let count = mask.count_ones() as i64;
            (0..n)
                .map(|j| {
                    if mask >> j & 1 == 1 {
                        rational::ratio(1, count)
                    } else {
                        rational::zero()
                    }
                })
                .collect()
        })
        .collect();
    Matrix::from_rows(rows).expect("positive dimensions")
}
