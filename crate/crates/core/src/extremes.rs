//! Extreme points of the stochastic polytope and of its centrosymmetric
//! subpolytope: structural predicates, lazy enumerators, and an independent
//! null-space oracle.
//!
//! The vertices of the stochastic polytope are the rectangular permutation
//! matrices. For the centrosymmetric polytope with an even row count they are
//! the centrosymmetric rectangular permutation matrices; with an odd row count
//! the rows off the center must form a centrosymmetric rectangular
//! permutation matrix, and the center row is either the unit row at the
//! center column (odd column count) or carries `1/2` at a mirrored pair of
//! columns `j, n+1-j`.

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::perm::RectPermMatrix;
use crate::rank::rank_of_vectors;
use crate::rational::{self, Rational};

/// Default ceiling on the number of items an enumerator may yield.
pub const DEFAULT_ENUMERATION_CAP: u64 = 1_000_000;

pub fn is_extreme_stochastic(a: &Matrix) -> bool {
    RectPermMatrix::from_matrix(a).is_ok()
}

/// Index of the center row (1-based) for an odd row count.
pub(crate) fn center_row(m: usize) -> Option<usize> {
    (m % 2 == 1).then_some(m.div_ceil(2))
}

/// Whether `row` is a unit row with its 1 at column `j` (1-based).
fn is_unit_at(row: &[Rational], j: usize) -> bool {
    row.iter()
        .enumerate()
        .all(|(k, v)| if k + 1 == j { v.is_one() } else { v.is_zero() })
}

fn unit_column(row: &[Rational]) -> Option<usize> {
    let j = row.iter().position(|v| !v.is_zero())? + 1;
    is_unit_at(row, j).then_some(j)
}

/// Admissible center row of an odd-row extreme point: unit at the center
/// column, or `1/2` at columns `j` and `n+1-j` with `j != n+1-j`.
pub(crate) fn is_extreme_center_row(row: &[Rational]) -> bool {
    let n = row.len();
    let support: Vec<usize> = (1..=n).filter(|&j| !row[j - 1].is_zero()).collect();
    match support.as_slice() {
        [j] => 2 * j == n + 1 && row[j - 1].is_one(),
        [j, k] => *j + *k == n + 1 && row[j - 1] == rational::half() && row[k - 1] == rational::half(),
        _ => false,
    }
}

/// Structural test for extreme points of the centrosymmetric polytope; never
/// consults the oracle.
pub fn is_extreme_centro(a: &Matrix) -> bool {
    if !a.is_stochastic() || !a.is_centrosymmetric() {
        return false;
    }
    match center_row(a.rows()) {
        None => is_extreme_stochastic(a),
        Some(center) => {
            let others_unit = (1..=a.rows())
                .filter(|&i| i != center)
                .all(|i| unit_column(a.row(i)).is_some());
            others_unit && is_extreme_center_row(a.row(center))
        }
    }
}

/// Vertex test by null space: `a` is extreme iff the only `D` supported on
/// the support of `a`, with zero row sums (and `D = D^pi` when `centro`), is
/// `D = 0`.
pub fn is_extreme_oracle(a: &Matrix, centro: bool) -> Result<bool> {
    if !a.is_stochastic() {
        return Err(Error::NotStochastic);
    }
    if centro && !a.is_centrosymmetric() {
        return Err(Error::NotCentrosymmetric);
    }
    let (m, n) = a.shape();
    // One unknown per nonzero entry.
    let mut var_of = vec![None; m * n];
    let mut vars = 0;
    for (k, v) in a.as_slice().iter().enumerate() {
        if !v.is_zero() {
            var_of[k] = Some(vars);
            vars += 1;
        }
    }
    let mut constraints: Vec<Vec<Rational>> = Vec::new();
    for i in 0..m {
        let mut row = vec![Rational::zero(); vars];
        for j in 0..n {
            if let Some(v) = var_of[i * n + j] {
                row[v] = Rational::one();
            }
        }
        constraints.push(row);
    }
    if centro {
        let len = m * n;
        for k in 0..len / 2 {
            if let (Some(v), Some(w)) = (var_of[k], var_of[len - 1 - k]) {
                let mut row = vec![Rational::zero(); vars];
                row[v] = Rational::one();
                row[w] = -Rational::one();
                constraints.push(row);
            }
        }
    }
    Ok(rank_of_vectors(constraints) == vars)
}

fn check_dims(m: usize, n: usize) -> Result<()> {
    if m == 0 || n == 0 {
        return Err(Error::InvalidDimensions(format!("need m >= 1 and n >= 1, got {m}x{n}")));
    }
    Ok(())
}

pub(crate) fn check_cap(count: &BigUint, cap: u64) -> Result<()> {
    if *count > BigUint::from(cap) {
        return Err(Error::CapExceeded {
            count: count.to_string(),
            cap,
        });
    }
    Ok(())
}

/// `n^m`, the number of rectangular permutation matrices.
pub fn count_extreme_stochastic(m: usize, n: usize) -> BigUint {
    BigUint::from(n).pow(m as u32)
}

/// Number of extreme points of the centrosymmetric polytope.
pub fn count_extreme_centro(m: usize, n: usize) -> BigUint {
    let half = BigUint::from(n).pow((m / 2) as u32);
    if m.is_multiple_of(2) {
        half
    } else {
        half * BigUint::from(n.div_ceil(2))
    }
}

/// Odometer over `choices[0] x choices[1] x ...`, last position fastest.
#[derive(Clone, Debug)]
pub(crate) struct Odometer {
    choices: Vec<Vec<usize>>,
    state: Option<Vec<usize>>,
}

impl Odometer {
    pub(crate) fn new(choices: Vec<Vec<usize>>) -> Self {
        let state = if choices.iter().any(Vec::is_empty) {
            None
        } else {
            Some(vec![0; choices.len()])
        };
        Self { choices, state }
    }
}

impl Iterator for Odometer {
    type Item = Vec<usize>;

    fn next(&mut self) -> Option<Vec<usize>> {
        let state = self.state.as_mut()?;
        let current: Vec<usize> = state.iter().zip(&self.choices).map(|(&s, c)| c[s]).collect();
        let mut pos = state.len();
        loop {
            if pos == 0 {
                self.state = None;
                break;
            }
            pos -= 1;
            state[pos] += 1;
            if state[pos] < self.choices[pos].len() {
                break;
            }
            state[pos] = 0;
        }
        Some(current)
    }
}

/// All `n^m` rectangular permutation matrices, lexicographic in `row_to_col`.
#[derive(Clone, Debug)]
pub struct ExtremeStochastic {
    cols: usize,
    inner: Odometer,
}

impl Iterator for ExtremeStochastic {
    type Item = RectPermMatrix;

    fn next(&mut self) -> Option<RectPermMatrix> {
        self.inner.next().map(|r| RectPermMatrix::from_zero_based(self.cols, r))
    }
}

pub fn enumerate_extreme_stochastic(m: usize, n: usize) -> Result<ExtremeStochastic> {
    enumerate_extreme_stochastic_capped(m, n, DEFAULT_ENUMERATION_CAP)
}

pub fn enumerate_extreme_stochastic_capped(m: usize, n: usize, cap: u64) -> Result<ExtremeStochastic> {
    check_dims(m, n)?;
    check_cap(&count_extreme_stochastic(m, n), cap)?;
    Ok(ExtremeStochastic {
        cols: n,
        inner: Odometer::new(vec![(0..n).collect(); m]),
    })
}

/// Center-row choices for odd `m`, indexed by the smaller column of the
/// mirrored pair: `j = 1..=ceil(n/2)`.
pub(crate) fn center_row_for(n: usize, j: usize) -> Vec<Rational> {
    let mirror = n + 1 - j;
    (1..=n)
        .map(|k| {
            if j == mirror && k == j {
                Rational::one()
            } else if k == j || k == mirror {
                rational::half()
            } else {
                Rational::zero()
            }
        })
        .collect()
}

/// Builds the centrosymmetric matrix whose top `m/2` rows (floor) have their
/// 1 at the given 0-based columns, with an optional center row.
pub(crate) fn centro_from_top(m: usize, n: usize, top: &[usize], center: Option<&[Rational]>) -> Matrix {
    let k = m / 2;
    debug_assert_eq!(top.len(), k);
    Matrix::from_fn(m, n, |i, j| {
        let col_of = |row: usize| -> usize {
            if row <= k {
                top[row - 1]
            } else {
                n - 1 - top[m - row]
            }
        };
        match center {
            Some(c) if i == k + 1 => c[j - 1].clone(),
            _ => {
                if col_of(i) == j - 1 {
                    Rational::one()
                } else {
                    Rational::zero()
                }
            }
        }
    })
}

/// Every extreme point of the centrosymmetric polytope, once each. Top rows
/// vary lexicographically (outer); for odd `m` the center choice is innermost.
#[derive(Clone, Debug)]
pub struct ExtremeCentro {
    rows: usize,
    cols: usize,
    inner: Odometer,
}

impl Iterator for ExtremeCentro {
    type Item = Matrix;

    fn next(&mut self) -> Option<Matrix> {
        let choice = self.inner.next()?;
        let (m, n) = (self.rows, self.cols);
        let k = m / 2;
        Some(if m.is_multiple_of(2) {
            centro_from_top(m, n, &choice, None)
        } else {
            let center = center_row_for(n, choice[k] + 1);
            centro_from_top(m, n, &choice[..k], Some(&center))
        })
    }
}

pub fn enumerate_extreme_centro(m: usize, n: usize) -> Result<ExtremeCentro> {
    enumerate_extreme_centro_capped(m, n, DEFAULT_ENUMERATION_CAP)
}

pub fn enumerate_extreme_centro_capped(m: usize, n: usize, cap: u64) -> Result<ExtremeCentro> {
    check_dims(m, n)?;
    check_cap(&count_extreme_centro(m, n), cap)?;
    let mut choices: Vec<Vec<usize>> = vec![(0..n).collect(); m / 2];
    if m % 2 == 1 {
        choices.push((0..n.div_ceil(2)).collect());
    }
    Ok(ExtremeCentro {
        rows: m,
        cols: n,
        inner: Odometer::new(choices),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::ratio;
    use std::collections::HashSet;

    fn s_matrix() -> Matrix {
        Matrix::from_fracs(&[
            [(1, 1), (0, 1), (0, 1), (0, 1)],
            [(0, 1), (1, 2), (1, 2), (0, 1)],
            [(0, 1), (0, 1), (0, 1), (1, 1)],
        ])
    }

    fn uniform(m: usize, n: usize) -> Matrix {
        Matrix::from_fn(m, n, |_, _| ratio(1, n as i64))
    }

    #[test]
    fn stochastic_extremes() {
        assert!(is_extreme_stochastic(&Matrix::from_ints(&[
            [1, 0, 0],
            [0, 1, 0],
            [0, 0, 1]
        ])));
        assert!(!is_extreme_stochastic(&uniform(1, 2)));
        for rows in [[1, 1, 1], [1, 2, 2], [2, 1, 2], [2, 2, 2]] {
            let p = RectPermMatrix::new(2, &rows).unwrap().to_matrix();
            assert!(is_extreme_stochastic(&p));
        }
    }

    #[test]
    fn centro_extremes() {
        assert!(is_extreme_centro(&s_matrix()));
        assert!(!is_extreme_centro(&uniform(2, 2)));
        // 1/2 at non-mirrored columns of the center row.
        let skew = Matrix::from_fracs(&[
            [(1, 1), (0, 1), (0, 1), (0, 1)],
            [(1, 2), (1, 2), (0, 1), (0, 1)],
            [(0, 1), (0, 1), (0, 1), (1, 1)],
        ]);
        assert!(!is_extreme_centro(&skew));
        // Unit center row off the center column cannot be centrosymmetric.
        assert!(!is_extreme_centro(&Matrix::from_ints(&[
            [1, 0, 0],
            [1, 0, 0],
            [0, 0, 1]
        ])));
        assert!(is_extreme_centro(&Matrix::from_ints(&[
            [1, 0, 0],
            [0, 1, 0],
            [0, 0, 1]
        ])));
        assert!(is_extreme_centro(&Matrix::from_fracs(&[[(1, 2), (1, 2)]])));
    }

    #[test]
    fn oracle_basics() {
        let r = RectPermMatrix::new(4, &[2, 4, 1]).unwrap().to_matrix();
        assert!(is_extreme_oracle(&r, false).unwrap());
        assert!(!is_extreme_oracle(&uniform(1, 2), false).unwrap());
        assert!(!is_extreme_oracle(&uniform(2, 2), true).unwrap());
        assert!(is_extreme_oracle(&s_matrix(), true).unwrap());
        assert!(!is_extreme_oracle(&s_matrix(), false).unwrap());
        assert_eq!(
            is_extreme_oracle(&Matrix::from_ints(&[[1, 1]]), false).unwrap_err(),
            Error::NotStochastic
        );
        assert_eq!(
            is_extreme_oracle(&Matrix::from_ints(&[[1, 0], [1, 0]]), true).unwrap_err(),
            Error::NotCentrosymmetric
        );
    }

    #[test]
    fn stochastic_enumeration_counts_and_order() {
        assert_eq!(enumerate_extreme_stochastic(1, 3).unwrap().count(), 3);
        assert_eq!(enumerate_extreme_stochastic(2, 2).unwrap().count(), 4);
        let all: Vec<_> = enumerate_extreme_stochastic(3, 4).unwrap().collect();
        assert_eq!(all.len(), 64);
        assert!(all.iter().all(|p| is_extreme_stochastic(&p.to_matrix())));
        assert!(all.windows(2).all(|w| w[0] < w[1]));
        assert_eq!(all[0].row_to_col(), vec![1, 1, 1]);
        assert_eq!(all[1].row_to_col(), vec![1, 1, 2]);
    }

    #[test]
    fn centro_enumeration_small_cases() {
        // 2x2: brute filter of the four rectangular permutation matrices.
        let brute: HashSet<Matrix> = enumerate_extreme_stochastic(2, 2)
            .unwrap()
            .map(|p| p.to_matrix())
            .filter(Matrix::is_centrosymmetric)
            .collect();
        let listed: HashSet<Matrix> = enumerate_extreme_centro(2, 2).unwrap().collect();
        assert_eq!(listed.len(), 2);
        assert_eq!(listed, brute);
        assert_eq!(enumerate_extreme_centro(3, 2).unwrap().count(), 2);
        let three: Vec<Matrix> = enumerate_extreme_centro(3, 3).unwrap().collect();
        assert_eq!(three.len(), 6);
        for a in &three {
            assert!(is_extreme_centro(a));
            assert!(is_extreme_oracle(a, true).unwrap());
        }
        assert_eq!(enumerate_extreme_centro(1, 5).unwrap().count(), 3);
    }

    #[test]
    fn cap_guard() {
        let err = enumerate_extreme_stochastic_capped(3, 4, 63).unwrap_err();
        assert!(matches!(err, Error::CapExceeded { .. }));
        assert!(enumerate_extreme_stochastic_capped(3, 4, 64).is_ok());
        assert!(enumerate_extreme_stochastic(30, 30).is_err());
        assert!(enumerate_extreme_centro_capped(5, 4, 31).is_err());
        assert!(enumerate_extreme_stochastic(0, 3).is_err());
    }
}
