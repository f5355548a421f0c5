//! Constructive convex decompositions.
//!
//! [`decompose_stochastic`] peels rectangular permutation matrices off a
//! stochastic matrix: mark the smallest positive entry of every row (leftmost
//! on ties), subtract the smallest mark times the marked pattern, repeat.
//! The residual is kept unnormalized, so each peeled coefficient is the
//! subtracted amount itself and no division is needed; the sequence of
//! patterns is the same as with renormalization after every step.
//!
//! The centrosymmetric pipeline averages every peeled pattern with its
//! rotation, then splits the non-extreme averages into two centrosymmetric
//! halves.

use num_traits::Zero;

use crate::combination::ConvexCombination;
use crate::error::{Error, Result};
use crate::extremes::{center_row, is_extreme_centro};
use crate::matrix::Matrix;
use crate::perm::RectPermMatrix;
use crate::rational::{self, Rational};

/// Writes a stochastic matrix as a convex combination of rectangular
/// permutation matrices. At most `nnz(a) - m + 1` terms; deterministic.
pub fn decompose_stochastic(a: &Matrix) -> Result<ConvexCombination<RectPermMatrix>> {
    if !a.is_stochastic() {
        return Err(Error::NotStochastic);
    }
    let (m, n) = a.shape();
    let mut residual: Vec<Rational> = a.as_slice().to_vec();
    let mut terms = Vec::new();
    loop {
        let mut marks = Vec::with_capacity(m);
        for i in 0..m {
            let row = &residual[i * n..(i + 1) * n];
            let mut best: Option<usize> = None;
            for (j, v) in row.iter().enumerate() {
                if v.is_zero() {
                    continue;
                }
                // Strict comparison keeps the leftmost minimum.
                if best.is_none_or(|b| v < &row[b]) {
                    best = Some(j);
                }
            }
            match best {
                Some(j) => marks.push(j),
                None => break,
            }
        }
        if marks.len() < m {
            // Every row empties at the same step since all row sums stay equal.
            debug_assert!(residual.iter().all(Zero::is_zero));
            break;
        }
        let step = marks
            .iter()
            .enumerate()
            .map(|(i, &j)| &residual[i * n + j])
            .min()
            .expect("at least one row")
            .clone();
        for (i, &j) in marks.iter().enumerate() {
            residual[i * n + j] -= &step;
        }
        terms.push((step, RectPermMatrix::from_zero_based(n, marks)));
    }
    ConvexCombination::new(terms)
}

fn check_centro_stochastic(a: &Matrix) -> Result<()> {
    if !a.is_stochastic() {
        return Err(Error::NotStochastic);
    }
    if !a.is_centrosymmetric() {
        return Err(Error::NotCentrosymmetric);
    }
    Ok(())
}

/// `(R + R^pi) / 2`.
pub fn half_sum(r: &RectPermMatrix) -> Matrix {
    let dense = r.to_matrix();
    (&dense + &dense.rotate_pi()).scale(&rational::half())
}

/// Terms `(c_i, (R_i + R_i^pi)/2, R_i)` with duplicates merged; the first
/// `R_i` producing a matrix is kept as its representative.
fn centro_halves_with_reps(a: &Matrix) -> Result<Vec<(Rational, Matrix, RectPermMatrix)>> {
    check_centro_stochastic(a)?;
    let stochastic = decompose_stochastic(a)?;
    let mut out: Vec<(Rational, Matrix, RectPermMatrix)> = Vec::new();
    for term in stochastic.into_terms() {
        let half = half_sum(&term.matrix);
        if let Some(existing) = out.iter_mut().find(|(_, m, _)| *m == half) {
            existing.0 += term.coefficient;
        } else {
            out.push((term.coefficient, half, term.matrix));
        }
    }
    Ok(out)
}

/// Rewrites a centrosymmetric stochastic matrix as a convex combination of
/// matrices `(R + R^pi)/2`, reusing the coefficients of
/// [`decompose_stochastic`].
pub fn decompose_centro_halves(a: &Matrix) -> Result<ConvexCombination<Matrix>> {
    ConvexCombination::new(centro_halves_with_reps(a)?.into_iter().map(|(c, m, _)| (c, m)))
}

/// Splits a non-centrosymmetric rectangular permutation matrix `R` with an
/// even row count into distinct centrosymmetric rectangular permutation
/// matrices `Q1`, `Q2` with `R + R^pi = Q1 + Q2`.
///
/// Each top-half row of `R + R^pi` is a sum of two unit rows; the left one
/// goes to `Q1` and the right one to `Q2`. Bottom halves follow by symmetry.
pub fn split_noncentrosymmetric(r: &RectPermMatrix) -> Result<(RectPermMatrix, RectPermMatrix)> {
    let m = r.rows();
    if m % 2 == 1 {
        return Err(Error::OddRowCount(m));
    }
    if r.is_centrosymmetric() {
        return Err(Error::AlreadyCentrosymmetric);
    }
    let n = r.cols();
    let cols = r.zero_based();
    let k = m / 2;
    let mut left = vec![0; m];
    let mut right = vec![0; m];
    for i in 0..k {
        // Row i of R + R^pi has units at cols[i] and the mirror of cols[m-1-i].
        let own = cols[i];
        let mirrored = n - 1 - cols[m - 1 - i];
        let (a, b) = (own.min(mirrored), own.max(mirrored));
        left[i] = a;
        right[i] = b;
        left[m - 1 - i] = n - 1 - a;
        right[m - 1 - i] = n - 1 - b;
    }
    Ok((
        RectPermMatrix::from_zero_based(n, left),
        RectPermMatrix::from_zero_based(n, right),
    ))
}

/// Splits a non-extreme `(R + R^pi)/2` into two extreme points whose
/// average is that same matrix.
fn split_half_sum(r: &RectPermMatrix, half: &Matrix) -> Result<(Matrix, Matrix)> {
    match center_row(r.rows()) {
        None => {
            let (q1, q2) = split_noncentrosymmetric(r)?;
            Ok((q1.to_matrix(), q2.to_matrix()))
        }
        Some(center) => {
            // The center row of the average is (r + r^pi)/2 for the center row r of R.
            let (q1, q2) = split_noncentrosymmetric(&r.delete_row(center))?;
            let center_values = half.row(center);
            Ok((
                q1.to_matrix().insert_row(center, center_values)?,
                q2.to_matrix().insert_row(center, center_values)?,
            ))
        }
    }
}

/// Writes a centrosymmetric stochastic matrix as a convex combination of
/// extreme points of the centrosymmetric polytope.
pub fn decompose_centrosymmetric(a: &Matrix) -> Result<ConvexCombination<Matrix>> {
    let halves = centro_halves_with_reps(a)?;
    let mut terms: Vec<(Rational, Matrix)> = Vec::new();
    for (coefficient, half, rep) in halves {
        if is_extreme_centro(&half) {
            terms.push((coefficient, half));
            continue;
        }
        let (q1, q2) = split_half_sum(&rep, &half)?;
        let weight = &coefficient * rational::half();
        terms.push((weight.clone(), q1));
        terms.push((weight, q2));
    }
    ConvexCombination::new(terms)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combination::weighted_sum;
    use crate::rational::ratio;

    fn worked_matrix() -> Matrix {
        Matrix::from_fracs(&[
            [(1, 2), (0, 1), (1, 2), (0, 1)],
            [(3, 10), (0, 1), (0, 1), (7, 10)],
            [(2, 5), (1, 5), (2, 5), (0, 1)],
        ])
    }

    fn s_matrix() -> Matrix {
        Matrix::from_fracs(&[
            [(1, 1), (0, 1), (0, 1), (0, 1)],
            [(0, 1), (1, 2), (1, 2), (0, 1)],
            [(0, 1), (0, 1), (0, 1), (1, 1)],
        ])
    }

    fn perm(cols: usize, rows: &[usize]) -> RectPermMatrix {
        RectPermMatrix::new(cols, rows).unwrap()
    }

    #[test]
    fn permutation_is_its_own_decomposition() {
        let r = perm(3, &[2, 3, 1, 1]);
        let combo = decompose_stochastic(&r.to_matrix()).unwrap();
        assert_eq!(combo.len(), 1);
        assert_eq!(combo.terms()[0].coefficient, ratio(1, 1));
        assert_eq!(combo.terms()[0].matrix, r);
    }

    #[test]
    fn single_row_of_halves() {
        let combo = decompose_stochastic(&Matrix::from_fracs(&[[(1, 2), (1, 2)]])).unwrap();
        let got: Vec<_> = combo
            .iter()
            .map(|t| (t.coefficient.clone(), t.matrix.row_to_col()))
            .collect();
        assert_eq!(got, vec![(ratio(1, 2), vec![1]), (ratio(1, 2), vec![2])]);
    }

    #[test]
    fn worked_certificate_and_own_output() {
        let a = worked_matrix();
        let certificate = [
            (ratio(2, 5), perm(4, &[1, 4, 1]).to_matrix()),
            (ratio(3, 10), perm(4, &[3, 1, 3]).to_matrix()),
            (ratio(1, 5), perm(4, &[3, 4, 2]).to_matrix()),
            (ratio(1, 10), perm(4, &[1, 4, 3]).to_matrix()),
        ];
        assert_eq!(weighted_sum(&certificate).unwrap(), a);

        let combo = decompose_stochastic(&a).unwrap();
        assert_eq!(combo.recombine(), a);
        assert!(combo.len() <= a.nnz() - a.rows() + 1);
        // Hand execution of the marking rule: marks (1,1),(2,1),(3,2) at 1/5 first.
        assert_eq!(combo.terms()[0].coefficient, ratio(1, 5));
        assert_eq!(combo.terms()[0].matrix.row_to_col(), vec![1, 1, 2]);
    }

    #[test]
    fn rejects_non_stochastic() {
        let err = decompose_stochastic(&Matrix::from_fracs(&[[(1, 2), (1, 3)]])).unwrap_err();
        assert_eq!(err, Error::NotStochastic);
    }

    #[test]
    fn centro_halves() {
        let s = decompose_centro_halves(&s_matrix()).unwrap();
        assert_eq!(s.len(), 1);
        assert_eq!(s.terms()[0].matrix, s_matrix());

        let uniform = Matrix::from_fracs(&[[(1, 2), (1, 2)], [(1, 2), (1, 2)]]);
        let combo = decompose_centro_halves(&uniform).unwrap();
        assert_eq!(combo.recombine(), uniform);

        let q = perm(3, &[1, 2, 3]);
        let combo = decompose_centro_halves(&q.to_matrix()).unwrap();
        assert_eq!(combo.len(), 1);
        assert_eq!(combo.terms()[0].matrix, q.to_matrix());

        assert_eq!(
            decompose_centro_halves(&Matrix::from_ints(&[[1, 0], [1, 0]])).unwrap_err(),
            Error::NotCentrosymmetric
        );
        assert_eq!(
            decompose_centro_halves(&Matrix::from_ints(&[[1, 1], [1, 1]])).unwrap_err(),
            Error::NotStochastic
        );
    }

    #[test]
    fn split_worked_examples() {
        let r = perm(4, &[1, 1, 2, 4]);
        let (q1, q2) = split_noncentrosymmetric(&r).unwrap();
        let expected = [perm(4, &[1, 3, 2, 4]), perm(4, &[1, 1, 4, 4])];
        assert!(expected.contains(&q1) && expected.contains(&q2) && q1 != q2);

        let r = perm(5, &[1, 2, 2, 4]);
        let (q1, q2) = split_noncentrosymmetric(&r).unwrap();
        let expected = [perm(5, &[1, 2, 4, 5]), perm(5, &[2, 4, 2, 4])];
        assert!(expected.contains(&q1) && expected.contains(&q2) && q1 != q2);
        let lhs = &r.to_matrix() + &r.rotate_pi().to_matrix();
        assert_eq!(lhs, &q1.to_matrix() + &q2.to_matrix());
        assert_eq!(&q1.to_matrix() + &q2.to_matrix(), &q2.to_matrix() + &q1.to_matrix());
    }

    #[test]
    fn split_errors() {
        assert_eq!(
            split_noncentrosymmetric(&perm(2, &[1, 1, 2])).unwrap_err(),
            Error::OddRowCount(3)
        );
        assert_eq!(
            split_noncentrosymmetric(&perm(2, &[1, 2])).unwrap_err(),
            Error::AlreadyCentrosymmetric
        );
    }

    #[test]
    fn centro_decomposition_small_cases() {
        let s = decompose_centrosymmetric(&s_matrix()).unwrap();
        assert_eq!(s.len(), 1);
        assert_eq!(s.terms()[0].coefficient, ratio(1, 1));

        // Only two centrosymmetric 2x2 rectangular permutation matrices exist.
        let uniform = Matrix::from_fracs(&[[(1, 2), (1, 2)], [(1, 2), (1, 2)]]);
        let combo = decompose_centrosymmetric(&uniform).unwrap();
        let mut got: Vec<_> = combo
            .iter()
            .map(|t| (t.coefficient.clone(), t.matrix.clone()))
            .collect();
        got.sort_by(|a, b| a.1.as_slice().cmp(b.1.as_slice()));
        assert_eq!(
            got,
            vec![
                (ratio(1, 2), Matrix::from_ints(&[[0, 1], [1, 0]])),
                (ratio(1, 2), Matrix::from_ints(&[[1, 0], [0, 1]])),
            ]
        );
    }

    #[test]
    fn odd_rows_split_keeps_center_row() {
        // R = rows e1, e2, e1 in 3x3: R~ = rows e1, e1 is not centrosymmetric.
        let r = perm(3, &[1, 2, 1]);
        let half = half_sum(&r);
        assert!(!is_extreme_centro(&half));
        let combo = decompose_centrosymmetric(&half).unwrap();
        assert_eq!(combo.recombine(), half);
        assert!(combo.iter().all(|t| is_extreme_centro(&t.matrix)));
        assert_eq!(combo.len(), 2);
    }
}
