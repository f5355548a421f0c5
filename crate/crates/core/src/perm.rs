//! Rectangular permutation matrices: (0,1)-matrices with exactly one 1 per row.

use std::fmt;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::rational::Rational;

/// Compact row-to-column encoding of a rectangular permutation matrix.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RectPermMatrix {
    cols: usize,
    // 0-based column of the 1 in each row.
    row_to_col: Vec<usize>,
}

impl RectPermMatrix {
    /// `row_to_col[i-1]` is the (1-based) column of the 1 in row `i`.
    pub fn new(cols: usize, row_to_col: &[usize]) -> Result<Self> {
        if cols == 0 || row_to_col.is_empty() {
            return Err(Error::InvalidDimensions(
                "rectangular permutation matrices need positive dimensions".into(),
            ));
        }
        if let Some(&bad) = row_to_col.iter().find(|&&c| c == 0 || c > cols) {
            return Err(Error::IndexOutOfRange(format!("column {bad} not in [1, {cols}]")));
        }
        Ok(Self {
            cols,
            row_to_col: row_to_col.iter().map(|c| c - 1).collect(),
        })
    }

    pub(crate) fn from_zero_based(cols: usize, row_to_col: Vec<usize>) -> Self {
        debug_assert!(row_to_col.iter().all(|&c| c < cols));
        Self { cols, row_to_col }
    }

    /// Reads the encoding back from a dense (0,1)-matrix with one 1 per row.
    pub fn from_matrix(matrix: &Matrix) -> Result<Self> {
        let mut row_to_col = Vec::with_capacity(matrix.rows());
        for row in matrix.row_iter() {
            let mut col = None;
            for (j, v) in row.iter().enumerate() {
                if v.is_zero() {
                    continue;
                }
                if !v.is_one() || col.is_some() {
                    return Err(Error::NotRectPerm);
                }
                col = Some(j);
            }
            row_to_col.push(col.ok_or(Error::NotRectPerm)?);
        }
        Ok(Self {
            cols: matrix.cols(),
            row_to_col,
        })
    }

    pub fn rows(&self) -> usize {
        self.row_to_col.len()
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    /// 1-based column of the 1 in row `i` (1-based).
    pub fn column_of(&self, i: usize) -> usize {
        self.row_to_col[i - 1] + 1
    }

    /// 1-based row-to-column map.
    pub fn row_to_col(&self) -> Vec<usize> {
        self.row_to_col.iter().map(|c| c + 1).collect()
    }

    pub(crate) fn zero_based(&self) -> &[usize] {
        &self.row_to_col
    }

    pub fn to_matrix(&self) -> Matrix {
        Matrix::from_fn(self.rows(), self.cols, |i, j| {
            if self.row_to_col[i - 1] == j - 1 {
                Rational::one()
            } else {
                Rational::zero()
            }
        })
    }

    pub fn rotate_pi(&self) -> Self {
        let row_to_col = self.row_to_col.iter().rev().map(|&c| self.cols - 1 - c).collect();
        Self {
            cols: self.cols,
            row_to_col,
        }
    }

    pub fn is_centrosymmetric(&self) -> bool {
        *self == self.rotate_pi()
    }

    /// Removes row `i` (1-based). Panics when that would leave no rows.
    pub fn delete_row(&self, i: usize) -> Self {
        assert!(self.rows() > 1, "cannot delete the only row");
        let mut row_to_col = self.row_to_col.clone();
        row_to_col.remove(i - 1);
        Self {
            cols: self.cols,
            row_to_col,
        }
    }
}

impl fmt::Display for RectPermMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.to_matrix().fmt(f)
    }
}
