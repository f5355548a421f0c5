//! Faces `F(B)`: the members of a polytope lying entrywise below a
//! (0,1)-pattern `B`. Their vertices are the extreme points supported inside
//! `B`.

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::extremes::{center_row, center_row_for, centro_from_top, check_cap, Odometer, DEFAULT_ENUMERATION_CAP};
use crate::matrix::Matrix;
use crate::perm::RectPermMatrix;
use crate::rational::Rational;

/// An `m x n` (0,1)-pattern.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FacePattern {
    rows: usize,
    cols: usize,
    cells: Vec<bool>,
}

impl FacePattern {
    pub fn new(rows: usize, cols: usize, cells: Vec<bool>) -> Result<Self> {
        if rows == 0 || cols == 0 {
            return Err(Error::InvalidDimensions("patterns need positive dimensions".into()));
        }
        if cells.len() != rows * cols {
            return Err(Error::InvalidDimensions(format!(
                "{} cells for a {rows}x{cols} pattern",
                cells.len()
            )));
        }
        Ok(Self { rows, cols, cells })
    }

    /// Rejects any entry other than 0 or 1.
    pub fn from_matrix(matrix: &Matrix) -> Result<Self> {
        if !matrix.is_zero_one() {
            return Err(Error::NotZeroOne);
        }
        let cells = matrix.as_slice().iter().map(|v| v.is_one()).collect();
        Self::new(matrix.rows(), matrix.cols(), cells)
    }

    /// Bit `k` of `bits` (row-major, first cell least significant).
    pub fn from_bits(rows: usize, cols: usize, bits: u64) -> Result<Self> {
        Self::new(rows, cols, (0..rows * cols).map(|k| bits >> k & 1 == 1).collect())
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    /// `b_{i,j}` with 1-based indices.
    pub fn get(&self, i: usize, j: usize) -> bool {
        self.cells[(i - 1) * self.cols + (j - 1)]
    }

    pub fn to_matrix(&self) -> Matrix {
        Matrix::from_fn(self.rows, self.cols, |i, j| {
            if self.get(i, j) {
                Rational::one()
            } else {
                Rational::zero()
            }
        })
    }

    /// `b_{i,.}`
    pub fn row_sum(&self, i: usize) -> usize {
        (1..=self.cols).filter(|&j| self.get(i, j)).count()
    }

    pub fn rotate_pi(&self) -> Self {
        let mut cells = self.cells.clone();
        cells.reverse();
        Self {
            rows: self.rows,
            cols: self.cols,
            cells,
        }
    }

    pub fn is_centrosymmetric(&self) -> bool {
        *self == self.rotate_pi()
    }

    /// `B AND B^pi`.
    pub fn and_rotated(&self) -> Self {
        let rotated = self.rotate_pi();
        let cells = self.cells.iter().zip(&rotated.cells).map(|(a, b)| *a && *b).collect();
        Self {
            rows: self.rows,
            cols: self.cols,
            cells,
        }
    }

    /// Whether `a` is supported inside this pattern (nonzero only where `b = 1`).
    pub fn contains_support_of(&self, a: &Matrix) -> bool {
        a.shape() == (self.rows, self.cols) && a.as_slice().iter().zip(&self.cells).all(|(v, &b)| b || v.is_zero())
    }
}

pub fn has_row_support_stochastic(b: &FacePattern) -> bool {
    (1..=b.rows).all(|i| b.row_sum(i) > 0)
}

/// Every row of `B AND B^pi` is nonzero.
pub fn has_row_support_centro(b: &FacePattern) -> bool {
    has_row_support_stochastic(&b.and_rotated())
}

/// `prod_i b_{i,.}`
pub fn count_face_vertices_stochastic(b: &FacePattern) -> Result<BigUint> {
    if !has_row_support_stochastic(b) {
        return Err(Error::NoRowSupport);
    }
    Ok((1..=b.rows).map(|i| BigUint::from(b.row_sum(i))).product())
}

fn check_centro_pattern(b: &FacePattern) -> Result<()> {
    if !b.is_centrosymmetric() {
        return Err(Error::PatternNotCentrosymmetric);
    }
    if !has_row_support_centro(b) {
        return Err(Error::NoRowSupport);
    }
    Ok(())
}

/// Even `m`: `prod_{i <= m/2} b_{i,.}`. Odd `m`:
/// `ceil(b_{c,.} / 2) * prod_{i <= (m-1)/2} b_{i,.}` for the center row `c`.
pub fn count_face_vertices_centro(b: &FacePattern) -> Result<BigUint> {
    check_centro_pattern(b)?;
    let top: BigUint = (1..=b.rows / 2).map(|i| BigUint::from(b.row_sum(i))).product();
    Ok(match center_row(b.rows) {
        None => top,
        Some(c) => top * BigUint::from(b.row_sum(c).div_ceil(2)),
    })
}

#[derive(Clone, Debug)]
enum Mode {
    Stochastic,
    Centro,
}

/// Vertices of a face, lexicographic over row choices; for odd `m` in
/// centrosymmetric mode the center row is innermost.
#[derive(Clone, Debug)]
pub struct FaceVertices {
    rows: usize,
    cols: usize,
    mode: Mode,
    inner: Odometer,
}

impl Iterator for FaceVertices {
    type Item = Matrix;

    fn next(&mut self) -> Option<Matrix> {
        let choice = self.inner.next()?;
        let (m, n) = (self.rows, self.cols);
        Some(match self.mode {
            Mode::Stochastic => RectPermMatrix::from_zero_based(n, choice).to_matrix(),
            Mode::Centro => {
                let k = m / 2;
                if m.is_multiple_of(2) {
                    centro_from_top(m, n, &choice, None)
                } else {
                    let center = center_row_for(n, choice[k] + 1);
                    centro_from_top(m, n, &choice[..k], Some(&center))
                }
            }
        })
    }
}

/// Enumerates without checking preconditions. A pattern with an unsupported
/// row yields nothing; in centrosymmetric mode only cells surviving
/// `B AND B^pi` are used.
pub fn enumerate_face_vertices_unchecked(b: &FacePattern, centro: bool) -> FaceVertices {
    let (m, n) = (b.rows, b.cols);
    let choices: Vec<Vec<usize>> = if centro {
        let star = b.and_rotated();
        let mut choices: Vec<Vec<usize>> = (1..=m / 2)
            .map(|i| (1..=n).filter(|&j| star.get(i, j)).map(|j| j - 1).collect())
            .collect();
        if let Some(c) = center_row(m) {
            choices.push((1..=n.div_ceil(2)).filter(|&j| star.get(c, j)).map(|j| j - 1).collect());
        }
        choices
    } else {
        (1..=m)
            .map(|i| (1..=n).filter(|&j| b.get(i, j)).map(|j| j - 1).collect())
            .collect()
    };
    FaceVertices {
        rows: m,
        cols: n,
        mode: if centro { Mode::Centro } else { Mode::Stochastic },
        inner: Odometer::new(choices),
    }
}

pub fn enumerate_face_vertices(b: &FacePattern, centro: bool) -> Result<FaceVertices> {
    enumerate_face_vertices_capped(b, centro, DEFAULT_ENUMERATION_CAP)
}

pub fn enumerate_face_vertices_capped(b: &FacePattern, centro: bool, cap: u64) -> Result<FaceVertices> {
    let count = if centro {
        count_face_vertices_centro(b)?
    } else {
        count_face_vertices_stochastic(b)?
    };
    check_cap(&count, cap)?;
    Ok(enumerate_face_vertices_unchecked(b, centro))
}
