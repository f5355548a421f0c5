//! Dense rational matrices and the structural predicates shared by every
//! other module.

use std::fmt;
use std::ops::{Add, Sub};

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::rational::{self, Rational};

/// Immutable dense `rows x cols` matrix, stored row-major.
///
/// Public accessors use 1-based indices.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    entries: Vec<Rational>,
}

impl Matrix {
    pub fn from_rows(rows: Vec<Vec<Rational>>) -> Result<Self> {
        let m = rows.len();
        if m == 0 {
            return Err(Error::InvalidDimensions("a matrix needs at least one row".into()));
        }
        let n = rows[0].len();
        if n == 0 {
            return Err(Error::InvalidDimensions("a matrix needs at least one column".into()));
        }
        let mut entries = Vec::with_capacity(m * n);
        for row in rows {
            if row.len() != n {
                return Err(Error::DimensionMismatch {
                    expected_rows: m,
                    expected_cols: n,
                    rows: m,
                    cols: row.len(),
                });
            }
            entries.extend(row);
        }
        Ok(Self {
            rows: m,
            cols: n,
            entries,
        })
    }

    /// Builds from integer rows. Panics on ragged or empty input; meant for
    /// literals in tests and generators.
    pub fn from_ints<R: AsRef<[i64]>>(rows: &[R]) -> Self {
        Self::from_rows(
            rows.iter()
                .map(|r| r.as_ref().iter().map(|&v| rational::int(v)).collect())
                .collect(),
        )
        .expect("integer literal rows must be rectangular and non-empty")
    }

    /// Builds from `(numerator, denominator)` pairs. Panics like [`Matrix::from_ints`].
    pub fn from_fracs<R: AsRef<[(i64, i64)]>>(rows: &[R]) -> Self {
        Self::from_rows(
            rows.iter()
                .map(|r| r.as_ref().iter().map(|&(p, q)| rational::ratio(p, q)).collect())
                .collect(),
        )
        .expect("fraction literal rows must be rectangular and non-empty")
    }

    /// `f` receives 1-based `(i, j)`.
    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Rational) -> Self {
        assert!(rows > 0 && cols > 0, "matrix dimensions must be positive");
        let mut entries = Vec::with_capacity(rows * cols);
        for i in 1..=rows {
            for j in 1..=cols {
                entries.push(f(i, j));
            }
        }
        Self { rows, cols, entries }
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self::from_fn(rows, cols, |_, _| Rational::zero())
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn shape(&self) -> (usize, usize) {
        (self.rows, self.cols)
    }

    /// Entry `a_{i,j}` with 1-based indices.
    pub fn entry(&self, i: usize, j: usize) -> &Rational {
        assert!(
            (1..=self.rows).contains(&i) && (1..=self.cols).contains(&j),
            "entry ({i}, {j}) outside a {}x{} matrix",
            self.rows,
            self.cols
        );
        &self.entries[(i - 1) * self.cols + (j - 1)]
    }

    /// Row `i` (1-based) as a slice.
    pub fn row(&self, i: usize) -> &[Rational] {
        assert!(
            (1..=self.rows).contains(&i),
            "row {i} outside a {}-row matrix",
            self.rows
        );
        &self.entries[(i - 1) * self.cols..i * self.cols]
    }

    pub fn row_iter(&self) -> impl Iterator<Item = &[Rational]> + '_ {
        self.entries.chunks(self.cols)
    }

    /// Row-major view of all entries.
    pub fn as_slice(&self) -> &[Rational] {
        &self.entries
    }

    pub fn map(&self, f: impl FnMut(&Rational) -> Rational) -> Self {
        Self {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(f).collect(),
        }
    }

    pub fn scale(&self, factor: &Rational) -> Self {
        self.map(|v| v * factor)
    }

    /// Rotation by 180 degrees: `result[i][j] = A[m+1-i][n+1-j]`.
    pub fn rotate_pi(&self) -> Self {
        let mut entries = self.entries.clone();
        entries.reverse();
        Self {
            rows: self.rows,
            cols: self.cols,
            entries,
        }
    }

    pub fn is_stochastic(&self) -> bool {
        self.entries.iter().all(|v| !rational::is_negative(v))
            && self.row_iter().all(|row| row.iter().sum::<Rational>().is_one())
    }

    pub fn is_centrosymmetric(&self) -> bool {
        let len = self.entries.len();
        (0..len / 2).all(|k| self.entries[k] == self.entries[len - 1 - k])
    }

    pub fn is_zero_one(&self) -> bool {
        self.entries.iter().all(|v| v.is_zero() || v.is_one())
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Zero::is_zero)
    }

    /// Number of nonzero entries.
    pub fn nnz(&self) -> usize {
        self.entries.iter().filter(|v| !v.is_zero()).count()
    }

    /// Removes row `i` (1-based). Panics when that would leave no rows.
    pub fn delete_row(&self, i: usize) -> Self {
        assert!(self.rows > 1, "cannot delete the only row");
        assert!((1..=self.rows).contains(&i));
        let mut entries = self.entries.clone();
        entries.drain((i - 1) * self.cols..i * self.cols);
        Self {
            rows: self.rows - 1,
            cols: self.cols,
            entries,
        }
    }

    /// Inserts `row` so that it becomes row `i` (1-based) of the result.
    pub fn insert_row(&self, i: usize, row: &[Rational]) -> Result<Self> {
        if row.len() != self.cols {
            return Err(Error::DimensionMismatch {
                expected_rows: 1,
                expected_cols: self.cols,
                rows: 1,
                cols: row.len(),
            });
        }
        if !(1..=self.rows + 1).contains(&i) {
            return Err(Error::IndexOutOfRange(format!(
                "row {i} cannot be inserted into a {}-row matrix",
                self.rows
            )));
        }
        let at = (i - 1) * self.cols;
        let mut entries = self.entries.clone();
        entries.splice(at..at, row.iter().cloned());
        Ok(Self {
            rows: self.rows + 1,
            cols: self.cols,
            entries,
        })
    }

    /// Vertical concatenation.
    pub fn stack(parts: &[&Matrix]) -> Result<Self> {
        let first = parts
            .first()
            .ok_or_else(|| Error::InvalidDimensions("nothing to stack".into()))?;
        let cols = first.cols;
        let mut entries = Vec::new();
        let mut rows = 0;
        for part in parts {
            if part.cols != cols {
                return Err(Error::DimensionMismatch {
                    expected_rows: part.rows,
                    expected_cols: cols,
                    rows: part.rows,
                    cols: part.cols,
                });
            }
            rows += part.rows;
            entries.extend(part.entries.iter().cloned());
        }
        Ok(Self { rows, cols, entries })
    }

    /// Entrywise minimum.
    pub fn entrywise_min(&self, other: &Matrix) -> Result<Self> {
        self.check_same_shape(other)?;
        Ok(Self {
            rows: self.rows,
            cols: self.cols,
            entries: self
                .entries
                .iter()
                .zip(&other.entries)
                .map(|(a, b)| a.min(b).clone())
                .collect(),
        })
    }

    /// `self <= other` entrywise.
    pub fn le_entrywise(&self, other: &Matrix) -> bool {
        self.shape() == other.shape() && self.entries.iter().zip(&other.entries).all(|(a, b)| a <= b)
    }

    /// Nonzero positions of `self` are nonzero in `other`.
    pub fn support_within(&self, other: &Matrix) -> bool {
        self.shape() == other.shape()
            && self
                .entries
                .iter()
                .zip(&other.entries)
                .all(|(a, b)| a.is_zero() || !b.is_zero())
    }

    pub fn check_same_shape(&self, other: &Matrix) -> Result<()> {
        if self.shape() == other.shape() {
            Ok(())
        } else {
            Err(Error::DimensionMismatch {
                expected_rows: self.rows,
                expected_cols: self.cols,
                rows: other.rows,
                cols: other.cols,
            })
        }
    }

    fn zip_with(&self, other: &Matrix, f: impl Fn(&Rational, &Rational) -> Rational) -> Self {
        assert_eq!(self.shape(), other.shape(), "matrix shapes differ");
        Self {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().zip(&other.entries).map(|(a, b)| f(a, b)).collect(),
        }
    }
}

impl Add for &Matrix {
    type Output = Matrix;

    fn add(self, rhs: &Matrix) -> Matrix {
        self.zip_with(rhs, |a, b| a + b)
    }
}

impl Sub for &Matrix {
    type Output = Matrix;

    fn sub(self, rhs: &Matrix) -> Matrix {
        self.zip_with(rhs, |a, b| a - b)
    }
}

/// Aligned table, one row per line, columns right-aligned.
impl fmt::Display for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let text: Vec<String> = self.entries.iter().map(rational::to_text).collect();
        let widths: Vec<usize> = (0..self.cols)
            .map(|j| (0..self.rows).map(|i| text[i * self.cols + j].len()).max().unwrap_or(1))
            .collect();
        for i in 0..self.rows {
            let line: Vec<String> = (0..self.cols)
                .map(|j| format!("{:>w$}", text[i * self.cols + j], w = widths[j]))
                .collect();
            writeln!(f, "{}", line.join("  "))?;
        }
        Ok(())
    }
}
