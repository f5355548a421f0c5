//! Convex combinations of matrices.

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::perm::RectPermMatrix;
use crate::rational::{self, Rational};

/// Anything with a dense matrix form.
pub trait Dense {
    fn to_dense(&self) -> Matrix;
}

impl Dense for Matrix {
    fn to_dense(&self) -> Matrix {
        self.clone()
    }
}

impl Dense for RectPermMatrix {
    fn to_dense(&self) -> Matrix {
        self.to_matrix()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Term<T> {
    pub coefficient: Rational,
    pub matrix: T,
}

/// `sum c_i M_i` with every `c_i` in `(0, 1]`, `sum c_i = 1`, and pairwise
/// distinct `M_i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConvexCombination<T> {
    terms: Vec<Term<T>>,
}

impl<T: Dense + PartialEq> ConvexCombination<T> {
    /// Validates the terms, merging equal matrices in order of first appearance.
    pub fn new(terms: impl IntoIterator<Item = (Rational, T)>) -> Result<Self> {
        let mut merged: Vec<Term<T>> = Vec::new();
        for (coefficient, matrix) in terms {
            if let Some(existing) = merged.iter_mut().find(|t| t.matrix == matrix) {
                existing.coefficient += coefficient;
            } else {
                merged.push(Term { coefficient, matrix });
            }
        }
        if merged.is_empty() {
            return Err(Error::InvalidCombination("no terms".into()));
        }
        let shape = merged[0].matrix.to_dense().shape();
        for term in &merged {
            if !rational::is_positive(&term.coefficient) || term.coefficient > Rational::one() {
                return Err(Error::InvalidCombination(format!(
                    "coefficient {} outside (0, 1]",
                    term.coefficient
                )));
            }
            if term.matrix.to_dense().shape() != shape {
                return Err(Error::InvalidCombination("terms have different shapes".into()));
            }
        }
        let total: Rational = merged.iter().map(|t| &t.coefficient).sum();
        if !total.is_one() {
            return Err(Error::InvalidCombination(format!("coefficients sum to {total}")));
        }
        Ok(Self { terms: merged })
    }

    pub fn terms(&self) -> &[Term<T>] {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient_sum(&self) -> Rational {
        self.terms.iter().map(|t| &t.coefficient).sum()
    }

    /// `sum c_i M_i`, computed exactly.
    pub fn recombine(&self) -> Matrix {
        let first = self.terms[0].matrix.to_dense();
        let mut acc = Matrix::zeros(first.rows(), first.cols());
        for term in &self.terms {
            acc = &acc + &term.matrix.to_dense().scale(&term.coefficient);
        }
        acc
    }

    pub fn into_terms(self) -> Vec<Term<T>> {
        self.terms
    }

    /// Dense copy of the same combination.
    pub fn to_dense(&self) -> ConvexCombination<Matrix> {
        ConvexCombination {
            terms: self
                .terms
                .iter()
                .map(|t| Term {
                    coefficient: t.coefficient.clone(),
                    matrix: t.matrix.to_dense(),
                })
                .collect(),
        }
    }
}

impl<T> ConvexCombination<T> {
    pub fn iter(&self) -> impl Iterator<Item = &Term<T>> {
        self.terms.iter()
    }
}

/// `sum c_i M_i` for an arbitrary weighted list; used to check certificates
/// that need not satisfy the convex-combination invariants.
pub fn weighted_sum(terms: &[(Rational, Matrix)]) -> Result<Matrix> {
    let (_, first) = terms
        .first()
        .ok_or_else(|| Error::InvalidCombination("no terms".into()))?;
    let mut acc = Matrix::zeros(first.rows(), first.cols());
    for (c, m) in terms {
        acc.check_same_shape(m)?;
        if !c.is_zero() {
            acc = &acc + &m.scale(c);
        }
    }
    Ok(acc)
}
