//! Bases of (0,1)- and half-integral stochastic matrices for the stochastic
//! polytope and its centrosymmetric subpolytope, plus exact verification.
//!
//! Families:
//! - square `n x n`: `P_1..P_{(n-1)^2}` (permutation matrices completing the
//!   renumbered near-permutation blocks `A_i`) followed by `C_1..C_n`;
//! - rectangular `m x n`: `B_{i,j}` for `j = 1..n-1`, `i = 1..m` (j outer)
//!   followed by `C_n`;
//! - centrosymmetric, even `m = 2k`: `B` stacked over `B^pi` for each `B` of
//!   the rectangular `k x n` family;
//! - centrosymmetric, odd `m = 2k + 1`: the rectangular `k x n` family with a
//!   fixed center row, then `ceil(n/2) - 1` matrices with center row
//!   `d_i = 1/2 (e_i + e_{n+1-i})`.

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::rank::rank_of_family;
use crate::rational::{self, Rational};

/// Position number of cell `(i, j)` of an `l x l` matrix under the cyclic
/// diagonal renumbering `i + (j - i) l (mod l^2)`, with residue 0 reported as
/// `l^2`. A bijection onto `1..=l^2`.
pub fn renumber_position(i: usize, j: usize, l: usize) -> Result<usize> {
    if l == 0 || !(1..=l).contains(&i) || !(1..=l).contains(&j) {
        return Err(Error::IndexOutOfRange(format!(
            "cell ({i}, {j}) not in a {l}x{l} matrix"
        )));
    }
    let (i, j, l) = (i as i64, j as i64, l as i64);
    let modulus = l * l;
    let p = (i + (j - i) * l).rem_euclid(modulus);
    Ok(if p == 0 { modulus } else { p } as usize)
}

/// The near-permutation block `A_p` of size `l x l`: ones at positions
/// `p, p+1, ..., p+l-2` (cyclically mod `l^2`). Entries are 0-based
/// `(row, col)` cells.
pub fn near_permutation_cells(p: usize, l: usize) -> Vec<(usize, usize)> {
    let modulus = l * l;
    let mut cell_at = vec![(0, 0); modulus + 1];
    for i in 1..=l {
        for j in 1..=l {
            let pos = renumber_position(i, j, l).expect("cell in range");
            cell_at[pos] = (i - 1, j - 1);
        }
    }
    (0..l.saturating_sub(1))
        .map(|offset| {
            let pos = (p - 1 + offset) % modulus + 1;
            cell_at[pos]
        })
        .collect()
}

fn indicator(rows: usize, cols: usize, cells: &[(usize, usize)]) -> Matrix {
    Matrix::from_fn(rows, cols, |i, j| {
        if cells.contains(&(i - 1, j - 1)) {
            Rational::one()
        } else {
            Rational::zero()
        }
    })
}

/// `C_j`: ones in column `j`, zeros elsewhere.
pub fn column_matrix(rows: usize, cols: usize, j: usize) -> Matrix {
    Matrix::from_fn(
        rows,
        cols,
        |_, c| if c == j { Rational::one() } else { Rational::zero() },
    )
}

/// `P_p`: the `n x n` permutation matrix whose lower-right `(n-1) x (n-1)`
/// block is `A_p`.
fn completed_permutation(p: usize, n: usize) -> Matrix {
    let l = n - 1;
    let block = near_permutation_cells(p, l);
    let empty_row = (0..l).find(|r| block.iter().all(|c| c.0 != *r)).expect("one empty row");
    let empty_col = (0..l)
        .find(|c| block.iter().all(|x| x.1 != *c))
        .expect("one empty column");
    let mut cells: Vec<(usize, usize)> = block.iter().map(|&(r, c)| (r + 1, c + 1)).collect();
    cells.push((0, empty_col + 1));
    cells.push((empty_row + 1, 0));
    indicator(n, n, &cells)
}

/// `P_1..P_{(n-1)^2}, C_1..C_n`: `n^2 - n + 1` stochastic matrices.
pub fn basis_square(n: usize) -> Result<Vec<Matrix>> {
    if n < 2 {
        return Err(Error::InvalidDimensions(format!("square basis needs n >= 2, got {n}")));
    }
    let l = n - 1;
    let mut family: Vec<Matrix> = (1..=l * l).map(|p| completed_permutation(p, n)).collect();
    family.extend((1..=n).map(|j| column_matrix(n, n, j)));
    Ok(family)
}

/// `B_{i,j}`: 1 at `(i, j)`, ones in column `j+1` except row `i`.
pub fn b_matrix(m: usize, n: usize, i: usize, j: usize) -> Matrix {
    Matrix::from_fn(m, n, |r, c| {
        let hit = (r == i && c == j) || (r != i && c == j + 1);
        if hit {
            Rational::one()
        } else {
            Rational::zero()
        }
    })
}

/// `B_{1,1}, ..., B_{m,1}, B_{1,2}, ..., B_{m,n-1}, C_n`: `m(n-1) + 1`
/// matrices.
pub fn basis_rect(m: usize, n: usize) -> Result<Vec<Matrix>> {
    if m < 1 || n < 2 {
        return Err(Error::InvalidDimensions(format!(
            "rectangular basis needs m >= 1 and n >= 2, got {m}x{n}"
        )));
    }
    let mut family = Vec::with_capacity(m * (n - 1) + 1);
    for j in 1..n {
        for i in 1..=m {
            family.push(b_matrix(m, n, i, j));
        }
    }
    family.push(column_matrix(m, n, n));
    Ok(family)
}

/// `[B; B^pi]` for each `B` of `basis_rect(m/2, n)`.
pub fn basis_centro_even(m: usize, n: usize) -> Result<Vec<Matrix>> {
    if m % 2 == 1 {
        return Err(Error::InvalidDimensions(format!(
            "centro-even basis needs even m, got {m}"
        )));
    }
    if m < 2 || n < 2 {
        return Err(Error::InvalidDimensions(format!(
            "centro-even basis needs m >= 2 and n >= 2, got {m}x{n}"
        )));
    }
    basis_rect(m / 2, n)?
        .iter()
        .map(|b| Matrix::stack(&[b, &b.rotate_pi()]))
        .collect()
}

/// `d_i`: `1/2` at columns `i` and `n+1-i`.
pub fn mirrored_half_row(n: usize, i: usize) -> Vec<Rational> {
    (1..=n)
        .map(|c| {
            if c == i || c == n + 1 - i {
                rational::half()
            } else {
                Rational::zero()
            }
        })
        .collect()
}

fn unit_row(n: usize, i: usize) -> Vec<Rational> {
    (1..=n)
        .map(|c| if c == i { Rational::one() } else { Rational::zero() })
        .collect()
}

/// Odd-row family: `[B_i; center; B_i^pi]` for the rectangular `k x n`
/// family (`k = (m-1)/2`), with center `d_{n/2}` for even `n` and the unit
/// row at column `ceil(n/2)` for odd `n`; then
/// `[C_i^pi; d_i; C_i]` for `i = 1..ceil(n/2)-1`.
pub fn basis_centro_odd(m: usize, n: usize) -> Result<Vec<Matrix>> {
    if m.is_multiple_of(2) {
        return Err(Error::InvalidDimensions(format!(
            "centro-odd basis needs odd m, got {m}"
        )));
    }
    if m < 3 || n < 2 {
        return Err(Error::InvalidDimensions(format!(
            "centro-odd basis needs m >= 3 and n >= 2, got {m}x{n}"
        )));
    }
    let k = (m - 1) / 2;
    let center = if n.is_multiple_of(2) {
        mirrored_half_row(n, n / 2)
    } else {
        unit_row(n, n.div_ceil(2))
    };
    let mut family = Vec::new();
    for b in basis_rect(k, n)? {
        let upper = Matrix::stack(&[&b, &b.rotate_pi()])?;
        family.push(upper.insert_row(k + 1, &center)?);
    }
    for i in 1..n.div_ceil(2) {
        let c = column_matrix(k, n, i);
        let upper = Matrix::stack(&[&c.rotate_pi(), &c])?;
        family.push(upper.insert_row(k + 1, &mirrored_half_row(n, i))?);
    }
    Ok(family)
}

/// Affine dimension of the stochastic polytope: `m(n-1)`.
pub fn dimension_stochastic(m: usize, n: usize) -> usize {
    m * (n - 1)
}

/// Affine dimension of the centrosymmetric polytope.
pub fn dimension_centro(m: usize, n: usize) -> usize {
    if m.is_multiple_of(2) {
        (m / 2) * (n - 1)
    } else {
        ((m - 1) / 2) * (n - 1) + n.div_ceil(2) - 1
    }
}

/// Size is `expected_dim + 1` and the family is linearly independent.
pub fn verify_basis(family: &[Matrix], expected_dim: usize) -> Result<bool> {
    if family.is_empty() {
        return Err(Error::InvalidDimensions("empty family".into()));
    }
    let rank = rank_of_family(family)?;
    Ok(family.len() == expected_dim + 1 && rank == family.len())
}
