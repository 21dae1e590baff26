use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::bareiss::{bareiss_step, integerize_rows};
use super::counter::OpCounter;
use super::matrix::MatQ;
use crate::error::{Error, Result};
use crate::polycore::Rat;

/// Fraction-free row echelon form of integer rows. Pivots are the first
/// nonzero entry at or below the current row. Returns the pivot columns.
fn echelon(a: &mut [Vec<BigInt>], counter: &mut OpCounter) -> Result<Vec<usize>> {
    let rows = a.len();
    let cols = a.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut prev = BigInt::one();
    for col in 0..cols {
        let pr = pivots.len();
        if pr == rows {
            break;
        }
        let Some(p) = (pr..rows).find(|&r| !a[r][col].is_zero()) else {
            continue;
        };
        a.swap(p, pr);
        let (top, rest) = a.split_at_mut(pr + 1);
        let prow = &top[pr];
        for row in rest.iter_mut() {
            for j in col + 1..cols {
                row[j] = bareiss_step(&prow[col], &row[j], &row[col], &prow[j], &prev, counter)?;
            }
            row[col] = BigInt::zero();
        }
        prev = a[pr][col].clone();
        pivots.push(col);
    }
    Ok(pivots)
}

/// Solve for the pivot variables of an echelon system given values for every
/// column after each pivot; `x` holds the free values on entry.
fn back_substitute(
    a: &[Vec<BigInt>],
    pivots: &[usize],
    rhs: Option<&[BigInt]>,
    x: &mut [Rat],
    counter: &mut OpCounter,
) {
    for (k, &pc) in pivots.iter().enumerate().rev() {
        let mut acc = match rhs {
            Some(b) => Rat::from_integer(b[k].clone()),
            None => Rat::zero(),
        };
        for j in pc + 1..x.len() {
            if a[k][j].is_zero() || x[j].is_zero() {
                continue;
            }
            let term = counter.mul(&Rat::from_integer(a[k][j].clone()), &x[j]);
            acc = counter.sub(&acc, &term);
        }
        x[pc] = counter.div(&acc, &Rat::from_integer(a[k][pc].clone()));
    }
}

/// Exact solution of `m x = b` for square nonsingular `m`.
///
/// Rows of `[m | b]` are cleared to integers, reduced by fraction-free
/// elimination, and the triangular system is back-substituted over the
/// rationals.
pub fn solve_general(m: &MatQ, b: &[Rat], counter: &mut OpCounter) -> Result<Vec<Rat>> {
    let n = m.rows();
    if !m.is_square() || b.len() != n {
        return Err(Error::InvalidArgument(format!(
            "system of shape {}x{} with right-hand side of length {}",
            m.rows(),
            m.cols(),
            b.len()
        )));
    }
    if n == 0 {
        return Ok(Vec::new());
    }
    let augmented = MatQ::from_fn(n, n + 1, |i, j| {
        if j < n {
            m[(i, j)].clone()
        } else {
            b[i].clone()
        }
    });
    let (mut a, _) = integerize_rows(&augmented, counter);
    // a nonsingular system pivots on every coefficient column before the
    // augmented one is reached
    let pivots = echelon(&mut a, counter)?;
    if pivots.len() != n || pivots.last() != Some(&(n - 1)) {
        return Err(Error::Singular);
    }
    let rhs: Vec<BigInt> = a.iter().map(|r| r[n].clone()).collect();
    for row in &mut a {
        row.truncate(n);
    }
    let mut x = vec![Rat::zero(); n];
    back_substitute(&a, &pivots, Some(&rhs), &mut x, counter);
    Ok(x)
}

/// Basis of `{x : m x = 0}`, one vector per free column, with that free
/// variable set to 1 and the other free variables to 0 (the reduced
/// row-echelon basis). Empty iff `m` has full column rank.
pub fn nullspace(m: &MatQ, counter: &mut OpCounter) -> Result<Vec<Vec<Rat>>> {
    let cols = m.cols();
    let (mut a, _) = integerize_rows(m, counter);
    let pivots = echelon(&mut a, counter)?;
    let free = (0..cols).filter(|c| !pivots.contains(c));
    Ok(free
        .map(|f| {
            let mut x = vec![Rat::zero(); cols];
            x[f] = Rat::one();
            back_substitute(&a, &pivots, None, &mut x, counter);
            x
        })
        .collect())
}
