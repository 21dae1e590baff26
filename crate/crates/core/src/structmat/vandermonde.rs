//! Björck-Pereyra solvers for Vandermonde systems.
//!
//! With `V[i][k] = x_i^k`, the primal problem `V a = f` is polynomial
//! interpolation in the monomial basis; the dual problem `Vᵀ z = b` is the
//! transposed system that arises when each unknown is attached to one node
//! and each equation to one power. Both run in `O(s²)` operations without
//! forming `V`.

use super::check_distinct;
use super::counter::OpCounter;
use crate::error::{Error, Result};
use crate::polycore::Rat;

fn check_lengths(nodes: &[Rat], rhs: &[Rat]) -> Result<()> {
    if nodes.len() != rhs.len() {
        return Err(Error::InvalidArgument(format!(
            "{} nodes but {} right-hand side values",
            nodes.len(),
            rhs.len()
        )));
    }
    check_distinct(nodes)
}

/// Coefficients `a` with `sum_k a_k nodes[i]^k = values[i]` for every `i`.
///
/// Forward pass: Newton divided differences in place. Backward pass: expand
/// the Newton form into monomial coefficients.
pub fn vandermonde_solve_primal(
    nodes: &[Rat],
    values: &[Rat],
    counter: &mut OpCounter,
) -> Result<Vec<Rat>> {
    check_lengths(nodes, values)?;
    counter.vandermonde_solves += 1;
    let x = nodes;
    let mut f = values.to_vec();
    let Some(n) = f.len().checked_sub(1) else {
        return Ok(f);
    };
    for k in 0..n {
        for i in (k + 1..=n).rev() {
            let num = counter.sub(&f[i], &f[i - 1]);
            let den = counter.sub(&x[i], &x[i - k - 1]);
            f[i] = counter.div(&num, &den);
        }
    }
    for k in (0..n).rev() {
        for i in k..n {
            let t = counter.mul(&f[i + 1], &x[k]);
            f[i] = counter.sub(&f[i], &t);
        }
    }
    Ok(f)
}

/// Solution `z` of `sum_i z_i nodes[i]^k = b[k]` for every `k`.
///
/// This applies the transposed bidiagonal factors of the primal algorithm in
/// reverse order: first the sweeps `b[i] -= x_k b[i-1]`, then for each level
/// a division by node differences followed by a differencing sweep.
pub fn vandermonde_solve_dual(
    nodes: &[Rat],
    b: &[Rat],
    counter: &mut OpCounter,
) -> Result<Vec<Rat>> {
    check_lengths(nodes, b)?;
    counter.vandermonde_solves += 1;
    let x = nodes;
    let mut z = b.to_vec();
    let Some(n) = z.len().checked_sub(1) else {
        return Ok(z);
    };
    for (k, xk) in x.iter().enumerate().take(n) {
        for i in (k + 1..=n).rev() {
            let t = counter.mul(xk, &z[i - 1]);
            z[i] = counter.sub(&z[i], &t);
        }
    }
    for k in (0..n).rev() {
        for i in k + 1..=n {
            let den = counter.sub(&x[i], &x[i - k - 1]);
            z[i] = counter.div(&z[i], &den);
        }
        for i in k..n {
            z[i] = counter.sub(&z[i], &z[i + 1]);
        }
    }
    Ok(z)
}
