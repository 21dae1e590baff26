use super::check_distinct;
use super::counter::OpCounter;
use super::vandermonde::vandermonde_solve_primal;
use crate::error::{Error, Result};
use crate::polycore::Rat;

/// Solve `(V_x ⊗ V_y) c = b` without forming the Kronecker product.
///
/// Rows of the system are node pairs `(k, l)` with `k` major, columns are
/// monomials `x^i y^j` with `i` major, so `b` splits into `m + 1` blocks of
/// length `n + 1`. Each block is solved against `V_y`, giving the values at
/// `x_k` of the column polynomials in `x`; then each of the `n + 1` columns of
/// those partial results is solved against `V_x`.
pub fn kron_solve(
    x_nodes: &[Rat],
    y_nodes: &[Rat],
    b: &[Rat],
    counter: &mut OpCounter,
) -> Result<Vec<Rat>> {
    let (mx, ny) = (x_nodes.len(), y_nodes.len());
    if mx == 0 || ny == 0 || b.len() != mx * ny {
        return Err(Error::InvalidArgument(format!(
            "kronecker system with {mx} x-nodes and {ny} y-nodes needs {} data, got {}",
            mx * ny,
            b.len()
        )));
    }
    check_distinct(x_nodes)?;
    check_distinct(y_nodes)?;

    // stage 1: V_y d_k = b_k
    let partial = b
        .chunks(ny)
        .map(|block| vandermonde_solve_primal(y_nodes, block, counter))
        .collect::<Result<Vec<_>>>()?;

    // stage 2: V_x f_j = (d_0[j], .., d_m[j])
    let mut c = vec![Rat::default(); mx * ny];
    for j in 0..ny {
        let column: Vec<Rat> = partial.iter().map(|d| d[j].clone()).collect();
        let f = vandermonde_solve_primal(x_nodes, &column, counter)?;
        for (i, v) in f.into_iter().enumerate() {
            c[i * ny + j] = v;
        }
    }
    Ok(c)
}
