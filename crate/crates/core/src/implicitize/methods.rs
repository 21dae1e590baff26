use num_traits::{One, Zero};

use super::nodes::CurveNodes;
use super::{degree_bounds, DegreeBounds, ImplicitResult, Method, MethodConfig};
use crate::error::{Error, Result};
use crate::polycore::{rat, substitute_check, BiPoly, Rat, RatParam};
use crate::structmat::{
    build_parametric_sylvester, det_bareiss, eval_polymat, kron_solve, nullspace,
    vandermonde_solve_dual, MatQ, OpCounter, PolyMat,
};

/// `x^0 .. x^k`, counting the multiplications.
fn powers(x: &Rat, k: usize, counter: &mut OpCounter) -> Vec<Rat> {
    let mut out = Vec::with_capacity(k + 1);
    out.push(Rat::one());
    for e in 1..=k {
        let next = counter.mul(&out[e - 1], x);
        out.push(next);
    }
    out
}

/// One row `x^i y^j` (i-major) of the unstructured system.
fn monomial_row(x: &Rat, y: &Rat, bounds: DegreeBounds, counter: &mut OpCounter) -> Vec<Rat> {
    let xp = powers(x, bounds.m, counter);
    let yp = powers(y, bounds.n, counter);
    let mut row = Vec::with_capacity(bounds.dim);
    for xi in &xp {
        for yj in &yp {
            row.push(counter.mul(xi, yj));
        }
    }
    row
}

/// Matrix with one row of monomials `x^i y^j` per node.
pub fn unstructured_matrix(
    nodes: &[(Rat, Rat)],
    bounds: DegreeBounds,
    counter: &mut OpCounter,
) -> MatQ {
    let mut a = MatQ::zeros(0, bounds.dim);
    for (x, y) in nodes {
        a.push_row(monomial_row(x, y, bounds, counter))
            .expect("row length is the space dimension");
    }
    a
}

/// Nodes `(p1^k, p2^k)` for `k < N` and the column nodes `p1^i p2^j` in basis order.
pub fn dual_vandermonde_nodes(
    bounds: DegreeBounds,
    p1: u64,
    p2: u64,
) -> (Vec<(Rat, Rat)>, Vec<Rat>) {
    let (r1, r2) = (rat::int(p1 as i64), rat::int(p2 as i64));
    let nodes = (0..bounds.dim)
        .map(|k| (rat::pow(&r1, k), rat::pow(&r2, k)))
        .collect();
    let mut alphas = Vec::with_capacity(bounds.dim);
    for i in 0..=bounds.m {
        for j in 0..=bounds.n {
            alphas.push(rat::pow(&r1, i) * rat::pow(&r2, j));
        }
    }
    (nodes, alphas)
}

/// Grid axes `0..=m` and `0..=n`.
pub fn kronecker_grid(bounds: DegreeBounds) -> (Vec<Rat>, Vec<Rat>) {
    let axis = |k: usize| (0..=k as i64).map(rat::int).collect();
    (axis(bounds.m), axis(bounds.n))
}

/// `det S(x_k, y_k)` at each node.
pub fn resultant_data(
    s: &PolyMat,
    nodes: &[(Rat, Rat)],
    counter: &mut OpCounter,
) -> Result<Vec<Rat>> {
    nodes
        .iter()
        .map(|(x, y)| det_bareiss(&eval_polymat(s, x, y), counter))
        .collect()
}

fn max_bits<'a>(values: impl IntoIterator<Item = &'a Rat>) -> u64 {
    values.into_iter().map(rat::bits).max().unwrap_or(0)
}

/// Assemble the result: canonicalize, verify, check degree tightness.
#[allow(clippy::too_many_arguments)]
fn finish(
    method: Method,
    param: &RatParam,
    bounds: DegreeBounds,
    raw: BiPoly,
    data_counter: OpCounter,
    solve_counter: OpCounter,
    data_bits: u64,
    nodes: Vec<(Rat, Rat)>,
    data: Vec<Rat>,
    extra_nodes: usize,
) -> Result<ImplicitResult> {
    let poly = raw
        .canonicalize()
        .map_err(|_| Error::Internal("interpolation produced the zero polynomial".into()))?;
    let verified = substitute_check(&poly, param)?;
    let degree_tight = poly.degrees() == Some((bounds.m, bounds.n));
    let mut counter = data_counter;
    counter.merge(&solve_counter);
    Ok(ImplicitResult {
        method,
        poly,
        bounds,
        counter,
        data_counter,
        solve_counter,
        data_bits,
        nodes,
        data,
        extra_nodes,
        verified,
        degree_tight,
    })
}

/// The resultant data must be the interpolant evaluated at its own nodes.
fn check_interpolates(raw: &BiPoly, nodes: &[(Rat, Rat)], data: &[Rat]) -> Result<()> {
    for (k, ((x, y), b)) in nodes.iter().zip(data).enumerate() {
        if &raw.eval(x, y) != b {
            return Err(Error::Internal(format!(
                "interpolant disagrees with its datum at node {k}"
            )));
        }
    }
    Ok(())
}

/// Curve points as nodes, all-zero data, implicit polynomial from the
/// nullspace of the dense system. Rows are appended one at a time while the
/// nullspace has dimension above one.
pub fn method_unstructured(param: &RatParam, cfg: &MethodConfig) -> Result<ImplicitResult> {
    let bounds = degree_bounds(param);
    let max_extra = cfg.max_extra_nodes.unwrap_or(2 * bounds.dim);
    let mut data_counter = OpCounter::new();
    let mut solve_counter = OpCounter::new();

    let mut stream = CurveNodes::new(param);
    let nodes: Vec<_> = stream.by_ref().take(bounds.dim).collect();
    if nodes.len() < bounds.dim {
        return Err(Error::DegenerateParametrization(format!(
            "curve has only {} distinct points",
            nodes.len()
        )));
    }
    let mut a = unstructured_matrix(&nodes, bounds, &mut data_counter);
    let mut nodes = nodes;
    let mut extra = 0;
    let vector = loop {
        let mut basis = nullspace(&a, &mut solve_counter)?;
        match basis.len() {
            0 => {
                return Err(Error::Internal(
                    "nullspace of the unstructured system is trivial".into(),
                ))
            }
            1 => break basis.pop().expect("one vector"),
            nullity => {
                let next = if extra < max_extra {
                    stream.next()
                } else {
                    None
                };
                let Some((x, y)) = next else {
                    return Err(Error::DegenerateInput {
                        nullity,
                        extra_nodes: extra,
                    });
                };
                a.push_row(monomial_row(&x, &y, bounds, &mut data_counter))?;
                nodes.push((x, y));
                extra += 1;
            }
        }
    };
    let data_bits = max_bits(a.entries());
    let data = vec![Rat::zero(); nodes.len()];
    let raw = BiPoly::from_coeffs(bounds.m, bounds.n, vector)?;
    finish(
        Method::Unstructured,
        param,
        bounds,
        raw,
        data_counter,
        solve_counter,
        data_bits,
        nodes,
        data,
        extra,
    )
}

/// Resultant data at `(p1^k, p2^k)`, solved as a transposed Vandermonde
/// system in the column nodes `p1^i p2^j`.
pub fn method_dual_vandermonde(param: &RatParam, cfg: &MethodConfig) -> Result<ImplicitResult> {
    cfg.validate()?;
    let bounds = degree_bounds(param);
    let s = build_parametric_sylvester(param)?;
    let (p1, p2) = cfg.primes;
    let (nodes, alphas) = dual_vandermonde_nodes(bounds, p1, p2);
    for (i, a) in alphas.iter().enumerate() {
        if alphas[..i].contains(a) {
            return Err(Error::Internal(format!("column nodes collide at {i}")));
        }
    }

    let mut data_counter = OpCounter::new();
    let data = resultant_data(&s, &nodes, &mut data_counter)?;
    let mut solve_counter = OpCounter::new();
    let c = vandermonde_solve_dual(&alphas, &data, &mut solve_counter)?;

    let raw = BiPoly::from_coeffs(bounds.m, bounds.n, c)?;
    check_interpolates(&raw, &nodes, &data)?;
    // the largest matrix entry is the largest column node to the power N - 1
    let top = alphas.iter().max().map(|a| rat::pow(a, bounds.dim - 1));
    let data_bits = max_bits(data.iter().chain(top.as_ref()));
    finish(
        Method::DualVandermonde,
        param,
        bounds,
        raw,
        data_counter,
        solve_counter,
        data_bits,
        nodes,
        data,
        0,
    )
}

/// Resultant data on the grid `{0..m} x {0..n}`, solved through `V_x ⊗ V_y`.
pub fn method_kronecker(param: &RatParam) -> Result<ImplicitResult> {
    let bounds = degree_bounds(param);
    let s = build_parametric_sylvester(param)?;
    let (xs, ys) = kronecker_grid(bounds);
    let nodes: Vec<(Rat, Rat)> = xs
        .iter()
        .flat_map(|x| ys.iter().map(move |y| (x.clone(), y.clone())))
        .collect();

    let mut data_counter = OpCounter::new();
    let data = resultant_data(&s, &nodes, &mut data_counter)?;
    let mut solve_counter = OpCounter::new();
    let c = kron_solve(&xs, &ys, &data, &mut solve_counter)?;

    let raw = BiPoly::from_coeffs(bounds.m, bounds.n, c)?;
    check_interpolates(&raw, &nodes, &data)?;
    let top_x = xs.last().map(|x| rat::pow(x, bounds.m));
    let top_y = ys.last().map(|y| rat::pow(y, bounds.n));
    let data_bits = max_bits(data.iter().chain(top_x.as_ref()).chain(top_y.as_ref()));
    finish(
        Method::Kronecker,
        param,
        bounds,
        raw,
        data_counter,
        solve_counter,
        data_bits,
        nodes,
        data,
        0,
    )
}

/// Run the configured method. A result that fails substitution is an error.
pub fn implicitize(param: &RatParam, cfg: &MethodConfig) -> Result<ImplicitResult> {
    let result = match cfg.method {
        Method::Unstructured => method_unstructured(param, cfg)?,
        Method::DualVandermonde => method_dual_vandermonde(param, cfg)?,
        Method::Kronecker => method_kronecker(param)?,
    };
    if !result.verified {
        return Err(Error::Internal(format!(
            "{} result does not vanish on the curve",
            result.method
        )));
    }
    Ok(result)
}
