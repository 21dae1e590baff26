//! End-to-end implicitization pipelines.
//!
//! All three methods interpolate in the space of polynomials with
//! `deg_x <= m`, `deg_y <= n`, where `m` and `n` come from the degrees of the
//! parametrization ([`degree_bounds`]). They differ in the choice of nodes
//! and therefore in the structure of the linear system:
//!
//! | method            | nodes                         | data                 | system            |
//! |-------------------|-------------------------------|----------------------|-------------------|
//! | unstructured      | points on the curve           | all zero             | dense, nullspace  |
//! | dual-Vandermonde  | `(p1^k, p2^k)`                | Sylvester determinant | transposed Vandermonde |
//! | Kronecker         | integer grid `(i, j)`         | Sylvester determinant | `V_x ⊗ V_y`       |

mod methods;
mod nodes;

use std::fmt;
use std::str::FromStr;

pub use methods::{
    dual_vandermonde_nodes, implicitize, kronecker_grid, method_dual_vandermonde, method_kronecker,
    method_unstructured, resultant_data, unstructured_matrix,
};
pub use nodes::{nodes_on_curve, CurveNodes};

use crate::error::{Error, Result};
use crate::polycore::{BiPoly, Rat, RatParam};
use crate::structmat::OpCounter;

/// Coordinate degrees of the implicit polynomial and the dimension of the
/// interpolation space.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct DegreeBounds {
    /// `deg_x F = max(deg u2, deg v2)`
    pub m: usize,
    /// `deg_y F = max(deg u1, deg v1)`
    pub n: usize,
    /// `(m + 1)(n + 1)`
    pub dim: usize,
}

/// Note the crossing: the degree in `x` comes from the `y` component.
pub fn degree_bounds(param: &RatParam) -> DegreeBounds {
    let m = param.u2().degree_or_zero().max(param.v2().degree_or_zero());
    let n = param.u1().degree_or_zero().max(param.v1().degree_or_zero());
    DegreeBounds {
        m,
        n,
        dim: (m + 1) * (n + 1),
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Method {
    Unstructured,
    DualVandermonde,
    Kronecker,
}

impl Method {
    pub const ALL: [Method; 3] = [
        Method::Unstructured,
        Method::DualVandermonde,
        Method::Kronecker,
    ];

    /// Short name used on the command line and in JSON output.
    pub fn as_str(&self) -> &'static str {
        match self {
            Method::Unstructured => "unstructured",
            Method::DualVandermonde => "dualvand",
            Method::Kronecker => "kron",
        }
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Method {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_lowercase().as_str() {
            "unstructured" => Ok(Method::Unstructured),
            "dualvand" | "dual-vandermonde" => Ok(Method::DualVandermonde),
            "kron" | "kronecker" => Ok(Method::Kronecker),
            other => Err(Error::InvalidArgument(format!("unknown method `{other}`"))),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct MethodConfig {
    pub method: Method,
    /// Prime bases of the dual-Vandermonde nodes.
    pub primes: (u64, u64),
    /// Cap on rows added past `N` by the unstructured method; `None` means `2N`.
    pub max_extra_nodes: Option<usize>,
}

impl MethodConfig {
    pub fn new(method: Method) -> Self {
        MethodConfig {
            method,
            primes: (2, 3),
            max_extra_nodes: None,
        }
    }

    pub fn with_primes(mut self, p1: u64, p2: u64) -> Result<Self> {
        self.primes = (p1, p2);
        self.validate()?;
        Ok(self)
    }

    pub fn validate(&self) -> Result<()> {
        let (p1, p2) = self.primes;
        if p1 == p2 || !is_prime(p1) || !is_prime(p2) {
            return Err(Error::InvalidArgument(format!(
                "node bases must be distinct primes, got {p1} and {p2}"
            )));
        }
        Ok(())
    }
}

impl Default for MethodConfig {
    fn default() -> Self {
        Self::new(Method::Kronecker)
    }
}

fn is_prime(p: u64) -> bool {
    p >= 2
        && (2..)
            .take_while(|d| d * d <= p)
            .all(|d| !p.is_multiple_of(d))
}

/// Output of one implicitization run.
#[derive(Clone, Debug)]
pub struct ImplicitResult {
    pub method: Method,
    /// Canonical implicit polynomial.
    pub poly: BiPoly,
    pub bounds: DegreeBounds,
    /// `data_counter` merged with `solve_counter`.
    pub counter: OpCounter,
    /// Node generation, matrix assembly and determinant evaluation.
    pub data_counter: OpCounter,
    /// The linear solve (nullspace for the unstructured method).
    pub solve_counter: OpCounter,
    /// Largest bit length over the interpolation data and the entries of the
    /// solved system's coefficient matrix.
    pub data_bits: u64,
    /// Interpolation nodes, in row order of the system.
    pub nodes: Vec<(Rat, Rat)>,
    /// Interpolation data (all zero for the unstructured method).
    pub data: Vec<Rat>,
    /// Rows added beyond `N` by the unstructured method.
    pub extra_nodes: usize,
    /// The polynomial vanishes identically on the parametrization.
    pub verified: bool,
    /// `deg_x F = m` and `deg_y F = n`.
    pub degree_tight: bool,
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bounds_examples() {
        let hyperbola = RatParam::from_ints(&[1, 1], &[2, 1], &[3, 1], &[4, 1]).unwrap();
        assert_eq!(
            degree_bounds(&hyperbola),
            DegreeBounds { m: 1, n: 1, dim: 4 }
        );
        let cubic =
            RatParam::from_ints(&[1, 2, 2], &[5, 0, 0, 1], &[-1, 1, -3, 1], &[-3, 0, 1]).unwrap();
        assert_eq!(
            degree_bounds(&cubic),
            DegreeBounds {
                m: 3,
                n: 3,
                dim: 16
            }
        );
        let parabola = RatParam::from_ints(&[0, 1], &[1], &[0, 0, 1], &[1]).unwrap();
        assert_eq!(
            degree_bounds(&parabola),
            DegreeBounds { m: 2, n: 1, dim: 6 }
        );
    }

    #[test]
    fn prime_validation() {
        let cfg = MethodConfig::new(Method::DualVandermonde);
        assert!(cfg.with_primes(3, 2).is_ok());
        assert!(cfg.with_primes(5, 5).is_err());
        assert!(cfg.with_primes(4, 3).is_err());
        assert!(cfg.with_primes(1, 2).is_err());
        assert!(MethodConfig::default().validate().is_ok());
    }

    #[test]
    fn method_names() {
        for m in Method::ALL {
            assert_eq!(m.as_str().parse::<Method>().unwrap(), m);
        }
        assert_eq!("kronecker".parse::<Method>().unwrap(), Method::Kronecker);
        assert!("groebner".parse::<Method>().is_err());
    }
}
