//! Exact implicitization of rational plane curves.
//!
//! Given a parametrization `x = u1(t)/v1(t)`, `y = u2(t)/v2(t)`, this crate
//! computes the polynomial `F(x, y)` whose zero set is the curve, working
//! entirely over the rationals. Three interpolation pipelines share the
//! space of polynomials with `deg_x <= m`, `deg_y <= n`:
//!
//! * [`Method::Unstructured`]: nodes on the curve, nullspace of a dense matrix;
//! * [`Method::DualVandermonde`]: resultant data at prime-power nodes, solved as a
//!   transposed Vandermonde system;
//! * [`Method::Kronecker`]: resultant data on an integer grid, solved through the
//!   Kronecker factorization `V_x ⊗ V_y`.
//!
//! Every kernel threads an [`OpCounter`] so that operation counts and number
//! sizes can be compared across methods.

pub mod error;
pub mod implicitize;

pub mod polycore;
pub mod structmat;

pub use error::{Error, Result};
pub use implicitize::{
    degree_bounds, implicitize, method_dual_vandermonde, method_kronecker, method_unstructured,
    nodes_on_curve, DegreeBounds, ImplicitResult, Method, MethodConfig,
};
pub use polycore::{rat, substitute_check, BiPoly, Rat, RatParam, UniPoly};
pub use structmat::{
    build_parametric_sylvester, det_bareiss, eval_polymat, kron_solve, nullspace, solve_general,
    vandermonde_solve_dual, vandermonde_solve_primal, MatQ, OpCounter, PolyMat,
};
