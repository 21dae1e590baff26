//! Exact structured linear algebra: the parametric Sylvester matrix,
//! fraction-free determinants and elimination, Björck-Pereyra solvers for
//! Vandermonde systems and their transposes, and the Kronecker-product solver.
//!
//! Every kernel takes an [`OpCounter`] and records the rational (or integer)
//! operations it performs.

mod bareiss;
mod counter;
mod elim;
mod kron;
mod matrix;
mod sylvester;
mod vandermonde;

pub use bareiss::det_bareiss;
pub use counter::OpCounter;
pub use elim::{nullspace, solve_general};
pub use kron::kron_solve;
pub use matrix::MatQ;
pub use sylvester::{build_parametric_sylvester, eval_polymat, PolyMat};
pub use vandermonde::{vandermonde_solve_dual, vandermonde_solve_primal};

use crate::error::{Error, Result};
use crate::polycore::Rat;

fn check_distinct(nodes: &[Rat]) -> Result<()> {
    for (i, a) in nodes.iter().enumerate() {
        if nodes[..i].contains(a) {
            return Err(Error::DuplicateNode { index: i });
        }
    }
    Ok(())
}
