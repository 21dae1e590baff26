//! Exact scalars and polynomials: rationals, univariate polynomials in the
//! parameter `t`, dense bivariate polynomials in `x, y`, and rational
//! parametrizations.

mod bipoly;
mod param;
pub mod rat;
mod unipoly;

pub use bipoly::BiPoly;
pub use param::{substitute_check, RatParam};
pub use rat::Rat;
pub use unipoly::UniPoly;
