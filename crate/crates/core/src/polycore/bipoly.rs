use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::rat::{self, Rat};
use super::unipoly::render_terms;
use crate::error::{Error, Result};

/// Dense bivariate polynomial with `deg_x <= m` and `deg_y <= n`.
///
/// Coefficients are stored i-major, j-minor: the coefficient of `x^i y^j`
/// lives at `i * (n + 1) + j`, which is also the basis order
/// `1, y, .., y^n, x, xy, .., x^m y^n` used for every interpolation system.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BiPoly {
    m: usize,
    n: usize,
    coeffs: Vec<Rat>,
}

impl BiPoly {
    pub fn zero(m: usize, n: usize) -> Self {
        BiPoly {
            m,
            n,
            coeffs: vec![Rat::zero(); (m + 1) * (n + 1)],
        }
    }

    /// Build from coefficients in i-major order; the length must be `(m+1)(n+1)`.
    pub fn from_coeffs(m: usize, n: usize, coeffs: Vec<Rat>) -> Result<Self> {
        if coeffs.len() != (m + 1) * (n + 1) {
            return Err(Error::InvalidArgument(format!(
                "expected {} coefficients for a ({m}, {n}) grid, got {}",
                (m + 1) * (n + 1),
                coeffs.len()
            )));
        }
        Ok(BiPoly { m, n, coeffs })
    }

    pub fn from_ints(m: usize, n: usize, coeffs: &[i64]) -> Result<Self> {
        Self::from_coeffs(m, n, coeffs.iter().map(|&c| rat::int(c)).collect())
    }

    /// Build from a row-per-power-of-x grid; all rows must have equal length.
    pub fn from_grid(grid: Vec<Vec<Rat>>) -> Result<Self> {
        let rows = grid.len();
        let cols = grid.first().map_or(0, Vec::len);
        if rows == 0 || cols == 0 || grid.iter().any(|r| r.len() != cols) {
            return Err(Error::InvalidArgument(
                "coefficient grid must be a nonempty rectangle".into(),
            ));
        }
        Self::from_coeffs(rows - 1, cols - 1, grid.into_iter().flatten().collect())
    }

    /// `a + b x + c y + d x y`, the shape of every Sylvester entry.
    pub fn bilinear(a: Rat, b: Rat, c: Rat, d: Rat) -> Self {
        BiPoly {
            m: 1,
            n: 1,
            coeffs: vec![a, c, b, d],
        }
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize, j: usize) -> &Rat {
        &self.coeffs[i * (self.n + 1) + j]
    }

    pub fn grid(&self) -> Vec<Vec<Rat>> {
        self.coeffs
            .chunks(self.n + 1)
            .map(<[Rat]>::to_vec)
            .collect()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    /// Tight `(deg_x, deg_y)`; `None` for the zero polynomial.
    pub fn degrees(&self) -> Option<(usize, usize)> {
        let mut dx = None;
        let mut dy = None;
        for (idx, c) in self.coeffs.iter().enumerate() {
            if !c.is_zero() {
                let (i, j) = (idx / (self.n + 1), idx % (self.n + 1));
                dx = dx.max(Some(i));
                dy = dy.max(Some(j));
            }
        }
        dx.zip(dy)
    }

    pub fn eval(&self, x0: &Rat, y0: &Rat) -> Rat {
        // Horner in x over Horner-in-y rows
        self.coeffs
            .chunks(self.n + 1)
            .rev()
            .fold(Rat::zero(), |acc, row| {
                let r = row.iter().rev().fold(Rat::zero(), |a, c| a * y0 + c);
                acc * x0 + r
            })
    }

    pub fn scale(&self, s: &Rat) -> Self {
        BiPoly {
            m: self.m,
            n: self.n,
            coeffs: self.coeffs.iter().map(|c| c * s).collect(),
        }
    }

    /// Scale to primitive integer coefficients with the first nonzero
    /// coefficient (in basis order) positive, and trim the grid to the tight
    /// degrees.
    pub fn canonicalize(&self) -> Result<BiPoly> {
        let (dx, dy) = self.degrees().ok_or(Error::ZeroPolynomial)?;
        let lcm = Rat::from_integer(rat::denom_lcm(&self.coeffs));
        let cleared: Vec<Rat> = self.coeffs.iter().map(|c| c * &lcm).collect();
        let content = rat::numer_gcd(&cleared);
        let first = self.coeffs.iter().find(|c| !c.is_zero()).expect("nonzero");
        let sign = if first.is_negative() {
            -BigInt::one()
        } else {
            BigInt::one()
        };
        let lambda = lcm * Rat::new(sign, content);
        let mut coeffs = Vec::with_capacity((dx + 1) * (dy + 1));
        for i in 0..=dx {
            for j in 0..=dy {
                coeffs.push(self.coeff(i, j) * &lambda);
            }
        }
        Ok(BiPoly {
            m: dx,
            n: dy,
            coeffs,
        })
    }

    /// Human form in basis order, e.g. `2 - 3*y - x + 2*x*y`.
    pub fn render(&self) -> String {
        let terms = self
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(idx, c)| {
                let (i, j) = (idx / (self.n + 1), idx % (self.n + 1));
                let mut parts = Vec::new();
                match i {
                    0 => {}
                    1 => parts.push("x".to_string()),
                    _ => parts.push(format!("x^{i}")),
                }
                match j {
                    0 => {}
                    1 => parts.push("y".to_string()),
                    _ => parts.push(format!("y^{j}")),
                }
                (c.clone(), parts.join("*"))
            });
        render_terms(terms)
    }
}

impl fmt::Display for BiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}
