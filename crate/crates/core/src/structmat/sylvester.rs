use num_traits::Zero;

use super::matrix::MatQ;
use crate::error::{Error, Result};
use crate::polycore::{BiPoly, Rat, RatParam, UniPoly};

/// Square matrix of polynomials of degree at most one in each of `x` and `y`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolyMat {
    order: usize,
    entries: Vec<BiPoly>,
}

impl PolyMat {
    pub fn order(&self) -> usize {
        self.order
    }

    pub fn entry(&self, i: usize, j: usize) -> &BiPoly {
        &self.entries[i * self.order + j]
    }

    pub fn rows(&self) -> impl Iterator<Item = &[BiPoly]> {
        self.entries.chunks(self.order)
    }
}

/// Descending `t`-coefficients of `u - var * v`, each as a bilinear polynomial.
fn descending_coeffs(u: &UniPoly, v: &UniPoly, in_x: bool) -> Vec<BiPoly> {
    let d = u.degree_or_zero().max(v.degree_or_zero());
    (0..=d)
        .rev()
        .map(|k| {
            let c = u.coeff(k);
            let w = -v.coeff(k);
            if in_x {
                BiPoly::bilinear(c, w, Rat::zero(), Rat::zero())
            } else {
                BiPoly::bilinear(c, Rat::zero(), w, Rat::zero())
            }
        })
        .collect()
}

/// Sylvester matrix of `p = u1 - x v1` and `q = u2 - y v2` with respect to `t`.
///
/// With `d1 = deg_t p` and `d2 = deg_t q`, the first `d2` rows carry the
/// coefficients of `p` from highest to lowest degree, each row shifted one
/// column to the right; the remaining `d1` rows do the same for `q`. Its
/// determinant is `Res_t(p, q)`.
pub fn build_parametric_sylvester(param: &RatParam) -> Result<PolyMat> {
    let p = descending_coeffs(param.u1(), param.v1(), true);
    let q = descending_coeffs(param.u2(), param.v2(), false);
    let (d1, d2) = (p.len() - 1, q.len() - 1);
    if d1 == 0 || d2 == 0 {
        return Err(Error::DegenerateParametrization(format!(
            "component {} is constant in t",
            if d1 == 0 { "x" } else { "y" }
        )));
    }
    let order = d1 + d2;
    let mut entries =
        vec![BiPoly::bilinear(Rat::zero(), Rat::zero(), Rat::zero(), Rat::zero()); order * order];
    for r in 0..d2 {
        for (k, c) in p.iter().enumerate() {
            entries[r * order + r + k] = c.clone();
        }
    }
    for r in 0..d1 {
        for (k, c) in q.iter().enumerate() {
            entries[(d2 + r) * order + r + k] = c.clone();
        }
    }
    Ok(PolyMat { order, entries })
}

pub fn eval_polymat(s: &PolyMat, x0: &Rat, y0: &Rat) -> MatQ {
    MatQ::from_fn(s.order, s.order, |i, j| s.entry(i, j).eval(x0, y0))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polycore::rat::int;

    /// `a + b x + c y`
    fn e(a: i64, b: i64, c: i64) -> BiPoly {
        BiPoly::bilinear(int(a), int(b), int(c), int(0))
    }

    fn check(s: &PolyMat, expected: &[&[BiPoly]]) {
        assert_eq!(s.order(), expected.len());
        for (i, row) in expected.iter().enumerate() {
            for (j, want) in row.iter().enumerate() {
                assert_eq!(s.entry(i, j), want, "entry ({i}, {j})");
            }
        }
    }

    #[test]
    fn hyperbola_matrix() {
        let p = RatParam::from_ints(&[1, 1], &[2, 1], &[3, 1], &[4, 1]).unwrap();
        let s = build_parametric_sylvester(&p).unwrap();
        check(
            &s,
            &[&[e(1, -1, 0), e(1, -2, 0)], &[e(1, 0, -1), e(3, 0, -4)]],
        );
    }

    #[test]
    fn cubic_matrix_matches_reference() {
        let p =
            RatParam::from_ints(&[1, 2, 2], &[5, 0, 0, 1], &[-1, 1, -3, 1], &[-3, 0, 1]).unwrap();
        let s = build_parametric_sylvester(&p).unwrap();
        let z = || e(0, 0, 0);
        let (a, b, c, d) = (e(0, -1, 0), e(2, 0, 0), e(2, 0, 0), e(1, -5, 0));
        let (f, g, h, k) = (e(1, 0, 0), e(-3, 0, -1), e(1, 0, 0), e(-1, 0, 3));
        check(
            &s,
            &[
                &[a.clone(), b.clone(), c.clone(), d.clone(), z(), z()],
                &[z(), a.clone(), b.clone(), c.clone(), d.clone(), z()],
                &[z(), z(), a, b, c, d],
                &[f.clone(), g.clone(), h.clone(), k.clone(), z(), z()],
                &[z(), f.clone(), g.clone(), h.clone(), k.clone(), z()],
                &[z(), z(), f, g, h, k],
            ],
        );
    }

    #[test]
    fn parabola_matrix() {
        let p = RatParam::from_ints(&[0, 1], &[1], &[0, 0, 1], &[1]).unwrap();
        let s = build_parametric_sylvester(&p).unwrap();
        check(
            &s,
            &[
                &[e(1, 0, 0), e(0, -1, 0), e(0, 0, 0)],
                &[e(0, 0, 0), e(1, 0, 0), e(0, -1, 0)],
                &[e(1, 0, 0), e(0, 0, 0), e(0, 0, -1)],
            ],
        );
    }

    #[test]
    fn constant_component_is_degenerate() {
        let p = RatParam::from_ints(&[3], &[2], &[0, 1], &[1]).unwrap();
        assert!(matches!(
            build_parametric_sylvester(&p),
            Err(Error::DegenerateParametrization(_))
        ));
    }

    #[test]
    fn evaluation_examples() {
        let p = RatParam::from_ints(&[1, 1], &[2, 1], &[3, 1], &[4, 1]).unwrap();
        let s = build_parametric_sylvester(&p).unwrap();
        type Case = ((i64, i64), [[i64; 2]; 2]);
        let cases: [Case; 3] = [
            ((1, 1), [[0, -1], [0, -1]]),
            ((2, 3), [[-1, -3], [-2, -9]]),
            ((0, 0), [[1, 1], [1, 3]]),
        ];
        for ((x0, y0), want) in cases {
            let m = eval_polymat(&s, &int(x0), &int(y0));
            let want = MatQ::from_ints(&[&want[0], &want[1]]).unwrap();
            assert_eq!(m, want);
        }
    }
}
