use num_traits::Zero;

use super::bipoly::BiPoly;
use super::rat::Rat;
use super::unipoly::UniPoly;
use crate::error::{Error, Result};

/// A rational plane curve `x = u1/v1`, `y = u2/v2` with both fractions in
/// lowest terms.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RatParam {
    u1: UniPoly,
    v1: UniPoly,
    u2: UniPoly,
    v2: UniPoly,
    reduced: bool,
}

impl RatParam {
    /// Fractions sharing a factor are divided through by their monic gcd;
    /// [`RatParam::was_reduced`] then reports `true`.
    pub fn new(u1: UniPoly, v1: UniPoly, u2: UniPoly, v2: UniPoly) -> Result<Self> {
        if v1.is_zero() || v2.is_zero() {
            return Err(Error::InvalidArgument("zero denominator polynomial".into()));
        }
        let (u1, v1, r1) = reduce(u1, v1)?;
        let (u2, v2, r2) = reduce(u2, v2)?;
        Ok(RatParam {
            u1,
            v1,
            u2,
            v2,
            reduced: r1 || r2,
        })
    }

    pub fn from_ints(u1: &[i64], v1: &[i64], u2: &[i64], v2: &[i64]) -> Result<Self> {
        Self::new(
            UniPoly::from_ints(u1),
            UniPoly::from_ints(v1),
            UniPoly::from_ints(u2),
            UniPoly::from_ints(v2),
        )
    }

    pub fn u1(&self) -> &UniPoly {
        &self.u1
    }
    pub fn v1(&self) -> &UniPoly {
        &self.v1
    }
    pub fn u2(&self) -> &UniPoly {
        &self.u2
    }
    pub fn v2(&self) -> &UniPoly {
        &self.v2
    }

    pub fn was_reduced(&self) -> bool {
        self.reduced
    }

    /// `(x(t0), y(t0))`, or `None` at a pole of either component.
    pub fn point_at(&self, t0: &Rat) -> Option<(Rat, Rat)> {
        let d1 = self.v1.eval(t0);
        let d2 = self.v2.eval(t0);
        if d1.is_zero() || d2.is_zero() {
            return None;
        }
        Some((self.u1.eval(t0) / d1, self.u2.eval(t0) / d2))
    }
}

fn reduce(u: UniPoly, v: UniPoly) -> Result<(UniPoly, UniPoly, bool)> {
    let g = u.gcd(&v)?;
    if g.degree() == Some(0) {
        return Ok((u, v, false));
    }
    let (u, _) = u.div_rem(&g)?;
    let (v, _) = v.div_rem(&g)?;
    Ok((u, v, true))
}

/// Whether `F(u1/v1, u2/v2)` vanishes identically in `t`.
///
/// The test is carried out on the cleared form
/// `sum c_ij u1^i v1^(m-i) u2^j v2^(n-j)`, where `(m, n)` is the grid shape of
/// `f`; this polynomial is zero iff the rational function is.
pub fn substitute_check(f: &BiPoly, p: &RatParam) -> Result<bool> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let (m, n) = (f.m(), f.n());
    let powers = |a: &UniPoly, k: usize| {
        let mut out = Vec::with_capacity(k + 1);
        out.push(UniPoly::one());
        for e in 1..=k {
            out.push(&out[e - 1] * a);
        }
        out
    };
    let (pu1, pv1) = (powers(&p.u1, m), powers(&p.v1, m));
    let (pu2, pv2) = (powers(&p.u2, n), powers(&p.v2, n));

    let mut total = UniPoly::zero();
    for i in 0..=m {
        let xpart = &pu1[i] * &pv1[m - i];
        let mut row = UniPoly::zero();
        for j in 0..=n {
            let c = f.coeff(i, j);
            if !c.is_zero() {
                row = &row + &(&pu2[j] * &pv2[n - j]).scale(c);
            }
        }
        total = &total + &(&xpart * &row);
    }
    Ok(total.is_zero())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polycore::rat::{frac, int};

    fn hyperbola() -> RatParam {
        RatParam::from_ints(&[1, 1], &[2, 1], &[3, 1], &[4, 1]).unwrap()
    }

    fn cubic() -> RatParam {
        RatParam::from_ints(&[1, 2, 2], &[5, 0, 0, 1], &[-1, 1, -3, 1], &[-3, 0, 1]).unwrap()
    }

    fn cubic_f() -> BiPoly {
        #[rustfmt::skip]
        let c = [
            -53, 42, -74, 0,
            172, 707, 121, 37,
            -652, -1156, -490, -34,
            626, 396, 432, -2,
        ];
        BiPoly::from_ints(3, 3, &c).unwrap()
    }

    #[test]
    fn substitute_check_examples() {
        let f = BiPoly::from_ints(1, 1, &[2, -3, -1, 2]).unwrap();
        assert!(substitute_check(&f, &hyperbola()).unwrap());
        let x = BiPoly::from_ints(1, 0, &[0, 1]).unwrap();
        assert!(!substitute_check(&x, &hyperbola()).unwrap());
        assert!(substitute_check(&cubic_f(), &cubic()).unwrap());
    }

    #[test]
    fn substitute_check_is_scale_invariant() {
        let f = cubic_f();
        for s in [frac(-1, 3), int(7), frac(22, 5)] {
            assert!(substitute_check(&f.scale(&s), &cubic()).unwrap());
        }
        let mut wrong = f.coeffs().to_vec();
        wrong[0] += int(1);
        let g = BiPoly::from_coeffs(3, 3, wrong).unwrap();
        assert!(!substitute_check(&g.scale(&frac(5, 2)), &cubic()).unwrap());
    }

    #[test]
    fn substitute_check_rejects_zero() {
        assert_eq!(
            substitute_check(&BiPoly::zero(1, 1), &hyperbola()),
            Err(Error::ZeroPolynomial)
        );
    }

    #[test]
    fn shared_factors_are_reduced_with_flag() {
        // x = (t^2 - 1)/(t - 1) = t + 1
        let p = RatParam::from_ints(&[-1, 0, 1], &[-1, 1], &[0, 1], &[1]).unwrap();
        assert!(p.was_reduced());
        assert_eq!(p.u1(), &UniPoly::from_ints(&[1, 1]));
        assert_eq!(p.v1(), &UniPoly::one());
        assert!(!hyperbola().was_reduced());
    }

    #[test]
    fn zero_denominator_is_rejected() {
        assert!(RatParam::from_ints(&[1], &[0], &[1], &[1]).is_err());
    }

    #[test]
    fn poles_have_no_point() {
        let p = RatParam::from_ints(&[1], &[1], &[1], &[0, 1]).unwrap();
        assert_eq!(p.point_at(&int(0)), None);
        assert_eq!(p.point_at(&int(2)), Some((int(1), frac(1, 2))));
    }
}
