use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use super::counter::OpCounter;
use super::matrix::MatQ;
use crate::error::{Error, Result};
use crate::polycore::rat::{self, Rat};

/// Scale each row to integers by the lcm of its denominators. Returns the
/// integer rows and the product of the scale factors.
pub(super) fn integerize_rows(m: &MatQ, counter: &mut OpCounter) -> (Vec<Vec<BigInt>>, BigInt) {
    let mut scale = BigInt::one();
    let rows = (0..m.rows())
        .map(|i| {
            let row = m.row(i);
            let l = rat::denom_lcm(row);
            let out: Vec<BigInt> = row
                .iter()
                .map(|c| {
                    if l.is_one() {
                        c.numer().clone()
                    } else {
                        counter.muls += 1;
                        c.numer() * (&l / c.denom())
                    }
                })
                .collect();
            for v in &out {
                counter.observe_int(v);
            }
            if !l.is_one() {
                counter.muls += 1;
                scale *= l;
            }
            out
        })
        .collect();
    (rows, scale)
}

/// One Bareiss update: `(pivot * a - left * top) / prev`, checked for exactness.
pub(super) fn bareiss_step(
    pivot: &BigInt,
    a: &BigInt,
    left: &BigInt,
    top: &BigInt,
    prev: &BigInt,
    counter: &mut OpCounter,
) -> Result<BigInt> {
    counter.muls += 2;
    counter.adds += 1;
    let num = pivot * a - left * top;
    let out = if prev.is_one() {
        num
    } else {
        counter.divs += 1;
        let (q, r) = num.div_rem(prev);
        if !r.is_zero() {
            return Err(Error::InexactDivision);
        }
        q
    };
    counter.observe_int(&out);
    Ok(out)
}

/// Exact determinant by fraction-free (Bareiss) elimination.
///
/// Rows are first cleared to integers; every intermediate entry is then a
/// minor of the integer matrix, so each division is exact and is checked.
pub fn det_bareiss(m: &MatQ, counter: &mut OpCounter) -> Result<Rat> {
    if !m.is_square() {
        return Err(Error::InvalidArgument(format!(
            "determinant of a {}x{} matrix",
            m.rows(),
            m.cols()
        )));
    }
    counter.dets += 1;
    let n = m.rows();
    if n == 0 {
        return Ok(Rat::one());
    }
    let (mut a, scale) = integerize_rows(m, counter);
    let mut prev = BigInt::one();
    let mut negate = false;
    for k in 0..n - 1 {
        let Some(p) = (k..n).find(|&r| !a[r][k].is_zero()) else {
            return Ok(Rat::zero());
        };
        if p != k {
            a.swap(p, k);
            negate = !negate;
        }
        let (top, rest) = a.split_at_mut(k + 1);
        let pivot_row = &top[k];
        for row in rest.iter_mut() {
            for j in k + 1..n {
                row[j] = bareiss_step(
                    &pivot_row[k],
                    &row[j],
                    &row[k],
                    &pivot_row[j],
                    &prev,
                    counter,
                )?;
            }
            row[k] = BigInt::zero();
        }
        prev = a[k][k].clone();
    }
    let mut det = a[n - 1][n - 1].clone();
    if negate {
        det = -det;
    }
    if scale.is_one() {
        Ok(Rat::from_integer(det))
    } else {
        counter.divs += 1;
        let r = Rat::new(det, scale);
        counter.observe(&r);
        Ok(r)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polycore::rat::{frac, int};
    use proptest::prelude::*;

    fn cofactor(m: &MatQ) -> Rat {
        let rows: Vec<Vec<Rat>> = (0..m.rows()).map(|i| m.row(i).to_vec()).collect();
        implicit_testkit::cofactor_det(&rows)
    }

    #[test]
    fn reference_determinants() {
        let mut c = OpCounter::new();
        let m = MatQ::from_ints(&[&[1, 1], &[1, 3]]).unwrap();
        assert_eq!(det_bareiss(&m, &mut c).unwrap(), int(2));
        let m = MatQ::from_ints(&[&[-1, -3], &[-2, -9]]).unwrap();
        assert_eq!(det_bareiss(&m, &mut c).unwrap(), int(3));
        for n in 0..6 {
            assert_eq!(det_bareiss(&MatQ::identity(n), &mut c).unwrap(), int(1));
        }
        assert_eq!(c.dets, 8);
    }

    #[test]
    fn non_square_is_rejected() {
        let m = MatQ::zeros(2, 3);
        assert!(matches!(
            det_bareiss(&m, &mut OpCounter::new()),
            Err(Error::InvalidArgument(_))
        ));
    }

    #[test]
    fn pivoting_and_singular() {
        let mut c = OpCounter::new();
        let m = MatQ::from_ints(&[&[0, 1], &[1, 0]]).unwrap();
        assert_eq!(det_bareiss(&m, &mut c).unwrap(), int(-1));
        let m = MatQ::from_ints(&[&[1, 2, 3], &[2, 4, 6], &[1, 0, 1]]).unwrap();
        assert_eq!(det_bareiss(&m, &mut c).unwrap(), int(0));
        let m = MatQ::from_rows(vec![
            vec![frac(1, 2), frac(1, 3)],
            vec![frac(1, 4), frac(1, 5)],
        ])
        .unwrap();
        assert_eq!(det_bareiss(&m, &mut c).unwrap(), frac(1, 10) - frac(1, 12));
    }

    fn arb_matrix() -> impl Strategy<Value = MatQ> {
        (1usize..6).prop_flat_map(|n| {
            proptest::collection::vec((-9i64..10, 1i64..4), n * n).prop_map(move |v| {
                let mut it = v.into_iter();
                MatQ::from_fn(n, n, |_, _| {
                    let (a, b) = it.next().unwrap();
                    frac(a, b)
                })
            })
        })
    }

    proptest! {
        #[test]
        fn agrees_with_cofactor_expansion(m in arb_matrix()) {
            prop_assert_eq!(det_bareiss(&m, &mut OpCounter::new()).unwrap(), cofactor(&m));
        }

        #[test]
        fn triangular_is_diagonal_product(m in arb_matrix()) {
            let n = m.rows();
            let upper = MatQ::from_fn(n, n, |i, j| if j >= i { m[(i, j)].clone() } else { Rat::zero() });
            let diag = (0..n).fold(Rat::one(), |acc, i| acc * &m[(i, i)]);
            prop_assert_eq!(det_bareiss(&upper, &mut OpCounter::new()).unwrap(), diag.clone());
            prop_assert_eq!(det_bareiss(&upper.transpose(), &mut OpCounter::new()).unwrap(), diag);
        }
    }
}
