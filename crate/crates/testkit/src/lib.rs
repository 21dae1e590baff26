//! Slow, obviously-correct reference computations used by the tests.
//!
//! Nothing here shares code with `implicit-core`: determinants are cofactor
//! expansions, linear solves use Cramer's rule, structured matrices are
//! formed explicitly.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use rand::Rng;

pub type Q = BigRational;
pub type Matrix = Vec<Vec<Q>>;

pub fn q(n: i64) -> Q {
    Q::from_integer(BigInt::from(n))
}

pub fn qf(n: i64, d: i64) -> Q {
    Q::new(BigInt::from(n), BigInt::from(d))
}

/// Laplace expansion along the first row.
pub fn cofactor_det(m: &[Vec<Q>]) -> Q {
    if m.is_empty() {
        return Q::one();
    }
    let mut acc = Q::zero();
    for (j, c) in m[0].iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let minor: Matrix = m[1..]
            .iter()
            .map(|r| {
                r.iter()
                    .enumerate()
                    .filter(|&(k, _)| k != j)
                    .map(|(_, v)| v.clone())
                    .collect()
            })
            .collect();
        let term = c * cofactor_det(&minor);
        if j % 2 == 0 {
            acc += term;
        } else {
            acc -= term;
        }
    }
    acc
}

/// Cramer's rule; `None` if singular.
pub fn cramer_solve(m: &[Vec<Q>], b: &[Q]) -> Option<Vec<Q>> {
    let d = cofactor_det(m);
    if d.is_zero() {
        return None;
    }
    Some(
        (0..m.len())
            .map(|col| {
                let replaced: Matrix = m
                    .iter()
                    .zip(b)
                    .map(|(row, bi)| {
                        let mut r = row.clone();
                        r[col] = bi.clone();
                        r
                    })
                    .collect();
                cofactor_det(&replaced) / &d
            })
            .collect(),
    )
}

fn pow(b: &Q, e: usize) -> Q {
    (0..e).fold(Q::one(), |acc, _| acc * b)
}

/// `V[i][k] = nodes[i]^k`
pub fn vandermonde(nodes: &[Q]) -> Matrix {
    nodes
        .iter()
        .map(|x| (0..nodes.len()).map(|k| pow(x, k)).collect())
        .collect()
}

pub fn transpose(m: &[Vec<Q>]) -> Matrix {
    if m.is_empty() {
        return Vec::new();
    }
    (0..m[0].len())
        .map(|j| m.iter().map(|r| r[j].clone()).collect())
        .collect()
}

/// Block matrix `(a[k][l] * b)`.
pub fn kron(a: &[Vec<Q>], b: &[Vec<Q>]) -> Matrix {
    let mut out = Vec::new();
    for arow in a {
        for brow in b {
            let mut row = Vec::new();
            for x in arow {
                for y in brow {
                    row.push(x * y);
                }
            }
            out.push(row);
        }
    }
    out
}

pub fn mat_vec(m: &[Vec<Q>], v: &[Q]) -> Vec<Q> {
    m.iter()
        .map(|r| r.iter().zip(v).fold(Q::zero(), |acc, (a, b)| acc + a * b))
        .collect()
}

/// Distinct random rationals with small numerators and denominators.
pub fn random_distinct_rats<R: Rng>(rng: &mut R, count: usize) -> Vec<Q> {
    let mut out: Vec<Q> = Vec::with_capacity(count);
    while out.len() < count {
        let v = qf(rng.gen_range(-30..=30), rng.gen_range(1..=7));
        if !out.contains(&v) {
            out.push(v);
        }
    }
    out
}

pub fn random_rats<R: Rng>(rng: &mut R, count: usize) -> Vec<Q> {
    (0..count)
        .map(|_| qf(rng.gen_range(-50..=50), rng.gen_range(1..=9)))
        .collect()
}

// --- univariate helpers over ascending coefficient vectors ---

fn trim(mut p: Vec<Q>) -> Vec<Q> {
    while p.last().is_some_and(Zero::is_zero) {
        p.pop();
    }
    p
}

fn poly_rem(a: &[Q], b: &[Q]) -> Vec<Q> {
    let b = trim(b.to_vec());
    let mut r = trim(a.to_vec());
    let lb = b.last().expect("nonzero divisor").clone();
    while r.len() >= b.len() {
        let shift = r.len() - b.len();
        let c = r.last().unwrap() / &lb;
        for (i, bi) in b.iter().enumerate() {
            r[shift + i] -= &c * bi;
        }
        r = trim(r);
    }
    r
}

/// Degree of the gcd of two polynomials (`None` if both are zero).
pub fn gcd_degree(a: &[Q], b: &[Q]) -> Option<usize> {
    let (mut a, mut b) = (trim(a.to_vec()), trim(b.to_vec()));
    while !b.is_empty() {
        let r = poly_rem(&a, &b);
        a = b;
        b = r;
    }
    a.len().checked_sub(1)
}

pub fn eval(p: &[Q], t: &Q) -> Q {
    p.iter().rev().fold(Q::zero(), |acc, c| acc * t + c)
}

fn scale_sub(a: &[Q], sa: &Q, b: &[Q], sb: &Q) -> Vec<Q> {
    let n = a.len().max(b.len());
    (0..n)
        .map(|k| {
            let x = a.get(k).cloned().unwrap_or_else(Q::zero) * sa;
            let y = b.get(k).cloned().unwrap_or_else(Q::zero) * sb;
            x - y
        })
        .collect()
}

/// Probabilistic properness test: for a generic parameter value `s`, the only
/// common root in `t` of `u1(t)v1(s) - u1(s)v1(t)` and `u2(t)v2(s) - u2(s)v2(t)`
/// is `t = s`. Two sample points are tried; both must agree.
pub fn is_proper(u1: &[Q], v1: &[Q], u2: &[Q], v2: &[Q]) -> bool {
    [qf(7919, 13), qf(-4421, 17)].iter().all(|s| {
        let (a1, b1) = (eval(u1, s), eval(v1, s));
        let (a2, b2) = (eval(u2, s), eval(v2, s));
        if b1.is_zero() || b2.is_zero() {
            return false;
        }
        let g1 = scale_sub(u1, &b1, v1, &a1);
        let g2 = scale_sub(u2, &b2, v2, &a2);
        gcd_degree(&g1, &g2) == Some(1)
    })
}

pub fn coprime(a: &[Q], b: &[Q]) -> bool {
    gcd_degree(a, b) == Some(0)
}

/// Coefficient vectors `(u1, v1, u2, v2)` of a random parametrization.
pub type ParamCoeffs = [Vec<Q>; 4];

fn random_poly<R: Rng>(rng: &mut R, degree: usize) -> Vec<Q> {
    let mut p: Vec<Q> = (0..=degree).map(|_| q(rng.gen_range(-9..=9))).collect();
    while p[degree].is_zero() {
        p[degree] = q(rng.gen_range(-9..=9));
    }
    p
}

/// A random proper parametrization whose components have the given degrees
/// `max(deg u1, deg v1) = dx` and `max(deg u2, deg v2) = dy`, coefficients in
/// `[-9, 9]`, each fraction in lowest terms. Draws until one qualifies.
pub fn random_parametrization<R: Rng>(rng: &mut R, dx: usize, dy: usize) -> ParamCoeffs {
    assert!(dx >= 1 && dy >= 1);
    loop {
        let component = |rng: &mut R, d: usize| {
            let lower = rng.gen_range(0..=d);
            let (a, b) = (random_poly(rng, d), random_poly(rng, lower));
            if rng.gen_bool(0.5) {
                (a, b)
            } else {
                (b, a)
            }
        };
        let (u1, v1) = component(rng, dx);
        let (u2, v2) = component(rng, dy);
        if coprime(&u1, &v1) && coprime(&u2, &v2) && is_proper(&u1, &v1, &u2, &v2) {
            return [u1, v1, u2, v2];
        }
    }
}

/// As [`random_parametrization`], with each degree drawn from `1..=max_degree`.
pub fn random_small_parametrization<R: Rng>(rng: &mut R, max_degree: usize) -> ParamCoeffs {
    let dx = rng.gen_range(1..=max_degree);
    let dy = rng.gen_range(1..=max_degree);
    random_parametrization(rng, dx, dy)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn oracles_on_small_cases() {
        let m = vec![vec![q(1), q(1)], vec![q(1), q(3)]];
        assert_eq!(cofactor_det(&m), q(2));
        assert_eq!(cramer_solve(&m, &[q(2), q(4)]).unwrap(), vec![q(1), q(1)]);
        let v = vandermonde(&[q(0), q(1)]);
        let k = kron(&v, &v);
        assert_eq!(
            mat_vec(&k, &[q(2), q(-3), q(-1), q(2)]),
            vec![q(2), q(-1), q(1), q(0)]
        );
    }

    #[test]
    fn generated_parametrizations_have_requested_degrees() {
        use rand::SeedableRng;
        let mut rng = rand::rngs::StdRng::seed_from_u64(7);
        for d in 1..5 {
            let [u1, v1, u2, v2] = random_parametrization(&mut rng, d, d + 1);
            assert_eq!(u1.len().max(v1.len()), d + 1);
            assert_eq!(u2.len().max(v2.len()), d + 2);
        }
    }

    #[test]
    fn properness() {
        // hyperbola is proper; (t^2, t^4) traces the parabola twice
        assert!(is_proper(
            &[q(1), q(1)],
            &[q(2), q(1)],
            &[q(3), q(1)],
            &[q(4), q(1)]
        ));
        assert!(!is_proper(
            &[q(0), q(0), q(1)],
            &[q(1)],
            &[q(0), q(0), q(0), q(0), q(1)],
            &[q(1)]
        ));
    }
}
