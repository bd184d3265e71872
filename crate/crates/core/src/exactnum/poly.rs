//! Dense univariate polynomials over the rationals, coefficients stored from
//! the constant term upwards.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

pub(crate) type RatPoly = Vec<BigRational>;

pub(crate) fn trim(p: &mut RatPoly) {
    while p.last().is_some_and(Zero::is_zero) {
        p.pop();
    }
}

fn degree(p: &RatPoly) -> Option<usize> {
    p.iter().rposition(|c| !c.is_zero())
}

/// Quotient and remainder of `a` by a nonzero `b`.
pub(crate) fn divrem(a: &RatPoly, b: &RatPoly) -> (RatPoly, RatPoly) {
    let db = degree(b).expect("division by the zero polynomial");
    let lead = b[db].clone();
    let mut rem = a.clone();
    trim(&mut rem);
    if rem.len() <= db {
        return (Vec::new(), rem);
    }
    let mut quot = vec![BigRational::zero(); rem.len() - db];
    while let Some(dr) = degree(&rem) {
        if dr < db {
            break;
        }
        let c = &rem[dr] / &lead;
        let shift = dr - db;
        for (i, bc) in b.iter().enumerate().take(db + 1) {
            if !bc.is_zero() {
                rem[shift + i] -= &c * bc;
            }
        }
        quot[shift] = c;
        trim(&mut rem);
    }
    trim(&mut quot);
    (quot, rem)
}

fn mul(a: &RatPoly, b: &RatPoly) -> RatPoly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![BigRational::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            if !y.is_zero() {
                out[i + j] += x * y;
            }
        }
    }
    trim(&mut out);
    out
}

fn sub(a: &RatPoly, b: &RatPoly) -> RatPoly {
    let n = a.len().max(b.len());
    let mut out: RatPoly = (0..n)
        .map(|i| {
            let x = a.get(i).cloned().unwrap_or_else(BigRational::zero);
            match b.get(i) {
                Some(y) => x - y,
                None => x,
            }
        })
        .collect();
    trim(&mut out);
    out
}

/// Inverse of `a` modulo `m`, or `None` when they share a factor.
pub(crate) fn inverse_mod(a: &RatPoly, m: &RatPoly) -> Option<RatPoly> {
    // extended Euclid, tracking only the coefficient of `a`
    let (mut r0, mut r1) = (m.clone(), a.clone());
    trim(&mut r0);
    trim(&mut r1);
    let (mut t0, mut t1): (RatPoly, RatPoly) = (Vec::new(), vec![BigRational::one()]);
    while degree(&r1).is_some() {
        let (q, r) = divrem(&r0, &r1);
        let t2 = sub(&t0, &mul(&q, &t1));
        r0 = std::mem::replace(&mut r1, r);
        t0 = std::mem::replace(&mut t1, t2);
    }
    // r0 is the gcd; it must be a nonzero constant
    match degree(&r0) {
        Some(0) => {
            let c = r0[0].clone();
            let (_, mut inv) = divrem(&t0, m);
            for x in inv.iter_mut() {
                *x /= &c;
            }
            trim(&mut inv);
            Some(inv)
        }
        _ => None,
    }
}

fn int_poly_divexact(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    // b is monic
    let db = b.len() - 1;
    let mut rem = a.to_vec();
    let mut quot = vec![BigInt::zero(); a.len() - db];
    for shift in (0..quot.len()).rev() {
        let c = rem[shift + db].clone();
        if c.is_zero() {
            continue;
        }
        for (i, bc) in b.iter().enumerate() {
            rem[shift + i] -= &c * bc;
        }
        quot[shift] = c;
    }
    debug_assert!(rem.iter().all(Zero::is_zero));
    quot
}

/// The `n`-th cyclotomic polynomial with integer coefficients.
pub(crate) fn cyclotomic_polynomial(n: u32) -> Vec<BigInt> {
    assert!(n >= 1);
    let mut p = vec![BigInt::zero(); n as usize + 1];
    p[0] = -BigInt::one();
    p[n as usize] = BigInt::one();
    for d in (1..n).filter(|d| n.is_multiple_of(*d)) {
        p = int_poly_divexact(&p, &cyclotomic_polynomial(d));
    }
    p
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn small_cyclotomic_polynomials() {
        assert_eq!(cyclotomic_polynomial(1), ints(&[-1, 1]));
        assert_eq!(cyclotomic_polynomial(2), ints(&[1, 1]));
        assert_eq!(cyclotomic_polynomial(3), ints(&[1, 1, 1]));
        assert_eq!(cyclotomic_polynomial(4), ints(&[1, 0, 1]));
        assert_eq!(cyclotomic_polynomial(6), ints(&[1, -1, 1]));
        assert_eq!(cyclotomic_polynomial(8), ints(&[1, 0, 0, 0, 1]));
        assert_eq!(cyclotomic_polynomial(12), ints(&[1, 0, -1, 0, 1]));
    }

    #[test]
    fn inverse_modulo_quadratic() {
        let q = |n: i64| BigRational::from_integer(n.into());
        // (x + 1)^{-1} mod x^2 + 1 = (1 - x)/2
        let inv = inverse_mod(&vec![q(1), q(1)], &vec![q(1), q(0), q(1)]).unwrap();
        let half = BigRational::new(1.into(), 2.into());
        assert_eq!(inv, vec![half.clone(), -half]);
        assert!(inverse_mod(&vec![q(1), q(1)], &vec![q(1), q(2), q(1)]).is_none());
    }
}
