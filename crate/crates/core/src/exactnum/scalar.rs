use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::poly::{cyclotomic_polynomial, divrem, inverse_mod, trim, RatPoly};
use crate::error::{Error, Result};

/// The field ℚ(ζ_N) presented as ℚ[x]/Φ_N(x).
#[derive(Debug)]
pub(crate) struct Field {
    conductor: u32,
    degree: usize,
    modulus: RatPoly,
    /// `x^k mod Φ_N` for `degree <= k < 2 * degree - 1`, indexed by `k - degree`.
    reduction: Vec<RatPoly>,
}

impl Field {
    fn new(conductor: u32) -> Self {
        let modulus: RatPoly = cyclotomic_polynomial(conductor)
            .into_iter()
            .map(BigRational::from_integer)
            .collect();
        let degree = modulus.len() - 1;
        let reduction = (degree..(2 * degree).saturating_sub(1).max(degree))
            .map(|k| {
                let mut mono = vec![BigRational::zero(); k + 1];
                mono[k] = BigRational::one();
                let (_, mut r) = divrem(&mono, &modulus);
                r.resize(degree, BigRational::zero());
                r
            })
            .collect();
        Field {
            conductor,
            degree,
            modulus,
            reduction,
        }
    }

    pub(crate) fn get(conductor: u32) -> Arc<Field> {
        static CACHE: OnceLock<Mutex<HashMap<u32, Arc<Field>>>> = OnceLock::new();
        let cache = CACHE.get_or_init(Default::default);
        let mut guard = cache.lock().expect("field cache poisoned");
        guard
            .entry(conductor)
            .or_insert_with(|| Arc::new(Field::new(conductor)))
            .clone()
    }

    /// Reduce an arbitrary-length coefficient vector into canonical form.
    fn reduce(&self, mut p: RatPoly) -> Vec<BigRational> {
        if p.len() <= self.degree {
            p.resize(self.degree, BigRational::zero());
            return p;
        }
        if p.len() < 2 * self.degree {
            let high = p.split_off(self.degree);
            for (k, c) in high.into_iter().enumerate() {
                if c.is_zero() {
                    continue;
                }
                for (i, r) in self.reduction[k].iter().enumerate() {
                    if !r.is_zero() {
                        p[i] += &c * r;
                    }
                }
            }
            return p;
        }
        trim(&mut p);
        let (_, mut r) = divrem(&p, &self.modulus);
        r.resize(self.degree, BigRational::zero());
        r
    }
}

/// An element of the cyclotomic field ℚ(ζ_N), kept reduced modulo Φ_N.
///
/// Scalars of different conductors can be combined when one conductor divides
/// the other (or when one operand is rational); the result lives in the larger
/// field. The `std::ops` operators panic on incompatible conductors or on
/// division by zero; the `checked_*` methods return errors instead.
#[derive(Clone)]
pub struct Scalar {
    field: Arc<Field>,
    coeffs: Vec<BigRational>,
}

impl Scalar {
    fn from_parts(field: Arc<Field>, coeffs: Vec<BigRational>) -> Self {
        debug_assert_eq!(coeffs.len(), field.degree);
        Scalar { field, coeffs }
    }

    pub fn zero(conductor: u32) -> Self {
        let field = Field::get(conductor);
        let coeffs = vec![BigRational::zero(); field.degree];
        Scalar::from_parts(field, coeffs)
    }

    pub fn one(conductor: u32) -> Self {
        Scalar::rational_in(conductor, BigRational::one())
    }

    /// A rational number viewed in ℚ(ζ_N).
    pub fn rational_in(conductor: u32, q: BigRational) -> Self {
        let field = Field::get(conductor);
        let mut coeffs = vec![BigRational::zero(); field.degree];
        coeffs[0] = q;
        Scalar::from_parts(field, coeffs)
    }

    /// A rational number in ℚ (conductor 1).
    pub fn rational(q: BigRational) -> Self {
        Scalar::rational_in(1, q)
    }

    pub fn from_int(n: i64) -> Self {
        Scalar::rational(BigRational::from_integer(BigInt::from(n)))
    }

    pub fn from_ratio(num: i64, den: i64) -> Self {
        Scalar::rational(BigRational::new(num.into(), den.into()))
    }

    /// `ζ_N^(k mod N)` in canonical form.
    pub fn zeta_power(conductor: u32, k: i64) -> Self {
        assert!(conductor >= 1, "conductor must be positive");
        let field = Field::get(conductor);
        let e = k.rem_euclid(i64::from(conductor)) as usize;
        let mut p = vec![BigRational::zero(); e + 1];
        p[e] = BigRational::one();
        let coeffs = field.reduce(p);
        Scalar::from_parts(field, coeffs)
    }

    /// Build from coefficients of a polynomial in ζ_N (any length).
    pub fn from_poly(conductor: u32, poly: Vec<BigRational>) -> Self {
        let field = Field::get(conductor);
        let coeffs = field.reduce(poly);
        Scalar::from_parts(field, coeffs)
    }

    pub fn conductor(&self) -> u32 {
        self.field.conductor
    }

    /// Canonical coefficients with respect to `1, ζ, …, ζ^(d-1)`, `d = deg Φ_N`.
    pub fn coefficients(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    pub fn is_one(&self) -> bool {
        self.coeffs[0].is_one() && self.coeffs[1..].iter().all(Zero::is_zero)
    }

    pub fn is_rational(&self) -> bool {
        self.coeffs[1..].iter().all(Zero::is_zero)
    }

    pub fn to_rational(&self) -> Option<BigRational> {
        self.is_rational().then(|| self.coeffs[0].clone())
    }

    /// Embed into ℚ(ζ_M) for a multiple `M` of the current conductor.
    pub fn embed(&self, conductor: u32) -> Result<Scalar> {
        let here = self.conductor();
        if conductor == here {
            return Ok(self.clone());
        }
        if self.is_rational() {
            return Ok(Scalar::rational_in(conductor, self.coeffs[0].clone()));
        }
        if !conductor.is_multiple_of(here) {
            return Err(Error::ConductorMismatch(here, conductor));
        }
        let step = (conductor / here) as usize;
        let mut p = vec![BigRational::zero(); (self.coeffs.len() - 1) * step + 1];
        for (i, c) in self.coeffs.iter().enumerate() {
            p[i * step] = c.clone();
        }
        Ok(Scalar::from_poly(conductor, p))
    }

    fn common_conductor(&self, other: &Scalar) -> Result<u32> {
        let (a, b) = (self.conductor(), other.conductor());
        if a == b || other.is_rational() || a.is_multiple_of(b) {
            Ok(a)
        } else if self.is_rational() || b.is_multiple_of(a) {
            Ok(b)
        } else {
            Err(Error::ConductorMismatch(a, b))
        }
    }

    fn aligned<'a>(
        &'a self,
        other: &'a Scalar,
    ) -> Result<(std::borrow::Cow<'a, Scalar>, std::borrow::Cow<'a, Scalar>)> {
        use std::borrow::Cow;
        let n = self.common_conductor(other)?;
        let a = if self.conductor() == n {
            Cow::Borrowed(self)
        } else {
            Cow::Owned(self.embed(n)?)
        };
        let b = if other.conductor() == n {
            Cow::Borrowed(other)
        } else {
            Cow::Owned(other.embed(n)?)
        };
        Ok((a, b))
    }

    pub fn checked_add(&self, other: &Scalar) -> Result<Scalar> {
        let (a, b) = self.aligned(other)?;
        let coeffs = a.coeffs.iter().zip(&b.coeffs).map(|(x, y)| x + y).collect();
        Ok(Scalar::from_parts(a.field.clone(), coeffs))
    }

    pub fn checked_sub(&self, other: &Scalar) -> Result<Scalar> {
        let (a, b) = self.aligned(other)?;
        let coeffs = a.coeffs.iter().zip(&b.coeffs).map(|(x, y)| x - y).collect();
        Ok(Scalar::from_parts(a.field.clone(), coeffs))
    }

    pub fn checked_mul(&self, other: &Scalar) -> Result<Scalar> {
        let (a, b) = self.aligned(other)?;
        let field = a.field.clone();
        if field.degree == 1 {
            return Ok(Scalar::from_parts(field, vec![&a.coeffs[0] * &b.coeffs[0]]));
        }
        if a.is_rational() || b.is_rational() {
            let (q, v) = if a.is_rational() { (&a.coeffs[0], &b) } else { (&b.coeffs[0], &a) };
            let coeffs = v.coeffs.iter().map(|c| c * q).collect();
            return Ok(Scalar::from_parts(field, coeffs));
        }
        let d = field.degree;
        let mut prod = vec![BigRational::zero(); 2 * d - 1];
        for (i, x) in a.coeffs.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.coeffs.iter().enumerate() {
                if !y.is_zero() {
                    prod[i + j] += x * y;
                }
            }
        }
        let coeffs = field.reduce(prod);
        Ok(Scalar::from_parts(field, coeffs))
    }

    pub fn inverse(&self) -> Result<Scalar> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if self.is_rational() {
            let coeffs_inv = self.coeffs[0].recip();
            return Ok(Scalar::rational_in(self.conductor(), coeffs_inv));
        }
        let mut p = self.coeffs.clone();
        trim(&mut p);
        let inv = inverse_mod(&p, &self.field.modulus)
            .ok_or_else(|| Error::InternalInconsistency("cyclotomic modulus is reducible".into()))?;
        let coeffs = self.field.reduce(inv);
        Ok(Scalar::from_parts(self.field.clone(), coeffs))
    }

    pub fn checked_div(&self, other: &Scalar) -> Result<Scalar> {
        self.checked_mul(&other.inverse()?)
    }

    pub fn pow(&self, mut e: u64) -> Scalar {
        let mut base = self.clone();
        let mut acc = Scalar::one(self.conductor());
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        acc
    }

    /// Canonical literal, e.g. `1/2*z^2 - z + 3`.
    pub fn to_literal(&self) -> String {
        let mut out = String::new();
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let negative = c.is_negative();
            let mag = c.abs();
            if out.is_empty() {
                if negative {
                    out.push('-');
                }
            } else {
                out.push_str(if negative { " - " } else { " + " });
            }
            let monomial = match k {
                0 => String::new(),
                1 => "z".to_string(),
                _ => format!("z^{k}"),
            };
            if monomial.is_empty() {
                out.push_str(&mag.to_string());
            } else if mag.is_one() {
                out.push_str(&monomial);
            } else {
                out.push_str(&format!("{mag}*{monomial}"));
            }
        }
        if out.is_empty() {
            out.push('0');
        }
        out
    }
}

impl PartialEq for Scalar {
    fn eq(&self, other: &Scalar) -> bool {
        match self.aligned(other) {
            Ok((a, b)) => a.coeffs == b.coeffs,
            Err(_) => false,
        }
    }
}

impl Eq for Scalar {}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_literal())
    }
}

impl fmt::Debug for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} (N={})", self.to_literal(), self.conductor())
    }
}

macro_rules! binop {
    ($trait:ident, $method:ident, $checked:ident) => {
        impl $trait<&Scalar> for &Scalar {
            type Output = Scalar;
            fn $method(self, rhs: &Scalar) -> Scalar {
                self.$checked(rhs).unwrap_or_else(|e| panic!("scalar arithmetic: {e}"))
            }
        }
        impl $trait<Scalar> for Scalar {
            type Output = Scalar;
            fn $method(self, rhs: Scalar) -> Scalar {
                (&self).$method(&rhs)
            }
        }
        impl $trait<&Scalar> for Scalar {
            type Output = Scalar;
            fn $method(self, rhs: &Scalar) -> Scalar {
                (&self).$method(rhs)
            }
        }
    };
}

binop!(Add, add, checked_add);
binop!(Sub, sub, checked_sub);
binop!(Mul, mul, checked_mul);
binop!(Div, div, checked_div);

impl AddAssign<&Scalar> for Scalar {
    fn add_assign(&mut self, rhs: &Scalar) {
        if self.conductor() == rhs.conductor() {
            for (x, y) in self.coeffs.iter_mut().zip(&rhs.coeffs) {
                if !y.is_zero() {
                    *x += y;
                }
            }
        } else {
            *self = &*self + rhs;
        }
    }
}

impl SubAssign<&Scalar> for Scalar {
    fn sub_assign(&mut self, rhs: &Scalar) {
        if self.conductor() == rhs.conductor() {
            for (x, y) in self.coeffs.iter_mut().zip(&rhs.coeffs) {
                if !y.is_zero() {
                    *x -= y;
                }
            }
        } else {
            *self = &*self - rhs;
        }
    }
}

impl MulAssign<&Scalar> for Scalar {
    fn mul_assign(&mut self, rhs: &Scalar) {
        *self = &*self * rhs;
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar::from_parts(self.field.clone(), self.coeffs.iter().map(|c| -c).collect())
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        -&self
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rational_sum() {
        let s = Scalar::from_ratio(1, 2) + Scalar::from_ratio(1, 3);
        assert_eq!(s, Scalar::from_ratio(5, 6));
    }

    #[test]
    fn zeta_four_squared_is_minus_one() {
        let z = Scalar::zeta_power(4, 1);
        assert_eq!(&z * &z, Scalar::from_int(-1));
    }

    #[test]
    fn zeta_three_minimal_relation() {
        let z = Scalar::zeta_power(3, 1);
        let s = &(&z * &z) + &z + Scalar::one(3);
        assert!(s.is_zero());
    }

    #[test]
    fn zeta_power_examples() {
        assert_eq!(Scalar::zeta_power(2, 1), Scalar::from_int(-1));
        assert_eq!(Scalar::zeta_power(4, 2), Scalar::from_int(-1));
        // x^3 mod x^2 - x + 1 = -1
        assert_eq!(Scalar::zeta_power(6, 3), Scalar::from_int(-1));
        assert_eq!(Scalar::zeta_power(6, 3).coefficients().len(), 2);
        assert_eq!(Scalar::zeta_power(5, -1), Scalar::zeta_power(5, 4));
    }

    #[test]
    fn division_by_zero_is_an_error() {
        let z = Scalar::zeta_power(4, 1);
        assert_eq!(z.checked_div(&Scalar::zero(4)), Err(Error::DivisionByZero));
    }

    #[test]
    fn incompatible_conductors_are_rejected() {
        let a = Scalar::zeta_power(3, 1);
        let b = Scalar::zeta_power(4, 1);
        assert_eq!(a.checked_add(&b), Err(Error::ConductorMismatch(3, 4)));
        assert_ne!(a, b);
        // rationals embed anywhere
        let half = Scalar::from_ratio(1, 2);
        assert_eq!((&a * &half).conductor(), 3);
    }

    #[test]
    fn embedding_respects_roots_of_unity() {
        let z4 = Scalar::zeta_power(4, 1);
        assert_eq!(z4.embed(8).unwrap(), Scalar::zeta_power(8, 2));
        assert_eq!(z4, Scalar::zeta_power(8, 2));
        assert_eq!(Scalar::zeta_power(2, 1).embed(6).unwrap(), Scalar::from_int(-1));
        assert!(Scalar::zeta_power(3, 1).embed(4).is_err());
    }

    #[test]
    fn inverse_of_cyclotomic_element() {
        let z = Scalar::zeta_power(8, 1);
        let x = &z + &Scalar::from_int(2);
        let y = x.inverse().unwrap();
        assert!((&x * &y).is_one());
    }

    #[test]
    fn literal_format() {
        let z = Scalar::zeta_power(6, 1);
        let x = Scalar::from_ratio(1, 2) * &z - Scalar::from_int(3);
        assert_eq!(x.to_literal(), "1/2*z - 3");
        assert_eq!((-&z).to_literal(), "-z");
        assert_eq!(Scalar::zero(6).to_literal(), "0");
    }
}
