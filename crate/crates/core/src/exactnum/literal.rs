//! Scalar literals: rationals `p/q` or `p`, and polynomials in `z` where `z`
//! stands for ζ_N of the surrounding conductor, e.g. `1/2*z^2 - z + 3`.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::Scalar;
use crate::error::{Error, Result};

struct Cursor<'a> {
    src: &'a str,
    bytes: &'a [u8],
    pos: usize,
}

impl<'a> Cursor<'a> {
    fn skip_ws(&mut self) {
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.bytes.get(self.pos).copied()
    }

    fn eat(&mut self, c: u8) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn fail(&self, reason: impl Into<String>) -> Error {
        Error::ScalarLiteral {
            literal: self.src.to_string(),
            reason: reason.into(),
        }
    }

    fn integer(&mut self) -> Result<BigInt> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.fail(format!("expected digits at offset {start}")));
        }
        Ok(self.src[start..self.pos].parse().expect("ascii digits"))
    }

    fn signed_exponent(&mut self) -> Result<i64> {
        let negative = self.eat(b'-');
        let e = self.integer()?;
        let e: i64 = e.try_into().map_err(|_| self.fail("exponent too large"))?;
        Ok(if negative { -e } else { e })
    }

    /// term := coefficient [ '*' monomial ] | monomial
    fn term(&mut self, conductor: u32) -> Result<Scalar> {
        let mut coeff = BigRational::one();
        let mut saw_coeff = false;
        if self.peek().is_some_and(|c| c.is_ascii_digit()) {
            let num = self.integer()?;
            let den = if self.eat(b'/') { self.integer()? } else { BigInt::one() };
            if den.is_zero() {
                return Err(self.fail("zero denominator"));
            }
            coeff = BigRational::new(num, den);
            saw_coeff = true;
            if !self.eat(b'*') {
                return Ok(Scalar::rational_in(conductor, coeff));
            }
        }
        if self.eat(b'z') {
            let exp = if self.eat(b'^') { self.signed_exponent()? } else { 1 };
            Ok(&Scalar::zeta_power(conductor, exp) * &Scalar::rational_in(conductor, coeff))
        } else if saw_coeff {
            Err(self.fail(format!("expected 'z' after '*' at offset {}", self.pos)))
        } else {
            Err(self.fail(format!("unexpected input at offset {}", self.pos)))
        }
    }
}

/// Parse a scalar literal in ℚ(ζ_N).
pub fn parse_scalar(literal: &str, conductor: u32) -> Result<Scalar> {
    let mut cur = Cursor {
        src: literal,
        bytes: literal.as_bytes(),
        pos: 0,
    };
    let mut acc = Scalar::zero(conductor);
    let mut first = true;
    loop {
        let negative = if cur.eat(b'-') {
            true
        } else if cur.eat(b'+') || first {
            false
        } else if cur.peek().is_none() {
            break;
        } else {
            return Err(cur.fail(format!("expected '+' or '-' at offset {}", cur.pos)));
        };
        if cur.peek().is_none() {
            return Err(cur.fail("dangling sign"));
        }
        let t = cur.term(conductor)?;
        acc = if negative { acc - t } else { acc + t };
        first = false;
        if cur.peek().is_none() {
            break;
        }
    }
    if first {
        return Err(cur.fail("empty literal"));
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_rationals() {
        assert_eq!(parse_scalar("5/6", 1).unwrap(), Scalar::from_ratio(5, 6));
        assert_eq!(parse_scalar("-3", 4).unwrap(), Scalar::from_int(-3));
        assert_eq!(parse_scalar(" 2/4 ", 1).unwrap(), Scalar::from_ratio(1, 2));
    }

    #[test]
    fn parses_polynomials_in_zeta() {
        let x = parse_scalar("1/2*z^2 - z + 3", 8).unwrap();
        let z = Scalar::zeta_power(8, 1);
        let expected = Scalar::from_ratio(1, 2) * z.pow(2) - &z + Scalar::from_int(3);
        assert_eq!(x, expected);
        assert_eq!(parse_scalar("z^4", 4).unwrap(), Scalar::from_int(1));
        assert_eq!(parse_scalar("z^-1", 4).unwrap(), parse_scalar("-z", 4).unwrap());
        assert_eq!(parse_scalar("z + z^2", 3).unwrap(), Scalar::from_int(-1));
    }

    #[test]
    fn rejects_garbage() {
        assert!(parse_scalar("", 1).is_err());
        assert!(parse_scalar("1/0", 1).is_err());
        assert!(parse_scalar("2*", 1).is_err());
        assert!(parse_scalar("x", 1).is_err());
        assert!(parse_scalar("1 2", 1).is_err());
        assert!(parse_scalar("1 -", 1).is_err());
    }

    #[test]
    fn canonical_literal_round_trips() {
        for src in ["0", "1", "-z", "1/2*z^2 - z + 3", "-7/3*z^3 + z"] {
            let x = parse_scalar(src, 8).unwrap();
            assert_eq!(x.to_literal(), src);
        }
    }
}
