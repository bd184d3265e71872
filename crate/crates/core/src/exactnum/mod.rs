//! Exact arithmetic in cyclotomic fields ℚ(ζ_N) = ℚ[x]/Φ_N(x).

mod literal;
mod poly;
mod scalar;

pub use literal::parse_scalar;
pub use scalar::Scalar;

/// `ζ_N^(k mod N)`.
pub fn zeta_power(conductor: u32, k: i64) -> Scalar {
    Scalar::zeta_power(conductor, k)
}

/// Euler's totient, the degree of ℚ(ζ_N) over ℚ.
pub fn totient(n: u32) -> u32 {
    (1..=n).filter(|&k| num_integer::gcd(k, n) == 1).count() as u32
}

/// Smallest common conductor of two cyclotomic fields.
pub fn common_conductor(a: u32, b: u32) -> u32 {
    num_integer::lcm(a, b)
}
