//! Exact scalars over the rationals or a prime field.
//!
//! A `FieldSpec` acts as the arithmetic context: scalars are plain data and
//! every operation goes through the spec, so a single computation can never
//! mix fields. Rational arithmetic is arbitrary precision; prime-field
//! arithmetic reduces eagerly mod p.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};
use std::fmt;

use crate::error::Error;

/// Largest admissible prime modulus. Products of two residues must fit in u128
/// comfortably; staying below 2^31 keeps every intermediate in range.
pub const MAX_PRIME: u64 = 1 << 31;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum FieldSpec {
    #[serde(rename = "Q")]
    Rationals,
    Fp(u64),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Scalar {
    Rat(BigRational),
    Fp(u64),
}

fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    if p % 2 == 0 {
        return p == 2;
    }
    let mut d = 3u64;
    while d * d <= p {
        if p % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldSpec::Rationals => write!(f, "Q"),
            FieldSpec::Fp(p) => write!(f, "F{p}"),
        }
    }
}

impl FieldSpec {
    pub fn rationals() -> Self {
        FieldSpec::Rationals
    }

    pub fn prime(p: u64) -> Result<Self, Error> {
        if p >= MAX_PRIME || !is_prime(p) {
            return Err(Error::Validation(format!(
                "{p} is not an admissible prime modulus"
            )));
        }
        Ok(FieldSpec::Fp(p))
    }

    pub fn characteristic(&self) -> u64 {
        match self {
            FieldSpec::Rationals => 0,
            FieldSpec::Fp(p) => *p,
        }
    }

    pub fn zero(&self) -> Scalar {
        match self {
            FieldSpec::Rationals => Scalar::Rat(BigRational::zero()),
            FieldSpec::Fp(_) => Scalar::Fp(0),
        }
    }

    pub fn one(&self) -> Scalar {
        match self {
            FieldSpec::Rationals => Scalar::Rat(BigRational::one()),
            FieldSpec::Fp(_) => Scalar::Fp(1),
        }
    }

    pub fn from_i64(&self, n: i64) -> Scalar {
        match self {
            FieldSpec::Rationals => Scalar::Rat(BigRational::from(BigInt::from(n))),
            FieldSpec::Fp(p) => {
                let p = *p as i128;
                Scalar::Fp(((n as i128).rem_euclid(p)) as u64)
            }
        }
    }

    pub fn is_zero(&self, a: &Scalar) -> bool {
        match a {
            Scalar::Rat(r) => r.is_zero(),
            Scalar::Fp(v) => *v == 0,
        }
    }

    pub fn is_one(&self, a: &Scalar) -> bool {
        match a {
            Scalar::Rat(r) => r.is_one(),
            Scalar::Fp(v) => *v == 1,
        }
    }

    pub fn add(&self, a: &Scalar, b: &Scalar) -> Scalar {
        match (self, a, b) {
            (FieldSpec::Rationals, Scalar::Rat(x), Scalar::Rat(y)) => Scalar::Rat(x + y),
            (FieldSpec::Fp(p), Scalar::Fp(x), Scalar::Fp(y)) => Scalar::Fp((x + y) % p),
            _ => panic!("scalar/field mismatch"),
        }
    }

    pub fn sub(&self, a: &Scalar, b: &Scalar) -> Scalar {
        match (self, a, b) {
            (FieldSpec::Rationals, Scalar::Rat(x), Scalar::Rat(y)) => Scalar::Rat(x - y),
            (FieldSpec::Fp(p), Scalar::Fp(x), Scalar::Fp(y)) => Scalar::Fp((x + p - y) % p),
            _ => panic!("scalar/field mismatch"),
        }
    }

    pub fn mul(&self, a: &Scalar, b: &Scalar) -> Scalar {
        match (self, a, b) {
            (FieldSpec::Rationals, Scalar::Rat(x), Scalar::Rat(y)) => Scalar::Rat(x * y),
            (FieldSpec::Fp(p), Scalar::Fp(x), Scalar::Fp(y)) => {
                Scalar::Fp(((*x as u128 * *y as u128) % (*p as u128)) as u64)
            }
            _ => panic!("scalar/field mismatch"),
        }
    }

    pub fn neg(&self, a: &Scalar) -> Scalar {
        match (self, a) {
            (FieldSpec::Rationals, Scalar::Rat(x)) => Scalar::Rat(-x),
            (FieldSpec::Fp(p), Scalar::Fp(x)) => Scalar::Fp(if *x == 0 { 0 } else { p - x }),
            _ => panic!("scalar/field mismatch"),
        }
    }

    pub fn inv(&self, a: &Scalar) -> Scalar {
        match (self, a) {
            (FieldSpec::Rationals, Scalar::Rat(x)) => {
                assert!(!x.is_zero(), "inverse of zero");
                Scalar::Rat(x.recip())
            }
            (FieldSpec::Fp(p), Scalar::Fp(x)) => {
                assert!(*x != 0, "inverse of zero");
                // extended Euclid on (x, p)
                let (mut r0, mut r1) = (*x as i128, *p as i128);
                let (mut s0, mut s1) = (1i128, 0i128);
                while r1 != 0 {
                    let q = r0 / r1;
                    (r0, r1) = (r1, r0 - q * r1);
                    (s0, s1) = (s1, s0 - q * s1);
                }
                debug_assert_eq!(r0, 1);
                Scalar::Fp(s0.rem_euclid(*p as i128) as u64)
            }
            _ => panic!("scalar/field mismatch"),
        }
    }

    pub fn div(&self, a: &Scalar, b: &Scalar) -> Scalar {
        self.mul(a, &self.inv(b))
    }

    /// a + c*b, the inner-loop fused operation of row reduction.
    pub fn add_mul(&self, a: &Scalar, c: &Scalar, b: &Scalar) -> Scalar {
        if self.is_zero(c) || self.is_zero(b) {
            return a.clone();
        }
        self.add(a, &self.mul(c, b))
    }

    /// Parse "3", "-3" or "3/4"; prime fields also accept any integer string.
    pub fn parse(&self, s: &str) -> Result<Scalar, Error> {
        let s = s.trim();
        match self {
            FieldSpec::Rationals => {
                let rat = if let Some((n, d)) = s.split_once('/') {
                    let n: BigInt = n
                        .trim()
                        .parse()
                        .map_err(|_| Error::Parse(format!("bad rational {s:?}")))?;
                    let d: BigInt = d
                        .trim()
                        .parse()
                        .map_err(|_| Error::Parse(format!("bad rational {s:?}")))?;
                    if d.is_zero() {
                        return Err(Error::Parse(format!("zero denominator in {s:?}")));
                    }
                    BigRational::new(n, d)
                } else {
                    let n: BigInt = s
                        .parse()
                        .map_err(|_| Error::Parse(format!("bad rational {s:?}")))?;
                    BigRational::from(n)
                };
                Ok(Scalar::Rat(rat))
            }
            FieldSpec::Fp(_) => {
                let n: i64 = s
                    .parse()
                    .map_err(|_| Error::Parse(format!("bad residue {s:?}")))?;
                Ok(self.from_i64(n))
            }
        }
    }

    /// Canonical rendering: reduced fraction with positive denominator,
    /// integers without the "/1".
    pub fn render(&self, a: &Scalar) -> String {
        match a {
            Scalar::Rat(r) => {
                if r.denom().is_one() {
                    r.numer().to_string()
                } else if r.denom().is_negative() {
                    // BigRational::new normalizes, but guard anyway
                    format!("{}/{}", -r.numer(), -r.denom())
                } else {
                    format!("{}/{}", r.numer(), r.denom())
                }
            }
            Scalar::Fp(v) => v.to_string(),
        }
    }

    /// JSON value for a scalar: rationals as canonical strings, prime-field
    /// residues as integers.
    pub fn scalar_to_json(&self, a: &Scalar) -> serde_json::Value {
        match a {
            Scalar::Rat(_) => serde_json::Value::String(self.render(a)),
            Scalar::Fp(v) => serde_json::json!(v),
        }
    }

    /// Accepts the emitted forms plus integer literals over the rationals.
    pub fn scalar_from_json(&self, v: &serde_json::Value) -> Result<Scalar, Error> {
        match v {
            serde_json::Value::String(s) => self.parse(s),
            serde_json::Value::Number(n) => {
                let i = n
                    .as_i64()
                    .ok_or_else(|| Error::Parse(format!("non-integer scalar {n}")))?;
                Ok(self.from_i64(i))
            }
            other => Err(Error::Parse(format!("expected scalar, got {other}"))),
        }
    }

    /// Small random coordinate in [-2, 2], the seeding range for sampled maps.
    pub fn random_small(&self, rng: &mut impl rand::Rng) -> Scalar {
        self.from_i64(rng.gen_range(-2i64..=2))
    }
}
