//! Arithmetic in the prime field Z_p.
//!
//! [`Prime`] is a verified modulus and carries the raw `u32` operations used by
//! every hot loop in the crate. [`FieldElement`] is the checked value type for
//! the public API.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A prime modulus, verified by trial division at construction.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "u32", into = "u32")]
pub struct Prime(u32);

impl TryFrom<u32> for Prime {
    type Error = Error;
    fn try_from(p: u32) -> Result<Self> {
        Prime::new(p)
    }
}

impl From<Prime> for u32 {
    fn from(p: Prime) -> u32 {
        p.0
    }
}

fn is_prime(n: u32) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u32;
    while (d as u64) * (d as u64) <= n as u64 {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

impl Prime {
    pub fn new(p: u32) -> Result<Self> {
        // Products of two residues must fit in u64 with room to accumulate.
        if !is_prime(p) || p > (1 << 20) {
            return Err(Error::NotPrime(p));
        }
        Ok(Prime(p))
    }

    #[inline]
    pub fn get(self) -> u32 {
        self.0
    }

    #[inline]
    pub fn reduce(self, v: u64) -> u32 {
        (v % self.0 as u64) as u32
    }

    /// Reduces a signed integer into `[0, p)`.
    #[inline]
    pub fn reduce_signed(self, v: i64) -> u32 {
        v.rem_euclid(self.0 as i64) as u32
    }

    #[inline]
    pub fn add(self, a: u32, b: u32) -> u32 {
        let s = a + b;
        if s >= self.0 {
            s - self.0
        } else {
            s
        }
    }

    #[inline]
    pub fn sub(self, a: u32, b: u32) -> u32 {
        if a >= b {
            a - b
        } else {
            a + self.0 - b
        }
    }

    #[inline]
    pub fn neg(self, a: u32) -> u32 {
        if a == 0 {
            0
        } else {
            self.0 - a
        }
    }

    #[inline]
    pub fn mul(self, a: u32, b: u32) -> u32 {
        ((a as u64 * b as u64) % self.0 as u64) as u32
    }

    pub fn pow(self, mut base: u32, mut exp: u64) -> u32 {
        let mut acc = 1 % self.0;
        base %= self.0;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            exp >>= 1;
        }
        acc
    }

    /// Inverse via Fermat: a^(p-2).
    pub fn inv(self, a: u32) -> Result<u32> {
        if a % self.0 == 0 {
            return Err(Error::DivisionByZero);
        }
        Ok(self.pow(a, self.0 as u64 - 2))
    }
}

impl fmt::Display for Prime {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// An element of Z_p.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct FieldElement {
    value: u32,
    modulus: Prime,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FieldOp {
    Add,
    Sub,
    Mul,
    Div,
}

impl FieldElement {
    /// Builds `value mod p`, checking that `p` is prime.
    pub fn new(value: u64, p: u32) -> Result<Self> {
        let modulus = Prime::new(p)?;
        Ok(Self::from_prime(value, modulus))
    }

    pub fn from_prime(value: u64, modulus: Prime) -> Self {
        FieldElement {
            value: modulus.reduce(value),
            modulus,
        }
    }

    pub fn value(self) -> u32 {
        self.value
    }

    pub fn modulus(self) -> Prime {
        self.modulus
    }

    pub fn is_zero(self) -> bool {
        self.value == 0
    }

    pub fn pow(self, exp: u64) -> Self {
        FieldElement {
            value: self.modulus.pow(self.value, exp),
            modulus: self.modulus,
        }
    }

    pub fn inverse(self) -> Result<Self> {
        Ok(FieldElement {
            value: self.modulus.inv(self.value)?,
            modulus: self.modulus,
        })
    }
}

impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value)
    }
}

pub fn field_arith(a: FieldElement, b: FieldElement, op: FieldOp) -> Result<FieldElement> {
    if a.modulus != b.modulus {
        return Err(Error::ModulusMismatch(a.modulus.get(), b.modulus.get()));
    }
    let p = a.modulus;
    let value = match op {
        FieldOp::Add => p.add(a.value, b.value),
        FieldOp::Sub => p.sub(a.value, b.value),
        FieldOp::Mul => p.mul(a.value, b.value),
        FieldOp::Div => p.mul(a.value, p.inv(b.value)?),
    };
    Ok(FieldElement { value, modulus: p })
}

/// Smallest kappa in [1, p-1] with kappa^2 = -1 (mod p).
pub fn find_kappa(p: u32) -> Result<FieldElement> {
    let prime = Prime::new(p)?;
    let minus_one = p - 1;
    (1..p)
        .find(|&k| prime.mul(k, k) == minus_one)
        .map(|k| FieldElement::from_prime(k as u64, prime))
        .ok_or(Error::NoSquareRootOfMinusOne(p))
}

/// Multiplicative order of a nonzero element.
pub fn unit_order(a: FieldElement) -> Result<u64> {
    if a.is_zero() {
        return Err(Error::NotAUnit);
    }
    let p = a.modulus;
    let mut acc = a.value;
    let mut t = 1u64;
    while acc != 1 {
        acc = p.mul(acc, a.value);
        t += 1;
    }
    Ok(t)
}
