//! Exact arithmetic in Z[zeta_p].

use std::fmt;

use crate::error::{Error, Result};
use crate::prime_field::Prime;

/// An element sum c_i zeta^i over the basis 1, zeta, ..., zeta^(p-2).
///
/// For p = 2 the basis is {1} and zeta = -1.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CyclotomicInt {
    p: Prime,
    coeffs: Vec<i128>,
}

impl CyclotomicInt {
    pub fn zero(p: Prime) -> Self {
        CyclotomicInt {
            p,
            coeffs: vec![0; p.get() as usize - 1],
        }
    }

    pub fn from_int(p: Prime, v: i128) -> Self {
        let mut z = Self::zero(p);
        z.coeffs[0] = v;
        z
    }

    pub fn one(p: Prime) -> Self {
        Self::from_int(p, 1)
    }

    /// zeta^e.
    pub fn zeta_pow(p: Prime, e: u64) -> Self {
        let n = p.get() as usize;
        let e = (e % n as u64) as usize;
        let mut z = Self::zero(p);
        if e == n - 1 {
            for c in z.coeffs.iter_mut() {
                *c = -1;
            }
        } else {
            z.coeffs[e] = 1;
        }
        z
    }

    pub fn prime(&self) -> Prime {
        self.p
    }

    pub fn coeffs(&self) -> &[i128] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|&c| c == 0)
    }

    /// The rational integer value, if the element lies in Z.
    pub fn as_integer(&self) -> Option<i128> {
        self.coeffs[1..].iter().all(|&c| c == 0).then_some(self.coeffs[0])
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| a.checked_add(*b).ok_or(Error::Overflow))
            .collect::<Result<_>>()?;
        Ok(CyclotomicInt { p: self.p, coeffs })
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| a.checked_sub(*b).ok_or(Error::Overflow))
            .collect::<Result<_>>()?;
        Ok(CyclotomicInt { p: self.p, coeffs })
    }

    pub fn scale(&self, k: i128) -> Result<Self> {
        let coeffs = self
            .coeffs
            .iter()
            .map(|a| a.checked_mul(k).ok_or(Error::Overflow))
            .collect::<Result<_>>()?;
        Ok(CyclotomicInt { p: self.p, coeffs })
    }

    /// Product in Z[x]/(x^p - 1), then zeta^(p-1) is eliminated.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        let n = self.p.get() as usize;
        if n == 2 {
            return Ok(Self::from_int(
                self.p,
                self.coeffs[0].checked_mul(other.coeffs[0]).ok_or(Error::Overflow)?,
            ));
        }
        let mut full = vec![0i128; n];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in other.coeffs.iter().enumerate() {
                if b == 0 {
                    continue;
                }
                let t = a.checked_mul(b).ok_or(Error::Overflow)?;
                let slot = &mut full[(i + j) % n];
                *slot = slot.checked_add(t).ok_or(Error::Overflow)?;
            }
        }
        let top = full[n - 1];
        let coeffs = full[..n - 1]
            .iter()
            .map(|c| c.checked_sub(top).ok_or(Error::Overflow))
            .collect::<Result<_>>()?;
        Ok(CyclotomicInt { p: self.p, coeffs })
    }
}

impl fmt::Display for CyclotomicInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some(v) = self.as_integer() {
            return write!(f, "{v}");
        }
        let parts: Vec<String> = self
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, &c)| c != 0)
            .map(|(i, c)| match i {
                0 => c.to_string(),
                1 => format!("{c}z"),
                _ => format!("{c}z^{i}"),
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}
