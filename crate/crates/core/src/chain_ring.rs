//! The chain rings Z_p[u]/<u^k> for k in {1, 2, 3}.
//!
//! k = 1 is Z_p itself, k = 2 is R and k = 3 is S. All three share one element
//! type so the projections between them stay total functions.

use std::fmt;
use std::str::FromStr;

use crate::additive_code::MixedWord;
use crate::error::{Error, Result};
use crate::prime_field::{FieldElement, Prime};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct ChainElement {
    p: Prime,
    k: u8,
    coeffs: [u32; 3],
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RingOp {
    Add,
    Sub,
    Mul,
}

/// Projections between the rings.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Eta {
    /// R -> Z_p, a + ub -> a.
    Eta0,
    /// S -> Z_p, a + ub + u^2 d -> a.
    Eta1,
    /// S -> R, a + ub + u^2 d -> a + ub.
    Eta2,
}

impl ChainElement {
    /// Builds an element of Z_p[u]/<u^k> with k = `coeffs.len()`.
    pub fn new(p: Prime, coeffs: &[u32]) -> Result<Self> {
        let k = coeffs.len();
        if !(1..=3).contains(&k) {
            return Err(Error::WrongRing {
                expected: 3,
                got: k as u8,
            });
        }
        let mut c = [0u32; 3];
        for (dst, &src) in c.iter_mut().zip(coeffs) {
            *dst = src % p.get();
        }
        Ok(ChainElement {
            p,
            k: k as u8,
            coeffs: c,
        })
    }

    pub(crate) fn from_raw(p: Prime, k: u8, coeffs: [u32; 3]) -> Self {
        debug_assert!((1..=3).contains(&k));
        ChainElement { p, k, coeffs }
    }

    pub fn zero(p: Prime, k: u8) -> Self {
        Self::from_raw(p, k, [0; 3])
    }

    pub fn one(p: Prime, k: u8) -> Self {
        Self::constant(p, k, 1)
    }

    pub fn constant(p: Prime, k: u8, a: u32) -> Self {
        Self::from_raw(p, k, [a % p.get(), 0, 0])
    }

    /// The nilpotent generator u (zero when k = 1).
    pub fn u(p: Prime, k: u8) -> Self {
        let mut c = [0; 3];
        if k > 1 {
            c[1] = 1 % p.get();
        }
        Self::from_raw(p, k, c)
    }

    pub fn prime(&self) -> Prime {
        self.p
    }

    pub fn nilpotency(&self) -> u8 {
        self.k
    }

    pub fn coeffs(&self) -> &[u32] {
        &self.coeffs[..self.k as usize]
    }

    pub fn constant_term(&self) -> u32 {
        self.coeffs[0]
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs == [0; 3]
    }

    pub fn is_one(&self) -> bool {
        self.coeffs == [1, 0, 0]
    }

    fn check(&self, other: &Self) -> Result<()> {
        if self.p != other.p {
            return Err(Error::ModulusMismatch(self.p.get(), other.p.get()));
        }
        if self.k != other.k {
            return Err(Error::RingMismatch {
                p: self.p.get(),
                k1: self.k,
                k2: other.k,
            });
        }
        Ok(())
    }

    pub(crate) fn add_raw(&self, other: &Self) -> Self {
        let p = self.p;
        let mut c = [0; 3];
        for i in 0..3 {
            c[i] = p.add(self.coeffs[i], other.coeffs[i]);
        }
        Self::from_raw(p, self.k, c)
    }

    pub(crate) fn sub_raw(&self, other: &Self) -> Self {
        let p = self.p;
        let mut c = [0; 3];
        for i in 0..3 {
            c[i] = p.sub(self.coeffs[i], other.coeffs[i]);
        }
        Self::from_raw(p, self.k, c)
    }

    /// Truncated convolution: u^k = 0.
    pub(crate) fn mul_raw(&self, other: &Self) -> Self {
        let p = self.p;
        let k = self.k as usize;
        let mut c = [0u32; 3];
        for i in 0..k {
            if self.coeffs[i] == 0 {
                continue;
            }
            for j in 0..k - i {
                c[i + j] = p.add(c[i + j], p.mul(self.coeffs[i], other.coeffs[j]));
            }
        }
        Self::from_raw(p, self.k, c)
    }

    pub fn neg(&self) -> Self {
        Self::zero(self.p, self.k).sub_raw(self)
    }

    pub fn scale(&self, a: u32) -> Self {
        let p = self.p;
        let mut c = self.coeffs;
        for v in c.iter_mut() {
            *v = p.mul(*v, a);
        }
        Self::from_raw(p, self.k, c)
    }

    pub fn pow(&self, mut e: u64) -> Self {
        let mut acc = Self::one(self.p, self.k);
        let mut base = *self;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul_raw(&base);
            }
            base = base.mul_raw(&base);
            e >>= 1;
        }
        acc
    }

    /// Inverse of a unit, by Newton lifting of the constant-term inverse.
    pub fn inverse(&self) -> Result<Self> {
        if !is_unit(self) {
            return Err(Error::NotAUnit);
        }
        let a_inv = self.p.inv(self.coeffs[0])?;
        let mut y = Self::constant(self.p, self.k, a_inv);
        let two = Self::constant(self.p, self.k, 2);
        // Each step doubles the u-adic precision; two steps reach u^3.
        for _ in 0..2 {
            y = y.mul_raw(&two.sub_raw(&self.mul_raw(&y)));
        }
        debug_assert!(self.mul_raw(&y).is_one());
        Ok(y)
    }

    /// Coefficient embedding into Z_p[u]/<u^k> for k >= self.k.
    pub fn embed(&self, k: u8) -> Self {
        debug_assert!(k >= self.k);
        Self::from_raw(self.p, k, self.coeffs)
    }

    /// Reduction modulo u^k for k <= self.k.
    pub fn truncate(&self, k: u8) -> Self {
        let mut c = self.coeffs;
        for v in c.iter_mut().skip(k as usize) {
            *v = 0;
        }
        Self::from_raw(self.p, k, c)
    }

    pub fn as_field(&self) -> FieldElement {
        FieldElement::from_prime(self.coeffs[0] as u64, self.p)
    }

    /// Parses the text form, e.g. `3+2u+4u^2`, `u²`, `1 + u`.
    pub fn parse(text: &str, p: Prime, k: u8) -> Result<Self> {
        let cleaned: String = text.chars().filter(|c| !c.is_whitespace()).collect();
        if cleaned.is_empty() {
            return Err(Error::Parse("empty ring element".into()));
        }
        let cleaned = cleaned.replace('²', "^2");
        let bad = || Error::Parse(format!("invalid ring element `{text}`"));
        let mut c = [0i64; 3];
        let mut terms: Vec<(i64, &str)> = Vec::new();
        let mut start = 0;
        let bytes = cleaned.as_bytes();
        let mut sign = 1i64;
        for i in 0..=bytes.len() {
            if i == bytes.len() || ((bytes[i] == b'+' || bytes[i] == b'-') && i > start) {
                terms.push((sign, &cleaned[start..i]));
                if i < bytes.len() {
                    sign = if bytes[i] == b'-' { -1 } else { 1 };
                }
                start = i + 1;
            } else if (bytes[i] == b'+' || bytes[i] == b'-') && i == start {
                sign = if bytes[i] == b'-' { -sign } else { sign };
                start = i + 1;
            }
        }
        for (sign, term) in terms {
            if term.is_empty() {
                return Err(bad());
            }
            let (coef, power) = match term.find('u') {
                None => (term, 0usize),
                Some(pos) => {
                    let rest = &term[pos + 1..];
                    let power = match rest {
                        "" => 1,
                        "^2" => 2,
                        "^1" => 1,
                        _ => return Err(bad()),
                    };
                    (&term[..pos], power)
                }
            };
            let coef = coef.trim_end_matches('*');
            let value: i64 = if coef.is_empty() {
                1
            } else {
                coef.parse().map_err(|_| bad())?
            };
            if power >= k as usize {
                return Err(Error::Parse(format!(
                    "`{text}` has a u^{power} term outside Z_p[u]/<u^{k}>"
                )));
            }
            c[power] += sign * value;
        }
        let coeffs = [
            p.reduce_signed(c[0]),
            p.reduce_signed(c[1]),
            p.reduce_signed(c[2]),
        ];
        Ok(Self::from_raw(p, k, coeffs))
    }
}

impl fmt::Display for ChainElement {
    /// Renders `a+bu+du²` with zero terms suppressed.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        for (i, &c) in self.coeffs().iter().enumerate() {
            if c == 0 {
                continue;
            }
            let var = ["", "u", "u²"][i];
            if i == 0 {
                parts.push(c.to_string());
            } else if c == 1 {
                parts.push(var.to_string());
            } else {
                parts.push(format!("{c}{var}"));
            }
        }
        if parts.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", parts.join("+"))
        }
    }
}

impl FromStr for ChainElement {
    type Err = Error;
    /// Parses `"<text> mod <p> k<k>"`; mainly useful in tests. Prefer
    /// [`ChainElement::parse`].
    fn from_str(s: &str) -> Result<Self> {
        let parts: Vec<&str> = s.split_whitespace().collect();
        match parts.as_slice() {
            [text, "mod", p, k] => {
                let p = Prime::new(p.parse().map_err(|_| Error::Parse(s.into()))?)?;
                let k: u8 = k
                    .trim_start_matches('k')
                    .parse()
                    .map_err(|_| Error::Parse(s.into()))?;
                ChainElement::parse(text, p, k)
            }
            _ => Err(Error::Parse(s.into())),
        }
    }
}

pub fn ring_arith(a: &ChainElement, b: &ChainElement, op: RingOp) -> Result<ChainElement> {
    a.check(b)?;
    Ok(match op {
        RingOp::Add => a.add_raw(b),
        RingOp::Sub => a.sub_raw(b),
        RingOp::Mul => a.mul_raw(b),
    })
}

pub fn eta(x: &ChainElement, which: Eta) -> Result<ChainElement> {
    let expected = match which {
        Eta::Eta0 => 2,
        Eta::Eta1 | Eta::Eta2 => 3,
    };
    if x.k != expected {
        return Err(Error::WrongRing {
            expected,
            got: x.k,
        });
    }
    Ok(match which {
        Eta::Eta0 | Eta::Eta1 => x.truncate(1),
        Eta::Eta2 => x.truncate(2),
    })
}

/// A chain-ring element is a unit iff its constant term is nonzero.
pub fn is_unit(x: &ChainElement) -> bool {
    x.coeffs[0] != 0
}

pub fn unit_order_chain(x: &ChainElement) -> Result<u64> {
    if !is_unit(x) {
        return Err(Error::NotAUnit);
    }
    let mut acc = *x;
    let mut t = 1u64;
    while !acc.is_one() {
        acc = acc.mul_raw(x);
        t += 1;
    }
    Ok(t)
}

/// The S-module action on Z_p^q x R^r x S^s: the Z_p block is scaled by
/// d mod u, the R block by d mod u^2 and the S block by d.
pub fn mixed_scalar_mul(d: &ChainElement, w: &MixedWord) -> Result<MixedWord> {
    let profile = w.profile();
    if d.k != 3 {
        return Err(Error::WrongRing {
            expected: 3,
            got: d.k,
        });
    }
    if d.p != profile.p() {
        return Err(Error::ModulusMismatch(d.p.get(), profile.p().get()));
    }
    let p = profile.p();
    let d1 = d.coeffs[0];
    let d2 = d.truncate(2);
    let zp = w
        .zp_block()
        .iter()
        .map(|a| FieldElement::from_prime(p.mul(a.value(), d1) as u64, p))
        .collect();
    let r = w.r_block().iter().map(|b| d2.mul_raw(b)).collect();
    let s = w.s_block().iter().map(|c| d.mul_raw(c)).collect();
    MixedWord::new(profile, zp, r, s)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::additive_code::BlockProfile;

    fn el(text: &str, p: u32, k: u8) -> ChainElement {
        ChainElement::parse(text, Prime::new(p).unwrap(), k).unwrap()
    }

    fn all_elements(p: u32, k: u8) -> Vec<ChainElement> {
        let prime = Prime::new(p).unwrap();
        let total = (p as usize).pow(k as u32);
        (0..total)
            .map(|mut idx| {
                let mut c = [0u32; 3];
                for slot in c.iter_mut().take(k as usize) {
                    *slot = (idx % p as usize) as u32;
                    idx /= p as usize;
                }
                ChainElement::from_raw(prime, k, c)
            })
            .collect()
    }

    #[test]
    fn ring_arith_examples() {
        let uu = ring_arith(&el("u", 2, 2), &el("u", 2, 2), RingOp::Mul).unwrap();
        assert!(uu.is_zero());
        let sq = ring_arith(&el("1+u", 2, 2), &el("1+u", 2, 2), RingOp::Mul).unwrap();
        assert_eq!(sq, el("1", 2, 2));
        let prod = ring_arith(&el("1+u", 2, 3), &el("1+u^2", 2, 3), RingOp::Mul).unwrap();
        assert_eq!(prod, el("1+u+u^2", 2, 3));
    }

    #[test]
    fn ring_arith_mismatch() {
        assert!(matches!(
            ring_arith(&el("u", 2, 2), &el("u", 2, 3), RingOp::Add),
            Err(Error::RingMismatch { .. })
        ));
        assert!(matches!(
            ring_arith(&el("u", 2, 2), &el("u", 3, 2), RingOp::Add),
            Err(Error::ModulusMismatch(2, 3))
        ));
    }

    #[test]
    fn eta_examples() {
        assert_eq!(eta(&el("1+u", 2, 2), Eta::Eta0).unwrap(), el("1", 2, 1));
        assert_eq!(eta(&el("u+u^2", 2, 3), Eta::Eta1).unwrap(), el("0", 2, 1));
        assert_eq!(eta(&el("3+2u+4u^2", 5, 3), Eta::Eta2).unwrap(), el("3+2u", 5, 2));
        assert!(matches!(
            eta(&el("1", 5, 3), Eta::Eta0),
            Err(Error::WrongRing { .. })
        ));
        assert!(matches!(
            eta(&el("1", 5, 2), Eta::Eta2),
            Err(Error::WrongRing { .. })
        ));
    }

    #[test]
    fn unit_examples() {
        assert!(!is_unit(&el("u", 3, 2)));
        assert!(is_unit(&el("1+u", 3, 3)));
        assert!(!is_unit(&el("0", 3, 3)));
        assert_eq!(unit_order_chain(&el("1", 5, 3)).unwrap(), 1);
        assert_eq!(unit_order_chain(&el("1+u", 2, 2)).unwrap(), 2);
        for p in [3, 5, 7, 13] {
            assert_eq!(unit_order_chain(&el(&(p - 1).to_string(), p, 3)).unwrap(), 2);
        }
        assert_eq!(unit_order_chain(&el("u", 5, 3)), Err(Error::NotAUnit));
    }

    #[test]
    fn multiplication_is_commutative_and_associative() {
        for p in [2, 3] {
            for k in 1..=3 {
                let els = all_elements(p, k);
                for a in &els {
                    for b in &els {
                        assert_eq!(a.mul_raw(b), b.mul_raw(a));
                        for c in &els {
                            assert_eq!(a.mul_raw(b).mul_raw(c), a.mul_raw(&b.mul_raw(c)));
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn units_match_inverse_search() {
        for p in [2, 3, 5] {
            for k in 1..=3 {
                let els = all_elements(p, k);
                for a in &els {
                    let has_inverse = els.iter().any(|b| a.mul_raw(b).is_one());
                    assert_eq!(has_inverse, is_unit(a), "{a} in p={p} k={k}");
                    if has_inverse {
                        assert!(a.mul_raw(&a.inverse().unwrap()).is_one());
                    }
                }
            }
        }
    }

    #[test]
    fn projections_are_ring_homomorphisms() {
        for p in [2, 3] {
            let els = all_elements(p, 3);
            for a in &els {
                for b in &els {
                    let ab = a.mul_raw(b);
                    for which in [Eta::Eta1, Eta::Eta2] {
                        let lhs = eta(&ab, which).unwrap();
                        let rhs = eta(a, which).unwrap().mul_raw(&eta(b, which).unwrap());
                        assert_eq!(lhs, rhs);
                        let sum = eta(&a.add_raw(b), which).unwrap();
                        assert_eq!(sum, eta(a, which).unwrap().add_raw(&eta(b, which).unwrap()));
                    }
                }
            }
        }
    }

    fn word(profile: BlockProfile, zp: &[u32], r: &[&str], s: &[&str]) -> MixedWord {
        let p = profile.p();
        MixedWord::new(
            profile,
            zp.iter().map(|&v| FieldElement::from_prime(v as u64, p)).collect(),
            r.iter().map(|t| ChainElement::parse(t, p, 2).unwrap()).collect(),
            s.iter().map(|t| ChainElement::parse(t, p, 3).unwrap()).collect(),
        )
        .unwrap()
    }

    #[test]
    fn mixed_scalar_mul_examples() {
        let profile = BlockProfile::new(2, 1, 1, 1).unwrap();
        let w = word(profile, &[1], &["1"], &["1"]);
        assert_eq!(mixed_scalar_mul(&el("1", 2, 3), &w).unwrap(), w);
        assert_eq!(
            mixed_scalar_mul(&el("u", 2, 3), &w).unwrap(),
            word(profile, &[0], &["u"], &["u"])
        );
        assert_eq!(
            mixed_scalar_mul(&el("u^2", 2, 3), &w).unwrap(),
            word(profile, &[0], &["0"], &["u^2"])
        );
        assert!(mixed_scalar_mul(&el("u", 3, 3), &w).is_err());
        assert!(mixed_scalar_mul(&el("u", 2, 2), &w).is_err());
    }

    #[test]
    fn mixed_action_is_a_module_action() {
        let profile = BlockProfile::new(2, 1, 1, 1).unwrap();
        let scalars = all_elements(2, 3);
        let words: Vec<MixedWord> = (0..64u32)
            .map(|bits| {
                let flat: Vec<u32> = (0..6).map(|i| (bits >> i) & 1).collect();
                MixedWord::unflatten(&flat, profile).unwrap()
            })
            .collect();
        for d1 in &scalars {
            for d2 in &scalars {
                for w in &words {
                    let lhs = mixed_scalar_mul(&d1.mul_raw(d2), w).unwrap();
                    let rhs = mixed_scalar_mul(d1, &mixed_scalar_mul(d2, w).unwrap()).unwrap();
                    assert_eq!(lhs, rhs);
                }
            }
        }
    }

    #[test]
    fn text_round_trip() {
        let e = el("3+2u+4u^2", 5, 3);
        assert_eq!(e.to_string(), "3+2u+4u²");
        assert_eq!(el("u", 5, 2).to_string(), "u");
        assert_eq!(el("0", 5, 2).to_string(), "0");
        assert_eq!(el("-1", 5, 1).to_string(), "4");
        for p in [2, 3, 5] {
            for x in all_elements(p, 3) {
                assert_eq!(ChainElement::parse(&x.to_string(), x.prime(), 3).unwrap(), x);
            }
        }
        assert!(ChainElement::parse("u^2", Prime::new(5).unwrap(), 2).is_err());
        assert!(ChainElement::parse("2v", Prime::new(5).unwrap(), 2).is_err());
        let parsed: ChainElement = "1+u mod 3 k2".parse().unwrap();
        assert_eq!(parsed, el("1+u", 3, 2));
    }
}
