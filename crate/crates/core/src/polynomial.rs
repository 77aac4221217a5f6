//! Univariate polynomials over Z_p and over the chain rings.

use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::chain_ring::{is_unit, ChainElement};
use crate::error::{Error, Result};
use crate::prime_field::{FieldElement, Prime};

/// A polynomial with coefficients in Z_p[u]/<u^k>, lowest degree first.
///
/// Trailing zeros are always stripped, so the zero polynomial has no
/// coefficients and `degree()` returns `None`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Poly {
    p: Prime,
    k: u8,
    coeffs: Vec<ChainElement>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PolyOp {
    Add,
    Sub,
    Mul,
}

impl Poly {
    pub fn new(p: Prime, k: u8, coeffs: Vec<ChainElement>) -> Result<Self> {
        for c in &coeffs {
            if c.prime() != p {
                return Err(Error::ModulusMismatch(p.get(), c.prime().get()));
            }
            if c.nilpotency() != k {
                return Err(Error::RingMismatch {
                    p: p.get(),
                    k1: k,
                    k2: c.nilpotency(),
                });
            }
        }
        let mut f = Poly { p, k, coeffs };
        f.trim();
        Ok(f)
    }

    /// A polynomial over Z_p from raw residues.
    pub fn from_field(p: Prime, coeffs: &[u32]) -> Self {
        Self::from_residues(p, 1, coeffs)
    }

    /// A polynomial over Z_p[u]/<u^k> whose coefficients are constants.
    pub fn from_residues(p: Prime, k: u8, coeffs: &[u32]) -> Self {
        let coeffs = coeffs
            .iter()
            .map(|&c| ChainElement::constant(p, k, c))
            .collect();
        let mut f = Poly { p, k, coeffs };
        f.trim();
        f
    }

    pub fn zero(p: Prime, k: u8) -> Self {
        Poly {
            p,
            k,
            coeffs: Vec::new(),
        }
    }

    pub fn one(p: Prime, k: u8) -> Self {
        Self::constant(ChainElement::one(p, k))
    }

    pub fn constant(c: ChainElement) -> Self {
        Self::monomial(c, 0)
    }

    pub fn monomial(c: ChainElement, deg: usize) -> Self {
        let mut coeffs = vec![ChainElement::zero(c.prime(), c.nilpotency()); deg + 1];
        coeffs[deg] = c;
        let mut f = Poly {
            p: c.prime(),
            k: c.nilpotency(),
            coeffs,
        };
        f.trim();
        f
    }

    /// x^n - lambda.
    pub fn xn_minus(n: usize, lambda: ChainElement) -> Self {
        let mut f = Self::monomial(ChainElement::one(lambda.prime(), lambda.nilpotency()), n);
        f = f.sub_raw(&Self::constant(lambda));
        f
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(|c| c.is_zero()) {
            self.coeffs.pop();
        }
    }

    pub fn prime(&self) -> Prime {
        self.p
    }

    pub fn nilpotency(&self) -> u8 {
        self.k
    }

    pub fn coeffs(&self) -> &[ChainElement] {
        &self.coeffs
    }

    /// Coefficient of x^i (zero past the degree).
    pub fn coeff(&self, i: usize) -> ChainElement {
        self.coeffs
            .get(i)
            .copied()
            .unwrap_or_else(|| ChainElement::zero(self.p, self.k))
    }

    /// Constant terms of all coefficients; exact for polynomials over Z_p.
    pub fn residues(&self) -> Vec<u32> {
        self.coeffs.iter().map(|c| c.constant_term()).collect()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    pub fn leading(&self) -> Option<ChainElement> {
        self.coeffs.last().copied()
    }

    pub fn is_monic(&self) -> bool {
        self.leading().is_some_and(|c| c.is_one())
    }

    /// Coefficientwise embedding into a ring with larger nilpotency.
    pub fn embed(&self, k: u8) -> Poly {
        Poly {
            p: self.p,
            k,
            coeffs: self.coeffs.iter().map(|c| c.embed(k)).collect(),
        }
    }

    pub fn scale(&self, c: &ChainElement) -> Poly {
        let mut f = Poly {
            p: self.p,
            k: self.k,
            coeffs: self.coeffs.iter().map(|a| a.mul_raw(c)).collect(),
        };
        f.trim();
        f
    }

    /// Multiplies by the inverse of the leading coefficient.
    pub fn monic(&self) -> Result<Poly> {
        match self.leading() {
            None => Ok(self.clone()),
            Some(lc) => Ok(self.scale(&lc.inverse()?)),
        }
    }

    pub fn eval(&self, x: &ChainElement) -> ChainElement {
        let mut acc = ChainElement::zero(self.p, self.k);
        for c in self.coeffs.iter().rev() {
            acc = acc.mul_raw(x).add_raw(c);
        }
        acc
    }

    fn check(&self, other: &Poly) -> Result<()> {
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

    pub(crate) fn add_raw(&self, other: &Poly) -> Poly {
        let n = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..n).map(|i| self.coeff(i).add_raw(&other.coeff(i))).collect();
        let mut f = Poly {
            p: self.p,
            k: self.k,
            coeffs,
        };
        f.trim();
        f
    }

    pub(crate) fn sub_raw(&self, other: &Poly) -> Poly {
        let n = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..n).map(|i| self.coeff(i).sub_raw(&other.coeff(i))).collect();
        let mut f = Poly {
            p: self.p,
            k: self.k,
            coeffs,
        };
        f.trim();
        f
    }

    pub(crate) fn mul_raw(&self, other: &Poly) -> Poly {
        if self.is_zero() || other.is_zero() {
            return Poly::zero(self.p, self.k);
        }
        let mut coeffs =
            vec![ChainElement::zero(self.p, self.k); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                coeffs[i + j] = coeffs[i + j].add_raw(&a.mul_raw(b));
            }
        }
        let mut f = Poly {
            p: self.p,
            k: self.k,
            coeffs,
        };
        f.trim();
        f
    }

    /// Reduces modulo x^n - mu by folding x^n to mu.
    pub fn reduce_mod_xn_minus(&self, n: usize, mu: &ChainElement) -> Poly {
        if n == 0 {
            return Poly::zero(self.p, self.k);
        }
        let mut coeffs = self.coeffs.clone();
        for j in (n..coeffs.len()).rev() {
            let c = coeffs[j];
            if !c.is_zero() {
                coeffs[j - n] = coeffs[j - n].add_raw(&c.mul_raw(mu));
                coeffs[j] = ChainElement::zero(self.p, self.k);
            }
        }
        coeffs.truncate(n);
        let mut f = Poly {
            p: self.p,
            k: self.k,
            coeffs,
        };
        f.trim();
        f
    }

    /// Parses `c_m x^m + ... + c_0`. Coefficients may be integers or
    /// parenthesized ring elements such as `(1+u)x^2`.
    pub fn parse(text: &str, p: Prime, k: u8) -> Result<Poly> {
        let cleaned: String = text.chars().filter(|c| !c.is_whitespace()).collect();
        let cleaned = cleaned.replace('²', "^2").replace('³', "^3");
        if cleaned.is_empty() {
            return Err(Error::Parse("empty polynomial".into()));
        }
        let bad = |why: &str| Error::Parse(format!("invalid polynomial `{text}`: {why}"));
        let mut terms: Vec<(bool, String)> = Vec::new();
        let mut depth = 0i32;
        let mut current = String::new();
        let mut negative = false;
        for ch in cleaned.chars() {
            match ch {
                '(' => {
                    depth += 1;
                    current.push(ch);
                }
                ')' => {
                    depth -= 1;
                    current.push(ch);
                }
                '+' | '-' if depth == 0 && !current.is_empty() && !current.ends_with('^') => {
                    terms.push((negative, std::mem::take(&mut current)));
                    negative = ch == '-';
                }
                '-' if depth == 0 && current.is_empty() => negative = !negative,
                '+' if depth == 0 && current.is_empty() => {}
                _ => current.push(ch),
            }
        }
        if depth != 0 {
            return Err(bad("unbalanced parentheses"));
        }
        if current.is_empty() {
            return Err(bad("dangling operator"));
        }
        terms.push((negative, current));

        let mut f = Poly::zero(p, k);
        for (negative, term) in terms {
            // Find an `x` outside parentheses.
            let mut depth = 0;
            let mut xpos = None;
            for (i, ch) in term.char_indices() {
                match ch {
                    '(' => depth += 1,
                    ')' => depth -= 1,
                    'x' if depth == 0 => {
                        xpos = Some(i);
                        break;
                    }
                    _ => {}
                }
            }
            let (coef_text, deg) = match xpos {
                None => (term.as_str(), 0usize),
                Some(i) => {
                    let rest = &term[i + 1..];
                    let deg = if rest.is_empty() {
                        1
                    } else if let Some(e) = rest.strip_prefix('^') {
                        e.parse().map_err(|_| bad("bad exponent"))?
                    } else {
                        return Err(bad("unexpected text after x"));
                    };
                    (&term[..i], deg)
                }
            };
            let coef_text = coef_text.trim_end_matches('*');
            let coef_text = coef_text
                .strip_prefix('(')
                .and_then(|t| t.strip_suffix(')'))
                .unwrap_or(coef_text);
            let mut c = if coef_text.is_empty() {
                ChainElement::one(p, k)
            } else {
                ChainElement::parse(coef_text, p, k)?
            };
            if negative {
                c = c.neg();
            }
            f = f.add_raw(&Poly::monomial(c, deg));
        }
        Ok(f)
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut parts = Vec::new();
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let var = match i {
                0 => String::new(),
                1 => "x".to_string(),
                _ => format!("x^{i}"),
            };
            let text = c.to_string();
            let compound = text.contains('+');
            let coef = if i > 0 && c.is_one() {
                String::new()
            } else if compound && i > 0 {
                format!("({text})")
            } else {
                text
            };
            parts.push(format!("{coef}{var}"));
        }
        write!(f, "{}", parts.join(" + "))
    }
}

pub fn poly_arith(f: &Poly, g: &Poly, op: PolyOp) -> Result<Poly> {
    f.check(g)?;
    Ok(match op {
        PolyOp::Add => f.add_raw(g),
        PolyOp::Sub => f.sub_raw(g),
        PolyOp::Mul => f.mul_raw(g),
    })
}

/// Division with remainder by a polynomial with unit leading coefficient.
pub fn poly_divrem(f: &Poly, g: &Poly) -> Result<(Poly, Poly)> {
    f.check(g)?;
    let lc = g.leading().ok_or(Error::DivisionByZero)?;
    if !is_unit(&lc) {
        return Err(Error::NonUnitLeadingCoefficient);
    }
    let lc_inv = lc.inverse()?;
    let dg = g.coeffs.len() - 1;
    let mut rem = f.coeffs.clone();
    if rem.len() <= dg {
        return Ok((Poly::zero(f.p, f.k), f.clone()));
    }
    let mut quot = vec![ChainElement::zero(f.p, f.k); rem.len() - dg];
    for i in (dg..rem.len()).rev() {
        let c = rem[i].mul_raw(&lc_inv);
        if c.is_zero() {
            continue;
        }
        quot[i - dg] = c;
        for (j, b) in g.coeffs.iter().enumerate() {
            rem[i - dg + j] = rem[i - dg + j].sub_raw(&c.mul_raw(b));
        }
    }
    rem.truncate(dg);
    let q = Poly::new(f.p, f.k, quot)?;
    let r = Poly::new(f.p, f.k, rem)?;
    Ok((q, r))
}

/// Whether `f` divides `g`.
pub fn divides(f: &Poly, g: &Poly) -> Result<bool> {
    Ok(poly_divrem(g, f)?.1.is_zero())
}

/// Monic gcd over Z_p.
pub fn poly_gcd(f: &Poly, g: &Poly) -> Result<Poly> {
    f.check(g)?;
    if f.k != 1 {
        return Err(Error::WrongRing {
            expected: 1,
            got: f.k,
        });
    }
    let p = f.p;
    let res = fp::gcd(p, &f.residues(), &g.residues());
    Ok(Poly::from_field(p, &res))
}

/// Factors x^n - lambda into monic irreducibles over Z_p.
///
/// Output is sorted by degree, then by coefficients lowest degree first.
pub fn factor_xn_minus_lambda(p: Prime, n: usize, lambda: FieldElement) -> Result<Vec<Poly>> {
    if lambda.modulus() != p {
        return Err(Error::ModulusMismatch(p.get(), lambda.modulus().get()));
    }
    if lambda.is_zero() {
        return Err(Error::ZeroLambda);
    }
    if n == 0 || n % p.get() as usize == 0 {
        return Err(Error::GcdViolation { p: p.get(), n });
    }
    let mut f = vec![0u32; n + 1];
    f[0] = p.neg(lambda.value());
    f[n] = 1;
    let mut factors = fp::factor_squarefree(p, &f);
    factors.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    Ok(factors.iter().map(|c| Poly::from_field(p, c)).collect())
}

/// x^m g(1/x), without monic normalization.
pub fn reciprocal(g: &Poly) -> Result<Poly> {
    match g.coeffs.first() {
        Some(c) if !c.is_zero() => {}
        _ => return Err(Error::ZeroConstantTerm),
    }
    let mut coeffs = g.coeffs.clone();
    coeffs.reverse();
    Poly::new(g.p, g.k, coeffs)
}

/// The cofactor (x^n - lambda) / f.
pub fn hat(f: &Poly, n: usize, lambda: &ChainElement) -> Result<Poly> {
    let modulus = Poly::xn_minus(n, *lambda);
    if f.p != modulus.p || f.k != modulus.k {
        f.check(&modulus)?;
    }
    let (q, r) = poly_divrem(&modulus, f).map_err(|e| match e {
        Error::DivisionByZero => Error::NotADivisor,
        other => other,
    })?;
    if !r.is_zero() {
        return Err(Error::NotADivisor);
    }
    Ok(q)
}

/// f(mu^{-1} x) reduced modulo x^n - mu.
///
/// When mu^(n-1) = 1 this is the ring isomorphism from R[x]/<x^n - 1> onto
/// R[x]/<x^n - mu>.
pub fn rho_substitute(f: &Poly, mu: &ChainElement, n: usize) -> Result<Poly> {
    if mu.prime() != f.p || mu.nilpotency() != f.k {
        return Err(Error::RingMismatch {
            p: f.p.get(),
            k1: f.k,
            k2: mu.nilpotency(),
        });
    }
    let mu_inv = mu.inverse()?;
    let mut scale = ChainElement::one(f.p, f.k);
    let mut coeffs = Vec::with_capacity(f.coeffs.len());
    for c in &f.coeffs {
        coeffs.push(c.mul_raw(&scale));
        scale = scale.mul_raw(&mu_inv);
    }
    let g = Poly::new(f.p, f.k, coeffs)?;
    if g.coeffs.len() > n {
        Ok(g.reduce_mod_xn_minus(n, mu))
    } else {
        Ok(g)
    }
}

/// Dense polynomial arithmetic over Z_p on raw residue vectors.
pub(crate) mod fp {
    use super::*;

    pub fn trim(mut a: Vec<u32>) -> Vec<u32> {
        while a.last() == Some(&0) {
            a.pop();
        }
        a
    }

    pub fn sub(p: Prime, a: &[u32], b: &[u32]) -> Vec<u32> {
        let n = a.len().max(b.len());
        let out = (0..n)
            .map(|i| p.sub(*a.get(i).unwrap_or(&0), *b.get(i).unwrap_or(&0)))
            .collect();
        trim(out)
    }

    pub fn mul(p: Prime, a: &[u32], b: &[u32]) -> Vec<u32> {
        if a.is_empty() || b.is_empty() {
            return Vec::new();
        }
        let mut out = vec![0u64; a.len() + b.len() - 1];
        let pp = p.get() as u64;
        for (i, &x) in a.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (j, &y) in b.iter().enumerate() {
                out[i + j] = (out[i + j] + x as u64 * y as u64) % pp;
            }
        }
        trim(out.into_iter().map(|v| v as u32).collect())
    }

    /// Divides by a nonzero `b`.
    pub fn divrem(p: Prime, a: &[u32], b: &[u32]) -> (Vec<u32>, Vec<u32>) {
        let b = trim(b.to_vec());
        let db = b.len() - 1;
        let mut r = trim(a.to_vec());
        if r.len() <= db {
            return (Vec::new(), r);
        }
        let inv = p.inv(b[db]).expect("nonzero leading coefficient");
        let mut q = vec![0u32; r.len() - db];
        for i in (db..r.len()).rev() {
            let c = p.mul(r[i], inv);
            if c == 0 {
                continue;
            }
            q[i - db] = c;
            for (j, &y) in b.iter().enumerate() {
                r[i - db + j] = p.sub(r[i - db + j], p.mul(c, y));
            }
        }
        r.truncate(db);
        (trim(q), trim(r))
    }

    pub fn rem(p: Prime, a: &[u32], b: &[u32]) -> Vec<u32> {
        divrem(p, a, b).1
    }

    pub fn monic(p: Prime, a: &[u32]) -> Vec<u32> {
        match a.last() {
            None => Vec::new(),
            Some(&lc) => {
                let inv = p.inv(lc).expect("nonzero");
                a.iter().map(|&c| p.mul(c, inv)).collect()
            }
        }
    }

    pub fn gcd(p: Prime, a: &[u32], b: &[u32]) -> Vec<u32> {
        let mut a = trim(a.to_vec());
        let mut b = trim(b.to_vec());
        while !b.is_empty() {
            let r = rem(p, &a, &b);
            a = b;
            b = r;
        }
        monic(p, &a)
    }

    pub fn mulmod(p: Prime, a: &[u32], b: &[u32], m: &[u32]) -> Vec<u32> {
        rem(p, &mul(p, a, b), m)
    }

    pub fn powmod(p: Prime, base: &[u32], mut e: u64, m: &[u32]) -> Vec<u32> {
        let mut acc = rem(p, &[1], m);
        let mut b = rem(p, base, m);
        while e > 0 {
            if e & 1 == 1 {
                acc = mulmod(p, &acc, &b, m);
            }
            b = mulmod(p, &b, &b, m);
            e >>= 1;
        }
        acc
    }

    /// Distinct-degree then equal-degree splitting of a squarefree polynomial.
    pub fn factor_squarefree(p: Prime, f: &[u32]) -> Vec<Vec<u32>> {
        let mut f = monic(p, &trim(f.to_vec()));
        let mut out = Vec::new();
        let x = vec![0, 1];
        let mut h = rem(p, &x, &f);
        let mut d = 1usize;
        while f.len() > 1 && 2 * d < f.len() {
            h = powmod(p, &h, p.get() as u64, &f);
            let g = gcd(p, &f, &sub(p, &h, &x));
            if g.len() > 1 {
                f = divrem(p, &f, &g).0;
                h = rem(p, &h, &f);
                split_equal_degree(p, &g, d, &mut out);
            }
            d += 1;
        }
        if f.len() > 1 {
            out.push(f);
        }
        out
    }

    fn split_equal_degree(p: Prime, g: &[u32], d: usize, out: &mut Vec<Vec<u32>>) {
        let deg = g.len() - 1;
        if deg == d {
            out.push(g.to_vec());
            return;
        }
        let mut rng = ChaCha8Rng::seed_from_u64(0x5eed ^ (deg as u64) << 8 ^ d as u64);
        loop {
            let a: Vec<u32> = trim((0..deg).map(|_| rng.random_range(0..p.get())).collect());
            if a.len() < 2 {
                continue;
            }
            let t = if p.get() == 2 {
                // Trace map a + a^2 + ... + a^(2^(d-1)).
                let mut t = a.clone();
                let mut cur = a.clone();
                for _ in 1..d {
                    cur = mulmod(p, &cur, &cur, g);
                    t = add(p, &t, &cur);
                }
                t
            } else {
                // a^((p^d - 1)/2) = (a^(1 + p + ... + p^(d-1)))^((p-1)/2).
                let mut norm = rem(p, &a, g);
                let mut cur = norm.clone();
                for _ in 1..d {
                    cur = powmod(p, &cur, p.get() as u64, g);
                    norm = mulmod(p, &norm, &cur, g);
                }
                let t = powmod(p, &norm, (p.get() as u64 - 1) / 2, g);
                sub(p, &t, &[1])
            };
            let c = gcd(p, g, &t);
            if c.len() > 1 && c.len() < g.len() {
                let other = divrem(p, g, &c).0;
                split_equal_degree(p, &c, d, out);
                split_equal_degree(p, &other, d, out);
                return;
            }
        }
    }

    pub fn add(p: Prime, a: &[u32], b: &[u32]) -> Vec<u32> {
        let n = a.len().max(b.len());
        let out = (0..n)
            .map(|i| p.add(*a.get(i).unwrap_or(&0), *b.get(i).unwrap_or(&0)))
            .collect();
        trim(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn pr(p: u32) -> Prime {
        Prime::new(p).unwrap()
    }

    fn poly(text: &str, p: u32) -> Poly {
        Poly::parse(text, pr(p), 1).unwrap()
    }

    fn one(p: u32) -> ChainElement {
        ChainElement::one(pr(p), 1)
    }

    #[test]
    fn arith_examples() {
        assert_eq!(
            poly_arith(&poly("x+1", 2), &poly("x+1", 2), PolyOp::Mul).unwrap(),
            poly("x^2+1", 2)
        );
        let prod = poly_arith(
            &poly_arith(&poly("x+9", 17), &poly("x+13", 17), PolyOp::Mul).unwrap(),
            &poly("x+15", 17),
            PolyOp::Mul,
        )
        .unwrap();
        assert_eq!(prod, poly("x^3+3x^2+5x+4", 17));
        assert_eq!(prod.to_string(), "x^3 + 3x^2 + 5x + 4");
        let f = poly("3x^2+1", 5);
        assert_eq!(poly_arith(&f, &Poly::zero(pr(5), 1), PolyOp::Add).unwrap(), f);
        assert!(poly_arith(&f, &poly("x", 7), PolyOp::Add).is_err());
    }

    #[test]
    fn divrem_examples() {
        let (q, r) = poly_divrem(&poly("x^2-1", 5), &poly("x-1", 5)).unwrap();
        assert_eq!(q, poly("x+1", 5));
        assert!(r.is_zero());
        let (q, r) = poly_divrem(&poly("x^8-1", 17), &poly("x+16", 17)).unwrap();
        assert_eq!(q, poly("x^7+x^6+x^5+x^4+x^3+x^2+x+1", 17));
        assert!(r.is_zero());
        let f = Poly::parse("x^2+u", pr(2), 2).unwrap();
        let g = Poly::parse("ux", pr(2), 2).unwrap();
        assert_eq!(poly_divrem(&f, &g), Err(Error::NonUnitLeadingCoefficient));
    }

    #[test]
    fn divides_examples() {
        assert!(divides(&poly("x+1", 5), &poly("x^2-1", 5)).unwrap());
        assert!(divides(&poly("x+2", 5), &poly("x^2+1", 5)).unwrap());
        assert!(!divides(&poly("x+1", 2), &poly("x^2+x+1", 2)).unwrap());
    }

    #[test]
    fn factor_examples() {
        let fs = factor_xn_minus_lambda(pr(17), 8, FieldElement::new(1, 17).unwrap()).unwrap();
        let want: Vec<Poly> = [1, 2, 4, 8, 9, 13, 15, 16]
            .iter()
            .map(|c| poly(&format!("x+{c}"), 17))
            .collect();
        assert_eq!(fs, want);
        let fs = factor_xn_minus_lambda(pr(3), 2, FieldElement::new(1, 3).unwrap()).unwrap();
        assert_eq!(fs, vec![poly("x+1", 3), poly("x+2", 3)]);
        let fs = factor_xn_minus_lambda(pr(2), 3, FieldElement::new(1, 2).unwrap()).unwrap();
        assert_eq!(fs, vec![poly("x+1", 2), poly("x^2+x+1", 2)]);
        assert_eq!(
            factor_xn_minus_lambda(pr(2), 4, FieldElement::new(1, 2).unwrap()),
            Err(Error::GcdViolation { p: 2, n: 4 })
        );
        assert_eq!(
            factor_xn_minus_lambda(pr(5), 4, FieldElement::new(0, 5).unwrap()),
            Err(Error::ZeroLambda)
        );
    }

    fn is_irreducible_brute(f: &Poly) -> bool {
        // Trial division by every monic polynomial of degree <= deg/2.
        let p = f.prime().get();
        let deg = f.degree().unwrap();
        for d in 1..=deg / 2 {
            let count = (p as usize).pow(d as u32);
            for idx in 0..count {
                let mut c = Vec::with_capacity(d + 1);
                let mut t = idx;
                for _ in 0..d {
                    c.push((t % p as usize) as u32);
                    t /= p as usize;
                }
                c.push(1);
                if divides(&Poly::from_field(f.prime(), &c), f).unwrap() {
                    return false;
                }
            }
        }
        true
    }

    fn cyclotomic_coset_count(p: u64, n: u64) -> usize {
        let mut seen = vec![false; n as usize];
        let mut count = 0;
        for i in 0..n {
            if seen[i as usize] {
                continue;
            }
            count += 1;
            let mut j = i;
            while !seen[j as usize] {
                seen[j as usize] = true;
                j = j * p % n;
            }
        }
        count
    }

    #[test]
    fn factorizations_are_complete_and_irreducible() {
        for p in [2u32, 3, 5, 7, 13, 17] {
            for n in 1..=24usize {
                if n % p as usize == 0 {
                    continue;
                }
                for lambda in [1, p - 1] {
                    let fs = factor_xn_minus_lambda(pr(p), n, FieldElement::new(lambda as u64, p).unwrap())
                        .unwrap();
                    let prod = fs.iter().fold(Poly::one(pr(p), 1), |acc, f| acc.mul_raw(f));
                    assert_eq!(prod, Poly::xn_minus(n, ChainElement::constant(pr(p), 1, lambda)));
                    for (i, f) in fs.iter().enumerate() {
                        assert!(f.is_monic());
                        if (p as usize).pow((f.degree().unwrap() / 2) as u32) <= 5000 {
                            assert!(is_irreducible_brute(f), "{f} over F_{p}");
                        }
                        for g in &fs[i + 1..] {
                            assert!(poly_gcd(f, g).unwrap().is_one());
                        }
                    }
                    if lambda == 1 {
                        assert_eq!(fs.len(), cyclotomic_coset_count(p as u64, n as u64));
                    }
                }
            }
        }
    }

    #[test]
    fn factor_larger_cases() {
        let fs = factor_xn_minus_lambda(pr(3), 64, FieldElement::new(1, 3).unwrap()).unwrap();
        assert_eq!(fs.len(), cyclotomic_coset_count(3, 64));
        let fs = factor_xn_minus_lambda(pr(13), 18, FieldElement::new(1, 13).unwrap()).unwrap();
        assert_eq!(fs.len(), 10);
        let prod = fs.iter().fold(Poly::one(pr(13), 1), |acc, f| acc.mul_raw(f));
        assert_eq!(prod, poly("x^18-1", 13));
    }

    #[test]
    fn reciprocal_examples() {
        assert_eq!(reciprocal(&poly("x^2+x+1", 2)).unwrap(), poly("x^2+x+1", 2));
        assert_eq!(reciprocal(&poly("x+2", 5)).unwrap(), poly("2x+1", 5));
        assert_eq!(
            reciprocal(&poly("x^3+3x^2+5x+4", 17)).unwrap(),
            poly("4x^3+5x^2+3x+1", 17)
        );
        assert_eq!(reciprocal(&poly("x^2+x", 5)), Err(Error::ZeroConstantTerm));
    }

    #[test]
    fn hat_examples() {
        assert_eq!(
            hat(&poly("x+16", 17), 8, &one(17)).unwrap(),
            poly("x^7+x^6+x^5+x^4+x^3+x^2+x+1", 17)
        );
        let f0 = ["x+1", "x+2", "x+4", "x+8", "x+16"]
            .iter()
            .fold(Poly::one(pr(17), 1), |acc, t| acc.mul_raw(&poly(t, 17)));
        assert_eq!(hat(&f0, 8, &one(17)).unwrap(), poly("x^3+3x^2+5x+4", 17));
        assert!(hat(&poly("x^8-1", 17), 8, &one(17)).unwrap().is_one());
        assert_eq!(hat(&poly("x+3", 17), 8, &one(17)), Err(Error::NotADivisor));
    }

    #[test]
    fn rho_examples() {
        let f = poly("x^3+2x+1", 5);
        assert_eq!(rho_substitute(&f, &one(5), 4).unwrap(), f);
        let mu = ChainElement::constant(pr(5), 1, 4);
        assert_eq!(rho_substitute(&poly("x+1", 5), &mu, 2).unwrap(), poly("4x+1", 5));
        let mu = ChainElement::constant(pr(5), 1, 2);
        assert_eq!(rho_substitute(&poly("x^2+1", 5), &mu, 4).unwrap(), poly("4x^2+1", 5));
        let zero = ChainElement::zero(pr(5), 1);
        assert_eq!(rho_substitute(&f, &zero, 4), Err(Error::NotAUnit));
    }

    #[test]
    fn rho_is_a_ring_isomorphism() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        // The substitution is multiplicative exactly when mu^(n-1) = 1.
        let configs: [(u32, u8, [u32; 3]); 5] = [
            (5, 1, [2, 0, 0]),
            (13, 1, [5, 0, 0]),
            (3, 2, [2, 1, 0]),
            (5, 3, [3, 1, 4]),
            (2, 3, [1, 1, 1]),
        ];
        for (p, k, mu) in configs {
            let prime = pr(p);
            let mu = ChainElement::new(prime, &mu[..k as usize]).unwrap();
            let n = crate::chain_ring::unit_order_chain(&mu).unwrap() as usize + 1;
            let one = ChainElement::one(prime, k);
            let random = |rng: &mut ChaCha8Rng| {
                let coeffs = (0..n)
                    .map(|_| {
                        let c: Vec<u32> = (0..k).map(|_| rng.random_range(0..p)).collect();
                        ChainElement::new(prime, &c).unwrap()
                    })
                    .collect();
                Poly::new(prime, k, coeffs).unwrap()
            };
            for _ in 0..1000 {
                let f = random(&mut rng);
                let g = random(&mut rng);
                let lhs = rho_substitute(&f.mul_raw(&g).reduce_mod_xn_minus(n, &one), &mu, n).unwrap();
                let rhs = rho_substitute(&f, &mu, n)
                    .unwrap()
                    .mul_raw(&rho_substitute(&g, &mu, n).unwrap())
                    .reduce_mod_xn_minus(n, &mu);
                assert_eq!(lhs, rhs);
                let sum = rho_substitute(&f.add_raw(&g), &mu, n).unwrap();
                assert_eq!(
                    sum,
                    rho_substitute(&f, &mu, n).unwrap().add_raw(&rho_substitute(&g, &mu, n).unwrap())
                );
            }
        }
    }

    #[test]
    fn text_round_trip_over_chain_rings() {
        let f = Poly::parse("(1+u)x^2 + ux + 3 + u^2", pr(5), 3).unwrap();
        assert_eq!(f.to_string(), "(1+u)x^2 + ux + 3+u²");
        assert_eq!(Poly::parse(&f.to_string(), pr(5), 3).unwrap(), f);
        assert_eq!(poly("-x+1", 5), poly("4x+1", 5));
        assert_eq!(poly("x^8 - 1", 17).coeff(0).constant_term(), 16);
        assert!(Poly::parse("x^", pr(5), 1).is_err());
        assert!(Poly::parse("(1+u", pr(5), 2).is_err());
    }

    fn arb_poly(p: u32, max_len: usize) -> impl Strategy<Value = Poly> {
        prop::collection::vec(0..p, 1..max_len).prop_map(move |c| Poly::from_field(pr(p), &c))
    }

    proptest! {
        #[test]
        fn reciprocal_is_an_involution(f in arb_poly(7, 9), c in 1u32..7) {
            let mut coeffs = f.residues();
            if coeffs.is_empty() { coeffs.push(c); } else { coeffs[0] = c; }
            let f = Poly::from_field(pr(7), &coeffs);
            prop_assert_eq!(reciprocal(&reciprocal(&f).unwrap()).unwrap(), f);
        }

        #[test]
        fn reciprocal_is_multiplicative(f in arb_poly(5, 7), g in arb_poly(5, 7), a in 1u32..5, b in 1u32..5) {
            let mut fc = f.residues(); if fc.is_empty() { fc.push(a) } else { fc[0] = a }
            let mut gc = g.residues(); if gc.is_empty() { gc.push(b) } else { gc[0] = b }
            let f = Poly::from_field(pr(5), &fc);
            let g = Poly::from_field(pr(5), &gc);
            prop_assert_eq!(
                reciprocal(&f.mul_raw(&g)).unwrap(),
                reciprocal(&f).unwrap().mul_raw(&reciprocal(&g).unwrap())
            );
        }

        #[test]
        fn hat_times_divisor_is_the_modulus(n in 1usize..20, pick in any::<u64>()) {
            prop_assume!(n % 13 != 0);
            let p = pr(13);
            let lambda = FieldElement::new(1, 13).unwrap();
            let fs = factor_xn_minus_lambda(p, n, lambda).unwrap();
            let f = fs.iter().enumerate()
                .filter(|(i, _)| pick >> (i % 64) & 1 == 1)
                .fold(Poly::one(p, 1), |acc, (_, f)| acc.mul_raw(f));
            let h = hat(&f, n, &one(13)).unwrap();
            prop_assert_eq!(h.mul_raw(&f), Poly::xn_minus(n, one(13)));
        }

        #[test]
        fn divrem_reconstructs(f in arb_poly(11, 12), g in arb_poly(11, 6)) {
            prop_assume!(!g.is_zero());
            let (q, r) = poly_divrem(&f, &g).unwrap();
            prop_assert_eq!(q.mul_raw(&g).add_raw(&r), f);
            prop_assert!(r.degree().map_or(true, |d| d < g.degree().unwrap()));
        }
    }
}
