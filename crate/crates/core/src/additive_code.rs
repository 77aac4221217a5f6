//! Additive codes: S-submodules of Z_p^q x R^r x S^s.
//!
//! Codes are stored as Z_p row spaces over the flattened coordinates: q single
//! residues, then r pairs (a, b), then s triples (a, b, d).

use std::collections::VecDeque;
use std::fmt;

use crate::chain_ring::{is_unit, ChainElement};
use crate::error::{Error, Result};
use crate::linalg::RowSpace;
use crate::polynomial::{divides, Poly};
use crate::prime_field::{FieldElement, Prime};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct BlockProfile {
    p: Prime,
    q: usize,
    r: usize,
    s: usize,
}

impl BlockProfile {
    pub fn new(p: u32, q: usize, r: usize, s: usize) -> Result<Self> {
        Self::with_prime(Prime::new(p)?, q, r, s)
    }

    pub fn with_prime(p: Prime, q: usize, r: usize, s: usize) -> Result<Self> {
        if q + r + s == 0 {
            return Err(Error::EmptyProfile);
        }
        Ok(BlockProfile { p, q, r, s })
    }

    pub fn p(&self) -> Prime {
        self.p
    }

    pub fn q(&self) -> usize {
        self.q
    }

    pub fn r(&self) -> usize {
        self.r
    }

    pub fn s(&self) -> usize {
        self.s
    }

    /// Flattened length q + 2r + 3s.
    pub fn len(&self) -> usize {
        self.q + 2 * self.r + 3 * self.s
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub(crate) fn r_offset(&self) -> usize {
        self.q
    }

    pub(crate) fn s_offset(&self) -> usize {
        self.q + 2 * self.r
    }
}

/// A word of Z_p^q x R^r x S^s.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MixedWord {
    profile: BlockProfile,
    zp: Vec<FieldElement>,
    r: Vec<ChainElement>,
    s: Vec<ChainElement>,
}

impl MixedWord {
    pub fn new(
        profile: BlockProfile,
        zp: Vec<FieldElement>,
        r: Vec<ChainElement>,
        s: Vec<ChainElement>,
    ) -> Result<Self> {
        for (len, want) in [(zp.len(), profile.q), (r.len(), profile.r), (s.len(), profile.s)] {
            if len != want {
                return Err(Error::LengthMismatch {
                    expected: want,
                    got: len,
                });
            }
        }
        let p = profile.p;
        for a in &zp {
            if a.modulus() != p {
                return Err(Error::ModulusMismatch(p.get(), a.modulus().get()));
            }
        }
        for (block, k) in [(&r, 2u8), (&s, 3u8)] {
            for c in block.iter() {
                if c.prime() != p {
                    return Err(Error::ModulusMismatch(p.get(), c.prime().get()));
                }
                if c.nilpotency() != k {
                    return Err(Error::WrongRing {
                        expected: k,
                        got: c.nilpotency(),
                    });
                }
            }
        }
        Ok(MixedWord { profile, zp, r, s })
    }

    pub fn zero(profile: BlockProfile) -> Self {
        let p = profile.p;
        MixedWord {
            profile,
            zp: vec![FieldElement::from_prime(0, p); profile.q],
            r: vec![ChainElement::zero(p, 2); profile.r],
            s: vec![ChainElement::zero(p, 3); profile.s],
        }
    }

    pub fn profile(&self) -> BlockProfile {
        self.profile
    }

    pub fn zp_block(&self) -> &[FieldElement] {
        &self.zp
    }

    pub fn r_block(&self) -> &[ChainElement] {
        &self.r
    }

    pub fn s_block(&self) -> &[ChainElement] {
        &self.s
    }

    pub fn flatten(&self) -> Vec<u32> {
        let mut v = Vec::with_capacity(self.profile.len());
        v.extend(self.zp.iter().map(|a| a.value()));
        for c in self.r.iter().chain(&self.s) {
            v.extend_from_slice(c.coeffs());
        }
        v
    }

    pub fn unflatten(v: &[u32], profile: BlockProfile) -> Result<Self> {
        if v.len() != profile.len() {
            return Err(Error::LengthMismatch {
                expected: profile.len(),
                got: v.len(),
            });
        }
        let p = profile.p;
        let zp = v[..profile.q]
            .iter()
            .map(|&a| FieldElement::from_prime(a as u64, p))
            .collect();
        let r = v[profile.r_offset()..profile.s_offset()]
            .chunks(2)
            .map(|c| ChainElement::new(p, c))
            .collect::<Result<_>>()?;
        let s = v[profile.s_offset()..]
            .chunks(3)
            .map(|c| ChainElement::new(p, c))
            .collect::<Result<_>>()?;
        Ok(MixedWord { profile, zp, r, s })
    }
}

impl fmt::Display for MixedWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let zp: Vec<String> = self.zp.iter().map(|a| a.to_string()).collect();
        let r: Vec<String> = self.r.iter().map(|a| a.to_string()).collect();
        let s: Vec<String> = self.s.iter().map(|a| a.to_string()).collect();
        write!(f, "({} | {} | {})", zp.join(","), r.join(","), s.join(","))
    }
}

/// Multiplication by u on a flattened word.
pub(crate) fn times_u_flat(profile: &BlockProfile, v: &[u32]) -> Vec<u32> {
    let mut w = vec![0u32; v.len()];
    let ro = profile.r_offset();
    for j in 0..profile.r {
        w[ro + 2 * j + 1] = v[ro + 2 * j];
    }
    let so = profile.s_offset();
    for j in 0..profile.s {
        w[so + 3 * j + 1] = v[so + 3 * j];
        w[so + 3 * j + 2] = v[so + 3 * j + 1];
    }
    w
}

/// The S-valued form u^2 sum x x' + u sum y y' + sum z z'.
pub fn inner_product(v: &MixedWord, w: &MixedWord) -> Result<ChainElement> {
    if v.profile != w.profile {
        return Err(Error::ProfileMismatch);
    }
    let p = v.profile.p;
    let mut acc = ChainElement::zero(p, 3);
    let u = ChainElement::u(p, 3);
    let u2 = u.mul_raw(&u);
    let mut zp_sum = 0u32;
    for (a, b) in v.zp.iter().zip(&w.zp) {
        zp_sum = p.add(zp_sum, p.mul(a.value(), b.value()));
    }
    acc = acc.add_raw(&u2.scale(zp_sum));
    let mut r_sum = ChainElement::zero(p, 3);
    for (a, b) in v.r.iter().zip(&w.r) {
        r_sum = r_sum.add_raw(&a.embed(3).mul_raw(&b.embed(3)));
    }
    acc = acc.add_raw(&u.mul_raw(&r_sum));
    for (a, b) in v.s.iter().zip(&w.s) {
        acc = acc.add_raw(&a.mul_raw(b));
    }
    Ok(acc)
}

/// The units (mu0, mu1, mu2) of a constacyclic shift.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct ShiftUnits {
    pub mu0: ChainElement,
    pub mu1: ChainElement,
    pub mu2: ChainElement,
}

impl ShiftUnits {
    /// Builds units from coefficient slices; each entry is reduced mod p.
    pub fn new(p: Prime, mu0: &[u32], mu1: &[u32], mu2: &[u32]) -> Result<Self> {
        let pad = |c: &[u32], k: usize| -> Result<ChainElement> {
            if c.len() > k {
                return Err(Error::WrongRing {
                    expected: k as u8,
                    got: c.len() as u8,
                });
            }
            let mut v = c.to_vec();
            v.resize(k, 0);
            ChainElement::new(p, &v)
        };
        Ok(ShiftUnits {
            mu0: pad(mu0, 1)?,
            mu1: pad(mu1, 2)?,
            mu2: pad(mu2, 3)?,
        })
    }

    pub fn ones(p: Prime) -> Self {
        ShiftUnits {
            mu0: ChainElement::one(p, 1),
            mu1: ChainElement::one(p, 2),
            mu2: ChainElement::one(p, 3),
        }
    }

    pub fn inverse(&self) -> Result<Self> {
        Ok(ShiftUnits {
            mu0: self.mu0.inverse()?,
            mu1: self.mu1.inverse()?,
            mu2: self.mu2.inverse()?,
        })
    }

    /// Checks the units needed by the non-empty blocks of `profile`.
    pub fn validate(&self, profile: &BlockProfile) -> Result<()> {
        let used = [
            (profile.q, &self.mu0, 1u8),
            (profile.r, &self.mu1, 2),
            (profile.s, &self.mu2, 3),
        ];
        for (len, mu, k) in used {
            if mu.prime() != profile.p {
                return Err(Error::ModulusMismatch(profile.p.get(), mu.prime().get()));
            }
            if mu.nilpotency() != k {
                return Err(Error::WrongRing {
                    expected: k,
                    got: mu.nilpotency(),
                });
            }
            if len > 0 && !is_unit(mu) {
                return Err(Error::NotAUnit);
            }
        }
        Ok(())
    }
}

/// Rotates each block right by one, multiplying the wrapped entry by its unit.
pub(crate) fn shift_flat(profile: &BlockProfile, v: &[u32], units: &ShiftUnits) -> Vec<u32> {
    let p = profile.p;
    let mut w = vec![0u32; v.len()];
    let q = profile.q;
    if q > 0 {
        w[0] = p.mul(v[q - 1], units.mu0.constant_term());
        w[1..q].copy_from_slice(&v[..q - 1]);
    }
    for (off, len, k, mu) in [
        (profile.r_offset(), profile.r, 2usize, &units.mu1),
        (profile.s_offset(), profile.s, 3, &units.mu2),
    ] {
        if len == 0 {
            continue;
        }
        let last = ChainElement::new(p, &v[off + k * (len - 1)..off + k * len]).expect("valid");
        let wrapped = last.mul_raw(mu);
        w[off..off + k].copy_from_slice(wrapped.coeffs());
        w[off + k..off + k * len].copy_from_slice(&v[off..off + k * (len - 1)]);
    }
    w
}

pub fn constacyclic_shift(w: &MixedWord, units: &ShiftUnits) -> Result<MixedWord> {
    units.validate(&w.profile)?;
    MixedWord::unflatten(&shift_flat(&w.profile, &w.flatten(), units), w.profile)
}

/// What to do when a unit's order does not divide (block length - 1).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum CongruencePolicy {
    Ignore,
    #[default]
    Warn,
    Reject,
}

/// Generator polynomials of the form
/// (f0, 0, 0), (l1, g0 + u g1, 0), (l2, l3, h0 + u h1 + u^2 h2).
///
/// Missing g1 defaults to g0, h1 to h0 and h2 to h1; missing f0, g0 or h0
/// defaults to the block modulus (a zero generator); missing l's are zero.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct GeneratorPolys {
    pub f0: Option<Poly>,
    pub g0: Option<Poly>,
    pub g1: Option<Poly>,
    pub h0: Option<Poly>,
    pub h1: Option<Poly>,
    pub h2: Option<Poly>,
    pub l1: Option<Poly>,
    pub l2: Option<Poly>,
    pub l3: Option<Poly>,
}

/// An additive code, stored as its RREF Z_p basis.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct AdditiveCode {
    profile: BlockProfile,
    space: RowSpace,
}

impl AdditiveCode {
    pub fn zero(profile: BlockProfile) -> Self {
        AdditiveCode {
            profile,
            space: RowSpace::zero(profile.p, profile.len()),
        }
    }

    pub fn full(profile: BlockProfile) -> Self {
        AdditiveCode {
            profile,
            space: RowSpace::full(profile.p, profile.len()),
        }
    }

    /// Wraps flattened rows whose span must already be closed under u.
    pub fn from_flat_rows<I, R>(profile: BlockProfile, rows: I) -> Result<Self>
    where
        I: IntoIterator<Item = R>,
        R: AsRef<[u32]>,
    {
        let space = RowSpace::from_rows(profile.p, profile.len(), rows)?;
        let code = AdditiveCode { profile, space };
        if !code.is_module() {
            return Err(Error::NotAModule);
        }
        Ok(code)
    }

    pub(crate) fn from_space(profile: BlockProfile, space: RowSpace) -> Self {
        debug_assert_eq!(space.cols(), profile.len());
        AdditiveCode { profile, space }
    }

    fn is_module(&self) -> bool {
        self.space
            .rows()
            .iter()
            .all(|r| self.space.contains(&times_u_flat(&self.profile, r)))
    }

    /// The smallest S-submodule containing `gens`.
    pub fn span_closure(profile: BlockProfile, gens: &[MixedWord]) -> Result<Self> {
        let mut rows = Vec::with_capacity(3 * gens.len());
        for g in gens {
            if g.profile != profile {
                return Err(Error::ProfileMismatch);
            }
            let v = g.flatten();
            let uv = times_u_flat(&profile, &v);
            let u2v = times_u_flat(&profile, &uv);
            rows.extend([v, uv, u2v]);
        }
        let space = RowSpace::from_rows(profile.p, profile.len(), rows)?;
        Ok(AdditiveCode { profile, space })
    }

    pub fn profile(&self) -> BlockProfile {
        self.profile
    }

    pub fn rank(&self) -> usize {
        self.space.dim()
    }

    /// p^rank, if it fits in u128.
    pub fn size(&self) -> Option<u128> {
        self.space.size()
    }

    pub fn basis(&self) -> &RowSpace {
        &self.space
    }

    pub fn basis_words(&self) -> Vec<MixedWord> {
        self.space
            .rows()
            .iter()
            .map(|r| MixedWord::unflatten(r, self.profile).expect("basis rows have profile length"))
            .collect()
    }

    pub fn contains(&self, w: &MixedWord) -> Result<bool> {
        if w.profile != self.profile {
            return Err(Error::ProfileMismatch);
        }
        Ok(self.space.contains(&w.flatten()))
    }

    pub fn contains_code(&self, other: &AdditiveCode) -> Result<bool> {
        if other.profile != self.profile {
            return Err(Error::ProfileMismatch);
        }
        Ok(self.space.contains_space(&other.space))
    }

    /// The dual under the u-weighted S-valued inner product.
    pub fn dual(&self) -> AdditiveCode {
        let prof = self.profile;
        let p = prof.p;
        let n = prof.len();
        let ro = prof.r_offset();
        let so = prof.s_offset();
        let mut constraints = Vec::with_capacity(3 * self.rank());
        for g in self.space.rows() {
            // Coefficients of 1, u and u^2 in <v, g>, as functionals in v.
            let mut c0 = vec![0u32; n];
            let mut c1 = vec![0u32; n];
            let mut c2 = vec![0u32; n];
            c2[..prof.q].copy_from_slice(&g[..prof.q]);
            for j in 0..prof.r {
                let (a, b) = (g[ro + 2 * j], g[ro + 2 * j + 1]);
                c1[ro + 2 * j] = a;
                c2[ro + 2 * j] = b;
                c2[ro + 2 * j + 1] = a;
            }
            for j in 0..prof.s {
                let i = so + 3 * j;
                let (a, b, d) = (g[i], g[i + 1], g[i + 2]);
                c0[i] = a;
                c1[i] = b;
                c1[i + 1] = a;
                c2[i] = d;
                c2[i + 1] = b;
                c2[i + 2] = a;
            }
            constraints.extend([c0, c1, c2]);
        }
        let space = RowSpace::from_rows(p, n, constraints)
            .expect("constraint rows have profile length")
            .kernel();
        AdditiveCode {
            profile: prof,
            space,
        }
    }

    pub fn is_dual_containing(&self) -> bool {
        self.space.contains_space(&self.dual().space)
    }

    pub fn is_constacyclic(&self, units: &ShiftUnits) -> Result<bool> {
        units.validate(&self.profile)?;
        Ok(self
            .space
            .rows()
            .iter()
            .all(|r| self.space.contains(&shift_flat(&self.profile, r, units))))
    }

    /// All codewords, refusing when there are more than `limit`.
    pub fn codewords(&self, limit: u128) -> Result<Vec<MixedWord>> {
        match self.size() {
            Some(n) if n <= limit => {}
            _ => {
                return Err(Error::TooLarge(format!(
                    "{}^{}",
                    self.profile.p.get(),
                    self.rank()
                )))
            }
        }
        let mut out = Vec::new();
        self.space
            .for_each_vector(|v| out.push(MixedWord::unflatten(v, self.profile).expect("valid")));
        Ok(out)
    }

    fn project(&self, lo: usize, hi: usize) -> RowSpace {
        self.space.map(hi - lo, |r| r[lo..hi].to_vec())
    }

    /// Punctured codes on each non-empty block: (C_q, C_r, C_s).
    pub fn components(&self) -> (Option<AdditiveCode>, Option<AdditiveCode>, Option<AdditiveCode>) {
        let prof = self.profile;
        let p = prof.p;
        let part = |len: usize, lo: usize, hi: usize, q: usize, r: usize, s: usize| {
            (len > 0).then(|| {
                let profile = BlockProfile::with_prime(p, q, r, s).expect("non-empty block");
                AdditiveCode::from_space(profile, self.project(lo, hi))
            })
        };
        let so = prof.s_offset();
        (
            part(prof.q, 0, prof.q, prof.q, 0, 0),
            part(prof.r, prof.r_offset(), so, 0, prof.r, 0),
            part(prof.s, so, prof.len(), 0, 0, prof.s),
        )
    }

    /// Whether the code equals the product of its punctured components.
    pub fn is_separable(&self) -> bool {
        let (a, b, c) = self.components();
        let total: usize = [a, b, c].iter().flatten().map(|x| x.rank()).sum();
        total == self.rank()
    }

    /// Direct product of single-block codes. Missing blocks have length 0.
    pub fn direct_product(
        cq: Option<&AdditiveCode>,
        cr: Option<&AdditiveCode>,
        cs: Option<&AdditiveCode>,
    ) -> Result<AdditiveCode> {
        let mut p: Option<Prime> = None;
        let mut lens = [0usize; 3];
        for (slot, code) in [cq, cr, cs].iter().enumerate() {
            if let Some(c) = code {
                let prof = c.profile;
                let want = [prof.q, prof.r, prof.s];
                if want.iter().enumerate().any(|(i, &l)| i != slot && l != 0) {
                    return Err(Error::ProfileMismatch);
                }
                if p.is_some_and(|p| p != prof.p) {
                    return Err(Error::ModulusMismatch(p.unwrap().get(), prof.p.get()));
                }
                p = Some(prof.p);
                lens[slot] = want[slot];
            }
        }
        let p = p.ok_or(Error::EmptyProfile)?;
        let profile = BlockProfile::with_prime(p, lens[0], lens[1], lens[2])?;
        let n = profile.len();
        let offsets = [0, profile.r_offset(), profile.s_offset()];
        let mut rows = Vec::new();
        for (slot, code) in [cq, cr, cs].iter().enumerate() {
            if let Some(c) = code {
                for r in c.space.rows() {
                    let mut v = vec![0u32; n];
                    v[offsets[slot]..offsets[slot] + r.len()].copy_from_slice(r);
                    rows.push(v);
                }
            }
        }
        Ok(AdditiveCode::from_space(
            profile,
            RowSpace::from_rows(p, n, rows)?,
        ))
    }

    /// The code spanned over S[x] by the generator polynomials, closed under
    /// u and the constacyclic shift until the rank stops growing.
    pub fn from_generator_polynomials(
        profile: BlockProfile,
        gens: &GeneratorPolys,
        units: &ShiftUnits,
        policy: CongruencePolicy,
    ) -> Result<AdditiveCode> {
        units.validate(&profile)?;
        let p = profile.p;
        let lens = [profile.q, profile.r, profile.s];
        let product: usize = lens.iter().filter(|&&l| l > 0).product();
        if product % p.get() as usize == 0 {
            return Err(Error::GcdViolation {
                p: p.get(),
                n: product,
            });
        }
        check_congruences(&profile, units, policy)?;

        let mq = Poly::xn_minus(profile.q, units.mu0);
        let mr = Poly::xn_minus(profile.r, units.mu1);
        let ms = Poly::xn_minus(profile.s, units.mu2);
        let field_poly = |f: &Option<Poly>, name: &str, fallback: Option<&Poly>| -> Result<Poly> {
            match f {
                Some(f) => {
                    if f.prime() != p {
                        return Err(Error::ModulusMismatch(p.get(), f.prime().get()));
                    }
                    if f.nilpotency() != 1 {
                        return Err(Error::Parse(format!("{name} must have coefficients in Z_p")));
                    }
                    Ok(f.clone())
                }
                None => Ok(fallback.cloned().unwrap_or_else(|| Poly::zero(p, 1))),
            }
        };
        // The zero polynomial stands in for the block modulus.
        let f0 = field_poly(&gens.f0, "f0", None)?;
        let g0 = field_poly(&gens.g0, "g0", None)?;
        let g1 = field_poly(&gens.g1, "g1", Some(&g0))?;
        let h0 = field_poly(&gens.h0, "h0", None)?;
        let h1 = field_poly(&gens.h1, "h1", Some(&h0))?;
        let h2 = field_poly(&gens.h2, "h2", Some(&h1))?;
        let l1 = field_poly(&gens.l1, "l1", None)?;
        let l2 = field_poly(&gens.l2, "l2", None)?;
        let l3 = match &gens.l3 {
            None => Poly::zero(p, 2),
            Some(f) if f.nilpotency() == 1 => f.embed(2),
            Some(f) if f.nilpotency() == 2 => f.clone(),
            Some(_) => return Err(Error::Parse("l3 must have coefficients in R".into())),
        };

        if profile.q > 0 {
            check_link(&f0, &mq, "f0", "x^q - mu0", true)?;
        }
        if profile.r > 0 {
            check_link(&g1, &g0, "g1", "g0", false)?;
            check_link(&g0.embed(2), &mr, "g0", "x^r - mu1", true)?;
        }
        if profile.s > 0 {
            check_link(&h2, &h1, "h2", "h1", false)?;
            check_link(&h1, &h0, "h1", "h0", false)?;
            check_link(&h0.embed(3), &ms, "h0", "x^s - mu2", true)?;
        }

        let u2 = ChainElement::u(p, 2);
        let u3 = ChainElement::u(p, 3);
        let u3sq = u3.mul_raw(&u3);
        let g = g0.embed(2).add_raw(&g1.embed(2).scale(&u2));
        let h = h0
            .embed(3)
            .add_raw(&h1.embed(3).scale(&u3))
            .add_raw(&h2.embed(3).scale(&u3sq));
        let zero2 = Poly::zero(p, 2);
        let zero3 = Poly::zero(p, 3);
        let words = [
            (&f0, &zero2, &zero3),
            (&l1, &g, &zero3),
            (&l2, &l3, &h),
        ];
        let mut seeds = Vec::new();
        for (a, b, c) in words {
            let mut v = Vec::with_capacity(profile.len());
            v.extend(block_coeffs(a, profile.q, &units.mu0));
            v.extend(block_coeffs(b, profile.r, &units.mu1));
            v.extend(block_coeffs(c, profile.s, &units.mu2));
            seeds.push(v);
        }
        Ok(close_under_shift(&profile, seeds, units))
    }
}

/// Checks f | g, where a zero polynomial stands for the block modulus.
fn check_link(f: &Poly, g: &Poly, fname: &str, gname: &str, g_is_modulus: bool) -> Result<()> {
    let fail = || Error::DivisibilityViolation(format!("{fname} does not divide {gname}"));
    if g.is_zero() || (f.is_zero() && g_is_modulus) {
        return Ok(());
    }
    if f.is_zero() {
        return Err(fail());
    }
    let f = f.monic().map_err(|_| fail())?;
    if divides(&f, g)? {
        Ok(())
    } else {
        Err(fail())
    }
}

fn check_congruences(profile: &BlockProfile, units: &ShiftUnits, policy: CongruencePolicy) -> Result<()> {
    if policy == CongruencePolicy::Ignore {
        return Ok(());
    }
    let orders = [
        (profile.q, "q", crate::chain_ring::unit_order_chain(&units.mu0)),
        (profile.r, "r", crate::chain_ring::unit_order_chain(&units.mu1)),
        (profile.s, "s", crate::chain_ring::unit_order_chain(&units.mu2)),
    ];
    for (i, (len, name, ord)) in orders.into_iter().enumerate() {
        if len == 0 {
            continue;
        }
        let ord = ord?;
        if (len as u64) % ord != 1 % ord {
            let msg = format!("{name} = {len} is not 1 mod ord(mu{i}) = {ord}");
            match policy {
                CongruencePolicy::Reject => return Err(Error::CongruenceViolation(msg)),
                _ => log::warn!("{msg}"),
            }
        }
    }
    Ok(())
}

/// Coefficients of f mod (x^len - mu), one ring element per coordinate.
fn block_coeffs(f: &Poly, len: usize, mu: &ChainElement) -> Vec<u32> {
    let k = mu.nilpotency() as usize;
    let reduced = f.embed(mu.nilpotency()).reduce_mod_xn_minus(len, mu);
    let mut out = Vec::with_capacity(k * len);
    for i in 0..len {
        out.extend_from_slice(reduced.coeff(i).coeffs());
    }
    out
}

/// Closure of the seed vectors under u and the shift.
pub(crate) fn close_under_shift(
    profile: &BlockProfile,
    seeds: Vec<Vec<u32>>,
    units: &ShiftUnits,
) -> AdditiveCode {
    let mut space = RowSpace::zero(profile.p, profile.len());
    let mut queue: VecDeque<Vec<u32>> = seeds.into();
    while let Some(v) = queue.pop_front() {
        if space.insert(&v) {
            queue.push_back(times_u_flat(profile, &v));
            queue.push_back(shift_flat(profile, &v, units));
        }
    }
    AdditiveCode {
        profile: *profile,
        space,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chain_ring::mixed_scalar_mul;
    use proptest::prelude::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

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

    fn example_one() -> (BlockProfile, AdditiveCode) {
        let prof = BlockProfile::new(2, 2, 2, 2).unwrap();
        let gens = [
            word(prof, &[1, 0], &["0", "u"], &["1+u^2", "0"]),
            word(prof, &[0, 1], &["1+u", "0"], &["0", "1+u"]),
        ];
        (prof, AdditiveCode::span_closure(prof, &gens).unwrap())
    }

    #[test]
    fn flatten_examples() {
        let prof = BlockProfile::new(2, 1, 1, 1).unwrap();
        let w = word(prof, &[1], &["1+u"], &["u^2"]);
        assert_eq!(w.flatten(), vec![1, 1, 1, 0, 0, 1]);
        assert_eq!(MixedWord::unflatten(&w.flatten(), prof).unwrap(), w);
        assert_eq!(MixedWord::zero(prof).flatten(), vec![0; 6]);
        assert!(MixedWord::unflatten(&[0; 5], prof).is_err());
        assert!(BlockProfile::new(2, 0, 0, 0).is_err());
    }

    #[test]
    fn span_closure_examples() {
        let (prof, c) = example_one();
        assert_eq!(c.rank(), 6);
        for w in [
            word(prof, &[0, 0], &["0", "0"], &["u", "0"]),
            word(prof, &[0, 0], &["0", "0"], &["u^2", "0"]),
            word(prof, &[0, 0], &["u", "0"], &["0", "u+u^2"]),
            word(prof, &[0, 0], &["0", "0"], &["0", "u^2"]),
        ] {
            assert!(c.contains(&w).unwrap());
        }
        assert!(!c.contains(&word(prof, &[1, 1], &["0", "0"], &["0", "0"])).unwrap());
        assert_eq!(AdditiveCode::span_closure(prof, &[]).unwrap().rank(), 0);
        let single = BlockProfile::new(2, 1, 1, 1).unwrap();
        let c = AdditiveCode::span_closure(single, &[word(single, &[0], &["0"], &["u^2"])]).unwrap();
        assert_eq!(c.rank(), 1);
    }

    #[test]
    fn contains_basis_and_zero() {
        let (prof, c) = example_one();
        for w in c.basis_words() {
            assert!(c.contains(&w).unwrap());
        }
        assert!(c.contains(&MixedWord::zero(prof)).unwrap());
        let other = BlockProfile::new(2, 1, 1, 1).unwrap();
        assert_eq!(c.contains(&MixedWord::zero(other)), Err(Error::ProfileMismatch));
    }

    #[test]
    fn inner_product_examples() {
        let prof = BlockProfile::new(2, 1, 1, 1).unwrap();
        let p = prof.p();
        let e = |t: &str| ChainElement::parse(t, p, 3).unwrap();
        let a = word(prof, &[1], &["0"], &["0"]);
        assert_eq!(inner_product(&a, &a).unwrap(), e("u^2"));
        let b = word(prof, &[0], &["1"], &["0"]);
        assert_eq!(inner_product(&b, &b).unwrap(), e("u"));
        let c = word(prof, &[0], &["0"], &["u"]);
        let d = word(prof, &[0], &["0"], &["u^2"]);
        assert_eq!(inner_product(&c, &d).unwrap(), e("0"));
    }

    #[test]
    fn dual_examples() {
        let prof = BlockProfile::new(3, 1, 2, 1).unwrap();
        assert_eq!(AdditiveCode::full(prof).dual().rank(), 0);
        assert_eq!(AdditiveCode::zero(prof).dual().rank(), prof.len());
        let (prof, c) = example_one();
        let d = c.dual();
        assert_eq!(d.rank(), 6);
        // Basis words of the dual, regrouped into blocks.
        for w in [
            word(prof, &[0, 0], &["0", "u"], &["0", "0"]),
            word(prof, &[1, 0], &["0", "1"], &["0", "0"]),
            word(prof, &[0, 0], &["u", "0"], &["0", "u^2"]),
            word(prof, &[0, 1], &["u", "0"], &["0", "0"]),
            word(prof, &[0, 0], &["1+u", "0"], &["0", "u+u^2"]),
            word(prof, &[1, 0], &["0", "0"], &["u^2", "0"]),
        ] {
            assert!(d.contains(&w).unwrap(), "{w}");
        }
        for g in c.basis_words() {
            for h in d.basis_words() {
                assert!(inner_product(&g, &h).unwrap().is_zero());
            }
        }
    }

    #[test]
    fn shift_examples() {
        let p = Prime::new(5).unwrap();
        let ones = ShiftUnits::ones(p);
        let prof = BlockProfile::new(5, 2, 0, 0).unwrap();
        let w = word(prof, &[3, 4], &[], &[]);
        assert_eq!(constacyclic_shift(&w, &ones).unwrap(), word(prof, &[4, 3], &[], &[]));
        let prof = BlockProfile::new(5, 1, 0, 0).unwrap();
        let units = ShiftUnits::new(p, &[2], &[1], &[1]).unwrap();
        assert_eq!(
            constacyclic_shift(&word(prof, &[3], &[], &[]), &units).unwrap(),
            word(prof, &[1], &[], &[])
        );
        let bad = ShiftUnits::new(p, &[0], &[1], &[1]).unwrap();
        assert_eq!(constacyclic_shift(&word(prof, &[3], &[], &[]), &bad), Err(Error::NotAUnit));
        // Units of empty blocks are not consulted.
        let prof = BlockProfile::new(5, 0, 2, 1).unwrap();
        let w = word(prof, &[], &["1", "u"], &["2"]);
        let units = ShiftUnits::new(p, &[0], &[1, 1], &[3]).unwrap();
        assert_eq!(
            constacyclic_shift(&w, &units).unwrap(),
            word(prof, &[], &["u", "1"], &["1"])
        );
    }

    #[test]
    fn constacyclic_examples() {
        let prof = BlockProfile::new(3, 2, 2, 2).unwrap();
        let units = ShiftUnits::new(prof.p(), &[2], &[1, 1], &[2, 0, 1]).unwrap();
        assert!(AdditiveCode::full(prof).is_constacyclic(&units).unwrap());
        assert!(AdditiveCode::zero(prof).is_constacyclic(&units).unwrap());
    }

    #[test]
    fn generator_polynomial_examples() {
        let p = Prime::new(2).unwrap();
        let prof = BlockProfile::new(2, 1, 1, 1).unwrap();
        let ones = ShiftUnits::ones(p);
        let xm1 = Poly::parse("x+1", p, 1).unwrap();
        let gens = GeneratorPolys {
            f0: Some(xm1.clone()),
            g0: Some(xm1.clone()),
            h0: Some(xm1.clone()),
            ..Default::default()
        };
        let c = AdditiveCode::from_generator_polynomials(prof, &gens, &ones, CongruencePolicy::Warn)
            .unwrap();
        assert_eq!(c.rank(), 0);

        let prof = BlockProfile::new(3, 0, 0, 4).unwrap();
        let gens = GeneratorPolys {
            h0: Some(Poly::one(prof.p(), 1)),
            ..Default::default()
        };
        let c = AdditiveCode::from_generator_polynomials(
            prof,
            &gens,
            &ShiftUnits::ones(prof.p()),
            CongruencePolicy::Warn,
        )
        .unwrap();
        assert_eq!(c.rank(), 12);
    }

    #[test]
    fn generator_polynomial_errors() {
        let p = Prime::new(3).unwrap();
        let ones = ShiftUnits::ones(p);
        let prof = BlockProfile::new(3, 0, 4, 0).unwrap();
        let gens = GeneratorPolys {
            g0: Some(Poly::parse("x+1", p, 1).unwrap()),
            g1: Some(Poly::parse("x+2", p, 1).unwrap()),
            ..Default::default()
        };
        let err = AdditiveCode::from_generator_polynomials(prof, &gens, &ones, CongruencePolicy::Warn)
            .unwrap_err();
        assert_eq!(err, Error::DivisibilityViolation("g1 does not divide g0".into()));
        let gens = GeneratorPolys {
            g0: Some(Poly::parse("x^2+x+2", p, 1).unwrap()),
            ..Default::default()
        };
        assert!(matches!(
            AdditiveCode::from_generator_polynomials(prof, &gens, &ones, CongruencePolicy::Warn),
            Err(Error::DivisibilityViolation(_))
        ));
        let prof = BlockProfile::new(3, 0, 3, 0).unwrap();
        assert!(matches!(
            AdditiveCode::from_generator_polynomials(prof, &Default::default(), &ones, CongruencePolicy::Warn),
            Err(Error::GcdViolation { .. })
        ));
        let prof = BlockProfile::new(3, 2, 0, 0).unwrap();
        let units = ShiftUnits::new(p, &[2], &[1], &[1]).unwrap();
        assert!(matches!(
            AdditiveCode::from_generator_polynomials(prof, &Default::default(), &units, CongruencePolicy::Reject),
            Err(Error::CongruenceViolation(_))
        ));
        assert!(AdditiveCode::from_generator_polynomials(prof, &Default::default(), &units, CongruencePolicy::Warn).is_ok());
    }

    #[test]
    fn generator_polynomial_codes_are_constacyclic() {
        let p = Prime::new(3).unwrap();
        let prof = BlockProfile::new(3, 4, 2, 2).unwrap();
        let units = ShiftUnits::new(p, &[2], &[1], &[1]).unwrap();
        let poly = |t: &str| Some(Poly::parse(t, p, 1).unwrap());
        let gens = GeneratorPolys {
            f0: poly("x^2+x+2"),
            g0: poly("x+1"),
            g1: poly("x+1"),
            h0: poly("x^2-1"),
            h1: poly("x-1"),
            h2: poly("1"),
            l1: poly("x^3+2"),
            l2: poly("x+2"),
            l3: Some(Poly::parse("(1+u)x", p, 2).unwrap()),
        };
        let c = AdditiveCode::from_generator_polynomials(prof, &gens, &units, CongruencePolicy::Ignore)
            .unwrap();
        assert!(c.rank() > 0 && c.rank() < prof.len());
        assert!(c.is_constacyclic(&units).unwrap());
        assert!(c.dual().is_constacyclic(&units.inverse().unwrap()).unwrap());
    }

    #[test]
    fn separability_examples() {
        let prof = BlockProfile::new(2, 2, 2, 2).unwrap();
        assert!(AdditiveCode::full(prof).is_separable());
        let (_, c1) = example_one();
        assert!(!c1.is_separable());
        let (cq, cr, cs) = c1.components();
        let prod = AdditiveCode::direct_product(cq.as_ref(), cr.as_ref(), cs.as_ref()).unwrap();
        assert!(prod.is_separable());
        assert!(prod.contains_code(&c1).unwrap());
        let rs = BlockProfile::new(2, 0, 2, 1).unwrap();
        let (none, _, _) = AdditiveCode::full(rs).components();
        assert!(none.is_none());
    }

    fn all_words(prof: BlockProfile) -> Vec<MixedWord> {
        let n = prof.len();
        let p = prof.p().get() as usize;
        (0..p.pow(n as u32))
            .map(|mut idx| {
                let v: Vec<u32> = (0..n)
                    .map(|_| {
                        let c = (idx % p) as u32;
                        idx /= p;
                        c
                    })
                    .collect();
                MixedWord::unflatten(&v, prof).unwrap()
            })
            .collect()
    }

    #[test]
    fn form_is_s_bilinear() {
        let prof = BlockProfile::new(2, 1, 1, 1).unwrap();
        let words = all_words(prof);
        let p = prof.p();
        let scalars: Vec<ChainElement> = (0..8u32)
            .map(|i| ChainElement::new(p, &[i & 1, (i >> 1) & 1, (i >> 2) & 1]).unwrap())
            .collect();
        for v in &words {
            for w in &words {
                let base = inner_product(v, w).unwrap();
                for d in &scalars {
                    let lhs = inner_product(v, &mixed_scalar_mul(d, w).unwrap()).unwrap();
                    assert_eq!(lhs, d.mul_raw(&base));
                }
            }
        }
    }

    #[test]
    fn dual_agrees_with_brute_force() {
        let prof = BlockProfile::new(2, 1, 1, 1).unwrap();
        let words = all_words(prof);
        let gens = [word(prof, &[1], &["u"], &["1+u"])];
        let c = AdditiveCode::span_closure(prof, &gens).unwrap();
        let members = c.codewords(1 << 20).unwrap();
        let brute: Vec<&MixedWord> = words
            .iter()
            .filter(|v| members.iter().all(|c| inner_product(v, c).unwrap().is_zero()))
            .collect();
        let d = c.dual();
        assert_eq!(brute.len() as u128, d.size().unwrap());
        for v in brute {
            assert!(d.contains(v).unwrap());
        }
    }

    fn random_code(rng: &mut ChaCha8Rng, prof: BlockProfile, gens: usize) -> AdditiveCode {
        let p = prof.p().get();
        let words: Vec<MixedWord> = (0..gens)
            .map(|_| {
                let v: Vec<u32> = (0..prof.len()).map(|_| rng.random_range(0..p)).collect();
                MixedWord::unflatten(&v, prof).unwrap()
            })
            .collect();
        AdditiveCode::span_closure(prof, &words).unwrap()
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]

        #[test]
        fn dual_is_an_involution(seed in any::<u64>(), p in prop::sample::select(vec![2u32, 3]),
                                 q in 0usize..3, r in 0usize..3, s in 0usize..3, gens in 0usize..4) {
            prop_assume!(q + r + s > 0);
            let prof = BlockProfile::new(p, q, r, s).unwrap();
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let c = random_code(&mut rng, prof, gens);
            let d = c.dual();
            prop_assert_eq!(c.rank() + d.rank(), prof.len());
            prop_assert_eq!(d.dual(), c);
        }

        #[test]
        fn separable_codes_are_constacyclic_componentwise(seed in any::<u64>()) {
            let p = Prime::new(3).unwrap();
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let units = ShiftUnits::new(p, &[2], &[1, 1], &[2, 1, 0]).unwrap();
            let pq = BlockProfile::with_prime(p, 2, 0, 0).unwrap();
            let pr = BlockProfile::with_prime(p, 0, 2, 0).unwrap();
            let ps = BlockProfile::with_prime(p, 0, 0, 1).unwrap();
            let cq = random_code(&mut rng, pq, 1);
            let cr = random_code(&mut rng, pr, 1);
            let cs = random_code(&mut rng, ps, 1);
            let prod = AdditiveCode::direct_product(Some(&cq), Some(&cr), Some(&cs)).unwrap();
            prop_assert!(prod.is_separable());
            let each = cq.is_constacyclic(&units).unwrap()
                && cr.is_constacyclic(&units).unwrap()
                && cs.is_constacyclic(&units).unwrap();
            prop_assert_eq!(prod.is_constacyclic(&units).unwrap(), each);
        }
    }
}
