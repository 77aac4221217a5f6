//! Gray maps R -> Z_p^2, S -> Z_p^3 and their extension to mixed words.
//!
//! phi1(a + ub) = (a + b, kb) and phi2(a + ub + u^2 d) = (a + b + d, k(b + d), b)
//! where k^2 = -1. Words are mapped block by block in transposed order: all
//! first Gray coordinates of a block, then all second ones, and so on.

use crate::additive_code::{AdditiveCode, BlockProfile, MixedWord};
use crate::chain_ring::ChainElement;
use crate::error::{Error, Result};
use crate::linear_code::LinearCode;
use crate::prime_field::{find_kappa, FieldElement, Prime};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GrayContext {
    p: Prime,
    kappa: u32,
}

impl GrayContext {
    pub fn new(p: Prime) -> Result<Self> {
        let kappa = find_kappa(p.get())?.value();
        Ok(GrayContext { p, kappa })
    }

    pub fn prime(&self) -> Prime {
        self.p
    }

    pub fn kappa(&self) -> FieldElement {
        FieldElement::from_prime(self.kappa as u64, self.p)
    }

    fn check(&self, x: &ChainElement, k: u8) -> Result<()> {
        if x.prime() != self.p {
            return Err(Error::ModulusMismatch(self.p.get(), x.prime().get()));
        }
        if x.nilpotency() != k {
            return Err(Error::WrongRing {
                expected: k,
                got: x.nilpotency(),
            });
        }
        Ok(())
    }

    fn phi1_raw(&self, a: u32, b: u32) -> [u32; 2] {
        let p = self.p;
        [p.add(a, b), p.mul(self.kappa, b)]
    }

    fn phi2_raw(&self, a: u32, b: u32, d: u32) -> [u32; 3] {
        let p = self.p;
        [p.add(p.add(a, b), d), p.mul(self.kappa, p.add(b, d)), b]
    }

    pub fn phi1(&self, x: &ChainElement) -> Result<[FieldElement; 2]> {
        self.check(x, 2)?;
        let c = x.coeffs();
        Ok(self.phi1_raw(c[0], c[1]).map(|v| FieldElement::from_prime(v as u64, self.p)))
    }

    pub fn phi2(&self, x: &ChainElement) -> Result<[FieldElement; 3]> {
        self.check(x, 3)?;
        let c = x.coeffs();
        Ok(self
            .phi2_raw(c[0], c[1], c[2])
            .map(|v| FieldElement::from_prime(v as u64, self.p)))
    }

    /// Gray image of a flattened word.
    pub fn phi_flat(&self, profile: &BlockProfile, v: &[u32]) -> Vec<u32> {
        let (q, r, s) = (profile.q(), profile.r(), profile.s());
        let mut out = vec![0u32; v.len()];
        out[..q].copy_from_slice(&v[..q]);
        let ro = q;
        for j in 0..r {
            let g = self.phi1_raw(v[ro + 2 * j], v[ro + 2 * j + 1]);
            out[ro + j] = g[0];
            out[ro + r + j] = g[1];
        }
        let so = q + 2 * r;
        for j in 0..s {
            let i = so + 3 * j;
            let g = self.phi2_raw(v[i], v[i + 1], v[i + 2]);
            out[so + j] = g[0];
            out[so + s + j] = g[1];
            out[so + 2 * s + j] = g[2];
        }
        out
    }

    pub fn phi_word(&self, w: &MixedWord) -> Result<Vec<u32>> {
        if w.profile().p() != self.p {
            return Err(Error::ModulusMismatch(self.p.get(), w.profile().p().get()));
        }
        Ok(self.phi_flat(&w.profile(), &w.flatten()))
    }

    /// The Z_p-linear code spanned by the images of the basis words.
    pub fn gray_image(&self, c: &AdditiveCode) -> Result<LinearCode> {
        let profile = c.profile();
        if profile.p() != self.p {
            return Err(Error::ModulusMismatch(self.p.get(), profile.p().get()));
        }
        let n = profile.len();
        Ok(LinearCode::from_space(
            c.basis().map(n, |r| self.phi_flat(&profile, r)),
        ))
    }
}

/// Lee weight of a residue: min(x, p - x).
pub fn lee_weight_zp(p: Prime, x: u32) -> usize {
    let x = x % p.get();
    x.min(p.get() - x) as usize
}

/// Hamming weight of phi1(a + ub). The value does not depend on kappa.
pub fn gray_weight_r(p: Prime, a: u32, b: u32) -> usize {
    (p.add(a, b) != 0) as usize + (b % p.get() != 0) as usize
}

/// Hamming weight of phi2(a + ub + u^2 d). The value does not depend on kappa.
pub fn gray_weight_s(p: Prime, a: u32, b: u32, d: u32) -> usize {
    (p.add(p.add(a, b), d) != 0) as usize
        + (p.add(b, d) != 0) as usize
        + (b % p.get() != 0) as usize
}

/// Both candidate weights of a word.
///
/// `lee` uses min(x, p - x) on the Z_p block and `gray` the Hamming weight
/// of the Gray image there. They agree on the R and S blocks always and on
/// the Z_p block for p in {2, 3}.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct LeeWeight {
    pub lee: usize,
    pub gray: usize,
}

impl LeeWeight {
    pub fn disagree(&self) -> bool {
        self.lee != self.gray
    }
}

pub(crate) fn weights_flat(profile: &BlockProfile, v: &[u32]) -> LeeWeight {
    let p = profile.p();
    let (q, r, s) = (profile.q(), profile.r(), profile.s());
    let zp_lee: usize = v[..q].iter().map(|&x| lee_weight_zp(p, x)).sum();
    let zp_gray = v[..q].iter().filter(|&&x| x != 0).count();
    let mut rest = 0;
    for j in 0..r {
        rest += gray_weight_r(p, v[q + 2 * j], v[q + 2 * j + 1]);
    }
    let so = q + 2 * r;
    for j in 0..s {
        let i = so + 3 * j;
        rest += gray_weight_s(p, v[i], v[i + 1], v[i + 2]);
    }
    LeeWeight {
        lee: zp_lee + rest,
        gray: zp_gray + rest,
    }
}

pub fn lee_weights(w: &MixedWord) -> LeeWeight {
    weights_flat(&w.profile(), &w.flatten())
}

/// Lee weight with min(x, p - x) on the Z_p block.
///
/// For p >= 5 this can differ from the Hamming weight of the Gray image;
/// such words are reported through `log::warn!`. [`lee_weights`] returns both.
pub fn lee_weight(w: &MixedWord) -> usize {
    let lw = lee_weights(w);
    if lw.disagree() {
        log::warn!(
            "Lee weight {} differs from Gray-image weight {} for p = {}",
            lw.lee,
            lw.gray,
            w.profile().p()
        );
    }
    lw.lee
}
