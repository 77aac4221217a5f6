//! JSON and text forms of codes, words, polynomials and enumerators.
//!
//! Ring elements are coefficient arrays `[a, b, d]` for a + bu + du^2; a bare
//! integer is accepted for a constant. Polynomials are arrays of such
//! coefficients, lowest degree first.

use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::additive_code::{
    AdditiveCode, BlockProfile, CongruencePolicy, GeneratorPolys, MixedWord, ShiftUnits,
};
use crate::chain_ring::ChainElement;
use crate::error::{Error, Result};
use crate::linear_code::LinearCode;
use crate::polynomial::Poly;
use crate::prime_field::{FieldElement, Prime};
use crate::weight_enum::{Enumerator, EnumeratorKind};

/// A ring element in JSON: `3` or `[3, 1]`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Scalar {
    Int(u32),
    Coeffs(Vec<u32>),
}

impl Scalar {
    fn to_element(&self, p: Prime, k: u8) -> Result<ChainElement> {
        let c: Vec<u32> = match self {
            Scalar::Int(a) => vec![*a],
            Scalar::Coeffs(c) => c.clone(),
        };
        if c.len() > k as usize {
            return Err(Error::WrongRing {
                expected: k,
                got: c.len() as u8,
            });
        }
        let mut padded = c;
        padded.resize(k as usize, 0);
        ChainElement::new(p, &padded)
    }

    fn from_element(c: &ChainElement) -> Scalar {
        if c.nilpotency() == 1 {
            Scalar::Int(c.constant_term())
        } else {
            Scalar::Coeffs(c.coeffs().to_vec())
        }
    }
}

/// The three blocks of a word.
pub type WordSpec = [Vec<Scalar>; 3];

pub type PolySpec = Vec<Scalar>;

/// A code given either by generator words (spanned as an S-module) or by
/// generator polynomials (spanned as an S[x]-module).
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CodeSpec {
    pub p: u32,
    #[serde(default)]
    pub q: usize,
    #[serde(default)]
    pub r: usize,
    #[serde(default)]
    pub s: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub mu: Option<[Scalar; 3]>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub generators: Option<Vec<WordSpec>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub f0: Option<PolySpec>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub g: Option<Vec<Option<PolySpec>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub h: Option<Vec<Option<PolySpec>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub l: Option<Vec<Option<PolySpec>>>,
    /// "ignore", "warn" or "reject".
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub policy: Option<String>,
}

pub fn from_json<T: for<'de> Deserialize<'de>>(text: &str) -> Result<T> {
    serde_json::from_str(text).map_err(|e| Error::MalformedJson(e.to_string()))
}

impl CodeSpec {
    pub fn from_json(text: &str) -> Result<Self> {
        from_json(text)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("serializable")
    }

    pub fn prime(&self) -> Result<Prime> {
        Prime::new(self.p)
    }

    pub fn profile(&self) -> Result<BlockProfile> {
        BlockProfile::new(self.p, self.q, self.r, self.s)
    }

    pub fn units(&self) -> Result<ShiftUnits> {
        let p = self.prime()?;
        match &self.mu {
            None => Ok(ShiftUnits::ones(p)),
            Some([m0, m1, m2]) => Ok(ShiftUnits {
                mu0: m0.to_element(p, 1)?,
                mu1: m1.to_element(p, 2)?,
                mu2: m2.to_element(p, 3)?,
            }),
        }
    }

    fn policy(&self) -> Result<CongruencePolicy> {
        match self.policy.as_deref() {
            None | Some("warn") => Ok(CongruencePolicy::Warn),
            Some("ignore") => Ok(CongruencePolicy::Ignore),
            Some("reject") => Ok(CongruencePolicy::Reject),
            Some(other) => Err(Error::Parse(format!("unknown policy {other:?}"))),
        }
    }

    fn has_polynomials(&self) -> bool {
        self.f0.is_some() || self.g.is_some() || self.h.is_some() || self.l.is_some()
    }

    pub fn build(&self) -> Result<AdditiveCode> {
        let profile = self.profile()?;
        if self.generators.is_some() && self.has_polynomials() {
            return Err(Error::Parse(
                "give either generator words or generator polynomials, not both".into(),
            ));
        }
        if self.has_polynomials() {
            let p = profile.p();
            let slot = |list: &Option<Vec<Option<PolySpec>>>, i: usize, k: u8| -> Result<Option<Poly>> {
                match list.as_ref().and_then(|v| v.get(i)).and_then(|x| x.as_ref()) {
                    None => Ok(None),
                    Some(spec) => poly_from_spec(p, k, spec).map(Some),
                }
            };
            let gens = GeneratorPolys {
                f0: self.f0.as_ref().map(|f| poly_from_spec(p, 1, f)).transpose()?,
                g0: slot(&self.g, 0, 1)?,
                g1: slot(&self.g, 1, 1)?,
                h0: slot(&self.h, 0, 1)?,
                h1: slot(&self.h, 1, 1)?,
                h2: slot(&self.h, 2, 1)?,
                l1: slot(&self.l, 0, 1)?,
                l2: slot(&self.l, 1, 1)?,
                l3: slot(&self.l, 2, 2)?,
            };
            return AdditiveCode::from_generator_polynomials(profile, &gens, &self.units()?, self.policy()?);
        }
        let words = self
            .generators
            .iter()
            .flatten()
            .map(|w| word_from_spec(profile, w))
            .collect::<Result<Vec<_>>>()?;
        AdditiveCode::span_closure(profile, &words)
    }

    /// A spec listing a Z_p basis of the code as generator words.
    pub fn from_code(code: &AdditiveCode) -> CodeSpec {
        let prof = code.profile();
        CodeSpec {
            p: prof.p().get(),
            q: prof.q(),
            r: prof.r(),
            s: prof.s(),
            generators: Some(code.basis_words().iter().map(word_to_spec).collect()),
            ..CodeSpec::default()
        }
    }
}

pub fn word_from_spec(profile: BlockProfile, w: &WordSpec) -> Result<MixedWord> {
    let p = profile.p();
    let zp = w[0]
        .iter()
        .map(|x| x.to_element(p, 1).map(|c| c.as_field()))
        .collect::<Result<Vec<FieldElement>>>()?;
    let r = w[1].iter().map(|x| x.to_element(p, 2)).collect::<Result<Vec<_>>>()?;
    let s = w[2].iter().map(|x| x.to_element(p, 3)).collect::<Result<Vec<_>>>()?;
    MixedWord::new(profile, zp, r, s)
}

pub fn word_to_spec(w: &MixedWord) -> WordSpec {
    [
        w.zp_block().iter().map(|a| Scalar::Int(a.value())).collect(),
        w.r_block().iter().map(|c| Scalar::Coeffs(c.coeffs().to_vec())).collect(),
        w.s_block().iter().map(|c| Scalar::Coeffs(c.coeffs().to_vec())).collect(),
    ]
}

fn split_blocks(text: &str) -> Vec<&str> {
    text.trim()
        .trim_start_matches('(')
        .trim_end_matches(')')
        .split([';', '|'])
        .map(str::trim)
        .collect()
}

fn split_entries(block: &str) -> Vec<&str> {
    if block.is_empty() {
        Vec::new()
    } else {
        block.split(',').map(str::trim).collect()
    }
}

/// Parses block notation `(1,0;0,u;1+u^2,0)`: the Z_p, R and S blocks
/// separated by semicolons. The display form `(1,0 | 0,u | 1+u²,0)` is
/// accepted too.
pub fn parse_word(profile: BlockProfile, text: &str) -> Result<MixedWord> {
    let blocks = split_blocks(text);
    if blocks.len() != 3 {
        return Err(Error::Parse(format!("expected three ';'-separated blocks in {text:?}")));
    }
    let p = profile.p();
    let zp = split_entries(blocks[0])
        .into_iter()
        .map(|t| ChainElement::parse(t, p, 1).map(|c| c.as_field()))
        .collect::<Result<Vec<_>>>()?;
    let r = split_entries(blocks[1])
        .into_iter()
        .map(|t| ChainElement::parse(t, p, 2))
        .collect::<Result<Vec<_>>>()?;
    let s = split_entries(blocks[2])
        .into_iter()
        .map(|t| ChainElement::parse(t, p, 3))
        .collect::<Result<Vec<_>>>()?;
    MixedWord::new(profile, zp, r, s)
}

/// Parses symbol notation `(1,0,1+u^2;0,u,0)` for q = r = s = n: one
/// (Z_p, R, S) triple per coordinate.
pub fn parse_symbol_word(profile: BlockProfile, text: &str) -> Result<MixedWord> {
    let n = profile.q();
    if profile.r() != n || profile.s() != n {
        return Err(Error::BlocksUnequal {
            q: profile.q(),
            r: profile.r(),
            s: profile.s(),
        });
    }
    let coords = split_blocks(text);
    if coords.len() != n {
        return Err(Error::LengthMismatch {
            expected: n,
            got: coords.len(),
        });
    }
    let p = profile.p();
    let (mut zp, mut r, mut s) = (Vec::new(), Vec::new(), Vec::new());
    for c in coords {
        let parts = split_entries(c);
        if parts.len() != 3 {
            return Err(Error::Parse(format!("expected a, b, c in {c:?}")));
        }
        zp.push(ChainElement::parse(parts[0], p, 1)?.as_field());
        r.push(ChainElement::parse(parts[1], p, 2)?);
        s.push(ChainElement::parse(parts[2], p, 3)?);
    }
    MixedWord::new(profile, zp, r, s)
}

pub fn poly_from_spec(p: Prime, k: u8, spec: &PolySpec) -> Result<Poly> {
    let coeffs = spec.iter().map(|c| c.to_element(p, k)).collect::<Result<Vec<_>>>()?;
    Poly::new(p, k, coeffs)
}

pub fn poly_to_spec(f: &Poly) -> PolySpec {
    f.coeffs().iter().map(Scalar::from_element).collect()
}

/// A linear code over Z_p given by generator rows.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct LinearCodeSpec {
    pub p: u32,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub n: Option<usize>,
    pub rows: Vec<Vec<u32>>,
}

impl LinearCodeSpec {
    pub fn from_json(text: &str) -> Result<Self> {
        from_json(text)
    }

    pub fn build(&self) -> Result<LinearCode> {
        let n = match (self.n, self.rows.first()) {
            (Some(n), _) => n,
            (None, Some(r)) => r.len(),
            (None, None) => return Err(Error::Parse("n is required when there are no rows".into())),
        };
        LinearCode::new(Prime::new(self.p)?, n, &self.rows)
    }

    pub fn from_code(c: &LinearCode) -> Self {
        LinearCodeSpec {
            p: c.prime().get(),
            n: Some(c.length()),
            rows: c.generator().to_vec(),
        }
    }
}

fn kind_name(kind: EnumeratorKind) -> &'static str {
    match kind {
        EnumeratorKind::Complete => "complete",
        EnumeratorKind::Hamming => "hamming",
        EnumeratorKind::Symmetrized => "symmetrized",
        EnumeratorKind::Lee => "lee",
    }
}

pub fn parse_kind(text: &str) -> Result<EnumeratorKind> {
    match text {
        "complete" => Ok(EnumeratorKind::Complete),
        "hamming" => Ok(EnumeratorKind::Hamming),
        "symmetrized" => Ok(EnumeratorKind::Symmetrized),
        "lee" => Ok(EnumeratorKind::Lee),
        other => Err(Error::Parse(format!("unknown enumerator kind {other:?}"))),
    }
}

fn exact(c: i128) -> Value {
    match i64::try_from(c) {
        Ok(v) => json!(v),
        Err(_) => json!(c.to_string()),
    }
}

/// `{"kind", "vars", "terms": [{"exponents": [...], "coeff"}]}` with dense
/// exponent vectors in decreasing order.
pub fn enumerator_to_json(w: &Enumerator) -> Value {
    let terms: Vec<Value> = w
        .dense_terms()
        .into_iter()
        .map(|(e, c)| json!({"exponents": e, "coeff": exact(c)}))
        .collect();
    json!({"kind": kind_name(w.kind()), "vars": w.vars(), "terms": terms})
}
