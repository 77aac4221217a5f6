//! Weight enumerators of codes over Z_p x R x S and their MacWilliams transforms.
//!
//! A code with q = r = s = n is read as a code of length n over the alphabet
//! Z_p x R x S. Symbols (a; a', b'; a'', b'', d'') are indexed
//! lexicographically with `a` most significant, so index 0 is the zero symbol.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::additive_code::{AdditiveCode, BlockProfile};
use crate::cyclotomic::CyclotomicInt;
use crate::error::{Error, Result};
use crate::gray::{gray_weight_r, gray_weight_s, lee_weight_zp, weights_flat};
use crate::linear_code::LinearCode;
use crate::prime_field::Prime;

/// Codes with more codewords than this are not enumerated.
pub const REGROUP_LIMIT: u128 = 1 << 24;

/// A symbol (a; a', b'; a'', b'', d'') of Z_p x R x S.
pub type Symbol = [u32; 6];

/// Position of a symbol in the lexicographic order, starting at 0.
pub fn symbol_index(p: Prime, f: &Symbol) -> usize {
    let p = p.get() as usize;
    f.iter().fold(0, |acc, &c| acc * p + c as usize)
}

pub fn symbol_at(p: Prime, mut idx: usize) -> Symbol {
    let pp = p.get() as usize;
    let mut f = [0u32; 6];
    for slot in f.iter_mut().rev() {
        *slot = (idx % pp) as u32;
        idx /= pp;
    }
    f
}

pub fn symbol_count(p: Prime) -> usize {
    (p.get() as usize).pow(6)
}

/// Componentwise product in Z_p x R x S.
pub fn symbol_mul(p: Prime, f: &Symbol, g: &Symbol) -> Symbol {
    let [a, a1, b1, a2, b2, d2] = *f;
    let [x, x1, y1, x2, y2, z2] = *g;
    [
        p.mul(a, x),
        p.mul(a1, x1),
        p.add(p.mul(a1, y1), p.mul(b1, x1)),
        p.mul(a2, x2),
        p.add(p.mul(a2, y2), p.mul(b2, x2)),
        p.add(p.add(p.mul(a2, z2), p.mul(b2, y2)), p.mul(d2, x2)),
    ]
}

/// Lee weight of a symbol: min(a, p - a) plus the Gray weights of the R and
/// S parts.
pub fn symbol_lee_weight(p: Prime, f: &Symbol) -> usize {
    lee_weight_zp(p, f[0]) + gray_weight_r(p, f[1], f[2]) + gray_weight_s(p, f[3], f[4], f[5])
}

/// Largest symbol Lee weight: 6 for p in {2, 3}, floor(p/2) + 5 beyond.
pub fn max_symbol_lee_weight(p: Prime) -> usize {
    (p.get() / 2) as usize + 5
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum EnumeratorKind {
    Complete,
    Hamming,
    Symmetrized,
    Lee,
}

/// A monomial as sorted (variable, exponent) pairs with nonzero exponents.
pub type Monomial = Vec<(usize, u32)>;

/// A sparse multivariate polynomial with exact integer coefficients.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Enumerator {
    kind: EnumeratorKind,
    vars: usize,
    terms: BTreeMap<Monomial, i128>,
}

impl Enumerator {
    pub fn new(kind: EnumeratorKind, vars: usize) -> Self {
        Enumerator {
            kind,
            vars,
            terms: BTreeMap::new(),
        }
    }

    /// Builds from dense exponent vectors.
    pub fn from_dense(kind: EnumeratorKind, vars: usize, terms: &[(Vec<u32>, i128)]) -> Result<Self> {
        let mut e = Enumerator::new(kind, vars);
        for (exps, c) in terms {
            if exps.len() != vars {
                return Err(Error::LengthMismatch {
                    expected: vars,
                    got: exps.len(),
                });
            }
            let mono = exps
                .iter()
                .enumerate()
                .filter(|(_, &x)| x > 0)
                .map(|(i, &x)| (i, x))
                .collect();
            e.add_term(mono, *c)?;
        }
        Ok(e)
    }

    pub fn kind(&self) -> EnumeratorKind {
        self.kind
    }

    pub fn vars(&self) -> usize {
        self.vars
    }

    pub fn terms(&self) -> &BTreeMap<Monomial, i128> {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, mono: Monomial, c: i128) -> Result<()> {
        if c == 0 {
            return Ok(());
        }
        let slot = self.terms.entry(mono.clone()).or_insert(0);
        *slot = slot.checked_add(c).ok_or(Error::Overflow)?;
        if *slot == 0 {
            self.terms.remove(&mono);
        }
        Ok(())
    }

    /// Coefficient of the monomial with the given dense exponents.
    pub fn coeff(&self, exps: &[u32]) -> i128 {
        let mono: Monomial = exps
            .iter()
            .enumerate()
            .filter(|(_, &x)| x > 0)
            .map(|(i, &x)| (i, x))
            .collect();
        self.terms.get(&mono).copied().unwrap_or(0)
    }

    pub fn dense_terms(&self) -> Vec<(Vec<u32>, i128)> {
        let mut out: Vec<(Vec<u32>, i128)> = self
            .terms
            .iter()
            .map(|(m, &c)| {
                let mut e = vec![0u32; self.vars];
                for &(i, x) in m {
                    e[i] = x;
                }
                (e, c)
            })
            .collect();
        out.sort_by(|a, b| b.0.cmp(&a.0));
        out
    }

    /// Value at the all-ones point, i.e. the number of codewords.
    pub fn eval_at_ones(&self) -> i128 {
        self.terms.values().sum()
    }

    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().map(|m| m.iter().map(|t| t.1).sum()).max()
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut degs = self.terms.keys().map(|m| m.iter().map(|t| t.1).sum::<u32>());
        match degs.next() {
            None => true,
            Some(d) => degs.all(|e| e == d),
        }
    }

    fn var_name(&self, i: usize) -> String {
        match self.kind {
            EnumeratorKind::Complete => format!("x_{}", i + 1),
            EnumeratorKind::Hamming | EnumeratorKind::Lee => ["x", "y"][i].to_string(),
            EnumeratorKind::Symmetrized => format!("W_{i}"),
        }
    }

    /// Evaluates at an integer point.
    pub fn eval(&self, point: &[i128]) -> Result<i128> {
        let mut acc = 0i128;
        for (m, &c) in &self.terms {
            let mut t = c;
            for &(i, e) in m {
                t = t.checked_mul(point[i].checked_pow(e).ok_or(Error::Overflow)?).ok_or(Error::Overflow)?;
            }
            acc = acc.checked_add(t).ok_or(Error::Overflow)?;
        }
        Ok(acc)
    }
}

impl fmt::Display for Enumerator {
    /// Renders monomials by decreasing dense exponent vector, e.g.
    /// `x^2 + 4xy + 59y^2`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms = self.dense_terms();
        if terms.is_empty() {
            return write!(f, "0");
        }
        let separated = self.kind != EnumeratorKind::Hamming && self.kind != EnumeratorKind::Lee;
        let mut out = String::new();
        for (n, (exps, c)) in terms.iter().enumerate() {
            let mut vars = Vec::new();
            for (i, &e) in exps.iter().enumerate() {
                if e == 0 {
                    continue;
                }
                let name = self.var_name(i);
                vars.push(if e == 1 { name } else { format!("{name}^{e}") });
            }
            let body = vars.join(if separated { "*" } else { "" });
            let (sign, mag) = if *c < 0 { ("-", -c) } else { ("+", *c) };
            if n == 0 {
                if sign == "-" {
                    out.push('-');
                }
            } else {
                out.push_str(&format!(" {sign} "));
            }
            if body.is_empty() {
                out.push_str(&mag.to_string());
            } else if mag == 1 {
                out.push_str(&body);
            } else {
                out.push_str(&format!("{mag}{}{body}", if separated { "*" } else { "" }));
            }
        }
        write!(f, "{out}")
    }
}

/// Codeword symbol sequences of a code with q = r = s = n.
pub fn regroup(c: &AdditiveCode) -> Result<Vec<Vec<Symbol>>> {
    let mut out = Vec::new();
    for_each_regrouped(c, |w| out.push(w.to_vec()))?;
    Ok(out)
}

fn block_length(profile: &BlockProfile) -> Result<usize> {
    let (q, r, s) = (profile.q(), profile.r(), profile.s());
    if q != r || r != s {
        return Err(Error::BlocksUnequal { q, r, s });
    }
    Ok(q)
}

fn for_each_regrouped<F: FnMut(&[Symbol])>(c: &AdditiveCode, mut f: F) -> Result<()> {
    let n = block_length(&c.profile())?;
    match c.size() {
        Some(sz) if sz <= REGROUP_LIMIT => {}
        _ => {
            return Err(Error::TooLarge(format!(
                "{}^{}",
                c.profile().p(),
                c.rank()
            )))
        }
    }
    let mut word = vec![[0u32; 6]; n];
    c.basis().for_each_vector(|v| {
        for (j, sym) in word.iter_mut().enumerate() {
            *sym = [
                v[j],
                v[n + 2 * j],
                v[n + 2 * j + 1],
                v[3 * n + 3 * j],
                v[3 * n + 3 * j + 1],
                v[3 * n + 3 * j + 2],
            ];
        }
        f(&word);
    });
    Ok(())
}

fn tally<F: FnMut(&[Symbol]) -> Monomial>(
    c: &AdditiveCode,
    kind: EnumeratorKind,
    vars: usize,
    mut key: F,
) -> Result<Enumerator> {
    let mut counts: HashMap<Monomial, i128> = HashMap::new();
    for_each_regrouped(c, |w| *counts.entry(key(w)).or_insert(0) += 1)?;
    let mut e = Enumerator::new(kind, vars);
    for (m, n) in counts {
        e.add_term(m, n)?;
    }
    Ok(e)
}

fn counts_to_monomial(counts: &BTreeMap<usize, u32>) -> Monomial {
    counts.iter().map(|(&i, &e)| (i, e)).collect()
}

pub fn complete_enumerator(c: &AdditiveCode) -> Result<Enumerator> {
    let p = c.profile().p();
    tally(c, EnumeratorKind::Complete, symbol_count(p), |w| {
        let mut counts = BTreeMap::new();
        for f in w {
            *counts.entry(symbol_index(p, f)).or_insert(0) += 1;
        }
        counts_to_monomial(&counts)
    })
}

pub fn hamming_enumerator(c: &AdditiveCode) -> Result<Enumerator> {
    tally(c, EnumeratorKind::Hamming, 2, |w| {
        let wt = w.iter().filter(|f| f.iter().any(|&x| x != 0)).count() as u32;
        bivariate(w.len() as u32 - wt, wt)
    })
}

pub fn symmetrized_enumerator(c: &AdditiveCode) -> Result<Enumerator> {
    let p = c.profile().p();
    tally(c, EnumeratorKind::Symmetrized, max_symbol_lee_weight(p) + 1, |w| {
        let mut counts = BTreeMap::new();
        for f in w {
            *counts.entry(symbol_lee_weight(p, f)).or_insert(0) += 1;
        }
        counts_to_monomial(&counts)
    })
}

fn bivariate(a: u32, b: u32) -> Monomial {
    let mut m = Vec::with_capacity(2);
    if a > 0 {
        m.push((0, a));
    }
    if b > 0 {
        m.push((1, b));
    }
    m
}

/// Hamming enumerator of the Gray image, in x^(N - w) y^w with N = q + 2r + 3s.
///
/// Any block profile is accepted.
pub fn lee_enumerator(c: &AdditiveCode) -> Result<Enumerator> {
    let profile = c.profile();
    match c.size() {
        Some(sz) if sz <= REGROUP_LIMIT => {}
        _ => return Err(Error::TooLarge(format!("{}^{}", profile.p(), c.rank()))),
    }
    let n = profile.len() as u32;
    let mut counts: HashMap<u32, i128> = HashMap::new();
    c.basis().for_each_vector(|v| {
        *counts.entry(weights_flat(&profile, v).gray as u32).or_insert(0) += 1;
    });
    let mut e = Enumerator::new(EnumeratorKind::Lee, 2);
    for (w, k) in counts {
        e.add_term(bivariate(n - w, w), k)?;
    }
    Ok(e)
}

/// Hamming enumerator of a linear code over Z_p.
pub fn linear_hamming_enumerator(c: &LinearCode) -> Result<Enumerator> {
    match c.space().size() {
        Some(sz) if sz <= REGROUP_LIMIT => {}
        _ => return Err(Error::TooLarge(format!("{}^{}", c.prime(), c.dimension()))),
    }
    let n = c.length() as u32;
    let mut counts: HashMap<u32, i128> = HashMap::new();
    c.space().for_each_vector(|v| {
        *counts.entry(v.iter().filter(|&&x| x != 0).count() as u32).or_insert(0) += 1;
    });
    let mut e = Enumerator::new(EnumeratorKind::Hamming, 2);
    for (w, k) in counts {
        e.add_term(bivariate(n - w, w), k)?;
    }
    Ok(e)
}

/// Specializes a complete enumerator: x_1 -> x, every other x_i -> y.
pub fn hamming_from_complete(w: &Enumerator) -> Result<Enumerator> {
    let mut e = Enumerator::new(EnumeratorKind::Hamming, 2);
    for (m, &c) in &w.terms {
        let (mut zero, mut other) = (0, 0);
        for &(i, x) in m {
            if i == 0 {
                zero += x;
            } else {
                other += x;
            }
        }
        e.add_term(bivariate(zero, other), c)?;
    }
    Ok(e)
}

/// Specializes a symmetrized enumerator: W_i -> x^(M - i) y^i with M the
/// largest symbol Lee weight.
pub fn lee_from_symmetrized(w: &Enumerator) -> Result<Enumerator> {
    let m_max = (w.vars - 1) as u32;
    let mut e = Enumerator::new(EnumeratorKind::Lee, 2);
    for (m, &c) in &w.terms {
        let (mut a, mut b) = (0, 0);
        for &(i, x) in m {
            a += (m_max - i as u32) * x;
            b += i as u32 * x;
        }
        e.add_term(bivariate(a, b), c)?;
    }
    Ok(e)
}

/// chi(f) = zeta^(sum of all six coefficients).
pub fn character(p: Prime, f: &Symbol) -> CyclotomicInt {
    let e = f.iter().fold(0u32, |acc, &c| p.add(acc, c % p.get()));
    CyclotomicInt::zeta_pow(p, e as u64)
}

/// chi(f_i f_j) for 0-based symbol indices.
pub fn char_matrix_entry(p: Prime, i: usize, j: usize) -> CyclotomicInt {
    character(p, &symbol_mul(p, &symbol_at(p, i), &symbol_at(p, j)))
}

/// The full matrix [chi(f_i f_j)], for p <= 3.
pub fn character_matrix(p: Prime) -> Result<Vec<Vec<CyclotomicInt>>> {
    if p.get() > 3 {
        return Err(Error::UnsupportedPrime(p.get()));
    }
    let n = symbol_count(p);
    Ok((0..n)
        .map(|i| (0..n).map(|j| char_matrix_entry(p, i, j)).collect())
        .collect())
}

/// Checks |C| W_{C-dual}(x) = W_C(P x) at eight seeded random points.
pub fn macwilliams_complete_check(c: &AdditiveCode) -> Result<bool> {
    macwilliams_pair_check(c, &c.dual())
}

/// Checks |C| W_D(x) = W_C(P x), which holds iff D has the complete
/// enumerator of the dual of C.
///
/// Both sides are evaluated exactly over Z[zeta_p] at eight points with
/// coordinates in [0, 97] drawn from a fixed seed.
pub fn macwilliams_pair_check(c: &AdditiveCode, d: &AdditiveCode) -> Result<bool> {
    let p = c.profile().p();
    if p.get() > 3 {
        return Err(Error::UnsupportedPrime(p.get()));
    }
    if c.profile() != d.profile() {
        return Err(Error::ProfileMismatch);
    }
    let wc = complete_enumerator(c)?;
    let wd = complete_enumerator(d)?;
    let size = c.size().ok_or(Error::Overflow)? as i128;
    let nsym = symbol_count(p);
    let mut rng = ChaCha8Rng::seed_from_u64(0x6d61_6377);
    // Variables that occur in either enumerator.
    let mut used: Vec<usize> = wc.terms.keys().flatten().map(|t| t.0).collect();
    used.sort_unstable();
    used.dedup();
    for _ in 0..8 {
        let point: Vec<i128> = (0..nsym).map(|_| rng.random_range(0..=97)).collect();
        let lhs = wd.eval(&point)?.checked_mul(size).ok_or(Error::Overflow)?;
        let mut transformed: HashMap<usize, CyclotomicInt> = HashMap::new();
        for &i in &used {
            let mut acc = CyclotomicInt::zero(p);
            for (j, &x) in point.iter().enumerate() {
                if x != 0 {
                    acc = acc.add(&char_matrix_entry(p, i, j).scale(x)?)?;
                }
            }
            transformed.insert(i, acc);
        }
        let mut rhs = CyclotomicInt::zero(p);
        for (m, &coef) in &wc.terms {
            let mut t = CyclotomicInt::from_int(p, coef);
            for &(i, e) in m {
                for _ in 0..e {
                    t = t.mul(&transformed[&i])?;
                }
            }
            rhs = rhs.add(&t)?;
        }
        if rhs != CyclotomicInt::from_int(p, lhs) {
            return Ok(false);
        }
    }
    Ok(true)
}

fn binomial_row(n: u32) -> Result<Vec<i128>> {
    let mut row = vec![1i128];
    for _ in 0..n {
        let mut next = vec![1i128; row.len() + 1];
        for i in 1..row.len() {
            next[i] = row[i - 1].checked_add(row[i]).ok_or(Error::Overflow)?;
        }
        row = next;
    }
    Ok(row)
}

/// (x + a y)^e as coefficients of x^(e-i) y^i.
fn linear_power(a: i128, e: u32) -> Result<Vec<i128>> {
    let binom = binomial_row(e)?;
    let mut out = Vec::with_capacity(e as usize + 1);
    let mut apow = 1i128;
    for (i, &b) in binom.iter().enumerate() {
        if i > 0 {
            apow = apow.checked_mul(a).ok_or(Error::Overflow)?;
        }
        out.push(b.checked_mul(apow).ok_or(Error::Overflow)?);
    }
    Ok(out)
}

/// W(x + a y, x - y) / size for a homogeneous bivariate W.
fn bivariate_transform(w: &Enumerator, a: i128, size: i128, kind: EnumeratorKind) -> Result<Enumerator> {
    if w.vars != 2 {
        return Err(Error::LengthMismatch {
            expected: 2,
            got: w.vars,
        });
    }
    if size <= 0 {
        return Err(Error::InexactDivision(size));
    }
    let mut acc: BTreeMap<u32, i128> = BTreeMap::new();
    for (m, &c) in &w.terms {
        let (mut ex, mut ey) = (0u32, 0u32);
        for &(i, e) in m {
            if i == 0 {
                ex = e;
            } else {
                ey = e;
            }
        }
        let left = linear_power(a, ex)?;
        let right = linear_power(-1, ey)?;
        for (i, &l) in left.iter().enumerate() {
            for (j, &r) in right.iter().enumerate() {
                let t = c
                    .checked_mul(l)
                    .and_then(|v| v.checked_mul(r))
                    .ok_or(Error::Overflow)?;
                let slot = acc.entry((i + j) as u32).or_insert(0);
                *slot = slot.checked_add(t).ok_or(Error::Overflow)?;
            }
        }
    }
    let n = w.degree().unwrap_or(0);
    let mut out = Enumerator::new(kind, 2);
    for (yexp, c) in acc {
        if c % size != 0 {
            return Err(Error::InexactDivision(size));
        }
        out.add_term(bivariate(n - yexp, yexp), c / size)?;
    }
    Ok(out)
}

/// (1/|C|) W_H(x + (p^6 - 1) y, x - y).
pub fn hamming_transform(w: &Enumerator, code_size: i128, p: Prime) -> Result<Enumerator> {
    let a = (p.get() as i128).pow(6) - 1;
    bivariate_transform(w, a, code_size, EnumeratorKind::Hamming)
}

/// (1/|C|) W_L(x + (p - 1) y, x - y); at p = 2 this is (x + y, x - y).
pub fn lee_transform(w: &Enumerator, code_size: i128, p: Prime) -> Result<Enumerator> {
    bivariate_transform(w, p.get() as i128 - 1, code_size, EnumeratorKind::Lee)
}

/// The matrix Q with Q[i][j] = sum of chi(f g) over symbols g of Lee weight j,
/// for any f of Lee weight i.
///
/// Fails with `RowCollapseFailure` if two symbols of equal Lee weight give
/// different rows or a class sum is not a rational integer.
pub fn symmetrized_matrix(p: Prime) -> Result<Vec<Vec<i128>>> {
    if p.get() > 3 {
        return Err(Error::UnsupportedPrime(p.get()));
    }
    let m = max_symbol_lee_weight(p) + 1;
    let nsym = symbol_count(p);
    let classes: Vec<usize> = (0..nsym).map(|i| symbol_lee_weight(p, &symbol_at(p, i))).collect();
    let mut rows: Vec<Option<Vec<CyclotomicInt>>> = vec![None; m];
    for i in 0..nsym {
        let mut row = vec![CyclotomicInt::zero(p); m];
        for j in 0..nsym {
            row[classes[j]] = row[classes[j]].add(&char_matrix_entry(p, i, j))?;
        }
        match &rows[classes[i]] {
            None => rows[classes[i]] = Some(row),
            Some(existing) if *existing == row => {}
            Some(_) => {
                return Err(Error::RowCollapseFailure(format!(
                    "Lee weight class {}",
                    classes[i]
                )))
            }
        }
    }
    rows.into_iter()
        .enumerate()
        .map(|(i, row)| {
            let row = row.unwrap_or_else(|| vec![CyclotomicInt::zero(p); m]);
            row.iter()
                .map(|c| {
                    c.as_integer()
                        .ok_or_else(|| Error::RowCollapseFailure(format!("class {i} sum {c}")))
                })
                .collect()
        })
        .collect()
}

/// (1/|C|) W_S(Q W), for p in {2, 3}.
pub fn symmetrized_transform(w: &Enumerator, code_size: i128, p: Prime) -> Result<Enumerator> {
    let q = symmetrized_matrix(p)?;
    let m = q.len();
    if w.vars != m {
        return Err(Error::LengthMismatch {
            expected: m,
            got: w.vars,
        });
    }
    if code_size <= 0 {
        return Err(Error::InexactDivision(code_size));
    }
    // Each W_i becomes the linear form sum_j Q[i][j] W_j.
    let forms: Vec<BTreeMap<Monomial, i128>> = q
        .iter()
        .map(|row| {
            row.iter()
                .enumerate()
                .filter(|(_, &c)| c != 0)
                .map(|(j, &c)| (vec![(j, 1)], c))
                .collect()
        })
        .collect();
    let mut acc: BTreeMap<Monomial, i128> = BTreeMap::new();
    for (mono, &c) in &w.terms {
        let mut prod: BTreeMap<Monomial, i128> = BTreeMap::from([(Vec::new(), c)]);
        for &(i, e) in mono {
            for _ in 0..e {
                prod = poly_mul(&prod, &forms[i])?;
            }
        }
        for (k, v) in prod {
            let slot = acc.entry(k).or_insert(0);
            *slot = slot.checked_add(v).ok_or(Error::Overflow)?;
        }
    }
    let mut out = Enumerator::new(EnumeratorKind::Symmetrized, m);
    for (k, v) in acc {
        if v % code_size != 0 {
            return Err(Error::InexactDivision(code_size));
        }
        out.add_term(k, v / code_size)?;
    }
    Ok(out)
}

fn mono_mul(a: &Monomial, b: &Monomial) -> Monomial {
    let mut map: BTreeMap<usize, u32> = a.iter().copied().collect();
    for &(i, e) in b {
        *map.entry(i).or_insert(0) += e;
    }
    map.into_iter().collect()
}

fn poly_mul(
    a: &BTreeMap<Monomial, i128>,
    b: &BTreeMap<Monomial, i128>,
) -> Result<BTreeMap<Monomial, i128>> {
    let mut out: BTreeMap<Monomial, i128> = BTreeMap::new();
    for (ma, &ca) in a {
        for (mb, &cb) in b {
            let t = ca.checked_mul(cb).ok_or(Error::Overflow)?;
            let slot = out.entry(mono_mul(ma, mb)).or_insert(0);
            *slot = slot.checked_add(t).ok_or(Error::Overflow)?;
        }
    }
    out.retain(|_, v| *v != 0);
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::additive_code::{BlockProfile, MixedWord};
    use crate::chain_ring::ChainElement;
    use crate::prime_field::FieldElement;

    fn pr(p: u32) -> Prime {
        Prime::new(p).unwrap()
    }

    fn c2() -> AdditiveCode {
        let prof = BlockProfile::new(2, 2, 2, 2).unwrap();
        let p = prof.p();
        let w = |zp: [u32; 2], r: [&str; 2], s: [&str; 2]| {
            MixedWord::new(
                prof,
                zp.iter().map(|&v| FieldElement::from_prime(v as u64, p)).collect(),
                r.iter().map(|t| ChainElement::parse(t, p, 2).unwrap()).collect(),
                s.iter().map(|t| ChainElement::parse(t, p, 3).unwrap()).collect(),
            )
            .unwrap()
        };
        AdditiveCode::span_closure(
            prof,
            &[
                w([1, 0], ["0", "u"], ["1+u^2", "0"]),
                w([0, 1], ["1+u", "0"], ["0", "1+u"]),
            ],
        )
        .unwrap()
    }

    #[test]
    fn symbol_indexing() {
        let p = pr(3);
        assert_eq!(symbol_index(p, &[0; 6]), 0);
        assert_eq!(symbol_index(p, &[0, 0, 0, 0, 0, 1]), 1);
        assert_eq!(symbol_index(p, &[1, 0, 0, 0, 0, 0]), 243);
        for i in 0..symbol_count(p) {
            assert_eq!(symbol_index(p, &symbol_at(p, i)), i);
        }
    }

    #[test]
    fn hamming_examples() {
        let c = c2();
        let wh = hamming_enumerator(&c).unwrap();
        assert_eq!(wh.to_string(), "x^2 + 4xy + 59y^2");
        assert_eq!(hamming_enumerator(&c.dual()).unwrap().to_string(), "x^2 + 4xy + 59y^2");
        let zero = AdditiveCode::zero(BlockProfile::new(2, 3, 3, 3).unwrap());
        assert_eq!(hamming_enumerator(&zero).unwrap().to_string(), "x^3");
        assert_eq!(regroup(&c).unwrap().len(), 64);
    }

    #[test]
    fn lee_examples() {
        let c = c2();
        assert_eq!(
            lee_enumerator(&c).unwrap().to_string(),
            "x^12 + x^11y + 2x^10y^2 + 5x^9y^3 + 8x^8y^4 + 9x^7y^5 + 8x^6y^6 + 11x^5y^7 + 11x^4y^8 + 6x^3y^9 + 2x^2y^10"
        );
        let wl = lee_enumerator(&c).unwrap();
        let dual = lee_transform(&wl, 64, pr(2)).unwrap();
        assert_eq!(dual, lee_enumerator(&c.dual()).unwrap());
        assert_eq!(lee_transform(&dual, 64, pr(2)).unwrap(), wl);
    }

    fn quadratic(terms: &[(usize, usize, i128)]) -> Enumerator {
        let dense: Vec<(Vec<u32>, i128)> = terms
            .iter()
            .map(|&(i, j, c)| {
                let mut e = vec![0u32; 7];
                e[i] += 1;
                e[j] += 1;
                (e, c)
            })
            .collect();
        Enumerator::from_dense(EnumeratorKind::Symmetrized, 7, &dense).unwrap()
    }

    #[test]
    fn symmetrized_examples() {
        let c = c2();
        let primal = quadratic(&[
            (0, 0, 1), (2, 2, 5), (3, 0, 1), (3, 2, 8), (2, 0, 2), (1, 0, 1), (1, 3, 3),
            (3, 5, 7), (4, 3, 11), (4, 5, 6), (3, 3, 3), (2, 1, 4), (5, 1, 1), (4, 1, 1),
            (4, 2, 4), (4, 4, 4), (5, 5, 2),
        ]);
        let dual = quadratic(&[
            (0, 0, 1), (3, 0, 2), (1, 1, 3), (4, 1, 5), (2, 1, 4), (5, 1, 2), (4, 2, 8),
            (2, 2, 3), (5, 2, 3), (1, 3, 2), (4, 3, 6), (3, 3, 5), (4, 4, 2), (3, 2, 8),
            (0, 2, 1), (3, 5, 4), (5, 4, 2), (0, 5, 1), (1, 6, 1), (4, 6, 1),
        ]);
        let ws = symmetrized_enumerator(&c).unwrap();
        assert_eq!(ws, primal);
        assert_eq!(symmetrized_enumerator(&c.dual()).unwrap(), dual);
        assert_eq!(symmetrized_transform(&ws, 64, pr(2)).unwrap(), dual);
        assert_eq!(lee_from_symmetrized(&ws).unwrap(), lee_enumerator(&c).unwrap());
        assert_eq!(
            hamming_from_complete(&complete_enumerator(&c).unwrap()).unwrap(),
            hamming_enumerator(&c).unwrap()
        );
    }

    #[test]
    fn full_space_complete_enumerator() {
        let prof = BlockProfile::new(2, 1, 1, 1).unwrap();
        let w = complete_enumerator(&AdditiveCode::full(prof)).unwrap();
        assert_eq!(w.len(), 64);
        assert!(w.terms().values().all(|&c| c == 1));
        assert_eq!(regroup(&AdditiveCode::full(prof)).unwrap().len(), 64);
        assert!(matches!(
            regroup(&AdditiveCode::full(BlockProfile::new(2, 1, 2, 1).unwrap())),
            Err(Error::BlocksUnequal { .. })
        ));
    }

    #[test]
    fn character_examples() {
        let p = pr(2);
        assert_eq!(character(p, &[0; 6]).as_integer(), Some(1));
        assert_eq!(character(p, &[1, 0, 0, 0, 0, 0]).as_integer(), Some(-1));
        assert_eq!(character(p, &[0, 0, 1, 0, 0, 0]).as_integer(), Some(-1));
        let i = symbol_index(p, &[1, 0, 0, 0, 0, 0]);
        assert_eq!(char_matrix_entry(p, i, i).as_integer(), Some(-1));
        for j in 0..64 {
            assert_eq!(char_matrix_entry(p, 0, j).as_integer(), Some(1));
        }
        assert!(character_matrix(pr(5)).is_err());
    }

    #[test]
    fn character_matrix_is_orthogonal_at_two() {
        let m = character_matrix(pr(2)).unwrap();
        for i in 0..64 {
            for j in 0..64 {
                let s: i128 = (0..64)
                    .map(|k| m[i][k].as_integer().unwrap() * m[j][k].as_integer().unwrap())
                    .sum();
                assert_eq!(s, if i == j { 64 } else { 0 });
            }
        }
    }

    #[test]
    fn symmetrized_matrix_collapses() {
        for p in [2, 3] {
            let q = symmetrized_matrix(pr(p)).unwrap();
            assert_eq!(q.len(), 7);
            let total: i128 = q[0].iter().sum();
            assert_eq!(total, (p as i128).pow(6));
        }
    }

    #[test]
    fn transforms_on_zero_code() {
        let prof = BlockProfile::new(2, 2, 2, 2).unwrap();
        let zero = AdditiveCode::zero(prof);
        let full = AdditiveCode::full(prof);
        let wh = hamming_transform(&hamming_enumerator(&zero).unwrap(), 1, pr(2)).unwrap();
        assert_eq!(wh, hamming_enumerator(&full).unwrap());
        let ws = symmetrized_transform(&symmetrized_enumerator(&zero).unwrap(), 1, pr(2)).unwrap();
        assert_eq!(ws, symmetrized_enumerator(&full).unwrap());
        assert_eq!(ws.eval_at_ones(), 1 << 12);
        let wl = lee_transform(&lee_enumerator(&zero).unwrap(), 1, pr(2)).unwrap();
        assert_eq!(wl, lee_enumerator(&full).unwrap());
        let bad = Enumerator::from_dense(EnumeratorKind::Hamming, 2, &[(vec![2, 0], 1), (vec![1, 1], 1)]).unwrap();
        assert!(matches!(hamming_transform(&bad, 64, pr(2)), Err(Error::InexactDivision(64))));
    }

    #[test]
    fn macwilliams_on_example_code() {
        let c = c2();
        assert!(macwilliams_complete_check(&c).unwrap());
        let prof = c.profile();
        assert!(macwilliams_pair_check(&AdditiveCode::full(prof), &AdditiveCode::zero(prof)).unwrap());
        assert!(!macwilliams_pair_check(&c, &c.dual().dual()).unwrap() || c == c.dual());
    }
}
