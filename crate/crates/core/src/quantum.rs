//! Cyclic codes over R = Z_p[u]/<u^2> from factorizations of x^s - 1, their
//! duals, and CSS quantum codes from dual-containing Gray images.
//!
//! Every irreducible factor f of x^s - 1 is assigned to one of three slots.
//! Slot 0 (F0) puts the whole of R[x]/<f> into the code, slot 1 (F1) only its
//! u-multiple, slot 2 (F2) nothing. The code is <F0^, u F1^> with
//! Fi^ = (x^s - 1) / Fi.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use rayon::prelude::*;

use crate::additive_code::{close_under_shift, AdditiveCode, BlockProfile, ShiftUnits};
use crate::error::{Error, Result};
use crate::gray::GrayContext;
use crate::linear_code::LinearCode;
use crate::polynomial::{factor_xn_minus_lambda, fp, Poly};
use crate::prime_field::{FieldElement, Prime};

/// Search cap used for CSS distances.
pub const DISTANCE_CAP: usize = 6;

/// Largest number of irreducible factors the search accepts.
pub const MAX_FACTORS: usize = 20;

/// A split of the irreducible factors of x^s - 1 into F0, F1, F2.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FactorAssignment {
    p: Prime,
    s: usize,
    factors: Vec<Vec<u32>>,
    slots: Vec<u8>,
}

impl FactorAssignment {
    /// `slots[i]` in {0, 1, 2} places the i-th factor (in the sorted order of
    /// `factor_xn_minus_lambda`) into F0, F1 or F2.
    pub fn new(p: Prime, s: usize, slots: Vec<u8>) -> Result<Self> {
        let factors = irreducible_factors(p, s)?;
        Self::from_parts(p, s, factors, slots)
    }

    fn from_parts(p: Prime, s: usize, factors: Vec<Vec<u32>>, slots: Vec<u8>) -> Result<Self> {
        if slots.len() != factors.len() {
            return Err(Error::LengthMismatch {
                expected: factors.len(),
                got: slots.len(),
            });
        }
        if let Some(&bad) = slots.iter().find(|&&x| x > 2) {
            return Err(Error::Parse(format!("slot {bad} is not 0, 1 or 2")));
        }
        Ok(FactorAssignment {
            p,
            s,
            factors,
            slots,
        })
    }

    /// Assignment with the given F0 and F1; F2 is the remaining cofactor.
    pub fn from_products(p: Prime, s: usize, f0: &Poly, f1: &Poly) -> Result<Self> {
        let factors = irreducible_factors(p, s)?;
        let f0 = fp::monic(p, &f0.residues());
        let f1 = fp::monic(p, &f1.residues());
        let slots: Vec<u8> = factors
            .iter()
            .map(|f| {
                if fp::rem(p, &f0, f).is_empty() {
                    0
                } else if fp::rem(p, &f1, f).is_empty() {
                    1
                } else {
                    2
                }
            })
            .collect();
        let fa = Self::from_parts(p, s, factors, slots)?;
        if fa.product(0) != f0 || fa.product(1) != f1 {
            return Err(Error::DivisibilityViolation(
                "F0 F1 must divide x^s - 1 with coprime factors".into(),
            ));
        }
        Ok(fa)
    }

    pub fn prime(&self) -> Prime {
        self.p
    }

    pub fn length(&self) -> usize {
        self.s
    }

    pub fn slots(&self) -> &[u8] {
        &self.slots
    }

    pub fn factors(&self) -> Vec<Poly> {
        self.factors.iter().map(|f| Poly::from_field(self.p, f)).collect()
    }

    fn product(&self, slot: u8) -> Vec<u32> {
        self.factors
            .iter()
            .zip(&self.slots)
            .filter(|(_, &x)| x == slot)
            .fold(vec![1], |acc, (f, _)| fp::mul(self.p, &acc, f))
    }

    fn degree(&self, slot: u8) -> usize {
        self.factors
            .iter()
            .zip(&self.slots)
            .filter(|(_, &x)| x == slot)
            .map(|(f, _)| f.len() - 1)
            .sum()
    }

    pub fn f0(&self) -> Poly {
        Poly::from_field(self.p, &self.product(0))
    }

    pub fn f1(&self) -> Poly {
        Poly::from_field(self.p, &self.product(1))
    }

    pub fn f2(&self) -> Poly {
        Poly::from_field(self.p, &self.product(2))
    }

    fn modulus(&self) -> Vec<u32> {
        let mut m = vec![0u32; self.s + 1];
        m[0] = self.p.neg(1);
        m[self.s] = 1;
        m
    }

    fn cofactor(&self, slot: u8) -> Vec<u32> {
        fp::divrem(self.p, &self.modulus(), &self.product(slot)).0
    }

    /// F0^ = (x^s - 1) / F0.
    pub fn hat_f0(&self) -> Poly {
        Poly::from_field(self.p, &self.cofactor(0))
    }

    /// F1^ = (x^s - 1) / F1.
    pub fn hat_f1(&self) -> Poly {
        Poly::from_field(self.p, &self.cofactor(1))
    }

    /// log_p of the code size: 2 deg F0 + deg F1.
    pub fn rank(&self) -> usize {
        2 * self.degree(0) + self.degree(1)
    }

    /// Index of the monic reciprocal of each factor.
    fn reciprocal_indices(&self) -> Vec<usize> {
        self.factors
            .iter()
            .map(|f| {
                let mut r = f.clone();
                r.reverse();
                let r = fp::monic(self.p, &r);
                self.factors.iter().position(|g| *g == r).expect("reciprocal of a factor of x^s - 1")
            })
            .collect()
    }

    fn permuted(&self, f: impl Fn(u8) -> u8) -> FactorAssignment {
        let rec = self.reciprocal_indices();
        let slots = rec.iter().map(|&j| f(self.slots[j])).collect();
        FactorAssignment {
            slots,
            ..self.clone()
        }
    }

    /// The split whose code is the dual: <F2*^, u F1*^>, with * the monic
    /// reciprocal.
    pub fn dual_assignment(&self) -> FactorAssignment {
        self.permuted(|x| 2 - x)
    }

    /// The split <F0*^, u F1*^> obtained by reciprocating each slot in place.
    pub fn reciprocal_assignment(&self) -> FactorAssignment {
        self.permuted(|x| x)
    }

    /// slot(f) + slot(f*) <= 2 for every factor f.
    pub fn predicts_dual_containing(&self) -> bool {
        let rec = self.reciprocal_indices();
        (0..self.slots.len()).all(|i| self.slots[i] + self.slots[rec[i]] <= 2)
    }
}

impl fmt::Display for FactorAssignment {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "F0 = {}, F1 = {}, F2 = {}", self.f0(), self.f1(), self.f2())
    }
}

fn irreducible_factors(p: Prime, s: usize) -> Result<Vec<Vec<u32>>> {
    Ok(factor_xn_minus_lambda(p, s, FieldElement::from_prime(1, p))?
        .iter()
        .map(|f| f.residues())
        .collect())
}

/// The cyclic code <F0^, u F1^> in R^s.
pub fn cyclic_code_from_assignment(fa: &FactorAssignment) -> AdditiveCode {
    let p = fa.p;
    let s = fa.s;
    let profile = BlockProfile::with_prime(p, 0, s, 0).expect("s >= 1");
    let mut seeds = Vec::new();
    for (slot, pos) in [(0u8, 0usize), (1, 1)] {
        let g = fa.cofactor(slot);
        if g.len() > s {
            // The cofactor is x^s - 1 itself, which vanishes in R[x]/<x^s - 1>.
            continue;
        }
        let mut v = vec![0u32; 2 * s];
        for (i, &c) in g.iter().enumerate() {
            v[2 * i + pos] = c;
        }
        seeds.push(v);
    }
    close_under_shift(&profile, seeds, &ShiftUnits::ones(p))
}

/// The dual of a cyclic code, checked against reciprocal-polynomial formulas.
#[derive(Debug, Clone)]
pub struct DualReport {
    /// The dual under the inner product, computed as a kernel.
    pub dual: AdditiveCode,
    /// `<F2*^, u F1*^>`.
    pub corrected: FactorAssignment,
    pub corrected_holds: bool,
    /// `<F0*^, u F1*^>`.
    pub literal: FactorAssignment,
    pub literal_holds: bool,
}

impl DualReport {
    /// A description of every formula that disagrees with the kernel dual.
    pub fn discrepancy(&self) -> Option<String> {
        let p = self.dual.profile().p().get();
        let mut notes = Vec::new();
        if !self.literal_holds {
            notes.push(format!(
                "<F0*^, uF1*^> has {p}^{} codewords but the dual has {p}^{}",
                self.literal.rank(),
                self.dual.rank()
            ));
        }
        if !self.corrected_holds {
            notes.push(format!("<F2*^, uF1*^> = <{}> differs from the dual", self.corrected));
        }
        (!notes.is_empty()).then(|| notes.join("; "))
    }
}

pub fn reciprocal_dual(fa: &FactorAssignment) -> DualReport {
    let dual = cyclic_code_from_assignment(fa).dual();
    let corrected = fa.dual_assignment();
    let literal = fa.reciprocal_assignment();
    let corrected_holds = cyclic_code_from_assignment(&corrected) == dual;
    let literal_holds = cyclic_code_from_assignment(&literal) == dual;
    DualReport {
        dual,
        corrected,
        corrected_holds,
        literal,
        literal_holds,
    }
}

pub fn is_dual_containing(c: &LinearCode) -> bool {
    c.is_dual_containing()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Distance {
    Exact(usize),
    /// The search cap was exhausted; only a lower bound is known.
    AtLeast(usize),
}

impl Distance {
    pub fn value(self) -> usize {
        match self {
            Distance::Exact(d) | Distance::AtLeast(d) => d,
        }
    }

    pub fn is_exact(self) -> bool {
        matches!(self, Distance::Exact(_))
    }

    fn of(c: &LinearCode, cap: usize) -> Result<Distance> {
        match c.min_distance(cap) {
            Ok(d) => Ok(Distance::Exact(d)),
            Err(Error::NotDetermined { lower_bound }) => Ok(Distance::AtLeast(lower_bound)),
            Err(e) => Err(e),
        }
    }
}

impl fmt::Display for Distance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Distance::Exact(d) => write!(f, "{d}"),
            Distance::AtLeast(d) => write!(f, ">={d}"),
        }
    }
}

/// Parameters [[n, k, d]]_p of a quantum code.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct QuantumParams {
    pub p: Prime,
    pub n: usize,
    pub k: usize,
    pub d: Distance,
}

impl QuantumParams {
    /// n + 2 - (k + 2d); never negative by the quantum Singleton bound.
    pub fn singleton_defect(&self) -> i64 {
        self.n as i64 + 2 - (self.k as i64 + 2 * self.d.value() as i64)
    }
}

impl fmt::Display for QuantumParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[[{}, {}, {}]]_{}", self.n, self.k, self.d, self.p)
    }
}

/// [[n, 2k - n, d]]_p for a dual-containing [n, k, d]_p code.
pub fn css(c: &LinearCode) -> Result<QuantumParams> {
    css_with_cap(c, DISTANCE_CAP)
}

pub fn css_with_cap(c: &LinearCode, cap: usize) -> Result<QuantumParams> {
    if c.length() == 0 || !c.is_dual_containing() {
        return Err(Error::NotDualContaining);
    }
    Ok(QuantumParams {
        p: c.prime(),
        n: c.length(),
        k: 2 * c.dimension() - c.length(),
        d: Distance::of(c, cap)?,
    })
}

/// A dual-containing cyclic code found by the search.
#[derive(Debug, Clone)]
pub struct SearchHit {
    pub assignment: FactorAssignment,
    /// Gray image parameters [2s, dim, d].
    pub gray_dimension: usize,
    pub params: QuantumParams,
}

/// All CSS parameters reachable from cyclic codes over R of length s whose
/// Gray image is dual-containing, one representative per parameter triple.
///
/// Results are sorted by (n, k, d, slot vector). Each representative is
/// rebuilt over R and its Gray image checked directly.
pub fn search_dual_containing(p: Prime, s: usize) -> Result<Vec<SearchHit>> {
    let gray = GrayContext::new(p)?;
    let factors = irreducible_factors(p, s)?;
    if factors.len() > MAX_FACTORS {
        return Err(Error::TooManyFactors(factors.len()));
    }
    let template = FactorAssignment::from_parts(p, s, factors.clone(), vec![0; factors.len()])?;
    let rec = template.reciprocal_indices();

    // Orbits {f, f*} and the admissible slot pairs on each.
    let mut orbits: Vec<(usize, usize)> = Vec::new();
    for (i, &j) in rec.iter().enumerate() {
        if i <= j {
            orbits.push((i, j));
        }
    }
    let mut assignments: Vec<Vec<u8>> = vec![vec![0; factors.len()]];
    for &(i, j) in &orbits {
        let choices: Vec<(u8, u8)> = if i == j {
            vec![(0, 0), (1, 1)]
        } else {
            (0..3u8)
                .flat_map(|a| (0..3u8).map(move |b| (a, b)))
                .filter(|(a, b)| a + b <= 2)
                .collect()
        };
        assignments = assignments
            .into_iter()
            .flat_map(|slots| {
                choices.iter().map(move |&(a, b)| {
                    let mut s = slots.clone();
                    s[i] = a;
                    s[j] = b;
                    s
                })
            })
            .collect();
    }

    // Distances of the Z_p cyclic codes A = <F0^> and B = <(F0 F1)^>, keyed by
    // the factor set of the check polynomial.
    let mask_of = |slots: &[u8], max_slot: u8| -> u32 {
        slots
            .iter()
            .enumerate()
            .filter(|(_, &x)| x <= max_slot)
            .fold(0u32, |m, (i, _)| m | (1 << i))
    };
    let mut masks: Vec<u32> = assignments
        .iter()
        .flat_map(|s| [mask_of(s, 0), mask_of(s, 1)])
        .filter(|&m| m != 0)
        .collect();
    masks.sort_unstable();
    masks.dedup();
    let distances: HashMap<u32, Distance> = masks
        .par_iter()
        .map(|&m| {
            let code = cyclic_zp_code(p, s, &factors, m);
            Distance::of(&code, DISTANCE_CAP).map(|d| (m, d))
        })
        .collect::<Result<_>>()?;

    let mut best: BTreeMap<(usize, Distance), Vec<u8>> = BTreeMap::new();
    for slots in assignments {
        let (ma, mb) = (mask_of(&slots, 0), mask_of(&slots, 1));
        if mb == 0 {
            continue;
        }
        let db = distances[&mb];
        let d = match (ma, db) {
            (0, Distance::Exact(x)) => Distance::Exact(2 * x),
            (0, Distance::AtLeast(x)) => Distance::AtLeast(2 * x),
            _ => combine(distances[&ma], db),
        };
        let dim: usize = factors
            .iter()
            .zip(&slots)
            .map(|(f, &x)| (f.len() - 1) * (2 - x as usize))
            .sum();
        let entry = best.entry((dim, d)).or_insert_with(|| slots.clone());
        if slots < *entry {
            *entry = slots;
        }
    }

    let n = 2 * s;
    let mut hits = Vec::with_capacity(best.len());
    for ((dim, fast_d), slots) in best {
        let assignment = FactorAssignment::from_parts(p, s, factors.clone(), slots)?;
        let image = gray.gray_image(&cyclic_code_from_assignment(&assignment))?;
        let params = css(&image)?;
        if image.dimension() != dim || params.d != fast_d {
            log::warn!(
                "fast search predicted [{n}, {dim}, {fast_d}] for {assignment}, direct check gives [{n}, {}, {}]",
                image.dimension(),
                params.d
            );
        }
        hits.push(SearchHit {
            assignment,
            gray_dimension: image.dimension(),
            params,
        });
    }
    hits.sort_by(|a, b| {
        (a.params.n, a.params.k, a.params.d, a.assignment.slots())
            .cmp(&(b.params.n, b.params.k, b.params.d, b.assignment.slots()))
    });
    hits.dedup_by(|a, b| a.params == b.params);
    Ok(hits)
}

/// min(d(A), 2 d(B)) with lower-bound bookkeeping.
fn combine(da: Distance, db: Distance) -> Distance {
    let two_b = match db {
        Distance::Exact(x) => Distance::Exact(2 * x),
        Distance::AtLeast(x) => Distance::AtLeast(2 * x),
    };
    match (da, two_b) {
        (Distance::Exact(a), Distance::Exact(b)) => Distance::Exact(a.min(b)),
        (Distance::Exact(a), Distance::AtLeast(b)) if a <= b => Distance::Exact(a),
        (Distance::AtLeast(a), Distance::Exact(b)) if b <= a => Distance::Exact(b),
        (x, y) => Distance::AtLeast(x.value().min(y.value())),
    }
}

/// The cyclic code over Z_p whose check polynomial is the product of the
/// factors in `mask`.
fn cyclic_zp_code(p: Prime, s: usize, factors: &[Vec<u32>], mask: u32) -> LinearCode {
    let g = factors
        .iter()
        .enumerate()
        .filter(|(i, _)| mask & (1 << i) == 0)
        .fold(vec![1u32], |acc, (_, f)| fp::mul(p, &acc, f));
    let k = s + 1 - g.len();
    let rows: Vec<Vec<u32>> = (0..k)
        .map(|i| {
            let mut r = vec![0u32; s];
            r[i..i + g.len()].copy_from_slice(&g);
            r
        })
        .collect();
    LinearCode::new(p, s, rows).expect("rows have length s")
}

/// Dual-containment of C_r x C_s over R x S, checked both on the product and
/// on each component.
///
/// Panics if the two verdicts differ, since the product's dual is the product
/// of the duals.
pub fn separable_rs_dual_containing(c_r: &AdditiveCode, c_s: &AdditiveCode) -> Result<bool> {
    let product = AdditiveCode::direct_product(None, Some(c_r), Some(c_s))?;
    let whole = product.is_dual_containing();
    let parts = c_r.is_dual_containing() && c_s.is_dual_containing();
    assert_eq!(whole, parts, "dual-containment of a separable code must split");
    Ok(whole)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polynomial::{poly_arith, PolyOp};

    fn pr(p: u32) -> Prime {
        Prime::new(p).unwrap()
    }

    fn field(p: u32, c: &[u32]) -> Poly {
        Poly::from_field(pr(p), c)
    }

    fn mul(a: &Poly, b: &Poly) -> Poly {
        poly_arith(a, b, PolyOp::Mul).unwrap()
    }

    fn all_assignments(p: u32, s: usize) -> Vec<FactorAssignment> {
        let m = irreducible_factors(pr(p), s).unwrap().len();
        (0..3usize.pow(m as u32))
            .map(|mut code| {
                let slots = (0..m)
                    .map(|_| {
                        let x = (code % 3) as u8;
                        code /= 3;
                        x
                    })
                    .collect();
                FactorAssignment::new(pr(p), s, slots).unwrap()
            })
            .collect()
    }

    #[test]
    fn trivial_assignments() {
        let full = FactorAssignment::new(pr(5), 4, vec![0; 4]).unwrap();
        let c = cyclic_code_from_assignment(&full);
        assert_eq!(c, AdditiveCode::full(c.profile()));
        assert!(reciprocal_dual(&full).dual.rank() == 0);
        let zero = FactorAssignment::new(pr(5), 4, vec![2; 4]).unwrap();
        assert_eq!(cyclic_code_from_assignment(&zero).rank(), 0);
        assert!(FactorAssignment::new(pr(5), 4, vec![0; 3]).is_err());
        assert!(FactorAssignment::new(pr(5), 4, vec![3; 4]).is_err());
        assert!(FactorAssignment::new(pr(5), 10, vec![0]).is_err());
    }

    #[test]
    fn cardinality_law_exhaustive() {
        for (p, smax) in [(2u32, 7usize), (3, 7)] {
            for s in 1..=smax {
                if s % p as usize == 0 {
                    continue;
                }
                for fa in all_assignments(p, s) {
                    let c = cyclic_code_from_assignment(&fa);
                    assert_eq!(c.rank(), fa.rank(), "{fa}");
                    assert!(c.is_constacyclic(&ShiftUnits::ones(pr(p))).unwrap());
                }
            }
        }
    }

    #[test]
    fn corrected_dual_formula_and_prefilter() {
        for (p, s) in [(2u32, 7usize), (3, 4), (3, 8), (5, 6)] {
            for fa in all_assignments(p, s) {
                let rep = reciprocal_dual(&fa);
                assert!(rep.corrected_holds, "{fa}");
                assert_eq!(rep.dual.rank() + fa.rank(), 2 * s);
                assert!(rep.dual.is_constacyclic(&ShiftUnits::ones(pr(p))).unwrap());
                let c = cyclic_code_from_assignment(&fa);
                assert_eq!(fa.predicts_dual_containing(), c.is_dual_containing(), "{fa}");
                assert_eq!(rep.literal_holds, rep.discrepancy().is_none());
            }
        }
    }

    #[test]
    fn literal_formula_fails_on_the_worked_example() {
        let fa = FactorAssignment::from_products(
            pr(17),
            8,
            &mul(&field(17, &[4, 5, 3, 1]), &field(17, &[1, 1])),
            &field(17, &[15, 1]),
        );
        assert!(fa.is_err());
        let f0 = [[1, 1], [2, 1], [4, 1], [8, 1], [16, 1]]
            .iter()
            .fold(field(17, &[1]), |acc, f| mul(&acc, &field(17, f)));
        let f1 = mul(&field(17, &[9, 1]), &field(17, &[13, 1]));
        let fa = FactorAssignment::from_products(pr(17), 8, &f0, &f1).unwrap();
        assert_eq!(fa.f2(), field(17, &[15, 1]));
        assert_eq!(fa.hat_f0().to_string(), "x^3 + 3x^2 + 5x + 4");
        let rep = reciprocal_dual(&fa);
        assert!(rep.corrected_holds);
        assert!(!rep.literal_holds);
        assert!(rep.discrepancy().unwrap().contains("17^12"));
        let gray = GrayContext::new(pr(17)).unwrap();
        let image = gray.gray_image(&cyclic_code_from_assignment(&fa)).unwrap();
        assert_eq!((image.length(), image.dimension()), (16, 12));
        assert_eq!(gray.gray_image(&rep.dual).unwrap().dimension(), 4);
        assert!(is_dual_containing(&image));
        assert_eq!(css(&image).unwrap().to_string(), "[[16, 8, 4]]_17");
    }

    #[test]
    fn css_trivial_cases() {
        let full = LinearCode::full(pr(7), 5);
        assert!(is_dual_containing(&full));
        assert!(!is_dual_containing(&LinearCode::zero(pr(7), 5)));
        let q = css(&full).unwrap();
        assert_eq!((q.n, q.k, q.d), (5, 5, Distance::Exact(1)));
        assert_eq!(css(&LinearCode::zero(pr(7), 5)), Err(Error::NotDualContaining));
    }

    #[test]
    fn small_search_satisfies_necessary_conditions() {
        let hits = search_dual_containing(pr(2), 3).unwrap();
        assert!(!hits.is_empty());
        for h in &hits {
            assert!(2 * h.gray_dimension >= 6);
            assert!(h.params.singleton_defect() >= 0);
        }
        assert!(search_dual_containing(pr(3), 4).is_err());
        assert!(matches!(search_dual_containing(pr(5), 10), Err(Error::GcdViolation { .. })));
    }

    #[test]
    fn search_distances_match_direct_computation() {
        let gray = GrayContext::new(pr(5)).unwrap();
        for h in search_dual_containing(pr(5), 6).unwrap() {
            let image = gray.gray_image(&cyclic_code_from_assignment(&h.assignment)).unwrap();
            let direct = if image.space().size().unwrap() <= 5u128.pow(8) {
                image.min_weight_by_enumeration()
            } else {
                image.min_distance(12).unwrap()
            };
            assert_eq!(direct, h.params.d.value());
        }
    }

    #[test]
    fn separable_rs_examples() {
        let p = pr(3);
        let fr = AdditiveCode::full(BlockProfile::with_prime(p, 0, 2, 0).unwrap());
        let fs = AdditiveCode::full(BlockProfile::with_prime(p, 0, 0, 2).unwrap());
        assert!(separable_rs_dual_containing(&fr, &fs).unwrap());
        let zs = AdditiveCode::zero(BlockProfile::with_prime(p, 0, 0, 2).unwrap());
        assert!(!separable_rs_dual_containing(&fr, &zs).unwrap());
    }
}
