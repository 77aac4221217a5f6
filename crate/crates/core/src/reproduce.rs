//! Golden checks for the worked examples and the table of quantum codes.

use std::fmt;
use std::str::FromStr;

use crate::additive_code::{AdditiveCode, BlockProfile};
use crate::error::{Error, Result};
use crate::gray::GrayContext;
use crate::polynomial::{fp, Poly};
use crate::prime_field::Prime;
use crate::quantum::{css, cyclic_code_from_assignment, reciprocal_dual, FactorAssignment};
use crate::spec_io::{parse_symbol_word, parse_word};
use crate::weight_enum::{
    complete_enumerator, hamming_enumerator, hamming_transform, lee_enumerator, lee_transform,
    macwilliams_pair_check, symbol_index, symmetrized_enumerator, symmetrized_transform, Enumerator,
    EnumeratorKind, Symbol,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Target {
    Example1,
    Example2,
    Example3,
    Example4,
    Example5,
    Table1,
}

impl Target {
    pub const ALL: [Target; 6] = [
        Target::Example1,
        Target::Example2,
        Target::Example3,
        Target::Example4,
        Target::Example5,
        Target::Table1,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Target::Example1 => "example1",
            Target::Example2 => "example2",
            Target::Example3 => "example3",
            Target::Example4 => "example4",
            Target::Example5 => "example5",
            Target::Table1 => "table1",
        }
    }
}

impl FromStr for Target {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Target::ALL
            .into_iter()
            .find(|t| t.name() == s)
            .ok_or_else(|| Error::Parse(format!("unknown target {s:?}")))
    }
}

/// One compared item.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Check {
    pub item: String,
    pub pass: bool,
    pub detail: String,
}

impl Check {
    fn new(item: impl Into<String>, pass: bool, detail: impl Into<String>) -> Self {
        Check {
            item: item.into(),
            pass,
            detail: detail.into(),
        }
    }

    fn eq<T: PartialEq + fmt::Display>(item: impl Into<String>, got: T, want: T) -> Self {
        let pass = got == want;
        let detail = if pass {
            format!("{got}")
        } else {
            format!("got {got}, expected {want}")
        };
        Check::new(item, pass, detail)
    }
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let tag = if self.pass { "PASS" } else { "FAIL" };
        write!(f, "{tag} {}: {}", self.item, self.detail)
    }
}

pub const EXAMPLE1_GENERATORS: [&str; 2] = ["(1,0;0,u;1+u^2,0)", "(0,1;1+u,0;0,1+u)"];

pub const EXAMPLE1_EXPANDED: [&str; 6] = [
    "(1,0;0,u;1+u^2,0)",
    "(0,0;0,0;u,0)",
    "(0,0;0,0;u^2,0)",
    "(0,1;1+u,0;0,1+u)",
    "(0,0;u,0;0,u+u^2)",
    "(0,0;0,0;0,u^2)",
];

/// The dual basis, one (Z_p, R, S) triple per coordinate.
pub const EXAMPLE2_DUAL_BASIS: [&str; 6] = [
    "(0,0,0;0,u,0)",
    "(1,0,0;0,1,0)",
    "(0,u,0;0,0,u^2)",
    "(0,u,0;1,0,0)",
    "(0,1+u,0;0,0,u+u^2)",
    "(1,0,u^2;0,0,0)",
];

/// Complete enumerators as (i, j, coefficient) for x_i x_j, in the 1-based
/// symbol numbering of the printed example (see [`printed_symbol`]).
///
/// The printed dual list has x_7 x_57 where x_15 x_57 appears below; x_7 has
/// Lee weight 1 and would contradict the symmetrized enumerator of the dual.
const EXAMPLE2_COMPLETE: [(usize, usize, i128); 63] = [(1, 1, 1), (1, 3, 1), (1, 4, 2), (1, 7, 1), (3, 4, 1), (3, 17, 1), (3, 19, 1), (3, 20, 1), (3, 23, 1), (4, 4, 1), (4, 7, 1), (7, 17, 1), (7, 19, 1), (7, 20, 1), (7, 23, 1), (9, 34, 1), (9, 38, 1), (11, 34, 1), (11, 38, 1), (12, 34, 1), (12, 38, 1), (15, 34, 1), (15, 38, 1), (17, 34, 1), (17, 37, 1), (17, 38, 1), (17, 40, 1), (19, 50, 1), (19, 53, 1), (19, 54, 1), (19, 56, 1), (20, 34, 1), (20, 37, 1), (20, 38, 1), (20, 40, 1), (23, 50, 1), (23, 53, 1), (23, 54, 1), (23, 56, 1), (25, 37, 1), (25, 40, 1), (27, 37, 1), (27, 40, 1), (28, 37, 1), (28, 40, 1), (31, 37, 1), (31, 40, 1), (42, 50, 1), (42, 54, 1), (45, 50, 1), (45, 54, 1), (46, 50, 1), (46, 54, 1), (48, 50, 1), (48, 54, 1), (53, 58, 1), (53, 61, 1), (53, 62, 1), (53, 64, 1), (56, 58, 1), (56, 61, 1), (56, 62, 1), (56, 64, 1)];
const EXAMPLE2_COMPLETE_DUAL: [(usize, usize, i128); 63] = [(1, 1, 1), (1, 17, 1), (1, 36, 2), (1, 52, 1), (3, 9, 1), (3, 44, 1), (4, 9, 1), (4, 17, 1), (4, 25, 1), (4, 44, 1), (4, 52, 1), (4, 60, 1), (7, 25, 1), (15, 57, 1), (7, 60, 1), (9, 19, 1), (9, 33, 1), (9, 39, 1), (9, 55, 1), (11, 12, 1), (11, 41, 1), (12, 20, 1), (12, 27, 1), (12, 47, 1), (12, 49, 1), (12, 63, 1), (15, 28, 1), (17, 20, 1), (17, 33, 1), (17, 36, 1), (17, 49, 1), (19, 44, 1), (20, 28, 1), (20, 41, 1), (20, 52, 1), (20, 57, 1), (23, 25, 1), (23, 60, 1), (25, 33, 1), (25, 35, 1), (25, 51, 1), (27, 41, 1), (28, 31, 1), (28, 43, 1), (28, 49, 1), (28, 59, 1), (31, 57, 1), (33, 44, 1), (33, 52, 1), (33, 60, 1), (35, 60, 1), (36, 36, 1), (36, 52, 1), (39, 44, 1), (41, 47, 1), (41, 49, 1), (41, 63, 1), (43, 57, 1), (44, 55, 1), (49, 52, 1), (49, 57, 1), (51, 60, 1), (57, 59, 1)];

/// Symmetrized enumerators as (i, j, coefficient) for W_i W_j.
const EXAMPLE4_SYMMETRIZED: [(usize, usize, i128); 17] = [
    (0, 0, 1), (2, 2, 5), (3, 0, 1), (3, 2, 8), (2, 0, 2), (1, 0, 1), (1, 3, 3), (3, 5, 7),
    (4, 3, 11), (4, 5, 6), (3, 3, 3), (2, 1, 4), (5, 1, 1), (4, 1, 1), (4, 2, 4), (4, 4, 4),
    (5, 5, 2),
];
const EXAMPLE4_SYMMETRIZED_DUAL: [(usize, usize, i128); 20] = [
    (0, 0, 1), (3, 0, 2), (1, 1, 3), (4, 1, 5), (2, 1, 4), (5, 1, 2), (4, 2, 8), (2, 2, 3),
    (5, 2, 3), (1, 3, 2), (4, 3, 6), (3, 3, 5), (4, 4, 2), (3, 2, 8), (0, 2, 1), (3, 5, 4),
    (5, 4, 2), (0, 5, 1), (1, 6, 1), (4, 6, 1),
];

pub const EXAMPLE3_HAMMING: &str = "x^2 + 4xy + 59y^2";
pub const EXAMPLE5_LEE: &str =
    "x^12 + x^11y + 2x^10y^2 + 5x^9y^3 + 8x^8y^4 + 9x^7y^5 + 8x^6y^6 + 11x^5y^7 + 11x^4y^8 + 6x^3y^9 + 2x^2y^10";
pub const EXAMPLE5_LEE_DUAL: &str =
    "x^12 + 4x^10y^2 + 6x^9y^3 + 5x^8y^4 + 14x^7y^5 + 15x^6y^6 + 10x^5y^7 + 6x^4y^8 + 2x^3y^9 + x^2y^10";

/// A row of the quantum code table: generators <g0, u g1> of a cyclic code
/// of length s over R, with g1 = (x^s - 1) / f1 when only f1 is listed.
#[derive(Debug, Clone, Copy)]
pub struct TableRow {
    pub p: u32,
    pub s: usize,
    pub g0: &'static [u32],
    pub g1: G1,
    pub gray: (usize, usize, usize),
    pub quantum: (usize, usize, usize),
}

#[derive(Debug, Clone, Copy)]
pub enum G1 {
    Poly(&'static [u32]),
    CofactorOf(&'static [u32]),
}

pub const TABLE1: [TableRow; 7] = [
    TableRow { p: 5, s: 8, g0: &[1, 3, 2, 1], g1: G1::Poly(&[3, 0, 4, 0, 2, 0, 1]), gray: (16, 12, 3), quantum: (16, 8, 3) },
    TableRow { p: 5, s: 8, g0: &[2, 0, 1], g1: G1::Poly(&[2, 0, 4, 0, 3, 0, 1]), gray: (16, 14, 2), quantum: (16, 12, 2) },
    TableRow { p: 13, s: 6, g0: &[12, 6, 8, 1], g1: G1::Poly(&[4, 12, 0, 9, 1]), gray: (12, 8, 4), quantum: (12, 4, 4) },
    TableRow { p: 13, s: 8, g0: &[12, 5, 5, 1], g1: G1::Poly(&[5, 0, 12, 0, 8, 0, 1]), gray: (16, 12, 3), quantum: (16, 8, 3) },
    TableRow { p: 13, s: 8, g0: &[5, 6, 1], g1: G1::Poly(&[5, 7, 1, 0, 5, 7, 1]), gray: (16, 14, 2), quantum: (16, 12, 2) },
    TableRow { p: 13, s: 18, g0: &[3, 0, 12, 5, 0, 7, 10, 0, 1], g1: G1::CofactorOf(&[12, 3, 0, 4, 1]), gray: (36, 24, 5), quantum: (36, 12, 5) },
    TableRow { p: 17, s: 8, g0: &[4, 5, 3, 1], g1: G1::Poly(&[9, 14, 14, 8, 10, 12, 1]), gray: (16, 12, 4), quantum: (16, 8, 4) },
];

/// The worked example: the eight linear factors of x^8 - 1 over Z_17 split
/// as F0 = (x+1)(x+2)(x+4)(x+8)(x+16), F1 = (x+9)(x+13), F2 = x+15.
pub const WORKED_EXAMPLE_ROOTS: [&[u32]; 3] = [&[1, 2, 4, 8, 16], &[9, 13], &[15]];

fn example_code() -> Result<AdditiveCode> {
    let prof = BlockProfile::new(2, 2, 2, 2)?;
    let gens = EXAMPLE1_GENERATORS
        .iter()
        .map(|t| parse_word(prof, t))
        .collect::<Result<Vec<_>>>()?;
    AdditiveCode::span_closure(prof, &gens)
}

/// The symbol numbered `i` (1-based) in the printed p = 2 enumerators.
///
/// Symbols are numbered as 32 a + 8 pos_R + pos_S with R ordered
/// 0, 1, u, 1+u and S ordered 0, 1, u, u^2, 1+u, 1+u^2, u+u^2, 1+u+u^2.
pub fn printed_symbol(i: usize) -> Symbol {
    const S: [[u32; 3]; 8] = [
        [0, 0, 0],
        [1, 0, 0],
        [0, 1, 0],
        [0, 0, 1],
        [1, 1, 0],
        [1, 0, 1],
        [0, 1, 1],
        [1, 1, 1],
    ];
    let i = i - 1;
    let (a, r, s) = (i / 32, (i / 8) % 4, i % 8);
    [a as u32, (r % 2) as u32, (r / 2) as u32, S[s][0], S[s][1], S[s][2]]
}

fn printed_complete(terms: &[(usize, usize, i128)]) -> Result<Enumerator> {
    let p = Prime::new(2)?;
    let dense: Vec<(Vec<u32>, i128)> = terms
        .iter()
        .map(|&(i, j, c)| {
            let mut e = vec![0u32; 64];
            e[symbol_index(p, &printed_symbol(i))] += 1;
            e[symbol_index(p, &printed_symbol(j))] += 1;
            (e, c)
        })
        .collect();
    Enumerator::from_dense(EnumeratorKind::Complete, 64, &dense)
}

fn quadratic(terms: &[(usize, usize, i128)]) -> Result<Enumerator> {
    let dense: Vec<(Vec<u32>, i128)> = terms
        .iter()
        .map(|&(i, j, c)| {
            let mut e = vec![0u32; 7];
            e[i] += 1;
            e[j] += 1;
            (e, c)
        })
        .collect();
    Enumerator::from_dense(EnumeratorKind::Symmetrized, 7, &dense)
}

pub fn run(target: Target) -> Result<Vec<Check>> {
    match target {
        Target::Example1 => example1(),
        Target::Example2 => example2(),
        Target::Example3 => example3(),
        Target::Example4 => example4(),
        Target::Example5 => example5(),
        Target::Table1 => table1(),
    }
}

fn example1() -> Result<Vec<Check>> {
    let c = example_code()?;
    let mut out = vec![Check::eq("rank", c.rank(), 6)];
    for w in EXAMPLE1_EXPANDED {
        let word = parse_word(c.profile(), w)?;
        out.push(Check::new(format!("contains {w}"), c.contains(&word)?, ""));
    }
    Ok(out)
}

fn example2() -> Result<Vec<Check>> {
    let c = example_code()?;
    let d = c.dual();
    let mut out = vec![Check::eq("dual rank", d.rank(), 6)];
    for w in EXAMPLE2_DUAL_BASIS {
        let word = parse_symbol_word(c.profile(), w)?;
        out.push(Check::new(format!("dual contains {w}"), d.contains(&word)?, ""));
    }
    let want = printed_complete(&EXAMPLE2_COMPLETE)?;
    let got = complete_enumerator(&c)?;
    out.push(Check::new("complete enumerator", got == want, format!("{} terms", got.len())));
    let want = printed_complete(&EXAMPLE2_COMPLETE_DUAL)?;
    let got = complete_enumerator(&d)?;
    out.push(Check::new("complete enumerator of the dual", got == want, format!("{} terms", got.len())));
    out.push(Check::new("complete MacWilliams identity", macwilliams_pair_check(&c, &d)?, ""));
    Ok(out)
}

fn example3() -> Result<Vec<Check>> {
    let c = example_code()?;
    let w = hamming_enumerator(&c)?;
    let wd = hamming_enumerator(&c.dual())?;
    let size = c.size().ok_or(Error::Overflow)? as i128;
    let t = hamming_transform(&w, size, c.profile().p())?;
    Ok(vec![
        Check::eq("Hamming enumerator", w.to_string(), EXAMPLE3_HAMMING.into()),
        Check::eq("Hamming enumerator of the dual", wd.to_string(), EXAMPLE3_HAMMING.into()),
        Check::eq("Hamming transform", t.to_string(), wd.to_string()),
    ])
}

fn example4() -> Result<Vec<Check>> {
    let c = example_code()?;
    let w = symmetrized_enumerator(&c)?;
    let wd = symmetrized_enumerator(&c.dual())?;
    let want = quadratic(&EXAMPLE4_SYMMETRIZED)?;
    let want_d = quadratic(&EXAMPLE4_SYMMETRIZED_DUAL)?;
    let size = c.size().ok_or(Error::Overflow)? as i128;
    let t = symmetrized_transform(&w, size, c.profile().p())?;
    Ok(vec![
        Check::eq("symmetrized enumerator", w.to_string(), want.to_string()),
        Check::eq("symmetrized enumerator of the dual", wd.to_string(), want_d.to_string()),
        Check::eq("symmetrized transform", t.to_string(), wd.to_string()),
    ])
}

fn example5() -> Result<Vec<Check>> {
    let c = example_code()?;
    let w = lee_enumerator(&c)?;
    let wd = lee_enumerator(&c.dual())?;
    let size = c.size().ok_or(Error::Overflow)? as i128;
    let t = lee_transform(&w, size, c.profile().p())?;
    Ok(vec![
        Check::eq("Lee enumerator", w.to_string(), EXAMPLE5_LEE.into()),
        Check::eq("Lee enumerator of the dual", wd.to_string(), EXAMPLE5_LEE_DUAL.into()),
        Check::eq("Lee transform", t.to_string(), wd.to_string()),
    ])
}

fn modulus(p: Prime, s: usize) -> Vec<u32> {
    let mut m = vec![0u32; s + 1];
    m[0] = p.neg(1);
    m[s] = 1;
    m
}

/// The factor assignment of a table row.
pub fn table_assignment(row: &TableRow) -> Result<FactorAssignment> {
    let p = Prime::new(row.p)?;
    let m = modulus(p, row.s);
    let cof = |g: &[u32]| -> Result<Vec<u32>> {
        let (q, r) = fp::divrem(p, &m, g);
        if r.is_empty() {
            Ok(q)
        } else {
            Err(Error::NotADivisor)
        }
    };
    let f0 = cof(row.g0)?;
    let f1 = match row.g1 {
        G1::Poly(g1) => cof(g1)?,
        G1::CofactorOf(f1) => f1.to_vec(),
    };
    FactorAssignment::from_products(p, row.s, &Poly::from_field(p, &f0), &Poly::from_field(p, &f1))
}

fn table_row(row: &TableRow) -> Result<Vec<Check>> {
    let label = format!("p = {}, s = {}", row.p, row.s);
    let fa = table_assignment(row)?;
    let p = fa.prime();
    let mut out = Vec::new();
    out.push(Check::eq(
        format!("{label} generator g0"),
        fa.hat_f0(),
        Poly::from_field(p, row.g0),
    ));
    if let G1::Poly(g1) = row.g1 {
        out.push(Check::eq(format!("{label} generator g1"), fa.hat_f1(), Poly::from_field(p, g1)));
    }
    let code = cyclic_code_from_assignment(&fa);
    let image = GrayContext::new(p)?.gray_image(&code)?;
    let dual_containing = image.is_dual_containing();
    out.push(Check::new(format!("{label} dual-containing"), dual_containing, ""));
    if !dual_containing {
        return Ok(out);
    }
    let q = css(&image)?;
    let (n, k, d) = row.gray;
    out.push(Check::eq(
        format!("{label} Gray image"),
        format!("[{}, {}, {}]", image.length(), image.dimension(), q.d),
        format!("[{n}, {k}, {d}]"),
    ));
    let (n, k, d) = row.quantum;
    let mut check = Check::eq(
        format!("{label} quantum code"),
        q.to_string(),
        format!("[[{n}, {k}, {d}]]_{}", row.p),
    );
    if q.singleton_defect() == 2 {
        check.detail.push_str(" (n + 2 - (k + 2d) = 2)");
    }
    out.push(check);
    Ok(out)
}

fn worked_example() -> Result<Vec<Check>> {
    let p = Prime::new(17)?;
    let linear = |roots: &[u32]| {
        roots
            .iter()
            .fold(vec![1u32], |acc, &a| fp::mul(p, &acc, &[a, 1]))
    };
    let f0 = Poly::from_field(p, &linear(WORKED_EXAMPLE_ROOTS[0]));
    let f1 = Poly::from_field(p, &linear(WORKED_EXAMPLE_ROOTS[1]));
    let fa = FactorAssignment::from_products(p, 8, &f0, &f1)?;
    let mut out = vec![
        Check::eq("worked example F2", fa.f2(), Poly::from_field(p, &linear(WORKED_EXAMPLE_ROOTS[2]))),
        Check::eq("worked example F0 hat", fa.hat_f0().to_string(), "x^3 + 3x^2 + 5x + 4".into()),
    ];
    let report = reciprocal_dual(&fa);
    let mut dual_check = Check::new("worked example dual <F2*^, uF1*^>", report.corrected_holds, "");
    if let Some(note) = report.discrepancy() {
        dual_check.detail = note;
    }
    out.push(dual_check);
    let image = GrayContext::new(p)?.gray_image(&cyclic_code_from_assignment(&fa))?;
    out.push(Check::new("worked example dual-containing", image.is_dual_containing(), ""));
    let q = css(&image)?;
    out.push(Check::eq(
        "worked example Gray image",
        format!("[{}, {}, {}]", image.length(), image.dimension(), q.d),
        "[16, 12, 4]".into(),
    ));
    out.push(Check::eq("worked example quantum code", q.to_string(), "[[16, 8, 4]]_17".into()));
    Ok(out)
}

fn table1() -> Result<Vec<Check>> {
    let mut out = worked_example()?;
    for row in &TABLE1 {
        match table_row(row) {
            Ok(checks) => out.extend(checks),
            Err(e) => out.push(Check::new(format!("p = {}, s = {}", row.p, row.s), false, e.to_string())),
        }
    }
    Ok(out)
}
