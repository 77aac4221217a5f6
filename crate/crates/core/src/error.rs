use thiserror::Error;

/// Errors raised across the toolkit.
///
/// Every variant corresponds to a violated precondition; none of them signal
/// an internal bug.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{0} is not prime")]
    NotPrime(u32),
    #[error("modulus mismatch: {0} vs {1}")]
    ModulusMismatch(u32, u32),
    #[error("ring mismatch: Z_{p}[u]/<u^{k1}> vs Z_{p}[u]/<u^{k2}>")]
    RingMismatch { p: u32, k1: u8, k2: u8 },
    #[error("division by zero")]
    DivisionByZero,
    #[error("no square root of -1 modulo {0} (requires p = 2 or p = 1 mod 4)")]
    NoSquareRootOfMinusOne(u32),
    #[error("element is not a unit")]
    NotAUnit,
    #[error("expected an element of Z_p[u]/<u^{expected}>, got nilpotency {got}")]
    WrongRing { expected: u8, got: u8 },
    #[error("leading coefficient is not a unit")]
    NonUnitLeadingCoefficient,
    #[error("gcd(p, n) != 1 for p = {p}, n = {n}")]
    GcdViolation { p: u32, n: usize },
    #[error("lambda must be nonzero")]
    ZeroLambda,
    #[error("polynomial has zero constant term")]
    ZeroConstantTerm,
    #[error("polynomial does not divide x^n - lambda")]
    NotADivisor,
    #[error("divisibility violated: {0}")]
    DivisibilityViolation(String),
    #[error("congruence hypothesis violated: {0}")]
    CongruenceViolation(String),
    #[error("length mismatch: expected {expected}, got {got}")]
    LengthMismatch { expected: usize, got: usize },
    #[error("block profile mismatch")]
    ProfileMismatch,
    #[error("empty block profile (q + r + s must be at least 1)")]
    EmptyProfile,
    #[error("row space is not closed under multiplication by u")]
    NotAModule,
    #[error("minimum distance not determined within the search cap; d >= {lower_bound}")]
    NotDetermined { lower_bound: usize },
    #[error("code has dimension 0")]
    ZeroDimension,
    #[error("code is not dual-containing")]
    NotDualContaining,
    #[error("blocks must have equal length q = r = s (got {q}, {r}, {s})")]
    BlocksUnequal { q: usize, r: usize, s: usize },
    #[error("enumeration of {0} codewords exceeds the bound")]
    TooLarge(String),
    #[error("division of the transformed enumerator by {0} is not exact")]
    InexactDivision(i128),
    #[error("symbols of equal Lee weight yield different character sums: {0}")]
    RowCollapseFailure(String),
    #[error("operation supports p in {{2, 3}} only (got {0})")]
    UnsupportedPrime(u32),
    #[error("x^s - 1 has {0} irreducible factors; at most 20 are supported")]
    TooManyFactors(usize),
    #[error("exact integer arithmetic overflowed")]
    Overflow,
    #[error("parse error: {0}")]
    Parse(String),
    #[error("malformed JSON: {0}")]
    MalformedJson(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    /// A stable snake_case name for the variant.
    pub fn code(&self) -> &'static str {
        match self {
            Error::NotPrime(_) => "not_prime",
            Error::ModulusMismatch(..) => "modulus_mismatch",
            Error::RingMismatch { .. } => "ring_mismatch",
            Error::DivisionByZero => "division_by_zero",
            Error::NoSquareRootOfMinusOne(_) => "no_square_root_of_minus_one",
            Error::NotAUnit => "not_a_unit",
            Error::WrongRing { .. } => "wrong_ring",
            Error::NonUnitLeadingCoefficient => "non_unit_leading_coefficient",
            Error::GcdViolation { .. } => "gcd_violation",
            Error::ZeroLambda => "zero_lambda",
            Error::ZeroConstantTerm => "zero_constant_term",
            Error::NotADivisor => "not_a_divisor",
            Error::DivisibilityViolation(_) => "divisibility_violation",
            Error::CongruenceViolation(_) => "congruence_violation",
            Error::LengthMismatch { .. } => "length_mismatch",
            Error::ProfileMismatch => "profile_mismatch",
            Error::EmptyProfile => "empty_profile",
            Error::NotAModule => "not_a_module",
            Error::NotDetermined { .. } => "not_determined",
            Error::ZeroDimension => "zero_dimension",
            Error::NotDualContaining => "not_dual_containing",
            Error::BlocksUnequal { .. } => "blocks_unequal",
            Error::TooLarge(_) => "too_large",
            Error::InexactDivision(_) => "inexact_division",
            Error::RowCollapseFailure(_) => "row_collapse_failure",
            Error::UnsupportedPrime(_) => "unsupported_prime",
            Error::TooManyFactors(_) => "too_many_factors",
            Error::Overflow => "overflow",
            Error::Parse(_) => "parse",
            Error::MalformedJson(_) => "malformed_json",
        }
    }
}
