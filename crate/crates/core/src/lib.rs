//! Additive constacyclic codes over Z_p x Z_p[u]/<u^2> x Z_p[u]/<u^3>.

pub mod additive_code;
pub mod chain_ring;
pub mod cyclotomic;
pub mod error;
pub mod gray;
pub mod linalg;
pub mod linear_code;
pub mod polynomial;
pub mod prime_field;
pub mod quantum;
pub mod reproduce;
pub mod spec_io;
pub mod weight_enum;

pub use additive_code::{AdditiveCode, BlockProfile, MixedWord, ShiftUnits};
pub use chain_ring::ChainElement;
pub use cyclotomic::CyclotomicInt;
pub use error::{Error, Result};
pub use gray::GrayContext;
pub use linear_code::LinearCode;
pub use polynomial::Poly;
pub use prime_field::{FieldElement, Prime};
pub use weight_enum::{Enumerator, EnumeratorKind};
pub use quantum::{FactorAssignment, QuantumParams};
