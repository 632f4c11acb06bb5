//! Exact computations in the enveloping algebra of gl(n) through the virtual
//! variables method: superpolynomials and polarizations, PBW rewriting,
//! devirtualization, bitableaux and central elements.

pub mod exact;
pub mod symbol;
pub mod superpoly;
pub mod uea;
pub mod virt;
pub mod poly;
pub mod bitableaux;
pub mod center;
pub mod suite;

pub use exact::Rational;
pub use symbol::{Parity, Symbol, SymbolKind};
pub use superpoly::{SuperPolynomial, SuperVariable};
pub use uea::{Generator, UeaElement};
pub use poly::{GlPolynomial, SymPolynomial};
