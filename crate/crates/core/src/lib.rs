//! Finite left braces as explicit operation tables.
//!
//! A left brace is a set carrying an abelian group `(B, +)` and a group
//! `(B, ·)` linked by `a·(b + c) + a = a·b + a·c`. This crate stores both
//! operations as dense tables over the indices `0..n` (index `0` is the
//! shared neutral element) and provides:
//!
//! * [`brace`]: the [`FiniteBrace`] type, axiom verification, the lambda map
//!   and star operation, trivial braces, braces from lambda maps and direct
//!   products.
//! * [`analysis`]: left ideals, ideals, closures, the socle, the left, right
//!   and solvability series, simplicity, quotients and multiplicative-group
//!   invariants.
//! * [`products`]: semidirect, asymmetric and wreath products together with
//!   the validation of actions and symmetric 2-cocycles.
//! * [`families`]: builders for the named simple and non-simple brace
//!   families (iterated wreath products, cyclotomic constructions, braces
//!   from quadratic forms and their matched products).
//! * [`ybe`]: the involutive non-degenerate solution of the Yang-Baxter
//!   equation attached to a brace, and checkers for arbitrary solutions.
//!
//! The crate is `no_std` and only needs `alloc`.

#![no_std]

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod abelian;
pub mod analysis;
pub mod brace;
mod error;
pub mod families;
mod limits;
pub mod modular;
pub mod morphism;
pub mod products;
pub mod subset;
pub mod ybe;

pub use abelian::AbelianGroupSpec;
pub use brace::{AxiomReport, CheckMode, FiniteBrace, Meta, Violation};
pub use error::{Error, LambdaViolation, StructuralError};
pub use limits::{Limits, HARD_MAX_ORDER};
pub use morphism::{verify_morphism, BraceMap, MorphismReport};
pub use subset::Subset;

pub type Result<T, E = Error> = core::result::Result<T, E>;
