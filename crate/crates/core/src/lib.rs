//! Critical values of the spinor L-function of Miyawaki's degree-3 Siegel
//! cusp form `F12`, through the factorization
//!
//! ```text
//! L(s, F12, spin) = L(s-9, Δ) L(s-10, Δ) L(s, Δ⊗g20),   s = 12..=19
//! ```
//!
//! The crate has two halves that never share an evaluation path:
//!
//! * [`exact`], [`qexp`] and [`critical`] produce every critical value as
//!   `rational · π^e · <Δ,Δ> · <g20,g20>` in exact arithmetic, starting from
//!   Eisenstein constant terms and holomorphic projection.
//! * [`numeric`] evaluates the same L-functions from their Dirichlet
//!   coefficients with smoothed functional-equation sums at an explicit decimal
//!   working precision, computes the Petersson norms with Rankin's formula, and
//!   compares the two.
//!
//! The crate is `no_std` (it needs `alloc`); file formats and the command line
//! live in the `spinval` crate.

#![no_std]
#![deny(rust_2018_idioms)]

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod critical;
mod error;
pub mod exact;
pub mod numeric;
pub mod qexp;

pub use error::{Error, Result};
