//! Exact arithmetic: reduced rationals, values of the form `Σ q·π^e`,
//! Bernoulli numbers, zeta at integers and Gamma-ratio limits at poles.

mod bernoulli;
mod gamma;
mod pi_value;
mod rational;
mod zeta;

pub use bernoulli::{bernoulli, BernoulliTable};
pub use gamma::{falling_ratio, gamma_pole_ratio, inv_gamma_int, Laurent};
pub use pi_value::PiValue;
pub use rational::{binomial, factorial, int, pow2, rat, Rational};
pub use zeta::zeta_exact;
