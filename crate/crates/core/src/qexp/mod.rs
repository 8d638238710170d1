//! Truncated q-expansions and the level-1 forms the critical-value formulas
//! consume: `Δ`, `E_k`, `G_{2,p}`, `g20 = E_8·Δ`, Hecke operators and the
//! Dirichlet coefficients of `L(s, Δ⊗g20)`.

mod forms;
mod rankin;
mod series;

pub use forms::{delta_qexp, eisenstein_qexp, g20_qexp, g2p_qexp, hecke_tp, is_prime};
pub use rankin::{lemma1_check_with, lemma1_local_check, rankin_coeffs, RankinCoeffs};
pub use series::QSeries;
