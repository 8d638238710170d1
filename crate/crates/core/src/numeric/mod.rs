//! Extended-precision evaluation: special functions, L-values from smoothed
//! functional-equation sums, Petersson norms and the table check.

mod bessel;
mod incgamma;
mod lfun;
mod petersson;
pub mod quad;
mod real;
mod verify;

pub use bessel::{bessel_k, bessel_k_upto};
pub use incgamma::{incomplete_gamma, incomplete_gamma_int};
pub use lfun::{
    degree2_terms, functional_eq_residual, functional_eq_residuals, l_degree2, l_rankin4, l_rankin4_real, rankin_kernel, LFunctionSpec,
};
pub use petersson::{petersson_norm, stored_norm, PeterssonNorm, DELTA_NORM, G20_NORM};
pub use real::{Ctx, Real, ToReal};
pub use verify::{
    published, render_exact, verify_tables, Branch, BranchCheck, NormSource, Norms, Reference, VerificationReport,
    VerificationRow,
};
