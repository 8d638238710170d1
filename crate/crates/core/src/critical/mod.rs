//! Exact critical values: Eisenstein constant terms, holomorphic projection
//! and the assembled closed forms for `s = 12..=19`.
//!
//! Every value is computed from first principles; nothing is read from a
//! table.

mod constants;
mod projection;
mod values;

pub use constants::{c_constants, d_constants, whittaker_closed_form, CConstants, DConstants};
pub use projection::{projection_coeff, projection_coeffs, rankin_projection, ProjectionCoeffs, YPoly};
pub use values::{
    euler_factor_at_2, main_identity, rankin_g20_value, trace_factor, two_delta_product, CriticalValueResult,
    PeterssonFactors, CRITICAL_RANGE,
};
