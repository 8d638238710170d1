use super::lfun::{degree2_terms, l_degree2};
use super::real::{Ctx, Real};
use crate::exact::{bernoulli, factorial, int, zeta_exact, Rational};
use crate::qexp::{delta_qexp, g20_qexp};
use crate::{Error, Result};

/// `⟨Δ, Δ⟩` to 40 significant digits, computed independently at 60 digits.
pub const DELTA_NORM: &str = "1.035362056804320922347816812225164593225e-6";
/// `⟨g20, g20⟩` to 40 significant digits, computed independently at 60 digits.
pub const G20_NORM: &str = "8.265541531659703164230062760258225715344e-6";

#[derive(Debug, Clone)]
pub struct PeterssonNorm {
    pub k: u32,
    pub r: u32,
    /// `l = k - r`, the second L-value used.
    pub l_used: u32,
    /// Dirichlet coefficients used for each L-value.
    pub terms: usize,
    pub value: Real,
}

/// `α_j = -2j/B_j`, so that `E_j = 1 + α_j Σ σ_{j-1}(n) q^n`.
fn alpha(j: u32) -> Rational {
    -int(2 * j as i64) / bernoulli(j as usize)
}

/// `⟨f, f⟩` for the normalized eigenform of weight 12 (`Δ`) or 20 (`g20`),
/// from the Rankin identity
///
/// ```text
/// ⟨f, f⟩ = (4π)^{1-k} (k-2)! / ζ(l) · α_r / (α_l + α_r - α_k) · L(k-1, f) L(l, f)
/// ```
///
/// with `l = k - r`. Accepted pairs: `(12, 4)`, `(20, 4)`, `(20, 6)`, `(20, 8)`.
pub fn petersson_norm(k: u32, r: u32, ctx: &Ctx) -> Result<PeterssonNorm> {
    if !matches!((k, r), (12, 4) | (20, 4) | (20, 6) | (20, 8)) {
        return Err(Error::InvalidNormPair { k, r });
    }
    let l = k - r;
    let wide = ctx.widened(5);
    let m = [k - 1, l]
        .iter()
        .map(|&s| degree2_terms(k, s as f64, wide.digits()))
        .max()
        .unwrap_or(12)
        .max(12);
    let form = if k == 12 { delta_qexp(m) } else { g20_qexp(m) };
    let l1 = l_degree2(&form, k, &wide.int(k as i64 - 1), &wide, m)?;
    let l2 = l_degree2(&form, k, &wide.int(l as i64), &wide, m)?;

    let ratio = alpha(r) / (alpha(l) + alpha(r) - alpha(k));
    let zeta_l = wide.pi_value(&zeta_exact(l as i64)?);
    let four_pi = wide.pi() * wide.int(4);
    let front = wide.big(&factorial(k as u64 - 2)) / wide.powi(&four_pi, k - 1);
    let value = front / zeta_l * wide.rational(&ratio) * l1 * l2;
    Ok(PeterssonNorm { k, r, l_used: l, terms: m, value: ctx.rebase(&value) })
}

/// The stored constant for weight 12 or 20, rounded to the context.
pub fn stored_norm(k: u32, ctx: &Ctx) -> Result<Real> {
    match k {
        12 => Ok(ctx.parse(DELTA_NORM)),
        20 => Ok(ctx.parse(G20_NORM)),
        _ => Err(Error::OutOfRange { what: "weight", value: k as i64, range: "12 or 20" }),
    }
}
