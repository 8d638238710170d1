use core::ops::RangeInclusive;

use super::projection::{projection_coeffs, rankin_projection};
use crate::exact::{factorial, int, pow2, PiValue, Rational};
use crate::qexp::delta_qexp;
use crate::{Error, Result};

/// The critical points of `L(s, F12, spin)`.
pub const CRITICAL_RANGE: RangeInclusive<i64> = 12..=19;

/// Which Petersson norms multiply the exact value.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum PeterssonFactors {
    DeltaDelta,
    G20G20,
    Both,
}

/// `rational · π^pi_exponent · (Petersson norms)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CriticalValueResult {
    pub s: i64,
    pub rational: Rational,
    pub pi_exponent: i64,
    pub petersson_factors: PeterssonFactors,
}

impl CriticalValueResult {
    fn from_value(s: i64, v: &PiValue, factors: PeterssonFactors) -> Result<Self> {
        let (q, e) = v.as_monomial()?;
        Ok(Self {
            s,
            rational: q.clone(),
            pi_exponent: e,
            petersson_factors: factors,
        })
    }

    /// The coefficient of the Petersson norms as a π-monomial.
    pub fn value(&self) -> PiValue {
        PiValue::monomial(self.rational.clone(), self.pi_exponent)
    }
}

fn check_critical(s: i64) -> Result<()> {
    if CRITICAL_RANGE.contains(&s) {
        Ok(())
    } else {
        Err(Error::OutOfRange { what: "s", value: s, range: "12..=19" })
    }
}

fn tau2() -> Rational {
    delta_qexp(2).coeff(2).clone()
}

/// `⟨Δ(z), Δ(2z)⟩ / ⟨Δ, Δ⟩ = 2^{-6}·3^{-1}·2^{-5}·τ(2)`, from
/// `Tr(Δ|diag(2,1)) = 2^{-5} T_2 Δ`.
pub fn trace_factor() -> Rational {
    tau2() * pow2(-11) / int(3)
}

/// The Euler factor at 2 that separates `L(s-9, Δ)L(s-10, Δ)` from
/// `L(s-9, Δ⊗G_{2,2})`: `1 - τ(2)X + 2^{11}X²` at `X = 2^{10-s}`.
pub fn euler_factor_at_2(s: i64) -> Rational {
    let x = pow2(10 - s);
    int(1) - tau2() * &x + pow2(11) * &x * &x
}

/// Coefficient of `⟨Δ,Δ⟩` in `L(s-9, Δ) L(s-10, Δ)`.
pub fn two_delta_product(s: i64) -> Result<CriticalValueResult> {
    check_critical(s)?;
    let sp = s - 9;
    let p = projection_coeffs(sp)?;
    // Hol = αΔ(z) + βΔ(2z) with Δ(z) = q - 24q² + …, Δ(2z) = q² + …
    let alpha = p.a1.clone();
    let beta = &p.a2 - &p.a1.scale(&tau2());
    let inner = &alpha + &beta.scale(&trace_factor());
    // L(s', Δ⊗G_{2,2}) = [SL_2(Z):Γ_0(2)]/2 · (4π)^{11}/Γ(s') · ⟨Δ, Hol⟩
    let scale = int(3) / int(2) * pow2(22) / Rational::from_integer(factorial(sp as u64 - 1)) / euler_factor_at_2(s);
    let v = inner.scale(&scale).shift_pi(11);
    CriticalValueResult::from_value(s, &v, PeterssonFactors::DeltaDelta)
}

/// Coefficient of `⟨g20,g20⟩` in `L(s, Δ⊗g20)`: `B_1(s)·(4π)^{19}/(2Γ(s))`.
pub fn rankin_g20_value(s: i64) -> Result<CriticalValueResult> {
    check_critical(s)?;
    let b1 = rankin_projection(s, 1)?;
    let scale = pow2(38) / (int(2) * Rational::from_integer(factorial(s as u64 - 1)));
    let v = b1.scale(&scale).shift_pi(19);
    CriticalValueResult::from_value(s, &v, PeterssonFactors::G20G20)
}

/// Coefficient of `⟨Δ,Δ⟩⟨g20,g20⟩` in `L(s, F12, spin)`.
pub fn main_identity(s: i64) -> Result<CriticalValueResult> {
    let a = two_delta_product(s)?;
    let b = rankin_g20_value(s)?;
    Ok(CriticalValueResult {
        s,
        rational: a.rational * b.rational,
        pi_exponent: a.pi_exponent + b.pi_exponent,
        petersson_factors: PeterssonFactors::Both,
    })
}
