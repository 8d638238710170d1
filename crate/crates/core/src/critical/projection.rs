use alloc::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::Zero;

use super::constants::{c_constants, d_constants, whittaker_closed_form, CConstants, DConstants};
use crate::exact::{factorial, int, pow2, PiValue, Rational};
use crate::qexp::{delta_qexp, g2p_qexp};
use crate::{Error, Result};

/// `Σ_j c_j Y^j` with `Y = 4πy`: the `y`-dependence of one Fourier coefficient
/// of a nearly holomorphic form.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct YPoly {
    terms: BTreeMap<i64, PiValue>,
}

impl YPoly {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn add_term(&mut self, j: i64, c: &PiValue) {
        let entry = self.terms.entry(j).or_insert_with(PiValue::zero);
        *entry = &*entry + c;
        if entry.is_zero() {
            self.terms.remove(&j);
        }
    }

    pub fn add_scaled(&mut self, other: &YPoly, q: &Rational) {
        for (j, c) in &other.terms {
            self.add_term(*j, &c.scale(q));
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (i64, &PiValue)> {
        self.terms.iter().map(|(j, c)| (*j, c))
    }

    /// Fourier coefficient at `q^m` of the weight-`k` holomorphic projection of
    /// `self·q^m`:
    ///
    /// ```text
    /// (4πm)^{k-1}/(k-2)! ∫_0^∞ Σ_j c_j Y^j e^{-4πmy} y^{k-2} dy = Σ_j c_j m^{-j} (k-2+j)!/(k-2)!
    /// ```
    pub fn project(&self, m: u64, k: u32) -> Result<PiValue> {
        let norm = Rational::from_integer(factorial(k as u64 - 2));
        let m = Rational::from_integer(BigInt::from(m));
        let mut acc = PiValue::zero();
        for (&j, c) in &self.terms {
            let n = k as i64 - 2 + j;
            if n < 0 {
                return Err(Error::Divergent("holomorphic projection integral"));
            }
            let q = Rational::from_integer(factorial(n as u64)) * m.pow(-j as i32) / &norm;
            acc = acc + c.scale(&q);
        }
        Ok(acc)
    }
}

/// `Σ_i (-1)^i C(r,i) Γ(α)/Γ(α-i) (nY)^{r-i} · Y^{-r}`.
fn whittaker_in_y(alpha: i64, r: u32, n: u64, scale: &PiValue) -> YPoly {
    let mut out = YPoly::new();
    let n = Rational::from_integer(BigInt::from(n));
    for (p, w) in whittaker_closed_form(alpha, r).iter().enumerate() {
        if !w.is_zero() {
            out.add_term(p as i64 - r as i64, &scale.scale(&(w * n.pow(p as i32))));
        }
    }
    out
}

fn divisors(n: u64) -> impl Iterator<Item = u64> {
    (1..=n).filter(move |d| n % d == 0)
}

/// Coefficient of `q^n` in `(4πy)^{s-11} E_{10,2}(z, s-11, ξ)`.
fn level2_coefficient(s: i64, n: u64, c: &CConstants) -> YPoly {
    if n == 0 {
        let mut out = YPoly::new();
        out.add_term(2 - s, &c.c0p);
        out.add_term(s - 11, &c.c0pp);
        return out;
    }
    // C_n = -2π^{2s-12} Σ_{d|n} (-1)^d d^{2s-13}
    let sum = divisors(n).fold(Rational::zero(), |acc, d| {
        let term = Rational::from_integer(BigInt::from(d)).pow(2 * s as i32 - 13);
        if d % 2 == 0 { acc + term } else { acc - term }
    });
    let cn = PiValue::monomial(int(-2) * sum / Rational::from_integer(factorial(s as u64 - 2)), 2 * s - 12);
    whittaker_in_y(s - 1, (11 - s) as u32, n, &cn)
}

/// Coefficient of `q^n` in `(4πy)^{s-19} E_{8,1}(z, s-19)`.
fn level1_coefficient(s: i64, n: u64, d: &DConstants) -> YPoly {
    if n == 0 {
        let mut out = YPoly::new();
        out.add_term(12 - s, &d.d0p);
        out.add_term(s - 19, &d.d0pp);
        return out;
    }
    // 2(2π)^{2s-30} σ_{2s-31}(n) / Γ(s-11)
    let sigma = divisors(n).fold(Rational::zero(), |acc, d| {
        acc + Rational::from_integer(BigInt::from(d)).pow(2 * s as i32 - 31)
    });
    let scale = int(2) * pow2(2 * s - 30) * sigma / Rational::from_integer(factorial(s as u64 - 12));
    whittaker_in_y(s - 11, (19 - s) as u32, n, &PiValue::monomial(scale, 2 * s - 30))
}

/// Fourier coefficients `A_1, A_2` of `Hol(G_{2,2}(z)(4πy)^{s-11}E_{10,2}(z,s-11,ξ))`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProjectionCoeffs {
    pub s: i64,
    pub a1: PiValue,
    pub a2: PiValue,
}

/// `A_m(s)`, the coefficient of `q^m` of the weight-12 projection of
/// `G_{2,2}(z)·(4πy)^{s-11}E_{10,2}(z, s-11, ξ)`, for `s ∈ 3..=10`.
pub fn projection_coeff(s: i64, m: u64) -> Result<PiValue> {
    let c = c_constants(s)?;
    let g = g2p_qexp(2, m as usize)?;
    let mut f = YPoly::new();
    for a in 0..=m {
        f.add_scaled(&level2_coefficient(s, m - a, &c), g.coeff(a as usize));
    }
    f.project(m, 12)
}

pub fn projection_coeffs(s: i64) -> Result<ProjectionCoeffs> {
    let a1 = projection_coeff(s, 1)?;
    let a2 = projection_coeff(s, 2)?;
    for a in [&a1, &a2] {
        let (_, e) = a.as_monomial()?;
        debug_assert_eq!(e, 2 * s - 12);
    }
    Ok(ProjectionCoeffs { s, a1, a2 })
}

/// `B_m(s)`, the coefficient of `q^m` of the weight-20 projection of
/// `Δ(z)·(4πy)^{s-19}E_{8,1}(z, s-19)`, for `s ∈ 12..=19`.
pub fn rankin_projection(s: i64, m: u64) -> Result<PiValue> {
    let d = d_constants(s)?;
    let delta = delta_qexp(m.max(1) as usize);
    let mut f = YPoly::new();
    for a in 1..=m {
        f.add_scaled(&level1_coefficient(s, m - a, &d), delta.coeff(a as usize));
    }
    f.project(m, 20)
}
