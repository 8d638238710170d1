use alloc::vec::Vec;

use num_bigint::BigInt;

use crate::exact::{binomial, falling_ratio, int, pow2, zeta_exact, Laurent, PiValue, Rational};
use crate::{Error, Result};

/// Coefficients of `W(y, α, -r) = Σ_i (-1)^i C(r,i) Γ(α)/Γ(α-i) y^{r-i}`,
/// indexed by the power of `y`.
pub fn whittaker_closed_form(alpha: i64, r: u32) -> Vec<Rational> {
    let mut c = alloc::vec![Rational::from_integer(BigInt::from(0)); r as usize + 1];
    for i in 0..=r {
        let sign = if i % 2 == 0 { 1 } else { -1 };
        let v = BigInt::from(sign) * binomial(r as u64, i as u64) * falling_ratio(alpha, i);
        c[(r - i) as usize] = Rational::from_integer(v);
    }
    c
}

/// Constant-term data of `(4πy)^{s-11} E_{10,2}(z, s-11, ξ)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CConstants {
    /// Coefficient of `(4πy)^{2-s}`.
    pub c0p: PiValue,
    /// Coefficient of `(4πy)^{s-11}`.
    pub c0pp: PiValue,
    pub c1: PiValue,
    pub c2: PiValue,
}

/// Constant-term data of `(4πy)^{s-19} E_{8,1}(z, s-19)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DConstants {
    /// Coefficient of `(4πy)^{12-s}`.
    pub d0p: PiValue,
    /// Coefficient of `(4πy)^{s-19}`.
    pub d0pp: PiValue,
}

fn check_range(s: i64, lo: i64, hi: i64, range: &'static str) -> Result<()> {
    if (lo..=hi).contains(&s) {
        Ok(())
    } else {
        Err(Error::OutOfRange { what: "s", value: s, range })
    }
}

/// `lim_{ε→0} Γ(2s-a+2ε) ζ(2s-a+2ε) / (Γ(s-b+ε) Γ(s-c+ε))`.
fn constant_term_limit(two_s_minus_a: i64, s_minus_b: i64, s_minus_c: i64) -> Result<PiValue> {
    let num = Laurent::gamma(two_s_minus_a, 2) * Laurent::zeta(two_s_minus_a, 2)?;
    let den = Laurent::gamma(s_minus_b, 1) * Laurent::gamma(s_minus_c, 1);
    (num / den).limit()
}

/// `C_0', C_0'', C_1, C_2` for `s ∈ 3..=10`.
///
/// `C_0' = -2π^{2s-12} Γ(2s-13) ζ(2s-13) / (Γ(s-11) Γ(s-1))` is taken as a
/// limit in `s`: both Γ-poles cancel for `s ≤ 6`, the pole of `ζ` at 1
/// cancels the pole of `Γ(s-11)` at `s = 7`, and the value vanishes for
/// `s ≥ 8`.
pub fn c_constants(s: i64) -> Result<CConstants> {
    check_range(s, 3, 10, "3..=10")?;
    let e = 2 * s - 12;
    let c0p = constant_term_limit(2 * s - 13, s - 11, s - 1)?.shift_pi(e).scale(&int(-2));
    let c0pp = zeta_exact(2 * s - 12)?.scale(&(int(2) - pow2(13 - 2 * s)));
    let c1 = PiValue::monomial(int(2), e);
    let c2 = PiValue::monomial(int(2) - pow2(2 * s - 12), e);
    Ok(CConstants { c0p, c0pp, c1, c2 })
}

/// `D_0', D_0''` for `s ∈ 12..=19`.
///
/// `D_0' = 2(2π)^{2s-30} Γ(2s-31) ζ(2s-31) / (Γ(s-11) Γ(s-19))` is a limit in
/// `s` exactly as in [`c_constants`]; it is nonzero at `s = 16`, where the
/// pole of `ζ` at 1 meets the pole of `Γ(s-19)`.
pub fn d_constants(s: i64) -> Result<DConstants> {
    check_range(s, 12, 19, "12..=19")?;
    let e = 2 * s - 30;
    let scale = int(2) * pow2(e);
    let d0p = constant_term_limit(2 * s - 31, s - 11, s - 19)?.shift_pi(e).scale(&scale);
    let d0pp = zeta_exact(2 * s - 30)?.scale(&int(2));
    Ok(DConstants { d0p, d0pp })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{gamma_pole_ratio, inv_gamma_int, rat};

    fn ints(v: &[i64]) -> Vec<Rational> {
        v.iter().map(|&x| int(x)).collect()
    }

    #[test]
    fn whittaker_examples() {
        assert_eq!(whittaker_closed_form(5, 0), ints(&[1]));
        assert_eq!(whittaker_closed_form(9, 1), ints(&[-8, 1]));
        assert_eq!(whittaker_closed_form(2, 2), ints(&[0, -2, 1]));
    }

    #[test]
    fn whittaker_functional_equation_at_integers() {
        // W(y, 1+r', -r) = y^{r-r'} W(y, 1+r, -r')
        for r in 0..8u32 {
            for rp in 0..=r {
                let lhs = whittaker_closed_form(1 + rp as i64, r);
                let rhs = whittaker_closed_form(1 + r as i64, rp);
                let mut shifted = alloc::vec![int(0); (r - rp) as usize];
                shifted.extend(rhs);
                assert_eq!(lhs, shifted, "r={r} r'={rp}");
            }
        }
    }

    #[test]
    fn c_constants_examples() {
        let c = c_constants(10).unwrap();
        assert!(c.c0p.is_zero());
        assert_eq!(c.c0pp, PiValue::monomial(rat(255, 128) * rat(1, 9450), 8));
        assert!(c_constants(6).unwrap().c0pp.is_zero());
        assert_eq!(c_constants(7).unwrap().c0p, PiValue::monomial(rat(-1, 5), 2));
        for s in 8..=10 {
            assert!(c_constants(s).unwrap().c0p.is_zero(), "s={s}");
        }
        assert!(c_constants(2).is_err());
        assert!(c_constants(11).is_err());
    }

    #[test]
    fn c0p_matches_pole_ratio_form() {
        for s in 3..=6 {
            let ratio = gamma_pole_ratio(2 * s - 13, s - 11, 2) * inv_gamma_int(s - 1);
            let z = zeta_exact(2 * s - 13).unwrap();
            let want = z.scale(&(int(-2) * ratio)).shift_pi(2 * s - 12);
            assert_eq!(c_constants(s).unwrap().c0p, want, "s={s}");
        }
    }

    #[test]
    fn d_constants_examples() {
        let d = d_constants(19).unwrap();
        assert!(d.d0p.is_zero());
        assert_eq!(d.d0pp, PiValue::monomial(rat(2, 9450), 8));
        assert!(d_constants(13).unwrap().d0pp.is_zero());
        assert_eq!(d_constants(12).unwrap().d0p, PiValue::monomial(rat(1, 64 * 240), -6));
        assert_eq!(d_constants(16).unwrap().d0p, PiValue::monomial(int(-1), 2));
        for s in 17..=19 {
            assert!(d_constants(s).unwrap().d0p.is_zero(), "s={s}");
        }
        for s in 12..=15 {
            let ratio = gamma_pole_ratio(2 * s - 31, s - 19, 2) * inv_gamma_int(s - 11);
            let z = zeta_exact(2 * s - 31).unwrap();
            let want = z.scale(&(int(2) * pow2(2 * s - 30) * ratio)).shift_pi(2 * s - 30);
            assert_eq!(d_constants(s).unwrap().d0p, want, "s={s}");
        }
    }
}
