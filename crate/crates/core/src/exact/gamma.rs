use core::ops::{Div, Mul};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::pi_value::PiValue;
use super::rational::{factorial, int, Rational};
use super::zeta::zeta_exact;
use crate::{Error, Result};

/// `Γ(a)/Γ(a-i)` continued to all integers `a` as the product
/// `(a-1)(a-2)…(a-i)`; it vanishes once the product reaches a zero factor.
pub fn falling_ratio(a: i64, i: u32) -> BigInt {
    (1..=i as i64).fold(BigInt::one(), |acc, j| acc * (a - j))
}

/// `1/Γ(n)` at an integer, which is zero at the poles `n ≤ 0`.
pub fn inv_gamma_int(n: i64) -> Rational {
    if n <= 0 {
        Rational::zero()
    } else {
        Rational::new(BigInt::one(), factorial(n as u64 - 1))
    }
}

/// `lim_{ε→0} Γ(x + cε) / Γ(y + ε)` for poles `x, y ≤ 0`:
/// `(1/c)·(-1)^{x-y}·(-y)!/(-x)!`.
pub fn gamma_pole_ratio(x: i64, y: i64, c: u32) -> Rational {
    debug_assert!(x <= 0 && y <= 0 && c >= 1);
    let sign = if (x - y).rem_euclid(2) == 0 { 1 } else { -1 };
    int(sign) * Rational::new(factorial((-y) as u64), factorial((-x) as u64)) / int(c as i64)
}

/// Leading term `coeff · ε^order` of a function of `ε` near `ε = 0`.
///
/// Products and quotients of Γ and ζ factors whose arguments move linearly in
/// `ε` are tracked through their leading terms, so that pole/zero
/// cancellations in Eisenstein constant terms resolve to exact limits.
/// `coeff == None` records a finite, nonzero factor without an exact closed
/// form (ζ at an odd integer ≥ 3); it only matters if it survives into the
/// limit.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Laurent {
    pub coeff: Option<PiValue>,
    pub order: i32,
}

impl Laurent {
    pub fn constant(v: PiValue) -> Self {
        debug_assert!(!v.is_zero());
        Self {
            coeff: Some(v),
            order: 0,
        }
    }

    /// `Γ(z0 + speed·ε)`.
    pub fn gamma(z0: i64, speed: u32) -> Self {
        if z0 >= 1 {
            Self::constant(PiValue::rational(Rational::from_integer(factorial(z0 as u64 - 1))))
        } else {
            // Γ(-n + δ) ≈ (-1)^n / (n! δ)
            let n = (-z0) as u64;
            let sign = if n % 2 == 0 { 1 } else { -1 };
            let q = int(sign) / (Rational::from_integer(factorial(n)) * int(speed as i64));
            Self {
                coeff: Some(PiValue::rational(q)),
                order: -1,
            }
        }
    }

    /// `ζ(z0 + speed·ε)`.
    pub fn zeta(z0: i64, speed: u32) -> Result<Self> {
        if z0 == 1 {
            // ζ(1 + δ) ≈ 1/δ
            return Ok(Self {
                coeff: Some(PiValue::rational(int(1) / int(speed as i64))),
                order: -1,
            });
        }
        match zeta_exact(z0) {
            // trivial zero: ζ(-2m + δ) ≈ ζ'(-2m)·δ, a slope with no closed form here
            Ok(v) if v.is_zero() => Ok(Self {
                coeff: None,
                order: 1,
            }),
            Ok(v) => Ok(Self::constant(v)),
            Err(Error::NoClosedForm(_)) => Ok(Self {
                coeff: None,
                order: 0,
            }),
            Err(e) => Err(e),
        }
    }

    /// The value at `ε = 0`.
    pub fn limit(&self) -> Result<PiValue> {
        match self.order {
            o if o > 0 => Ok(PiValue::zero()),
            0 => self.coeff.clone().ok_or(Error::NoClosedForm(0)),
            _ => Err(Error::Divergent("pole survives in the limit")),
        }
    }
}

impl Mul for Laurent {
    type Output = Laurent;
    fn mul(self, rhs: Laurent) -> Laurent {
        Laurent {
            coeff: self.coeff.zip(rhs.coeff).map(|(a, b)| a * b),
            order: self.order + rhs.order,
        }
    }
}

impl Div for Laurent {
    type Output = Laurent;
    fn div(self, rhs: Laurent) -> Laurent {
        let inv = rhs.coeff.map(|c| {
            let (q, e) = c.as_monomial().expect("Laurent divisors are monomials");
            PiValue::monomial(q.recip(), -e)
        });
        Laurent {
            coeff: self.coeff.zip(inv).map(|(a, b)| a * b),
            order: self.order - rhs.order,
        }
    }
}
