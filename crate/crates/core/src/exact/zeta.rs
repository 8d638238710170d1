use num_bigint::BigInt;
use num_traits::Zero;

use super::bernoulli::bernoulli;
use super::pi_value::PiValue;
use super::rational::{factorial, int, rat, Rational};
use crate::{Error, Result};

/// `ζ(n)` at the integers where it is a rational multiple of a power of π.
///
/// Even `n ≥ 2` gives `(-1)^{n/2+1} B_n (2π)^n / (2·n!)`; `ζ(0) = -1/2`;
/// `n < 0` gives `-B_{1-n}/(1-n)`, which is zero at negative even `n`. Odd
/// `n ≥ 3` and the pole at `n = 1` are rejected.
pub fn zeta_exact(n: i64) -> Result<PiValue> {
    if n >= 2 {
        if n % 2 == 1 {
            return Err(Error::NoClosedForm(n));
        }
        let sign = if (n / 2) % 2 == 1 { 1 } else { -1 };
        let two_n = Rational::from_integer(BigInt::from(1) << n as u64);
        let q = int(sign) * bernoulli(n as usize) * two_n
            / Rational::from_integer(2 * factorial(n as u64));
        return Ok(PiValue::monomial(q, n));
    }
    if n == 1 {
        return Err(Error::Divergent("zeta has a pole at 1"));
    }
    if n == 0 {
        // B_1 = -1/2 here, so n = 0 is not covered by -B_{1-n}/(1-n).
        return Ok(PiValue::rational(rat(-1, 2)));
    }
    let m = 1 - n;
    let b = bernoulli(m as usize);
    if b.is_zero() {
        return Ok(PiValue::zero());
    }
    Ok(PiValue::rational(-b / int(m)))
}
