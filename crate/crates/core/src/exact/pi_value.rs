use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::rational::Rational;
use crate::{Error, Result};

/// An exact value `Σ q_i · π^{e_i}`.
///
/// Monomials are kept sorted by strictly increasing exponent, with no zero
/// coefficients; the empty sum is zero. Distinct exponents are never merged.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct PiValue {
    terms: Vec<(Rational, i64)>,
}

impl PiValue {
    pub fn zero() -> Self {
        Self { terms: Vec::new() }
    }

    pub fn one() -> Self {
        Self::rational(Rational::one())
    }

    pub fn rational(q: Rational) -> Self {
        Self::monomial(q, 0)
    }

    /// `q · π^e`.
    pub fn monomial(q: Rational, e: i64) -> Self {
        if q.is_zero() {
            Self::zero()
        } else {
            Self {
                terms: alloc::vec![(q, e)],
            }
        }
    }

    /// `π^e`.
    pub fn pi_pow(e: i64) -> Self {
        Self::monomial(Rational::one(), e)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> &[(Rational, i64)] {
        &self.terms
    }

    /// The value as `(q, e)` when it is a single monomial `q·π^e`.
    ///
    /// Zero has no π-exponent and is reported as an error too.
    pub fn as_monomial(&self) -> Result<(&Rational, i64)> {
        match self.terms.as_slice() {
            [(q, e)] => Ok((q, *e)),
            other => Err(Error::NotMonomial(other.len())),
        }
    }

    pub fn scale(&self, q: &Rational) -> Self {
        if q.is_zero() {
            return Self::zero();
        }
        Self {
            terms: self.terms.iter().map(|(c, e)| (c * q, *e)).collect(),
        }
    }

    /// Multiply by `π^e`.
    pub fn shift_pi(&self, e: i64) -> Self {
        Self {
            terms: self.terms.iter().map(|(c, k)| (c.clone(), k + e)).collect(),
        }
    }

    fn merge(mut a: Vec<(Rational, i64)>, b: &[(Rational, i64)], negate: bool) -> Vec<(Rational, i64)> {
        for (c, e) in b {
            let c = if negate { -c.clone() } else { c.clone() };
            match a.binary_search_by_key(e, |t| t.1) {
                Ok(i) => {
                    a[i].0 += c;
                    if a[i].0.is_zero() {
                        a.remove(i);
                    }
                }
                Err(i) => a.insert(i, (c, *e)),
            }
        }
        a
    }
}

impl From<Rational> for PiValue {
    fn from(q: Rational) -> Self {
        Self::rational(q)
    }
}

impl Add<&PiValue> for &PiValue {
    type Output = PiValue;
    fn add(self, rhs: &PiValue) -> PiValue {
        PiValue {
            terms: PiValue::merge(self.terms.clone(), &rhs.terms, false),
        }
    }
}

impl Sub<&PiValue> for &PiValue {
    type Output = PiValue;
    fn sub(self, rhs: &PiValue) -> PiValue {
        PiValue {
            terms: PiValue::merge(self.terms.clone(), &rhs.terms, true),
        }
    }
}

impl Mul<&PiValue> for &PiValue {
    type Output = PiValue;
    fn mul(self, rhs: &PiValue) -> PiValue {
        let mut acc = Vec::new();
        for (a, ea) in &self.terms {
            for (b, eb) in &rhs.terms {
                acc = PiValue::merge(acc, &[(a * b, ea + eb)], false);
            }
        }
        PiValue { terms: acc }
    }
}

impl Neg for &PiValue {
    type Output = PiValue;
    fn neg(self) -> PiValue {
        PiValue {
            terms: self.terms.iter().map(|(c, e)| (-c.clone(), *e)).collect(),
        }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr<PiValue> for PiValue {
            type Output = PiValue;
            fn $m(self, rhs: PiValue) -> PiValue {
                (&self).$m(&rhs)
            }
        }
        impl $tr<&PiValue> for PiValue {
            type Output = PiValue;
            fn $m(self, rhs: &PiValue) -> PiValue {
                (&self).$m(rhs)
            }
        }
        impl $tr<PiValue> for &PiValue {
            type Output = PiValue;
            fn $m(self, rhs: PiValue) -> PiValue {
                self.$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for PiValue {
    type Output = PiValue;
    fn neg(self) -> PiValue {
        -&self
    }
}

impl fmt::Display for PiValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (c, e)) in self.terms.iter().enumerate() {
            if i > 0 {
                f.write_str(" + ")?;
            }
            match *e {
                0 => write!(f, "{c}")?,
                1 => write!(f, "({c})·π")?,
                _ => write!(f, "({c})·π^{e}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for PiValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
