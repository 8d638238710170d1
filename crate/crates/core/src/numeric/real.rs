use alloc::string::String;
use alloc::vec::Vec;
use alloc::rc::Rc;
use core::cell::RefCell;
use core::cmp::Ordering;
use core::fmt;
use core::ops::{Add, Div, Mul, Neg, Sub};

use astro_float::{BigFloat, Consts, Radix, RoundingMode, Sign, Word};
use num_bigint::{BigInt, BigUint};
use num_traits::{Signed, ToPrimitive, Zero};

use crate::exact::{BernoulliTable, PiValue, Rational};
use crate::{Error, Result};

const RM: RoundingMode = RoundingMode::ToEven;
const GUARD_BITS: usize = 40;

/// A binary floating-point value.
///
/// Arithmetic between two values runs at the larger of their precisions.
/// Values are produced by a [`Ctx`], which fixes the working precision.
#[derive(Clone)]
pub struct Real(BigFloat);

/// Working-precision context: decimal digits `D`, the binary precision that
/// backs them, and a cache of mathematical constants.
///
/// There is no global precision; every numerical entry point takes a context.
/// A context is cheap to create but not `Sync`; concurrent callers each build
/// their own.
pub struct Ctx {
    digits: u32,
    bits: usize,
    consts: Rc<RefCell<Consts>>,
}

fn bits_for(digits: u32) -> usize {
    let bits = libm::ceil(digits as f64 * core::f64::consts::LOG2_10) as usize + GUARD_BITS;
    bits.div_ceil(64) * 64
}

impl Ctx {
    /// Context for `digits ≥ 15` decimal digits.
    pub fn new(digits: u32) -> Result<Self> {
        if digits < 15 {
            return Err(Error::PrecisionTooLow(digits));
        }
        Ok(Self::with_digits(digits))
    }

    fn with_digits(digits: u32) -> Self {
        Self {
            digits,
            bits: bits_for(digits),
            consts: Rc::new(RefCell::new(Consts::new().expect("constant cache allocation"))),
        }
    }

    /// A context with `extra` more decimal digits, sharing the constant cache.
    pub fn widened(&self, extra: u32) -> Self {
        let digits = self.digits + extra;
        Self {
            digits,
            bits: bits_for(digits),
            consts: Rc::clone(&self.consts),
        }
    }

    pub fn digits(&self) -> u32 {
        self.digits
    }

    pub fn bits(&self) -> usize {
        self.bits
    }

    pub fn int(&self, n: i64) -> Real {
        Real(BigFloat::from_i64(n, self.bits))
    }

    pub fn f64(&self, x: f64) -> Real {
        Real(BigFloat::from_f64(x, self.bits))
    }

    pub fn big(&self, n: &BigInt) -> Real {
        if n.is_zero() {
            return Real::zero();
        }
        let words: Vec<Word> = n.magnitude().iter_u64_digits().collect();
        let sign = if n.is_negative() { Sign::Neg } else { Sign::Pos };
        let exact = BigFloat::from_words(&words, sign, (words.len() * 64) as astro_float::Exponent);
        let mut v = exact;
        v.set_precision(self.bits.max(64), RM).expect("precision change");
        Real(v)
    }

    pub fn rational(&self, q: &Rational) -> Real {
        &self.big(q.numer()) / &self.big(q.denom())
    }

    /// Parse a decimal literal such as `"1.25e-7"`.
    pub fn parse(&self, s: &str) -> Real {
        Real(BigFloat::parse(s, Radix::Dec, self.bits, RM, &mut self.consts.borrow_mut()))
    }

    pub fn pi(&self) -> Real {
        Real(self.consts.borrow_mut().pi(self.bits, RM))
    }

    pub fn pi_value(&self, v: &PiValue) -> Real {
        let pi = self.pi();
        v.terms().iter().fold(Real::zero(), |acc, (q, e)| {
            acc + self.rational(q) * self.powi_signed(&pi, *e)
        })
    }

    pub fn exp(&self, x: &Real) -> Real {
        Real(x.0.exp(self.bits, RM, &mut self.consts.borrow_mut()))
    }

    pub fn ln(&self, x: &Real) -> Real {
        Real(x.0.ln(self.bits, RM, &mut self.consts.borrow_mut()))
    }

    pub fn sqrt(&self, x: &Real) -> Real {
        Real(x.0.sqrt(self.bits, RM))
    }

    pub fn sin(&self, x: &Real) -> Real {
        Real(x.0.sin(self.bits, RM, &mut self.consts.borrow_mut()))
    }

    pub fn sinh(&self, x: &Real) -> Real {
        Real(x.0.sinh(self.bits, RM, &mut self.consts.borrow_mut()))
    }

    pub fn cosh(&self, x: &Real) -> Real {
        Real(x.0.cosh(self.bits, RM, &mut self.consts.borrow_mut()))
    }

    pub fn powi(&self, x: &Real, n: u32) -> Real {
        Real(x.0.powi(n as usize, self.bits, RM))
    }

    pub fn powi_signed(&self, x: &Real, n: i64) -> Real {
        let p = self.powi(x, n.unsigned_abs() as u32);
        if n < 0 {
            self.recip(&p)
        } else {
            p
        }
    }

    /// `x^y` for `x > 0`.
    pub fn pow(&self, x: &Real, y: &Real) -> Real {
        self.exp(&(y * &self.ln(x)))
    }

    pub fn recip(&self, x: &Real) -> Real {
        Real(x.0.reciprocal(self.bits, RM))
    }

    /// `10^{-digits}`, the target accuracy of this context.
    pub fn eps(&self) -> Real {
        self.recip(&self.powi(&self.int(10), self.digits))
    }

    /// `Γ(x)` for real `x` away from the poles.
    ///
    /// Stirling's series with exact Bernoulli coefficients after shifting the
    /// argument up; reflection below 1/2.
    pub fn gamma(&self, x: &Real) -> Result<Real> {
        if x.to_f64() < 0.5 {
            let nearest = libm::round(x.to_f64());
            let r = x - &self.f64(nearest);
            if r.is_zero() {
                return Err(Error::Domain("Gamma at a non-positive integer"));
            }
            let mut sin = self.sin(&(&self.pi() * &r));
            if (nearest as i64) % 2 != 0 {
                sin = -sin;
            }
            let g = self.gamma(&(&self.int(1) - x))?;
            return Ok(self.pi() / (sin * g));
        }
        let wide = self.widened(10);
        let shift = (self.digits as f64).max(20.0) as i64;
        let mut z = wide.rebase(x);
        let mut prod = wide.int(1);
        while z.to_f64() < shift as f64 {
            prod = &prod * &z;
            z = z + wide.int(1);
        }
        let ln_z = wide.ln(&z);
        let half = wide.parse("0.5");
        let two_pi = &wide.pi() * &wide.int(2);
        let mut lg = &(&(&z - &half) * &ln_z) - &z;
        lg = lg + &half * &wide.ln(&two_pi);
        let mut table = BernoulliTable::new();
        let z2 = &z * &z;
        let mut zpow = z.clone();
        let tol = wide.eps();
        for k in 1..200usize {
            let b = wide.rational(&table.get(2 * k));
            let term = b / (wide.int((2 * k * (2 * k - 1)) as i64) * &zpow);
            let small = term.abs() < tol;
            lg = lg + term;
            if small {
                break;
            }
            zpow = &zpow * &z2;
        }
        let g = wide.exp(&lg) / prod;
        Ok(self.rebase(&g))
    }

    /// Round `x` to this context's precision.
    pub fn rebase(&self, x: &Real) -> Real {
        let mut v = x.0.clone();
        v.set_precision(self.bits, RM).expect("precision change");
        Real(v)
    }
}

impl Real {
    pub fn zero() -> Self {
        Real(BigFloat::from_word(0, 64))
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_nan(&self) -> bool {
        self.0.is_nan()
    }

    pub fn is_negative(&self) -> bool {
        self.0.is_negative()
    }

    pub fn abs(&self) -> Real {
        Real(self.0.abs())
    }

    pub fn check(self, what: &'static str) -> Result<Real> {
        if self.0.is_nan() || self.0.is_inf() {
            Err(Error::NotANumber(what))
        } else {
            Ok(self)
        }
    }

    /// Nearest `f64` (truncated mantissa; exponent saturates).
    pub fn to_f64(&self) -> f64 {
        match self.0.as_raw_parts() {
            Some((words, _, sign, e, _)) => {
                if words.is_empty() || self.0.is_zero() {
                    return 0.0;
                }
                let top = words[words.len() - 1] as f64;
                let next = if words.len() > 1 { words[words.len() - 2] as f64 } else { 0.0 };
                let m = (top + next / 18446744073709551616.0) / 18446744073709551616.0;
                let v = m * libm::exp2(e as f64);
                if sign == Sign::Neg {
                    -v
                } else {
                    v
                }
            }
            None => f64::NAN,
        }
    }

    /// `floor(|x|)` as an integer, keeping the sign of `x`.
    pub fn trunc_to_bigint(&self) -> BigInt {
        let Some((words, _, sign, e, _)) = self.0.as_raw_parts() else {
            return BigInt::zero();
        };
        if self.0.is_zero() || e <= 0 {
            return BigInt::zero();
        }
        let mant = BigUint::from_slice(
            &words
                .iter()
                .flat_map(|w| [(*w & 0xffff_ffff) as u32, (*w >> 32) as u32])
                .collect::<Vec<u32>>(),
        );
        let width = (words.len() * 64) as i64;
        let e = e as i64;
        let mag = if e >= width {
            mant << (e - width) as usize
        } else {
            mant >> (width - e) as usize
        };
        let v = BigInt::from(mag);
        if sign == Sign::Neg {
            -v
        } else {
            v
        }
    }

    /// Decimal rendering with `sig` significant digits: positional notation
    /// for magnitudes in `[1e-4, 1e16)`, scientific otherwise.
    pub fn to_decimal(&self, sig: u32, ctx: &Ctx) -> String {
        use alloc::format;
        if self.is_zero() {
            return String::from("0");
        }
        if self.is_nan() {
            return String::from("NaN");
        }
        let ctx = ctx.widened(sig.saturating_sub(ctx.digits()) + 10);
        let a = ctx.rebase(&self.abs());
        let mut e10 = libm::floor(libm::log10(a.to_f64())) as i64;
        let ten = ctx.int(10);
        let digits = loop {
            let scaled = &a * &ctx.powi_signed(&ten, sig as i64 - 1 - e10);
            let rounded = (scaled + ctx.parse("0.5")).trunc_to_bigint();
            let s = rounded.to_str_radix(10);
            if s.len() as u32 > sig {
                e10 += 1;
                continue;
            }
            if (s.len() as u32) < sig {
                e10 -= 1;
                continue;
            }
            break s;
        };
        let sign = if self.is_negative() { "-" } else { "" };
        if (-4..16).contains(&e10) {
            let mut out = String::from(sign);
            if e10 < 0 {
                out.push_str("0.");
                for _ in 0..(-e10 - 1) {
                    out.push('0');
                }
                out.push_str(&digits);
            } else {
                let int_len = e10 as usize + 1;
                if digits.len() <= int_len {
                    out.push_str(&digits);
                    for _ in digits.len()..int_len {
                        out.push('0');
                    }
                } else {
                    out.push_str(&digits[..int_len]);
                    out.push('.');
                    out.push_str(&digits[int_len..]);
                }
            }
            out
        } else {
            format!("{sign}{}.{}e{e10}", &digits[..1], &digits[1..])
        }
    }
}

impl fmt::Debug for Real {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Real({:e})", self.to_f64())
    }
}

impl PartialEq for Real {
    fn eq(&self, other: &Self) -> bool {
        self.0.cmp(&other.0) == Some(0)
    }
}

impl PartialOrd for Real {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        self.0.cmp(&other.0).map(|c| c.cmp(&0))
    }
}

fn prec(a: &BigFloat, b: &BigFloat) -> usize {
    a.precision().unwrap_or(64).max(b.precision().unwrap_or(64))
}

macro_rules! binop {
    ($tr:ident, $m:ident) => {
        impl $tr<&Real> for &Real {
            type Output = Real;
            fn $m(self, rhs: &Real) -> Real {
                Real(self.0.$m(&rhs.0, prec(&self.0, &rhs.0), RM))
            }
        }
        impl $tr<Real> for Real {
            type Output = Real;
            fn $m(self, rhs: Real) -> Real {
                (&self).$m(&rhs)
            }
        }
        impl $tr<&Real> for Real {
            type Output = Real;
            fn $m(self, rhs: &Real) -> Real {
                (&self).$m(rhs)
            }
        }
        impl $tr<Real> for &Real {
            type Output = Real;
            fn $m(self, rhs: Real) -> Real {
                self.$m(&rhs)
            }
        }
    };
}
binop!(Add, add);
binop!(Sub, sub);
binop!(Mul, mul);
binop!(Div, div);

impl Neg for Real {
    type Output = Real;
    fn neg(self) -> Real {
        Real(self.0.neg())
    }
}

impl Neg for &Real {
    type Output = Real;
    fn neg(self) -> Real {
        Real(self.0.clone().neg())
    }
}

/// Integer-to-`Real` conversion for coefficient types.
pub trait ToReal {
    fn to_real(&self, ctx: &Ctx) -> Real;
}

impl ToReal for BigInt {
    fn to_real(&self, ctx: &Ctx) -> Real {
        match self.to_i64() {
            Some(v) => ctx.int(v),
            None => ctx.big(self),
        }
    }
}

impl ToReal for Rational {
    fn to_real(&self, ctx: &Ctx) -> Real {
        ctx.rational(self)
    }
}
