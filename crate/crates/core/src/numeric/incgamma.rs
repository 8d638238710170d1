use super::real::{Ctx, Real};
use crate::{Error, Result};

/// `Γ(s, x)` for a positive integer `s`:
/// `(s-1)!·e^{-x}·Σ_{k<s} x^k/k!`. At `x = 0` this is `(s-1)!`.
pub fn incomplete_gamma_int(s: u32, x: &Real, ctx: &Ctx) -> Real {
    debug_assert!(s >= 1);
    let mut term = ctx.int(1);
    let mut sum = ctx.int(1);
    for k in 1..s {
        term = term * x / ctx.int(k as i64);
        sum = sum + &term;
    }
    let fact = (1..s).fold(ctx.int(1), |acc, k| acc * ctx.int(k as i64));
    fact * sum * ctx.exp(&-x)
}

/// Upper incomplete gamma `Γ(a, x)` for real `a` and `x > 0`.
///
/// Legendre's continued fraction when `x ≥ a + 1`, otherwise
/// `Γ(a) - γ(a, x)` with the power series for the lower function.
pub fn incomplete_gamma(a: &Real, x: &Real, ctx: &Ctx) -> Result<Real> {
    if x.is_negative() || x.is_zero() {
        return Err(Error::Domain("incomplete gamma needs x > 0"));
    }
    let af = a.to_f64();
    if x.to_f64() >= af + 1.0 || af <= 0.0 {
        continued_fraction(a, x, ctx)
    } else {
        let g = ctx.gamma(a)?;
        Ok(g - lower_series(a, x, ctx)?)
    }
}

fn continued_fraction(a: &Real, x: &Real, ctx: &Ctx) -> Result<Real> {
    let eps = ctx.eps() / ctx.int(100);
    let tiny = ctx.powi(&ctx.eps(), 4);
    let one = ctx.int(1);
    let mut b = x + &one - a;
    let mut c = ctx.recip(&tiny);
    let mut d = ctx.recip(&b);
    let mut h = d.clone();
    for i in 1..20_000i64 {
        let an = -(ctx.int(i) * (ctx.int(i) - a));
        b = b + ctx.int(2);
        d = &an * &d + &b;
        if d.abs() < tiny {
            d = tiny.clone();
        }
        c = &b + &an / &c;
        if c.abs() < tiny {
            c = tiny.clone();
        }
        d = ctx.recip(&d);
        let del = &d * &c;
        h = &h * &del;
        if (del - &one).abs() < eps {
            let pre = ctx.exp(&(a * &ctx.ln(x) - x));
            return (pre * h).check("incomplete gamma");
        }
    }
    Err(Error::QuadratureNonConvergence("incomplete gamma continued fraction"))
}

fn lower_series(a: &Real, x: &Real, ctx: &Ctx) -> Result<Real> {
    let eps = ctx.eps() / ctx.int(100);
    let mut ap = a.clone();
    let mut del = ctx.recip(a);
    let mut sum = del.clone();
    for _ in 0..20_000 {
        ap = ap + ctx.int(1);
        del = del * x / &ap;
        sum = sum + &del;
        if del.abs() < &sum.abs() * &eps {
            let pre = ctx.exp(&(a * &ctx.ln(x) - x));
            return (pre * sum).check("lower incomplete gamma");
        }
    }
    Err(Error::QuadratureNonConvergence("lower incomplete gamma series"))
}
