use super::real::{Ctx, Real};
use crate::{Error, Result};

/// Largest order served by [`bessel_k`].
pub const MAX_ORDER: u32 = 20;

/// Modified Bessel function `K_ν(x)` for integer `0 ≤ ν ≤ 20` and
/// `1e-6 < x < 1e4`.
///
/// `K_0` and `K_1` come from Steed's continued fraction for `x ≥ 5` and from
/// the ascending series below that; higher orders by upward recurrence, which
/// is stable for `K`.
pub fn bessel_k(nu: u32, x: &Real, ctx: &Ctx) -> Result<Real> {
    if nu <= MAX_ORDER && x.to_f64() < 1e4 {
        let wide = ctx.widened(5);
        if x.to_f64() >= asymptotic_limit(&wide) {
            return Ok(ctx.rebase(&k_asymptotic(nu, &wide.rebase(x), &wide)));
        }
    }
    Ok(bessel_k_upto(nu, x, ctx)?.pop().expect("nonempty"))
}

/// `[K_0(x), …, K_ν(x)]`.
pub fn bessel_k_upto(nu: u32, x: &Real, ctx: &Ctx) -> Result<alloc::vec::Vec<Real>> {
    if nu > MAX_ORDER {
        return Err(Error::OutOfRange { what: "Bessel order", value: nu as i64, range: "0..=20" });
    }
    let xf = x.to_f64();
    if !(xf > 1e-6 && xf < 1e4) {
        return Err(Error::Domain("Bessel K argument outside (1e-6, 1e4)"));
    }
    let (k0, k1) = if xf >= SERIES_LIMIT {
        let wide = ctx.widened(5 + nu);
        k01_steed(&wide.rebase(x), &wide)?
    } else {
        // the series loses about x/ln 10 digits to cancellation
        let wide = ctx.widened(5 + nu + libm::ceil(xf * 0.87) as u32);
        k01_series(&wide.rebase(x), &wide)
    };
    let wide = ctx.widened(5 + nu);
    let xw = wide.rebase(x);
    let mut out = alloc::vec![k0, k1];
    let two_over_x = wide.int(2) / &xw;
    for j in 1..nu as i64 {
        let next = &out[j as usize - 1] + &(&(&two_over_x * &wide.int(j)) * &out[j as usize]);
        out.push(next);
    }
    out.truncate(nu as usize + 1);
    Ok(out.iter().map(|v| ctx.rebase(v)).collect())
}

const SERIES_LIMIT: f64 = 5.0;

/// Smallest `x` at which the asymptotic series reaches the working precision:
/// its smallest term is about `e^{-2x}`.
fn asymptotic_limit(ctx: &Ctx) -> f64 {
    ctx.bits() as f64 * core::f64::consts::LN_2 / 2.0 + 10.0
}

/// `K_ν(x) ~ √(π/2x) e^{-x} Σ a_k x^{-k}`, `a_k = a_{k-1}(4ν² - (2k-1)²)/(8k)`,
/// summed until the terms, past their turning point at `k ≈ ν`, start to grow.
fn k_asymptotic(nu: u32, x: &Real, ctx: &Ctx) -> Real {
    let mu = 4 * (nu as i64) * (nu as i64);
    let eps = ctx.eps();
    let inv_x = ctx.recip(x);
    let mut term = ctx.int(1);
    let mut sum = ctx.int(1);
    for k in 1i64.. {
        let next = &term * &(&ctx.int(mu - (2 * k - 1) * (2 * k - 1)) * &inv_x) / ctx.int(8 * k);
        if (2 * k - 1 > 2 * nu as i64 && next.abs() >= term.abs()) || next.abs() < eps {
            sum = sum + next;
            break;
        }
        sum = sum + &next;
        term = next;
    }
    ctx.sqrt(&(ctx.pi() / (ctx.int(2) * x))) * ctx.exp(&-x) * sum
}

/// Euler's constant by the Brent–McMillan formula `γ ≈ U/V`, with
/// error of order `e^{-4n}`.
fn euler_gamma(ctx: &Ctx) -> Real {
    let n = libm::ceil((ctx.digits() as f64 + 5.0) * core::f64::consts::LN_10 / 4.0) as i64 + 1;
    let ln_n = ctx.ln(&ctx.int(n));
    let n2 = ctx.int(n * n);
    let eps = ctx.eps();
    // a_k = (n^k/k!)² (H_k - ln n), b_k = (n^k/k!)²
    let mut b = ctx.int(1);
    let mut a = -&ln_n;
    let (mut u, mut v) = (a.clone(), b.clone());
    for k in 1i64.. {
        let kk = ctx.int(k * k);
        b = &b * &n2 / &kk;
        a = (&a * &n2 / &kk) + &b / &ctx.int(k);
        u = u + &a;
        v = v + &b;
        if k > n && (&b / &v) < eps {
            break;
        }
    }
    u / v
}

/// Ascending series for `K_0`, then `K_1` from the Wronskian
/// `I_0 K_1 + I_1 K_0 = 1/x`.
fn k01_series(x: &Real, ctx: &Ctx) -> (Real, Real) {
    let half = x / &ctx.int(2);
    let y = &half * &half;
    let lead = ctx.ln(&half) + euler_gamma(ctx);
    let eps = ctx.eps();
    // term = y^k/(k!)², i1 term = (x/2) y^k/(k!(k+1)!)
    let mut term = ctx.int(1);
    let mut harmonic = Real::zero();
    let mut i0 = ctx.int(1);
    let mut i1 = half.clone();
    let mut tail = Real::zero();
    for k in 1i64.. {
        term = term * &y / ctx.int(k * k);
        harmonic = harmonic + ctx.recip(&ctx.int(k));
        i0 = i0 + &term;
        i1 = i1 + &(&term * &half) / &ctx.int(k + 1);
        tail = tail + &term * &harmonic;
        if term < &eps * &i0 && k > 2 {
            break;
        }
    }
    let k0 = tail - &lead * &i0;
    let k1 = (ctx.recip(x) - &i1 * &k0) / i0;
    (k0, k1)
}

fn k01_steed(x: &Real, ctx: &Ctx) -> Result<(Real, Real)> {
    let one = ctx.int(1);
    let eps = ctx.eps();
    let a1 = ctx.parse("0.25");
    let mut b = ctx.int(2) * (&one + x);
    let mut d = ctx.recip(&b);
    let mut delh = d.clone();
    let mut h = d.clone();
    let mut q1 = Real::zero();
    let mut q2 = one.clone();
    let mut q = a1.clone();
    let mut c = a1.clone();
    let mut a = -&a1;
    let mut s = &one + &(&q * &delh);
    let mut converged = false;
    for i in 1..100_000i64 {
        a = a - ctx.int(2 * i);
        c = -(&a * &c) / ctx.int(i + 1);
        let qnew = (&q1 - &(&b * &q2)) / &a;
        q1 = q2;
        q2 = qnew;
        q = q + &c * &q2;
        b = b + ctx.int(2);
        d = ctx.recip(&(&b + &(&a * &d)));
        delh = (&(&b * &d) - &one) * &delh;
        h = h + &delh;
        let dels = &q * &delh;
        s = s + &dels;
        if (&dels / &s).abs() < eps {
            converged = true;
            break;
        }
    }
    if !converged {
        return Err(Error::QuadratureNonConvergence("Bessel K continued fraction"));
    }
    let h = a1 * h;
    let k0 = ctx.sqrt(&(ctx.pi() / (ctx.int(2) * x))) * ctx.exp(&-x) / s;
    let k1 = &k0 * &(&(&(x + &ctx.parse("0.5")) - &h) / x);
    Ok((k0, k1))
}

/// Trapezoid rule on `∫_0^∞ e^{-x cosh t} cosh(νt) dt`, kept as an
/// independent check of the two production routes.
#[cfg(test)]
fn k01_trapezoid(x: &Real, ctx: &Ctx) -> (Real, Real) {
    let xf = x.to_f64();
    // Strip half-width π/2 gives discretization error ≈ e^{-π²/h}.
    let target = (ctx.digits() as f64 + 8.0) * core::f64::consts::LN_10;
    let h = (core::f64::consts::PI * core::f64::consts::PI / target).min(0.436 / libm::sqrt(xf));
    let t_max = libm::acosh(target / xf + 1.0) + 1.0;
    let steps = libm::ceil(t_max / h) as i64;
    let hr = ctx.f64(h);
    let half = ctx.parse("0.5");
    let mut s0 = &half * &ctx.exp(&-x);
    let mut s1 = s0.clone();
    for j in 1..=steps {
        let t = &hr * &ctx.int(j);
        let et = ctx.exp(&t);
        let emt = ctx.recip(&et);
        let cosh = &half * &(&et + &emt);
        let w = ctx.exp(&-(x * &cosh));
        s1 = s1 + &w * &cosh;
        s0 = s0 + w;
    }
    (&hr * &s0, &hr * &s1)
}
