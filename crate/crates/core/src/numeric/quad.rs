//! Double-exponential quadrature at arbitrary precision.
//!
//! Both rules refine by halving the step and reuse all earlier nodes; the
//! error estimate is the change between the last two levels.

use super::real::{Ctx, Real};
use crate::{Error, Result};

const MAX_LEVEL: u32 = 12;
const MIN_LEVEL: u32 = 3;

#[derive(Debug, Clone)]
pub struct Quadrature {
    pub value: Real,
    pub error: Real,
    pub evaluations: usize,
    pub level: u32,
}

/// `∫_a^b f(x) dx` by the tanh-sinh rule
/// `x = m + r·tanh(π/2·sinh t)`.
///
/// Nodes are generated as distances from the nearer endpoint so that
/// endpoint behaviour is resolved to full relative precision.
pub fn tanh_sinh<F>(ctx: &Ctx, a: &Real, b: &Real, mut f: F) -> Result<Quadrature>
where
    F: FnMut(&Real) -> Result<Real>,
{
    let half = (b - a) / ctx.int(2);
    let mid = a + &half;
    let half_pi = ctx.pi() / ctx.int(2);
    let tiny = ctx.powi(&ctx.eps(), 2);
    let one = ctx.int(1);

    // node at offset t: returns (distance from endpoint in units of `half`, weight)
    let node = |t: &Real| -> (Real, Real) {
        let et = ctx.exp(t);
        let eti = ctx.recip(&et);
        let sinh = (&et - &eti) / ctx.int(2);
        let cosh = (&et + &eti) / ctx.int(2);
        let u = &half_pi * &sinh;
        let e2u = ctx.exp(&-(&u * &ctx.int(2)));
        let denom = &one + &e2u;
        let delta = (&e2u * &ctx.int(2)) / &denom;
        // sech²(u) = 4 e^{-2u} / (1 + e^{-2u})²
        let sech2 = (&e2u * &ctx.int(4)) / (&denom * &denom);
        (delta, &half_pi * &cosh * sech2)
    };

    let mut evaluations = 0usize;
    let eval_pair = |delta: &Real, w: &Real, f: &mut F, ev: &mut usize| -> Result<Real> {
        let off = &half * delta;
        let left = f(&(a + &off))?;
        let right = f(&(b - &off))?;
        *ev += 2;
        Ok((left + right) * w)
    };

    // level 0: t = 0, ±1, ±2, …
    let mut sum = f(&mid)? * &half_pi;
    evaluations += 1;
    let mut k = 1i64;
    loop {
        let (delta, w) = node(&ctx.int(k));
        if w < tiny || (&delta * &half).abs() < tiny {
            break;
        }
        sum = sum + eval_pair(&delta, &w, &mut f, &mut evaluations)?;
        k += 1;
    }
    let mut h = ctx.int(1);
    let mut estimate = &sum * &h * &half;
    let mut previous = estimate.clone();
    let mut last_err: Option<Real> = None;
    for level in 1..=MAX_LEVEL {
        h = h / ctx.int(2);
        let mut j = 1i64;
        loop {
            let t = &h * &ctx.int(j);
            let (delta, w) = node(&t);
            if w < tiny || (&delta * &half).abs() < tiny {
                break;
            }
            sum = sum + eval_pair(&delta, &w, &mut f, &mut evaluations)?;
            j += 2;
        }
        estimate = &sum * &h * &half;
        let err = (&estimate - &previous).abs();
        if level >= MIN_LEVEL {
            if let Some(error) = converged(ctx, &err, last_err.as_ref(), &estimate) {
                return Ok(Quadrature {
                    value: estimate,
                    error,
                    evaluations,
                    level,
                });
            }
        }
        last_err = Some(err);
        previous = estimate.clone();
    }
    Err(Error::QuadratureNonConvergence("tanh-sinh"))
}

/// `∫_a^∞ f(x) dx` by the exp-sinh rule `x = a + exp(π/2·sinh t)`.
///
/// `f` must decay at infinity; the node sweep in each direction stops once
/// a few consecutive contributions fall below the target accuracy.
pub fn exp_sinh<F>(ctx: &Ctx, a: &Real, mut f: F) -> Result<Quadrature>
where
    F: FnMut(&Real) -> Result<Real>,
{
    let mut rule = ExpSinh {
        ctx,
        a,
        half_pi: ctx.pi() / ctx.int(2),
        evaluations: 0,
    };
    let mut h = ctx.int(1);
    let mut scale = rule.term(&Real::zero(), &mut f)?.abs();
    if scale.is_zero() {
        scale = ctx.int(1);
    }
    let mut sum = rule.sweep(&Real::zero(), &h, &scale, &mut f)?;
    let mut previous = &sum * &h;
    let mut last_err: Option<Real> = None;
    for level in 1..=MAX_LEVEL {
        h = h / ctx.int(2);
        if previous.abs() > scale {
            scale = previous.abs();
        }
        // new nodes sit at odd multiples of h
        let stride = &h * &ctx.int(2);
        sum = sum + rule.sweep(&h, &stride, &scale, &mut f)?;
        let estimate = &sum * &h;
        let err = (&estimate - &previous).abs();
        if level >= MIN_LEVEL {
            if let Some(error) = converged(ctx, &err, last_err.as_ref(), &estimate) {
                return Ok(Quadrature {
                    value: estimate,
                    error,
                    evaluations: rule.evaluations,
                    level,
                });
            }
        }
        last_err = Some(err);
        previous = estimate;
    }
    Err(Error::QuadratureNonConvergence("exp-sinh"))
}

struct ExpSinh<'a> {
    ctx: &'a Ctx,
    a: &'a Real,
    half_pi: Real,
    evaluations: usize,
}

impl ExpSinh<'_> {
    fn term<F>(&mut self, t: &Real, f: &mut F) -> Result<Real>
    where
        F: FnMut(&Real) -> Result<Real>,
    {
        let ctx = self.ctx;
        let et = ctx.exp(t);
        let eti = ctx.recip(&et);
        let sinh = (&et - &eti) / ctx.int(2);
        let cosh = (&et + &eti) / ctx.int(2);
        let x = ctx.exp(&(&self.half_pi * &sinh));
        let w = &self.half_pi * &cosh * &x;
        self.evaluations += 1;
        (f(&(self.a + &x))? * w).check("exp-sinh integrand")
    }

    /// Sum of terms at `offset + j·step` for j = 0, 1, … and j = -1, -2, …
    fn sweep<F>(&mut self, offset: &Real, step: &Real, scale: &Real, f: &mut F) -> Result<Real>
    where
        F: FnMut(&Real) -> Result<Real>,
    {
        let ctx = self.ctx;
        let cutoff = scale * &ctx.eps() * &ctx.eps();
        let mut acc = Real::zero();
        for (dir, first) in [(1i64, 0i64), (-1, 1)] {
            let mut quiet = 0;
            for j in first.. {
                let t = offset + &(step * &ctx.int(dir * j));
                if t.to_f64().abs() > 8.0 {
                    break;
                }
                let v = self.term(&t, f)?;
                quiet = if v.abs() <= cutoff { quiet + 1 } else { 0 };
                acc = acc + v;
                if quiet >= 3 {
                    break;
                }
            }
        }
        Ok(acc)
    }
}

/// Error estimate for the newest level, if it meets the target.
///
/// The rule converges quadratically, so once the last two level differences
/// `d1 < d2` are in that regime the error of the newest level is predicted as
/// `10^{(log d1)²/log d2}` in relative terms. A plain `d1 ≤ tol` also passes.
fn converged(ctx: &Ctx, err: &Real, last_err: Option<&Real>, estimate: &Real) -> Option<Real> {
    let tol = ctx.eps() * ctx.int(10);
    let scale = estimate.abs();
    if *err <= &tol * &scale {
        return Some(err.clone());
    }
    let r1 = log10_ratio(err, &scale)?;
    let r2 = log10_ratio(last_err?, &scale)?;
    // quadratic regime: d1 ≲ d2^{1.5}, both below 1e-4
    if r2 >= -4.0 || r1 > 1.5 * r2 {
        return None;
    }
    let predicted = r1 * r1 / r2;
    let log_tol = log10_ratio(&tol, &ctx.int(1))?;
    (predicted <= log_tol).then(|| tol * scale)
}

fn log10_ratio(a: &Real, b: &Real) -> Option<f64> {
    if a.is_zero() || b.is_zero() {
        return None;
    }
    // ratios can fall outside the f64 range at high precision
    let q = a / b;
    let v = q.to_f64();
    (v > 0.0 && v.is_finite()).then(|| libm::log10(v))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn polynomial_on_interval() {
        let ctx = Ctx::new(30).unwrap();
        let q = tanh_sinh(&ctx, &ctx.int(1), &ctx.int(3), |x| Ok(x * x)).unwrap();
        let want = ctx.rational(&crate::exact::rat(26, 3));
        assert!((q.value - want).abs().to_f64() < 1e-28);
    }

    #[test]
    fn endpoint_singularity() {
        let ctx = Ctx::new(30).unwrap();
        // ∫_0^1 ln x dx = -1
        let q = tanh_sinh(&ctx, &Real::zero(), &ctx.int(1), |x| Ok(ctx.ln(x))).unwrap();
        assert!((&q.value + &ctx.int(1)).abs().to_f64() < 1e-27, "{:?}", q);
    }

    #[test]
    fn semi_infinite() {
        let ctx = Ctx::new(30).unwrap();
        // ∫_0^∞ x² e^{-x} dx = 2
        let q = exp_sinh(&ctx, &Real::zero(), |x| Ok(x * x * ctx.exp(&-x))).unwrap();
        assert!((&q.value - &ctx.int(2)).abs().to_f64() < 1e-27, "{:?}", q);
        // ∫_1^∞ t² e^{-t} dt = 5/e
        let q = exp_sinh(&ctx, &ctx.int(1), |x| Ok(x * x * ctx.exp(&-x))).unwrap();
        let want = ctx.int(5) / ctx.exp(&ctx.int(1));
        assert!((q.value - want).abs().to_f64() < 1e-27);
    }
}
