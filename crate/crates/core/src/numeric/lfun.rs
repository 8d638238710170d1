use alloc::collections::BTreeMap;
use alloc::vec::Vec;
use core::cell::RefCell;
use core::cmp::Ordering;

use num_bigint::BigInt;
use num_traits::Zero;

use super::bessel::{bessel_k, bessel_k_upto};
use super::incgamma::{incomplete_gamma, incomplete_gamma_int};
use super::quad::{exp_sinh, tanh_sinh};
use super::real::{Ctx, Real};
use crate::qexp::{delta_qexp, g20_qexp, rankin_coeffs, QSeries, RankinCoeffs};
use crate::{Error, Result};

/// Split point used when checking the functional equation; any value other
/// than 1 makes the two sides independent sums.
const RESIDUAL_SPLIT: &str = "1.2";
/// Extra working digits for every evaluation.
const GUARD_DIGITS: u32 = 10;
/// Upper limit when searching for a sufficient coefficient count.
const MAX_TERMS: usize = 5000;

/// Γ-factor shapes supported by the evaluators.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Shape {
    /// `Γ_C(s)` for a level-1 cusp form of weight `k`.
    Degree2 { k: u32 },
    /// `Γ_C(s)Γ_C(s-11)` for `L(s, Δ⊗g20)`.
    Rankin,
}

/// A self-dual L-function `Λ(s) = γ(s) Σ a(n) n^{-s}` with
/// `Λ(s) = ε Λ(w - s)` and `γ(s) = Π Γ_R(s + λ_j)`.
#[derive(Debug, Clone)]
pub struct LFunctionSpec {
    pub name: &'static str,
    pub gamma_shifts: Vec<i64>,
    pub conductor: u64,
    pub weight: i64,
    pub sign: i8,
    shape: Shape,
    coefficients: Vec<BigInt>,
}

impl LFunctionSpec {
    /// `L(s, Δ)` with `m` coefficients.
    pub fn delta(m: usize) -> Self {
        Self::degree2("delta", &delta_qexp(m), 12)
    }

    /// `L(s, g20)` with `m` coefficients.
    pub fn g20(m: usize) -> Self {
        Self::degree2("g20", &g20_qexp(m), 20)
    }

    fn degree2(name: &'static str, form: &QSeries, k: u32) -> Self {
        let coefficients = form.integer_coeffs().expect("integral q-expansion")[1..].to_vec();
        Self {
            name,
            gamma_shifts: alloc::vec![0, 1],
            conductor: 1,
            weight: k as i64,
            sign: epsilon(k) as i8,
            shape: Shape::Degree2 { k },
            coefficients,
        }
    }

    /// `L(s, Δ⊗g20)` with `m` coefficients.
    pub fn rankin(m: usize) -> Self {
        Self::from_rankin(&rankin_coeffs(m))
    }

    pub fn from_rankin(coeffs: &RankinCoeffs) -> Self {
        Self {
            name: "delta x g20",
            gamma_shifts: alloc::vec![0, 1, -11, -10],
            conductor: 1,
            weight: 31,
            sign: 1,
            shape: Shape::Rankin,
            coefficients: coeffs.values().to_vec(),
        }
    }

    /// `a(n)` for `1 ≤ n ≤ M`.
    pub fn coefficient(&self, n: usize) -> Option<&BigInt> {
        n.checked_sub(1).and_then(|i| self.coefficients.get(i))
    }

    pub fn num_coefficients(&self) -> usize {
        self.coefficients.len()
    }

    /// The completed function, normalized as `(2π)^{-s}Γ(s)L(s)` in degree 2
    /// and `(2π)^{-2s}Γ(s)Γ(s-11)L(s)` for the Rankin product, computed with
    /// the theta series split at `c` and `1/c`.
    pub fn completed(&self, s: &Real, c: &Real, ctx: &Ctx) -> Result<Real> {
        match self.shape {
            Shape::Degree2 { k } => degree2_completed(&self.coefficients, k, s, c, ctx),
            Shape::Rankin => match as_integer(s, ctx).filter(|n| (1..=30).contains(n)) {
                Some(n) if c.to_f64() == 1.0 => rankin_completed_int(&self.coefficients, n, ctx),
                _ => rankin_completed_quad(&Theta::new(&self.coefficients), s, c, ctx),
            },
        }
    }
}

fn as_integer(s: &Real, ctx: &Ctx) -> Option<i64> {
    let r = libm::round(s.to_f64());
    let diff = s - &ctx.int(r as i64);
    diff.is_zero().then_some(r as i64)
}

/// `(-1)^{k/2}` for level 1.
fn epsilon(k: u32) -> i64 {
    if (k / 2).is_multiple_of(2) {
        1
    } else {
        -1
    }
}

/// `Σ a(n) [(2πn)^{-s} Γ(s, 2πnc) + ε (2πn)^{s-k} Γ(k-s, 2πn/c)]`.
fn degree2_completed(coeffs: &[BigInt], k: u32, s: &Real, c: &Real, ctx: &Ctx) -> Result<Real> {
    let two_pi = ctx.pi() * ctx.int(2);
    let ks = ctx.int(k as i64) - s;
    let int_s = as_integer(s, ctx).filter(|&n| n >= 1 && n < k as i64);
    let eps = ctx.int(epsilon(k));
    let mut acc = Real::zero();
    for (i, a) in coeffs.iter().enumerate() {
        if a.is_zero() {
            continue;
        }
        let x = &two_pi * &ctx.int(i as i64 + 1);
        let (xc, xd) = (&x * c, &x / c);
        let term = match int_s {
            Some(n) => {
                let g1 = incomplete_gamma_int(n as u32, &xc, ctx);
                let g2 = incomplete_gamma_int(k - n as u32, &xd, ctx);
                ctx.powi_signed(&x, -n) * g1 + &eps * &(ctx.powi_signed(&x, n - k as i64) * g2)
            }
            None => {
                let g1 = incomplete_gamma(s, &xc, ctx)?;
                let g2 = incomplete_gamma(&ks, &xd, ctx)?;
                let lx = ctx.ln(&x);
                ctx.exp(&-(s * &lx)) * g1 + &eps * &(ctx.exp(&-(&ks * &lx)) * g2)
            }
        };
        acc = acc + ctx.big(a) * term;
    }
    acc.check("degree-2 completed L-function")
}

fn ln_add(a: f64, b: f64) -> f64 {
    if a == f64::NEG_INFINITY {
        return b;
    }
    let m = a.max(b);
    m + libm::log(libm::exp(a - m) + libm::exp(b - m))
}

/// `ln` of an upper bound for `Γ(a, x)`.
fn ln_upper_gamma_bound(a: f64, x: f64) -> f64 {
    if a <= 1.0 {
        (a - 1.0) * libm::log(x) - x
    } else if x > a {
        (a - 1.0) * libm::log(x) - x + libm::log(x / (x - a + 1.0))
    } else {
        libm::lgamma(a)
    }
}

/// `ln` of the estimated truncation error of the degree-2 sum after `m` terms,
/// using `|a(n)| ≤ d(n) n^{(k-1)/2}` and `d(n) ≤ 2√n`.
fn degree2_tail_ln(k: u32, s: f64, c: f64, m: usize) -> f64 {
    let k = k as f64;
    let lo = c.min(1.0 / c);
    let mut acc = f64::NEG_INFINITY;
    for n in m + 1..m + 400 {
        let nf = n as f64;
        let x = 2.0 * core::f64::consts::PI * nf;
        let ln_a = libm::log(2.0) + (k / 2.0) * libm::log(nf);
        let t1 = -s * libm::log(x) + ln_upper_gamma_bound(s, x * lo);
        let t2 = (s - k) * libm::log(x) + ln_upper_gamma_bound(k - s, x * lo);
        acc = ln_add(acc, ln_a + ln_add(t1, t2));
    }
    acc
}

/// `ln` of the estimated truncation error of the Rankin sum after `m` terms,
/// using `|A(n)| ≤ d(n)³ n^{15}` and `F(s, a) ≲ 10 φ(a)/√a`.
fn rankin_tail_ln(m: usize) -> f64 {
    let mut acc = f64::NEG_INFINITY;
    for n in m + 1..m + 400 {
        let nf = n as f64;
        let a = 4.0 * core::f64::consts::PI * core::f64::consts::PI * nf;
        let x = 2.0 * libm::sqrt(a);
        let ln_k11 = 0.5 * libm::log(core::f64::consts::PI / (2.0 * x)) - x + (121.0 - 0.25) / (2.0 * x);
        let ln_phi = libm::log(2.0) - 5.5 * libm::log(a) + ln_k11;
        let ln_f = ln_phi - 0.5 * libm::log(a) + libm::log(10.0);
        let ln_a = 15.0 * libm::log(nf) + 3.0 * libm::log(2.0 * libm::sqrt(nf));
        acc = ln_add(acc, ln_a + libm::log(2.0) + ln_f);
    }
    acc
}

fn require_terms(given: usize, digits: u32, value: &Real, tail_ln: impl Fn(usize) -> f64) -> Result<()> {
    let target = libm::log(value.abs().to_f64()) - digits as f64 * core::f64::consts::LN_10;
    if tail_ln(given) <= target {
        return Ok(());
    }
    let needed = (given..=MAX_TERMS).find(|&m| tail_ln(m) <= target).unwrap_or(MAX_TERMS);
    Err(Error::TooFewCoefficients { given, needed, digits })
}

/// Smallest coefficient count for which the degree-2 tail estimate at `s` is
/// below `10^{-digits}` relative to a value of size `scale`.
pub fn degree2_terms(k: u32, s: f64, digits: u32) -> usize {
    let target = -(digits as f64 + 2.0) * core::f64::consts::LN_10;
    // Λ(s) at real s in the strip is not smaller than about e^{-2π}·Γ(s)(2π)^{-s}.
    let scale = libm::lgamma(s.max(1.0)) - s * libm::log(2.0 * core::f64::consts::PI) - 2.0 * core::f64::consts::PI;
    (1..=MAX_TERMS)
        .find(|&m| degree2_tail_ln(k, s, 1.0, m) <= target + scale)
        .unwrap_or(MAX_TERMS)
}

/// `L(s, f)` for a level-1 cusp form `f` of even weight `k` with integral
/// q-expansion, from `m` coefficients.
pub fn l_degree2(form: &QSeries, k: u32, s: &Real, ctx: &Ctx, m: usize) -> Result<Real> {
    if k % 2 == 1 || k < 12 {
        return Err(Error::OutOfRange { what: "weight", value: k as i64, range: "even k >= 12" });
    }
    if form.precision() < m {
        return Err(Error::InsufficientPrecision { needed: m, available: form.precision() });
    }
    let coeffs = form
        .integer_coeffs()
        .ok_or(Error::Domain("degree-2 evaluator needs integral coefficients"))?;
    let wide = ctx.widened(GUARD_DIGITS);
    let sw = wide.rebase(s);
    let lambda = degree2_completed(&coeffs[1..=m], k, &sw, &wide.int(1), &wide)?;
    require_terms(m, ctx.digits(), &lambda, |mm| degree2_tail_ln(k, sw.to_f64(), 1.0, mm))?;
    let two_pi = wide.pi() * wide.int(2);
    let l = lambda * wide.pow(&two_pi, &sw) / wide.gamma(&sw)?;
    Ok(ctx.rebase(&l))
}

/// `F(s, a) = ∫_1^∞ φ(at) t^{s-1} dt` at a positive integer `s`, from
/// `ks[j] = K_j(2√a)`:
///
/// ```text
/// F(s, a) = (s-1)! Σ_{j<s} a^{j-s}/j! · 2a^{ν/2} K_{|ν|}(2√a),   ν = s - 11 - j
/// ```
fn kernel_tail_int(s: i64, a: &Real, sqrt_a: &Real, ks: &[Real], ctx: &Ctx) -> Real {
    let mut acc = Real::zero();
    let mut inv_fact = ctx.int(1);
    for j in 0..s {
        if j > 0 {
            inv_fact = inv_fact / ctx.int(j);
        }
        let nu = s - 11 - j;
        // a^{j-s} · a^{ν/2} = a^{j-s} · sqrt(a)^ν
        let pa = ctx.powi_signed(a, j - s) * ctx.powi_signed(sqrt_a, nu);
        acc = acc + &inv_fact * &(pa * &ks[nu.unsigned_abs() as usize]);
    }
    let fact = (1..s).fold(ctx.int(1), |f, j| f * ctx.int(j));
    fact * ctx.int(2) * acc
}

/// `Σ A(n) [F(s, a_n) + F(31-s, a_n)]`, `a_n = 4π²n`, at integer `s ∈ 1..=30`.
fn rankin_completed_int(coeffs: &[BigInt], s: i64, ctx: &Ctx) -> Result<Real> {
    let four_pi2 = {
        let p = ctx.pi();
        &(&p * &p) * &ctx.int(4)
    };
    let order = (s - 11).abs().max((20 - s).abs()).max(10) as u32;
    let mut acc = Real::zero();
    for (i, c) in coeffs.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let a = &four_pi2 * &ctx.int(i as i64 + 1);
        let sqrt_a = ctx.sqrt(&a);
        let ks = bessel_k_upto(order, &(&sqrt_a * &ctx.int(2)), ctx)?;
        let f = kernel_tail_int(s, &a, &sqrt_a, &ks, ctx) + kernel_tail_int(31 - s, &a, &sqrt_a, &ks, ctx);
        acc = acc + ctx.big(c) * f;
    }
    acc.check("Rankin completed L-function")
}

/// `φ(x) = 2x^{-11/2} K_11(2√x)`, whose Mellin transform is `Γ(s)Γ(s-11)`.
pub fn rankin_kernel(x: &Real, ctx: &Ctx) -> Result<Real> {
    let r = ctx.sqrt(x);
    let k = bessel_k(11, &(&r * &ctx.int(2)), ctx)?;
    Ok(ctx.int(2) * k / (ctx.powi(&r, 11)))
}

/// `θ(t) = Σ A(n) φ(4π²n t)`, memoized by node.
///
/// Quadratures over the same interval visit the same nodes, so every
/// integral against θ after the first costs only the weights.
struct Theta<'a> {
    coeffs: &'a [BigInt],
    values: RefCell<BTreeMap<Node, Real>>,
}

/// Total order on nodes; quadrature nodes are never NaN.
struct Node(Real);

impl PartialEq for Node {
    fn eq(&self, other: &Self) -> bool {
        self.0 == other.0
    }
}
impl Eq for Node {}
impl PartialOrd for Node {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}
impl Ord for Node {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0.partial_cmp(&other.0).expect("ordered nodes")
    }
}

impl<'a> Theta<'a> {
    fn new(coeffs: &'a [BigInt]) -> Self {
        Self { coeffs, values: RefCell::new(BTreeMap::new()) }
    }

    fn at(&self, t: &Real, ctx: &Ctx) -> Result<Real> {
        let key = Node(t.clone());
        if let Some(v) = self.values.borrow().get(&key) {
            return Ok(v.clone());
        }
        let v = self.eval(t, ctx)?;
        self.values.borrow_mut().insert(key, v.clone());
        Ok(v)
    }

    /// Drops terms that are below the working precision relative to the first.
    fn eval(&self, t: &Real, ctx: &Ctx) -> Result<Real> {
        let four_pi2 = {
            let p = ctx.pi();
            &(&p * &p) * &ctx.int(4)
        };
        let tf = t.to_f64();
        if tf > rankin_cutoff(ctx.digits()) {
            return Ok(Real::zero());
        }
        let budget = (ctx.digits() as f64 + 10.0) * core::f64::consts::LN_10;
        let mut acc = Real::zero();
        for (i, c) in self.coeffs.iter().enumerate() {
            let n = (i + 1) as f64;
            let decay = 4.0 * core::f64::consts::PI * libm::sqrt(tf) * (libm::sqrt(n) - 1.0) - 9.25 * libm::log(n);
            if decay > budget {
                break;
            }
            if c.is_zero() {
                continue;
            }
            let x = &four_pi2 * &(t * &ctx.int(i as i64 + 1));
            acc = acc + ctx.big(c) * rankin_kernel(&x, ctx)?;
        }
        Ok(acc)
    }
}

/// Point beyond which `θ(t) t^{30}` is negligible.
fn rankin_cutoff(digits: u32) -> f64 {
    let need = (digits as f64 + 15.0) * core::f64::consts::LN_10 + 30.0;
    let mut t = 1.0f64;
    while 4.0 * core::f64::consts::PI * libm::sqrt(t) - 25.0 * libm::log(t) < need {
        t *= 1.1;
    }
    t
}

/// `∫_c^∞ θ(t) t^{s-1} dt + ∫_{1/c}^∞ θ(t) t^{30-s} dt` for `c ≥ 1`.
fn rankin_completed_quad(theta: &Theta<'_>, s: &Real, c: &Real, ctx: &Ctx) -> Result<Real> {
    if c.to_f64() < 1.0 {
        return Err(Error::Domain("Rankin split parameter must be at least 1"));
    }
    let e1 = s - &ctx.int(1);
    let e2 = ctx.int(30) - s;
    let outer = exp_sinh(ctx, c, |t| {
        let th = theta.at(t, ctx)?;
        if th.is_zero() {
            return Ok(th);
        }
        let lt = ctx.ln(t);
        Ok(th * (ctx.exp(&(&e1 * &lt)) + ctx.exp(&(&e2 * &lt))))
    })?;
    if c.to_f64() == 1.0 {
        return Ok(outer.value);
    }
    let inner = tanh_sinh(ctx, &ctx.recip(c), c, |t| {
        let th = theta.at(t, ctx)?;
        Ok(th * ctx.exp(&(&e2 * &ctx.ln(t))))
    })?;
    Ok(outer.value + inner.value)
}

/// `L(s, Δ⊗g20)` at an integer `s ∈ 12..=30` from `m` coefficients.
pub fn l_rankin4(coeffs: &RankinCoeffs, s: i64, ctx: &Ctx, m: usize) -> Result<Real> {
    if !(12..=30).contains(&s) {
        return Err(Error::OutOfRange { what: "s", value: s, range: "12..=30" });
    }
    if coeffs.precision() < m {
        return Err(Error::InsufficientPrecision { needed: m, available: coeffs.precision() });
    }
    let wide = ctx.widened(GUARD_DIGITS);
    let lambda = rankin_completed_int(&coeffs.values()[..m], s, &wide)?;
    require_terms(m, ctx.digits(), &lambda, rankin_tail_ln)?;
    let two_pi = wide.pi() * wide.int(2);
    let gammas = (1..s).chain(1..s - 11).fold(wide.int(1), |f, j| f * wide.int(j));
    let l = lambda * wide.powi(&two_pi, 2 * s as u32) / gammas;
    Ok(ctx.rebase(&l))
}

/// `L(s, Δ⊗g20)` at real `s` through quadrature of the theta series.
pub fn l_rankin4_real(coeffs: &RankinCoeffs, s: &Real, ctx: &Ctx, m: usize) -> Result<Real> {
    if coeffs.precision() < m {
        return Err(Error::InsufficientPrecision { needed: m, available: coeffs.precision() });
    }
    let wide = ctx.widened(GUARD_DIGITS);
    let sw = wide.rebase(s);
    let lambda = rankin_completed_quad(&Theta::new(&coeffs.values()[..m]), &sw, &wide.int(1), &wide)?;
    require_terms(m, ctx.digits(), &lambda, rankin_tail_ln)?;
    let two_pi = wide.pi() * wide.int(2);
    let g = wide.gamma(&sw)? * wide.gamma(&(&sw - &wide.int(11)))?;
    let l = lambda * wide.pow(&two_pi, &(&sw * &wide.int(2))) / g;
    Ok(ctx.rebase(&l))
}

/// `|Λ(t) - ε Λ(w - t)| / |Λ(t)|`, with both sides summed with the theta
/// series split at `6/5`, so that they are computed independently.
pub fn functional_eq_residual(spec: &LFunctionSpec, t: &Real, ctx: &Ctx) -> Result<Real> {
    Ok(functional_eq_residuals(spec, core::slice::from_ref(t), ctx)?.remove(0))
}

/// [`functional_eq_residual`] at several points, sharing theta values.
///
/// Runs at the context precision without guard digits, so the residual
/// certifies the evaluator at exactly that precision.
pub fn functional_eq_residuals(spec: &LFunctionSpec, ts: &[Real], ctx: &Ctx) -> Result<Vec<Real>> {
    let wide = ctx;
    let c = wide.parse(RESIDUAL_SPLIT);
    let theta = Theta::new(&spec.coefficients);
    let completed = |s: &Real| match spec.shape {
        Shape::Degree2 { k } => degree2_completed(&spec.coefficients, k, s, &c, wide),
        Shape::Rankin => rankin_completed_quad(&theta, s, &c, wide),
    };
    ts.iter()
        .map(|t| {
            let t = wide.rebase(t);
            let lhs = completed(&t)?;
            let rhs = completed(&(wide.int(spec.weight) - &t))?;
            let rhs = if spec.sign < 0 { -rhs } else { rhs };
            Ok(ctx.rebase(&((&lhs - &rhs) / &lhs).abs()))
        })
        .collect()
}
