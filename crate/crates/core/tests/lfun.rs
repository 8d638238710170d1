//! L-values against direct Dirichlet sums in their regions of absolute
//! convergence, and the functional equation at random points of the strip.

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use spinval_core::exact::zeta_exact;
use spinval_core::numeric::{
    functional_eq_residuals, l_degree2, l_rankin4, l_rankin4_real, Ctx, LFunctionSpec, Real,
};
use spinval_core::qexp::{delta_qexp, g20_qexp, rankin_coeffs};

fn rel(a: &Real, b: &Real) -> f64 {
    ((a - b) / b).abs().to_f64()
}

/// `Σ_{n ≤ N} c(n) n^{-s}`, summed from the small end up.
fn dirichlet(coeffs: &[num_bigint::BigInt], s: u32, ctx: &Ctx) -> Real {
    coeffs
        .iter()
        .enumerate()
        .skip(1)
        .rev()
        .fold(Real::zero(), |acc, (n, c)| acc + ctx.big(c) / ctx.powi(&ctx.int(n as i64), s))
}

#[test]
fn delta_at_eleven() {
    // |τ(n)| n^{-11} ≤ d(n) n^{-11/2}: the tail after 3000 terms is below 1e-15
    let ctx = Ctx::new(30).unwrap();
    let tau = delta_qexp(3000).integer_coeffs().unwrap();
    let direct = dirichlet(&tau, 11, &ctx);
    let l = l_degree2(&delta_qexp(20), 12, &ctx.int(11), &ctx, 20).unwrap();
    assert!(rel(&l, &direct) < 1e-14, "{:e}", rel(&l, &direct));
}

#[test]
fn g20_at_nineteen() {
    // terms decay like n^{-9.5}; the tail after 1500 terms is below 1e-24
    let ctx = Ctx::new(30).unwrap();
    let b = g20_qexp(1500).integer_coeffs().unwrap();
    let direct = dirichlet(&b, 19, &ctx);
    let l = l_degree2(&g20_qexp(25), 20, &ctx.int(19), &ctx, 25).unwrap();
    assert!(rel(&l, &direct) < 1e-12, "{:e}", rel(&l, &direct));
}

#[test]
fn rankin_against_rankin_selberg_sum() {
    // L(s, Δ⊗g20) = ζ(2s-30) Σ τ(n) b(n) n^{-s} for s > 16
    let ctx = Ctx::new(30).unwrap();
    let n = 1200;
    let tau = delta_qexp(n).integer_coeffs().unwrap();
    let b = g20_qexp(n).integer_coeffs().unwrap();
    let prod: Vec<_> = tau.iter().zip(&b).map(|(x, y)| x * y).collect();
    let coeffs = rankin_coeffs(150);
    for (s, tol) in [(19u32, 1e-7), (26, 1e-24)] {
        let zeta = ctx.pi_value(&zeta_exact(2 * s as i64 - 30).unwrap());
        let direct = zeta * dirichlet(&prod, s, &ctx);
        let l = l_rankin4(&coeffs, s as i64, &ctx, 150).unwrap();
        assert!(rel(&l, &direct) < tol, "s={s}: {:e}", rel(&l, &direct));
    }
}

#[test]
fn rankin_real_path_matches_integer_path() {
    let ctx = Ctx::new(30).unwrap();
    let coeffs = rankin_coeffs(150);
    let a = l_rankin4(&coeffs, 14, &ctx, 150).unwrap();
    let b = l_rankin4_real(&coeffs, &ctx.int(14), &ctx, 150).unwrap();
    assert!(rel(&a, &b) < 1e-28, "{:e}", rel(&a, &b));
}

#[test]
fn functional_equation_at_random_points() {
    let ctx = Ctx::new(30).unwrap();
    let mut rng = StdRng::seed_from_u64(0x5eed);
    let specs = [LFunctionSpec::delta(20), LFunctionSpec::g20(25), LFunctionSpec::rankin(150)];
    for spec in &specs {
        let w = spec.weight as f64;
        // keep away from the center, where the check is vacuous
        let ts: Vec<Real> = (0..5)
            .map(|_| {
                let off: f64 = rng.gen_range(0.3..(w / 2.0 - 0.5));
                let side = if rng.gen_bool(0.5) { 1.0 } else { -1.0 };
                ctx.f64(w / 2.0 + side * off)
            })
            .collect();
        for (t, r) in ts.iter().zip(functional_eq_residuals(spec, &ts, &ctx).unwrap()) {
            assert!(r.to_f64() < 1e-20, "{} at {}: {:e}", spec.name, t.to_f64(), r.to_f64());
        }
    }
}

#[test]
fn wrong_sign_is_detected() {
    // with ε = -1 the residual at a non-central point is of order one
    let ctx = Ctx::new(20).unwrap();
    let mut spec = LFunctionSpec::delta(20);
    spec.sign = -1;
    let r = functional_eq_residuals(&spec, &[ctx.parse("7.3")], &ctx).unwrap();
    assert!(r[0].to_f64() > 1e-3);
}
