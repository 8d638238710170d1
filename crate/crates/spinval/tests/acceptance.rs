//! Acceptance checks, one PASS/FAIL line each.
//!
//! Criterion 5 asks for 20-digit agreement with the published Petersson norms.
//! Those values are themselves accurate to about 16 digits (their three
//! weight-20 rows disagree with each other by up to 8e-17), so it is reported as
//! FAIL and does not fail the run. Any other failure does.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use num_integer::Integer;
use spinval_core::critical::{main_identity, projection_coeffs, rankin_g20_value, two_delta_product, CRITICAL_RANGE};
use spinval_core::exact::{rat, PiValue, Rational};
use spinval_core::numeric::{
    functional_eq_residuals, l_rankin4, petersson_norm, published, rankin_kernel, verify_tables, Ctx, LFunctionSpec,
    NormSource, Norms, Real, Reference,
};
use spinval_core::numeric::quad::exp_sinh;
use spinval_core::qexp::{
    delta_qexp, eisenstein_qexp, g20_qexp, hecke_tp, is_prime, lemma1_local_check, rankin_coeffs, QSeries,
};

/// Criteria that cannot be met; see the note at the top.
const UNATTAINABLE: &[u32] = &[5];

struct Outcome {
    pass: bool,
    detail: String,
}

fn outcome(pass: bool, detail: impl Into<String>) -> Outcome {
    Outcome { pass, detail: detail.into() }
}

fn rel(a: &Real, b: &Real) -> f64 {
    ((a - b) / b).abs().to_f64()
}

fn sig_digits(a: &Real, b: &Real) -> f64 {
    let r = rel(a, b);
    if r == 0.0 {
        f64::INFINITY
    } else {
        -r.log10()
    }
}

fn criterion_1() -> Outcome {
    const TABLE: [(i64, (i64, i64), (i64, i64)); 8] = [
        (3, (1, 50), (76, 25)),
        (4, (1, 270), (56, 135)),
        (5, (1, 1440), (1, 20)),
        (6, (1, 6048), (5, 756)),
        (7, (1, 16800), (1, 900)),
        (8, (17, 518400), (13, 64800)),
        (9, (11, 453600), (-1, 56700)),
        (10, (13, 604800), (-1, 10800)),
    ];
    let mut matched = 0;
    for (s, a1, a2) in TABLE {
        let p = projection_coeffs(s).expect("s in 3..=10");
        matched += (p.a1 == PiValue::monomial(rat(a1.0, a1.1), 2 * s - 12)) as u32;
        matched += (p.a2 == PiValue::monomial(rat(a2.0, a2.1), 2 * s - 12)) as u32;
    }
    outcome(matched == 16, format!("{matched}/16 values exact"))
}

fn big_rat(n: &str, d: &str) -> Rational {
    Rational::new(n.parse::<BigInt>().unwrap(), d.parse::<BigInt>().unwrap())
}

fn criterion_2() -> Outcome {
    const TABLE2: [(&str, &str, i64); 8] = [
        ("32768", "225", 5),
        ("4096", "81", 7),
        ("2048", "189", 9),
        ("8192", "4725", 11),
        ("16384", "70875", 13),
        ("8192", "297675", 15),
        ("8192", "2679075", 17),
        ("65536", "200930625", 19),
    ];
    const TABLE3: [(&str, &str, i64); 8] = [
        ("524288", "2338875", 13),
        ("2097152", "88409475", 15),
        ("4194304", "2791213425", 17),
        ("8388608", "97692469875", 19),
        ("8388608", "1465387048125", 21),
        ("2097152", "4396161144375", 23),
        ("4194304", "92319384031875", 25),
        ("2097152", "461596920159375", 27),
    ];
    // s = 17 is printed as 2^24 in factored form; the decimal 17179869184 is 2^34
    const TABLE4: [(&str, &str, i64); 8] = [
        ("17179869184", "526246875", 18),
        ("8589934592", "7161167475", 22),
        ("8589934592", "527539337325", 26),
        ("68719476736", "461596920159375", 30),
        ("137438953472", "103859307035859375", 34),
        ("17179869184", "1308627268651828125", 38),
        ("34359738368", "247330553775195515625", 42),
        ("137438953472", "92748957665698318359375", 46),
    ];
    let mut matched = 0;
    for (i, s) in CRITICAL_RANGE.enumerate() {
        for (table, f) in [
            (&TABLE2, two_delta_product as fn(i64) -> _),
            (&TABLE3, rankin_g20_value),
            (&TABLE4, main_identity),
        ] {
            let r = f(s).unwrap();
            let (n, d, e) = table[i];
            matched += (r.rational == big_rat(n, d) && r.pi_exponent == e) as u32;
        }
    }
    outcome(matched == 24, format!("{matched}/24 (rational, pi exponent) pairs exact"))
}

fn criterion_3() -> Outcome {
    let ok = CRITICAL_RANGE.filter(|&s| {
        let a = two_delta_product(s).unwrap();
        let b = rankin_g20_value(s).unwrap();
        let m = main_identity(s).unwrap();
        m.value() == PiValue::monomial(a.rational * b.rational, a.pi_exponent + b.pi_exponent)
    });
    let n = ok.count();
    outcome(n == 8, format!("{n}/8 exact factorizations"))
}

fn criterion_4() -> Outcome {
    const A: [i128; 15] = [
        1,
        -10944,
        12764304,
        1539411968,
        -11482890300,
        -139692542976,
        283267356736,
        -44134904365056,
        46408678295058,
        125668751443200,
        -8667187482096,
        19649522340790272,
        -29130483042689756,
        -3100077952118784,
        -146571102587851200,
    ];
    let c = rankin_coeffs(200);
    let listed = A.iter().enumerate().filter(|(i, &a)| c.get(i + 1) == Some(&BigInt::from(a))).count();
    let mut pairs = 0;
    let mut bad = 0;
    for m in 2..=100usize {
        for n in m + 1..=200 / m {
            if m.gcd(&n) == 1 {
                pairs += 1;
                if c.get(m * n).unwrap() != &(c.get(m).unwrap() * c.get(n).unwrap()) {
                    bad += 1;
                }
            }
        }
    }
    outcome(
        listed == 15 && bad == 0,
        format!("{listed}/15 listed values, {bad} failures in {pairs} coprime pairs"),
    )
}

fn criterion_5() -> Outcome {
    let ctx = Ctx::new(30).unwrap();
    let delta = petersson_norm(12, 4, &ctx).unwrap().value;
    let rows: Vec<(u32, &str)> = vec![
        (8, "8.265541531659702744699575969e-6"),
        (6, "8.265541531659703390644766954e-6"),
        (4, "8.265541531659703069998511729e-6"),
    ];
    let d_digits = sig_digits(&delta, &ctx.parse("1.035362056804320948209596804e-6"));
    let g: Vec<Real> = rows.iter().map(|(r, _)| petersson_norm(20, *r, &ctx).unwrap().value).collect();
    let g_digits: Vec<f64> = g.iter().zip(&rows).map(|(v, (_, p))| sig_digits(v, &ctx.parse(p))).collect();
    let spread = [rel(&g[0], &g[1]), rel(&g[0], &g[2]), rel(&g[1], &g[2])].into_iter().fold(0.0, f64::max);
    let pass = d_digits >= 20.0 && g_digits.iter().all(|&d| d >= 20.0) && spread <= 1e-20;
    outcome(
        pass,
        format!(
            "<Delta,Delta> {d_digits:.1} digits, <g20,g20> rows {:.1}/{:.1}/{:.1} digits, pairwise spread {spread:.1e}",
            g_digits[0], g_digits[1], g_digits[2]
        ),
    )
}

fn criterion_6() -> Outcome {
    let ctx = Ctx::new(30).unwrap();
    let coeffs = rankin_coeffs(150);
    let mut worst: f64 = 0.0;
    for (i, s) in CRITICAL_RANGE.enumerate() {
        let v = l_rankin4(&coeffs, s, &ctx, 150).unwrap();
        worst = worst.max(rel(&v, &ctx.parse(published::RANKIN[i])));
    }
    // ∫_0^∞ φ(t) t^{s-1} dt = Γ(s)Γ(s-11); below t_min, φ(t) = 10! t^{-11}(1 - t/10 + …)
    let t_min = ctx.parse("1e-12");
    let mut kernel: f64 = 0.0;
    for s in [13i64, 15, 17] {
        let p = s - 11;
        let head = ctx.int(3628800)
            * (ctx.powi(&t_min, p as u32) / ctx.int(p) - ctx.powi(&t_min, p as u32 + 1) / ctx.int(10 * (p + 1)));
        let q = exp_sinh(&ctx, &t_min, |t| {
            if t.to_f64() > 1e6 {
                return Ok(Real::zero());
            }
            Ok(rankin_kernel(t, &ctx)? * ctx.powi(t, s as u32 - 1))
        })
        .unwrap();
        let want = (1..s).chain(1..s - 11).fold(ctx.int(1), |f, j| f * ctx.int(j));
        kernel = kernel.max(rel(&(q.value + head), &want));
    }
    outcome(
        worst <= 1e-9 && kernel <= 1e-20,
        format!("max rel diff vs printed L-values {worst:.1e}, kernel Mellin max rel error {kernel:.1e}"),
    )
}

fn criterion_7() -> Outcome {
    let ctx = Ctx::new(30).unwrap();
    let stored = Norms::new(NormSource::Stored, &ctx).unwrap();
    let printed = verify_tables(&ctx, 150, &stored, Reference::Published).unwrap().max_rel_diff();
    let fresh = Norms::new(NormSource::Fresh, &ctx).unwrap();
    let own = verify_tables(&ctx, 150, &fresh, Reference::Exact).unwrap().max_rel_diff();
    outcome(
        printed <= 1e-9 && own <= 1e-12,
        format!("vs printed columns {printed:.2e}, vs fresh D=30 rendering {own:.1e}"),
    )
}

fn criterion_8() -> Outcome {
    let ctx = Ctx::new(30).unwrap();
    // fixed points, off center, spread over each strip
    let cases = [
        (LFunctionSpec::delta(20), ["1.37", "3.9", "5.23", "7.3", "10.61"]),
        (LFunctionSpec::g20(25), ["1.8", "6.35", "9.07", "12.4", "17.77"]),
        (LFunctionSpec::rankin(150), ["12.31", "13.7", "14.2", "17.9", "18.45"]),
    ];
    let mut worst: f64 = 0.0;
    let mut parts = Vec::new();
    for (spec, ts) in &cases {
        let ts: Vec<Real> = ts.iter().map(|t| ctx.parse(t)).collect();
        let r = functional_eq_residuals(spec, &ts, &ctx).unwrap();
        let m = r.iter().map(Real::to_f64).fold(0.0, f64::max);
        parts.push(format!("{} {m:.1e}", spec.name));
        worst = worst.max(m);
    }
    outcome(worst <= 1e-20, format!("max residual: {}", parts.join(", ")))
}

fn is_multiple(f: &QSeries, g: &QSeries, c: i64) -> bool {
    let n = f.precision().min(g.precision());
    (0..=n).all(|i| f.coeff(i) == &(g.coeff(i) * Rational::from_integer(c.into())))
}

fn criterion_9() -> Outcome {
    let d = delta_qexp(160);
    let g = g20_qexp(160);
    let t2d = hecke_tp(&d, 2, 12).unwrap();
    let t2g = hecke_tp(&g, 2, 20).unwrap();
    let hecke = t2d.precision() >= 80 && is_multiple(&t2d, &d, -24) && is_multiple(&t2g, &g, 456);
    let local = [2u64, 3, 5].iter().all(|&p| lemma1_local_check(p, 8).unwrap());
    let tau = delta_qexp(200).integer_coeffs().unwrap();
    let b = g20_qexp(200).integer_coeffs().unwrap();
    let mut mult = true;
    for m in 2..=200usize {
        for n in m + 1..=200 / m {
            if m.gcd(&n) == 1 {
                mult &= tau[m * n] == &tau[m] * &tau[n] && b[m * n] == &b[m] * &b[n];
            }
        }
    }
    // prime powers: a(p^{k+1}) = a(p) a(p^k) - p^{11} a(p^{k-1})
    for p in (2..=13u64).filter(|&p| is_prime(p)) {
        let pk = |k: u32| p.pow(k) as usize;
        for k in 1..=(200f64.ln() / (p as f64).ln()) as u32 - 1 {
            let rhs = &tau[p as usize] * &tau[pk(k)] - BigInt::from(p).pow(11) * &tau[pk(k - 1)];
            mult &= tau[pk(k + 1)] == rhs;
        }
    }
    let e4 = eisenstein_qexp(4, 200).unwrap();
    let e6 = eisenstein_qexp(6, 200).unwrap();
    let other = &(&(&e4 * &e4) * &e4) - &(&e6 * &e6);
    let routes = other.precision() >= 200 && is_multiple(&other, &delta_qexp(200), 1728);
    outcome(
        hecke && local && mult && routes,
        format!("Hecke {hecke}, local factors {local}, multiplicativity {mult}, two Delta routes {routes}"),
    )
}

fn main() -> ExitCode {
    let criteria: [(u32, &str, Option<Duration>, fn() -> Outcome); 9] = [
        (1, "projection coefficients", Some(Duration::from_secs(1)), criterion_1),
        (2, "exact critical values", Some(Duration::from_secs(1)), criterion_2),
        (3, "factorization consistency", Some(Duration::from_secs(1)), criterion_3),
        (4, "Rankin coefficients", Some(Duration::from_secs(1)), criterion_4),
        (5, "Petersson norms", Some(Duration::from_secs(10)), criterion_5),
        (6, "degree-4 evaluator", Some(Duration::from_secs(60)), criterion_6),
        (7, "end-to-end verification", Some(Duration::from_secs(120)), criterion_7),
        (8, "functional-equation residuals", None, criterion_8),
        (9, "property suites", Some(Duration::from_secs(5)), criterion_9),
    ];
    let mut unexpected = 0;
    for (n, name, budget, run) in criteria {
        let start = Instant::now();
        let o = run();
        let elapsed = start.elapsed();
        let pass = o.pass && budget.is_none_or(|b| elapsed <= b);
        let limit = budget.map_or("no limit".to_owned(), |b| format!("limit {}s", b.as_secs()));
        println!(
            "{} criterion {n} ({name}): {}; {:.2}s, {limit}",
            if pass { "PASS" } else { "FAIL" },
            o.detail,
            elapsed.as_secs_f64(),
        );
        if !pass && !UNATTAINABLE.contains(&n) {
            unexpected += 1;
        }
    }
    if unexpected > 0 {
        ExitCode::FAILURE
    } else {
        ExitCode::SUCCESS
    }
}
