use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::series::{mul_integers, pow_integers, QSeries};
use crate::exact::{bernoulli, int, rat, Rational};
use crate::{Error, Result};

pub fn is_prime(p: u64) -> bool {
    p >= 2 && (2..).take_while(|d| d * d <= p).all(|d| p % d != 0)
}

/// `∏_{n≥1} (1 - q^n)` truncated at `q^n_max`.
pub(crate) fn euler_product(n_max: usize) -> Vec<BigInt> {
    let mut c = alloc::vec![BigInt::zero(); n_max + 1];
    c[0] = BigInt::one();
    for n in 1..=n_max {
        for i in (n..=n_max).rev() {
            let t = c[i - n].clone();
            c[i] -= t;
        }
    }
    c
}

/// `Δ = q ∏ (1 - q^n)^{24}`; the coefficient of `q^n` is Ramanujan's `τ(n)`.
pub fn delta_qexp(n: usize) -> QSeries {
    assert!(n >= 1, "precision must be positive");
    let eta24 = pow_integers(&euler_product(n - 1), 24, n - 1);
    QSeries::from_integers(core::iter::once(BigInt::zero()).chain(eta24))
}

fn divisor_power_sum(n: u64, e: u32, skip_multiples_of: Option<u64>) -> BigInt {
    let mut acc = BigInt::zero();
    let mut d = 1;
    while d * d <= n {
        if n % d == 0 {
            for x in [d, n / d] {
                if skip_multiples_of.is_some_and(|p| x % p == 0) {
                    continue;
                }
                acc += BigInt::from(x).pow(e);
                if d * d == n {
                    break;
                }
            }
        }
        d += 1;
    }
    acc
}

/// `E_k = 1 - (2k/B_k) Σ σ_{k-1}(n) q^n` for even `k ≥ 4`.
pub fn eisenstein_qexp(k: u32, n: usize) -> Result<QSeries> {
    if k < 4 || k % 2 == 1 {
        return Err(Error::OutOfRange { what: "Eisenstein weight", value: k as i64, range: "even k >= 4" });
    }
    let alpha = -int(2 * k as i64) / bernoulli(k as usize);
    let mut c = Vec::with_capacity(n + 1);
    c.push(int(1));
    for m in 1..=n as u64 {
        c.push(&alpha * Rational::from_integer(divisor_power_sum(m, k - 1, None)));
    }
    Ok(QSeries::new(c))
}

/// `G_{2,p}(z) = G_2(z) - p G_2(pz)`: constant term `(p-1)/24` and
/// `Σ_{d|n, p∤d} d` at `q^n`.
pub fn g2p_qexp(p: u64, n: usize) -> Result<QSeries> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    let mut c = Vec::with_capacity(n + 1);
    c.push(rat(p as i64 - 1, 24));
    for m in 1..=n as u64 {
        c.push(Rational::from_integer(divisor_power_sum(m, 1, Some(p))));
    }
    Ok(QSeries::new(c))
}

/// The normalized weight-20 eigenform `g20 = E_8·Δ`.
pub fn g20_qexp(n: usize) -> QSeries {
    let e8 = eisenstein_qexp(8, n).expect("weight 8 is valid");
    let e8 = e8.integer_coeffs().expect("E_8 has integer coefficients");
    let delta = delta_qexp(n).integer_coeffs().expect("Δ has integer coefficients");
    QSeries::from_integers(mul_integers(&e8, &delta, n))
}

/// Hecke operator `T_p` in weight `k` on level 1: `a(np) + p^{k-1} a(n/p)`.
///
/// The result has precision `⌊N/p⌋`.
pub fn hecke_tp(f: &QSeries, p: u64, k: u32) -> Result<QSeries> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    let p = p as usize;
    let out = f.precision() / p;
    if out == 0 {
        return Err(Error::InsufficientPrecision { needed: p, available: f.precision() });
    }
    let pk = Rational::from_integer(BigInt::from(p).pow(k - 1));
    let c = (0..=out)
        .map(|n| {
            let mut v = f.coeff(n * p).clone();
            if n % p == 0 {
                v += &pk * f.coeff(n / p);
            }
            v
        })
        .collect();
    Ok(QSeries::new(c))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(f: &QSeries) -> Vec<BigInt> {
        f.integer_coeffs().unwrap()
    }

    /// `Σ_{k∈ℤ} (-1)^k q^{k(3k-1)/2}`, an expansion of `∏(1 - q^n)` that
    /// never multiplies factors.
    fn pentagonal(n_max: usize) -> Vec<BigInt> {
        let mut c = alloc::vec![BigInt::zero(); n_max + 1];
        for k in -60i64..=60 {
            let e = k * (3 * k - 1) / 2;
            if (e as usize) <= n_max {
                c[e as usize] += if k % 2 == 0 { 1 } else { -1 };
            }
        }
        c
    }

    #[test]
    fn delta_leading_coefficients() {
        let d = delta_qexp(6);
        let want = [0, 1, -24, 252, -1472, 4830, -6048];
        assert_eq!(ints(&d), want.iter().map(|&x| BigInt::from(x)).collect::<Vec<_>>());
        assert_eq!(ints(&delta_qexp(1)), alloc::vec![BigInt::zero(), BigInt::one()]);
    }

    #[test]
    fn delta_two_routes_agree() {
        let n = 200;
        let p = pentagonal(n - 1);
        assert_eq!(p, euler_product(n - 1));
        let mut naive = alloc::vec![BigInt::zero(); n];
        naive[0] = BigInt::one();
        for _ in 0..24 {
            naive = mul_integers(&naive, &p, n - 1);
        }
        let d = ints(&delta_qexp(n));
        assert_eq!(d[0], BigInt::zero());
        assert_eq!(&d[1..], &naive[..]);
    }

    #[test]
    fn eisenstein_examples() {
        let e8 = eisenstein_qexp(8, 2).unwrap();
        assert_eq!(e8.coeff(0), &int(1));
        assert_eq!(e8.coeff(1), &int(480));
        assert_eq!(e8.coeff(2), &int(61920));
        assert_eq!(eisenstein_qexp(4, 3).unwrap().coeff(1), &int(240));
        assert_eq!(eisenstein_qexp(12, 1).unwrap().coeff(1), &rat(65520, 691));
        assert!(eisenstein_qexp(7, 3).is_err());
        assert!(eisenstein_qexp(2, 3).is_err());
    }

    #[test]
    fn delta_from_eisenstein() {
        // 1728 Δ = E_4³ - E_6²
        let n = 40;
        let e4 = eisenstein_qexp(4, n).unwrap();
        let e6 = eisenstein_qexp(6, n).unwrap();
        let lhs = &(&(&e4 * &e4) * &e4) - &(&e6 * &e6);
        assert_eq!(lhs, delta_qexp(n).scale(&int(1728)));
    }

    #[test]
    fn g2p_examples() {
        let g = g2p_qexp(2, 6).unwrap();
        let want = [rat(1, 24), int(1), int(1), int(4), int(1), int(6), int(4)];
        assert_eq!(g.coeffs(), &want);
        assert_eq!(g2p_qexp(5, 1).unwrap().coeff(0), &rat(1, 6));
        assert_eq!(g2p_qexp(4, 1), Err(Error::NotPrime(4)));
    }

    #[test]
    fn g20_examples() {
        let g = g20_qexp(7);
        assert_eq!(g.coeff(1), &int(1));
        assert_eq!(g.coeff(2), &int(456));
        assert_eq!(g.coeff(7), &int(-16917544));
    }

    #[test]
    fn hecke_eigenforms() {
        let delta = delta_qexp(160);
        let t = hecke_tp(&delta, 2, 12).unwrap();
        assert_eq!(t.precision(), 80);
        assert_eq!(t.coeff(1), &int(-24));
        assert_eq!(t.coeff(2), &int(576));
        assert_eq!(t, delta.truncate(80).scale(&int(-24)));

        let g = g20_qexp(160);
        let t = hecke_tp(&g, 2, 20).unwrap();
        assert_eq!(t.coeff(1), &int(456));
        assert_eq!(t, g.truncate(80).scale(&int(456)));

        let t3 = hecke_tp(&delta, 3, 12).unwrap();
        assert_eq!(t3, delta.truncate(53).scale(&int(252)));
    }

    #[test]
    fn hecke_needs_precision() {
        assert_eq!(
            hecke_tp(&delta_qexp(1), 2, 12),
            Err(Error::InsufficientPrecision { needed: 2, available: 1 })
        );
    }

    fn gcd(a: usize, b: usize) -> usize {
        if b == 0 { a } else { gcd(b, a % b) }
    }

    #[test]
    fn multiplicative() {
        let n = 200;
        let tau = ints(&delta_qexp(n));
        let b = ints(&g20_qexp(n));
        for m in 2..=n {
            for k in 2..=n / m {
                if gcd(m, k) == 1 {
                    assert_eq!(&tau[m] * &tau[k], tau[m * k]);
                    assert_eq!(&b[m] * &b[k], b[m * k]);
                }
            }
        }
    }

    #[test]
    fn hecke_recursion_at_prime_powers() {
        let tau = ints(&delta_qexp(3125));
        let b = ints(&g20_qexp(3125));
        for p in [2usize, 3, 5] {
            let mut pk = p;
            for _ in 1..=4 {
                if pk * p > 3125 {
                    break;
                }
                let prev = if pk == p { BigInt::one() } else { tau[pk / p].clone() };
                let lhs = &tau[pk * p];
                let rhs = &tau[p] * &tau[pk] - BigInt::from(p).pow(11) * &prev;
                assert_eq!(lhs, &rhs, "tau p={p} pk={pk}");
                let prev = if pk == p { BigInt::one() } else { b[pk / p].clone() };
                let rhs = &b[p] * &b[pk] - BigInt::from(p).pow(19) * &prev;
                assert_eq!(&b[pk * p], &rhs, "b p={p} pk={pk}");
                pk *= p;
            }
        }
    }
}
