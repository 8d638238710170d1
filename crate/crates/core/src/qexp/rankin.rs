use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::forms::{delta_qexp, g20_qexp};
use super::series::mul_integers;
use crate::{Error, Result};

/// Dirichlet coefficients `A(1), …, A(N)` of `L(s, Δ⊗g20)`:
/// `A(n) = Σ_{d²|n} d^30 τ(n/d²) b(n/d²)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RankinCoeffs {
    values: Vec<BigInt>,
}

impl RankinCoeffs {
    pub fn precision(&self) -> usize {
        self.values.len()
    }

    /// `A(n)` for `1 ≤ n ≤ N`.
    pub fn get(&self, n: usize) -> Option<&BigInt> {
        n.checked_sub(1).and_then(|i| self.values.get(i))
    }

    /// `[A(1), …, A(N)]`.
    pub fn values(&self) -> &[BigInt] {
        &self.values
    }
}

pub fn rankin_coeffs(n: usize) -> RankinCoeffs {
    assert!(n >= 1, "precision must be positive");
    let tau = delta_qexp(n).integer_coeffs().expect("integral");
    let b = g20_qexp(n).integer_coeffs().expect("integral");
    let values = (1..=n)
        .map(|m| {
            let mut acc = BigInt::zero();
            let mut d = 1usize;
            while d * d <= m {
                if m % (d * d) == 0 {
                    let k = m / (d * d);
                    acc += BigInt::from(d).pow(30) * &tau[k] * &b[k];
                }
                d += 1;
            }
            acc
        })
        .collect();
    RankinCoeffs { values }
}

/// Coefficients of `1 / (1 - c_1 X + c_2 X^2 - …)` up to `X^order`, where
/// `den` lists `1, -c_1, c_2, …` with the signs already applied.
fn invert_unit(den: &[BigInt], order: usize) -> Vec<BigInt> {
    let mut inv = alloc::vec![BigInt::zero(); order + 1];
    inv[0] = BigInt::one();
    for n in 1..=order {
        let mut acc = BigInt::zero();
        for (j, d) in den.iter().enumerate().skip(1).take(n) {
            acc -= d * &inv[n - j];
        }
        inv[n] = acc;
    }
    inv
}

/// Compares `Σ_k a_k b_k X^k` with the degree-4 local factor built from the
/// symmetric functions `a_1 = α+α'`, `αα' = p^{k1-1}`, `b_1 = β+β'`,
/// `ββ' = p^{k2-1}`:
///
/// ```text
/// (1 - αα'ββ' X²) / ((1-αβX)(1-αβ'X)(1-α'βX)(1-α'β'X))
/// ```
///
/// `a[k]` and `b[k]` hold the coefficients at `p^k` for `k = 0..=max(order, 1)`.
pub fn lemma1_check_with(p: u64, weights: (u32, u32), a: &[BigInt], b: &[BigInt], order: usize) -> Result<bool> {
    let needed = order.max(1);
    if a.len() <= needed || b.len() <= needed {
        let available = a.len().min(b.len()).saturating_sub(1);
        return Err(Error::InsufficientPrecision { needed, available });
    }
    let pa = BigInt::from(p).pow(weights.0 - 1);
    let pb = BigInt::from(p).pow(weights.1 - 1);
    let (sa, sb) = (&a[1], &b[1]);
    let e1 = sa * sb;
    let e2 = &pb * sa * sa + &pa * sb * sb - BigInt::from(2) * &pa * &pb;
    let e3 = &pa * &pb * sa * sb;
    let e4 = &pa * &pa * &pb * &pb;
    let den = [BigInt::one(), -e1, e2, -e3, e4];
    let num = [BigInt::one(), BigInt::zero(), -(&pa * &pb)];
    let rhs = mul_integers(&num, &invert_unit(&den, order), order);
    Ok((0..=order).all(|k| &a[k] * &b[k] == rhs[k]))
}

/// Largest q-expansion precision used to read `τ(p^k)` and `b(p^k)` directly;
/// higher prime powers come from the Hecke recursion at `p`.
const LOCAL_PRECISION: usize = 256;

fn prime_power_coeffs(series: &[BigInt], p: u64, weight: u32, order: usize) -> Vec<BigInt> {
    let pw = BigInt::from(p).pow(weight - 1);
    let mut out: Vec<BigInt> = alloc::vec![BigInt::one()];
    let mut pk = 1usize;
    for k in 1..=order {
        pk = pk.saturating_mul(p as usize);
        let v = if pk < series.len() {
            series[pk].clone()
        } else {
            &out[1] * &out[k - 1] - &pw * &out[k - 2]
        };
        out.push(v);
    }
    out
}

/// Local Euler-factor check for `Δ` and `g20` at `p ∈ {2, 3, 5, 7}`, `order ≤ 10`.
pub fn lemma1_local_check(p: u64, order: usize) -> Result<bool> {
    if ![2, 3, 5, 7].contains(&p) {
        return Err(Error::OutOfRange { what: "local check prime", value: p as i64, range: "{2, 3, 5, 7}" });
    }
    if order > 10 {
        return Err(Error::OutOfRange { what: "local check order", value: order as i64, range: "0..=10" });
    }
    let tau = delta_qexp(LOCAL_PRECISION).integer_coeffs().expect("integral");
    let b = g20_qexp(LOCAL_PRECISION).integer_coeffs().expect("integral");
    let a = prime_power_coeffs(&tau, p, 12, order.max(1));
    let bb = prime_power_coeffs(&b, p, 20, order.max(1));
    lemma1_check_with(p, (12, 20), &a, &bb, order)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gcd(a: usize, b: usize) -> usize {
        if b == 0 { a } else { gcd(b, a % b) }
    }

    #[test]
    fn table_values() {
        let a = rankin_coeffs(15);
        let want: [i128; 15] = [
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
        for (n, w) in want.iter().enumerate() {
            assert_eq!(a.get(n + 1).unwrap(), &BigInt::from(*w), "A({})", n + 1);
        }
        assert!(a.get(0).is_none());
        assert!(a.get(16).is_none());
    }

    #[test]
    fn multiplicative_on_coprime_pairs() {
        let a = rankin_coeffs(200);
        for m in 2..=200 {
            for k in 2..=200 / m {
                if gcd(m, k) == 1 {
                    assert_eq!(a.get(m).unwrap() * a.get(k).unwrap(), *a.get(m * k).unwrap());
                }
            }
        }
    }

    #[test]
    fn local_factor_identity_holds() {
        for p in [2, 3, 5, 7] {
            assert!(lemma1_local_check(p, 8).unwrap(), "p={p}");
        }
        assert!(lemma1_local_check(2, 0).unwrap());
        assert!(lemma1_local_check(3, 10).unwrap());
        assert!(lemma1_local_check(11, 2).is_err());
        assert!(lemma1_local_check(2, 11).is_err());
    }

    #[test]
    fn local_factor_check_detects_a_wrong_coefficient() {
        let tau = delta_qexp(64).integer_coeffs().unwrap();
        let b = g20_qexp(64).integer_coeffs().unwrap();
        let a: Vec<BigInt> = [1usize, 2, 4, 8, 16, 32].iter().map(|&n| tau[n].clone()).collect();
        let mut bb: Vec<BigInt> = [1usize, 2, 4, 8, 16, 32].iter().map(|&n| b[n].clone()).collect();
        assert!(lemma1_check_with(2, (12, 20), &a, &bb, 5).unwrap());
        bb[4] += 1;
        assert!(!lemma1_check_with(2, (12, 20), &a, &bb, 5).unwrap());
        assert!(lemma1_check_with(2, (12, 20), &a, &bb, 6).is_err());
    }

    #[test]
    fn a_is_the_euler_product_coefficient() {
        // A(p^k) from the definition equals the local factor's X^k coefficient
        // times ζ's factor 1/(1 - p^{30} X²).
        let a = rankin_coeffs(64);
        let tau = delta_qexp(64).integer_coeffs().unwrap();
        let b = g20_qexp(64).integer_coeffs().unwrap();
        let ta: Vec<BigInt> = [1usize, 2, 4, 8, 16, 32, 64].iter().map(|&n| tau[n].clone()).collect();
        let tb: Vec<BigInt> = [1usize, 2, 4, 8, 16, 32, 64].iter().map(|&n| b[n].clone()).collect();
        let conv: Vec<BigInt> = ta.iter().zip(&tb).map(|(x, y)| x * y).collect();
        let mut zeta2 = alloc::vec![BigInt::zero(); 7];
        for k in (0..7).step_by(2) {
            zeta2[k] = BigInt::from(2).pow(15 * k as u32);
        }
        let prod = mul_integers(&conv, &zeta2, 6);
        for (k, n) in [1usize, 2, 4, 8, 16, 32, 64].iter().enumerate() {
            assert_eq!(&prod[k], a.get(*n).unwrap());
        }
    }
}
