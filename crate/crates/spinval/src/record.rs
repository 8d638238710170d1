//! Row types shared by every output format.

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};
use spinval_core::exact::Rational;

/// One exact value `numerator/denominator · π^pi_exponent`, with its
/// numerical rendering.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OutputRecord {
    pub s: i64,
    /// Which coefficient of the row, for tables with more than one per `s`.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub coefficient: Option<String>,
    pub numerator: String,
    pub denominator: String,
    pub factored: String,
    pub pi_exponent: i64,
    pub numeric: String,
}

impl OutputRecord {
    pub fn new(s: i64, coefficient: Option<&str>, q: &Rational, pi_exponent: i64, numeric: String) -> Self {
        Self {
            s,
            coefficient: coefficient.map(str::to_owned),
            numerator: q.numer().to_string(),
            denominator: q.denom().to_string(),
            factored: factored(q),
            pi_exponent,
            numeric,
        }
    }
}

/// Trial division by primes below this bound; any cofactor is printed whole.
const TRIAL_LIMIT: u64 = 100_000;

/// `[(p, e)]` in increasing `p`; a cofactor with no prime factor below the
/// trial bound appears once with exponent 1.
pub fn factor(n: &BigUint) -> Vec<(BigUint, u32)> {
    let mut n = n.clone();
    let mut out = Vec::new();
    let mut p = 2u64;
    while p < TRIAL_LIMIT && !n.is_one() {
        let bp = BigUint::from(p);
        if &bp * &bp > n {
            break;
        }
        let mut e = 0;
        loop {
            let (q, r) = n.div_rem(&bp);
            if !r.is_zero() {
                break;
            }
            n = q;
            e += 1;
        }
        if e > 0 {
            out.push((bp, e));
        }
        p += if p == 2 { 1 } else { 2 };
    }
    if !n.is_one() {
        out.push((n, 1));
    }
    out
}

fn product(n: &BigUint) -> String {
    let parts: Vec<String> = factor(n)
        .into_iter()
        .map(|(p, e)| if e == 1 { p.to_string() } else { format!("{p}^{e}") })
        .collect();
    if parts.is_empty() {
        "1".to_owned()
    } else {
        parts.join("*")
    }
}

/// Prime-power form such as `-2^35/(3^18*5^6*7^5*11*13*17)`.
pub fn factored(q: &Rational) -> String {
    if q.is_zero() {
        return "0".to_owned();
    }
    let sign = if q.is_negative() { "-" } else { "" };
    let num = product(q.numer().magnitude());
    if q.denom().is_one() {
        return format!("{sign}{num}");
    }
    let den = product(q.denom().magnitude());
    if den.contains('*') {
        format!("{sign}{num}/({den})")
    } else {
        format!("{sign}{num}/{den}")
    }
}

/// Inverse of [`factored`].
pub fn parse_factored(text: &str) -> Option<Rational> {
    let (sign, body) = match text.strip_prefix('-') {
        Some(rest) => (-1, rest),
        None => (1, text),
    };
    let (num, den) = match body.split_once('/') {
        Some((n, d)) => (n, d.trim_start_matches('(').trim_end_matches(')')),
        None => (body, "1"),
    };
    let prod = |part: &str| -> Option<BigInt> {
        part.split('*').try_fold(BigInt::one(), |acc, f| {
            let (p, e) = f.split_once('^').unwrap_or((f, "1"));
            let p: BigInt = p.parse().ok()?;
            let e: u32 = e.parse().ok()?;
            Some(acc * num_traits::pow(p, e.to_usize()?))
        })
    };
    let n = prod(num)?;
    let d = prod(den)?;
    if d.is_zero() {
        return None;
    }
    Some(Rational::new(n * sign, d))
}

#[cfg(test)]
mod tests {
    use super::*;
    use spinval_core::exact::rat;

    #[test]
    fn prime_power_forms() {
        assert_eq!(factored(&rat(4096, 81)), "2^12/3^4");
        assert_eq!(factored(&rat(-1, 1440)), "-1/(2^5*3^2*5)");
        assert_eq!(factored(&rat(17, 518400)), "17/(2^8*3^4*5^2)");
        assert_eq!(factored(&rat(7, 1)), "7");
        assert_eq!(factored(&rat(0, 3)), "0");
    }

    #[test]
    fn round_trip() {
        for q in [rat(4096, 81), rat(-1, 1440), rat(1, 1), rat(-17179869184, 3)] {
            assert_eq!(parse_factored(&factored(&q)), Some(q));
        }
        let big = Rational::new(BigInt::from(1_000_003u64) * BigInt::from(1_000_033u64), BigInt::from(2));
        assert_eq!(parse_factored(&factored(&big)), Some(big));
    }
}
