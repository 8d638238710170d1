use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::rational::{binomial, Rational};

/// Memoized Bernoulli numbers `B_0..B_n`, with `B_1 = -1/2`.
///
/// Built from `Σ_{k=0}^{n} C(n+1, k) B_k = 0`. The table only grows; a caller
/// that needs many values should hold on to one instance.
#[derive(Debug, Clone)]
pub struct BernoulliTable {
    values: Vec<Rational>,
}

impl Default for BernoulliTable {
    fn default() -> Self {
        Self::new()
    }
}

impl BernoulliTable {
    pub fn new() -> Self {
        Self {
            values: alloc::vec![Rational::one()],
        }
    }

    pub fn get(&mut self, n: usize) -> Rational {
        while self.values.len() <= n {
            let m = self.values.len();
            if m > 1 && m % 2 == 1 {
                self.values.push(Rational::zero());
                continue;
            }
            let sum = self
                .values
                .iter()
                .enumerate()
                .fold(Rational::zero(), |acc, (k, b)| {
                    acc + b * Rational::from_integer(binomial(m as u64 + 1, k as u64))
                });
            self.values
                .push(-sum / Rational::from_integer(BigInt::from(m + 1)));
        }
        self.values[n].clone()
    }
}

pub fn bernoulli(n: usize) -> Rational {
    BernoulliTable::new().get(n)
}
