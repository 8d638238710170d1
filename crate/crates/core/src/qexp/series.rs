use alloc::vec::Vec;
use core::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::exact::Rational;

/// `Σ_{n≤N} c_n q^n` with an explicit precision `N`; `O(q^{N+1})` is dropped.
///
/// Arithmetic between two series keeps the smaller precision.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QSeries {
    coeffs: Vec<Rational>,
}

impl QSeries {
    /// Series with coefficients `c_0, …, c_N`. Panics on an empty list.
    pub fn new(coeffs: Vec<Rational>) -> Self {
        assert!(!coeffs.is_empty(), "a q-series needs at least c_0");
        Self { coeffs }
    }

    pub fn from_integers<I: IntoIterator<Item = BigInt>>(coeffs: I) -> Self {
        Self::new(coeffs.into_iter().map(Rational::from_integer).collect())
    }

    pub fn zero(precision: usize) -> Self {
        Self::new(alloc::vec![Rational::zero(); precision + 1])
    }

    pub fn precision(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// `c_n`, or `None` beyond the precision.
    pub fn get(&self, n: usize) -> Option<&Rational> {
        self.coeffs.get(n)
    }

    /// `c_n`; panics beyond the precision.
    pub fn coeff(&self, n: usize) -> &Rational {
        &self.coeffs[n]
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn truncate(&self, precision: usize) -> Self {
        let n = precision.min(self.precision());
        Self::new(self.coeffs[..=n].to_vec())
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Self::new(self.coeffs.iter().map(|x| x * c).collect())
    }

    /// Integer coefficients, if every coefficient is integral.
    pub fn integer_coeffs(&self) -> Option<Vec<BigInt>> {
        self.coeffs.iter().map(|c| c.is_integer().then(|| c.to_integer())).collect()
    }
}

/// Product of integer power series truncated at index `n`.
pub(crate) fn mul_integers(a: &[BigInt], b: &[BigInt], n: usize) -> Vec<BigInt> {
    let mut out = alloc::vec![BigInt::zero(); n + 1];
    for (i, x) in a.iter().enumerate().take(n + 1) {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate().take(n + 1 - i) {
            out[i + j] += x * y;
        }
    }
    out
}

/// `a^e` truncated at index `n`, by repeated squaring.
pub(crate) fn pow_integers(a: &[BigInt], mut e: u32, n: usize) -> Vec<BigInt> {
    let mut result = alloc::vec![BigInt::zero(); n + 1];
    result[0] = BigInt::one();
    let mut base = a[..=n.min(a.len() - 1)].to_vec();
    while e > 0 {
        if e & 1 == 1 {
            result = mul_integers(&result, &base, n);
        }
        e >>= 1;
        if e > 0 {
            base = mul_integers(&base, &base, n);
        }
    }
    result
}

impl Add for &QSeries {
    type Output = QSeries;
    fn add(self, rhs: &QSeries) -> QSeries {
        let n = self.precision().min(rhs.precision());
        QSeries::new((0..=n).map(|i| &self.coeffs[i] + &rhs.coeffs[i]).collect())
    }
}

impl Sub for &QSeries {
    type Output = QSeries;
    fn sub(self, rhs: &QSeries) -> QSeries {
        let n = self.precision().min(rhs.precision());
        QSeries::new((0..=n).map(|i| &self.coeffs[i] - &rhs.coeffs[i]).collect())
    }
}

impl Neg for &QSeries {
    type Output = QSeries;
    fn neg(self) -> QSeries {
        QSeries::new(self.coeffs.iter().map(|c| -c).collect())
    }
}

impl Mul for &QSeries {
    type Output = QSeries;
    fn mul(self, rhs: &QSeries) -> QSeries {
        let n = self.precision().min(rhs.precision());
        if let (Some(a), Some(b)) = (self.integer_coeffs(), rhs.integer_coeffs()) {
            return QSeries::from_integers(mul_integers(&a, &b, n));
        }
        let mut out = alloc::vec![Rational::zero(); n + 1];
        for i in 0..=n {
            if self.coeffs[i].is_zero() {
                continue;
            }
            for j in 0..=n - i {
                out[i + j] += &self.coeffs[i] * &rhs.coeffs[j];
            }
        }
        QSeries::new(out)
    }
}
