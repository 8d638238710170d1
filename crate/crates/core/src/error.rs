use thiserror::Error;

pub type Result<T> = core::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{what} = {value} is outside the supported range {range}")]
    OutOfRange {
        what: &'static str,
        value: i64,
        range: &'static str,
    },
    #[error("zeta({0}) has no closed form as a rational multiple of a power of pi")]
    NoClosedForm(i64),
    #[error("limit diverges: {0}")]
    Divergent(&'static str),
    #[error("expected a single pi-monomial, found {0} terms")]
    NotMonomial(usize),
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("q-expansion precision {available} is too small, {needed} required")]
    InsufficientPrecision { needed: usize, available: usize },
    #[error("{given} coefficients cannot reach 10^-{digits}; at least {needed} are required")]
    TooFewCoefficients {
        given: usize,
        needed: usize,
        digits: u32,
    },
    #[error("quadrature did not converge ({0})")]
    QuadratureNonConvergence(&'static str),
    #[error("argument outside the numerically supported domain: {0}")]
    Domain(&'static str),
    #[error("working precision of {0} digits is below the minimum of 15")]
    PrecisionTooLow(u32),
    #[error("no Rankin norm formula for weight {k} with r = {r}")]
    InvalidNormPair { k: u32, r: u32 },
    #[error("arithmetic produced NaN in {0}")]
    NotANumber(&'static str),
}
