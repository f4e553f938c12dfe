//! Exact arithmetic over the Laurent ring in `q^(1/2)`, `l^(1/2)` and its
//! field of fractions, plus truncated series expansion around `q = 1`.

mod gcd;
mod laurent;
mod ratfn;
mod series;
mod zbasis;

use thiserror::Error;

/// Arbitrary-precision rational number, always reduced, denominator positive.
pub type Rat = num_rational::BigRational;

pub use laurent::LaurentQL;
pub use ratfn::RatFn;
pub use series::{expand_y, YSeries};
pub use zbasis::{from_z_coeffs, rewrite_in_z, z_poly};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RingError {
    #[error("zero denominator")]
    ZeroDenominator,
    #[error("denominator series vanishes to the requested order")]
    EssentialSingularity,
    #[error("polynomial is not expressible in z = q - 2 + 1/q")]
    NotZExpressible,
}

pub(crate) fn rat_int(n: i64) -> Rat {
    Rat::from_integer(n.into())
}
