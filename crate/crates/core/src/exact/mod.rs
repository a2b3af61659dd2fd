//! Exact rational linear algebra and polynomial types.

mod bipoly;
mod matrix;
mod mpoly;
mod subspace;

pub use bipoly::BivariatePoly;
pub use matrix::Matrix;
pub use mpoly::MultivariatePoly;
pub use subspace::Subspace;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

/// Arbitrary-precision rational, always in lowest terms with positive denominator.
pub type Rational = BigRational;

pub fn q(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn qf(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

pub fn zero() -> Rational {
    Rational::zero()
}

pub fn one() -> Rational {
    Rational::one()
}

/// Canonical text form: `p` for integers, `p/q` otherwise.
pub fn fmt_rational(r: &Rational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Returns the integer value if `r` is integral.
pub fn to_i64(r: &Rational) -> Option<i64> {
    use num_traits::ToPrimitive;
    if r.denom().is_one() {
        r.numer().to_i64()
    } else {
        None
    }
}

pub fn factorial(n: u32) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, k| acc * BigInt::from(k))
}
